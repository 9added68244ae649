// Dehn-twist substitutions of the rank-4 free group on x1, y1, x2, y2.

#ifndef HBODY_TWIST_HPP_
#define HBODY_TWIST_HPP_

#include <array>
#include <cstddef>
#include <string>

#include "hbody/word.hpp"

namespace hbody {

  //! An endomorphism of the rank-4 free group, stored as the images of
  //! (x1, y1, x2, y2). The label records how it was composed, in the
  //! notation "s5*s4*s3" (rightmost applied first); the identity has an
  //! empty label.
  struct TwistAuto {
    std::array<Word, 4> images;
    std::string         label;

    bool operator==(TwistAuto const& that) const {
      return images == that.images;
    }
  };

  //! The identity substitution.
  TwistAuto identity_twist();

  //! The j-th built-in twist, 1 <= j <= 10; sigma(5 + j) is the inverse of
  //! sigma(j).
  TwistAuto sigma(int j);

  //! Substitutes each letter of `w` by the corresponding image and reduces.
  Word apply(TwistAuto const& f, Word const& w);

  //! f after g: (f o g).images[i] = apply(f, g.images[i]).
  TwistAuto compose(TwistAuto const& f, TwistAuto const& g);

  //! Human-readable label; "id" for the identity.
  std::string label_of(TwistAuto const& f);

  //! The commutator [x1, y1] in the rank-4 free group.
  Word const& base_commutator();

}  // namespace hbody

#endif  // HBODY_TWIST_HPP_
