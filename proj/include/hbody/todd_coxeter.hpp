#ifndef HBODY_TODD_COXETER_HPP_
#define HBODY_TODD_COXETER_HPP_

#include <cstddef>
#include <string>

#include "hbody/group.hpp"

namespace hbody {

  struct CosetOptions {
    //! Maximum number of live cosets before giving up.
    std::size_t coset_cap = 50'000;
  };

  //! Enumerates the cosets of the trivial subgroup (HLT strategy, with a
  //! lookahead pass when the table fills up) and returns the group as its
  //! regular permutation representation on the cosets.
  //!
  //! Throws CapExceeded if the cap is reached even after lookahead; the
  //! presentation may define a larger or an infinite group.
  FiniteGroup coset_enumerate(Presentation const& p,
                              std::string         name,
                              CosetOptions const& opts = {});

}  // namespace hbody

#endif  // HBODY_TODD_COXETER_HPP_
