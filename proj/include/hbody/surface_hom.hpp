// Epimorphisms from the genus-2 surface group onto finite groups, the
// witness search over an orbit set, and the pair counts of the examples.

#ifndef HBODY_SURFACE_HOM_HPP_
#define HBODY_SURFACE_HOM_HPP_

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hbody/automorphism.hpp"
#include "hbody/error.hpp"
#include "hbody/group.hpp"
#include "hbody/orbit.hpp"

namespace hbody {

  using GroupPtr = std::shared_ptr<FiniteGroup const>;

  class InvalidEpimorphism : public InvalidArgument {
   public:
    enum class Kind { relation_violated, not_generating };

    InvalidEpimorphism(Kind kind, std::string const& msg)
        : InvalidArgument(msg), _kind(kind) {}

    [[nodiscard]] Kind kind() const noexcept {
      return _kind;
    }

   private:
    Kind _kind;
  };

  //! theta: x1, y1, x2, y2 -> a, b, c, d with [a,b][c,d] = 1 and
  //! <a,b,c,d> = G. Immutable once built.
  class Epimorphism {
   public:
    //! Validates; throws InvalidEpimorphism.
    Epimorphism(GroupPtr group, std::array<Element, 4> images);

    [[nodiscard]] FiniteGroup const& group() const noexcept {
      return *_group;
    }
    [[nodiscard]] GroupPtr const& group_ptr() const noexcept {
      return _group;
    }
    [[nodiscard]] std::array<Element, 4> const& images() const noexcept {
      return _images;
    }
    //! Genus of the covering surface, 1 + |G|.
    [[nodiscard]] std::size_t genus() const noexcept {
      return 1 + _group->order();
    }

    //! Throws InvalidArgument unless `w` has rank 4.
    [[nodiscard]] Element evaluate(Word const& w) const;
    [[nodiscard]] bool    kills(Word const& w) const {
      return evaluate(w) == FiniteGroup::identity();
    }

    bool operator==(Epimorphism const& that) const {
      return _group == that._group && _images == that._images;
    }

   private:
    GroupPtr               _group;
    std::array<Element, 4> _images;
  };

  Epimorphism make_epimorphism(GroupPtr g, Element a, Element b, Element c, Element d);

  //! Images given as words over the group's generator names.
  Epimorphism make_epimorphism(GroupPtr g, std::array<std::string, 4> const& words);

  ////////////////////////////////////////////////////////////////////////
  // Witnesses
  ////////////////////////////////////////////////////////////////////////

  //! Elements checked by quick_witness, with (u, v, r, t) = (a, b, c, d).
  enum class QuickKind { commutator_uv, ur, uv, uv_inv, ut_inv, rt, rt_inv, rv_inv, tv };

  std::string to_string(QuickKind k);

  //! The first of [u,v], ur, uv, uv^-1, ut^-1, rt, rt^-1, rv^-1, tv that
  //! is trivial, if any.
  std::optional<QuickKind> quick_witness(Epimorphism const& theta);

  struct WitnessReport {
    Word                      witness;
    std::vector<std::uint8_t> path;
    //! Position of the witness in the scan order of the orbit set.
    std::size_t index = 0;
    //! theta(witness); always the identity.
    Element image = 0;

    [[nodiscard]] std::string path_label() const {
      return hbody::path_label(path);
    }
  };

  struct Verdict {
    enum class Kind { extends_to_handlebody, no_witness_in_searched_set, immediate_witness };

    Kind                         kind = Kind::no_witness_in_searched_set;
    std::optional<WitnessReport> witness;
    std::optional<QuickKind>     immediate;
    //! Depth of the searched set; a negative verdict covers only it.
    std::size_t searched_depth = 0;
  };

  //! Scans `s` in its entry order (bases, then by depth) for a word in
  //! ker(theta). With `try_quick`, quick_witness is consulted first.
  Verdict handlebody_witness(Epimorphism const& theta,
                             OrbitSet const&    s,
                             bool               try_quick = false);

  //! Orbit words flattened for repeated evaluation.
  class CompiledOrbit {
   public:
    explicit CompiledOrbit(OrbitSet const& s);

    [[nodiscard]] std::size_t size() const noexcept {
      return _offsets.size() - 1;
    }
    //! Index of the first word killed by the images, or nullopt.
    [[nodiscard]] std::optional<std::size_t> first_kernel_word(
        FiniteGroup const& g, std::array<Element, 4> const& images) const;

   private:
    std::vector<std::uint8_t> _columns;  // 2 * gen + inverse
    std::vector<std::size_t>  _offsets;
  };

  //! First witness index for each epimorphism (nullopt where none).
  std::vector<std::optional<std::size_t>> batch_witnesses(
      std::span<Epimorphism const> thetas, OrbitSet const& s);

  ////////////////////////////////////////////////////////////////////////
  // Semidirect family
  ////////////////////////////////////////////////////////////////////////

  //! theta = (a, b, b^-1, b a^-1) on semidirect_pq(p, q, r).
  Epimorphism example1_epimorphism(long p, long q, long r);

  //! sigma5(sigma4(sigma3([x1, y1]))).
  Word const& r3_criterion_word();

  struct Table1Row {
    long        p, q, r;
    char const* word;
  };

  //! The fourteen published (p, q, r) tuples with a kernel word each.
  std::span<Table1Row const> table1_rows();

  ////////////////////////////////////////////////////////////////////////
  // Counting
  ////////////////////////////////////////////////////////////////////////

  //! A generating quadruple with [s1,s2] = 1 = [s3,s4], or nullopt once
  //! the search is exhausted. Throws CapExceeded after `closure_cap`
  //! subgroup closures.
  std::optional<std::array<Element, 4>> quadruple_search(FiniteGroup const& g,
                                                         std::size_t closure_cap = 10'000'000);

  //! |{(u, v) : [u, v] != 1}|.
  std::size_t noncommuting_pair_count(FiniteGroup const& g);

  //! Every (u, v) with [u, v] != 1, in element order.
  std::vector<ElementPair> noncommuting_pairs(FiniteGroup const& g);

  //! Ordered pairs (r, t) with [a,b][r,t] = 1 and <a,b,r,t> = G, in
  //! element order. With `filter_quick`, pairs for which quick_witness
  //! fires on (a, b, r, t) are dropped.
  std::vector<ElementPair> partner_pairs(FiniteGroup const& g,
                                         Element            a,
                                         Element            b,
                                         bool               filter_quick);

  namespace reference {
    std::vector<ElementPair> partner_pairs(FiniteGroup const& g,
                                           Element            a,
                                           Element            b,
                                           bool               filter_quick);
    std::vector<std::optional<std::size_t>> batch_witnesses(
        std::span<Epimorphism const> thetas, OrbitSet const& s);
  }  // namespace reference

}  // namespace hbody

#endif  // HBODY_SURFACE_HOM_HPP_
