#ifndef HBODY_AUTOMORPHISM_HPP_
#define HBODY_AUTOMORPHISM_HPP_

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "hbody/group.hpp"

namespace hbody {

  //! An automorphism as the full element map; generator images are
  //! map[g.generators()[i]].
  struct Automorphism {
    std::vector<Element> map;

    [[nodiscard]] Element operator()(Element a) const {
      return map[a];
    }
    bool operator==(Automorphism const&) const = default;
  };

  struct AutomorphismOptions {
    //! Maximum number of search-tree nodes visited.
    std::size_t node_cap = 200'000'000;
    //! Full enumeration stops past this many automorphisms.
    std::size_t count_cap = 2'000'000;
  };

  //! Every automorphism of `g`, found by backtracking over images of the
  //! generators of `p` (which must match g.generators()). Generators are
  //! assigned in decreasing order of element order; candidates must have
  //! equal order, satisfy every relator whose generators are all assigned,
  //! and generate a subgroup of the same size as the originals do. Each
  //! surviving assignment is checked to extend to a bijective homomorphism.
  //!
  //! Throws CapExceeded past `opts.node_cap` nodes.
  std::vector<Automorphism> automorphisms(FiniteGroup const&         g,
                                          Presentation const&        p,
                                          AutomorphismOptions const& opts = {});

  //! Uses the presentation stored in `g`; throws InvalidArgument if none.
  std::vector<Automorphism> automorphisms(FiniteGroup const&         g,
                                          AutomorphismOptions const& opts = {});

  //! Aut(G) as a generating set built along the stabilizer chain of the
  //! group generators g_0, ..., g_{k-1}: level i holds automorphisms fixing
  //! g_0..g_{i-1}, and orbit_sizes[i] is the orbit of g_i under them.
  struct AutomorphismGroup {
    std::vector<Automorphism> generators;
    std::vector<std::size_t>  orbit_sizes;

    [[nodiscard]] unsigned long long order() const noexcept {
      unsigned long long n = 1;
      for (auto s : orbit_sizes) {
        n *= s;
      }
      return n;
    }
  };

  //! Finds one automorphism per new orbit point at each level, so only a
  //! handful are stored even when Aut(G) is large. Candidates are filtered
  //! by element order, centralizer size and membership in Z(G) and G'.
  AutomorphismGroup automorphism_group(FiniteGroup const&         g,
                                       Presentation const&        p,
                                       AutomorphismOptions const& opts = {});
  AutomorphismGroup automorphism_group(FiniteGroup const&         g,
                                       AutomorphismOptions const& opts = {});

  //! Extends generator images to the full element map, or returns an empty
  //! map if the images do not define a homomorphism.
  std::vector<Element> extend_to_map(FiniteGroup const&       g,
                                     std::span<Element const> images);

  using ElementPair = std::pair<Element, Element>;

  //! Orbits of the diagonal action phi . (g, h) = (phi(g), phi(h)) on
  //! `pairs`, where `auts` lists every element of the acting group. The
  //! pair list need not be closed under the action.
  std::size_t pair_orbit_count(FiniteGroup const&               g,
                               std::vector<Automorphism> const& auts,
                               std::span<ElementPair const>     pairs);

  //! Orbits of the group generated by `gens` on `pairs`: for each pair the
  //! least pair (in `pairs` order) of its orbit. Pairs outside the list
  //! are followed but not reported.
  std::vector<ElementPair> pair_orbit_representatives(FiniteGroup const&               g,
                                                      std::vector<Automorphism> const& gens,
                                                      std::span<ElementPair const>     pairs);

  //! The lexicographically least image of `pair` over `auts`.
  ElementPair canonical_pair(std::vector<Automorphism> const& auts,
                             ElementPair                      pair);

  namespace reference {
    //! Union-find over pairs, single-threaded.
    std::size_t pair_orbit_count(FiniteGroup const&               g,
                                 std::vector<Automorphism> const& auts,
                                 std::span<ElementPair const>     pairs);
  }  // namespace reference

}  // namespace hbody

#endif  // HBODY_AUTOMORPHISM_HPP_
