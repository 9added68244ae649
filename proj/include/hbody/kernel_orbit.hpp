// Orbits of a kernel under the twists, with kernels represented by
// epimorphism tuples modulo Aut(G).

#ifndef HBODY_KERNEL_ORBIT_HPP_
#define HBODY_KERNEL_ORBIT_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "hbody/automorphism.hpp"
#include "hbody/orbit.hpp"
#include "hbody/surface_hom.hpp"
#include "hbody/twist.hpp"

namespace hbody {

  using ImageTuple = std::array<Element, 4>;

  //! theta o f: images (theta(f(x1)), ..., theta(f(y2))).
  Epimorphism precompose(Epimorphism const& theta, TwistAuto const& f);

  //! Pointwise-least image of the tuple over `auts` (the tuple itself when
  //! `auts` is empty).
  ImageTuple canonical_tuple(ImageTuple const& t, std::vector<Automorphism> const& auts);

  //! ker(theta1) = ker(theta2): some automorphism maps one tuple onto the
  //! other.
  bool kernel_equal(Epimorphism const&               theta1,
                    Epimorphism const&               theta2,
                    std::vector<Automorphism> const& auts);

  struct KernelOrbitOptions {
    std::size_t class_cap = 500'000;
  };

  struct KernelOrbit {
    Epimorphism source;
    //! One representative per kernel class, in discovery order; the first
    //! is `source`.
    std::vector<Epimorphism> classes;
    std::vector<ImageTuple>  canonical;
    //! moves[i][j - 1]: class of precompose(classes[i], sigma(j)).
    std::vector<std::array<std::size_t, 10>> moves;

    [[nodiscard]] std::size_t r() const noexcept {
      return classes.size();
    }
  };

  //! Breadth-first closure of theta under precomposition by sigma1..sigma10,
  //! deduplicated by canonical tuple. Throws CapExceeded past
  //! `opts.class_cap` classes.
  KernelOrbit kernel_orbit(Epimorphism const&               theta,
                           std::vector<Automorphism> const& auts,
                           KernelOrbitOptions const&        opts = {});

  struct IntersectionResult {
    bool avoids = true;
    //! For each orbit word (scan order) a class whose representative does
    //! not kill it; nullopt for words in every kernel.
    std::vector<std::optional<std::size_t>> certificate;
    //! First word lying in every kernel, if any.
    std::optional<std::size_t> first_common;
  };

  //! Whether the intersection of the orbit's kernels misses every word of s.
  IntersectionResult intersection_avoids_c0(KernelOrbit const& orbit, OrbitSet const& s);

  //! Order of the subgroup of G^r generated by the diagonal images of the
  //! four generators, or nullopt past `cap` elements or once the stored
  //! tuples would exceed a fixed memory budget (16M entries).
  std::optional<std::size_t> fiber_group_order(KernelOrbit const& orbit, std::size_t cap);

  namespace reference {
    IntersectionResult intersection_avoids_c0(KernelOrbit const& orbit, OrbitSet const& s);
  }  // namespace reference

}  // namespace hbody

#endif  // HBODY_KERNEL_ORBIT_HPP_
