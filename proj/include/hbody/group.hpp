// Finite groups with explicit element arithmetic.
//
// A FiniteGroup is built from permutations generating it. Its elements are
// enumerated once and afterwards referred to by index (Element), with the
// identity at index 0 and a full Cayley table for products. Permutations
// compose left to right: (p * q)(x) = q(p(x)), so a right regular
// representation is a homomorphism.

#ifndef HBODY_GROUP_HPP_
#define HBODY_GROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hbody/word.hpp"

namespace hbody {

  using Element = std::uint32_t;

  class Permutation {
   public:
    Permutation() = default;
    explicit Permutation(std::vector<std::uint32_t> images);
    static Permutation identity(std::size_t degree);

    [[nodiscard]] std::size_t degree() const noexcept {
      return _images.size();
    }
    [[nodiscard]] std::uint32_t operator[](std::size_t x) const {
      return _images[x];
    }
    [[nodiscard]] std::vector<std::uint32_t> const& images() const noexcept {
      return _images;
    }

    //! Apply *this first, then `that`.
    Permutation operator*(Permutation const& that) const;
    [[nodiscard]] Permutation inverse() const;

    bool operator==(Permutation const&) const = default;

   private:
    std::vector<std::uint32_t> _images;
  };

  struct PermutationHash {
    std::size_t operator()(Permutation const& p) const noexcept;
  };

  //! A finite presentation; relators are words over gen_names.
  struct Presentation {
    GeneratorNames    gen_names;
    std::vector<Word> relators;

    [[nodiscard]] std::size_t gen_count() const noexcept {
      return gen_names.size();
    }
  };

  //! Parses each relator with the word grammar over `gen_names`.
  Presentation make_presentation(GeneratorNames               gen_names,
                                 std::vector<std::string> const& relators);

  struct GroupOptions {
    //! Largest group order the element enumeration will accept.
    std::size_t order_cap = 20'000;
  };

  class FiniteGroup {
   public:
    //! Enumerates the group generated by `gens`. Throws CapExceeded if the
    //! order exceeds `opts.order_cap`. When `presentation` is given, its
    //! relators are checked against the generators.
    static FiniteGroup from_permutations(std::string                     name,
                                         std::vector<Permutation>        gens,
                                         GeneratorNames                  gen_names,
                                         std::optional<Presentation> presentation = {},
                                         GroupOptions const& opts = {});

    [[nodiscard]] std::string const& name() const noexcept {
      return _name;
    }
    [[nodiscard]] std::size_t order() const noexcept {
      return _order;
    }
    [[nodiscard]] static constexpr Element identity() noexcept {
      return 0;
    }
    [[nodiscard]] Element mul(Element a, Element b) const noexcept {
      return _table[static_cast<std::size_t>(a) * _order + b];
    }
    [[nodiscard]] Element inv(Element a) const noexcept {
      return _inverse[a];
    }
    [[nodiscard]] Element pow(Element a, long k) const;
    //! a b a^-1 b^-1
    [[nodiscard]] Element commutator(Element a, Element b) const noexcept {
      return mul(mul(a, b), mul(_inverse[a], _inverse[b]));
    }
    [[nodiscard]] Element conjugate(Element g, Element a) const noexcept {
      return mul(mul(g, a), _inverse[g]);
    }

    [[nodiscard]] std::vector<Element> const& generators() const noexcept {
      return _generators;
    }
    [[nodiscard]] GeneratorNames const& generator_names() const noexcept {
      return _gen_names;
    }
    [[nodiscard]] std::optional<Presentation> const& presentation() const noexcept {
      return _presentation;
    }
    [[nodiscard]] Permutation const& permutation(Element a) const {
      return _perms[a];
    }

    //! Image of `w` under the homomorphism sending generator i to images[i].
    [[nodiscard]] Element evaluate(Word const& w,
                                   std::span<Element const> images) const;
    //! Image of `w` under generator i -> generators()[i].
    [[nodiscard]] Element evaluate(Word const& w) const {
      return evaluate(w, _generators);
    }

    //! A shortest word in the group generators reaching `a`, as the parent
    //! of `a` in the enumeration tree and the generator index used.
    [[nodiscard]] Element tree_parent(Element a) const noexcept {
      return _tree_parent[a];
    }
    [[nodiscard]] std::size_t tree_generator(Element a) const noexcept {
      return _tree_gen[a];
    }

   private:
    FiniteGroup() = default;

    std::string                 _name;
    std::size_t                 _order = 0;
    std::vector<Permutation>    _perms;
    std::vector<Element>        _table;
    std::vector<Element>        _inverse;
    std::vector<Element>        _generators;
    GeneratorNames              _gen_names;
    std::optional<Presentation> _presentation;
    std::vector<Element>        _tree_parent;
    std::vector<std::size_t>    _tree_gen;
  };

  //! A word in the group generators reaching `a` (positive letters only,
  //! from the enumeration tree).
  Word element_word(FiniteGroup const& g, Element a);

  //! element_word printed over the group's generator names.
  std::string element_text(FiniteGroup const& g, Element a);

  ////////////////////////////////////////////////////////////////////////
  // Constructors for the groups used in the examples
  ////////////////////////////////////////////////////////////////////////

  bool is_prime(long n);

  //! Z_n = <a | a^n>.
  FiniteGroup cyclic(std::size_t n);

  //! <a, b | a^p, b^q, b a b^-1 a^-r> for primes 3 <= q < p, 2 <= r < p and
  //! r^q = 1 mod p. Throws InvalidArgument naming the failed condition.
  FiniteGroup semidirect_pq(long p, long q, long r);

  //! <x, y | x^p, y^p, [x,y]^p, [x,[x,y]], [y,[x,y]]>, realised by upper
  //! unitriangular 3x3 matrices over F_p.
  FiniteGroup heisenberg(long p);

  //! Z_m x Z_n = <a, b | a^m, b^n, [a,b]>.
  FiniteGroup abelian2(std::size_t m, std::size_t n);

  //! Builds the group on the elements of a subgroup, generated by `gens`
  //! (elements of `g`), as its right regular representation.
  FiniteGroup subgroup_as_group(FiniteGroup const&          g,
                                std::vector<Element> const& gens,
                                std::string                 name);

  ////////////////////////////////////////////////////////////////////////
  // Structural queries (exhaustive scans; fine up to a few thousand)
  ////////////////////////////////////////////////////////////////////////

  //! A subgroup as a sorted element list plus a membership mask.
  struct Subgroup {
    std::vector<Element> elements;
    std::vector<bool>    member;

    [[nodiscard]] std::size_t size() const noexcept {
      return elements.size();
    }
    [[nodiscard]] bool contains(Element a) const {
      return member[a];
    }
  };

  //! The subgroup generated by `gens`. Throws CapExceeded if it grows past
  //! `cap` elements (0 means no cap).
  Subgroup subgroup_closure(FiniteGroup const&        g,
                            std::span<Element const>  gens,
                            std::size_t               cap = 0);
  Subgroup subgroup_closure(FiniteGroup const&          g,
                            std::initializer_list<Element> gens);

  std::size_t element_order(FiniteGroup const& g, Element a);
  bool        is_abelian(FiniteGroup const& g);
  bool        is_abelian(FiniteGroup const& g, Subgroup const& h);
  Subgroup    center(FiniteGroup const& g);
  Subgroup    centralizer(FiniteGroup const& g, Element a);
  Subgroup    derived_subgroup(FiniteGroup const& g);
  Subgroup    normal_closure(FiniteGroup const& g, std::span<Element const> gens);
  //! Class representative of each element, in element order.
  std::vector<Element> conjugacy_class_of(FiniteGroup const& g);
  std::size_t          conjugacy_class_count(FiniteGroup const& g);
  std::size_t          count_involutions(FiniteGroup const& g);
  //! Prime factorisation of the group order as (p, exponent) pairs.
  std::vector<std::pair<long, int>> order_factors(FiniteGroup const& g);

  //! A Sylow p-subgroup, by greedily adjoining p-elements while the
  //! generated subgroup stays a p-group. Returns the trivial subgroup when
  //! p does not divide the order.
  Subgroup sylow_subgroup(FiniteGroup const& g, long p);

}  // namespace hbody

#endif  // HBODY_GROUP_HPP_
