#include "hbody/group.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "hbody/error.hpp"

namespace hbody {

  ////////////////////////////////////////////////////////////////////////
  // Permutation
  ////////////////////////////////////////////////////////////////////////

  Permutation::Permutation(std::vector<std::uint32_t> images)
      : _images(std::move(images)) {
    std::vector<bool> seen(_images.size(), false);
    for (auto x : _images) {
      if (x >= _images.size() || seen[x]) {
        throw InvalidArgument("image list is not a permutation");
      }
      seen[x] = true;
    }
  }

  Permutation Permutation::identity(std::size_t degree) {
    std::vector<std::uint32_t> id(degree);
    std::iota(id.begin(), id.end(), 0);
    Permutation p;
    p._images = std::move(id);
    return p;
  }

  Permutation Permutation::operator*(Permutation const& that) const {
    if (degree() != that.degree()) {
      throw InvalidArgument("permutation degree mismatch");
    }
    Permutation r;
    r._images.resize(_images.size());
    for (std::size_t x = 0; x < _images.size(); ++x) {
      r._images[x] = that._images[_images[x]];
    }
    return r;
  }

  Permutation Permutation::inverse() const {
    Permutation r;
    r._images.resize(_images.size());
    for (std::size_t x = 0; x < _images.size(); ++x) {
      r._images[_images[x]] = static_cast<std::uint32_t>(x);
    }
    return r;
  }

  std::size_t PermutationHash::operator()(Permutation const& p) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto x : p.images()) {
      h ^= x;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }

  Presentation make_presentation(GeneratorNames                  gen_names,
                                 std::vector<std::string> const& relators) {
    Presentation p;
    p.gen_names = std::move(gen_names);
    for (auto const& text : relators) {
      Word w = parse_word(text, p.gen_names);
      if (w.empty()) {
        throw InvalidArgument("relator '" + text + "' reduces to the identity");
      }
      p.relators.push_back(std::move(w));
    }
    return p;
  }

  ////////////////////////////////////////////////////////////////////////
  // FiniteGroup
  ////////////////////////////////////////////////////////////////////////

  FiniteGroup FiniteGroup::from_permutations(std::string                 name,
                                             std::vector<Permutation>    gens,
                                             GeneratorNames              gen_names,
                                             std::optional<Presentation> presentation,
                                             GroupOptions const&         opts) {
    if (gen_names.size() != gens.size()) {
      throw InvalidArgument("need one name per generator");
    }
    std::size_t degree = gens.empty() ? 1 : gens.front().degree();
    for (auto const& p : gens) {
      if (p.degree() != degree) {
        throw InvalidArgument("generators have different degrees");
      }
    }

    FiniteGroup g;
    g._name      = std::move(name);
    g._gen_names = std::move(gen_names);
    std::size_t const k = gens.size();

    std::unordered_map<Permutation, Element, PermutationHash> index;
    std::vector<Element>                                      right;  // right[i*k+s]
    g._perms.push_back(Permutation::identity(degree));
    index.emplace(g._perms[0], 0);
    g._tree_parent.push_back(0);
    g._tree_gen.push_back(0);

    for (std::size_t i = 0; i < g._perms.size(); ++i) {
      for (std::size_t s = 0; s < k; ++s) {
        Permutation next = g._perms[i] * gens[s];
        auto [it, inserted]
            = index.try_emplace(std::move(next), static_cast<Element>(g._perms.size()));
        if (inserted) {
          if (g._perms.size() >= opts.order_cap) {
            throw CapExceeded("group order", opts.order_cap);
          }
          g._perms.push_back(it->first);
          g._tree_parent.push_back(static_cast<Element>(i));
          g._tree_gen.push_back(s);
        }
        right.push_back(it->second);
      }
    }
    std::size_t const n = g._perms.size();
    g._order            = n;

    // row i of the Cayley table, filled in enumeration order of j
    g._table.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      Element* row = g._table.data() + i * n;
      row[0]       = static_cast<Element>(i);
      for (std::size_t j = 1; j < n; ++j) {
        row[j] = right[row[g._tree_parent[j]] * k + g._tree_gen[j]];
      }
    }
    g._inverse.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      Element const* row = g._table.data() + i * n;
      g._inverse[i]
          = static_cast<Element>(std::find(row, row + n, Element(0)) - row);
    }
    for (auto const& p : gens) {
      g._generators.push_back(index.at(p));
    }

    if (presentation) {
      if (presentation->gen_count() != k) {
        throw InvalidArgument("presentation has "
                              + std::to_string(presentation->gen_count())
                              + " generators, group has " + std::to_string(k));
      }
      for (auto const& rel : presentation->relators) {
        if (g.evaluate(rel) != identity()) {
          throw InvalidArgument("relator " + print_word(rel, presentation->gen_names)
                                + " does not hold in " + g._name);
        }
      }
      g._presentation = std::move(presentation);
    }
    return g;
  }

  Element FiniteGroup::pow(Element a, long k) const {
    if (k < 0) {
      a = inv(a);
      k = -k;
    }
    Element result = identity();
    Element base   = a;
    while (k > 0) {
      if (k & 1) {
        result = mul(result, base);
      }
      base = mul(base, base);
      k >>= 1;
    }
    return result;
  }

  Element FiniteGroup::evaluate(Word const& w, std::span<Element const> images) const {
    if (images.size() != w.rank()) {
      throw InvalidArgument("word of rank " + std::to_string(w.rank())
                            + " evaluated with " + std::to_string(images.size())
                            + " images");
    }
    Element result = identity();
    for (Letter x : w.letters()) {
      Element e = images[x.gen()];
      result    = mul(result, x.is_inverse() ? inv(e) : e);
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Constructors
  ////////////////////////////////////////////////////////////////////////

  Word element_word(FiniteGroup const& g, Element a) {
    std::vector<Letter> letters;
    while (a != FiniteGroup::identity()) {
      letters.emplace_back(g.tree_generator(a), false);
      a = g.tree_parent(a);
    }
    std::reverse(letters.begin(), letters.end());
    return reduce(letters, g.generators().size());
  }

  std::string element_text(FiniteGroup const& g, Element a) {
    return print_word(element_word(g, a), g.generator_names());
  }

  bool is_prime(long n) {
    if (n < 2) {
      return false;
    }
    for (long d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        return false;
      }
    }
    return true;
  }

  namespace {
    long powmod(long base, long exp, long mod) {
      long result = 1 % mod;
      base %= mod;
      while (exp > 0) {
        if (exp & 1) {
          result = result * base % mod;
        }
        base = base * base % mod;
        exp >>= 1;
      }
      return result;
    }

    Permutation perm_from(std::size_t degree, auto&& f) {
      std::vector<std::uint32_t> images(degree);
      for (std::size_t x = 0; x < degree; ++x) {
        images[x] = static_cast<std::uint32_t>(f(x));
      }
      return Permutation(std::move(images));
    }
  }  // namespace

  FiniteGroup cyclic(std::size_t n) {
    if (n == 0) {
      throw InvalidArgument("cyclic group order must be positive");
    }
    auto a = perm_from(n, [n](std::size_t x) { return (x + 1) % n; });
    return FiniteGroup::from_permutations(
        "Z" + std::to_string(n),
        {a},
        {"a"},
        make_presentation({"a"}, {"a^" + std::to_string(n)}));
  }

  FiniteGroup semidirect_pq(long p, long q, long r) {
    auto const tuple = "(" + std::to_string(p) + "," + std::to_string(q) + ","
                       + std::to_string(r) + ")";
    if (!is_prime(p) || !is_prime(q) || !(3 <= q && q < p)) {
      throw InvalidArgument("semidirect_pq" + tuple
                            + ": need primes 3 <= q < p");
    }
    if (!(2 <= r && r < p)) {
      throw InvalidArgument("semidirect_pq" + tuple + ": need 2 <= r < p");
    }
    if (powmod(r, q, p) != 1) {
      throw InvalidArgument("semidirect_pq" + tuple + ": r^q = "
                            + std::to_string(powmod(r, q, p))
                            + " != 1 (mod p)");
    }
    auto const up = static_cast<std::size_t>(p);
    // a: x -> x + 1 and b: x -> r^-1 x, so that b a b^-1 = a^r
    long const r_inv = powmod(r, p - 2, p);
    auto       a = perm_from(up, [up](std::size_t x) { return (x + 1) % up; });
    auto       b = perm_from(up, [up, r_inv](std::size_t x) {
      return static_cast<std::size_t>(static_cast<long>(x) * r_inv) % up;
    });
    return FiniteGroup::from_permutations(
        "semidirect_pq" + tuple,
        {a, b},
        {"a", "b"},
        make_presentation({"a", "b"},
                          {"a^" + std::to_string(p),
                           "b^" + std::to_string(q),
                           "b a b^-1 a^-" + std::to_string(r)}));
  }

  FiniteGroup heisenberg(long p) {
    if (!is_prime(p)) {
      throw InvalidArgument("heisenberg: " + std::to_string(p)
                            + " is not prime");
    }
    auto const up = static_cast<std::size_t>(p);
    // element (a, b, c) <-> [[1, a, c], [0, 1, b], [0, 0, 1]], index a p^2 + b p + c
    auto right_mult = [up](std::size_t ga, std::size_t gb) {
      return perm_from(up * up * up, [=](std::size_t x) {
        std::size_t a = x / (up * up), b = (x / up) % up, c = x % up;
        std::size_t na = (a + ga) % up, nb = (b + gb) % up,
                    nc = (c + a * gb) % up;
        return na * up * up + nb * up + nc;
      });
    };
    return FiniteGroup::from_permutations(
        "heisenberg(" + std::to_string(p) + ")",
        {right_mult(1, 0), right_mult(0, 1)},
        {"x", "y"},
        make_presentation({"x", "y"},
                          {"x^" + std::to_string(p),
                           "y^" + std::to_string(p),
                           "[x,y]^" + std::to_string(p),
                           "[x,[x,y]]",
                           "[y,[x,y]]"}));
  }

  FiniteGroup abelian2(std::size_t m, std::size_t n) {
    if (m == 0 || n == 0) {
      throw InvalidArgument("abelian2: factor orders must be positive");
    }
    auto a = perm_from(m + n, [m](std::size_t x) {
      return x < m ? (x + 1) % m : x;
    });
    auto b = perm_from(m + n, [m, n](std::size_t x) {
      return x < m ? x : m + (x - m + 1) % n;
    });
    return FiniteGroup::from_permutations(
        "Z" + std::to_string(m) + "xZ" + std::to_string(n),
        {a, b},
        {"a", "b"},
        make_presentation({"a", "b"},
                          {"a^" + std::to_string(m),
                           "b^" + std::to_string(n),
                           "[a,b]"}));
  }

  FiniteGroup subgroup_as_group(FiniteGroup const&          g,
                                std::vector<Element> const& gens,
                                std::string                 name) {
    Subgroup                 h = subgroup_closure(g, gens);
    std::vector<std::size_t> local(g.order(), 0);
    for (std::size_t i = 0; i < h.elements.size(); ++i) {
      local[h.elements[i]] = i;
    }
    std::vector<Permutation> perms;
    GeneratorNames           names;
    for (std::size_t s = 0; s < gens.size(); ++s) {
      perms.push_back(perm_from(h.size(), [&](std::size_t x) {
        return local[g.mul(h.elements[x], gens[s])];
      }));
      names.push_back("g" + std::to_string(s + 1));
    }
    return FiniteGroup::from_permutations(
        std::move(name), std::move(perms), std::move(names));
  }

  ////////////////////////////////////////////////////////////////////////
  // Queries
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Closure that gives up (returns false) once the size passes `limit`.
    bool closure_into(FiniteGroup const&       g,
                      std::span<Element const> gens,
                      std::size_t              limit,
                      Subgroup&                out) {
      out.member.assign(g.order(), false);
      out.elements.assign(1, FiniteGroup::identity());
      out.member[0] = true;
      for (std::size_t i = 0; i < out.elements.size(); ++i) {
        for (Element s : gens) {
          Element x = g.mul(out.elements[i], s);
          if (!out.member[x]) {
            if (limit != 0 && out.elements.size() >= limit) {
              return false;
            }
            out.member[x] = true;
            out.elements.push_back(x);
          }
        }
      }
      std::sort(out.elements.begin(), out.elements.end());
      return true;
    }

    bool is_power_of(std::size_t n, long p) {
      while (n % static_cast<std::size_t>(p) == 0) {
        n /= static_cast<std::size_t>(p);
      }
      return n == 1;
    }
  }  // namespace

  Subgroup subgroup_closure(FiniteGroup const&       g,
                            std::span<Element const> gens,
                            std::size_t              cap) {
    Subgroup h;
    if (!closure_into(g, gens, cap, h)) {
      throw CapExceeded("subgroup closure", cap);
    }
    return h;
  }

  Subgroup subgroup_closure(FiniteGroup const&             g,
                            std::initializer_list<Element> gens) {
    return subgroup_closure(g, std::span<Element const>(gens.begin(), gens.size()));
  }

  std::size_t element_order(FiniteGroup const& g, Element a) {
    std::size_t k = 1;
    for (Element x = a; x != FiniteGroup::identity(); x = g.mul(x, a)) {
      ++k;
    }
    return k;
  }

  bool is_abelian(FiniteGroup const& g) {
    auto const& gens = g.generators();
    for (Element a : gens) {
      for (Element b : gens) {
        if (g.mul(a, b) != g.mul(b, a)) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_abelian(FiniteGroup const& g, Subgroup const& h) {
    for (Element a : h.elements) {
      for (Element b : h.elements) {
        if (b > a) {
          break;
        }
        if (g.mul(a, b) != g.mul(b, a)) {
          return false;
        }
      }
    }
    return true;
  }

  Subgroup centralizer(FiniteGroup const& g, Element a) {
    Subgroup h;
    h.member.assign(g.order(), false);
    for (Element x = 0; x < g.order(); ++x) {
      if (g.mul(x, a) == g.mul(a, x)) {
        h.member[x] = true;
        h.elements.push_back(x);
      }
    }
    return h;
  }

  Subgroup center(FiniteGroup const& g) {
    Subgroup h;
    h.member.assign(g.order(), false);
    for (Element x = 0; x < g.order(); ++x) {
      bool central = std::all_of(
          g.generators().begin(), g.generators().end(), [&](Element s) {
            return g.mul(x, s) == g.mul(s, x);
          });
      if (central) {
        h.member[x] = true;
        h.elements.push_back(x);
      }
    }
    return h;
  }

  Subgroup normal_closure(FiniteGroup const& g, std::span<Element const> gens) {
    std::vector<Element> sgens(gens.begin(), gens.end());
    Subgroup             n = subgroup_closure(g, sgens);
    bool                 grew = true;
    while (grew) {
      grew = false;
      for (std::size_t i = 0; i < sgens.size(); ++i) {
        for (Element t : g.generators()) {
          Element c = g.conjugate(t, sgens[i]);
          if (!n.contains(c)) {
            sgens.push_back(c);
            n    = subgroup_closure(g, sgens);
            grew = true;
          }
        }
      }
    }
    return n;
  }

  Subgroup derived_subgroup(FiniteGroup const& g) {
    std::vector<Element> comms;
    for (Element a : g.generators()) {
      for (Element b : g.generators()) {
        comms.push_back(g.commutator(a, b));
      }
    }
    return normal_closure(g, comms);
  }

  std::vector<Element> conjugacy_class_of(FiniteGroup const& g) {
    std::size_t const n = g.order();
    std::vector<Element> rep(n, static_cast<Element>(n));
    for (Element x = 0; x < n; ++x) {
      if (rep[x] != n) {
        continue;
      }
      rep[x] = x;
      std::vector<Element> queue{x};
      for (std::size_t i = 0; i < queue.size(); ++i) {
        for (Element t : g.generators()) {
          Element c = g.conjugate(t, queue[i]);
          if (rep[c] == n) {
            rep[c] = x;
            queue.push_back(c);
          }
        }
      }
    }
    return rep;
  }

  std::size_t conjugacy_class_count(FiniteGroup const& g) {
    auto        rep   = conjugacy_class_of(g);
    std::size_t count = 0;
    for (Element x = 0; x < rep.size(); ++x) {
      count += rep[x] == x;
    }
    return count;
  }

  std::size_t count_involutions(FiniteGroup const& g) {
    std::size_t count = 0;
    for (Element x = 1; x < g.order(); ++x) {
      count += g.mul(x, x) == FiniteGroup::identity();
    }
    return count;
  }

  std::vector<std::pair<long, int>> order_factors(FiniteGroup const& g) {
    std::vector<std::pair<long, int>> out;
    auto                              n = static_cast<long>(g.order());
    for (long p = 2; p * p <= n; ++p) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      if (e > 0) {
        out.emplace_back(p, e);
      }
    }
    if (n > 1) {
      out.emplace_back(n, 1);
    }
    return out;
  }

  Subgroup sylow_subgroup(FiniteGroup const& g, long p) {
    std::size_t target = 1;
    for (auto [q, e] : order_factors(g)) {
      if (q == p) {
        for (int i = 0; i < e; ++i) {
          target *= static_cast<std::size_t>(p);
        }
      }
    }
    std::vector<Element> gens;
    Subgroup             current = subgroup_closure(g, gens);
    Subgroup             trial;
    // A single pass yields a maximal p-subgroup: an element rejected
    // against a smaller P stays rejected against any larger one.
    for (Element x = 1; x < g.order() && current.size() < target; ++x) {
      if (current.contains(x) || !is_power_of(element_order(g, x), p)) {
        continue;
      }
      gens.push_back(x);
      if (closure_into(g, gens, target, trial) && is_power_of(trial.size(), p)) {
        current = std::move(trial);
      } else {
        gens.pop_back();
      }
    }
    return current;
  }

}  // namespace hbody
