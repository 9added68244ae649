#include "hbody/automorphism.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "hbody/error.hpp"

namespace hbody {

  std::vector<Element> extend_to_map(FiniteGroup const&       g,
                                     std::span<Element const> images) {
    auto const& gens = g.generators();
    if (images.size() != gens.size()) {
      throw InvalidArgument("need one image per generator");
    }
    std::size_t const    n = g.order();
    std::vector<Element> map(n);
    map[0] = FiniteGroup::identity();
    // elements are numbered in enumeration order, parents first
    for (Element e = 1; e < n; ++e) {
      map[e] = g.mul(map[g.tree_parent(e)], images[g.tree_generator(e)]);
    }
    for (Element e = 0; e < n; ++e) {
      for (std::size_t s = 0; s < gens.size(); ++s) {
        if (map[g.mul(e, gens[s])] != g.mul(map[e], images[s])) {
          return {};
        }
      }
    }
    return map;
  }

  namespace {
    class AutomorphismSearch {
     public:
      AutomorphismSearch(FiniteGroup const&         g,
                         Presentation const&        p,
                         AutomorphismOptions const& opts)
          : _g(g), _cap(opts.node_cap), _count_cap(opts.count_cap) {
        auto const& gens = g.generators();
        std::size_t k    = gens.size();
        if (p.gen_count() != k) {
          throw InvalidArgument("presentation does not match the group's generators");
        }
        for (auto const& rel : p.relators) {
          if (g.evaluate(rel) != FiniteGroup::identity()) {
            throw InvalidArgument("group does not satisfy the presentation");
          }
        }
        std::vector<std::size_t> orders(g.order());
        for (Element x = 0; x < g.order(); ++x) {
          orders[x] = element_order(g, x);
        }

        _order.resize(k);
        std::iota(_order.begin(), _order.end(), 0);
        std::stable_sort(_order.begin(), _order.end(), [&](std::size_t a, std::size_t b) {
          return orders[gens[a]] > orders[gens[b]];
        });

        // relators checked at the level where their last generator is set
        std::vector<std::size_t> level_of(k);
        for (std::size_t i = 0; i < k; ++i) {
          level_of[_order[i]] = i;
        }
        _relators_at.resize(k);
        for (auto const& rel : p.relators) {
          std::size_t level = 0;
          for (Letter x : rel.letters()) {
            level = std::max(level, level_of[x.gen()]);
          }
          _relators_at[level].push_back(&rel);
        }

        _candidates.resize(k);
        _prefix_size.resize(k);
        std::vector<Element> prefix;
        for (std::size_t i = 0; i < k; ++i) {
          Element gen = gens[_order[i]];
          for (Element x = 0; x < g.order(); ++x) {
            if (orders[x] == orders[gen]) {
              _candidates[i].push_back(x);
            }
          }
          prefix.push_back(gen);
          _prefix_size[i] = subgroup_closure(g, prefix).size();
        }
        _images.assign(k, FiniteGroup::identity());
      }

      std::vector<Automorphism> run() {
        if (_g.generators().empty()) {
          Automorphism id;
          id.map.assign(1, FiniteGroup::identity());
          return {id};
        }
        search(0);
        return std::move(_found);
      }

     private:
      void search(std::size_t level) {
        std::size_t const k = _order.size();
        for (Element x : _candidates[level]) {
          if (++_nodes > _cap) {
            throw CapExceeded("automorphism search node", _cap);
          }
          _images[_order[level]] = x;
          if (!relators_hold(level)) {
            continue;
          }
          _prefix.push_back(x);
          bool ok = subgroup_size(_prefix) == _prefix_size[level];
          if (ok) {
            if (level + 1 == k) {
              if (_prefix_size[level] == _g.order()) {
                auto map = extend_to_map(_g, _images);
                if (!map.empty()) {
                  if (_found.size() >= _count_cap) {
                    throw CapExceeded("automorphism count", _count_cap);
                  }
                  _found.push_back({std::move(map)});
                }
              }
            } else {
              search(level + 1);
            }
          }
          _prefix.pop_back();
        }
      }

      bool relators_hold(std::size_t level) const {
        for (Word const* rel : _relators_at[level]) {
          if (_g.evaluate(*rel, _images) != FiniteGroup::identity()) {
            return false;
          }
        }
        return true;
      }

      std::size_t subgroup_size(std::vector<Element> const& gens) {
        _scratch.assign(_g.order(), false);
        _queue.assign(1, FiniteGroup::identity());
        _scratch[0] = true;
        for (std::size_t i = 0; i < _queue.size(); ++i) {
          for (Element s : gens) {
            Element y = _g.mul(_queue[i], s);
            if (!_scratch[y]) {
              _scratch[y] = true;
              _queue.push_back(y);
            }
          }
        }
        return _queue.size();
      }

      FiniteGroup const&                     _g;
      std::size_t                            _cap;
      std::size_t                            _count_cap;
      std::size_t                            _nodes = 0;
      std::vector<std::size_t>               _order;
      std::vector<std::vector<Word const*>>  _relators_at;
      std::vector<std::vector<Element>>      _candidates;
      std::vector<std::size_t>               _prefix_size;
      std::vector<Element>                   _images;
      std::vector<Element>                   _prefix;
      std::vector<bool>                      _scratch;
      std::vector<Element>                   _queue;
      std::vector<Automorphism>              _found;
    };

    // Aut-invariant signature of an element.
    struct Signature {
      std::size_t order, centralizer;
      bool        central, derived;
      bool operator==(Signature const&) const = default;
    };

    class GeneratorSearch {
     public:
      GeneratorSearch(FiniteGroup const& g, Presentation const& p, AutomorphismOptions const& opts)
          : _g(g), _cap(opts.node_cap) {
        auto const& gens = g.generators();
        std::size_t k    = gens.size();
        if (p.gen_count() != k) {
          throw InvalidArgument("presentation does not match the group's generators");
        }
        for (auto const& rel : p.relators) {
          if (g.evaluate(rel) != FiniteGroup::identity()) {
            throw InvalidArgument("group does not satisfy the presentation");
          }
        }
        std::size_t const n   = g.order();
        auto              rep = conjugacy_class_of(g);
        std::vector<std::size_t> class_size(n, 0);
        for (Element x = 0; x < n; ++x) {
          ++class_size[rep[x]];
        }
        Subgroup z = center(g);
        Subgroup d = derived_subgroup(g);
        std::vector<Signature> sig(n);
        for (Element x = 0; x < n; ++x) {
          sig[x] = {element_order(g, x), n / class_size[rep[x]], z.contains(x), d.contains(x)};
        }
        _relators_at.resize(k);
        for (auto const& rel : p.relators) {
          std::size_t level = 0;
          for (Letter x : rel.letters()) {
            level = std::max(level, x.gen());
          }
          _relators_at[level].push_back(&rel);
        }
        _candidates.resize(k);
        _prefix_size.resize(k);
        for (std::size_t i = 0; i < k; ++i) {
          for (Element x = 0; x < n; ++x) {
            if (sig[x] == sig[gens[i]]) {
              _candidates[i].push_back(x);
            }
          }
          std::vector<Element> prefix(gens.begin(), gens.begin() + static_cast<std::ptrdiff_t>(i + 1));
          _prefix_size[i] = subgroup_closure(g, prefix).size();
        }
      }

      AutomorphismGroup run() {
        auto const&       gens = _g.generators();
        std::size_t const k    = gens.size();
        AutomorphismGroup result;
        result.orbit_sizes.assign(k, 1);
        for (std::size_t level = k; level-- > 0;) {
          std::vector<bool>    in_orbit(_g.order(), false);
          std::vector<Element> orbit{gens[level]};
          in_orbit[gens[level]] = true;
          auto close = [&](std::size_t from) {
            for (std::size_t i = from; i < orbit.size(); ++i) {
              for (auto const& phi : result.generators) {
                Element y = phi(orbit[i]);
                if (!in_orbit[y]) {
                  in_orbit[y] = true;
                  orbit.push_back(y);
                }
              }
            }
          };
          close(0);
          for (Element x : _candidates[level]) {
            if (in_orbit[x]) {
              continue;
            }
            _images.assign(gens.begin(), gens.end());
            _images[level] = x;
            if (!fits(level) || !complete(level + 1)) {
              continue;
            }
            result.generators.push_back({_found});
            // the new generator may move earlier orbit points too
            std::size_t before = orbit.size();
            for (std::size_t i = 0; i < before; ++i) {
              Element y = _found[orbit[i]];
              if (!in_orbit[y]) {
                in_orbit[y] = true;
                orbit.push_back(y);
              }
            }
            close(0);
          }
          result.orbit_sizes[level] = orbit.size();
        }
        return result;
      }

     private:
      // Relators ending at `level` hold and the prefix spans a subgroup of
      // the right size.
      bool fits(std::size_t level) {
        if (++_nodes > _cap) {
          throw CapExceeded("automorphism search node", _cap);
        }
        for (Word const* rel : _relators_at[level]) {
          if (_g.evaluate(*rel, _images) != FiniteGroup::identity()) {
            return false;
          }
        }
        std::span<Element const> prefix(_images.data(), level + 1);
        return subgroup_closure(_g, prefix).size() == _prefix_size[level];
      }

      // Completes _images from `level` on; leaves the map in _found.
      bool complete(std::size_t level) {
        if (level == _images.size()) {
          if (_prefix_size.back() != _g.order()) {
            return false;
          }
          _found = extend_to_map(_g, _images);
          return !_found.empty();
        }
        for (Element x : _candidates[level]) {
          _images[level] = x;
          if (fits(level) && complete(level + 1)) {
            return true;
          }
        }
        _images[level] = _g.generators()[level];
        return false;
      }

      FiniteGroup const&                    _g;
      std::size_t                           _cap;
      std::size_t                           _nodes = 0;
      std::vector<std::vector<Word const*>> _relators_at;
      std::vector<std::vector<Element>>     _candidates;
      std::vector<std::size_t>              _prefix_size;
      std::vector<Element>                  _images;
      std::vector<Element>                  _found;
    };
  }  // namespace

  std::vector<Automorphism> automorphisms(FiniteGroup const&         g,
                                          Presentation const&        p,
                                          AutomorphismOptions const& opts) {
    return AutomorphismSearch(g, p, opts).run();
  }

  std::vector<Automorphism> automorphisms(FiniteGroup const&         g,
                                          AutomorphismOptions const& opts) {
    if (!g.presentation()) {
      throw InvalidArgument(g.name() + " carries no presentation");
    }
    return automorphisms(g, *g.presentation(), opts);
  }

  AutomorphismGroup automorphism_group(FiniteGroup const&         g,
                                       Presentation const&        p,
                                       AutomorphismOptions const& opts) {
    return GeneratorSearch(g, p, opts).run();
  }

  AutomorphismGroup automorphism_group(FiniteGroup const& g, AutomorphismOptions const& opts) {
    if (!g.presentation()) {
      throw InvalidArgument(g.name() + " carries no presentation");
    }
    return automorphism_group(g, *g.presentation(), opts);
  }

  std::vector<ElementPair> pair_orbit_representatives(FiniteGroup const&               g,
                                                      std::vector<Automorphism> const& gens,
                                                      std::span<ElementPair const>     pairs) {
    std::size_t const n = g.order();
    if (n > 4096) {
      throw CapExceeded("pair-orbit group order", 4096);
    }
    std::vector<std::uint32_t> parent(n * n);
    std::iota(parent.begin(), parent.end(), 0u);
    auto find = [&parent](std::uint32_t x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x         = parent[x];
      }
      return x;
    };
    for (auto const& phi : gens) {
      for (std::uint32_t u = 0; u < n; ++u) {
        for (std::uint32_t v = 0; v < n; ++v) {
          auto a = find(static_cast<std::uint32_t>(u * n + v));
          auto b = find(static_cast<std::uint32_t>(phi(u) * n + phi(v)));
          if (a != b) {
            parent[std::max(a, b)] = std::min(a, b);
          }
        }
      }
    }
    std::unordered_map<std::uint32_t, ElementPair> first;
    std::vector<ElementPair>                       out;
    out.reserve(pairs.size());
    for (auto const& p : pairs) {
      auto root = find(static_cast<std::uint32_t>(p.first * n + p.second));
      out.push_back(first.try_emplace(root, p).first->second);
    }
    return out;
  }

  ElementPair canonical_pair(std::vector<Automorphism> const& auts,
                             ElementPair                      pair) {
    ElementPair best = pair;
    for (auto const& phi : auts) {
      ElementPair image{phi(pair.first), phi(pair.second)};
      best = std::min(best, image);
    }
    return best;
  }

  std::size_t pair_orbit_count(FiniteGroup const&               g,
                               std::vector<Automorphism> const& auts,
                               std::span<ElementPair const>     pairs) {
    std::unordered_map<std::uint64_t, std::size_t> index;
    auto key = [&g](ElementPair p) {
      return static_cast<std::uint64_t>(p.first) * g.order() + p.second;
    };
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      index.emplace(key(pairs[i]), i);
    }
    std::size_t               orbits = 0;
    std::vector<std::uint8_t> done(pairs.size(), 0);
    auto const                m = static_cast<std::ptrdiff_t>(auts.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (done[i]) {
        continue;
      }
      ++orbits;
      auto const [u, v] = pairs[i];
#pragma omp parallel for schedule(static)
      for (std::ptrdiff_t k = 0; k < m; ++k) {
        auto it = index.find(key({auts[k](u), auts[k](v)}));
        if (it != index.end()) {
#pragma omp atomic write
          done[it->second] = 1;
        }
      }
    }
    return orbits;
  }

  namespace reference {
    std::size_t pair_orbit_count(FiniteGroup const&               g,
                                 std::vector<Automorphism> const& auts,
                                 std::span<ElementPair const>     pairs) {
      std::unordered_map<std::uint64_t, std::size_t> index;
      auto key = [&g](ElementPair p) {
        return static_cast<std::uint64_t>(p.first) * g.order() + p.second;
      };
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        index.emplace(key(pairs[i]), i);
      }
      // auts is the whole group, so the orbit of a pair is its image set
      std::size_t       orbits = 0;
      std::vector<bool> done(pairs.size(), false);
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (done[i]) {
          continue;
        }
        ++orbits;
        for (auto const& phi : auts) {
          auto it = index.find(key({phi(pairs[i].first), phi(pairs[i].second)}));
          if (it != index.end()) {
            done[it->second] = true;
          }
        }
      }
      return orbits;
    }
  }  // namespace reference

}  // namespace hbody
