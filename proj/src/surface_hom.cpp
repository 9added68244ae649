#include "hbody/surface_hom.hpp"

#include <algorithm>
#include <set>

#include "hbody/twist.hpp"

namespace hbody {

  namespace {
    std::size_t generated_order(FiniteGroup const&       g,
                                std::span<Element const> gens,
                                std::vector<bool>&       seen,
                                std::vector<Element>&    queue) {
      seen.assign(g.order(), false);
      queue.assign(1, FiniteGroup::identity());
      seen[0] = true;
      for (std::size_t i = 0; i < queue.size(); ++i) {
        for (Element s : gens) {
          Element y = g.mul(queue[i], s);
          if (!seen[y]) {
            seen[y] = true;
            queue.push_back(y);
          }
        }
      }
      return queue.size();
    }

    std::optional<QuickKind> quick_kind(FiniteGroup const& g,
                                        Element u, Element v, Element r, Element t) {
      constexpr Element e = FiniteGroup::identity();
      if (g.commutator(u, v) == e) {
        return QuickKind::commutator_uv;
      }
      std::array<std::pair<Element, QuickKind>, 8> const products{{
          {g.mul(u, r), QuickKind::ur},
          {g.mul(u, v), QuickKind::uv},
          {g.mul(u, g.inv(v)), QuickKind::uv_inv},
          {g.mul(u, g.inv(t)), QuickKind::ut_inv},
          {g.mul(r, t), QuickKind::rt},
          {g.mul(r, g.inv(t)), QuickKind::rt_inv},
          {g.mul(r, g.inv(v)), QuickKind::rv_inv},
          {g.mul(t, v), QuickKind::tv},
      }};
      for (auto [x, kind] : products) {
        if (x == e) {
          return kind;
        }
      }
      return std::nullopt;
    }

    // Solutions t of [r, t] = target with <a, b, r, t> = G, for one r.
    void partners_of(FiniteGroup const&    g,
                     Element               a,
                     Element               b,
                     Element               r,
                     Element               target,
                     bool                  filter_quick,
                     std::vector<ElementPair>& out,
                     std::vector<bool>&    seen,
                     std::vector<Element>& queue) {
      for (Element t = 0; t < g.order(); ++t) {
        if (g.commutator(r, t) != target) {
          continue;
        }
        Element const gens[] = {a, b, r, t};
        if (generated_order(g, gens, seen, queue) != g.order()) {
          continue;
        }
        if (filter_quick && quick_kind(g, a, b, r, t)) {
          continue;
        }
        out.emplace_back(r, t);
      }
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Epimorphism
  ////////////////////////////////////////////////////////////////////////

  Epimorphism::Epimorphism(GroupPtr group, std::array<Element, 4> images)
      : _group(std::move(group)), _images(images) {
    if (!_group) {
      throw InvalidArgument("epimorphism needs a group");
    }
    FiniteGroup const& g = *_group;
    for (Element x : _images) {
      if (x >= g.order()) {
        throw InvalidArgument("image " + std::to_string(x) + " is not an element of "
                              + g.name());
      }
    }
    auto [a, b, c, d] = _images;
    Element rel       = g.mul(g.commutator(a, b), g.commutator(c, d));
    if (rel != FiniteGroup::identity()) {
      throw InvalidEpimorphism(InvalidEpimorphism::Kind::relation_violated,
                               "relation violated: [a,b][c,d] = " + element_text(g, rel)
                                   + " != 1");
    }
    std::vector<bool>    seen;
    std::vector<Element> queue;
    std::size_t          n = generated_order(g, _images, seen, queue);
    if (n != g.order()) {
      throw InvalidEpimorphism(InvalidEpimorphism::Kind::not_generating,
                               "not generating: <a,b,c,d> has order " + std::to_string(n)
                                   + " < " + std::to_string(g.order()));
    }
  }

  Element Epimorphism::evaluate(Word const& w) const {
    if (w.rank() != 4) {
      throw InvalidArgument("epimorphisms evaluate rank-4 words");
    }
    return _group->evaluate(w, _images);
  }

  Epimorphism make_epimorphism(GroupPtr g, Element a, Element b, Element c, Element d) {
    return Epimorphism(std::move(g), {a, b, c, d});
  }

  Epimorphism make_epimorphism(GroupPtr g, std::array<std::string, 4> const& words) {
    if (!g) {
      throw InvalidArgument("epimorphism needs a group");
    }
    std::array<Element, 4> images{};
    for (std::size_t i = 0; i < 4; ++i) {
      images[i] = g->evaluate(parse_word(words[i], g->generator_names()));
    }
    return Epimorphism(std::move(g), images);
  }

  ////////////////////////////////////////////////////////////////////////
  // Witnesses
  ////////////////////////////////////////////////////////////////////////

  std::string to_string(QuickKind k) {
    switch (k) {
      case QuickKind::commutator_uv:
        return "commutator [u,v] trivial";
      case QuickKind::ur:
        return "ur trivial";
      case QuickKind::uv:
        return "uv trivial";
      case QuickKind::uv_inv:
        return "uv^-1 trivial";
      case QuickKind::ut_inv:
        return "ut^-1 trivial";
      case QuickKind::rt:
        return "rt trivial";
      case QuickKind::rt_inv:
        return "rt^-1 trivial";
      case QuickKind::rv_inv:
        return "rv^-1 trivial";
      case QuickKind::tv:
        return "tv trivial";
    }
    return "unknown";
  }

  std::optional<QuickKind> quick_witness(Epimorphism const& theta) {
    auto [u, v, r, t] = theta.images();
    return quick_kind(theta.group(), u, v, r, t);
  }

  Verdict handlebody_witness(Epimorphism const& theta, OrbitSet const& s, bool try_quick) {
    Verdict verdict;
    verdict.searched_depth = s.depth();
    if (try_quick) {
      if (auto k = quick_witness(theta)) {
        verdict.kind      = Verdict::Kind::immediate_witness;
        verdict.immediate = k;
        return verdict;
      }
    }
    auto const& entries = s.entries();
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (!theta.kills(entries[i].word)) {
        continue;
      }
      WitnessReport report{entries[i].word, entries[i].path, i, theta.evaluate(entries[i].word)};
      if (report.image != FiniteGroup::identity() || !s.contains(report.witness)) {
        throw Error("witness failed re-verification");
      }
      verdict.kind    = Verdict::Kind::extends_to_handlebody;
      verdict.witness = std::move(report);
      return verdict;
    }
    return verdict;
  }

  CompiledOrbit::CompiledOrbit(OrbitSet const& s) {
    _offsets.reserve(s.size() + 1);
    _offsets.push_back(0);
    for (auto const& e : s.entries()) {
      for (Letter x : e.word.letters()) {
        _columns.push_back(static_cast<std::uint8_t>(2 * x.gen() + (x.is_inverse() ? 1 : 0)));
      }
      _offsets.push_back(_columns.size());
    }
  }

  std::optional<std::size_t> CompiledOrbit::first_kernel_word(
      FiniteGroup const& g, std::array<Element, 4> const& images) const {
    std::array<Element, 8> table{};
    for (std::size_t i = 0; i < 4; ++i) {
      table[2 * i]     = images[i];
      table[2 * i + 1] = g.inv(images[i]);
    }
    for (std::size_t w = 0; w + 1 < _offsets.size(); ++w) {
      Element x = FiniteGroup::identity();
      for (std::size_t k = _offsets[w]; k < _offsets[w + 1]; ++k) {
        x = g.mul(x, table[_columns[k]]);
      }
      if (x == FiniteGroup::identity()) {
        return w;
      }
    }
    return std::nullopt;
  }

  std::vector<std::optional<std::size_t>> batch_witnesses(
      std::span<Epimorphism const> thetas, OrbitSet const& s) {
    CompiledOrbit                           compiled(s);
    std::vector<std::optional<std::size_t>> out(thetas.size());
    auto const                              n = static_cast<std::ptrdiff_t>(thetas.size());
#pragma omp parallel for schedule(dynamic, 4)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      out[i] = compiled.first_kernel_word(thetas[i].group(), thetas[i].images());
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Semidirect family
  ////////////////////////////////////////////////////////////////////////

  Epimorphism example1_epimorphism(long p, long q, long r) {
    auto    g = std::make_shared<FiniteGroup const>(semidirect_pq(p, q, r));
    Element a = g->generators()[0];
    Element b = g->generators()[1];
    return make_epimorphism(g, a, b, g->inv(b), g->mul(b, g->inv(a)));
  }

  Word const& r3_criterion_word() {
    static Word const w = apply(sigma(5), apply(sigma(4), apply(sigma(3), base_commutator())));
    return w;
  }

  std::span<Table1Row const> table1_rows() {
    static constexpr Table1Row rows[] = {
        {11, 5, 3, "(y2^2 x2^-1 y1)^2 x1 y1 x1^-1 (y1^-1 x2 y2^-2)^2 y1^-1"},
        {11, 5, 4,
         "x2^-1 y1 y2 x2^-1 (x2^-1 y1)^2 x1 y1 x1^-1 (y1^-1 x2)^2 x2 y2^-1 y1^-1 x2 y1^-1"},
        {11, 5, 5, "x2^-1 x1^-2 y1^-1 x2 x1 y1 x1"},
        {11, 5, 9, "x2^-1 (y1 x1^-1)^2 y1^-1 x2 x1^2 y1^-1"},
        {23, 11, 2, "(y2 x2^-1 y1)^2 x1 y1 x1^-1 (y1^-1 x2 y2^-1)^2 y1^-1"},
        {23, 11, 3, "y2^2 x2^-1 y1 x1 y1 x1^-1 y1^-1 x2 y2^-2 y1^-1"},
        {23, 11, 4, "x2^-1 y1 y2 x2^-1 y1^2 x1^-1 (y1^-1 x2)^2 y2^-1 x1 y1^-1"},
        {23, 11, 6, "x2^-1 y1 x1^-1 x2^-1 y1^2 x1^-1 (y1^-1 x2 x1)^2 y1^-1"},
        {23, 11, 8,
         "x2^-1 y1 y2 x2^-1 y1 x1^-1 y2 x2^-1 y1^2 x1^-1 y1^-1 x2 (y1^-1 x2 y2^-1 x1)^2 y1^-1"},
        {23, 11, 9, "y2 x2^-1 y1 x1^-1 y2 x2^-1 y1^2 x1^-1 (y1^-1 x2 y2^-1 x1)^2 y1^-1"},
        {23, 11, 12, "(y2 x2^-1)^2 x2^-1 y1^2 x1^-1 y1^-1 x2 (x2 y2^-1)^2 x1 y1^-1"},
        {23, 11, 13,
         "x2^-1 y1 x1^-1 y2 x2^-1 y1 x1^-1 x2^-1 y1^2 x1^-1 y1^-1 x2 x1 y1^-1 x2 y2^-1 x1 "
         "y1^-1 x2 x1 y1^-1"},
        {23, 11, 16,
         "y2 x2^-1 y1 y2^2 x2^-1 (y2 x2^-1 y1)^2 x1 y1 x1^-1 (y1^-1 x2 y2^-1)^2 x2 y2^-2 "
         "y1^-1 x2 y2^-1 y1^-1"},
        {23, 11, 18, "(y2 x2^-1)^2 x2^-1 y1 x1 y1 x1^-1 y1^-1 x2 (x2 y2^-1)^2 y1^-1"},
    };
    return rows;
  }

  ////////////////////////////////////////////////////////////////////////
  // Counting
  ////////////////////////////////////////////////////////////////////////

  std::optional<std::array<Element, 4>> quadruple_search(FiniteGroup const& g,
                                                         std::size_t        closure_cap) {
    std::size_t const n = g.order();
    if (n == 1) {
      return std::array<Element, 4>{0, 0, 0, 0};
    }
    std::size_t closures = 0;
    auto        count    = [&] {
      if (++closures > closure_cap) {
        throw CapExceeded("quadruple closure", closure_cap);
      }
    };

    // distinct abelian subgroups <s1, s2>, with the first pair found
    std::set<std::vector<Element>>          seen;
    std::vector<std::pair<ElementPair, std::vector<Element>>> spans;
    for (Element s1 = 1; s1 < n; ++s1) {
      for (Element s2 : centralizer(g, s1).elements) {
        if (s2 < s1) {
          continue;
        }
        count();
        Element const gens[] = {s1, s2};
        auto          h      = subgroup_closure(g, gens);
        if (h.size() == n) {
          return std::array<Element, 4>{s1, s2, s1, s2};
        }
        if (seen.insert(h.elements).second) {
          spans.emplace_back(ElementPair{s1, s2}, std::move(h.elements));
        }
      }
    }
    std::stable_sort(spans.begin(), spans.end(), [](auto const& x, auto const& y) {
      return x.second.size() > y.second.size();
    });
    std::vector<bool>    mark;
    std::vector<Element> queue;
    for (std::size_t i = 0; i < spans.size(); ++i) {
      for (std::size_t j = i + 1; j < spans.size(); ++j) {
        auto [s1, s2] = spans[i].first;
        auto [s3, s4] = spans[j].first;
        auto const& h = spans[i].second;
        if (std::binary_search(h.begin(), h.end(), s3)
            && std::binary_search(h.begin(), h.end(), s4)) {
          continue;  // no growth over <s1, s2>
        }
        count();
        Element const gens[] = {s1, s2, s3, s4};
        if (generated_order(g, gens, mark, queue) == n) {
          return std::array<Element, 4>{s1, s2, s3, s4};
        }
      }
    }
    return std::nullopt;
  }

  std::size_t noncommuting_pair_count(FiniteGroup const& g) {
    auto const  n     = static_cast<std::ptrdiff_t>(g.order());
    std::size_t total = 0;
#pragma omp parallel for reduction(+ : total) schedule(static)
    for (std::ptrdiff_t u = 0; u < n; ++u) {
      for (Element v = 0; v < g.order(); ++v) {
        if (g.mul(static_cast<Element>(u), v) != g.mul(v, static_cast<Element>(u))) {
          ++total;
        }
      }
    }
    return total;
  }

  std::vector<ElementPair> noncommuting_pairs(FiniteGroup const& g) {
    std::vector<ElementPair> out;
    for (Element u = 0; u < g.order(); ++u) {
      for (Element v = 0; v < g.order(); ++v) {
        if (g.mul(u, v) != g.mul(v, u)) {
          out.emplace_back(u, v);
        }
      }
    }
    return out;
  }

  std::vector<ElementPair> partner_pairs(FiniteGroup const& g,
                                         Element            a,
                                         Element            b,
                                         bool               filter_quick) {
    Element const                         target = g.inv(g.commutator(a, b));
    auto const                            n      = static_cast<std::ptrdiff_t>(g.order());
    std::vector<std::vector<ElementPair>> per_r(g.order());
#pragma omp parallel
    {
      std::vector<bool>    seen;
      std::vector<Element> queue;
#pragma omp for schedule(dynamic, 8)
      for (std::ptrdiff_t r = 0; r < n; ++r) {
        partners_of(g, a, b, static_cast<Element>(r), target, filter_quick, per_r[r], seen,
                    queue);
      }
    }
    std::vector<ElementPair> out;
    for (auto& v : per_r) {
      out.insert(out.end(), v.begin(), v.end());
    }
    return out;
  }

  namespace reference {
    std::vector<ElementPair> partner_pairs(FiniteGroup const& g,
                                           Element            a,
                                           Element            b,
                                           bool               filter_quick) {
      std::vector<ElementPair> out;
      for (Element r = 0; r < g.order(); ++r) {
        for (Element t = 0; t < g.order(); ++t) {
          if (g.mul(g.commutator(a, b), g.commutator(r, t)) != FiniteGroup::identity()) {
            continue;
          }
          if (subgroup_closure(g, {a, b, r, t}).size() != g.order()) {
            continue;
          }
          if (filter_quick && quick_kind(g, a, b, r, t)) {
            continue;
          }
          out.emplace_back(r, t);
        }
      }
      return out;
    }

    std::vector<std::optional<std::size_t>> batch_witnesses(
        std::span<Epimorphism const> thetas, OrbitSet const& s) {
      std::vector<std::optional<std::size_t>> out;
      out.reserve(thetas.size());
      for (auto const& theta : thetas) {
        auto v = handlebody_witness(theta, s);
        out.push_back(v.witness ? std::optional<std::size_t>(v.witness->index) : std::nullopt);
      }
      return out;
    }
  }  // namespace reference

}  // namespace hbody
