#include "hbody/b0.hpp"

#include <algorithm>
#include <set>

namespace hbody {

  namespace {
    std::string order_text(FiniteGroup const& g) {
      std::string out;
      for (auto [p, e] : order_factors(g)) {
        if (!out.empty()) {
          out += "*";
        }
        out += std::to_string(p);
        if (e != 1) {
          out += "^" + std::to_string(e);
        }
      }
      return out.empty() ? "1" : out;
    }

    // A generating set for h, chosen greedily in element order.
    std::vector<Element> generators_of(FiniteGroup const& g, Subgroup const& h) {
      std::vector<Element> gens;
      Subgroup             span = subgroup_closure(g, gens);
      for (Element x : h.elements) {
        if (!span.contains(x)) {
          gens.push_back(x);
          span = subgroup_closure(g, gens);
        }
      }
      return gens;
    }

    FiniteGroup as_group(FiniteGroup const& g, Subgroup const& h, std::string name) {
      return subgroup_as_group(g, generators_of(g, h), std::move(name));
    }

    bool is_p_group(FiniteGroup const& g) {
      return order_factors(g).size() <= 1;
    }

    // Rule evaluation; with `all` every applicable rule among R1..R5 is
    // reported, otherwise evaluation stops at the first hit. R6 only runs
    // when R1..R5 found nothing.
    std::vector<std::string> zero_rules(FiniteGroup const& g, bool all);

    std::vector<std::string> zero_rules(FiniteGroup const& g, bool all) {
      std::vector<std::string> hits;
      auto done = [&] { return !all && !hits.empty(); };

      if (is_abelian(g)) {
        hits.emplace_back("R1 abelian");
      }
      if (!done() && is_p_group_of_order_at_most_p4(g)) {
        hits.push_back("R2 |G|=" + order_text(g) + " is p^k with k<=4");
      }
      if (!done() && is_extraspecial(g)) {
        hits.emplace_back("R3 extraspecial (|Z(G)| prime, G/Z(G) elementary abelian)");
      }
      if (!done() && has_abelian_derived_and_cyclic_abelianization(g)) {
        hits.emplace_back("R4 G' abelian and G/G' cyclic");
      }
      if (!done() && !is_p_group(g)) {
        bool        ok = true;
        std::string detail;
        for (auto [p, e] : order_factors(g)) {
          auto sylow = as_group(g, sylow_subgroup(g, p), "sylow");
          auto sub   = zero_rules(sylow, false);
          if (sub.empty()) {
            ok = false;
            break;
          }
          if (!detail.empty()) {
            detail += ", ";
          }
          detail += "P" + std::to_string(p) + ": " + sub.front();
        }
        if (ok) {
          hits.push_back("R5 every Sylow subgroup has B0=0 (" + detail + ")");
        }
      }
      if (hits.empty()) {
        if (auto f = direct_factorization(g)) {
          auto h = as_group(g, f->first, "H");
          auto k = as_group(g, f->second, "K");
          auto rh = zero_rules(h, false);
          auto rk = zero_rules(k, false);
          if (!rh.empty() && !rk.empty()) {
            hits.push_back("R6 G = H x K with |H|=" + std::to_string(h.order())
                           + " (" + rh.front() + "), |K|="
                           + std::to_string(k.order()) + " (" + rk.front()
                           + ")");
          }
        }
      }
      return hits;
    }

    std::string join(std::vector<std::string> const& xs, std::string const& sep) {
      std::string out;
      for (auto const& x : xs) {
        if (!out.empty()) {
          out += sep;
        }
        out += x;
      }
      return out;
    }
  }  // namespace

  bool is_p_group_of_order_at_most_p4(FiniteGroup const& g) {
    auto f = order_factors(g);
    return f.size() == 1 && f.front().second <= 4;
  }

  bool is_extraspecial(FiniteGroup const& g) {
    Subgroup z = center(g);
    if (z.size() == g.order() || !is_prime(static_cast<long>(z.size()))) {
      return false;
    }
    auto const p = static_cast<long>(z.size());
    for (Element a : g.generators()) {
      for (Element b : g.generators()) {
        if (!z.contains(g.commutator(a, b))) {
          return false;
        }
      }
    }
    for (Element x = 0; x < g.order(); ++x) {
      if (!z.contains(g.pow(x, p))) {
        return false;
      }
    }
    return true;
  }

  bool has_abelian_derived_and_cyclic_abelianization(FiniteGroup const& g) {
    Subgroup d = derived_subgroup(g);
    if (!is_abelian(g, d)) {
      return false;
    }
    std::size_t const index = g.order() / d.size();
    for (Element x = 0; x < g.order(); ++x) {
      std::size_t k = 1;
      Element     y = x;
      while (!d.contains(y)) {
        y = g.mul(y, x);
        ++k;
      }
      if (k == index) {
        return true;
      }
    }
    return false;
  }

  std::optional<std::pair<Subgroup, Subgroup>> direct_factorization(FiniteGroup const& g) {
    std::vector<Subgroup>              normals;
    std::set<std::vector<Element>>     seen;
    auto add = [&](Subgroup n) {
      if (n.size() > 1 && n.size() < g.order() && seen.insert(n.elements).second) {
        normals.push_back(std::move(n));
      }
    };
    for (Element x = 1; x < g.order(); ++x) {
      Element gens[] = {x};
      add(normal_closure(g, gens));
    }
    // joins of pairs find normal subgroups that need two generators
    if (normals.size() <= 64) {
      std::size_t const m = normals.size();
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
          std::vector<Element> gens = generators_of(g, normals[i]);
          auto                 more = generators_of(g, normals[j]);
          gens.insert(gens.end(), more.begin(), more.end());
          add(subgroup_closure(g, gens));
        }
      }
    }
    for (std::size_t i = 0; i < normals.size(); ++i) {
      for (std::size_t j = i + 1; j < normals.size(); ++j) {
        auto const& h = normals[i];
        auto const& k = normals[j];
        if (h.size() * k.size() != g.order()) {
          continue;
        }
        bool trivial_meet = std::none_of(h.elements.begin() + 1,
                                         h.elements.end(),
                                         [&k](Element x) { return k.contains(x); });
        if (trivial_meet) {
          // normal with trivial intersection: they commute elementwise
          return std::make_pair(h, k);
        }
      }
    }
    return std::nullopt;
  }

  B0Status b0_status(FiniteGroup const& g, std::optional<B0Value> override_value) {
    B0Status status;
    auto     hits = zero_rules(g, true);
    if (!hits.empty()) {
      status.value  = B0Value::zero;
      status.reason = join(hits, "; ");
      if (override_value == B0Value::nonzero) {
        status.warning = "asserted nonzero conflicts with derived zero; keeping zero";
      }
      return status;
    }
    if (override_value && *override_value != B0Value::unknown) {
      status.value  = *override_value;
      status.reason = "asserted";
      return status;
    }
    status.value  = B0Value::unknown;
    status.reason = "no rule applies (tried R1 abelian, R2 p^k k<=4, R3 extraspecial, "
                    "R4 metabelian with cyclic abelianization, R5 Sylow subgroups, "
                    "R6 direct product)";
    return status;
  }

  ExtendVerdict samperton_verdict(FiniteGroup const& g, B0Status const& s) {
    switch (s.value) {
      case B0Value::zero:
        return {ExtendValue::all_free_actions_extend,
                "B0(G)=0: every free action extends (" + s.reason + ")"};
      case B0Value::nonzero: {
        std::size_t inv = count_involutions(g);
        if (inv <= 1) {
          return {ExtendValue::exists_non_extendable_free_action,
                  "B0(G)!=0 and G has " + std::to_string(inv)
                      + " involutions: some free action does not extend"};
        }
        return {ExtendValue::unknown,
                "B0(G)!=0 but G has " + std::to_string(inv)
                    + " involutions; no conclusion"};
      }
      case B0Value::unknown:
        break;
    }
    return {ExtendValue::unknown, "B0(G) unknown"};
  }

  std::string to_string(B0Value v) {
    switch (v) {
      case B0Value::zero:
        return "zero";
      case B0Value::nonzero:
        return "nonzero";
      case B0Value::unknown:
        break;
    }
    return "unknown";
  }

  std::string to_string(ExtendValue v) {
    switch (v) {
      case ExtendValue::all_free_actions_extend:
        return "all-free-actions-extend";
      case ExtendValue::exists_non_extendable_free_action:
        return "exists-non-extendable-free-action";
      case ExtendValue::unknown:
        break;
    }
    return "unknown";
  }

  std::optional<B0Value> parse_b0_value(std::string const& text) {
    if (text == "zero") {
      return B0Value::zero;
    }
    if (text == "nonzero") {
      return B0Value::nonzero;
    }
    return std::nullopt;
  }

}  // namespace hbody
