#include "hbody/report.hpp"

#include <algorithm>
#include <filesystem>
#include <map>
#include <memory>
#include <set>

#include "hbody/automorphism.hpp"
#include "hbody/b0.hpp"
#include "hbody/error.hpp"
#include "hbody/kernel_orbit.hpp"
#include "hbody/surface_hom.hpp"
#include "hbody/twist.hpp"

namespace hbody {

  namespace {
    constexpr std::size_t published_orbit_size = 13'446;

    std::optional<long> paper_value(RunConfig const& c, std::string const& key) {
      auto it = c.paper.find(key);
      return it == c.paper.end() ? std::nullopt : std::optional<long>(it->second);
    }

    std::string quoted(std::string const& s) {
      return "\"" + s + "\"";
    }

    char const* boolean(bool b) {
      return b ? "true" : "false";
    }

    GroupSpec const& require_group(RunConfig const& c) {
      if (!c.group) {
        throw UsageError("config declares no group");
      }
      return *c.group;
    }

    std::array<std::string, 4> const& require_theta(RunConfig const& c) {
      if (!c.theta) {
        throw UsageError("config declares no theta");
      }
      return *c.theta;
    }

    GroupPtr make_group(RunConfig const& c, CommandOptions const& opts) {
      CosetOptions co;
      co.coset_cap = opts.coset_cap;
      return std::make_shared<FiniteGroup const>(build_group(require_group(c), co));
    }

    void group_header(FiniteGroup const& g, RunConfig const& c, std::ostream& out) {
      out << "group=" << c.group->name << " kind=" << to_string(c.group->kind) << '\n';
      out << "order=" << g.order() << ' ' << provenance(paper_value(c, "order"), static_cast<long>(g.order()))
          << '\n';
    }

    void theta_line(RunConfig const& c, std::ostream& out) {
      auto names = generator_names(*c.group);
      out << "theta";
      char const* keys[] = {"x1", "y1", "x2", "y2"};
      for (std::size_t i = 0; i < 4; ++i) {
        std::string w = print_word(parse_word((*c.theta)[i], names), names);
        std::replace(w.begin(), w.end(), ' ', '*');
        out << ' ' << keys[i] << '=' << w;
      }
      out << '\n';
    }

    void b0_lines(FiniteGroup const& g, std::optional<B0Value> known, std::ostream& out) {
      auto status = b0_status(g, known);
      out << "b0=" << to_string(status.value) << " reason=" << quoted(status.reason) << '\n';
      if (status.warning) {
        out << "b0-warning=" << quoted(*status.warning) << '\n';
      }
      auto verdict = samperton_verdict(g, status);
      out << "samperton=" << to_string(verdict.value) << " basis=" << quoted(verdict.basis)
          << '\n';
    }

    bool sylow_subgroups_abelian(FiniteGroup const& g) {
      for (auto [p, e] : order_factors(g)) {
        if (!is_abelian(g, sylow_subgroup(g, p))) {
          return false;
        }
      }
      return true;
    }

    std::optional<std::vector<Automorphism>> try_automorphisms(FiniteGroup const&    g,
                                                               CommandOptions const& opts) {
      AutomorphismOptions ao;
      ao.node_cap = opts.aut_cap;
      try {
        return automorphisms(g, ao);
      } catch (CapExceeded const&) {
        return std::nullopt;
      }
    }
  }  // namespace

  void apply_params(RunParams const& p, CommandOptions& opts) {
    if (p.depth) {
      opts.depth = *p.depth;
    }
    if (p.cache) {
      opts.cache = p.cache;
    }
    if (p.coset_cap) {
      opts.coset_cap = *p.coset_cap;
    }
    if (p.aut_cap) {
      opts.aut_cap = *p.aut_cap;
    }
    if (p.closure_cap) {
      opts.closure_cap = *p.closure_cap;
    }
  }

  std::string provenance(std::optional<long> paper, long value) {
    if (!paper) {
      return "derived";
    }
    if (*paper == value) {
      return "paper-match";
    }
    return "paper-mismatch paper=" + std::to_string(*paper);
  }

  OrbitSet obtain_orbit(CommandOptions const& opts) {
    OrbitOptions oo;
    oo.depth    = opts.depth;
    oo.word_cap = opts.word_cap;
    if (opts.cache && std::filesystem::exists(*opts.cache)) {
      try {
        OrbitSet s = load_cache(*opts.cache);
        if (s.depth() == oo.depth && s.sigmas() == oo.sigmas && s.complete()) {
          return s;
        }
      } catch (CacheError const&) {
        // stale or damaged; regenerate below
      }
    }
    OrbitSet s = generate_c0(oo);
    if (opts.cache) {
      save_cache(s, *opts.cache);
    }
    if (!s.complete()) {
      throw CapExceeded("orbit word", opts.word_cap);
    }
    return s;
  }

  ////////////////////////////////////////////////////////////////////////
  // orbit
  ////////////////////////////////////////////////////////////////////////

  int cmd_orbit(CommandOptions const& opts, std::ostream& out) {
    OrbitOptions oo;
    oo.depth    = opts.depth;
    oo.word_cap = opts.word_cap;
    OrbitSet s  = generate_c0(oo);
    if (opts.cache) {
      save_cache(s, *opts.cache);
      out << "cache=" << *opts.cache << '\n';
    }
    std::map<std::size_t, std::size_t> by_depth;
    for (auto const& e : s.entries()) {
      ++by_depth[e.depth()];
    }
    for (auto [d, n] : by_depth) {
      out << "level depth=" << d << " new=" << n << " derived\n";
    }
    std::optional<long> paper;
    if (opts.depth == 0) {
      paper = 2;
    } else if (opts.depth == 9) {
      paper = static_cast<long>(published_orbit_size);
    }
    if (!s.complete()) {
      out << "status=partial word-cap=" << opts.word_cap << '\n';
      out << "count=" << s.size() << " depth=" << opts.depth << " unverified\n";
      return exit_cap;
    }
    out << "count=" << s.size() << " depth=" << opts.depth << ' '
        << provenance(paper, static_cast<long>(s.size())) << '\n';
    return exit_ok;
  }

  ////////////////////////////////////////////////////////////////////////
  // check
  ////////////////////////////////////////////////////////////////////////

  int cmd_check(RunConfig const& c, CommandOptions const& opts, std::ostream& out) {
    auto const& words = require_theta(c);
    auto        g     = make_group(c, opts);
    auto        theta = make_epimorphism(g, words);
    group_header(*g, c, out);
    theta_line(c, out);
    out << "genus=" << theta.genus() << " derived\n";

    OrbitSet s       = obtain_orbit(opts);
    Verdict  verdict = handlebody_witness(theta, s);
    int      code    = exit_ok;
    if (verdict.witness) {
      auto const& w = *verdict.witness;
      out << "extends-to-handlebody witness=" << quoted(print_word(w.witness))
          << " path=" << w.path_label() << " depth=" << (w.path.empty() ? 0 : w.path.size() - 1)
          << '\n';
    } else {
      out << "no-witness depth=" << verdict.searched_depth << " inconclusive-negative\n";
      code = exit_inconclusive;
    }
    b0_lines(*g, c.group->known_b0, out);
    return code;
  }

  ////////////////////////////////////////////////////////////////////////
  // table1
  ////////////////////////////////////////////////////////////////////////

  int cmd_table1(CommandOptions const& opts, std::ostream& out) {
    struct RowResult {
      bool        parses = false, in_c0 = false, kernel = false, commutator_live = false;
      std::string row_path, own_witness, own_path, error;
    };
    OrbitSet   s    = obtain_orbit(opts);
    auto       rows = table1_rows();
    std::vector<RowResult> results(rows.size());
    auto const n = static_cast<std::ptrdiff_t>(rows.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      auto const& row = rows[i];
      auto&       res = results[i];
      try {
        auto theta = example1_epimorphism(row.p, row.q, row.r);
        Word w     = parse_word(row.word);
        res.parses = true;
        if (auto const* e = s.find(w)) {
          res.in_c0    = true;
          res.row_path = path_label(e->path);
        }
        res.kernel          = theta.kills(w);
        res.commutator_live = !theta.kills(base_commutator());
        auto v              = handlebody_witness(theta, s);
        if (v.witness) {
          res.own_witness = print_word(v.witness->witness);
          res.own_path    = v.witness->path_label();
        }
      } catch (Error const& e) {
        res.error = e.what();
      }
    }
    std::size_t verified = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      auto const& row = rows[i];
      auto const& res = results[i];
      out << "row p=" << row.p << " q=" << row.q << " r=" << row.r
          << " parses=" << boolean(res.parses) << " in-c0=" << boolean(res.in_c0)
          << " kernel=" << boolean(res.kernel)
          << " commutator-nontrivial=" << boolean(res.commutator_live);
      if (res.in_c0) {
        out << " path=" << res.row_path;
      }
      if (!res.own_witness.empty()) {
        out << " own-witness=" << quoted(res.own_witness) << " own-path=" << res.own_path;
      } else if (res.error.empty()) {
        out << " own-witness=none";
      }
      if (!res.error.empty()) {
        out << " error=" << quoted(res.error);
      }
      bool ok = res.parses && res.in_c0 && res.kernel && res.commutator_live;
      verified += ok ? 1 : 0;
      out << " verified=" << boolean(ok) << '\n';
    }
    out << "rows=" << rows.size() << " verified=" << verified << ' '
        << provenance(static_cast<long>(rows.size()), static_cast<long>(verified)) << '\n';
    return exit_ok;
  }

  ////////////////////////////////////////////////////////////////////////
  // counts
  ////////////////////////////////////////////////////////////////////////

  int cmd_counts(RunConfig const& c, CommandOptions const& opts, std::ostream& out) {
    auto               g   = make_group(c, opts);
    FiniteGroup const& grp = *g;
    auto const         n   = static_cast<long>(grp.order());
    group_header(grp, c, out);

    auto noncommuting = static_cast<long>(noncommuting_pair_count(grp));
    auto classes      = static_cast<long>(conjugacy_class_count(grp));
    out << "noncommuting=" << noncommuting << ' '
        << provenance(paper_value(c, "noncommuting"), noncommuting) << '\n';
    out << "conjugacy_classes=" << classes << " derived\n";
    out << "burnside-identity=" << boolean(noncommuting + n * classes == n * n) << '\n';

    std::optional<AutomorphismGroup> auts;
    try {
      AutomorphismOptions ao;
      ao.node_cap = opts.aut_cap;
      auts        = automorphism_group(grp, ao);
    } catch (CapExceeded const&) {
    }
    std::vector<ElementPair> pairs;
    std::vector<ElementPair> reps;
    if (auts) {
      pairs = noncommuting_pairs(grp);
      auto labels = pair_orbit_representatives(grp, auts->generators, pairs);
      std::set<ElementPair> distinct(labels.begin(), labels.end());
      reps.assign(distinct.begin(), distinct.end());
      auto orbits = static_cast<long>(reps.size());
      out << "automorphisms=" << auts->order() << " generators=" << auts->generators.size()
          << " derived\n";
      out << "aut_orbits=" << orbits << ' ' << provenance(paper_value(c, "aut_orbits"), orbits)
          << '\n';
    } else {
      out << "automorphisms=unverified aut-cap=" << opts.aut_cap << '\n';
      out << "aut_orbits=unverified\n";
    }

    Element     a = FiniteGroup::identity(), b = FiniteGroup::identity();
    std::string source = "identity";
    if (c.theta) {
      a      = grp.evaluate(parse_word((*c.theta)[0], grp.generator_names()));
      b      = grp.evaluate(parse_word((*c.theta)[1], grp.generator_names()));
      source = "theta";
    } else if (noncommuting > 0) {
      auto all = pairs.empty() ? noncommuting_pairs(grp) : pairs;
      a        = all.front().first;
      b        = all.front().second;
      source   = "first-noncommuting";
    }
    out << "pair a=" << quoted(element_text(grp, a)) << " b=" << quoted(element_text(grp, b))
        << " source=" << source << '\n';

    OrbitSet s         = obtain_orbit(opts);
    auto     partners  = partner_pairs(grp, a, b, false);
    auto     filtered  = partner_pairs(grp, a, b, true);
    auto     count     = [](auto const& v) { return static_cast<long>(v.size()); };
    out << "partner_pairs=" << count(partners) << ' '
        << provenance(paper_value(c, "partner_pairs"), count(partners)) << '\n';
    out << "partner_pairs_filtered=" << count(filtered) << ' '
        << provenance(paper_value(c, "partner_pairs_filtered"), count(filtered)) << '\n';

    std::vector<Epimorphism> thetas;
    thetas.reserve(partners.size());
    for (auto [r, t] : partners) {
      thetas.push_back(make_epimorphism(g, a, b, r, t));
    }
    auto                  hits = batch_witnesses(thetas, s);
    std::set<ElementPair> kept(filtered.begin(), filtered.end());
    long                  found = 0, found_filtered = 0;
    for (std::size_t i = 0; i < partners.size(); ++i) {
      if (hits[i]) {
        ++found;
        found_filtered += kept.count(partners[i]) ? 1 : 0;
      }
    }
    out << "witnesses=" << found << " of=" << count(partners) << ' '
        << provenance(paper_value(c, "witnesses"), found) << '\n';
    out << "witnesses_filtered=" << found_filtered << " of=" << count(filtered) << ' '
        << provenance(paper_value(c, "witnesses_filtered"), found_filtered) << '\n';
    if (found < count(partners)) {
      out << "no-witness-pairs=" << count(partners) - found << " depth=" << s.depth()
          << " inconclusive-negative\n";
    }

    if (opts.per_class) {
      if (!auts) {
        out << "per-class=unverified\n";
      } else {
        std::size_t index = 0, matching = 0;
        for (auto [ca, cb] : reps) {
          auto cls = partner_pairs(grp, ca, cb, false);
          std::vector<Epimorphism> ths;
          for (auto [r, t] : cls) {
            ths.push_back(make_epimorphism(g, ca, cb, r, t));
          }
          long wit = 0;
          for (auto const& h : batch_witnesses(ths, s)) {
            wit += h ? 1 : 0;
          }
          auto pp = paper_value(c, "partner_pairs");
          auto pw = paper_value(c, "witnesses");
          bool match = pp && pw && *pp == count(cls) && *pw == wit;
          matching += match ? 1 : 0;
          out << "class index=" << index++ << " a=" << quoted(element_text(grp, ca))
              << " b=" << quoted(element_text(grp, cb)) << " partner_pairs=" << count(cls)
              << " witnesses=" << wit << (match ? " paper-match" : " derived") << '\n';
        }
        out << "classes=" << reps.size() << " matching-paper=" << matching << '\n';
      }
    }
    return auts ? exit_ok : exit_cap;
  }

  ////////////////////////////////////////////////////////////////////////
  // quadruple
  ////////////////////////////////////////////////////////////////////////

  int cmd_quadruple(RunConfig const& c, CommandOptions const& opts, std::ostream& out) {
    auto g = make_group(c, opts);
    group_header(*g, c, out);
    auto q = quadruple_search(*g, opts.closure_cap);
    if (!q) {
      out << "quadruple=none search=exhausted\n";
      return exit_ok;
    }
    auto [s1, s2, s3, s4] = *q;
    out << "quadruple s1=" << quoted(element_text(*g, s1)) << " s2=" << quoted(element_text(*g, s2))
        << " s3=" << quoted(element_text(*g, s3)) << " s4=" << quoted(element_text(*g, s4))
        << " derived\n";
    bool commuting = g->commutator(s1, s2) == FiniteGroup::identity()
                     && g->commutator(s3, s4) == FiniteGroup::identity();
    bool generating = subgroup_closure(*g, {s1, s2, s3, s4}).size() == g->order();
    out << "commuting=" << boolean(commuting) << " generating=" << boolean(generating) << '\n';
    auto theta = make_epimorphism(g, s1, s2, s3, s4);
    out << "witness=" << quoted(print_word(base_commutator()))
        << " in-kernel=" << boolean(theta.kills(base_commutator())) << " depth=0\n";
    return exit_ok;
  }

  ////////////////////////////////////////////////////////////////////////
  // kernel-orbit
  ////////////////////////////////////////////////////////////////////////

  int cmd_kernel_orbit(RunConfig const& c, CommandOptions const& opts, std::ostream& out) {
    auto const& words = require_theta(c);
    auto        g     = make_group(c, opts);
    auto        theta = make_epimorphism(g, words);
    group_header(*g, c, out);
    theta_line(c, out);
    out << "commutator-in-kernel=" << boolean(theta.kills(base_commutator())) << '\n';

    auto auts = try_automorphisms(*g, opts);
    std::optional<KernelOrbit> orbit;
    if (auts) {
      try {
        KernelOrbitOptions ko;
        ko.class_cap = opts.closure_cap;
        orbit        = kernel_orbit(theta, *auts, ko);
      } catch (CapExceeded const&) {
      }
    }
    if (!orbit) {
      out << "kernel-orbit r=unverified\n";
      out << "intersection-avoids-c0 depth=" << opts.depth << " result=unverified\n";
      return exit_cap;
    }
    out << "kernel-orbit r=" << orbit->r() << ' '
        << provenance(paper_value(c, "kernel_orbit_r"), static_cast<long>(orbit->r())) << '\n';

    OrbitSet s   = obtain_orbit(opts);
    auto     res = intersection_avoids_c0(*orbit, s);
    out << "intersection-avoids-c0 depth=" << s.depth() << " result=" << boolean(res.avoids)
        << '\n';
    if (res.first_common) {
      auto const& e = s.entries()[*res.first_common];
      out << "common-kernel-word=" << quoted(print_word(e.word)) << " path=" << path_label(e.path)
          << '\n';
    }
    if (auto order = fiber_group_order(*orbit, opts.closure_cap)) {
      out << "fiber-group-order=" << *order << " derived\n";
    } else {
      out << "fiber-group-order=unverified closure-cap=" << opts.closure_cap << '\n';
    }
    bool sylow_abelian = sylow_subgroups_abelian(*g);
    out << "sylow-abelian=" << boolean(sylow_abelian) << '\n';
    b0_lines(*g, c.group->known_b0, out);
    if (res.avoids && sylow_abelian) {
      out << "fiber-action: extendable-but-not-to-handlebody (c0-certified) certificate-scope=c0-depth-"
          << s.depth() << '\n';
    }
    if (opts.certificates) {
      out << "[certificates]\n";
      for (std::size_t i = 0; i < res.certificate.size(); ++i) {
        out << "cert word=" << i << " class=";
        if (res.certificate[i]) {
          out << *res.certificate[i];
        } else {
          out << "none";
        }
        out << '\n';
      }
    }
    return exit_ok;
  }

  int run_command(std::string const&    name,
                  RunConfig const&      c,
                  CommandOptions const& opts,
                  std::ostream&         out,
                  std::ostream&         err) {
    try {
      if (name == "orbit") {
        return cmd_orbit(opts, out);
      }
      if (name == "check") {
        return cmd_check(c, opts, out);
      }
      if (name == "table1") {
        return cmd_table1(opts, out);
      }
      if (name == "counts") {
        return cmd_counts(c, opts, out);
      }
      if (name == "quadruple") {
        return cmd_quadruple(c, opts, out);
      }
      if (name == "kernel-orbit") {
        return cmd_kernel_orbit(c, opts, out);
      }
      throw UsageError("unknown subcommand '" + name + "'");
    } catch (UsageError const& e) {
      err << "error: " << e.what() << '\n';
      return exit_usage;
    } catch (CapExceeded const& e) {
      err << "error: " << e.what() << '\n';
      return exit_cap;
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return exit_invalid;
    }
  }

}  // namespace hbody
