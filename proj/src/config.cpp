#include "hbody/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "hbody/error.hpp"

namespace hbody {

  namespace {
    std::vector<std::string> split(std::string_view line) {
      std::vector<std::string> out;
      std::istringstream       in{std::string(line)};
      for (std::string tok; in >> tok;) {
        out.push_back(tok);
      }
      return out;
    }

    long to_long(std::string const& text, std::size_t line) {
      long value = 0;
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
      if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw ConfigError("expected an integer, got '" + text + "'", line);
      }
      return value;
    }

    std::size_t to_size(std::string const& text, std::size_t line) {
      long v = to_long(text, line);
      if (v < 0) {
        throw ConfigError("expected a non-negative integer, got '" + text + "'", line);
      }
      return static_cast<std::size_t>(v);
    }

    std::pair<std::string, std::string> key_value(std::string const& tok, std::size_t line) {
      auto eq = tok.find('=');
      if (eq == std::string::npos || eq == 0) {
        throw ConfigError("expected key=value, got '" + tok + "'", line);
      }
      return {tok.substr(0, eq), tok.substr(eq + 1)};
    }

    std::vector<std::string> const& kind_keys(GroupSpec::Kind k) {
      static std::vector<std::string> const none, n{"n"}, pqr{"p", "q", "r"}, p{"p"},
          mn{"m", "n"};
      switch (k) {
        case GroupSpec::Kind::cyclic:
          return n;
        case GroupSpec::Kind::semidirect_pq:
          return pqr;
        case GroupSpec::Kind::heisenberg:
          return p;
        case GroupSpec::Kind::abelian:
          return mn;
        case GroupSpec::Kind::presentation:
          break;
      }
      return none;
    }

    GroupSpec::Kind parse_kind(std::string const& text, std::size_t line) {
      for (auto k : {GroupSpec::Kind::cyclic, GroupSpec::Kind::semidirect_pq,
                     GroupSpec::Kind::heisenberg, GroupSpec::Kind::abelian,
                     GroupSpec::Kind::presentation}) {
        if (to_string(k) == text) {
          return k;
        }
      }
      throw ConfigError("unknown group kind '" + text + "'", line);
    }

    // Canonical word text without blanks.
    std::string compact(std::string const& text, GeneratorNames const& names) {
      std::string s = print_word(parse_word(text, names), names);
      std::replace(s.begin(), s.end(), ' ', '*');
      return s;
    }
  }  // namespace

  std::string to_string(GroupSpec::Kind k) {
    switch (k) {
      case GroupSpec::Kind::cyclic:
        return "cyclic";
      case GroupSpec::Kind::semidirect_pq:
        return "semidirect_pq";
      case GroupSpec::Kind::heisenberg:
        return "heisenberg";
      case GroupSpec::Kind::abelian:
        return "abelian";
      case GroupSpec::Kind::presentation:
        break;
    }
    return "presentation";
  }

  RunConfig parse_config(std::string_view text) {
    RunConfig          c;
    bool               have_kind = false;
    std::istringstream in{std::string(text)};
    std::size_t        lineno = 0;
    for (std::string raw; std::getline(in, raw);) {
      ++lineno;
      if (auto hash = raw.find('#'); hash != std::string::npos) {
        raw.erase(hash);
      }
      auto tok = split(raw);
      if (tok.empty()) {
        continue;
      }
      std::string const& key  = tok[0];
      auto               need = [&](std::size_t n) {
        if (tok.size() != n + 1) {
          throw ConfigError("'" + key + "' takes " + std::to_string(n) + " argument(s)",
                            lineno);
        }
      };
      auto spec = [&]() -> GroupSpec& {
        if (!c.group) {
          throw ConfigError("'" + key + "' before 'group'", lineno);
        }
        return *c.group;
      };

      if (key == "group") {
        need(1);
        if (c.group) {
          throw ConfigError("second 'group' line", lineno);
        }
        c.group.emplace();
        c.group->name = tok[1];
      } else if (key == "kind") {
        if (tok.size() < 2) {
          throw ConfigError("'kind' needs a group kind", lineno);
        }
        auto& g = spec();
        if (have_kind) {
          throw ConfigError("second 'kind' line", lineno);
        }
        have_kind = true;
        g.kind    = parse_kind(tok[1], lineno);
        for (std::size_t i = 2; i < tok.size(); ++i) {
          auto [k, v]     = key_value(tok[i], lineno);
          auto const& ok  = kind_keys(g.kind);
          if (std::find(ok.begin(), ok.end(), k) == ok.end()) {
            throw ConfigError("kind " + tok[1] + " has no parameter '" + k + "'", lineno);
          }
          g.params[k] = to_long(v, lineno);
        }
        for (auto const& k : kind_keys(g.kind)) {
          if (!g.params.count(k)) {
            throw ConfigError("kind " + tok[1] + " needs " + k + "=", lineno);
          }
        }
      } else if (key == "gens") {
        auto& g = spec();
        if (g.kind != GroupSpec::Kind::presentation || !have_kind) {
          throw ConfigError("'gens' needs 'kind presentation' first", lineno);
        }
        if (!g.gens.empty()) {
          throw ConfigError("second 'gens' line", lineno);
        }
        g.gens.assign(tok.begin() + 1, tok.end());
        if (g.gens.empty()) {
          throw ConfigError("'gens' needs at least one name", lineno);
        }
      } else if (key == "rel") {
        auto& g = spec();
        if (g.gens.empty()) {
          throw ConfigError("'rel' before 'gens'", lineno);
        }
        auto pos = raw.find("rel");
        std::string word = raw.substr(pos + 3);
        try {
          parse_word(word, g.gens);
        } catch (ParseError const& e) {
          throw ConfigError(e.what(), lineno);
        }
        g.relators.push_back(word);
      } else if (key == "known_b0") {
        need(1);
        auto v = parse_b0_value(tok[1]);
        if (!v) {
          throw ConfigError("known_b0 takes zero or nonzero", lineno);
        }
        spec().known_b0 = v;
      } else if (key == "theta") {
        if (c.theta) {
          throw ConfigError("second 'theta' line", lineno);
        }
        std::array<std::string, 4>       words;
        std::array<bool, 4>              seen{};
        static constexpr char const* names[] = {"x1", "y1", "x2", "y2"};
        for (std::size_t i = 1; i < tok.size(); ++i) {
          auto [k, v] = key_value(tok[i], lineno);
          auto it     = std::find(std::begin(names), std::end(names), k);
          if (it == std::end(names)) {
            throw ConfigError("theta has no generator '" + k + "'", lineno);
          }
          auto j = static_cast<std::size_t>(it - std::begin(names));
          if (seen[j]) {
            throw ConfigError("theta sets " + k + " twice", lineno);
          }
          seen[j]  = true;
          words[j] = v;
        }
        for (std::size_t j = 0; j < 4; ++j) {
          if (!seen[j]) {
            throw ConfigError("theta needs " + std::string(names[j]) + "=", lineno);
          }
        }
        c.theta = words;
      } else if (key == "paper") {
        for (std::size_t i = 1; i < tok.size(); ++i) {
          auto [k, v] = key_value(tok[i], lineno);
          c.paper[k]  = to_long(v, lineno);
        }
      } else if (key == "depth") {
        need(1);
        c.params.depth = to_size(tok[1], lineno);
      } else if (key == "cache") {
        need(1);
        c.params.cache = tok[1];
      } else if (key == "coset_cap") {
        need(1);
        c.params.coset_cap = to_size(tok[1], lineno);
      } else if (key == "aut_cap") {
        need(1);
        c.params.aut_cap = to_size(tok[1], lineno);
      } else if (key == "closure_cap") {
        need(1);
        c.params.closure_cap = to_size(tok[1], lineno);
      } else {
        throw ConfigError("unknown key '" + key + "'", lineno);
      }
    }
    if (c.group && !have_kind) {
      throw ConfigError("group " + c.group->name + " has no 'kind' line", lineno);
    }
    if (c.group && c.group->kind == GroupSpec::Kind::presentation && c.group->gens.empty()) {
      throw ConfigError("presentation without 'gens'", lineno);
    }
    if (c.theta) {
      if (!c.group) {
        throw ConfigError("theta without a group", lineno);
      }
      auto names = generator_names(*c.group);
      for (auto const& w : *c.theta) {
        try {
          parse_word(w, names);
        } catch (ParseError const& e) {
          throw ConfigError(std::string("theta: ") + e.what(), lineno);
        }
      }
    }
    return c;
  }

  RunConfig load_config(std::string const& file) {
    std::ifstream in(file);
    if (!in) {
      throw InvalidArgument("cannot read config " + file);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
  }

  std::string normalized_text(RunConfig const& c) {
    std::ostringstream out;
    if (c.group) {
      auto const& g = *c.group;
      out << "group " << g.name << '\n';
      out << "kind " << to_string(g.kind);
      for (auto const& k : kind_keys(g.kind)) {
        out << ' ' << k << '=' << g.params.at(k);
      }
      out << '\n';
      if (g.kind == GroupSpec::Kind::presentation) {
        out << "gens";
        for (auto const& n : g.gens) {
          out << ' ' << n;
        }
        out << '\n';
        for (auto const& r : g.relators) {
          out << "rel " << print_word(parse_word(r, g.gens), g.gens) << '\n';
        }
      }
      if (g.known_b0) {
        out << "known_b0 " << to_string(*g.known_b0) << '\n';
      }
      if (c.theta) {
        auto names = generator_names(g);
        out << "theta x1=" << compact((*c.theta)[0], names)
            << " y1=" << compact((*c.theta)[1], names)
            << " x2=" << compact((*c.theta)[2], names)
            << " y2=" << compact((*c.theta)[3], names) << '\n';
      }
    }
    for (auto const& [k, v] : c.paper) {
      out << "paper " << k << '=' << v << '\n';
    }
    if (c.params.depth) {
      out << "depth " << *c.params.depth << '\n';
    }
    if (c.params.cache) {
      out << "cache " << *c.params.cache << '\n';
    }
    if (c.params.coset_cap) {
      out << "coset_cap " << *c.params.coset_cap << '\n';
    }
    if (c.params.aut_cap) {
      out << "aut_cap " << *c.params.aut_cap << '\n';
    }
    if (c.params.closure_cap) {
      out << "closure_cap " << *c.params.closure_cap << '\n';
    }
    return out.str();
  }

  GeneratorNames generator_names(GroupSpec const& spec) {
    switch (spec.kind) {
      case GroupSpec::Kind::cyclic:
        return {"a"};
      case GroupSpec::Kind::semidirect_pq:
      case GroupSpec::Kind::abelian:
        return {"a", "b"};
      case GroupSpec::Kind::heisenberg:
        return {"x", "y"};
      case GroupSpec::Kind::presentation:
        break;
    }
    return spec.gens;
  }

  FiniteGroup build_group(GroupSpec const& spec, CosetOptions const& opts) {
    auto param = [&spec](char const* k) { return spec.params.at(k); };
    switch (spec.kind) {
      case GroupSpec::Kind::cyclic:
        if (param("n") < 1) {
          throw InvalidArgument("cyclic group needs n >= 1");
        }
        return cyclic(static_cast<std::size_t>(param("n")));
      case GroupSpec::Kind::semidirect_pq:
        return semidirect_pq(param("p"), param("q"), param("r"));
      case GroupSpec::Kind::heisenberg:
        return heisenberg(param("p"));
      case GroupSpec::Kind::abelian:
        if (param("m") < 1 || param("n") < 1) {
          throw InvalidArgument("abelian group needs m, n >= 1");
        }
        return abelian2(static_cast<std::size_t>(param("m")),
                        static_cast<std::size_t>(param("n")));
      case GroupSpec::Kind::presentation:
        break;
    }
    return coset_enumerate(make_presentation(spec.gens, spec.relators), spec.name, opts);
  }

}  // namespace hbody
