// Line-oriented run configuration for the command-line tool.
//
//   # comment
//   group <name>
//   kind cyclic n=<int>
//   kind semidirect_pq p=<int> q=<int> r=<int>
//   kind heisenberg p=<int>
//   kind abelian m=<int> n=<int>
//   kind presentation
//   gens <name> <name> ...
//   rel <word>                       (one per relator)
//   known_b0 zero|nonzero
//   theta x1=<word> y1=<word> x2=<word> y2=<word>
//   paper <key>=<int> ...            (published values to compare against)
//   depth <int> | cache <path> | coset_cap <int> | aut_cap <int> | closure_cap <int>
//
// Words inside `theta` must not contain blanks; use `*` between factors.

#ifndef HBODY_CONFIG_HPP_
#define HBODY_CONFIG_HPP_

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hbody/b0.hpp"
#include "hbody/group.hpp"
#include "hbody/todd_coxeter.hpp"

namespace hbody {

  struct GroupSpec {
    enum class Kind { cyclic, semidirect_pq, heisenberg, abelian, presentation };

    std::string                 name;
    Kind                        kind = Kind::cyclic;
    std::map<std::string, long> params;
    GeneratorNames              gens;
    std::vector<std::string>    relators;
    std::optional<B0Value>      known_b0;
  };

  struct RunParams {
    std::optional<std::size_t> depth;
    std::optional<std::string> cache;
    std::optional<std::size_t> coset_cap;
    std::optional<std::size_t> aut_cap;
    std::optional<std::size_t> closure_cap;
  };

  struct RunConfig {
    std::optional<GroupSpec>                  group;
    std::optional<std::array<std::string, 4>> theta;
    std::map<std::string, long>               paper;
    RunParams                                 params;
  };

  //! Throws ConfigError naming the line.
  RunConfig parse_config(std::string_view text);
  RunConfig load_config(std::string const& file);

  //! Canonical text: fixed line order, words in reduced form.
  std::string normalized_text(RunConfig const& c);

  //! Generator names the group will carry once built.
  GeneratorNames generator_names(GroupSpec const& spec);

  FiniteGroup build_group(GroupSpec const& spec, CosetOptions const& opts = {});

  std::string to_string(GroupSpec::Kind k);

}  // namespace hbody

#endif  // HBODY_CONFIG_HPP_
