// Subcommands of the command-line tool. Each writes a line-oriented
// key=value report; numeric claims carry a provenance flag:
//   paper-match              equal to a published value
//   paper-mismatch paper=N   differs from the published value N
//   derived                  computed here, nothing to compare against
//   unverified               a cap stopped the computation

#ifndef HBODY_REPORT_HPP_
#define HBODY_REPORT_HPP_

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>

#include "hbody/config.hpp"
#include "hbody/orbit.hpp"

namespace hbody {

  enum ExitCode : int {
    exit_ok           = 0,
    exit_usage        = 2,
    exit_inconclusive = 3,
    exit_invalid      = 4,
    exit_cap          = 5,
  };

  struct CommandOptions {
    std::size_t                depth = 9;
    std::optional<std::string> cache;
    std::size_t                coset_cap   = 50'000;
    std::size_t                aut_cap     = 200'000'000;
    std::size_t                closure_cap = 200'000;
    std::size_t                word_cap    = 10'000'000;
    //! counts: report every Aut-class of non-commuting pairs.
    bool per_class = false;
    //! kernel-orbit: print the per-word certificate appendix.
    bool certificates = true;
  };

  //! Copies the values set in a config file over `opts`.
  void apply_params(RunParams const& p, CommandOptions& opts);

  //! "paper-match", "paper-mismatch paper=N" or "derived".
  std::string provenance(std::optional<long> paper, long value);

  //! Loads the cache at opts.cache when it matches the requested depth and
  //! is complete; otherwise generates the set and, if a path is given,
  //! writes it there.
  OrbitSet obtain_orbit(CommandOptions const& opts);

  int cmd_orbit(CommandOptions const& opts, std::ostream& out);
  int cmd_check(RunConfig const& c, CommandOptions const& opts, std::ostream& out);
  int cmd_table1(CommandOptions const& opts, std::ostream& out);
  int cmd_counts(RunConfig const& c, CommandOptions const& opts, std::ostream& out);
  int cmd_quadruple(RunConfig const& c, CommandOptions const& opts, std::ostream& out);
  int cmd_kernel_orbit(RunConfig const& c, CommandOptions const& opts, std::ostream& out);

  //! Dispatches by name and maps exceptions to exit codes, writing
  //! `error: ...` to `err`.
  int run_command(std::string const&    name,
                  RunConfig const&      c,
                  CommandOptions const& opts,
                  std::ostream&         out,
                  std::ostream&         err);

}  // namespace hbody

#endif  // HBODY_REPORT_HPP_
