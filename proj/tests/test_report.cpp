#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <sstream>

#include "hbody/report.hpp"
#include "test_helpers.hpp"

using namespace hbody;

namespace {
  struct Run {
    int         code;
    std::string out;
    std::string err;

    [[nodiscard]] bool has(std::string const& line) const {
      return out.find(line) != std::string::npos;
    }
  };

  Run run(std::string const& cmd, std::string const& config, CommandOptions opts = {}) {
    RunConfig c = config.empty() ? RunConfig{} : parse_config(config);
    apply_params(c.params, opts);
    std::ostringstream out, err;
    int                code = run_command(cmd, c, opts, out, err);
    return {code, out.str(), err.str()};
  }

  RunConfig shipped(char const* name) {
    return load_config(std::string(HBODY_CONFIG_DIR) + "/" + name + ".cfg");
  }

  Run run_shipped(std::string const& cmd, char const* name, CommandOptions opts = {}) {
    auto c = shipped(name);
    apply_params(c.params, opts);
    std::ostringstream out, err;
    int                code = run_command(cmd, c, opts, out, err);
    return {code, out.str(), err.str()};
  }

  constexpr char const* example1 =
      "group ex1\nkind semidirect_pq p=11 q=5 r=3\ntheta x1=a y1=b x2=b^-1 y2=b*a^-1\n";
}  // namespace

TEST_CASE("provenance flags", "[report]") {
  CHECK(provenance(std::nullopt, 5) == "derived");
  CHECK(provenance(5, 5) == "paper-match");
  CHECK(provenance(13446, 29922) == "paper-mismatch paper=13446");
}

TEST_CASE("orbit", "[report]") {
  auto r0 = run("orbit", "", {.depth = 0});
  CHECK(r0.code == exit_ok);
  CHECK(r0.has("count=2 depth=0 paper-match"));
  auto r2 = run("orbit", "", {.depth = 2});
  CHECK(r2.has("level depth=1 new=3 derived"));
  CHECK(r2.has("count=14 depth=2 derived"));
  auto r9 = run("orbit", "");
  CHECK(r9.has("count=29922 depth=9 paper-mismatch paper=13446"));
  auto capped = run("orbit", "", {.word_cap = 50});
  CHECK(capped.code == exit_cap);
  CHECK(capped.has("status=partial"));
  CHECK(capped.has("unverified"));
}

TEST_CASE("check", "[report]") {
  auto ok = run("check", example1);
  CHECK(ok.code == exit_ok);
  CHECK(ok.has("genus=56 derived"));
  CHECK(ok.has("path=s4*s4*s3*s3 depth=3"));
  CHECK(ok.has("b0=zero"));
  CHECK(ok.has("samperton=all-free-actions-extend"));

  auto shallow = run("check", example1, {.depth = 1});
  CHECK(shallow.code == exit_inconclusive);
  CHECK(shallow.has("no-witness depth=1 inconclusive-negative"));

  auto bad = run("check", "group g\nkind semidirect_pq p=11 q=5 r=2\ntheta x1=a y1=b x2=1 y2=1\n");
  CHECK(bad.code == exit_invalid);
  CHECK(bad.err.find("r^q = 10") != std::string::npos);

  auto not_epi = run("check", "group g\nkind cyclic n=5\ntheta x1=1 y1=1 x2=1 y2=1\n");
  CHECK(not_epi.code == exit_invalid);
  CHECK(not_epi.err.find("not generating") != std::string::npos);

  CHECK(run("check", "group g\nkind cyclic n=5\n").code == exit_usage);
  CHECK(run("no-such-command", example1).code == exit_usage);
}

TEST_CASE("table1", "[report]") {
  auto t = run("table1", "");
  CHECK(t.code == exit_ok);
  CHECK(t.has("rows=14 verified=14 paper-match"));
}

TEST_CASE("counts", "[report]") {
  auto h = run_shipped("counts", "heisenberg3");
  CHECK(h.code == exit_ok);
  CHECK(h.has("noncommuting=432 paper-match"));
  CHECK(h.has("burnside-identity=true"));
  CHECK(h.has("automorphisms=432"));
  CHECK(h.has("aut_orbits=1 paper-match"));
  CHECK(h.has("partner_pairs=216 paper-mismatch paper=189"));

  auto capped = run_shipped("counts", "heisenberg3", {.aut_cap = 5});
  CHECK(capped.code == exit_cap);
  CHECK(capped.has("automorphisms=unverified"));

  auto z = run("counts", "group z\nkind cyclic n=3\n");
  CHECK(z.has("noncommuting=0 derived"));
  CHECK(z.has("partner_pairs=8 derived"));
}

TEST_CASE("quadruple", "[report]") {
  auto q = run_shipped("quadruple", "heisenberg3");
  CHECK(q.code == exit_ok);
  CHECK(q.has("commuting=true generating=true"));
  CHECK(q.has("in-kernel=true depth=0"));
}

TEST_CASE("kernel-orbit", "[report]") {
  auto a = run_shipped("kernel-orbit", "abelian");
  CHECK(a.code == exit_ok);
  CHECK(a.has("kernel-orbit r=90 derived"));
  CHECK(a.has("intersection-avoids-c0 depth=9 result=false"));
  CHECK(a.has("path=base"));

  auto capped = run_shipped("kernel-orbit", "heisenberg3", {.closure_cap = 10});
  CHECK(capped.code == exit_cap);
  CHECK(capped.has("unverified"));
}

TEST_CASE("orbit cache through the commands", "[report][cache]") {
  auto path = std::filesystem::temp_directory_path() / "hbody_report_cache.txt";
  std::filesystem::remove(path);
  CommandOptions opts{.depth = 4, .cache = path.string()};
  auto           first = obtain_orbit(opts);
  REQUIRE(std::filesystem::exists(path));
  CHECK(load_cache(path) == first);
  CHECK(obtain_orbit(opts) == first);
  // A cache for another depth is replaced rather than trusted.
  opts.depth = 5;
  auto deeper = obtain_orbit(opts);
  CHECK(deeper.depth() == 5);
  CHECK(load_cache(path).depth() == 5);
  std::filesystem::remove(path);
}
