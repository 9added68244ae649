#include <catch2/catch_amalgamated.hpp>

#include "hbody/error.hpp"
#include "hbody/kernel_orbit.hpp"
#include "test_helpers.hpp"

using namespace hbody;

namespace {
  OrbitSet const& depth9() {
    static OrbitSet const s = generate_c0({});
    return s;
  }

  GroupPtr share(FiniteGroup g) {
    return std::make_shared<FiniteGroup const>(std::move(g));
  }
}  // namespace

TEST_CASE("precompose follows the twist", "[kernel-orbit]") {
  auto theta = example1_epimorphism(11, 5, 3);
  std::mt19937_64 rng(1);
  for (int j = 1; j <= 10; ++j) {
    auto moved = precompose(theta, sigma(j));
    for (int trial = 0; trial < 50; ++trial) {
      auto w = testing::random_word(rng);
      REQUIRE(moved.evaluate(w) == theta.evaluate(apply(sigma(j), w)));
    }
    // sigma(5 + j) undoes sigma(j).
    int back = j <= 5 ? j + 5 : j - 5;
    CHECK(precompose(moved, sigma(back)) == theta);
  }
}

TEST_CASE("kernel_equal is an equivalence matching kernel membership", "[kernel-orbit][property]") {
  auto g     = share(heisenberg(3));
  auto auts  = automorphisms(*g);
  auto x = g->generators()[0], y = g->generators()[1];
  auto theta = make_epimorphism(g, x, y, g->inv(y), g->inv(x));
  std::vector<Epimorphism> sample{theta};
  for (int j = 1; j <= 10; ++j) {
    sample.push_back(precompose(theta, sigma(j)));
    sample.push_back(precompose(sample.back(), sigma(1 + j % 10)));
  }
  for (auto const& phi : {auts[5], auts[77]}) {
    auto const& t = theta.images();
    sample.emplace_back(g, ImageTuple{phi(t[0]), phi(t[1]), phi(t[2]), phi(t[3])});
  }
  std::mt19937_64 rng(2);
  std::vector<Word> probes;
  for (int i = 0; i < 400; ++i) {
    probes.push_back(testing::random_word(rng, 12));
  }
  for (auto const& e : depth9().entries()) {
    probes.push_back(e.word);
    if (probes.size() > 3000) break;
  }
  for (auto const& s : sample) {
    REQUIRE(kernel_equal(s, s, auts));
    for (auto const& t : sample) {
      bool eq = kernel_equal(s, t, auts);
      REQUIRE(eq == kernel_equal(t, s, auts));
      REQUIRE(eq == (canonical_tuple(s.images(), auts) == canonical_tuple(t.images(), auts)));
      if (eq) {
        for (auto const& w : probes) {
          REQUIRE(s.kills(w) == t.kills(w));
        }
      }
    }
  }
  auto other = share(heisenberg(3));
  CHECK_THROWS_AS(kernel_equal(theta, make_epimorphism(other, x, y, g->inv(y), g->inv(x)), auts),
                  InvalidArgument);
}

TEST_CASE("kernel orbit is closed under the twists", "[kernel-orbit]") {
  auto g     = share(heisenberg(3));
  auto auts  = automorphisms(*g);
  auto x = g->generators()[0], y = g->generators()[1];
  auto orbit = kernel_orbit(make_epimorphism(g, x, y, g->inv(y), g->inv(x)), auts);
  CHECK(orbit.r() == 320);
  REQUIRE(orbit.moves.size() == orbit.r());
  for (std::size_t i = 0; i < orbit.r(); ++i) {
    for (std::size_t j = 0; j < 10; ++j) {
      auto target = orbit.moves[i][j];
      REQUIRE(target < orbit.r());
      REQUIRE(kernel_equal(precompose(orbit.classes[i], sigma(static_cast<int>(j + 1))),
                           orbit.classes[target], auts));
    }
  }
  CHECK_THROWS_AS(kernel_orbit(orbit.source, auts, {.class_cap = 10}), CapExceeded);
}

TEST_CASE("intersection with the orbit set", "[kernel-orbit]") {
  SECTION("semidirect (11,5,3) avoids it") {
    auto theta = example1_epimorphism(11, 5, 3);
    auto auts  = automorphisms(theta.group());
    auto orbit = kernel_orbit(theta, auts);
    CHECK(orbit.r() == 7'488);
    auto res = intersection_avoids_c0(orbit, depth9());
    CHECK(res.avoids);
    CHECK_FALSE(res.first_common);
    for (std::size_t i = 0; i < res.certificate.size(); i += 101) {
      auto j = res.certificate[i];
      REQUIRE(j);
      REQUIRE_FALSE(orbit.classes[*j].kills(depth9().entries()[i].word));
    }
  }
  SECTION("abelian groups never do") {
    for (auto const& [m, n] : {std::pair{3, 3}, {2, 4}, {5, 5}}) {
      auto g     = share(abelian2(m, n));
      auto theta = make_epimorphism(g, {"a", "b", "1", "1"});
      auto orbit = kernel_orbit(theta, automorphisms(*g));
      auto res   = intersection_avoids_c0(orbit, depth9());
      CHECK_FALSE(res.avoids);
      CHECK(res.first_common == 0u);
    }
  }
}

TEST_CASE("intersection: parallel equals serial", "[kernel-orbit][property]") {
  auto g     = share(heisenberg(3));
  auto auts  = automorphisms(*g);
  auto x = g->generators()[0], y = g->generators()[1];
  auto orbit = kernel_orbit(make_epimorphism(g, x, y, g->inv(y), g->inv(x)), auts);
  auto par   = intersection_avoids_c0(orbit, depth9());
  auto ser   = reference::intersection_avoids_c0(orbit, depth9());
  CHECK(par.avoids == ser.avoids);
  CHECK(par.certificate == ser.certificate);
  CHECK(par.first_common == ser.first_common);
}

TEST_CASE("fiber group order", "[kernel-orbit]") {
  auto g     = share(abelian2(3, 3));
  auto orbit = kernel_orbit(make_epimorphism(g, {"a", "b", "1", "1"}), automorphisms(*g));
  CHECK(orbit.r() == 90);
  CHECK(fiber_group_order(orbit, 1'000'000) == 81u);
  CHECK_FALSE(fiber_group_order(orbit, 10));
}
