#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "hbody/error.hpp"
#include "hbody/group.hpp"
#include "test_helpers.hpp"

using namespace hbody;

namespace {
  std::map<std::size_t, std::size_t> order_histogram(FiniteGroup const& g) {
    std::map<std::size_t, std::size_t> h;
    for (Element a = 0; a < g.order(); ++a) {
      ++h[element_order(g, a)];
    }
    return h;
  }

  void check_group_laws(FiniteGroup const& g) {
    auto const n = static_cast<Element>(g.order());
    for (Element a = 0; a < n; ++a) {
      REQUIRE(g.mul(a, 0) == a);
      REQUIRE(g.mul(0, a) == a);
      REQUIRE(g.mul(a, g.inv(a)) == 0);
      for (Element b = 0; b < n; b += 3) {
        for (Element c = 0; c < n; c += 5) {
          REQUIRE(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
        }
      }
    }
    if (g.presentation()) {
      for (auto const& r : g.presentation()->relators) {
        REQUIRE(g.evaluate(r) == FiniteGroup::identity());
      }
    }
    for (Element a = 0; a < n; ++a) {
      REQUIRE(g.evaluate(element_word(g, a)) == a);
    }
  }
}  // namespace

TEST_CASE("permutations compose left to right", "[group]") {
  Permutation p({1, 2, 0}), q({1, 0, 2});
  CHECK((p * q).images() == oracle::compose(p.images(), q.images()));
  CHECK(p * p.inverse() == Permutation::identity(3));
  CHECK_THROWS_AS(Permutation({0, 0, 1}), InvalidArgument);
}

TEST_CASE("built-in constructors", "[group]") {
  CHECK(cyclic(5).order() == 5);
  CHECK(semidirect_pq(11, 5, 3).order() == 55);
  CHECK(semidirect_pq(7, 3, 2).order() == 21);
  CHECK(heisenberg(3).order() == 27);
  CHECK(heisenberg(2).order() == 8);
  CHECK(abelian2(3, 4).order() == 12);
  CHECK_THROWS_AS(semidirect_pq(11, 5, 2), InvalidArgument);
  CHECK_THROWS_AS(semidirect_pq(12, 5, 3), InvalidArgument);
  CHECK_THROWS_AS(heisenberg(4), InvalidArgument);
  CHECK_THROWS_AS(cyclic(0), InvalidArgument);
  auto g = semidirect_pq(11, 5, 3);
  Element a = g.generators()[0], b = g.generators()[1];
  CHECK(g.conjugate(b, a) == g.pow(a, 3));
}

TEST_CASE("semidirect_pq error names the failed condition", "[group]") {
  try {
    (void) semidirect_pq(11, 5, 2);
    FAIL("no throw");
  } catch (InvalidArgument const& e) {
    CHECK(std::string(e.what()).find("r^q = 10") != std::string::npos);
  }
}

TEST_CASE("group laws on every built-in", "[group][property]") {
  check_group_laws(cyclic(7));
  check_group_laws(semidirect_pq(11, 5, 3));
  check_group_laws(semidirect_pq(31, 5, 2));
  check_group_laws(heisenberg(3));
  check_group_laws(heisenberg(5));
  check_group_laws(abelian2(4, 6));
}

TEST_CASE("orders agree with a naive permutation closure", "[group][property]") {
  for (auto const& g : {semidirect_pq(11, 5, 3), heisenberg(3), abelian2(2, 6)}) {
    std::vector<oracle::Perm> gens;
    for (Element x : g.generators()) {
      gens.push_back(g.permutation(x).images());
    }
    CHECK(oracle::closure_order(gens) == g.order());
  }
}

TEST_CASE("structural queries", "[group]") {
  auto h = heisenberg(3);
  CHECK(count_involutions(h) == 0);
  CHECK(conjugacy_class_count(h) == 11);
  CHECK(center(h).size() == 3);
  CHECK(derived_subgroup(h).size() == 3);
  CHECK(subgroup_closure(h, {h.generators()[0]}).size() == 3);
  CHECK(subgroup_closure(h, {FiniteGroup::identity()}).size() == 1);
  CHECK_FALSE(is_abelian(h));

  auto s = semidirect_pq(11, 5, 3);
  CHECK(center(s).size() == oracle::Semidirect{11, 5, 3}.center_size());
  CHECK(center(s).size() == 1);
  CHECK(subgroup_closure(s, {s.generators()[0], s.generators()[1]}).size() == 55);
  CHECK(derived_subgroup(s).size() == 11);
  CHECK(conjugacy_class_count(s) == 1 + 2 + 4);
  CHECK(count_involutions(heisenberg(2)) == 5);
  CHECK(order_factors(s) == std::vector<std::pair<long, int>>{{5, 1}, {11, 1}});
  CHECK_THROWS_AS(subgroup_closure(s, std::vector<Element>{s.generators()[0], s.generators()[1]}, 20),
                  CapExceeded);
}

TEST_CASE("Sylow subgroups have full prime-power order", "[group][property]") {
  for (auto const& g : {semidirect_pq(11, 5, 3), semidirect_pq(7, 3, 2), heisenberg(3),
                        abelian2(6, 4), testing::example2()}) {
    CAPTURE(g.name());
    for (auto [p, e] : order_factors(g)) {
      std::size_t pe = 1;
      for (int i = 0; i < e; ++i) {
        pe *= static_cast<std::size_t>(p);
      }
      auto P = sylow_subgroup(g, p);
      CHECK(P.size() == pe);
      CHECK(g.order() % P.size() == 0);
    }
    CHECK(sylow_subgroup(g, 13).size() == 1);
  }
  auto s = semidirect_pq(11, 5, 3);
  CHECK(is_abelian(s, sylow_subgroup(s, 11)));
  CHECK(is_abelian(s, sylow_subgroup(s, 5)));
  CHECK_FALSE(is_abelian(heisenberg(3), sylow_subgroup(heisenberg(3), 3)));
}

TEST_CASE("subgroup sizes divide the order", "[group][property]") {
  std::mt19937_64 rng(11);
  auto const&     g = testing::example2();
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(g.order() - 1));
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Element> gens{pick(rng), pick(rng)};
    auto                 h = subgroup_closure(g, gens);
    REQUIRE(g.order() % h.size() == 0);
    for (Element x : h.elements) {
      REQUIRE(h.contains(g.inv(x)));
    }
  }
}

TEST_CASE("heisenberg direct and presented agree", "[group]") {
  auto direct    = heisenberg(3);
  auto presented = coset_enumerate(testing::heisenberg_presentation(), "h3");
  CHECK(presented.order() == 27);
  CHECK(order_histogram(direct) == order_histogram(presented));
  for (auto const& r : testing::heisenberg_presentation().relators) {
    CHECK(direct.evaluate(r) == FiniteGroup::identity());
  }
}

TEST_CASE("element words print over generator names", "[group]") {
  auto g = cyclic(5);
  CHECK(element_text(g, 0) == "1");
  CHECK(element_text(g, g.pow(g.generators()[0], 2)) == "a^2");
}
