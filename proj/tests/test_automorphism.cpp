#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "hbody/automorphism.hpp"
#include "hbody/error.hpp"
#include "hbody/surface_hom.hpp"
#include "test_helpers.hpp"

using namespace hbody;

namespace {
  std::size_t distinct_count(std::vector<ElementPair> const& labels) {
    return std::set<ElementPair>(labels.begin(), labels.end()).size();
  }

  bool is_automorphism(FiniteGroup const& g, Automorphism const& phi) {
    std::set<Element> image(phi.map.begin(), phi.map.end());
    if (image.size() != g.order()) {
      return false;
    }
    for (Element a = 0; a < g.order(); ++a) {
      for (Element b = 0; b < g.order(); ++b) {
        if (phi(g.mul(a, b)) != g.mul(phi(a), phi(b))) {
          return false;
        }
      }
    }
    return true;
  }
}  // namespace

TEST_CASE("automorphism counts", "[automorphism]") {
  CHECK(automorphisms(cyclic(5)).size() == 4);
  CHECK(automorphisms(cyclic(12)).size() == 4);
  CHECK(automorphisms(semidirect_pq(11, 5, 3)).size() == 110);
  CHECK(automorphisms(abelian2(3, 3)).size() == 48);
  auto h = heisenberg(3);
  CHECK(automorphisms(h).size() == 432);
  CHECK(automorphisms(h).size() == oracle::Heisenberg{3}.automorphism_count());
}

TEST_CASE("enumerated maps are automorphisms and include the identity", "[automorphism][property]") {
  auto g    = semidirect_pq(7, 3, 2);
  auto auts = automorphisms(g);
  CHECK(auts.size() == 42);
  bool has_identity = false;
  for (auto const& phi : auts) {
    REQUIRE(is_automorphism(g, phi));
    bool id = true;
    for (Element a = 0; a < g.order(); ++a) {
      id = id && phi(a) == a;
    }
    has_identity = has_identity || id;
  }
  CHECK(has_identity);
  std::set<std::vector<Element>> distinct;
  for (auto const& phi : auts) {
    distinct.insert(phi.map);
  }
  CHECK(distinct.size() == auts.size());
}

TEST_CASE("stabilizer-chain order matches full enumeration", "[automorphism][property]") {
  for (auto const& g : {cyclic(9), semidirect_pq(11, 5, 3), semidirect_pq(13, 3, 3), heisenberg(3),
                        abelian2(3, 3), abelian2(2, 4)}) {
    CAPTURE(g.name());
    auto chain = automorphism_group(g);
    CHECK(chain.order() == automorphisms(g).size());
    for (auto const& phi : chain.generators) {
      REQUIRE(is_automorphism(g, phi));
    }
  }
}

TEST_CASE("Aut of the order-243 presented group", "[automorphism]") {
  auto chain = automorphism_group(testing::example2(), testing::example2_presentation());
  CHECK(chain.order() == 8'398'080ull);
}

TEST_CASE("caps", "[automorphism]") {
  CHECK_THROWS_AS(automorphisms(heisenberg(3), {.node_cap = 10}), CapExceeded);
  CHECK_THROWS_AS(automorphisms(heisenberg(3), {.count_cap = 100}), CapExceeded);
  auto g = heisenberg(3);
  CHECK_THROWS_AS(automorphisms(g, make_presentation({"x"}, {"x^3"})), InvalidArgument);
}

TEST_CASE("extend_to_map", "[automorphism]") {
  auto g = heisenberg(3);
  auto x = g.generators()[0], y = g.generators()[1];
  CHECK(extend_to_map(g, std::vector<Element>{y, x}).size() == 27);
  auto s = semidirect_pq(11, 5, 3);
  // b -> a would not respect b a b^-1 = a^3
  CHECK(extend_to_map(s, std::vector<Element>{s.generators()[0], s.generators()[0]}).empty());
}

TEST_CASE("pair orbits on non-commuting pairs", "[automorphism]") {
  auto g     = heisenberg(3);
  auto auts  = automorphisms(g);
  auto pairs = noncommuting_pairs(g);
  REQUIRE(pairs.size() == 432);
  CHECK(pair_orbit_count(g, auts, pairs) == 1);
  CHECK(reference::pair_orbit_count(g, auts, pairs) == 1);
  CHECK(distinct_count(pair_orbit_representatives(g, automorphism_group(g).generators, pairs)) == 1);
  std::vector<ElementPair> trivial{{0, 0}};
  CHECK(pair_orbit_count(g, auts, trivial) == 1);
}

TEST_CASE("pair orbit count: parallel equals serial and generators suffice", "[automorphism][property]") {
  for (auto const& g : {semidirect_pq(11, 5, 3), semidirect_pq(7, 3, 2), abelian2(3, 3)}) {
    CAPTURE(g.name());
    auto auts = automorphisms(g);
    std::vector<ElementPair> all;
    for (Element a = 0; a < g.order(); ++a)
      for (Element b = 0; b < g.order(); ++b)
        all.emplace_back(a, b);
    auto n = pair_orbit_count(g, auts, all);
    CHECK(n == reference::pair_orbit_count(g, auts, all));
    CHECK(distinct_count(pair_orbit_representatives(g, automorphism_group(g).generators, all)) == n);
    for (std::size_t i = 0; i < all.size(); i += 17) {
      auto c = canonical_pair(auts, all[i]);
      REQUIRE(c <= all[i]);
      REQUIRE(canonical_pair(auts, c) == c);
    }
  }
}
