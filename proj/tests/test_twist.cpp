#include <catch2/catch_amalgamated.hpp>

#include "hbody/twist.hpp"
#include "test_helpers.hpp"

using namespace hbody;

TEST_CASE("twist images match the hand-coded table", "[twist]") {
  for (int j = 1; j <= 10; ++j) {
    auto expected = oracle::twist_images(j);
    auto f        = sigma(j);
    for (std::size_t i = 0; i < 4; ++i) {
      CAPTURE(j, i);
      CHECK(testing::codes(f.images[i]) == expected[i]);
    }
  }
  CHECK_THROWS(sigma(0));
  CHECK_THROWS(sigma(11));
}

TEST_CASE("sigma3 and sigma8 move the base commutator", "[twist]") {
  auto const& base = base_commutator();
  CHECK(apply(sigma(3), base) == parse_word("(x2^-1 y1) [x1,y1] (x2 y1^-1)"));
  CHECK(apply(sigma(8), base) == parse_word("(y1^-1 x2) [x1,y1] (y1 x2^-1)"));
  for (int j : {1, 2, 4, 5, 6, 7, 9, 10}) {
    CAPTURE(j);
    CHECK(apply(sigma(j), base) == base);
  }
}

TEST_CASE("the surface relator is fixed", "[twist]") {
  auto rel = parse_word("[x1,y1][x2,y2]");
  // sigma3 and sigma8 fix it only up to conjugacy; the others fix it exactly.
  for (int j : {1, 2, 4, 5, 6, 7, 9, 10}) {
    CAPTURE(j);
    CHECK(apply(sigma(j), rel) == rel);
  }
}

TEST_CASE("composition labels", "[twist]") {
  CHECK(label_of(identity_twist()) == "id");
  auto f = compose(sigma(5), compose(sigma(4), sigma(3)));
  CHECK(label_of(f) == "s5*s4*s3");
}

TEST_CASE("twist properties", "[twist][property]") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    auto w = testing::random_word(rng);
    auto u = testing::random_word(rng);
    for (int j = 1; j <= 5; ++j) {
      REQUIRE(apply(sigma(j), apply(sigma(5 + j), w)) == w);
      REQUIRE(apply(sigma(5 + j), apply(sigma(j), w)) == w);
      REQUIRE(apply(sigma(j), w * u) == apply(sigma(j), w) * apply(sigma(j), u));
      REQUIRE(testing::codes(apply(sigma(j), w)) == oracle::substitute(j, testing::codes(w)));
    }
    int  i = 1 + trial % 10, k = 1 + (trial / 10) % 10;
    auto fg = compose(sigma(i), sigma(k));
    REQUIRE(apply(fg, w) == apply(sigma(i), apply(sigma(k), w)));
  }
}

TEST_CASE("braid relations hold up to inner automorphism on the base", "[twist][property]") {
  // Far-apart twists commute exactly.
  for (auto [i, j] : {std::pair{1, 4}, {1, 5}, {2, 5}, {2, 4}, {1, 3}}) {
    CAPTURE(i, j);
    CHECK(compose(sigma(i), sigma(j)) == compose(sigma(j), sigma(i)));
  }
}
