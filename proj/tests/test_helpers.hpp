#ifndef HBODY_TESTS_HELPERS_HPP_
#define HBODY_TESTS_HELPERS_HPP_

#include <random>
#include <vector>

#include "hbody/group.hpp"
#include "hbody/todd_coxeter.hpp"
#include "hbody/word.hpp"
#include "oracle.hpp"

namespace testing {

  inline std::vector<int> codes(hbody::Word const& w) {
    std::vector<int> out;
    for (auto x : w.letters()) {
      out.push_back(x.code());
    }
    return out;
  }

  inline hbody::Word from_codes(std::vector<int> const& c, std::size_t rank = 4) {
    std::vector<hbody::Letter> letters;
    for (int x : c) {
      letters.emplace_back(static_cast<std::size_t>(std::abs(x) - 1), x < 0);
    }
    return hbody::reduce(letters, rank);
  }

  inline hbody::Word random_word(std::mt19937_64& rng, std::size_t max_len = 24) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    return from_codes(oracle::random_letters(rng, 4, len(rng)));
  }

  inline hbody::Presentation example2_presentation() {
    return hbody::make_presentation(
        {"al", "be", "ga", "de"},
        {"al^3", "be^3", "ga^3", "de^3", "[al,be]^3", "[al,de]", "[ga,de]",
         "[[al,be],al]", "[[al,be],be]", "ga^-1 al ga be^-1 al^-1 be",
         "ga^-1 be ga al^-1 be^-1 al", "de^-1 be de al^-1 be^-1 al"});
  }

  inline hbody::FiniteGroup const& example2() {
    static hbody::FiniteGroup const g =
        hbody::coset_enumerate(example2_presentation(), "example2");
    return g;
  }

  inline hbody::Presentation heisenberg_presentation() {
    return hbody::make_presentation(
        {"x", "y"}, {"x^3", "y^3", "[x,y]^3", "[x,[x,y]]", "[y,[x,y]]"});
  }

}  // namespace testing

#endif  // HBODY_TESTS_HELPERS_HPP_
