#include "hbody/twist.hpp"

#include "hbody/error.hpp"

namespace hbody {

  namespace {
    // image strings of (x1, y1, x2, y2) for sigma_1 .. sigma_10
    constexpr char const* sigma_images[10][4] = {
        {"x1 y1", "y1", "x2", "y2"},
        {"x1", "y1 x1^-1", "x2", "y2"},
        {"x2^-1 y1 x1", "y1", "x2", "x2^-1 y1 y2"},
        {"x1", "y1", "x2 y2^-1", "y2"},
        {"x1", "y1", "x2", "y2 x2^-1"},
        {"x1 y1^-1", "y1", "x2", "y2"},
        {"x1", "y1 x1", "x2", "y2"},
        {"y1^-1 x2 x1", "y1", "x2", "y1^-1 x2 y2"},
        {"x1", "y1", "x2 y2", "y2"},
        {"x1", "y1", "x2", "y2 x2"},
    };
  }  // namespace

  TwistAuto identity_twist() {
    TwistAuto f;
    for (std::size_t i = 0; i < 4; ++i) {
      f.images[i] = Word::generator(4, i);
    }
    return f;
  }

  TwistAuto sigma(int j) {
    if (j < 1 || j > 10) {
      throw InvalidArgument("sigma index " + std::to_string(j)
                            + " out of range [1, 10]");
    }
    TwistAuto f;
    for (std::size_t i = 0; i < 4; ++i) {
      f.images[i] = parse_word(sigma_images[j - 1][i]);
    }
    f.label = "s" + std::to_string(j);
    return f;
  }

  Word apply(TwistAuto const& f, Word const& w) {
    if (w.rank() != 4) {
      throw InvalidArgument("twists act on rank-4 words, got rank "
                            + std::to_string(w.rank()));
    }
    std::array<Word, 4> inverses;
    for (std::size_t i = 0; i < 4; ++i) {
      inverses[i] = invert(f.images[i]);
    }
    Word result(4);
    for (Letter x : w.letters()) {
      result.append_reduced(x.is_inverse() ? inverses[x.gen()]
                                           : f.images[x.gen()]);
    }
    return result;
  }

  TwistAuto compose(TwistAuto const& f, TwistAuto const& g) {
    TwistAuto h;
    for (std::size_t i = 0; i < 4; ++i) {
      h.images[i] = apply(f, g.images[i]);
    }
    if (f.label.empty()) {
      h.label = g.label;
    } else if (g.label.empty()) {
      h.label = f.label;
    } else {
      h.label = f.label + "*" + g.label;
    }
    return h;
  }

  std::string label_of(TwistAuto const& f) {
    return f.label.empty() ? "id" : f.label;
  }

  Word const& base_commutator() {
    static Word const c = parse_word("[x1,y1]");
    return c;
  }

}  // namespace hbody
