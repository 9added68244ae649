// Words in a free group of finite rank.
//
// A Word is always freely reduced, so two words are equal as group elements
// iff their letter sequences are identical. This makes the letter sequence a
// canonical form usable directly as a hash key.

#ifndef HBODY_WORD_HPP_
#define HBODY_WORD_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hbody {

  //! A generator or its inverse, packed into one signed byte: generator
  //! index `i` is stored as `i + 1`, its inverse as `-(i + 1)`.
  class Letter {
   public:
    static constexpr std::size_t max_rank = 127;

    constexpr Letter() noexcept = default;

    constexpr Letter(std::size_t gen, bool inverse) noexcept
        : _code(static_cast<std::int8_t>(inverse ? -static_cast<int>(gen) - 1
                                                 : static_cast<int>(gen) + 1)) {}

    [[nodiscard]] constexpr std::size_t gen() const noexcept {
      return static_cast<std::size_t>((_code < 0 ? -_code : _code) - 1);
    }

    [[nodiscard]] constexpr bool is_inverse() const noexcept {
      return _code < 0;
    }

    [[nodiscard]] constexpr Letter inverse() const noexcept {
      Letter result;
      result._code = static_cast<std::int8_t>(-_code);
      return result;
    }

    [[nodiscard]] constexpr std::int8_t code() const noexcept {
      return _code;
    }

    constexpr bool operator==(Letter const&) const noexcept = default;
    constexpr auto operator<=>(Letter const&) const noexcept = default;

   private:
    std::int8_t _code = 1;
  };

  using GeneratorNames = std::vector<std::string>;

  //! The generator names of the genus-2 surface group, in index order.
  GeneratorNames const& surface_names();

  //! A freely reduced word over an alphabet of `rank` generators.
  class Word {
   public:
    Word() = default;
    explicit Word(std::size_t rank);

    //! The single-letter word for generator `gen` (or its inverse).
    static Word generator(std::size_t rank, std::size_t gen,
                          bool inverse = false);

    [[nodiscard]] std::size_t rank() const noexcept {
      return _rank;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _letters.size();
    }
    [[nodiscard]] bool empty() const noexcept {
      return _letters.empty();
    }
    [[nodiscard]] std::span<Letter const> letters() const noexcept {
      return _letters;
    }
    [[nodiscard]] Letter operator[](std::size_t i) const {
      return _letters[i];
    }

    bool operator==(Word const&) const = default;
    //! Shortlex order: length first, then letter codes.
    std::strong_ordering operator<=>(Word const& that) const;

    //! Appends `x` and cancels it against the last letter when possible.
    void push_reduced(Letter x);
    void append_reduced(Word const& that);
    void append_reduced(std::span<Letter const> letters);

   private:
    friend Word reduce(std::span<Letter const>, std::size_t);
    std::size_t         _rank = 0;
    std::vector<Letter> _letters;
  };

  //! Free reduction of an arbitrary letter sequence. Throws InvalidArgument
  //! if a letter is out of range for `rank`.
  Word reduce(std::span<Letter const> letters, std::size_t rank);

  //! Throws InvalidArgument on rank mismatch.
  Word multiply(Word const& u, Word const& v);
  Word invert(Word const& u);
  //! u v u^-1 v^-1
  Word commutator(Word const& u, Word const& v);
  //! u^e for any integer e.
  Word power(Word const& u, long exponent);

  inline Word operator*(Word const& u, Word const& v) {
    return multiply(u, v);
  }

  //! Parses the word grammar
  //!
  //!     word   := factor { [ "*" ] factor }
  //!     factor := atom [ "^" int ]
  //!     atom   := name | "(" word ")" | "[" word "," word "]" | "1"
  //!     int    := [ "-" ] digits
  //!
  //! where `name` is one of `names`. Whitespace between tokens is ignored.
  //! Throws ParseError with the offending position.
  Word parse_word(std::string_view text, GeneratorNames const& names);

  inline Word parse_word(std::string_view text) {
    return parse_word(text, surface_names());
  }

  //! Canonical text: maximal runs of one letter collapse to `name^e`, tokens
  //! separated by single spaces, empty word prints as "1".
  std::string print_word(Word const& w, GeneratorNames const& names);

  inline std::string print_word(Word const& w) {
    return print_word(w, surface_names());
  }

  struct WordHash {
    std::size_t operator()(Word const& w) const noexcept;
  };

}  // namespace hbody

template <>
struct std::hash<hbody::Word> : hbody::WordHash {};

#endif  // HBODY_WORD_HPP_
