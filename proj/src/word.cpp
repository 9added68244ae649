#include "hbody/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <string_view>

#include "hbody/error.hpp"

namespace hbody {

  GeneratorNames const& surface_names() {
    static GeneratorNames const names{"x1", "y1", "x2", "y2"};
    return names;
  }

  Word::Word(std::size_t rank) : _rank(rank) {
    if (rank > Letter::max_rank) {
      throw InvalidArgument("word rank " + std::to_string(rank)
                            + " exceeds the supported maximum of "
                            + std::to_string(Letter::max_rank));
    }
  }

  Word Word::generator(std::size_t rank, std::size_t gen, bool inverse) {
    Word w(rank);
    if (gen >= rank) {
      throw InvalidArgument("generator index " + std::to_string(gen)
                            + " out of range for rank " + std::to_string(rank));
    }
    w._letters.emplace_back(gen, inverse);
    return w;
  }

  std::strong_ordering Word::operator<=>(Word const& that) const {
    if (auto c = _rank <=> that._rank; c != 0) {
      return c;
    }
    if (auto c = _letters.size() <=> that._letters.size(); c != 0) {
      return c;
    }
    return std::lexicographical_compare_three_way(_letters.begin(),
                                                  _letters.end(),
                                                  that._letters.begin(),
                                                  that._letters.end());
  }

  void Word::push_reduced(Letter x) {
    if (!_letters.empty() && _letters.back() == x.inverse()) {
      _letters.pop_back();
    } else {
      _letters.push_back(x);
    }
  }

  void Word::append_reduced(Word const& that) {
    append_reduced(that.letters());
  }

  void Word::append_reduced(std::span<Letter const> letters) {
    for (Letter x : letters) {
      push_reduced(x);
    }
  }

  Word reduce(std::span<Letter const> letters, std::size_t rank) {
    Word result(rank);
    result._letters.reserve(letters.size());
    for (Letter x : letters) {
      if (x.gen() >= rank) {
        throw InvalidArgument("letter with generator index "
                              + std::to_string(x.gen())
                              + " out of range for rank "
                              + std::to_string(rank));
      }
      result.push_reduced(x);
    }
    return result;
  }

  namespace {
    void check_ranks(Word const& u, Word const& v) {
      if (u.rank() != v.rank()) {
        throw InvalidArgument("rank mismatch: " + std::to_string(u.rank())
                              + " vs " + std::to_string(v.rank()));
      }
    }
  }  // namespace

  Word multiply(Word const& u, Word const& v) {
    check_ranks(u, v);
    Word result = u;
    result.append_reduced(v);
    return result;
  }

  Word invert(Word const& u) {
    Word result(u.rank());
    auto letters = u.letters();
    // the reverse of a reduced word with flipped signs is reduced
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
      result.push_reduced(it->inverse());
    }
    return result;
  }

  Word commutator(Word const& u, Word const& v) {
    check_ranks(u, v);
    Word result = u;
    result.append_reduced(v);
    result.append_reduced(invert(u));
    result.append_reduced(invert(v));
    return result;
  }

  Word power(Word const& u, long exponent) {
    Word base = exponent < 0 ? invert(u) : u;
    Word result(u.rank());
    for (long i = 0, n = exponent < 0 ? -exponent : exponent; i < n; ++i) {
      result.append_reduced(base);
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Parsing
  ////////////////////////////////////////////////////////////////////////

  namespace {
    class WordParser {
     public:
      WordParser(std::string_view text, GeneratorNames const& names)
          : _text(text), _names(names) {
        // longest names first, so that "x10" wins over "x1"
        for (std::size_t i = 0; i < names.size(); ++i) {
          _by_length.push_back(i);
        }
        std::stable_sort(_by_length.begin(),
                         _by_length.end(),
                         [&names](std::size_t a, std::size_t b) {
                           return names[a].size() > names[b].size();
                         });
      }

      Word parse() {
        Word w = word();
        skip_space();
        if (_pos != _text.size()) {
          fail("unexpected character '" + std::string(1, _text[_pos]) + "'");
        }
        return w;
      }

     private:
      [[noreturn]] void fail(std::string const& msg) const {
        throw ParseError(msg, _pos);
      }

      void skip_space() {
        while (_pos < _text.size()
               && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
      }

      char peek() {
        skip_space();
        return _pos < _text.size() ? _text[_pos] : '\0';
      }

      void expect(char c) {
        if (peek() != c) {
          fail(std::string("expected '") + c + "'");
        }
        ++_pos;
      }

      bool starts_atom() {
        char c = peek();
        return c == '(' || c == '[' || c == '1'
               || std::isalpha(static_cast<unsigned char>(c)) || c == '_';
      }

      Word word() {
        Word result = factor();
        while (true) {
          if (peek() == '*') {
            ++_pos;
            result.append_reduced(factor());
          } else if (starts_atom()) {
            result.append_reduced(factor());
          } else {
            return result;
          }
        }
      }

      Word factor() {
        Word a = atom();
        if (peek() == '^') {
          ++_pos;
          return power(a, integer());
        }
        return a;
      }

      long integer() {
        skip_space();
        std::size_t start = _pos;
        bool        neg   = false;
        if (_pos < _text.size() && _text[_pos] == '-') {
          neg = true;
          ++_pos;
        }
        std::size_t digits_start = _pos;
        while (_pos < _text.size()
               && std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
        if (_pos == digits_start) {
          _pos = start;
          fail("expected an integer exponent");
        }
        long value = 0;
        auto [ptr, ec] = std::from_chars(
            _text.data() + digits_start, _text.data() + _pos, value);
        if (ec != std::errc()) {
          _pos = start;
          fail("exponent out of range");
        }
        return neg ? -value : value;
      }

      Word atom() {
        char c = peek();
        if (c == '(') {
          ++_pos;
          Word w = word();
          expect(')');
          return w;
        }
        if (c == '[') {
          ++_pos;
          Word u = word();
          expect(',');
          Word v = word();
          expect(']');
          return commutator(u, v);
        }
        if (c == '1') {
          ++_pos;
          return Word(_names.size());
        }
        for (std::size_t i : _by_length) {
          auto const& name = _names[i];
          if (!name.empty() && _text.substr(_pos, name.size()) == name) {
            _pos += name.size();
            return Word::generator(_names.size(), i);
          }
        }
        if (c == '\0') {
          fail("unexpected end of input");
        }
        std::size_t end = _pos;
        while (end < _text.size()
               && (std::isalnum(static_cast<unsigned char>(_text[end]))
                   || _text[end] == '_')) {
          ++end;
        }
        if (end == _pos) {
          fail("unexpected character '" + std::string(1, c) + "'");
        }
        fail("unknown generator '" + std::string(_text.substr(_pos, end - _pos))
             + "'");
      }

      std::string_view         _text;
      GeneratorNames const&    _names;
      std::vector<std::size_t> _by_length;
      std::size_t              _pos = 0;
    };
  }  // namespace

  Word parse_word(std::string_view text, GeneratorNames const& names) {
    if (names.empty()) {
      throw InvalidArgument("cannot parse words over an empty alphabet");
    }
    return WordParser(text, names).parse();
  }

  std::string print_word(Word const& w, GeneratorNames const& names) {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    auto        letters = w.letters();
    for (std::size_t i = 0; i < letters.size();) {
      std::size_t j = i;
      while (j < letters.size() && letters[j] == letters[i]) {
        ++j;
      }
      long e = static_cast<long>(j - i);
      if (letters[i].is_inverse()) {
        e = -e;
      }
      if (!out.empty()) {
        out += ' ';
      }
      out += names.at(letters[i].gen());
      if (e != 1) {
        out += '^';
        out += std::to_string(e);
      }
      i = j;
    }
    return out;
  }

  std::size_t WordHash::operator()(Word const& w) const noexcept {
    // FNV-1a over the letter codes, seeded with the rank
    std::uint64_t h = 1469598103934665603ULL ^ w.rank();
    for (Letter x : w.letters()) {
      h ^= static_cast<std::uint8_t>(x.code());
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }

}  // namespace hbody
