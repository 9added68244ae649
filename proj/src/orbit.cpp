#include "hbody/orbit.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "hbody/error.hpp"

namespace hbody {

  ////////////////////////////////////////////////////////////////////////
  // OrbitSet / OrbitBuilder
  ////////////////////////////////////////////////////////////////////////

  OrbitEntry const* OrbitSet::find(Word const& w) const {
    auto it = _index.find(w);
    return it == _index.end() ? nullptr : &_entries[it->second];
  }

  bool OrbitSet::operator==(OrbitSet const& that) const {
    if (_depth != that._depth || _sigmas != that._sigmas
        || _complete != that._complete
        || _entries.size() != that._entries.size()) {
      return false;
    }
    for (std::size_t i = 0; i < _entries.size(); ++i) {
      if (_entries[i].word != that._entries[i].word
          || _entries[i].path != that._entries[i].path) {
        return false;
      }
    }
    return true;
  }

  OrbitBuilder::OrbitBuilder(std::size_t depth, std::vector<int> sigmas) {
    _set._depth  = depth;
    _set._sigmas = std::move(sigmas);
  }

  bool OrbitBuilder::insert(Word w, std::vector<std::uint8_t> path) {
    auto [it, inserted] = _set._index.try_emplace(w, _set._entries.size());
    if (inserted) {
      _set._entries.push_back({std::move(w), std::move(path)});
    }
    return inserted;
  }

  void OrbitBuilder::mark_incomplete() noexcept {
    _set._complete = false;
  }

  OrbitSet OrbitBuilder::finish() && {
    return std::move(_set);
  }

  ////////////////////////////////////////////////////////////////////////
  // Generation
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // A twist unpacked for fast substitution.
    struct Substitution {
      int                                 index;
      std::array<std::vector<Letter>, 4>  image;
      std::array<std::vector<Letter>, 4>  image_inverse;

      explicit Substitution(int j) : index(j) {
        TwistAuto f = sigma(j);
        for (std::size_t i = 0; i < 4; ++i) {
          auto fwd = f.images[i].letters();
          image[i].assign(fwd.begin(), fwd.end());
          Word inv = invert(f.images[i]);
          image_inverse[i].assign(inv.letters().begin(), inv.letters().end());
        }
      }

      [[nodiscard]] Word operator()(Word const& w) const {
        Word result(4);
        for (Letter x : w.letters()) {
          result.append_reduced(x.is_inverse() ? image_inverse[x.gen()]
                                               : image[x.gen()]);
        }
        return result;
      }
    };

    std::vector<int> normalized_sigmas(std::vector<int> sigmas) {
      std::sort(sigmas.begin(), sigmas.end());
      sigmas.erase(std::unique(sigmas.begin(), sigmas.end()), sigmas.end());
      if (sigmas.empty()) {
        throw InvalidArgument("the twist generator set must be nonempty");
      }
      for (int j : sigmas) {
        if (j < 1 || j > 10) {
          throw InvalidArgument("twist index " + std::to_string(j)
                                + " out of range [1, 10]");
        }
      }
      return sigmas;
    }

    // Shared skeleton: `expand(frontier, subs, out)` fills `out` with the
    // children of frontier[k] under subs[j] at position k * subs.size() + j.
    template <typename Expand>
    OrbitSet generate(OrbitOptions const& opts, Expand&& expand) {
      auto sigmas = normalized_sigmas(opts.sigmas);
      std::vector<Substitution> subs(sigmas.begin(), sigmas.end());

      OrbitBuilder builder(opts.depth, sigmas);
      Word const&  root = base_commutator();
      builder.insert(root, {});
      Word first = Substitution(3)(root);
      builder.insert(first, {3});

      // The frontier holds words first reached at the current depth, in
      // lexicographic order of their canonical paths. Expanding parents in
      // that order with ascending twist indices makes the first derivation
      // found for a child its shortest, lexicographically least one.
      std::vector<Word>                      frontier{first};
      std::vector<std::vector<std::uint8_t>> frontier_paths{{3}};
      std::vector<Word>                      children;

      for (std::size_t d = 0; d < opts.depth && !frontier.empty(); ++d) {
        children.assign(frontier.size() * subs.size(), Word());
        expand(frontier, subs, children);

        std::vector<Word>                      next;
        std::vector<std::vector<std::uint8_t>> next_paths;
        for (std::size_t k = 0; k < children.size(); ++k) {
          if (builder.contains(children[k])) {
            continue;
          }
          if (builder.size() >= opts.word_cap) {
            builder.mark_incomplete();
            return std::move(builder).finish();
          }
          auto path = frontier_paths[k / subs.size()];
          path.push_back(static_cast<std::uint8_t>(subs[k % subs.size()].index));
          builder.insert(children[k], path);
          next.push_back(std::move(children[k]));
          next_paths.push_back(std::move(path));
        }
        frontier       = std::move(next);
        frontier_paths = std::move(next_paths);
      }
      return std::move(builder).finish();
    }
  }  // namespace

  OrbitSet generate_c0(OrbitOptions const& opts) {
    return generate(opts,
                    [](std::vector<Word> const&         frontier,
                       std::vector<Substitution> const& subs,
                       std::vector<Word>&               out) {
                      auto const n = static_cast<std::ptrdiff_t>(frontier.size());
#pragma omp parallel for schedule(dynamic, 64)
                      for (std::ptrdiff_t k = 0; k < n; ++k) {
                        for (std::size_t j = 0; j < subs.size(); ++j) {
                          out[k * subs.size() + j] = subs[j](frontier[k]);
                        }
                      }
                    });
  }

  namespace reference {
    OrbitSet generate_c0(OrbitOptions const& opts) {
      return generate(opts,
                      [](std::vector<Word> const&         frontier,
                         std::vector<Substitution> const& subs,
                         std::vector<Word>&               out) {
                        for (std::size_t k = 0; k < frontier.size(); ++k) {
                          for (std::size_t j = 0; j < subs.size(); ++j) {
                            out[k * subs.size() + j] = subs[j](frontier[k]);
                          }
                        }
                      });
    }
  }  // namespace reference

  Word replay(std::vector<std::uint8_t> const& path) {
    Word w = base_commutator();
    for (auto j : path) {
      w = apply(sigma(j), w);
    }
    return w;
  }

  std::string path_label(std::vector<std::uint8_t> const& path) {
    if (path.empty()) {
      return "base";
    }
    std::string out;
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      if (!out.empty()) {
        out += '*';
      }
      out += 's' + std::to_string(*it);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Cache
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::string sha256_hex(std::string const& data) {
      std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
      unsigned int                                len = 0;
      if (EVP_Digest(data.data(), data.size(), md.data(), &len, EVP_sha256(),
                     nullptr)
          != 1) {
        throw Error("SHA-256 digest failed");
      }
      std::ostringstream out;
      out << std::hex << std::setfill('0');
      for (unsigned int i = 0; i < len; ++i) {
        out << std::setw(2) << static_cast<int>(md[i]);
      }
      return out.str();
    }

    std::string join(std::vector<int> const& xs) {
      std::string out;
      for (int x : xs) {
        if (!out.empty()) {
          out += ',';
        }
        out += std::to_string(x);
      }
      return out;
    }

    std::vector<int> split_ints(std::string_view text, std::string_view what) {
      std::vector<int> out;
      while (!text.empty()) {
        auto comma = text.find(',');
        auto tok   = text.substr(0, comma);
        int  value = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || p != tok.data() + tok.size()) {
          throw CacheError("malformed " + std::string(what) + " '"
                           + std::string(tok) + "'");
        }
        out.push_back(value);
        if (comma == std::string_view::npos) {
          break;
        }
        text.remove_prefix(comma + 1);
      }
      return out;
    }

    std::string body_text(OrbitSet const& s) {
      std::string body;
      for (auto const& e : s.entries()) {
        body += print_word(e.word);
        body += '\t';
        if (e.path.empty()) {
          body += "base";
        } else {
          for (std::size_t i = 0; i < e.path.size(); ++i) {
            if (i != 0) {
              body += ',';
            }
            body += std::to_string(e.path[i]);
          }
        }
        body += '\n';
      }
      return body;
    }

    std::string_view expect_header(std::string_view line,
                                   std::string_view key) {
      if (line.substr(0, key.size()) != key) {
        throw CacheError("expected header '" + std::string(key) + "', got '"
                         + std::string(line) + "'");
      }
      return line.substr(key.size());
    }

    std::size_t parse_size(std::string_view text, std::string_view what) {
      std::size_t value = 0;
      auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
      if (ec != std::errc() || p != text.data() + text.size()) {
        throw CacheError("malformed " + std::string(what));
      }
      return value;
    }
  }  // namespace

  std::string cache_text(OrbitSet const& s) {
    std::string body = body_text(s);
    std::string out  = "c0-cache v1\n";
    out += "depth=" + std::to_string(s.depth()) + "\n";
    out += "sigmas=" + join(s.sigmas()) + "\n";
    out += "count=" + std::to_string(s.size()) + "\n";
    out += "sha256=" + sha256_hex(body) + "\n";
    if (!s.complete()) {
      out += "status=partial\n";
    }
    return out + body;
  }

  OrbitSet parse_cache(std::string const& text) {
    std::vector<std::string_view> lines;
    std::string_view              rest = text;
    std::size_t                   header_end = 0;
    for (int i = 0; i < 6 && !rest.empty(); ++i) {
      auto nl = rest.find('\n');
      if (nl == std::string_view::npos) {
        throw CacheError("truncated cache header");
      }
      auto line = rest.substr(0, nl);
      if (i == 5 && line != "status=partial") {
        break;
      }
      lines.push_back(line);
      rest.remove_prefix(nl + 1);
      header_end += nl + 1;
    }
    if (lines.size() < 5) {
      throw CacheError("truncated cache header");
    }
    if (lines[0] != "c0-cache v1") {
      throw CacheError("unsupported cache version '" + std::string(lines[0])
                       + "'");
    }
    auto depth  = parse_size(expect_header(lines[1], "depth="), "depth");
    auto sigmas = split_ints(expect_header(lines[2], "sigmas="), "sigma list");
    auto count  = parse_size(expect_header(lines[3], "count="), "count");
    auto digest = expect_header(lines[4], "sha256=");
    bool partial = lines.size() == 6;

    std::string body = text.substr(header_end);
    if (sha256_hex(body) != digest) {
      throw CacheError("cache checksum mismatch; regenerate the cache");
    }

    OrbitBuilder builder(depth, sigmas);
    std::string_view b = body;
    while (!b.empty()) {
      auto nl   = b.find('\n');
      auto line = b.substr(0, nl);
      auto tab  = line.find('\t');
      if (tab == std::string_view::npos) {
        throw CacheError("malformed cache record '" + std::string(line) + "'");
      }
      Word w;
      try {
        w = parse_word(line.substr(0, tab));
      } catch (ParseError const& e) {
        throw CacheError(std::string("malformed cache word: ") + e.what());
      }
      std::vector<std::uint8_t> path;
      auto                      ptext = line.substr(tab + 1);
      if (ptext != "base") {
        for (int j : split_ints(ptext, "path")) {
          if (j < 1 || j > 10) {
            throw CacheError("twist index out of range in cache path");
          }
          path.push_back(static_cast<std::uint8_t>(j));
        }
      }
      if (!builder.insert(std::move(w), std::move(path))) {
        throw CacheError("duplicate word in cache");
      }
      if (nl == std::string_view::npos) {
        break;
      }
      b.remove_prefix(nl + 1);
    }
    if (builder.size() != count) {
      throw CacheError("cache record count does not match header");
    }
    if (partial) {
      builder.mark_incomplete();
    }
    return std::move(builder).finish();
  }

  void save_cache(OrbitSet const& s, std::filesystem::path const& file) {
    std::ofstream out(file, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw Error("cannot open '" + file.string() + "' for writing");
    }
    out << cache_text(s);
    if (!out) {
      throw Error("failed writing '" + file.string() + "'");
    }
  }

  OrbitSet load_cache(std::filesystem::path const& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) {
      throw CacheError("cannot open cache '" + file.string() + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_cache(buf.str());
  }

}  // namespace hbody
