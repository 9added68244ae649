// The finite orbit collection of [x1, y1] under compositions of twists.

#ifndef HBODY_ORBIT_HPP_
#define HBODY_ORBIT_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hbody/twist.hpp"
#include "hbody/word.hpp"

namespace hbody {

  //! One orbit word with a replayable derivation.
  //!
  //! `path` lists twist indices in application order starting from
  //! [x1, y1]: the root [x1, y1] has an empty path, sigma3([x1, y1]) has
  //! path {3}, and a word sigma_{i_n} o ... o sigma_{i_1} o sigma3([x1, y1])
  //! has path {3, i_1, ..., i_n}.
  struct OrbitEntry {
    Word                      word;
    std::vector<std::uint8_t> path;

    //! Number of twists applied after the initial sigma3; 0 for both bases.
    [[nodiscard]] std::size_t depth() const noexcept {
      return path.empty() ? 0 : path.size() - 1;
    }
  };

  struct OrbitOptions {
    std::size_t      depth = 9;
    std::vector<int> sigmas{1, 2, 3, 4, 5};
    std::size_t      word_cap = 10'000'000;
  };

  class OrbitSet {
   public:
    OrbitSet() = default;

    [[nodiscard]] std::size_t size() const noexcept {
      return _entries.size();
    }
    [[nodiscard]] std::size_t depth() const noexcept {
      return _depth;
    }
    [[nodiscard]] std::vector<int> const& sigmas() const noexcept {
      return _sigmas;
    }
    //! False when generation stopped at the word cap; such a set must not
    //! back a negative verdict.
    [[nodiscard]] bool complete() const noexcept {
      return _complete;
    }

    //! Entries in scan order: the two bases, then by depth, then by
    //! lexicographic path.
    [[nodiscard]] std::vector<OrbitEntry> const& entries() const noexcept {
      return _entries;
    }

    [[nodiscard]] OrbitEntry const* find(Word const& w) const;
    [[nodiscard]] bool              contains(Word const& w) const {
      return find(w) != nullptr;
    }

    bool operator==(OrbitSet const& that) const;

   private:
    friend class OrbitBuilder;
    std::size_t                                  _depth = 0;
    std::vector<int>                             _sigmas;
    bool                                         _complete = true;
    std::vector<OrbitEntry>                      _entries;
    std::unordered_map<Word, std::size_t, WordHash> _index;
  };

  //! Breadth-first expansion from sigma3([x1, y1]) with global deduplication
  //! on reduced words. Frontier expansion runs in parallel; the merge is
  //! serial and in parent order, so the result is independent of the
  //! number of threads.
  OrbitSet generate_c0(OrbitOptions const& opts = {});

  //! Folds the path's twists over [x1, y1].
  Word replay(std::vector<std::uint8_t> const& path);

  //! "base" for the root, otherwise "s5*s4*s3" style.
  std::string path_label(std::vector<std::uint8_t> const& path);

  //! Text cache. Header lines `c0-cache v1`, `depth=`, `sigmas=`, `count=`,
  //! `sha256=` (hex digest of the body), optionally `status=partial`; then
  //! one `<word>\t<path>` record per line, where path is a comma separated
  //! list of twist indices or `base`.
  void     save_cache(OrbitSet const& s, std::filesystem::path const& file);
  OrbitSet load_cache(std::filesystem::path const& file);

  //! In-memory forms of the cache, used by the file functions.
  std::string cache_text(OrbitSet const& s);
  OrbitSet    parse_cache(std::string const& text);

  //! Builds OrbitSets; shared by the parallel and reference generators and
  //! by the cache loader.
  class OrbitBuilder {
   public:
    OrbitBuilder(std::size_t depth, std::vector<int> sigmas);
    //! Returns false if the word was already present.
    bool     insert(Word w, std::vector<std::uint8_t> path);
    void     mark_incomplete() noexcept;
    OrbitSet finish() &&;
    [[nodiscard]] std::size_t size() const noexcept {
      return _set._entries.size();
    }
    [[nodiscard]] bool contains(Word const& w) const {
      return _set.contains(w);
    }

   private:
    OrbitSet _set;
  };

  namespace reference {
    //! Single-threaded generator kept as the oracle for generate_c0.
    OrbitSet generate_c0(OrbitOptions const& opts = {});
  }  // namespace reference

}  // namespace hbody

#endif  // HBODY_ORBIT_HPP_
