#ifndef HBODY_ERROR_HPP_
#define HBODY_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hbody {

  //! Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! Malformed input: bad word text, config lines, cache files.
  class ParseError : public Error {
   public:
    ParseError(std::string const& msg, std::size_t position)
        : Error(msg + " (at position " + std::to_string(position) + ")"),
          _position(position) {}

    [[nodiscard]] std::size_t position() const noexcept {
      return _position;
    }

   private:
    std::size_t _position;
  };

  //! A command was invoked without what it needs (exit code 2).
  class UsageError : public Error {
   public:
    using Error::Error;
  };

  //! A config file line that does not parse; `line` is 1-based.
  class ConfigError : public Error {
   public:
    ConfigError(std::string const& msg, std::size_t line)
        : Error("config line " + std::to_string(line) + ": " + msg), _line(line) {}

    [[nodiscard]] std::size_t line() const noexcept {
      return _line;
    }

   private:
    std::size_t _line;
  };

  //! Arguments that violate a documented precondition.
  class InvalidArgument : public Error {
   public:
    using Error::Error;
  };

  //! A configurable search or enumeration cap was hit. Any partial result is
  //! unusable for negative conclusions.
  class CapExceeded : public Error {
   public:
    CapExceeded(std::string const& what_cap, std::size_t cap)
        : Error(what_cap + " cap of " + std::to_string(cap) + " exceeded"),
          _cap(cap) {}

    [[nodiscard]] std::size_t cap() const noexcept {
      return _cap;
    }

   private:
    std::size_t _cap;
  };

  //! Cache file failed its version or checksum test; regenerate it.
  class CacheError : public Error {
   public:
    using Error::Error;
  };

}  // namespace hbody

#endif  // HBODY_ERROR_HPP_
