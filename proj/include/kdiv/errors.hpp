#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kdiv {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph6 / DIMACS / edge-list input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An exact oracle refused an instance larger than its configured cap.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::size_t n, std::size_t cap)
      : Error(what + ": instance too large (n = " + std::to_string(n) +
              ", cap = " + std::to_string(cap) + ")"),
        n_(n),
        cap_(cap) {}

  std::size_t n() const { return n_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t n_;
  std::size_t cap_;
};

inline void check_cap(const char* what, std::size_t n, std::size_t cap) {
  if (n > cap) throw CapExceeded(what, n, cap);
}

}  // namespace kdiv
