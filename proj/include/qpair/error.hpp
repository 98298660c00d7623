#pragma once

#include <stdexcept>
#include <string>

namespace qpair {

// All library failures surface as qpair::error so callers can distinguish
// contract violations from bugs in the surrounding program.
class error : public std::runtime_error {
public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

[[noreturn]] inline void fail(const std::string& what) { throw error(what); }

inline void require(bool ok, const std::string& what) {
  if (!ok) fail(what);
}

}  // namespace qpair
