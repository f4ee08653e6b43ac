#ifndef CPULSE_ERRORS_HPP
#define CPULSE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cpulse {

// Internal consistency violation (for example, the imaginary residue of a
// probability series, or a slope check disagreeing with a detected order).
struct ConsistencyError : std::runtime_error {
  explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

// Phase solver failed to converge to any acceptable solution.
struct SolveError : std::runtime_error {
  explicit SolveError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or unreadable sequence document.
struct DocumentError : std::runtime_error {
  explicit DocumentError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cpulse

#endif
