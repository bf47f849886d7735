#pragma once

#include <stdexcept>
#include <string>

namespace ellstab {

// Exit-code contract of the CLI: 2 usage/schema, 3 precondition, 4 internal.
struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct precondition_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct internal_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw precondition_error(what);
}

// Consistency checks that cannot fail unless the implementation is wrong
// (e.g. a closed form disagreeing with the composition it abbreviates).
inline void ensure(bool cond, const std::string& what) {
  if (!cond) throw internal_error(what);
}

} // namespace ellstab
