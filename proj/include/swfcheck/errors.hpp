#pragma once

#include <stdexcept>

namespace swf {

// Enumeration would exceed its hard size guard. Guards fail loudly; nothing
// ever truncates a check.
struct guard_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Rule and input (profile, ballot, election) do not fit together.
struct incompat_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A family of pairwise verdicts does not assemble into a weak order.
struct assembly_error : incompat_error {
  using incompat_error::incompat_error;
};

}  // namespace swf
