#pragma once

#include <stdexcept>
#include <string>

namespace tlink {

// Malformed caller input: invalid vertex ids, bad set shapes, unparsable files.
struct input_error : std::invalid_argument {
  explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

// Instance exceeds a desk-scale guard and the caller did not force past it.
struct size_guard_error : std::runtime_error {
  explicit size_guard_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tlink
