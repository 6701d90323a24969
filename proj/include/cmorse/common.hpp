#pragma once

#include <stdexcept>
#include <string>

namespace cmorse {

/// Error type thrown on precondition violations and numerical failures.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw Error(message);
}

}  // namespace cmorse
