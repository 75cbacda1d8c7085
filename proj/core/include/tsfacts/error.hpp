#pragma once

#include <stdexcept>
#include <string>

namespace tsfacts {

// All recoverable failures (bad input data, degenerate samples, invalid
// configuration) are thrown as Error. Batch drivers catch it per file so a
// single corrupt input cannot take down a whole run.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tsfacts
