#pragma once

#include <stdexcept>
#include <string>

namespace slslab {

// Malformed DIMACS or assignment text.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// File could not be read or written.
struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// A search that the caller depends on (e.g. the x-sat reference solution)
// ended at its cutoff without a solution.
struct SearchError : std::runtime_error {
  explicit SearchError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace slslab
