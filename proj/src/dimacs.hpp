#pragma once

#include <string>
#include <string_view>

#include "instance.hpp"

namespace slslab {

// DIMACS CNF reader. Accepts comment lines (`c ...`) before and between
// clauses, one `p cnf N M` header, then M clauses of whitespace-separated
// nonzero literals, each terminated by 0. Clauses must all have the same
// width and distinct variables; anything else is a ParseError.
Instance parse_dimacs(std::string_view text);

// Canonical form: header, then clauses in stored order, literals in stored
// order, zero-terminated, one clause per line. Byte-exact reproducible.
std::string write_dimacs(const Instance& inst);

Instance read_dimacs_file(const std::string& path);
void write_dimacs_file(const Instance& inst, const std::string& path);

// Assignment value lines: `v <signed literal> ... 0`, positive = true.
// The writer emits a single line covering variables 1..N in order; the
// reader accepts the value list split over several `v` lines and skips
// `c`/`s` lines, but requires every variable to appear exactly once.
std::string write_assignment(const Assignment& a);
Assignment parse_assignment(std::string_view text, int32_t n);

Assignment read_assignment_file(const std::string& path, int32_t n);
void write_assignment_file(const Assignment& a, const std::string& path);

// Whole-file helpers shared by the CLI surface.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view contents);

}  // namespace slslab
