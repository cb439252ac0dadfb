#include "dimacs.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "errors.hpp"

namespace slslab {

namespace {

// Token scanner over whitespace-separated integers. Lines whose first
// non-blank character is one of `skip_prefixes` are comment lines.
class IntScanner {
 public:
  IntScanner(std::string_view text, std::string_view skip_prefixes)
      : text_(text), skip_(skip_prefixes) {}

  // Advances to the next token; returns false at end of input.
  bool next(int64_t& out) {
    skip_blanks();
    if (pos_ >= text_.size()) return false;
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    if (ec != std::errc() || (ptr != end && !is_space(*ptr)))
      throw ParseError("expected an integer at offset " + std::to_string(pos_));
    pos_ += static_cast<size_t>(ptr - begin);
    at_line_start_ = false;
    return true;
  }

  // Reads one lowercase word (used for the `p cnf` header).
  std::string_view word() {
    skip_blanks();
    const size_t begin = pos_;
    while (pos_ < text_.size() && !is_space(text_[pos_])) ++pos_;
    at_line_start_ = false;
    return text_.substr(begin, pos_ - begin);
  }

  bool at_end() {
    skip_blanks();
    return pos_ >= text_.size();
  }

 private:
  static bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v';
  }

  void skip_blanks() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '\n') {
        at_line_start_ = true;
        ++pos_;
      } else if (is_space(c)) {
        ++pos_;
      } else if (at_line_start_ && skip_.find(c) != std::string_view::npos) {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::string_view skip_;
  size_t pos_ = 0;
  bool at_line_start_ = true;
};

void append_int(std::string& out, int64_t value) {
  char buf[24];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  (void)ec;
  out.append(buf, ptr);
}

}  // namespace

Instance parse_dimacs(std::string_view text) {
  IntScanner scan(text, "c");
  if (scan.word() != "p") throw ParseError("missing DIMACS header");
  if (scan.word() != "cnf") throw ParseError("header format is not `p cnf`");
  int64_t n = 0, m = 0;
  if (!scan.next(n) || !scan.next(m) || n < 0 || m < 0)
    throw ParseError("malformed `p cnf N M` header");

  std::vector<Lit> flat;
  int64_t width = -1;  // inferred from the first clause
  std::vector<Lit> cur;
  int64_t clauses = 0;
  int64_t tok = 0;
  while (clauses < m && scan.next(tok)) {
    if (tok == 0) {
      if (cur.empty()) throw ParseError("empty clause");
      if (width < 0) width = static_cast<int64_t>(cur.size());
      if (static_cast<int64_t>(cur.size()) != width)
        throw ParseError("mixed clause widths: clause " + std::to_string(clauses) +
                         " has " + std::to_string(cur.size()) + " literals, expected " +
                         std::to_string(width));
      flat.insert(flat.end(), cur.begin(), cur.end());
      cur.clear();
      ++clauses;
      continue;
    }
    const int64_t v = tok > 0 ? tok : -tok;
    if (v > n)
      throw ParseError("variable " + std::to_string(v) + " out of range [1, " +
                       std::to_string(n) + "]");
    for (Lit prev : cur)
      if (lit_var(prev) == v)
        throw ParseError("repeated variable " + std::to_string(v) + " in clause " +
                         std::to_string(clauses));
    cur.push_back(static_cast<Lit>(tok));
  }
  if (!cur.empty()) throw ParseError("unterminated clause at end of input");
  if (clauses < m)
    throw ParseError("header announces " + std::to_string(m) + " clauses but only " +
                     std::to_string(clauses) + " present");
  if (scan.next(tok))
    throw ParseError("trailing input after the " + std::to_string(m) + " header clauses");

  return Instance::from_clauses(static_cast<int32_t>(n),
                                width < 0 ? 0 : static_cast<int32_t>(width),
                                std::move(flat));
}

std::string write_dimacs(const Instance& inst) {
  std::string out;
  out.reserve(16 + inst.flat_literals().size() * 8);
  out += "p cnf ";
  append_int(out, inst.variables());
  out += ' ';
  append_int(out, inst.clause_count());
  out += '\n';
  const int32_t k = inst.width();
  const auto& lits = inst.flat_literals();
  for (size_t i = 0; i < lits.size(); i += k) {
    for (int32_t j = 0; j < k; ++j) {
      append_int(out, lits[i + j]);
      out += ' ';
    }
    out += "0\n";
  }
  return out;
}

std::string write_assignment(const Assignment& a) {
  std::string out = "v";
  for (size_t v = 1; v < a.size(); ++v) {
    out += ' ';
    append_int(out, a[v] ? static_cast<int64_t>(v) : -static_cast<int64_t>(v));
  }
  out += " 0\n";
  return out;
}

Assignment parse_assignment(std::string_view text, int32_t n) {
  // `v` also introduces value lines, so it cannot be a comment prefix;
  // strip leading `v` tokens by treating them as line markers.
  std::string cleaned;
  cleaned.reserve(text.size());
  size_t pos = 0;
  while (pos < text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    size_t first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos && line[first] == 'v')
      line = line.substr(first + 1);
    else if (first != std::string_view::npos && (line[first] == 'c' || line[first] == 's'))
      line = {};
    cleaned.append(line);
    cleaned += '\n';
    pos = eol + 1;
  }

  Assignment a(static_cast<size_t>(n) + 1, 0);
  std::vector<uint8_t> seen(static_cast<size_t>(n) + 1, 0);
  IntScanner scan(cleaned, "");
  int64_t tok = 0;
  bool terminated = false;
  int32_t assigned = 0;
  while (scan.next(tok)) {
    if (tok == 0) {
      terminated = true;
      break;
    }
    const int64_t v = tok > 0 ? tok : -tok;
    if (v > n)
      throw ParseError("assignment literal " + std::to_string(tok) + " out of range");
    if (seen[v]) throw ParseError("variable " + std::to_string(v) + " assigned twice");
    seen[v] = 1;
    a[v] = tok > 0 ? 1 : 0;
    ++assigned;
  }
  if (!terminated) throw ParseError("assignment value line is not 0-terminated");
  if (scan.next(tok)) throw ParseError("trailing tokens after the terminating 0");
  if (assigned != n)
    throw ParseError("assignment covers " + std::to_string(assigned) + " of " +
                     std::to_string(n) + " variables");
  return a;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path + " for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("read failure on " + path);
  return std::move(ss).str();
}

void write_text_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw IoError("write failure on " + path);
}

Instance read_dimacs_file(const std::string& path) { return parse_dimacs(read_text_file(path)); }

void write_dimacs_file(const Instance& inst, const std::string& path) {
  write_text_file(path, write_dimacs(inst));
}

Assignment read_assignment_file(const std::string& path, int32_t n) {
  return parse_assignment(read_text_file(path), n);
}

void write_assignment_file(const Assignment& a, const std::string& path) {
  write_text_file(path, write_assignment(a));
}

}  // namespace slslab
