#pragma once

#include <string>
#include <variant>
#include <vector>

#include "psiplan/psiform.hpp"

namespace psi {

class ParseError : public Error {
 public:
  using Error::Error;
};

// A proposition is a ground atom or a psi-form; a negative literal parses as
// the simple psi-form holding just that literal.
using Proposition = std::variant<Literal, PsiForm>;

std::string str(const Proposition& p);

Term parse_term(const std::string& text);
Literal parse_literal(const std::string& text);
Clause parse_clause(const std::string& text);  // literals separated by '|'
PsiForm parse_psiform(const std::string& text);
Proposition parse_proposition(const std::string& text);

// Splits on `sep` at bracket depth zero.
std::vector<std::string> split_top(const std::string& text, char sep);
std::string trim(const std::string& s);
// A content line with its 1-based line number and the column where it starts.
// '#' comments and blank lines are dropped.
struct SourceLine {
  int line = 0;
  int column = 0;
  std::string text;
};
std::vector<SourceLine> source_lines(const std::string& text);

// Runs f, prefixing any ParseError with the location of `at`.
template <class F>
auto located(const SourceLine& at, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError& e) {
    throw ParseError("line " + std::to_string(at.line) + ", column " + std::to_string(at.column) + ": " + e.what());
  }
}

}  // namespace psi
