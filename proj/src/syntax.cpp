#include "psiplan/syntax.hpp"

#include <cctype>
#include <sstream>

namespace psi {

namespace {

bool name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool const_char(char c) { return name_char(c) || c == '.' || c == '/'; }

}  // namespace

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_top(const std::string& text, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : text) {
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
    if (c == sep && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (depth != 0) throw ParseError("unbalanced brackets in '" + text + "'");
  out.push_back(trim(cur));
  return out;
}

std::vector<SourceLine> source_lines(const std::string& text) {
  std::vector<SourceLine> out;
  std::istringstream in(text);
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    auto h = line.find('#');
    if (h != std::string::npos) line = line.substr(0, h);
    auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    out.push_back({n, static_cast<int>(start) + 1, trim(line)});
  }
  return out;
}

Term parse_term(const std::string& text) {
  std::string t = trim(text);
  if (t.empty()) throw ParseError("empty term");
  if (t[0] == '?') {
    if (t.size() == 1) throw ParseError("variable without a name");
    for (size_t i = 1; i < t.size(); ++i)
      if (!name_char(t[i])) throw ParseError("bad variable '" + t + "'");
    return Term(t);
  }
  for (char c : t)
    if (!const_char(c)) throw ParseError("bad constant '" + t + "'");
  return Term(t);
}

Literal parse_literal(const std::string& text) {
  std::string t = trim(text);
  Literal l;
  size_t i = 0;
  if (i < t.size() && t[i] == '~') {
    l.negative = true;
    ++i;
  }
  size_t start = i;
  while (i < t.size() && name_char(t[i])) ++i;
  l.predicate = t.substr(start, i - start);
  if (l.predicate.empty() || std::isdigit(static_cast<unsigned char>(l.predicate[0])))
    throw ParseError("bad predicate in '" + t + "'");
  std::string rest = trim(t.substr(i));
  if (rest.empty()) return l;
  if (rest.front() != '(' || rest.back() != ')') throw ParseError("bad literal '" + t + "'");
  std::string inner = trim(rest.substr(1, rest.size() - 2));
  if (inner.empty()) return l;
  for (const auto& a : split_top(inner, ',')) l.args.push_back(parse_term(a));
  return l;
}

Clause parse_clause(const std::string& text) {
  std::vector<Literal> lits;
  for (const auto& p : split_top(text, '|')) lits.push_back(parse_literal(p));
  return Clause(std::move(lits));
}

namespace {

PsiForm checked(PsiForm f) {
  if (f.has_repeated_vars()) throw ParseError("a variable repeats inside one literal of " + f.str());
  return f;
}

}  // namespace

PsiForm parse_psiform(const std::string& text) {
  std::string t = trim(text);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']') throw ParseError("psi-form must be bracketed: '" + t + "'");
  std::string body = t.substr(1, t.size() - 2);
  size_t pos = std::string::npos;
  int depth = 0;
  for (size_t i = 0; i + 6 <= body.size(); ++i) {
    char c = body[i];
    if (c == '(' || c == '{') ++depth;
    if (c == ')' || c == '}') --depth;
    if (depth == 0 && body.compare(i, 6, "except") == 0 && (i == 0 || !name_char(body[i - 1])) &&
        (i + 6 == body.size() || !name_char(body[i + 6]))) {
      pos = i;
      break;
    }
  }
  Clause main = parse_clause(body.substr(0, pos));
  std::vector<Substitution> excs;
  if (pos != std::string::npos) {
    for (const auto& e : split_top(body.substr(pos + 6), ';')) {
      if (e.size() < 2 || e.front() != '{' || e.back() != '}') throw ParseError("bad exception '" + e + "'");
      Substitution s;
      std::string inner = trim(e.substr(1, e.size() - 2));
      if (inner.empty()) throw ParseError("empty exception in '" + t + "'");
      for (const auto& b : split_top(inner, ',')) {
        auto eq = b.find('=');
        if (eq == std::string::npos) throw ParseError("bad binding '" + b + "'");
        Term v = parse_term(b.substr(0, eq));
        if (!v.is_var()) throw ParseError("binding must start with a variable: '" + b + "'");
        Term val = parse_term(b.substr(eq + 1));
        auto [it, fresh] = s.emplace(v.name, val);
        if (!fresh && it->second != val) throw ParseError("variable bound twice in exception " + e);
      }
      excs.push_back(s);
    }
  }
  return checked(PsiForm(main, excs));
}

Proposition parse_proposition(const std::string& text) {
  std::string t = trim(text);
  if (!t.empty() && t[0] == '[') return parse_psiform(t);
  Literal l = parse_literal(t);
  if (l.negative) return checked(PsiForm(Clause({l})));
  if (!l.is_ground()) throw ParseError("atoms must be ground: '" + t + "'");
  return l;
}

std::string str(const Proposition& p) {
  if (auto l = std::get_if<Literal>(&p)) return l->str();
  return std::get<PsiForm>(p).str();
}

}  // namespace psi
