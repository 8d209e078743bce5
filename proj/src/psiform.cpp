#include "psiplan/psiform.hpp"

#include <algorithm>
#include <numeric>

namespace psi {

PsiForm::PsiForm(Clause main, std::vector<Substitution> exceptions) : main_(std::move(main)) {
  if (main_.empty()) throw IllFormed("psi-form with an empty main clause");
  if (!main_.all_negative()) throw IllFormed("main clause must be all-negative: " + main_.str());
  auto vs = main_.var_set();
  for (const auto& e : exceptions) {
    for (const auto& [k, v] : e) {
      if (!vs.count(k) || (v.is_var() && !vs.count(v.name)))
        throw IllFormed("exception " + psi::str(e) + " binds a variable absent from " + main_.str());
    }
    bool bad = false;
    Substitution n = normalize_bindings(e, vs, &bad);
    if (bad) throw IllFormed("exception " + psi::str(e) + " binds a variable to two constants");
    if (n.empty()) throw IllFormed("exception " + psi::str(e) + " binds no variable of " + main_.str());
    exc_.push_back(std::move(n));
  }
  compute_key();
}

std::vector<Clause> PsiForm::exception_clauses() const {
  std::vector<Clause> out;
  out.reserve(exc_.size());
  for (const auto& e : exc_) out.push_back(substitute(main_, e));
  return out;
}

bool PsiForm::is_fixed_length() const {
  const auto& ls = main_.literals();
  for (size_t i = 0; i < ls.size(); ++i)
    for (size_t j = i + 1; j < ls.size(); ++j) {
      Clause cj = rename_apart(Clause({ls[j]}), Clause({ls[i]}).var_set());
      Substitution s;
      if (unify_literal(ls[i], cj.literals()[0], s, [](const std::string&) { return true; })) return false;
    }
  return true;
}

bool PsiForm::has_repeated_vars() const {
  for (const auto& l : main_.literals()) {
    std::set<std::string> seen;
    for (const auto& t : l.args)
      if (t.is_var() && !seen.insert(t.name).second) return true;
  }
  return false;
}

bool PsiForm::contains_clause(const Clause& c) const {
  auto cv = c.var_set();
  Clause m = rename_apart(main_, cv);
  if (set_match(m, c).empty()) return false;
  for (const auto& e : exception_clauses()) {
    Clause er = rename_apart(e, cv);
    if (!set_match(er, c).empty()) return false;
  }
  return true;
}

PsiForm PsiForm::normalized() const {
  auto ecs = exception_clauses();
  std::vector<size_t> order(exc_.size());
  std::iota(order.begin(), order.end(), 0);
  // e_j is redundant when its clause is an instance of e_i's clause
  auto covers = [&](size_t i, size_t j) {
    Clause ei = rename_apart(ecs[i], ecs[j].var_set());
    return !set_match(ei, ecs[j]).empty();
  };
  std::vector<size_t> kept;
  for (size_t j : order) {
    bool redundant = false;
    for (size_t i : kept)
      if (covers(i, j)) {
        redundant = true;
        break;
      }
    if (redundant) continue;
    kept.erase(std::remove_if(kept.begin(), kept.end(), [&](size_t i) { return covers(j, i); }), kept.end());
    kept.push_back(j);
  }
  std::sort(kept.begin(), kept.end());
  PsiForm out;
  out.main_ = main_;
  for (size_t i : kept) out.exc_.push_back(exc_[i]);
  out.compute_key();
  return out;
}

PsiForm PsiForm::with_exception(const Substitution& s) const {
  std::vector<Substitution> e = exc_;
  e.push_back(s);
  return PsiForm(main_, e);
}

PsiForm PsiForm::renamed(const Substitution& ren) const {
  if (ren.empty()) return *this;
  Clause m = substitute(main_, ren);
  std::vector<Substitution> es;
  for (const auto& e : exc_) {
    Substitution n;
    for (const auto& [k, v] : e) n[walk(Term(k), ren).name] = walk(v, ren);
    es.push_back(n);
  }
  return PsiForm(m, es);
}

void PsiForm::compute_key() {
  const auto& ls = main_.literals();
  auto shape = [](const Literal& l) {
    std::string s = l.predicate + "(";
    for (const auto& t : l.args) s += (t.is_var() ? std::string("?") : t.name) + ",";
    return s;
  };
  std::vector<size_t> idx(ls.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return shape(ls[a]) < shape(ls[b]); });
  Substitution ren;
  int n = 0;
  for (size_t i : idx)
    for (const auto& t : ls[i].args)
      if (t.is_var() && !ren.count(t.name)) ren[t.name] = Term("?" + std::to_string(n++));
  std::string k;
  for (size_t i : idx) k += substitute(ls[i], ren).str() + "|";
  std::set<std::string> nv;
  for (const auto& [_, v] : ren) nv.insert(v.name);
  std::set<std::string> es;
  for (const auto& e : exc_) {
    Substitution r;
    for (const auto& [a, b] : e) r[ren.at(a).name] = walk(b, ren);
    es.insert(psi::str(normalize_bindings(r, nv)));
  }
  for (const auto& e : es) k += ";" + e;
  key_ = k;
}

std::string PsiForm::str() const {
  std::string out = "[" + main_.str();
  if (!exc_.empty()) {
    std::set<std::string> es;
    for (const auto& e : exc_) es.insert(psi::str(e));
    out += " except ";
    bool first = true;
    for (const auto& e : es) {
      if (!first) out += "; ";
      first = false;
      out += e;
    }
  }
  return out + "]";
}

PsiForm normalize_well_formed(const PsiForm& f) { return f.normalized(); }
bool is_fixed_length(const PsiForm& f) { return f.is_fixed_length(); }
bool contains_clause(const PsiForm& f, const Clause& c) { return f.contains_clause(c); }

PsiSet canonical(PsiSet s) {
  std::sort(s.begin(), s.end(), [](const PsiForm& a, const PsiForm& b) { return a.str() < b.str(); });
  PsiSet out;
  std::set<std::string> seen;
  for (auto& f : s)
    if (seen.insert(f.key()).second) out.push_back(std::move(f));
  return out;
}

std::string str(const PsiSet& s) {
  if (s.empty()) return "{}";
  std::string out;
  for (const auto& f : canonical(s)) out += f.str() + "\n";
  out.pop_back();
  return out;
}

bool same_set(const PsiSet& a, const PsiSet& b) {
  std::set<std::string> ka, kb;
  for (const auto& f : a) ka.insert(f.key());
  for (const auto& f : b) kb.insert(f.key());
  return ka == kb;
}

}  // namespace psi
