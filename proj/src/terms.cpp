#include "psiplan/terms.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace psi {

Term var(const std::string& name) { return Term(name.rfind('?', 0) == 0 ? name : "?" + name); }

Term cst(const std::string& name) {
  if (name.empty() || name[0] == '?') throw Error("bad constant name: '" + name + "'");
  return Term(name);
}

bool operator<(const Literal& a, const Literal& b) {
  if (a.predicate != b.predicate) return a.predicate < b.predicate;
  if (a.args != b.args) return a.args < b.args;
  return a.negative < b.negative;
}

bool Literal::is_ground() const {
  return std::none_of(args.begin(), args.end(), [](const Term& t) { return t.is_var(); });
}

std::string Literal::str() const {
  std::string out = negative ? "~" : "";
  out += predicate;
  out += '(';
  for (size_t i = 0; i < args.size(); ++i) {
    if (i) out += ',';
    out += args[i].name;
  }
  out += ')';
  return out;
}

Clause::Clause(std::vector<Literal> lits) : lits_(std::move(lits)) {
  std::sort(lits_.begin(), lits_.end());
  lits_.erase(std::unique(lits_.begin(), lits_.end()), lits_.end());
}

bool Clause::is_ground() const {
  return std::all_of(lits_.begin(), lits_.end(), [](const Literal& l) { return l.is_ground(); });
}

bool Clause::all_negative() const {
  return std::all_of(lits_.begin(), lits_.end(), [](const Literal& l) { return l.negative; });
}

bool Clause::contains(const Literal& l) const { return std::binary_search(lits_.begin(), lits_.end(), l); }

bool Clause::subset_of(const Clause& other) const {
  return std::includes(other.lits_.begin(), other.lits_.end(), lits_.begin(), lits_.end());
}

std::vector<Term> Clause::vars() const {
  std::vector<Term> out;
  std::set<std::string> seen;
  for (const auto& l : lits_)
    for (const auto& t : l.args)
      if (t.is_var() && seen.insert(t.name).second) out.push_back(t);
  return out;
}

std::set<std::string> Clause::var_set() const {
  std::set<std::string> out;
  for (const auto& l : lits_)
    for (const auto& t : l.args)
      if (t.is_var()) out.insert(t.name);
  return out;
}

std::set<std::string> Clause::constants() const {
  std::set<std::string> out;
  for (const auto& l : lits_)
    for (const auto& t : l.args)
      if (t.is_const()) out.insert(t.name);
  return out;
}

Clause Clause::without(const Literal& l) const {
  Clause c;
  for (const auto& x : lits_)
    if (x != l) c.lits_.push_back(x);
  return c;
}

std::string Clause::str() const {
  std::string out;
  for (size_t i = 0; i < lits_.size(); ++i) {
    if (i) out += '|';
    out += lits_[i].str();
  }
  return out;
}

Term walk(const Term& t, const Substitution& s) {
  Term cur = t;
  while (cur.is_var()) {
    auto it = s.find(cur.name);
    if (it == s.end() || it->second == cur) break;
    cur = it->second;
  }
  return cur;
}

Term substitute(const Term& t, const Substitution& s) { return walk(t, s); }

Literal substitute(const Literal& l, const Substitution& s) {
  Literal out{l.negative, l.predicate, {}};
  out.args.reserve(l.args.size());
  for (const auto& t : l.args) out.args.push_back(walk(t, s));
  return out;
}

Clause substitute(const Clause& c, const Substitution& s) {
  if (s.empty()) return c;
  std::vector<Literal> lits;
  lits.reserve(c.size());
  for (const auto& l : c.literals()) lits.push_back(substitute(l, s));
  return Clause(std::move(lits));
}

std::string str(const Substitution& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& [k, v] : s) {
    if (!first) out += ", ";
    first = false;
    out += k + "=" + v.name;
  }
  return out + "}";
}

std::string str(const MatchSet& m) {
  std::string out = "{";
  for (size_t i = 0; i < m.size(); ++i) {
    if (i) out += "; ";
    out += str(m[i]);
  }
  return out + "}";
}

Substitution resolve(const Substitution& s) {
  Substitution out;
  for (const auto& [k, v] : s) {
    Term t = walk(v, s);
    if (t.name != k) out[k] = t;
  }
  return out;
}

namespace {

using Bindable = std::function<bool(const std::string&)>;

bool unify_term(const Term& x, const Term& y, Substitution& s, const Bindable& bindable) {
  Term a = walk(x, s), b = walk(y, s);
  if (a == b) return true;
  if (a.is_var() && bindable(a.name)) {
    s[a.name] = b;
    return true;
  }
  if (b.is_var() && bindable(b.name)) {
    s[b.name] = a;
    return true;
  }
  return false;
}

struct Search {
  const std::vector<Literal>& a;
  const std::vector<Literal>& b;
  const Bindable& bindable;
  bool cover_b;
  MatchSet out;

  bool satisfied(const Literal& l, const std::vector<Literal>& side, const Substitution& s) const {
    Literal la = substitute(l, s);
    for (const auto& m : side)
      if (substitute(m, s) == la) return true;
    return false;
  }

  void run(size_t i, const Substitution& s) {
    if (i < a.size()) {
      if (satisfied(a[i], b, s)) return run(i + 1, s);
      for (const auto& m : b) {
        Substitution t = s;
        if (unify_literal(a[i], m, t, bindable)) run(i + 1, t);
      }
      return;
    }
    size_t j = i - a.size();
    if (cover_b && j < b.size()) {
      if (satisfied(b[j], a, s)) return run(i + 1, s);
      for (const auto& l : a) {
        Substitution t = s;
        if (unify_literal(l, b[j], t, bindable)) run(i + 1, t);
      }
      return;
    }
    out.push_back(resolve(s));
  }
};

std::vector<std::string> domain_of(const Clause& a, const Clause& b) {
  std::set<std::string> d = a.var_set();
  auto vb = b.var_set();
  d.insert(vb.begin(), vb.end());
  return {d.begin(), d.end()};
}

// Drops duplicates and non-most-general results, keeping enumeration order.
MatchSet most_general(const MatchSet& in, const std::vector<std::string>& domain) {
  MatchSet kept;
  for (const auto& s : in) {
    bool covered = false;
    for (const auto& k : kept)
      if (is_instance_of(s, k, domain)) {
        covered = true;
        break;
      }
    if (covered) continue;
    kept.erase(std::remove_if(kept.begin(), kept.end(),
                              [&](const Substitution& k) { return is_instance_of(k, s, domain); }),
               kept.end());
    kept.push_back(s);
  }
  return kept;
}

MatchSet run_search(const Clause& a, const Clause& b, const Bindable& bindable, bool cover_b) {
  Search srch{a.literals(), b.literals(), bindable, cover_b, {}};
  srch.run(0, {});
  return most_general(srch.out, domain_of(a, b));
}

}  // namespace

bool unify_literal(const Literal& a, const Literal& b, Substitution& s, const Bindable& bindable) {
  if (a.negative != b.negative || a.predicate != b.predicate || a.args.size() != b.args.size())
    return false;
  for (size_t i = 0; i < a.args.size(); ++i)
    if (!unify_term(a.args[i], b.args[i], s, bindable)) return false;
  return true;
}

MatchSet set_match(const Clause& a, const Clause& b, const std::set<std::string>& restrict) {
  return run_search(a, b, [&](const std::string& v) { return restrict.count(v) > 0; }, true);
}

MatchSet set_match(const Clause& a, const Clause& b) { return set_match(a, b, a.var_set()); }

MatchSet set_unify(const Clause& a, const Clause& b) {
  return run_search(a, b, [](const std::string&) { return true; }, true);
}

MatchSet subset_match(const Clause& a, const Clause& b, const std::set<std::string>& restrict) {
  return run_search(a, b, [&](const std::string& v) { return restrict.count(v) > 0; }, false);
}

MatchSet subset_match(const Clause& a, const Clause& b) { return subset_match(a, b, a.var_set()); }

MatchSet subset_unify(const Clause& a, const Clause& b) {
  return run_search(a, b, [](const std::string&) { return true; }, false);
}

bool is_instance_of(const Substitution& s1, const Substitution& s2, const std::vector<std::string>& domain) {
  std::unordered_map<std::string, std::string> rho;
  for (const auto& v : domain) {
    Term x = walk(Term(v), s2), y = walk(Term(v), s1);
    if (x.is_const()) {
      if (x != y) return false;
      continue;
    }
    auto [it, fresh] = rho.emplace(x.name, y.name);
    if (!fresh && it->second != y.name) return false;
  }
  return true;
}

Substitution normalize_bindings(const Substitution& s, const std::set<std::string>& vars, bool* contradictory) {
  std::unordered_map<std::string, std::string> parent;
  std::function<std::string(const std::string&)> find = [&](const std::string& x) -> std::string {
    auto it = parent.find(x);
    if (it == parent.end() || it->second == x) return x;
    std::string r = find(it->second);
    parent[x] = r;
    return r;
  };
  bool bad = false;
  std::unordered_map<std::string, std::string> konst;  // class root -> constant
  auto unite = [&](const Term& x, const Term& y) {
    std::string rx = x.is_var() ? find(x.name) : "", ry = y.is_var() ? find(y.name) : "";
    if (x.is_const() && y.is_const()) {
      if (x != y) bad = true;
      return;
    }
    if (x.is_const()) std::swap(rx, ry);
    const Term& c = x.is_const() ? x : y;
    if (x.is_const() || y.is_const()) {
      auto [it, fresh] = konst.emplace(rx, c.name);
      if (!fresh && it->second != c.name) bad = true;
      return;
    }
    if (rx == ry) return;
    parent[rx] = ry;
    auto kx = konst.find(rx);
    if (kx != konst.end()) {
      auto [it, fresh] = konst.emplace(ry, kx->second);
      if (!fresh && it->second != kx->second) bad = true;
      konst.erase(rx);
    }
  };
  for (const auto& [k, v] : s) unite(Term(k), v);
  if (contradictory) *contradictory = bad;
  if (bad) return {};

  std::map<std::string, std::vector<std::string>> classes;
  for (const auto& v : vars) classes[find(v)].push_back(v);
  Substitution out;
  for (const auto& [root, members] : classes) {
    auto k = konst.find(root);
    if (k != konst.end()) {
      for (const auto& m : members) out[m] = Term(k->second);
    } else if (members.size() > 1) {
      // members come from an ordered set, so members[0] is the smallest name
      for (size_t i = 1; i < members.size(); ++i) out[members[i]] = Term(members[0]);
    }
  }
  return out;
}

Substitution trans(const Substitution& s, const std::set<std::string>& keep) {
  return normalize_bindings(s, keep);
}

Clause rename_apart(const Clause& c, const std::set<std::string>& avoid, Substitution* out) {
  Substitution ren;
  std::set<std::string> used = avoid;
  auto cv = c.var_set();
  used.insert(cv.begin(), cv.end());
  for (const auto& v : cv) {
    if (!avoid.count(v)) continue;
    std::string base = v.substr(0, v.find('\''));
    for (int i = 1;; ++i) {
      std::string cand = base + "'" + std::to_string(i);
      if (!used.count(cand)) {
        used.insert(cand);
        ren[v] = Term(cand);
        break;
      }
    }
  }
  if (out) *out = ren;
  return substitute(c, ren);
}

}  // namespace psi
