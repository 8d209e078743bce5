#include "psiplan/oracle.hpp"

#include <algorithm>
#include <functional>

namespace psi {

namespace {

void for_each_assignment(const std::vector<Term>& vars, const std::vector<Term>& u,
                         const std::function<void(const Substitution&)>& fn) {
  Substitution s;
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == vars.size()) return fn(s);
    for (const auto& c : u) {
      s[vars[i].name] = c;
      rec(i + 1);
    }
  };
  rec(0);
}

GroundSet ground_clause(const Clause& c, const std::vector<Term>& u) {
  GroundSet out;
  for_each_assignment(c.vars(), u, [&](const Substitution& s) { out.insert(substitute(c, s)); });
  return out;
}

int max_vars(const std::vector<PsiForm>& fs) {
  int m = 0;
  for (const auto& f : fs) m = std::max(m, static_cast<int>(f.vars().size()));
  return m;
}

std::vector<Term> universe_for(const std::vector<PsiForm>& fs, const std::set<std::string>& extra, int fresh) {
  std::set<std::string> base = extra;
  for (const auto& f : fs) {
    auto c = constants_of(f);
    base.insert(c.begin(), c.end());
  }
  return make_universe(base, fresh < 0 ? max_vars(fs) + 1 : fresh);
}

std::string show(const Clause& c) { return c.empty() ? "<empty>" : c.str(); }

}  // namespace

std::vector<Term> make_universe(const std::set<std::string>& base, int fresh) {
  std::vector<Term> u;
  for (const auto& b : base) u.push_back(Term(b));
  for (int i = 1; i <= fresh; ++i) u.push_back(Term("#f" + std::to_string(i)));
  return u;
}

std::set<std::string> constants_of(const PsiForm& f) {
  auto out = f.main().constants();
  for (const auto& e : f.exceptions())
    for (const auto& [_, v] : e)
      if (v.is_const()) out.insert(v.name);
  return out;
}

GroundSet ground_psi_set(const PsiForm& f, const std::vector<Term>& u) {
  GroundSet out = ground_clause(f.main(), u);
  for (const auto& e : f.exception_clauses())
    for (const auto& c : ground_clause(e, u)) out.erase(c);
  return out;
}

GroundSet ground_psi_set(const PsiSet& s, const std::vector<Term>& u) {
  GroundSet out;
  for (const auto& f : s) {
    auto g = ground_psi_set(f, u);
    out.insert(g.begin(), g.end());
  }
  return out;
}

bool subsumed_by(const Clause& c, const GroundSet& g) {
  const auto& ls = c.literals();
  size_t n = ls.size();
  for (size_t mask = 1; mask < (size_t{1} << n); ++mask) {
    std::vector<Literal> sub;
    for (size_t i = 0; i < n; ++i)
      if (mask & (size_t{1} << i)) sub.push_back(ls[i]);
    if (g.count(Clause(std::move(sub)))) return true;
  }
  return false;
}

bool ground_entails(const std::vector<PsiForm>& phi, const PsiForm& f, const std::vector<Term>& u) {
  GroundSet g = ground_psi_set(phi, u);
  for (const auto& c : ground_psi_set(f, u))
    if (!subsumed_by(c, g)) return false;
  return true;
}

GroundSet ground_image(const PsiForm& f1, const PsiForm& f2, const std::vector<Term>& u) {
  GroundSet g1 = ground_psi_set(f1, u), out;
  for (const auto& c : ground_psi_set(f2, u))
    if (subsumed_by(c, g1)) out.insert(c);
  return out;
}

GroundSok ground_sok(const Sok& s, const std::vector<Term>& u) {
  GroundSok g;
  g.atoms.insert(s.atoms().begin(), s.atoms().end());
  g.clauses = ground_psi_set(s.forms(), u);
  return g;
}

GroundClosure ground_closure(const GroundSok& g) {
  GroundClosure r;
  r.clauses = g.clauses;
  std::vector<Clause> work(g.clauses.begin(), g.clauses.end());
  while (!work.empty()) {
    Clause c = work.back();
    work.pop_back();
    for (const auto& l : c.literals()) {
      Literal p = l;
      p.negative = false;
      if (!g.atoms.count(p)) continue;
      Clause d = c.without(l);
      if (d.empty()) {
        r.consistent = false;
        return r;
      }
      if (r.clauses.insert(d).second) work.push_back(d);
    }
  }
  return r;
}

bool ground_is_saturated(const GroundSok& g) {
  for (const auto& c : g.clauses)
    for (const auto& l : c.literals()) {
      Literal p = l;
      p.negative = false;
      if (!g.atoms.count(p)) continue;
      Clause d = c.without(l);
      if (d.empty() || !subsumed_by(d, g.clauses)) return false;
    }
  return true;
}

bool ground_is_minimal(const GroundSok& g) {
  for (const auto& c : g.clauses) {
    const auto& ls = c.literals();
    size_t n = ls.size();
    for (size_t mask = 1; mask + 1 < (size_t{1} << n); ++mask) {
      std::vector<Literal> sub;
      for (size_t i = 0; i < n; ++i)
        if (mask & (size_t{1} << i)) sub.push_back(ls[i]);
      if (g.clauses.count(Clause(std::move(sub)))) return false;
    }
  }
  return true;
}

GroundSok ground_update(const GroundSok& g, const GroundAction& a) {
  auto drop_containing = [](GroundSet& cs, const Literal& l) {
    for (auto it = cs.begin(); it != cs.end();) it = it->contains(l) ? cs.erase(it) : std::next(it);
  };
  GroundSok r = g;
  for (const auto& e : a.eff) {  // negated effects first
    Literal n = e;
    n.negative = !n.negative;
    if (n.negative) drop_containing(r.clauses, n);
    else r.atoms.erase(n);
  }
  for (const auto& e : a.eff) {
    if (e.negative) drop_containing(r.clauses, e);
    else r.atoms.erase(e);
  }
  for (const auto& e : a.eff) {
    if (e.negative) r.clauses.insert(Clause({e}));
    else r.atoms.insert(e);
  }
  return r;
}

Agreement agree_entails(const std::vector<PsiForm>& phi, const PsiForm& f, int fresh) {
  std::vector<PsiForm> all = phi;
  all.push_back(f);
  auto u = universe_for(all, {}, fresh);
  bool sym = entails_forms(phi, f);
  GroundSet g = ground_psi_set(phi, u);
  for (const auto& c : ground_psi_set(f, u))
    if (!subsumed_by(c, g)) {
      if (sym) return {false, "entails=true but " + show(c) + " is not entailed"};
      return {};
    }
  if (!sym) return {false, "entails=false but every ground clause is entailed"};
  return {};
}

Agreement agree_image(const PsiForm& f1, const PsiForm& f2, int fresh) {
  auto u = universe_for({f1, f2}, {}, fresh);
  GroundSet expect = ground_image(f1, f2, u);
  GroundSet got = ground_psi_set(image(f1, f2), u);
  for (const auto& c : expect)
    if (!got.count(c)) return {false, "missing from image: " + show(c)};
  for (const auto& c : got)
    if (!expect.count(c)) return {false, "wrongly in image: " + show(c)};
  return {};
}

Agreement agree_ediff(const PsiForm& f2, const PsiForm& f1, int fresh) {
  auto u = universe_for({f1, f2}, {}, fresh);
  GroundSet g1 = ground_psi_set(f1, u), expect;
  for (const auto& c : ground_psi_set(f2, u))
    if (!subsumed_by(c, g1)) expect.insert(c);
  GroundSet got = ground_psi_set(ediff(f2, f1), u);
  for (const auto& c : expect)
    if (!got.count(c)) return {false, "missing from e-difference: " + show(c)};
  for (const auto& c : got)
    if (!expect.count(c)) return {false, "wrongly in e-difference: " + show(c)};
  return {};
}

Agreement agree_membership(const PsiForm& f, int fresh) {
  auto u = universe_for({f}, {}, fresh);
  GroundSet in = ground_psi_set(f, u);
  for (const auto& c : ground_clause(f.main(), u))
    if (f.contains_clause(c) != (in.count(c) > 0))
      return {false, "membership of " + show(c) + " differs"};
  return {};
}

Agreement agree_saturate(const Sok& s, int fresh) {
  auto u = universe_for(s.forms(), s.constants(), fresh);
  auto sat = saturate(s);
  auto closure = ground_closure(ground_sok(s, u));
  if (closure.consistent != sat.consistent)
    return {false, std::string("consistency differs: symbolic ") + (sat.consistent ? "consistent" : "inconsistent")};
  if (!sat.consistent) return {};
  GroundSok gs = ground_sok(sat.sok, u);
  if (gs.atoms != std::set<Literal>(s.atoms().begin(), s.atoms().end())) return {false, "atoms changed"};
  for (const auto& q : closure.clauses)
    if (!subsumed_by(q, gs.clauses)) return {false, "no single member entails " + show(q)};
  for (const auto& q : gs.clauses)
    if (!subsumed_by(q, closure.clauses)) return {false, "unsound resolvent " + show(q)};
  return {};
}

Agreement agree_update(const Sok& s, const GroundAction& a, int fresh) {
  std::set<std::string> extra = s.constants();
  for (const auto& e : a.eff)
    for (const auto& t : e.args) extra.insert(t.name);
  auto u = universe_for(s.forms(), extra, fresh);
  Sok got = update(s, a, true);
  GroundSok expect = ground_update(ground_sok(s, u), a);
  GroundSok gg = ground_sok(got, u);
  if (gg.atoms != expect.atoms) return {false, "atoms differ after update"};
  for (const auto& c : expect.clauses)
    if (!gg.clauses.count(c)) return {false, "missing after update: " + show(c)};
  for (const auto& c : gg.clauses)
    if (!expect.clauses.count(c)) return {false, "wrongly kept after update: " + show(c)};
  return {};
}

}  // namespace psi
