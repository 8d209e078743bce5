#include "psiplan/calculus.hpp"

#include <algorithm>
#include <numeric>

namespace psi {

namespace {

void require_fixed_length(const PsiForm& f) {
  if (!f.is_fixed_length()) throw NotFixedLength("not fixed-length: " + f.str());
}

void add_unique(std::vector<Clause>& out, const Clause& c) {
  if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
}

PsiSet flat_subtract(const PsiSet& x, const Clause& m) {
  PsiSet out;
  for (const auto& f : x) {
    auto r = subtract_simple(f, m);
    out.insert(out.end(), r.begin(), r.end());
  }
  return out;
}

PsiSet minus_exceptions(PsiSet x, const PsiForm& owner) {
  for (const auto& e : owner.exception_clauses()) x = flat_subtract(x, e);
  return x;
}

// Every subset-unifier of m1 into f leaves f's main clause uninstantiated.
bool clean(const Clause& m1, const PsiForm& f) {
  auto vs = f.vars();
  Clause m1r = rename_apart(m1, vs);
  for (const auto& th : subset_unify(m1r, f.main()))
    if (!trans(th, vs).empty()) return false;
  return true;
}

}  // namespace

bool subset_simple(const Clause& m1, const Clause& m2) {
  Clause m2r = rename_apart(m2, m1.var_set());
  return !set_match(m2r, m1, m2r.var_set()).empty();
}

std::vector<Clause> intersect_simple(const Clause& m1, const Clause& m2) {
  auto v1 = m1.var_set();
  Clause m2r = rename_apart(m2, v1);
  std::vector<Clause> out;
  for (const auto& s : set_unify(m1, m2r)) add_unique(out, substitute(m1, trans(s, v1)));
  return out;
}

PsiSet subtract_simple(const PsiForm& f, const Clause& m) {
  auto vs = f.vars();
  Clause mr = rename_apart(m, vs);
  std::vector<Substitution> excs = f.exceptions();
  bool changed = false;
  for (const auto& s : set_unify(f.main(), mr)) {
    Substitution t = trans(s, vs);
    if (t.empty()) return {};
    excs.push_back(t);
    changed = true;
  }
  if (!changed) return {f};
  return {PsiForm(f.main(), excs).normalized()};
}

PsiSet intersect(const PsiForm& f, const Clause& m) {
  PsiSet out;
  for (const auto& c : intersect_simple(f.main(), m)) {
    auto x = minus_exceptions({PsiForm(c)}, f);
    out.insert(out.end(), x.begin(), x.end());
  }
  return out;
}

PsiSet subtract(const PsiSet& x, const PsiForm& y) {
  PsiSet out;
  for (const auto& f : x) {
    auto r = subtract_simple(f, y.main());
    out.insert(out.end(), r.begin(), r.end());
    for (const auto& e : y.exception_clauses()) {
      auto i = intersect(f, e);
      out.insert(out.end(), i.begin(), i.end());
    }
  }
  return reduce(out);
}

bool is_subset(const PsiForm& a, const PsiForm& b) {
  if (!subset_simple(a.main(), b.main())) return false;
  for (const auto& e : b.exception_clauses())
    if (!intersect(a, e).empty()) return false;
  return true;
}

PsiSet reduce(PsiSet s) {
  for (auto& f : s) f = f.normalized();
  s = canonical(std::move(s));
  std::vector<bool> drop(s.size(), false);
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = 0; j < s.size() && !drop[i]; ++j)
      if (i != j && !drop[j] && is_subset(s[i], s[j])) drop[i] = true;
  PsiSet out;
  for (size_t i = 0; i < s.size(); ++i)
    if (!drop[i]) out.push_back(s[i]);
  return out;
}

std::vector<Clause> compute_simple_img(const Clause& m1, const PsiForm& f2) {
  auto v2 = f2.vars();
  Clause m1r = rename_apart(m1, v2);
  std::vector<Clause> out;
  for (const auto& th : subset_unify(m1r, f2.main())) add_unique(out, substitute(f2.main(), trans(th, v2)));
  return out;
}

PsiSet compute_simple_ediff(const PsiForm& f2, const Clause& m1) {
  auto v2 = f2.vars();
  Clause m1r = rename_apart(m1, v2);
  if (!subset_match(m1r, f2.main(), m1r.var_set()).empty()) return {};
  std::vector<Substitution> excs = f2.exceptions();
  for (const auto& th : subset_unify(m1r, f2.main())) excs.push_back(trans(th, v2));
  return {PsiForm(f2.main(), excs).normalized()};
}

bool nearly_entails(const PsiForm& f1, const PsiForm& f2) {
  Clause m1r = rename_apart(f1.main(), f2.vars());
  return !subset_match(m1r, f2.main(), m1r.var_set()).empty();
}

std::vector<Clause> compute_holes(const PsiForm& f1, const PsiForm& f2) {
  Substitution ren;
  rename_apart(f1.main(), f2.vars(), &ren);
  PsiForm f1r = f1.renamed(ren);
  MatchSet thetas = subset_match(f1r.main(), f2.main(), f1r.vars());
  if (thetas.empty()) throw Error("holes need near entailment of " + f2.str() + " by " + f1.str());
  PsiForm main2(f2.main());
  auto excs = f1r.exception_clauses();
  std::vector<Clause> acc;
  bool first = true;
  for (const auto& th : thetas) {
    Clause c1 = substitute(f1r.main(), th);
    std::vector<Clause> round;
    for (const auto& e : excs)
      for (const auto& k : intersect_simple(e, c1))
        for (const auto& p : compute_simple_img(k, main2)) add_unique(round, p);
    if (round.empty()) return {};
    if (first) {
      acc = round;
      first = false;
    } else {
      std::vector<Clause> next;
      for (const auto& p : acc)
        for (const auto& q : round)
          for (const auto& r : intersect_simple(p, q)) add_unique(next, r);
      acc = std::move(next);
    }
    if (acc.empty()) return {};
  }
  return acc;
}

PsiSet compute_img2(const PsiForm& f1, const PsiForm& f2) {
  PsiForm f = f2;
  for (const auto& h : compute_holes(f1, f2)) {
    auto r = subtract_simple(f, h);
    if (r.empty()) return {};
    f = r[0];
  }
  return {f.normalized()};
}

PsiSet compute_ediff2(const PsiForm& f2, const PsiForm& f1) {
  PsiSet out;
  for (const auto& h : compute_holes(f1, f2)) {
    auto x = minus_exceptions({PsiForm(h)}, f2);
    out.insert(out.end(), x.begin(), x.end());
  }
  return reduce(out);
}

PsiSet compute_img3(const PsiForm& f1, const PsiForm& f2) {
  PsiSet out;
  for (const auto& p : compute_simple_img(f1.main(), f2)) {
    auto r = compute_img2(f1, PsiForm(p));
    out.insert(out.end(), r.begin(), r.end());
  }
  return reduce(minus_exceptions(out, f2));
}

PsiSet compute_ediff3(const PsiForm& f2, const PsiForm& f1) {
  auto pieces = compute_simple_img(f1.main(), f2);
  PsiSet out = {f2};
  for (const auto& p : pieces) out = flat_subtract(out, p);
  for (const auto& p : pieces)
    for (const auto& x : minus_exceptions({PsiForm(p)}, f2)) {
      auto r = compute_ediff2(x, f1);
      out.insert(out.end(), r.begin(), r.end());
    }
  return reduce(out);
}

PsiSet image(const PsiForm& f1, const PsiForm& f2) {
  require_fixed_length(f1);
  require_fixed_length(f2);
  Clause m1r = rename_apart(f1.main(), f2.vars());
  if (subset_unify(m1r, f2.main()).empty()) return {};
  if (clean(f1.main(), f2)) return reduce(compute_img2(f1, f2));
  return compute_img3(f1, f2);
}

PsiSet ediff(const PsiForm& f2, const PsiForm& f1) {
  require_fixed_length(f1);
  require_fixed_length(f2);
  Clause m1r = rename_apart(f1.main(), f2.vars());
  if (subset_unify(m1r, f2.main()).empty()) return {f2.normalized()};
  if (clean(f1.main(), f2)) return compute_ediff2(f2, f1);
  auto pieces = compute_simple_img(f1.main(), f2);
  if (std::all_of(pieces.begin(), pieces.end(), [&](const Clause& p) { return clean(f1.main(), PsiForm(p)); }))
    return compute_ediff3(f2, f1);
  // A piece is reached by unifiers that instantiate it further, so its holes
  // may hold clauses entailed through another piece; subtract the image instead.
  PsiSet out = {f2};
  for (const auto& f : image(f1, f2)) out = subtract(out, f);
  return reduce(out);
}

PsiSet ediff(const PsiSet& x, const PsiForm& f1) {
  PsiSet out;
  for (const auto& f : x) {
    auto r = ediff(f, f1);
    out.insert(out.end(), r.begin(), r.end());
  }
  return reduce(out);
}

namespace {

bool entails_rec(const std::vector<const PsiForm*>& phi, const PsiForm& f) {
  std::vector<size_t> cand;
  for (size_t i = 0; i < phi.size(); ++i)
    if (nearly_entails(*phi[i], f)) cand.push_back(i);
  std::stable_sort(cand.begin(), cand.end(),
                   [&](size_t a, size_t b) { return phi[a]->exceptions().size() < phi[b]->exceptions().size(); });
  for (size_t i : cand) {
    PsiSet d = ediff(f, *phi[i]);
    if (d.size() == 1 && d[0] == f) continue;
    // Whatever the first useful member leaves over must follow from the rest,
    // so no other choice needs to be explored.
    std::vector<const PsiForm*> rest;
    for (size_t j = 0; j < phi.size(); ++j)
      if (j != i) rest.push_back(phi[j]);
    for (const auto& g : d)
      if (!entails_rec(rest, g)) return false;
    return true;
  }
  return false;
}

}  // namespace

bool entails_forms(const std::vector<PsiForm>& phi, const PsiForm& f) {
  require_fixed_length(f);
  std::vector<const PsiForm*> ptrs;
  for (const auto& p : phi) ptrs.push_back(&p);
  return entails_rec(ptrs, f.normalized());
}

}  // namespace psi
