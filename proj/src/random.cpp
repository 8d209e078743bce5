#include "psiplan/random.hpp"

#include <algorithm>

namespace psi {

Generator::Generator(uint64_t seed, GenParams p) : rng_(seed), p_(p) {
  for (int i = 0; i < p_.preds; ++i) arity_.push_back(uniform(1, p_.max_arity));
}

int Generator::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

bool Generator::coin(double p) { return std::bernoulli_distribution(p)(rng_); }

Term Generator::constant() { return Term(std::string(1, static_cast<char>('A' + uniform(0, p_.consts - 1)))); }

Literal Generator::atom() {
  int pr = uniform(0, p_.preds - 1);
  Literal l{false, "P" + std::to_string(pr), {}};
  for (int i = 0; i < arity(pr); ++i) l.args.push_back(constant());
  return l;
}

bool Generator::acceptable(const Clause& main) const {
  if (main.empty() || static_cast<int>(main.size()) > p_.max_lits) return false;
  if (static_cast<int>(main.var_set().size()) > p_.max_vars) return false;
  PsiForm f(main);
  return f.is_fixed_length() && !f.has_repeated_vars();
}

std::vector<Substitution> Generator::exceptions(const Clause& main) {
  std::vector<Substitution> out;
  auto vars = main.vars();
  if (vars.empty()) return out;
  int k = uniform(0, p_.max_exc);
  for (int n = 0; n < k; ++n) {
    Substitution s;
    for (const auto& v : vars)
      if (coin(0.5)) {
        if (vars.size() == 1 || coin(0.75)) {
          s[v.name] = constant();
        } else {
          Term w = vars[static_cast<size_t>(uniform(0, static_cast<int>(vars.size()) - 1))];
          if (w != v) s[v.name] = w;
        }
      }
    if (s.empty()) s[vars[static_cast<size_t>(uniform(0, static_cast<int>(vars.size()) - 1))].name] = constant();
    try {
      PsiForm(main, {s});
      out.push_back(s);
    } catch (const IllFormed&) {
    }
  }
  return out;
}

PsiForm Generator::form(const std::string& prefix) {
  for (;;) {
    int pool = uniform(0, p_.max_vars);
    int nl = uniform(1, p_.max_lits);
    std::vector<Literal> lits;
    for (int i = 0; i < nl; ++i) {
      int pr = uniform(0, p_.preds - 1);
      Literal l{true, "P" + std::to_string(pr), {}};
      std::vector<int> unused(static_cast<size_t>(pool));
      for (int v = 0; v < pool; ++v) unused[static_cast<size_t>(v)] = v;
      for (int a = 0; a < arity(pr); ++a) {
        if (!unused.empty() && coin(0.65)) {
          size_t j = static_cast<size_t>(uniform(0, static_cast<int>(unused.size()) - 1));
          l.args.push_back(Term(prefix + std::to_string(unused[j])));
          unused.erase(unused.begin() + static_cast<long>(j));
        } else {
          l.args.push_back(constant());
        }
      }
      lits.push_back(l);
    }
    Clause main(lits);
    if (static_cast<int>(main.size()) != nl || !acceptable(main)) continue;
    return PsiForm(main, exceptions(main)).normalized();
  }
}

PsiForm Generator::related(const PsiForm& base, const std::string& prefix) {
  for (int attempt = 0; attempt < 60; ++attempt) {
    Substitution ren;
    int n = 0;
    for (const auto& v : base.main().vars()) ren[v.name] = Term(prefix + std::to_string(n++));
    // One-step renaming: the old and new names may overlap.
    std::vector<Literal> lits = base.main().literals();
    for (auto& l : lits)
      for (auto& t : l.args)
        if (t.is_var()) t = ren.at(t.name);
    int mode = uniform(0, 2);
    if (mode == 2 && lits.size() > 1) lits.erase(lits.begin() + uniform(0, static_cast<int>(lits.size()) - 1));
    Clause c(lits);
    if (mode != 1) {
      Substitution inst;
      auto vs = c.vars();
      for (const auto& v : vs) {
        if (coin(0.3)) inst[v.name] = constant();
        else if (coin(0.15) && vs.size() > 1) {
          Term w = vs[static_cast<size_t>(uniform(0, static_cast<int>(vs.size()) - 1))];
          if (w != v && !inst.count(w.name)) inst[v.name] = w;
        }
      }
      c = substitute(c, resolve(inst));
    } else {
      std::vector<Literal> gen;
      for (auto l : c.literals()) {
        for (auto& t : l.args)
          if (t.is_const() && coin(0.5)) t = Term(prefix + std::to_string(n++));
        gen.push_back(l);
      }
      c = Clause(gen);
    }
    lits = c.literals();
    int extra = uniform(0, 2);
    int pool = p_.max_vars;
    for (int i = 0; i < extra; ++i) {
      int pr = uniform(0, p_.preds - 1);
      Literal l{true, "P" + std::to_string(pr), {}};
      std::vector<int> unused(static_cast<size_t>(pool));
      for (int v = 0; v < pool; ++v) unused[static_cast<size_t>(v)] = v;
      for (int a = 0; a < arity(pr); ++a) {
        if (!unused.empty() && coin(0.6)) {
          size_t j = static_cast<size_t>(uniform(0, static_cast<int>(unused.size()) - 1));
          l.args.push_back(Term(prefix + std::to_string(unused[j])));
          unused.erase(unused.begin() + static_cast<long>(j));
        } else {
          l.args.push_back(constant());
        }
      }
      lits.push_back(l);
    }
    for (auto& l : lits) l.negative = true;
    Clause main(lits);
    if (main.size() != lits.size() || !acceptable(main)) continue;
    return PsiForm(main, exceptions(main)).normalized();
  }
  return form(prefix);
}

Sok Generator::sok(int max_atoms, int max_forms) {
  Sok s;
  std::vector<PsiForm> fs;
  int nf = uniform(1, max_forms);
  for (int i = 0; i < nf; ++i) {
    if (fs.empty() || coin(0.4)) fs.push_back(form());
    else fs.push_back(related(fs[static_cast<size_t>(uniform(0, static_cast<int>(fs.size()) - 1))], "?x"));
  }
  for (const auto& f : fs) s.add_form(f);
  int na = uniform(0, max_atoms);
  for (int i = 0; i < na; ++i) {
    if (coin(0.75)) {
      const auto& f = fs[static_cast<size_t>(uniform(0, static_cast<int>(fs.size()) - 1))];
      const auto& ls = f.main().literals();
      Literal l = ls[static_cast<size_t>(uniform(0, static_cast<int>(ls.size()) - 1))];
      l.negative = false;
      Substitution g;
      for (const auto& t : l.args)
        if (t.is_var()) g[t.name] = constant();
      s.add_atom(substitute(l, g));
    } else {
      s.add_atom(atom());
    }
  }
  return s;
}

GroundAction Generator::action(int max_effects) {
  GroundAction a{"act", {}, {}, {}};
  int ne = uniform(1, max_effects);
  std::set<Literal> seen;
  for (int i = 0; i < ne; ++i) {
    Literal l = atom();
    if (!seen.insert(l).second) continue;
    l.negative = coin(0.5);
    a.eff.push_back(l);
  }
  return a;
}

}  // namespace psi
