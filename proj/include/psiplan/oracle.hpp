#pragma once

#include <set>
#include <string>
#include <vector>

#include "psiplan/planning.hpp"

namespace psi {

// Brute-force ground semantics over a finite universe, independent of the
// symbolic calculus. Fresh constants are spelled "#f1", "#f2", ...
using GroundSet = std::set<Clause>;

std::vector<Term> make_universe(const std::set<std::string>& base, int fresh);
std::set<std::string> constants_of(const PsiForm& f);

GroundSet ground_psi_set(const PsiForm& f, const std::vector<Term>& u);
GroundSet ground_psi_set(const PsiSet& s, const std::vector<Term>& u);
// Some non-empty subclause of c belongs to g.
bool subsumed_by(const Clause& c, const GroundSet& g);
bool ground_entails(const std::vector<PsiForm>& phi, const PsiForm& f, const std::vector<Term>& u);
GroundSet ground_image(const PsiForm& f1, const PsiForm& f2, const std::vector<Term>& u);

struct GroundSok {
  std::set<Literal> atoms;
  GroundSet clauses;
  bool operator==(const GroundSok& o) const { return atoms == o.atoms && clauses == o.clauses; }
};

GroundSok ground_sok(const Sok& s, const std::vector<Term>& u);
// Unit-resolution closure; `consistent` is false once the empty clause appears.
struct GroundClosure {
  bool consistent = true;
  GroundSet clauses;
};
GroundClosure ground_closure(const GroundSok& g);
bool ground_is_saturated(const GroundSok& g);
bool ground_is_minimal(const GroundSok& g);
GroundSok ground_update(const GroundSok& g, const GroundAction& a);

struct Agreement {
  bool agree = true;
  std::string witness;
};

// fresh < 0 means one more fresh constant than the largest variable count.
Agreement agree_entails(const std::vector<PsiForm>& phi, const PsiForm& f, int fresh = -1);
Agreement agree_image(const PsiForm& f1, const PsiForm& f2, int fresh = -1);
Agreement agree_ediff(const PsiForm& f2, const PsiForm& f1, int fresh = -1);
Agreement agree_membership(const PsiForm& f, int fresh = -1);
Agreement agree_saturate(const Sok& s, int fresh = -1);
Agreement agree_update(const Sok& s, const GroundAction& a, int fresh = -1);

}  // namespace psi
