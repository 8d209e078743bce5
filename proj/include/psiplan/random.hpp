#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "psiplan/planning.hpp"

namespace psi {

struct GenParams {
  int max_lits = 3;
  int max_vars = 3;
  int max_exc = 2;
  int preds = 4;
  int max_arity = 3;
  int consts = 5;
};

// Random fixed-length psi-forms, SOKs and actions over a fixed signature
// P0..P(n-1) with constants A, B, C, ...
class Generator {
 public:
  Generator(uint64_t seed, GenParams p = {});

  std::mt19937_64& rng() { return rng_; }
  const GenParams& params() const { return p_; }
  int arity(int pred) const { return arity_[static_cast<size_t>(pred)]; }
  Term constant();
  Literal atom();
  PsiForm form(const std::string& prefix = "?x");
  // Built from base's literals so that near entailment or unification is likely.
  PsiForm related(const PsiForm& base, const std::string& prefix = "?y");
  Sok sok(int max_atoms = 4, int max_forms = 3);
  GroundAction action(int max_effects = 3);
  int uniform(int lo, int hi);
  bool coin(double p);

 private:
  std::vector<Substitution> exceptions(const Clause& main);
  bool acceptable(const Clause& main) const;

  std::mt19937_64 rng_;
  GenParams p_;
  std::vector<int> arity_;
};

}  // namespace psi
