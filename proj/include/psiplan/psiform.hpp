#pragma once

#include <string>
#include <vector>

#include "psiplan/terms.hpp"

namespace psi {

class IllFormed : public Error {
 public:
  using Error::Error;
};

class NotFixedLength : public Error {
 public:
  using Error::Error;
};

// [main except sigma_1; ...; sigma_n]: the ground instances of an all-negative
// main clause minus the ground instances of every exception clause main.sigma_i.
class PsiForm {
 public:
  PsiForm() = default;
  // Throws IllFormed for a non-negative or empty main clause, or for an
  // exception that binds no variable, a variable outside main, or two
  // different constants to one variable.
  explicit PsiForm(Clause main, std::vector<Substitution> exceptions = {});

  const Clause& main() const { return main_; }
  const std::vector<Substitution>& exceptions() const { return exc_; }
  std::vector<Clause> exception_clauses() const;
  std::set<std::string> vars() const { return main_.var_set(); }
  bool is_simple() const { return exc_.empty(); }
  bool is_fixed_length() const;
  bool has_repeated_vars() const;  // some variable occurs twice in one literal

  // Ground clause membership; non-ground c is treated with its variables rigid.
  bool contains_clause(const Clause& c) const;

  // Drops exceptions whose clause is an instance of another exception clause.
  PsiForm normalized() const;
  PsiForm with_exception(const Substitution& s) const;
  PsiForm renamed(const Substitution& ren) const;

  // Canonical text modulo variable renaming; equal keys mean equal forms.
  const std::string& key() const { return key_; }
  std::string str() const;

  friend bool operator==(const PsiForm& a, const PsiForm& b) { return a.key_ == b.key_; }
  friend bool operator!=(const PsiForm& a, const PsiForm& b) { return a.key_ != b.key_; }

 private:
  void compute_key();

  Clause main_;
  std::vector<Substitution> exc_;
  std::string key_;
};

using PsiSet = std::vector<PsiForm>;

PsiForm normalize_well_formed(const PsiForm& f);
bool is_fixed_length(const PsiForm& f);
bool contains_clause(const PsiForm& f, const Clause& c);

// Sorted by printed text with duplicates (modulo renaming) removed.
PsiSet canonical(PsiSet s);
std::string str(const PsiSet& s);
bool same_set(const PsiSet& a, const PsiSet& b);

}  // namespace psi
