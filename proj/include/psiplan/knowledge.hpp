#pragma once

#include <optional>
#include <string>
#include <vector>

#include "psiplan/calculus.hpp"
#include "psiplan/syntax.hpp"

namespace psi {

class Inconsistent : public Error {
 public:
  using Error::Error;
};

// State of knowledge: ground atoms plus psi-forms of negative clauses.
class Sok {
 public:
  Sok() = default;
  explicit Sok(const std::vector<Proposition>& props);

  const std::vector<Literal>& atoms() const { return atoms_; }
  const std::vector<PsiForm>& forms() const { return forms_; }
  bool saturated() const { return saturated_; }
  void set_saturated(bool v) { saturated_ = v; }

  void add(const Proposition& p);
  void add_atom(const Literal& a);
  void add_form(const PsiForm& f);  // ignored if an equal form is present
  bool has_atom(const Literal& a) const;
  std::set<std::string> constants() const;
  int max_vars() const;

  // Atoms first, then psi-forms, each sorted; one proposition per line.
  std::string str() const;
  friend bool operator==(const Sok& a, const Sok& b);

 private:
  std::vector<Literal> atoms_;
  std::vector<PsiForm> forms_;
  std::set<std::string> keys_;
  bool saturated_ = false;
};

Sok parse_sok(const std::string& text);

struct Saturation {
  bool consistent = true;
  Sok sok;
  std::string witness;  // atom and psi-form whose resolvent is empty
};

Saturation saturate(const Sok& s);
// Throws Inconsistent.
Sok saturate_or_throw(const Sok& s);

// Requires a saturated SOK; atoms are entailed only by themselves.
bool sok_entails(const Sok& s, const Proposition& goal);
// Atoms of s equal to an atom of props are dropped; psi-forms lose the
// clauses entailed by the psi-forms of props.
Sok ediff_sok(const Sok& s, const std::vector<Proposition>& props);
// Removes ground clauses entailed by a clause of another member.
Sok minimize(const Sok& s);

}  // namespace psi
