#pragma once

#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace psi {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A term is a constant or a variable. Variables are spelled with a leading '?'.
struct Term {
  std::string name;

  Term() = default;
  explicit Term(std::string n) : name(std::move(n)) {}

  bool is_var() const { return !name.empty() && name[0] == '?'; }
  bool is_const() const { return !is_var(); }

  friend bool operator==(const Term& a, const Term& b) { return a.name == b.name; }
  friend bool operator!=(const Term& a, const Term& b) { return a.name != b.name; }
  friend bool operator<(const Term& a, const Term& b) { return a.name < b.name; }
};

Term var(const std::string& name);  // accepts "x" or "?x"
Term cst(const std::string& name);

struct Literal {
  bool negative = false;
  std::string predicate;
  std::vector<Term> args;

  friend bool operator==(const Literal& a, const Literal& b) {
    return a.negative == b.negative && a.predicate == b.predicate && a.args == b.args;
  }
  friend bool operator!=(const Literal& a, const Literal& b) { return !(a == b); }
  friend bool operator<(const Literal& a, const Literal& b);

  bool is_ground() const;
  std::string str() const;
};

// Literals kept sorted by (predicate, arguments) and deduplicated.
class Clause {
 public:
  Clause() = default;
  explicit Clause(std::vector<Literal> lits);

  const std::vector<Literal>& literals() const { return lits_; }
  size_t size() const { return lits_.size(); }
  bool empty() const { return lits_.empty(); }
  bool is_ground() const;
  bool all_negative() const;
  bool contains(const Literal& l) const;
  bool subset_of(const Clause& other) const;
  // Variables in order of first occurrence.
  std::vector<Term> vars() const;
  std::set<std::string> var_set() const;
  std::set<std::string> constants() const;
  Clause without(const Literal& l) const;
  std::string str() const;  // literals joined by '|'

  friend bool operator==(const Clause& a, const Clause& b) { return a.lits_ == b.lits_; }
  friend bool operator!=(const Clause& a, const Clause& b) { return a.lits_ != b.lits_; }
  friend bool operator<(const Clause& a, const Clause& b) { return a.lits_ < b.lits_; }

 private:
  std::vector<Literal> lits_;
};

// Idempotent substitution from variable names to terms.
using Substitution = std::map<std::string, Term>;
using MatchSet = std::vector<Substitution>;

Term walk(const Term& t, const Substitution& s);
Term substitute(const Term& t, const Substitution& s);
Literal substitute(const Literal& l, const Substitution& s);
Clause substitute(const Clause& c, const Substitution& s);
std::string str(const Substitution& s);
std::string str(const MatchSet& m);

// Fully resolves chains so that no bound variable occurs in a value.
Substitution resolve(const Substitution& s);

bool unify_literal(const Literal& a, const Literal& b, Substitution& s,
                   const std::function<bool(const std::string&)>& bindable);

// The four matching primitives. Arguments must have disjoint variables;
// variables of b are rigid for the two match variants.
MatchSet set_match(const Clause& a, const Clause& b, const std::set<std::string>& restrict);
MatchSet set_match(const Clause& a, const Clause& b);
MatchSet set_unify(const Clause& a, const Clause& b);
MatchSet subset_match(const Clause& a, const Clause& b, const std::set<std::string>& restrict);
MatchSet subset_match(const Clause& a, const Clause& b);
MatchSet subset_unify(const Clause& a, const Clause& b);

// True if s1 restricted to `domain` is an instance of s2.
bool is_instance_of(const Substitution& s1, const Substitution& s2,
                    const std::vector<std::string>& domain);

// Projects a unifier onto `keep`: variables of `keep` sharing a value outside
// `keep` are bound to the smallest of them, other foreign bindings are dropped.
Substitution trans(const Substitution& s, const std::set<std::string>& keep);

// Canonical form for an exception over `vars`; returns an empty map if the
// bindings are contradictory (two distinct constants for one class).
Substitution normalize_bindings(const Substitution& s, const std::set<std::string>& vars,
                                bool* contradictory = nullptr);

// Renames the variables of c that occur in `avoid`; the renaming is written to `out`.
Clause rename_apart(const Clause& c, const std::set<std::string>& avoid, Substitution* out = nullptr);

}  // namespace psi
