#pragma once

#include <map>
#include <string>
#include <vector>

#include "psiplan/knowledge.hpp"

namespace psi {

class PreconditionError : public Error {
 public:
  using Error::Error;
};

struct ActionSchema {
  std::string name;
  std::vector<Term> params;
  std::vector<Proposition> pre;
  std::vector<Literal> eff;  // ground atoms or negative literals once instantiated
};

struct GroundAction {
  std::string name;
  std::vector<Term> args;
  std::vector<Proposition> pre;
  std::vector<Literal> eff;
  std::string str() const;
};

struct Domain {
  std::map<std::string, ActionSchema> actions;
};

struct Problem {
  Sok init;
  std::vector<Proposition> goal;
};

struct ActionCall {
  std::string name;
  std::vector<Term> args;
  std::string str() const;
};

GroundAction instantiate(const ActionSchema& a, const std::vector<Term>& args);
GroundAction instantiate(const Domain& d, const ActionCall& call);

// Effects as propositions, and the same with every literal negated.
std::vector<Proposition> assert_set(const GroundAction& a);
std::vector<Proposition> assert_neg_set(const GroundAction& a);

// Throws PreconditionError unless every precondition is entailed or `force`.
Sok update(const Sok& s, const GroundAction& a, bool force = false);

struct PlanResult {
  bool valid = false;
  int failed_step = -1;  // index into the plan, or -1
  std::string reason;
  std::vector<Sok> states;  // saturated initial state and every successor
};

PlanResult validate_plan(const Domain& d, const Sok& init, const std::vector<ActionCall>& plan,
                         const std::vector<Proposition>& goal);

Domain parse_domain(const std::string& text);
// `init:` and `goal:` sections; a section header may name a file to read instead.
Problem parse_problem(const std::string& text, const std::string& base_dir = ".");
ActionCall parse_action_call(const std::string& text);
std::vector<ActionCall> parse_plan(const std::string& text);

// Printers in the formats read by the parsers above.
std::string str(const ActionSchema& a);
std::string str(const Domain& d);
std::string str(const Problem& p);
std::string str(const std::vector<ActionCall>& plan);

}  // namespace psi
