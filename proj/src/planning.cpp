#include "psiplan/planning.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace psi {

namespace {

std::string call_str(const std::string& name, const std::vector<Term>& args) {
  std::string out = name + "(";
  for (size_t i = 0; i < args.size(); ++i) out += (i ? "," : "") + args[i].name;
  return out + ")";
}

Literal negate(Literal l) {
  l.negative = !l.negative;
  return l;
}

Proposition as_proposition(const Literal& l) {
  if (l.negative) return PsiForm(Clause({l}));
  return l;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::string GroundAction::str() const { return call_str(name, args); }
std::string ActionCall::str() const { return call_str(name, args); }

GroundAction instantiate(const ActionSchema& a, const std::vector<Term>& args) {
  if (args.size() != a.params.size())
    throw Error(a.name + " takes " + std::to_string(a.params.size()) + " arguments, got " +
                std::to_string(args.size()));
  Substitution s;
  for (size_t i = 0; i < args.size(); ++i) {
    if (!args[i].is_const()) throw Error("action arguments must be constants: " + call_str(a.name, args));
    s[a.params[i].name] = args[i];
  }
  GroundAction g{a.name, args, {}, {}};
  for (const auto& p : a.pre) {
    if (auto l = std::get_if<Literal>(&p)) {
      Literal gl = substitute(*l, s);
      if (!gl.is_ground()) throw Error("precondition " + gl.str() + " of " + a.name + " is not ground");
      g.pre.push_back(as_proposition(gl));
      continue;
    }
    const auto& f = std::get<PsiForm>(p);
    std::vector<Substitution> excs;
    for (const auto& e : f.exceptions()) {
      Substitution n;
      for (const auto& [k, v] : e) {
        if (s.count(k)) throw Error("exception in " + f.str() + " binds action parameter " + k);
        n[k] = walk(v, s);
      }
      excs.push_back(n);
    }
    g.pre.push_back(PsiForm(substitute(f.main(), s), excs));
  }
  for (const auto& e : a.eff) {
    Literal ge = substitute(e, s);
    if (!ge.is_ground()) throw Error("effect " + ge.str() + " of " + a.name + " is not ground");
    g.eff.push_back(ge);
  }
  return g;
}

GroundAction instantiate(const Domain& d, const ActionCall& call) {
  auto it = d.actions.find(call.name);
  if (it == d.actions.end()) throw Error("unknown action " + call.name);
  return instantiate(it->second, call.args);
}

std::vector<Proposition> assert_set(const GroundAction& a) {
  std::vector<Proposition> out;
  for (const auto& e : a.eff) out.push_back(as_proposition(e));
  return out;
}

std::vector<Proposition> assert_neg_set(const GroundAction& a) {
  std::vector<Proposition> out;
  for (const auto& e : a.eff) out.push_back(as_proposition(negate(e)));
  return out;
}

Sok update(const Sok& s, const GroundAction& a, bool force) {
  if (!s.saturated()) throw Error("update needs a saturated SOK");
  if (!force) {
    std::string missing;
    for (const auto& p : a.pre)
      if (!sok_entails(s, p)) missing += (missing.empty() ? "" : ", ") + psi::str(p);
    if (!missing.empty()) throw PreconditionError(a.str() + ": precondition not entailed: " + missing);
  }
  auto pos = assert_set(a);
  Sok out = ediff_sok(ediff_sok(s, assert_neg_set(a)), pos);
  for (const auto& p : pos) out.add(p);
  out.set_saturated(true);
  return out;
}

PlanResult validate_plan(const Domain& d, const Sok& init, const std::vector<ActionCall>& plan,
                         const std::vector<Proposition>& goal) {
  PlanResult r;
  auto sat = saturate(init);
  if (!sat.consistent) {
    r.reason = "initial state is inconsistent: " + sat.witness;
    return r;
  }
  Sok s = sat.sok;
  r.states.push_back(s);
  for (size_t i = 0; i < plan.size(); ++i) {
    GroundAction a = instantiate(d, plan[i]);
    try {
      s = update(s, a);
    } catch (const PreconditionError& e) {
      r.failed_step = static_cast<int>(i);
      r.reason = "step " + std::to_string(i + 1) + " " + e.what();
      return r;
    }
    r.states.push_back(s);
  }
  std::string unmet;
  for (const auto& g : goal)
    if (!sok_entails(s, g)) unmet += (unmet.empty() ? "" : ", ") + psi::str(g);
  if (!unmet.empty()) {
    r.reason = "goal not entailed: " + unmet;
    return r;
  }
  r.valid = true;
  return r;
}

namespace {

Proposition parse_schema_prop(const std::string& text) {
  std::string t = trim(text);
  if (!t.empty() && t[0] == '[') return parse_psiform(t);
  Literal l = parse_literal(t);
  if (l.negative) return PsiForm(Clause({l}));
  return l;
}

std::vector<std::string> items(const std::string& text) {
  std::vector<std::string> out;
  if (trim(text).empty()) return out;
  for (const auto& p : split_top(text, ','))
    if (!p.empty()) out.push_back(p);
  return out;
}

}  // namespace

Domain parse_domain(const std::string& text) {
  Domain d;
  ActionSchema* cur = nullptr;
  for (const auto& sl : source_lines(text)) located(sl, [&] {
    const std::string& line = sl.text;
    if (line.rfind("action", 0) == 0 && line.size() > 6 && std::isspace(static_cast<unsigned char>(line[6]))) {
      Literal head = parse_literal(line.substr(7));
      if (head.negative) throw ParseError("bad action header: " + line);
      ActionSchema a{head.predicate, head.args, {}, {}};
      for (const auto& p : a.params)
        if (!p.is_var()) throw ParseError("action parameters must be variables: " + line);
      if (d.actions.count(a.name)) throw ParseError("action " + a.name + " defined twice");
      cur = &(d.actions[a.name] = a);
    } else if (line.rfind("pre:", 0) == 0 || line.rfind("eff:", 0) == 0) {
      if (!cur) throw ParseError("'" + line.substr(0, 4) + "' outside an action");
      for (const auto& it : items(line.substr(4))) {
        if (line[0] == 'p') {
          cur->pre.push_back(parse_schema_prop(it));
        } else {
          if (trim(it).front() == '[') throw ParseError("effects must be literals: " + it);
          cur->eff.push_back(parse_literal(it));
        }
      }
    } else {
      throw ParseError("unexpected line in domain: " + line);
    }
  });
  return d;
}

Problem parse_problem(const std::string& text, const std::string& base_dir) {
  Problem p;
  int section = 0;  // 1 init, 2 goal
  auto load = [&](const std::string& ref) {
    std::string path = ref.front() == '/' ? ref : base_dir + "/" + ref;
    return std::make_pair(path, source_lines(read_file(path)));
  };
  auto take = [&](const std::string& line) {
    if (section == 1) p.init.add(parse_proposition(line));
    else if (section == 2) p.goal.push_back(parse_proposition(line));
    else throw ParseError("proposition outside init:/goal: " + line);
  };
  for (const auto& sl : source_lines(text)) {
    const std::string& line = sl.text;
    if (line.rfind("init:", 0) == 0 || line.rfind("goal:", 0) == 0) {
      section = line[0] == 'i' ? 1 : 2;
      std::string rest = trim(line.substr(5));
      if (rest.empty()) continue;
      auto [path, ls] = located(sl, [&] { return load(rest); });
      for (const auto& l : ls) {
        try {
          located(l, [&] { take(l.text); });
        } catch (const ParseError& e) {
          throw ParseError(path + ": " + e.what());
        }
      }
    } else {
      located(sl, [&] { take(line); });
    }
  }
  return p;
}

ActionCall parse_action_call(const std::string& text) {
  Literal l = parse_literal(text);
  if (l.negative) throw ParseError("bad action call: " + text);
  return {l.predicate, l.args};
}

std::vector<ActionCall> parse_plan(const std::string& text) {
  std::vector<ActionCall> out;
  for (const auto& l : source_lines(text)) out.push_back(located(l, [&] { return parse_action_call(l.text); }));
  return out;
}

std::string str(const ActionSchema& a) {
  std::string out = "action " + call_str(a.name, a.params) + "\npre:";
  for (size_t i = 0; i < a.pre.size(); ++i) out += (i ? ", " : " ") + psi::str(a.pre[i]);
  out += "\neff:";
  for (size_t i = 0; i < a.eff.size(); ++i) out += (i ? ", " : " ") + a.eff[i].str();
  return out + "\n";
}

std::string str(const Domain& d) {
  std::string out;
  for (const auto& [name, a] : d.actions) out += (out.empty() ? "" : "\n") + str(a);
  return out;
}

std::string str(const Problem& p) {
  std::string out = "init:\n" + p.init.str() + "goal:\n";
  for (const auto& g : p.goal) out += psi::str(g) + "\n";
  return out;
}

std::string str(const std::vector<ActionCall>& plan) {
  std::string out;
  for (const auto& c : plan) out += c.str() + "\n";
  return out;
}

}  // namespace psi
