#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "psiplan/oracle.hpp"

using namespace psi;

namespace {

enum Exit { kTrue = 0, kFalse = 1, kUsage = 2, kInconsistent = 3 };

// An argument naming an existing file is read; anything else is inline text.
std::string load(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return arg;
}

std::string dir_of(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return std::filesystem::path(arg).parent_path().string();
  return ".";
}

// Inline lists separate propositions with ';' outside brackets.
std::vector<Proposition> load_props(const std::string& arg) {
  std::string text = load(arg);
  std::vector<Proposition> out;
  for (const auto& line : source_lines(text)) {
    size_t from = 0;
    for (const auto& p : located(line, [&] { return split_top(line.text, ';'); })) {
      if (p.empty()) continue;
      size_t at = line.text.find(p, from);
      from = at + p.size();
      SourceLine where{line.line, line.column + static_cast<int>(at), p};
      out.push_back(located(where, [&] { return parse_proposition(p); }));
    }
  }
  return out;
}

Sok load_sok(const std::string& arg) { return Sok(load_props(arg)); }

PsiForm load_form(const std::string& arg) {
  auto lines = source_lines(load(arg));
  if (lines.size() != 1) throw ParseError("expected one psi-form in " + arg);
  auto p = located(lines[0], [&] { return parse_proposition(lines[0].text); });
  if (!std::holds_alternative<PsiForm>(p)) throw ParseError("expected a psi-form: " + lines[0].text);
  return std::get<PsiForm>(p);
}

int report(const Agreement& a) {
  if (a.agree) {
    std::cout << "AGREE\n";
    return kTrue;
  }
  std::cout << "DIVERGE: " << a.witness << "\n";
  return kFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Planning with incomplete knowledge in a psi-form calculus"};
  app.require_subcommand(1);
  int code = kTrue;

  std::string sok_arg, goal_arg, a_arg, b_arg, domain_arg, problem_arg, plan_arg, action_arg, op;
  std::vector<std::string> rest;
  bool force = false;
  int fresh = -1;

  auto* entail = app.add_subcommand("entail", "decide whether a SOK entails every goal proposition");
  entail->add_option("sok", sok_arg)->required();
  entail->add_option("goal", goal_arg)->required();

  auto* saturate_cmd = app.add_subcommand("saturate", "saturate a SOK or report inconsistency");
  saturate_cmd->add_option("sok", sok_arg)->required();

  auto* image_cmd = app.add_subcommand("image", "clauses of PSI2 entailed by PSI1");
  image_cmd->add_option("psi1", a_arg)->required();
  image_cmd->add_option("psi2", b_arg)->required();

  auto* ediff_cmd = app.add_subcommand("ediff", "clauses of PSI2 not entailed by PSI1");
  ediff_cmd->add_option("psi2", a_arg)->required();
  ediff_cmd->add_option("psi1", b_arg)->required();

  auto* update_cmd = app.add_subcommand("update", "apply a ground action to a SOK");
  update_cmd->add_option("sok", sok_arg)->required();
  update_cmd->add_option("domain", domain_arg)->required();
  update_cmd->add_option("action", action_arg)->required();
  update_cmd->add_flag("--force", force, "apply even when preconditions are not entailed");

  auto* validate_cmd = app.add_subcommand("validate", "check a plan against a problem");
  validate_cmd->add_option("domain", domain_arg)->required();
  validate_cmd->add_option("problem", problem_arg)->required();
  validate_cmd->add_option("plan", plan_arg)->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "compare an operation with brute-force grounding");
  oracle_cmd->add_option("op", op, "entails | image | ediff | member | saturate | update")
      ->required()
      ->check(CLI::IsMember({"entails", "image", "ediff", "member", "saturate", "update"}));
  std::string o1, o2, o3;
  oracle_cmd->add_option("arg1", o1)->required();
  oracle_cmd->add_option("arg2", o2);
  oracle_cmd->add_option("arg3", o3);
  oracle_cmd->add_option("--fresh", fresh, "number of fresh constants (default: variables + 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (entail->parsed()) {
      auto sat = saturate(load_sok(sok_arg));
      if (!sat.consistent) {
        std::cout << "FAIL (inconsistent): " << sat.witness << "\n";
        return kInconsistent;
      }
      bool all = true;
      for (const auto& g : load_props(goal_arg)) all = all && sok_entails(sat.sok, g);
      std::cout << (all ? "TRUE" : "FALSE") << "\n";
      code = all ? kTrue : kFalse;
    } else if (saturate_cmd->parsed()) {
      auto sat = saturate(load_sok(sok_arg));
      if (!sat.consistent) {
        std::cout << "FAIL (inconsistent): " << sat.witness << "\n";
        return kInconsistent;
      }
      std::cout << sat.sok.str();
    } else if (image_cmd->parsed()) {
      std::cout << str(image(load_form(a_arg), load_form(b_arg))) << "\n";
    } else if (ediff_cmd->parsed()) {
      std::cout << str(ediff(load_form(a_arg), load_form(b_arg))) << "\n";
    } else if (update_cmd->parsed()) {
      auto sat = saturate(load_sok(sok_arg));
      if (!sat.consistent) {
        std::cout << "FAIL (inconsistent): " << sat.witness << "\n";
        return kInconsistent;
      }
      Domain d = parse_domain(load(domain_arg));
      GroundAction a = instantiate(d, parse_action_call(action_arg));
      try {
        std::cout << update(sat.sok, a, force).str();
      } catch (const PreconditionError& e) {
        std::cerr << e.what() << "\n";
        return kFalse;
      }
    } else if (validate_cmd->parsed()) {
      Domain d = parse_domain(load(domain_arg));
      Problem p = parse_problem(load(problem_arg), dir_of(problem_arg));
      auto r = validate_plan(d, p.init, parse_plan(load(plan_arg)), p.goal);
      if (r.valid) {
        std::cout << "VALID\n";
      } else {
        std::cout << "INVALID: " << r.reason << "\n";
        code = kFalse;
      }
    } else if (oracle_cmd->parsed()) {
      for (const auto* o : {&o1, &o2, &o3})
        if (!o->empty()) rest.push_back(*o);
      auto need = [&](size_t n) {
        if (rest.size() != n) throw ParseError("oracle " + op + " takes " + std::to_string(n) + " arguments");
      };
      if (op == "entails") {
        need(2);
        std::vector<PsiForm> phi;
        for (const auto& p : load_props(rest[0]))
          if (auto f = std::get_if<PsiForm>(&p)) phi.push_back(*f);
        code = report(agree_entails(phi, load_form(rest[1]), fresh));
      } else if (op == "image") {
        need(2);
        code = report(agree_image(load_form(rest[0]), load_form(rest[1]), fresh));
      } else if (op == "ediff") {
        need(2);
        code = report(agree_ediff(load_form(rest[0]), load_form(rest[1]), fresh));
      } else if (op == "member") {
        need(1);
        code = report(agree_membership(load_form(rest[0]), fresh));
      } else if (op == "saturate") {
        need(1);
        code = report(agree_saturate(load_sok(rest[0]), fresh));
      } else {
        need(3);
        auto sat = saturate(load_sok(rest[0]));
        if (!sat.consistent) {
          std::cout << "FAIL (inconsistent): " << sat.witness << "\n";
          return kInconsistent;
        }
        GroundAction a = instantiate(parse_domain(load(rest[1])), parse_action_call(rest[2]));
        code = report(agree_update(sat.sok, a, fresh));
      }
    }
  } catch (const Inconsistent& e) {
    std::cout << "FAIL (inconsistent): " << e.what() << "\n";
    return kInconsistent;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return code;
}
