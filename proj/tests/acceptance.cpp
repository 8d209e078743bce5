// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any fails. Usage: acceptance [path-to-psiplan-cli]
#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "psiplan/calculus.hpp"
#include "psiplan/oracle.hpp"
#include "psiplan/random.hpp"

using namespace psi;

namespace {

// Pinned limits.
constexpr double kGoldenSeconds = 1.0;
constexpr int kOracleCases = 12000;
constexpr double kOracleSeconds = 300.0;
constexpr int kSaturateCases = 1000;
constexpr double kSaturateSeconds = 60.0;
constexpr int kUpdateCases = 1000;
constexpr double kUpdateSeconds = 120.0;
constexpr double kGrowthRatio = 2.5;
constexpr double kGrowthSeconds = 120.0;
constexpr int kPairCases = 10000;
constexpr double kPairSeconds = 60.0;

std::string cli_path;

PsiForm F(const std::string& s) { return parse_psiform(s); }
Clause C(const std::string& s) { return parse_clause(s); }
Literal L(const std::string& s) { return parse_literal(s); }

struct Check {
  std::ostringstream notes;
  bool ok = true;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (notes.tellp() < 600) notes << " [" << what << "]";
    }
  }
  void equal(const std::string& got, const std::string& want, const std::string& what) {
    expect(got == want, what + ": got " + got);
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string lines(const std::vector<Clause>& cs) {
  std::string out;
  for (const auto& c : cs) out += (out.empty() ? "" : "\n") + c.str();
  return out;
}

// Runs the CLI with stdout captured; returns the exit status.
int run_cli(const std::string& args, std::string* out) {
  std::string cmd = "\"" + cli_path + "\" " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return -1;
  char buf[512];
  std::string text;
  while (fgets(buf, sizeof buf, p)) text += buf;
  int status = pclose(p);
  if (out) *out = text;
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

void golden_simple_ops(Check& c) {
  c.equal(str(set_match(C("~P(?x,?y)"), C("~P(?v,A)"))), "{{?x=?v, ?y=A}}", "set-match");
  c.expect(subset_simple(C("~P(?v,A)"), C("~P(?x,?y)")), "<b> within <a>");
  c.equal(str(set_match(C("~P(B,?y)"), C("~P(A,?x)"))), "{}", "empty set-match");
  c.expect(!subset_simple(C("~P(A,?x)"), C("~P(B,?y)")), "<b> not within <a>");
  Clause a = C("~R(?x,?y,?z,A)|~Q(?t)");
  Clause b = C("~R(?w,C,?v,A)|~Q(?w)");
  auto u = set_unify(a, b);
  c.equal(str(u), "{{?t=?w, ?x=?w, ?y=C, ?z=?v}}", "set-unify");
  if (u.size() == 1) c.equal(str(trans(u[0], a.var_set())), "{?x=?t, ?y=C}", "trans");
  c.equal(lines(intersect_simple(a, b)), "~Q(?t)|~R(?t,C,?z,A)", "intersection");
  c.equal(str(subtract_simple(PsiForm(a), b)), "[~Q(?t)|~R(?x,?y,?z,A) except {?x=?t, ?y=C}]", "subtraction");
}

void golden_form_ops(Check& c) {
  PsiForm a = F("[~P(?x,A)]");
  PsiForm b = F("[~P(B,?y)|~P(C,?z)|~Q(?y)]");
  c.equal(str(subset_match(a.main(), b.main())), "{}", "subset-match");
  c.expect(!entails_forms({a}, b), "entailment should fail");
  c.equal(str(subset_unify(a.main(), b.main())), "{{?x=B, ?y=A}; {?x=C, ?z=A}}", "subset-unify");
  c.expect(same_set(image(a, b), {F("[~P(B,A)|~P(C,?z)|~Q(A)]"), F("[~P(B,?y)|~P(C,A)|~Q(?y)]")}), "image");
  c.equal(str(ediff(b, a)), "[~P(B,?y)|~P(C,?z)|~Q(?y) except {?y=A}; {?z=A}]", "ediff");
}

const char* kPsi1 = "[~P(?x,?y,?z) except {?x=B}; {?x=C, ?y=D}; {?x=A}]";

void example_image(Check& c) {
  PsiForm img_expect = F("[~P(?w,E,A) except {?w=G}; {?w=B}; {?w=A}]");
  PsiSet img = image(F(kPsi1), F("[~P(?w,E,A) except {?w=G}]"));
  c.expect(img.size() == 1 && img[0] == img_expect, "image " + str(img));
}

void example_holes(Check& c) {
  PsiForm f1 = F(kPsi1);
  PsiForm f2 = F("[~P(?w,E,A)|~P(C,D,?w)|~Q(?w) except {?w=G}]");
  auto holes = compute_holes(f1, f2);
  std::sort(holes.begin(), holes.end());
  std::vector<Clause> want{C("~P(B,E,A)|~P(C,D,B)|~Q(B)"), C("~P(A,E,A)|~P(C,D,A)|~Q(A)")};
  std::sort(want.begin(), want.end());
  c.expect(holes == want, "holes " + lines(holes));
  c.expect(same_set(ediff(f2, f1), {PsiForm(want[0]), PsiForm(want[1])}), "ediff " + str(ediff(f2, f1)));
  PsiSet img = image(f1, f2);
  c.expect(img.size() == 1 && img[0] == F("[~P(?w,E,A)|~P(C,D,?w)|~Q(?w) except {?w=G}; {?w=A}; {?w=B}]"),
           "image " + str(img));
}

void example_wine(Check& c) {
  PsiForm f1 = F("[~In(?x,Box1)|~Fragile(?x) except {?x=Wine}]");
  PsiForm f2 = F("[~In(?y,Box1)|~Fragile(?y)|~Owner(?y,Joe)]");
  PsiSet img = image(f1, f2);
  c.expect(img.size() == 1 && img[0] == PsiForm(f2.main(), {{{"?y", cst("Wine")}}}), "image " + str(img));
  PsiSet d = ediff(f2, f1);
  c.expect(d.size() == 1 && d[0] == F("[~In(Wine,Box1)|~Fragile(Wine)|~Owner(Wine,Joe)]"), "ediff " + str(d));
  c.expect(!entails_forms({f1}, f2), "entailment should fail");
}

void update_chain(Check& c) {
  Sok s = saturate_or_throw(parse_sok(R"(
In(fig,/img)
In(a.bmp,/img)
T(a.ps,PS)
[~In(?x,/img) except {?x=fig}; {?x=a.bmp}]
[~In(?x,?d)|~T(?x,PS) except {?x=a.ps}; {?d=/img}]
)"));
  GroundAction mv{"mv", {cst("fig"), cst("/img"), cst("/tex")}, {L("In(fig,/img)")}, {L("~In(fig,/img)"), L("In(fig,/tex)")}};
  Sok s1 = update(s, mv);
  Sok want1 = parse_sok(R"(
In(fig,/tex)
In(a.bmp,/img)
T(a.ps,PS)
[~In(?x,/img) except {?x=fig}; {?x=a.bmp}]
[~In(?x,?d)|~T(?x,PS) except {?x=a.ps}; {?d=/img}; {?x=fig, ?d=/tex}]
[~In(fig,/img)]
)");
  c.expect(s1 == want1, "s' =\n" + s1.str());
  GroundAction create{"create_afile", {}, {}, {L("In(afile,/code)")}};
  Sok s2 = update(s1, create);
  Sok want2 = parse_sok(R"(
In(afile,/code)
In(fig,/tex)
In(a.bmp,/img)
T(a.ps,PS)
[~In(?x,?d)|~T(?x,PS) except {?x=a.ps}; {?d=/img}; {?x=fig, ?d=/tex}; {?x=afile, ?d=/code}]
[~In(?x,/img) except {?x=fig}; {?x=a.bmp}]
[~In(fig,/img)]
)");
  c.expect(s2 == want2, "s'' =\n" + s2.str());
}

void warehouse(Check& c) {
  Sok s = saturate_or_throw(parse_sok(R"(
[~Box(?c)|~In(?g,?c)|~Fragile(?g) except {?c=FragileStuff}]
Box(FragileStuff)
In(Wine,FragileStuff)
Fragile(Wine)
)"));
  GroundAction add{"add_box", {cst("Box10")}, {}, {L("Box(Box10)")}};
  Sok s1 = update(s, add);
  Sok want = parse_sok(R"(
[~Box(?c)|~In(?g,?c)|~Fragile(?g) except {?c=FragileStuff}; {?c=Box10}]
Box(FragileStuff)
Box(Box10)
In(Wine,FragileStuff)
Fragile(Wine)
)");
  // The printed successor omits the resolvent of Fragile(Wine), which the
  // saturated input already carries.
  PsiForm psi1 = F("[~Box(?c)|~In(?g,?c)|~Fragile(?g) except {?c=FragileStuff}; {?c=Box10}]");
  bool has_psi1 = false;
  for (const auto& f : s1.forms()) has_psi1 = has_psi1 || f == psi1;
  c.expect(has_psi1 && s1.has_atom(L("Box(Box10)")), "exception {c=Box10} missing");
  c.expect(s1 == saturate_or_throw(want), "s' =\n" + s1.str());
  Sok s2 = s1;
  s2.add_atom(L("Box(Box5)"));
  s2 = saturate_or_throw(s2);
  PsiForm pre = F("[~In(?g,Box5)|~Fragile(?g)]");
  c.expect(sok_entails(s2, pre), "lift precondition for Box5");
  c.expect(!sok_entails(s2, F("[~In(?g,Box10)|~Fragile(?g)]")), "nothing known about Box10");

  if (cli_path.empty()) {
    c.expect(false, "no CLI path given");
    return;
  }
  std::string data = PSIPLAN_DATA_DIR;
  std::string out;
  c.expect(run_cli("entail " + data + "/warehouse.sok " + data + "/lift_pre.goal", &out) == 0 && out == "TRUE\n",
           "entail exit 0");
  c.expect(run_cli("entail " + data + "/warehouse.sok '[~In(?g,Box10)|~Fragile(?g)]'", &out) == 1 && out == "FALSE\n",
           "entail exit 1");
  c.expect(run_cli("entail " + data + "/warehouse.sok '[~In(?g,Box5)|Fragile(?g)]'", &out) == 2, "parse error exit 2");
  c.expect(run_cli("saturate 'P(A);[~P(?x)]'", &out) == 3, "inconsistent exit 3");
  c.expect(run_cli("validate " + data + "/warehouse.dom " + data + "/warehouse.prob " + data + "/warehouse.plan", &out) == 0 &&
               out == "VALID\n",
           "valid plan");
  c.expect(run_cli("validate " + data + "/warehouse.dom " + data + "/warehouse.prob " + data + "/warehouse_bad.plan", &out) == 1,
           "invalid plan");
}

void oracle_suite(Check& c) {
  Generator g(20240601);
  int total = 0, bad = 0;
  std::map<std::string, int> per;
  auto record = [&](const std::string& op, const Agreement& a, const std::string& desc) {
    ++total;
    ++per[op];
    if (!a.agree) {
      ++bad;
      c.expect(false, op + " " + desc + ": " + a.witness);
    }
  };
  for (int i = 0; i < kOracleCases; ++i) {
    switch (i % 6) {
      case 0: {
        PsiForm f = g.form("?y");
        std::vector<PsiForm> phi;
        int k = g.uniform(1, 3);
        for (int j = 0; j < k; ++j) phi.push_back(g.coin(0.7) ? g.related(f, "?x") : g.form("?x"));
        record("entails", agree_entails(phi, f), f.str());
        break;
      }
      case 1:
      case 2: {
        PsiForm f1 = g.form("?x");
        PsiForm f2 = g.coin(0.8) ? g.related(f1, "?y") : g.form("?y");
        if (g.coin(0.3)) std::swap(f1, f2);
        if (i % 6 == 1) record("image", agree_image(f1, f2), f1.str() + " onto " + f2.str());
        else record("ediff", agree_ediff(f2, f1), f2.str() + " minus " + f1.str());
        break;
      }
      case 3: {
        PsiForm f = g.form();
        record("member", agree_membership(f), f.str());
        break;
      }
      case 4: {
        Sok s = g.sok();
        record("saturate", agree_saturate(s), s.str());
        break;
      }
      default: {
        Saturation r;
        do r = saturate(g.sok());
        while (!r.consistent);
        GroundAction a = g.action();
        record("update", agree_update(r.sok, a), r.sok.str() + a.str());
      }
    }
  }
  c.expect(total >= 10000, "too few cases");
  c.notes << " cases=" << total << " divergences=" << bad;
  for (const auto& [op, n] : per) c.notes << " " << op << "=" << n;
}

void saturation_props(Check& c) {
  Generator g(777);
  int consistent = 0, seeded = 0;
  while (consistent < kSaturateCases) {
    Sok s = g.sok();
    auto r = saturate(s);
    if (!r.consistent) continue;
    ++consistent;
    c.expect(saturate(r.sok).sok == r.sok, "not idempotent on\n" + s.str());
    auto a = agree_saturate(s);
    c.expect(a.agree, a.witness + " on\n" + s.str());

    // Asserting every atom of a clause the SOK denies must be detected.
    const auto& forms = r.sok.forms();
    if (forms.empty()) continue;
    const PsiForm& f = forms[static_cast<size_t>(g.uniform(0, static_cast<int>(forms.size()) - 1))];
    auto u = make_universe(r.sok.constants(), 1);
    auto clauses = ground_psi_set(f, u);
    if (clauses.empty()) continue;
    auto it = clauses.begin();
    std::advance(it, g.uniform(0, static_cast<int>(clauses.size()) - 1));
    Sok bad = s;
    for (auto l : it->literals()) {
      l.negative = false;
      bad.add_atom(l);
    }
    ++seeded;
    c.expect(!saturate(bad).consistent, "missed contradiction " + it->str() + " in\n" + s.str());
  }
  c.expect(seeded >= kSaturateCases / 2, "too few seeded contradictions");
  c.notes << " consistent=" << consistent << " seeded=" << seeded;
}

// A SOK that decides every atom over the predicates it mentions.
Sok complete_sok(Generator& g, std::set<Literal>& world) {
  Sok s;
  for (int p = 0; p < g.params().preds; ++p) {
    Literal pattern{true, "P" + std::to_string(p), {}};
    for (int a = 0; a < g.arity(p); ++a) pattern.args.push_back(Term("?v" + std::to_string(a)));
    std::vector<Substitution> exc;
    int n = g.uniform(0, 3);
    for (int i = 0; i < n; ++i) {
      Literal atom{false, pattern.predicate, {}};
      Substitution e;
      for (const auto& v : pattern.args) {
        Term k = g.constant();
        atom.args.push_back(k);
        e[v.name] = k;
      }
      if (world.insert(atom).second) {
        s.add_atom(atom);
        exc.push_back(e);
      }
    }
    s.add_form(PsiForm(Clause({pattern}), exc));
  }
  return s;
}

void update_props(Check& c) {
  Generator g(4242);
  int done = 0;
  while (done < kUpdateCases) {
    auto r = saturate(g.sok());
    if (!r.consistent) continue;
    Sok s = minimize(r.sok);
    GroundAction a = g.action();
    // Executable: preconditions drawn from what s already entails.
    for (const auto& atom : s.atoms())
      if (g.coin(0.3)) a.pre.push_back(atom);
    if (!s.forms().empty() && g.coin(0.5)) a.pre.push_back(s.forms()[0]);
    Sok next;
    try {
      next = update(s, a);
    } catch (const PreconditionError& e) {
      c.expect(false, e.what());
      continue;
    }
    ++done;
    auto u = make_universe(next.constants(), next.max_vars() + 1);
    GroundSok gn = ground_sok(next, u);
    c.expect(ground_is_saturated(gn), "not saturated:\n" + next.str());
    c.expect(ground_is_minimal(gn), "not minimal:\n" + next.str());
    auto ag = agree_update(s, a);
    c.expect(ag.agree, ag.witness);
  }

  GenParams small;
  small.max_arity = 2;
  small.consts = 4;
  Generator h(99, small);
  int complete = 0;
  for (; complete < kUpdateCases; ++complete) {
    std::set<Literal> world;
    Sok s = saturate_or_throw(complete_sok(h, world));
    GroundAction a = h.action();
    std::set<Literal> classical = world;
    for (auto e : a.eff) {
      bool neg = e.negative;
      e.negative = false;
      if (neg) classical.erase(e);
      else classical.insert(e);
    }
    Sok next = update(s, a);
    auto u = make_universe(next.constants(), 1);
    for (int p = 0; p < small.preds; ++p) {
      Literal pattern{false, "P" + std::to_string(p), {}};
      std::vector<Term> vars;
      for (int k = 0; k < h.arity(p); ++k) vars.push_back(Term("?v" + std::to_string(k)));
      std::vector<Substitution> gs{{}};
      for (const auto& v : vars) {
        std::vector<Substitution> more;
        for (const auto& x : gs)
          for (const auto& t : u) {
            Substitution y = x;
            y[v.name] = t;
            more.push_back(y);
          }
        gs = more;
      }
      pattern.args = vars;
      for (const auto& sub : gs) {
        Literal atom = substitute(pattern, sub);
        Literal neg = atom;
        neg.negative = true;
        bool known_true = sok_entails(next, atom);
        bool known_false = sok_entails(next, PsiForm(Clause({neg})));
        bool truth = classical.count(atom) > 0;
        c.expect(known_true == truth && known_false == !truth, "closed-world mismatch on " + atom.str());
      }
    }
  }
  c.notes << " updates=" << done << " complete-knowledge=" << complete;
}

void growth(Check& c) {
  GenParams p;
  p.max_lits = 3;
  p.max_vars = 2;
  p.max_exc = 3;
  p.preds = 40;
  p.max_arity = 2;
  p.consts = 6;
  Generator g(31337, p);
  const std::vector<int> sizes{250, 500, 1000, 2000};
  std::vector<PsiForm> pool;
  while (pool.size() < 2000) pool.push_back(g.form("?x"));
  std::vector<PsiForm> goals;
  for (int i = 0; i < 40; ++i) goals.push_back(g.coin(0.5) ? g.related(pool[static_cast<size_t>(g.uniform(0, 249))], "?y") : g.form("?y"));

  auto time_n = [&](int n) {
    std::vector<PsiForm> phi(pool.begin(), pool.begin() + n);
    auto t0 = std::chrono::steady_clock::now();
    volatile int hits = 0;
    for (const auto& q : goals) hits = hits + entails_forms(phi, q);
    return seconds_since(t0);
  };
  std::vector<double> ratios;
  for (size_t i = 0; i + 1 < sizes.size(); ++i) {
    std::vector<double> r;
    for (int rep = 0; rep < 7; ++rep) r.push_back(time_n(sizes[i + 1]) / time_n(sizes[i]));
    std::sort(r.begin(), r.end());
    ratios.push_back(r[r.size() / 2]);
  }
  for (size_t i = 0; i < ratios.size(); ++i) {
    char buf[64];
    std::snprintf(buf, sizeof buf, " t(%d)/t(%d)=%.2f", sizes[i + 1], sizes[i], ratios[i]);
    c.notes << buf;
    c.expect(ratios[i] <= kGrowthRatio, "super-linear growth");
  }
}

void match_bound(Check& c) {
  GenParams p;
  p.max_lits = 6;
  p.max_vars = 4;
  Generator g(2718, p);
  size_t most = 0;
  for (int i = 0; i < kPairCases; ++i) {
    PsiForm fa = g.form("?x");
    PsiForm fb = g.coin(0.7) ? g.related(fa, "?y") : g.form("?y");
    const Clause& a = fa.main();
    const Clause& b = fb.main();
    auto ms = subset_match(a, b);
    most = std::max(most, ms.size());
    double cmax = static_cast<double>(std::max(a.size(), b.size()));
    c.expect(static_cast<double>(ms.size()) <= std::exp(cmax / std::exp(1.0)), "bound " + a.str() + " / " + b.str());
    std::map<size_t, Literal> hit;
    for (const auto& s : ms)
      for (const auto& l : a.literals()) {
        Literal img = substitute(l, s);
        for (size_t j = 0; j < b.size(); ++j)
          if (b.literals()[j] == img) {
            auto [it, fresh] = hit.emplace(j, l);
            c.expect(fresh || it->second == l, "overlap " + a.str() + " / " + b.str());
          }
      }
  }
  c.notes << " largest match set=" << most;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) cli_path = argv[1];
  struct Criterion {
    const char* name;
    double limit;
    std::function<void(Check&)> run;
  };
  std::vector<Criterion> cs{
      {"golden set-match, intersection and subtraction values", kGoldenSeconds, golden_simple_ops},
      {"golden entailment, image and e-difference values", kGoldenSeconds, golden_form_ops},
      {"image with three exceptions", kGoldenSeconds, example_image},
      {"holes, image and e-difference of the three-literal form", kGoldenSeconds, example_holes},
      {"wine clause image and e-difference", kGoldenSeconds, example_wine},
      {"file-system update chain", kGoldenSeconds, update_chain},
      {"warehouse scenario and exit codes", 10.0, warehouse},
      {"oracle differential suite", kOracleSeconds, oracle_suite},
      {"saturation properties", kSaturateSeconds, saturation_props},
      {"update properties", kUpdateSeconds, update_props},
      {"linear growth of fixed-length entailment", kGrowthSeconds, growth},
      {"subset-match bound and no-overlap", kPairSeconds, match_bound},
  };
  int failed = 0;
  for (size_t i = 0; i < cs.size(); ++i) {
    Check c;
    auto t0 = std::chrono::steady_clock::now();
    try {
      cs[i].run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    double t = seconds_since(t0);
    c.expect(t < cs[i].limit, "too slow");
    char head[128];
    std::snprintf(head, sizeof head, "%s %2zu %-58s %8.3fs", c.ok ? "PASS" : "FAIL", i + 1, cs[i].name, t);
    std::cout << head << c.notes.str() << std::endl;
    failed += !c.ok;
  }
  return failed ? 1 : 0;
}
