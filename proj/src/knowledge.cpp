#include "psiplan/knowledge.hpp"

#include <algorithm>

namespace psi {

Sok::Sok(const std::vector<Proposition>& props) {
  for (const auto& p : props) add(p);
}

void Sok::add(const Proposition& p) {
  if (auto l = std::get_if<Literal>(&p)) add_atom(*l);
  else add_form(std::get<PsiForm>(p));
}

void Sok::add_atom(const Literal& a) {
  if (a.negative || !a.is_ground()) throw Error("not a ground atom: " + a.str());
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), a);
  if (it == atoms_.end() || *it != a) atoms_.insert(it, a);
}

void Sok::add_form(const PsiForm& f) {
  if (keys_.insert(f.key()).second) forms_.push_back(f);
}

bool Sok::has_atom(const Literal& a) const { return std::binary_search(atoms_.begin(), atoms_.end(), a); }

std::set<std::string> Sok::constants() const {
  std::set<std::string> out;
  for (const auto& a : atoms_)
    for (const auto& t : a.args) out.insert(t.name);
  for (const auto& f : forms_) {
    auto c = f.main().constants();
    out.insert(c.begin(), c.end());
    for (const auto& e : f.exceptions())
      for (const auto& [_, v] : e)
        if (v.is_const()) out.insert(v.name);
  }
  return out;
}

int Sok::max_vars() const {
  int m = 0;
  for (const auto& f : forms_) m = std::max(m, static_cast<int>(f.vars().size()));
  return m;
}

std::string Sok::str() const {
  std::string out;
  for (const auto& a : atoms_) out += a.str() + "\n";
  for (const auto& f : canonical(forms_)) out += f.str() + "\n";
  return out;
}

bool operator==(const Sok& a, const Sok& b) { return a.atoms_ == b.atoms_ && a.keys_ == b.keys_; }

Sok parse_sok(const std::string& text) {
  Sok s;
  for (const auto& line : source_lines(text)) s.add(located(line, [&] { return parse_proposition(line.text); }));
  return s;
}

Saturation saturate(const Sok& s) {
  Saturation r;
  r.sok = s;
  std::vector<PsiForm> queue = s.forms();
  for (size_t i = 0; i < queue.size(); ++i) {
    for (const auto& a : s.atoms()) {
      Literal na = a;
      na.negative = true;
      PsiForm unit(Clause({na}));
      for (const auto& img : image(unit, queue[i])) {
        Clause d = img.main().without(na);
        if (d.empty()) {
          r.consistent = false;
          r.witness = a.str() + " against " + queue[i].str();
          return r;
        }
        PsiForm res = PsiForm(d, img.exceptions()).normalized();
        size_t before = r.sok.forms().size();
        r.sok.add_form(res);
        if (r.sok.forms().size() > before) queue.push_back(res);
      }
    }
  }
  r.sok.set_saturated(true);
  return r;
}

Sok saturate_or_throw(const Sok& s) {
  auto r = saturate(s);
  if (!r.consistent) throw Inconsistent("inconsistent knowledge: " + r.witness);
  return r.sok;
}

bool sok_entails(const Sok& s, const Proposition& goal) {
  if (!s.saturated()) throw Error("entailment needs a saturated SOK");
  if (auto l = std::get_if<Literal>(&goal)) return s.has_atom(*l);
  return entails_forms(s.forms(), std::get<PsiForm>(goal));
}

Sok ediff_sok(const Sok& s, const std::vector<Proposition>& props) {
  std::vector<PsiForm> subtrahends;
  std::vector<Literal> atoms;
  for (const auto& p : props) {
    if (auto l = std::get_if<Literal>(&p)) atoms.push_back(*l);
    else subtrahends.push_back(std::get<PsiForm>(p));
  }
  Sok out;
  for (const auto& a : s.atoms())
    if (std::find(atoms.begin(), atoms.end(), a) == atoms.end()) out.add_atom(a);
  for (const auto& f : s.forms()) {
    PsiSet x = {f};
    for (const auto& g : subtrahends) x = ediff(x, g);
    for (const auto& g : x) out.add_form(g);
  }
  return out;
}

Sok minimize(const Sok& s) {
  std::vector<PsiForm> forms = s.forms();
  for (size_t i = 0; i < forms.size();) {
    PsiSet x = {forms[i]};
    for (size_t j = 0; j < forms.size() && !x.empty(); ++j)
      if (j != i) x = ediff(x, forms[j]);
    forms.erase(forms.begin() + static_cast<long>(i));
    forms.insert(forms.begin() + static_cast<long>(i), x.begin(), x.end());
    i += x.size();
  }
  Sok out;
  for (const auto& a : s.atoms()) out.add_atom(a);
  for (const auto& f : forms) out.add_form(f);
  out.set_saturated(s.saturated());
  return out;
}

}  // namespace psi
