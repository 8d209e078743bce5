#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "psiplan/calculus.hpp"
#include "psiplan/oracle.hpp"

namespace py = pybind11;
using namespace psi;

namespace {

Proposition to_prop(const py::handle& h) {
  if (py::isinstance<PsiForm>(h)) return h.cast<PsiForm>();
  return parse_proposition(h.cast<std::string>());
}

std::vector<Proposition> to_props(const py::iterable& items) {
  std::vector<Proposition> out;
  for (const auto& h : items) out.push_back(to_prop(h));
  return out;
}

std::vector<std::string> form_strs(const PsiSet& s) {
  std::vector<std::string> out;
  for (const auto& f : s) out.push_back(f.str());
  return out;
}

py::tuple agreement(const Agreement& a) { return py::make_tuple(a.agree, a.witness); }

}  // namespace

PYBIND11_MODULE(_psiplan, m) {
  m.doc() = "psi-form calculus, states of knowledge and plan validation";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<IllFormed>(m, "IllFormed", error.ptr());
  py::register_exception<NotFixedLength>(m, "NotFixedLength", error.ptr());
  py::register_exception<Inconsistent>(m, "Inconsistent", error.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", error.ptr());

  py::class_<PsiForm>(m, "PsiForm")
      .def(py::init(&parse_psiform), py::arg("text"))
      .def_property_readonly("main", [](const PsiForm& f) { return f.main().str(); })
      .def_property_readonly("exceptions",
                             [](const PsiForm& f) {
                               std::vector<std::map<std::string, std::string>> out;
                               for (const auto& e : f.exceptions()) {
                                 std::map<std::string, std::string> d;
                                 for (const auto& [k, v] : e) d[k] = v.name;
                                 out.push_back(d);
                               }
                               return out;
                             })
      .def_property_readonly("vars", &PsiForm::vars)
      .def("is_fixed_length", &PsiForm::is_fixed_length)
      .def("contains", [](const PsiForm& f, const std::string& c) { return f.contains_clause(parse_clause(c)); },
           py::arg("clause"), "Membership of a clause; its variables are read as rigid.")
      .def("normalized", &PsiForm::normalized)
      .def("__str__", &PsiForm::str)
      .def("__repr__", [](const PsiForm& f) { return "PsiForm('" + f.str() + "')"; })
      .def("__eq__", [](const PsiForm& a, const PsiForm& b) { return a == b; })
      .def("__hash__", [](const PsiForm& f) { return py::hash(py::str(f.key())); });

  m.def("image", [](const PsiForm& a, const PsiForm& b) { return form_strs(image(a, b)); }, py::arg("psi1"),
        py::arg("psi2"), "Clauses of psi2 entailed by psi1, as printed psi-forms.");
  m.def("ediff", [](const PsiForm& b, const PsiForm& a) { return form_strs(ediff(b, a)); }, py::arg("psi2"),
        py::arg("psi1"), "Clauses of psi2 not entailed by psi1, as printed psi-forms.");
  m.def("entails", &entails_forms, py::arg("phi"), py::arg("psi"));

  py::class_<Sok>(m, "Sok")
      .def(py::init([](const std::string& text) { return parse_sok(text); }), py::arg("text") = "")
      .def_property_readonly("atoms",
                             [](const Sok& s) {
                               std::vector<std::string> out;
                               for (const auto& a : s.atoms()) out.push_back(a.str());
                               return out;
                             })
      .def_property_readonly("forms", &Sok::forms)
      .def_property_readonly("saturated", &Sok::saturated)
      .def("add", [](Sok& s, const py::handle& p) { s.add(to_prop(p)); }, py::arg("proposition"))
      .def("saturate", &saturate_or_throw)
      .def("minimize", &minimize)
      .def("entails", [](const Sok& s, const py::handle& p) { return sok_entails(s, to_prop(p)); }, py::arg("goal"))
      .def("__str__", &Sok::str)
      .def("__eq__", [](const Sok& a, const Sok& b) { return a == b; });

  m.def(
      "update",
      [](const Sok& s, const std::string& domain, const std::string& action, bool force) {
        return update(s, instantiate(parse_domain(domain), parse_action_call(action)), force);
      },
      py::arg("sok"), py::arg("domain"), py::arg("action"), py::arg("force") = false,
      "Successor of a saturated SOK; domain is domain-file text.");

  m.def(
      "validate",
      [](const std::string& domain, const std::string& problem, const std::string& plan, const std::string& base_dir) {
        Problem p = parse_problem(problem, base_dir);
        auto r = validate_plan(parse_domain(domain), p.init, parse_plan(plan), p.goal);
        py::dict out;
        out["valid"] = r.valid;
        out["failed_step"] = r.failed_step < 0 ? py::object(py::none()) : py::object(py::int_(r.failed_step));
        out["reason"] = r.reason;
        out["final"] = r.valid ? py::cast(r.states.back()) : py::object(py::none());
        return out;
      },
      py::arg("domain"), py::arg("problem"), py::arg("plan"), py::arg("base_dir") = ".");

  auto oracle = m.def_submodule("oracle", "comparisons against brute-force grounding");
  oracle.def("entails", [](const std::vector<PsiForm>& phi, const PsiForm& f, int k) { return agreement(agree_entails(phi, f, k)); },
             py::arg("phi"), py::arg("psi"), py::arg("fresh") = -1);
  oracle.def("image", [](const PsiForm& a, const PsiForm& b, int k) { return agreement(agree_image(a, b, k)); },
             py::arg("psi1"), py::arg("psi2"), py::arg("fresh") = -1);
  oracle.def("ediff", [](const PsiForm& b, const PsiForm& a, int k) { return agreement(agree_ediff(b, a, k)); },
             py::arg("psi2"), py::arg("psi1"), py::arg("fresh") = -1);
  oracle.def("member", [](const PsiForm& f, int k) { return agreement(agree_membership(f, k)); }, py::arg("psi"),
             py::arg("fresh") = -1);
  oracle.def("saturate", [](const Sok& s, int k) { return agreement(agree_saturate(s, k)); }, py::arg("sok"),
             py::arg("fresh") = -1);
}
