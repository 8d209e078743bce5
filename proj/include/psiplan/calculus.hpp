#pragma once

#include <vector>

#include "psiplan/psiform.hpp"

namespace psi {

// Operations on simple psi-forms, given by their main clauses.
bool subset_simple(const Clause& m1, const Clause& m2);                    // <m1> within <m2>
std::vector<Clause> intersect_simple(const Clause& m1, const Clause& m2);  // instances of m1
PsiSet subtract_simple(const PsiForm& f, const Clause& m);                 // f - <m>

// Result of subtracting and intersecting arbitrary psi-forms.
PsiSet intersect(const PsiForm& f, const Clause& m);  // f intersected with <m>
PsiSet subtract(const PsiSet& x, const PsiForm& y);
bool is_subset(const PsiForm& a, const PsiForm& b);  // sound, not complete
PsiSet reduce(PsiSet s);  // normalizes and drops members contained in others

// Building blocks, named after the procedures they implement.
std::vector<Clause> compute_simple_img(const Clause& m1, const PsiForm& f2);
PsiSet compute_simple_ediff(const PsiForm& f2, const Clause& m1);
std::vector<Clause> compute_holes(const PsiForm& f1, const PsiForm& f2);  // f1 must nearly entail f2
PsiSet compute_img2(const PsiForm& f1, const PsiForm& f2);
PsiSet compute_ediff2(const PsiForm& f2, const PsiForm& f1);
PsiSet compute_img3(const PsiForm& f1, const PsiForm& f2);
PsiSet compute_ediff3(const PsiForm& f2, const PsiForm& f1);

bool nearly_entails(const PsiForm& f1, const PsiForm& f2);

// Clauses of f2 entailed by f1, and the rest. Both throw NotFixedLength.
PsiSet image(const PsiForm& f1, const PsiForm& f2);
PsiSet ediff(const PsiForm& f2, const PsiForm& f1);
PsiSet ediff(const PsiSet& x, const PsiForm& f1);

bool entails_forms(const std::vector<PsiForm>& phi, const PsiForm& f);

}  // namespace psi
