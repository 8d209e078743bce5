#pragma once

#include <string>

#include "psiplan/syntax.hpp"

inline psi::PsiForm F(const std::string& s) { return psi::parse_psiform(s); }
inline psi::Clause C(const std::string& s) { return psi::parse_clause(s); }
inline psi::Literal L(const std::string& s) { return psi::parse_literal(s); }
