#pragma once

#include "wcm/matrix.hpp"
#include "wcm/modules.hpp"

namespace wcm {

// Basis of the space of module maps M -> M' over the truncated ring: all
// per-vertex matrices commuting with every x and y arrow, solved by exact
// linear algebra on the truncated coefficients. Propagates around the cycle
// from a base vertex; the cycle-closure and non-unit-arrow conditions become
// an exact constraint system on the propagation parameters.
std::vector<ModuleHom> hom_space(const ExplicitModule& m, const ExplicitModule& mp);

ModuleHom hom_combo(const std::vector<ModuleHom>& basis, const std::vector<Rat>& coeffs);

// rank of the trace Gram form on End(M); equals dim(E / rad E). The Q-trace
// of multiplication by a truncated poly is N times its constant coefficient,
// so only constant terms enter the form.
int endo_semisimple_rank(const ExplicitModule& m);

bool is_indecomposable(const ExplicitModule& m);

// Total-space matrix (dimension n*r*N) of an endomorphism, for cross-checking
// against algebra_radical on flattened matrices.
QMatrix flatten_endo(const ExplicitModule& m, const ModuleHom& hom);

namespace ref {
// Straight dense kernel of the full commutation system; the serial reference
// solver used by tests (small modules only).
std::vector<ModuleHom> hom_space_dense(const ExplicitModule& m, const ExplicitModule& mp);
} // namespace ref

} // namespace wcm
