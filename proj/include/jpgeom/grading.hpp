#pragma once
#include "jpgeom/lie.hpp"

namespace jpgeom {

// Eigenspace decomposition of a tripotent inner derivation d = ad(euler),
// d^3 = d. Components are the +1, 0, -1 eigenspaces; they sum directly to
// the whole algebra and satisfy [g_a, g_b] subset g_{a+b}.
struct Grading {
  AlgebraRef algebra;
  Element euler;
  Matrix d;
  Matrix pr1, pr0, prm1;
  Subspace g1, g0, gm1;
};

// Descending flag 0 <= f1 <= f0 <= g compatible with the bracket. Every
// flag in this library is produced from a grading or by a group action, so
// it carries a witness: an Euler element whose plus-flag is exactly (f1,f0).
struct Filtration3 {
  AlgebraRef algebra;
  Subspace f1, f0;
  Element witness;
};

Grading grading_from_euler(const AlgebraRef& l, const Element& e);

Filtration3 plus_filtration(const Grading& g);
Filtration3 minus_filtration(const Grading& g);

// The five flag conditions: f1 <= f0, f0 a subalgebra, [f0,f1] <= f1,
// f1 abelian, [g,f1] <= f0. Works on bare subspace pairs.
bool is_filtration(const AlgebraRef& l, const Subspace& f1, const Subspace& f0);

// Flags compare by their subspace pair; witnesses are not part of identity.
bool filtration_eq(const Filtration3& a, const Filtration3& b);

// g = e1 (+) f0 and g = f1 (+) e0.
bool is_transversal(const Filtration3& e, const Filtration3& f);

// The unique grading with minus-flag e and plus-flag f. The Euler element
// is f.witness - Z where Z in f1 kills the lowest component relative to the
// grading of e.witness.
Grading grading_from_transversal(const Filtration3& e, const Filtration3& f);

// The unique x in f.f1 with exp(ad x).e = e2, for e, e2 both transversal
// to f. Difference of the Euler elements of the two adapted gradings.
Element transversal_coordinates(const Filtration3& f, const Filtration3& e,
                                const Filtration3& e2);

bool same_plus_filtration(const Grading& d1, const Grading& d2);

// r pr1 + pr0 + r^{-1} pr-1. Automorphism commuting with d.
Automorphism dilation(const Grading& g, const Scalar& r);

Filtration3 apply_to_filtration(const Automorphism& g, const Filtration3& f);

// Affine combination (1-r) f1 + r f3 inside the affine space of flags
// transversal to f2, with origin f1. Defined for every r, including 0.
Filtration3 structure_map_mu(const Scalar& r, const Filtration3& f1, const Filtration3& f2,
                             const Filtration3& f3);

// Point reflection of d2 in d1: conjugate d2 by 1 - 2 d1^2.
Grading reflection_multiply(const Grading& d1, const Grading& d2);

bool grading_eq(const Grading& a, const Grading& b);

nlohmann::json subspace_to_json(const Subspace& s);
nlohmann::json filtration_to_json(const Filtration3& f);
nlohmann::json grading_to_json(const Grading& g);

}  // namespace jpgeom
