#pragma once
#include <cstddef>
#include <utility>
#include <vector>

#include "jpgeom/grading.hpp"
#include "jpgeom/lie.hpp"
#include "jpgeom/projgroup.hpp"

namespace jpgeom {

// Quotient of the exterior square by the span of the Jacobi combinations
// [x,y]^z + [y,z]^x + [z,x]^y over strictly increasing basis triples
// (repeated indices vanish by antisymmetry). Carries the bracket
// [<x,y>, <x',y'>] = <[x,y],[x',y']>. The quotient basis is the family of
// unit wedges at the non-pivot columns of the relation space; reps lists
// their index pairs. b_map sends <x,y> to [x,y], one column per rep.
struct Lambda2Result {
  AlgebraRef algebra;
  Matrix b_map;  // base dim x quotient dim
  std::vector<std::pair<std::size_t, std::size_t>> reps;
  Subspace relations;  // inside the exterior square
};

Lambda2Result lambda2_quotient(const AlgebraRef& l);

// A central extension q : total -> base, with the grading lifted to the
// total algebra and the chosen preimage of the base grading element.
// Invariants: projection is a surjective homomorphism, kernel is central,
// and projection maps the lifted Euler element to the base one.
struct ExtensionResult {
  AlgebraRef total;
  Matrix projection;  // base dim x total dim
  Subspace kernel;    // inside total
  Grading lifted_grading;
  Element section;  // preimage of the base grading element, in total
  Grading base_grading;
};

// {v : a v in s}. Rows of the result are a basis in the domain of a.
Subspace preimage_subspace(const Matrix& a, const Subspace& s);

// Validates that q is a surjective homomorphism total -> base with central
// kernel (NotCentralExtension otherwise), that q(e_hat) is a grading element
// of the base whose degree-zero part is spanned by it together with the
// brackets across the outer components (NotTripotent / Hypothesis71Violated),
// then returns the eigenspace grading of ad e_hat on the total algebra.
Grading lift_grading(const AlgebraRef& ext_total, const Element& e_hat,
                     const AlgebraRef& base, const Matrix& q);

// Wraps an explicit central extension of the graded base as an
// ExtensionResult, validating via lift_grading and recording the kernel.
ExtensionResult make_extension(const Grading& base_d, const AlgebraRef& total,
                               const Matrix& q, const Element& e_hat);

// Weakly universal central extension. Requires the degree-zero part of d to
// be spanned by the Euler element and the brackets across the outer
// components (Hypothesis71Violated otherwise). A perfect base extends by the
// exterior-square quotient itself; otherwise one generator acting as the
// Euler derivation is adjoined so the grading element stays in the image.
ExtensionResult universal_extension(const AlgebraRef& l, const Grading& d);

// Extension of the abelian-pair algebra V+ @ KE @ V- by one central line,
// with cocycle omega(x, x') = x+^T beta x'- - x'+^T beta x-. Basis order:
// plus block, the grading element, minus block, the central generator.
// beta is np x nm over the field of the result.
std::pair<AlgebraRef, Grading> cocycle_extension(std::size_t np,
                                                 std::size_t nm,
                                                 const Matrix& beta);

// Letter-wise transport of group words through the restriction of the
// projection to the outer components, where it is bijective. Lifting solves
// through the projection, pushing applies it; both fix dilation letters.
GroupWord lift_word(const ExtensionResult& ext, const GroupWord& w);
GroupWord push_word(const ExtensionResult& ext, const GroupWord& w);

// Homomorphism from the total algebra of a universal extension into the
// total algebra of any other central extension of the same base, compatible
// with both projections. A wedge class maps to the bracket of section lifts;
// the adjoined generator, when present, maps to the target's section.
Matrix universality_map(const ExtensionResult& univ,
                        const ExtensionResult& target);

}  // namespace jpgeom
