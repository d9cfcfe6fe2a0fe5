#pragma once
#include <cstddef>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "jpgeom/grading.hpp"
#include "jpgeom/lie.hpp"

namespace jpgeom {

// R = M_k(field), V = R^m. V is realized as mk x k matrices over the field,
// flattened row-major, so the right R-action is right multiplication and
// End_R(V) is M_mk(field) acting by left multiplication.
struct RingSpec {
  FieldSpec field;
  std::size_t k = 1, m = 1;

  std::size_t rows() const { return k * m; }        // mk
  std::size_t vdim() const { return m * k * k; }    // V as a field space
  std::size_t end_dim() const { return rows() * rows(); }
};

// An R-linear idempotent on V.
struct Projector {
  RingSpec ring;
  Matrix p;  // mk x mk, p*p = p
};

// A complemented R-submodule of V. The span is the flattened field subspace
// {X : im X inside W} for the column space W; its dimension is divisible by
// k. The certificate is a projector with image exactly this submodule, so
// complementedness never has to be decided from scratch.
struct RSubmodule {
  RingSpec ring;
  Subspace span;  // ambient m k^2
  Projector certificate;
};

Projector make_projector(const RingSpec& r, const Matrix& p);

// Validates R-stability (right multiplication by matrix units) and that the
// certificate's image is exactly the span.
RSubmodule make_submodule(const RingSpec& r, const Subspace& span,
                          const Projector& certificate);

// The column space W of a submodule, ambient mk.
Subspace submodule_columns(const RSubmodule& e);

// The submodule {X : im X inside W} with the given certificate.
RSubmodule submodule_from_columns(const RingSpec& r, const Subspace& w,
                                  const Projector& certificate);

// p |-> (im p, ker p), a bijection onto transversal submodule pairs; the
// inverse direction requires V = e + f as a direct sum (NotComplementary).
std::pair<RSubmodule, RSubmodule> projector_to_pair(const Projector& p);
Projector pair_to_projector(const RSubmodule& e, const RSubmodule& f);

// All complements of e, one per R-linear map V/e -> e, enumerated from the
// certificate's kernel as base point. InfiniteField when the map space is
// infinite. Output is canonically ordered.
std::vector<RSubmodule> complements(const RSubmodule& e);

// Translation of the complement f by h in Hom_R(V/e, e). h has one column
// per canonical quotient coordinate of the column space of e and one row per
// basis vector of that column space; translation is simply transitive.
RSubmodule complement_translate(const RSubmodule& e, const RSubmodule& f,
                                const Matrix& h);

// gl of V: all field matrices of size mk under the commutator.
AlgebraRef ring_algebra(const RingSpec& r);

// Left action of g on V, on submodules and flattened algebra coordinates.
RSubmodule transform_submodule(const Matrix& g, const RSubmodule& e);

// The grading of gl(V) with Euler element p.
Grading grading_from_projector(const Projector& p);

// The flag f1 = {X : XV inside E, XE = 0}, f0 = {X : XE inside E}, produced
// through the certificate's grading and re-checked against these equations.
Filtration3 flag_from_submodule(const RSubmodule& e);

// The group generated by 1 + f1(E) and 1 + f1(F) for a transversal pair,
// with the stabilizer data of the associated grading.
struct GrassGroup {
  AlgebraRef algebra;
  Grading grading;   // ad of the projector onto e along f
  Subspace log_e;    // f1 of the flag of e; 1 + log_e is one unipotent wing
  Subspace log_f;
  std::vector<Matrix> elements;  // canonically ordered
};

GrassGroup grass_elementary_group(const RSubmodule& e, const RSubmodule& f,
                                  std::size_t cap);

// g E = E, the stabilizer predicate of a submodule.
bool stabilizes_submodule(const Matrix& g, const RSubmodule& e);

// Every complemented submodule of V (every column space; matrix-ring modules
// are semisimple), canonically ordered. CapExceeded guards the subspace walk.
std::vector<RSubmodule> all_submodules(const RingSpec& r, std::size_t cap);

// Idem(R) for V = R (m = 1), with the reflection mu(e,f) = (2e-1)f(2e-1).
struct IdempotentGeometry {
  RingSpec ring;
  std::vector<Matrix> idempotents;  // canonically ordered
};

IdempotentGeometry idempotent_geometry(const RingSpec& r);
Matrix idempotent_multiply(const Matrix& e, const Matrix& f);

// gl_2(R) with the grading of the first-summand projector, the subalgebra
// generated by the strict triangles, and the flag orbit of the base point
// (materialized over finite fields only).
struct ProjectiveLine {
  RingSpec ring;     // coefficient ring R = M_k; the input's m is ignored
  RingSpec doubled;  // same field and k, module rank 2
  AlgebraRef algebra;
  Grading grading;
  Projector base_point;
  Subspace e2;  // inside the algebra
  std::vector<Filtration3> flag_orbit;  // empty over infinite fields
};

ProjectiveLine projective_line(const RingSpec& r, std::size_t cap = 100000);

nlohmann::json ring_to_json(const RingSpec& r);
RingSpec ring_from_json(const nlohmann::json& j);
nlohmann::json submodule_to_json(const RSubmodule& e);
RSubmodule submodule_from_json(const nlohmann::json& j);

}  // namespace jpgeom
