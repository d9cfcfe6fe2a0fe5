#pragma once
#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "jpgeom/linalg.hpp"

namespace jpgeom {

class LieAlgebra;
using AlgebraRef = std::shared_ptr<const LieAlgebra>;

// Finite-dimensional Lie algebra given by structure constants. Antisymmetry
// and the Jacobi identity are validated exhaustively at construction, since
// everything downstream silently assumes them.
class LieAlgebra {
 public:
  // c[i][j] = coordinates of [e_i, e_j]; full tensor, all i,j.
  static AlgebraRef create(const FieldSpec& f, std::vector<std::string> names,
                           std::vector<std::vector<Vec>> c);

  const FieldSpec& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::string& basis_name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& basis_names() const { return names_; }
  const Vec& structure(std::size_t i, std::size_t j) const { return c_[i][j]; }

  // Content identity: two refs describe the same algebra iff field, names and
  // constants agree. Element operations accept either ref in that case.
  bool same_as(const LieAlgebra& o) const;

 private:
  LieAlgebra() = default;
  FieldSpec field_;
  std::size_t dim_ = 0;
  std::vector<std::string> names_;
  std::vector<std::vector<Vec>> c_;
};

struct Element {
  AlgebraRef algebra;
  Vec coords;
};

Element make_element(const AlgebraRef& l, const Vec& coords);
Element zero_element(const AlgebraRef& l);
Element basis_element(const AlgebraRef& l, std::size_t i);
Element elem_add(const Element& x, const Element& y);
Element elem_sub(const Element& x, const Element& y);
Element elem_scale(const Scalar& c, const Element& x);
bool elem_eq(const Element& x, const Element& y);

void check_same_algebra(const Element& x, const Element& y);

Element bracket(const Element& x, const Element& y);
Matrix ad(const Element& x);
Subspace center(const AlgebraRef& l);
Subspace subalgebra_generated(const AlgebraRef& l, const Subspace& gens);
bool is_automorphism(const AlgebraRef& l, const Matrix& g);
bool is_derivation(const AlgebraRef& l, const Matrix& d);
bool is_perfect(const AlgebraRef& l);

// Derived subalgebra [g,g] as a subspace.
Subspace derived_subalgebra(const AlgebraRef& l);

// Structure constants from explicit matrices under commutator. The given
// matrices must be linearly independent and closed under commutators.
AlgebraRef algebra_from_matrices(const FieldSpec& f, std::vector<std::string> names,
                                 const std::vector<Matrix>& mats);

// A bracket-preserving invertible matrix on the algebra. The optional word
// records how it was produced from exponential and dilation generators.
struct GroupWord;
struct Automorphism {
  AlgebraRef algebra;
  Matrix matrix;
  std::shared_ptr<const GroupWord> word;
};

Automorphism make_automorphism(const AlgebraRef& l, const Matrix& m);
Automorphism compose(const Automorphism& a, const Automorphism& b);  // a after b
Automorphism automorphism_inverse(const Automorphism& a);
Element apply(const Automorphism& a, const Element& x);

nlohmann::json field_to_json(const FieldSpec& f);
FieldSpec field_from_json(const nlohmann::json& j);

nlohmann::json algebra_to_json(const AlgebraRef& l);
AlgebraRef algebra_from_json(const nlohmann::json& j);

}  // namespace jpgeom
