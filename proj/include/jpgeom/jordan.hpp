#pragma once
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jpgeom/grading.hpp"
#include "jpgeom/lie.hpp"

namespace jpgeom {

// Trilinear tensor: t[i][j][k] is the value on (b_i, c_j, b_k) where b runs
// over the outer-side basis and c over the inner side.
using TripleTensor = std::vector<std::vector<std::vector<Vec>>>;

// tplus : V+ x V- x V+ -> V+, tminus : V- x V+ x V- -> V-. The convention
// tag records which sign normalization produced the tensors ("eq3.1" for
// pairs extracted from gradings, "sec8.5" for the positive matrix form);
// it is informational and round-trips through JSON.
struct JordanPair {
  FieldSpec field;
  std::size_t np = 0, nm = 0;
  TripleTensor tplus;
  TripleTensor tminus;
  std::string convention = "eq3.1";
};

struct JTS {
  FieldSpec field;
  std::size_t n = 0;
  TripleTensor t;
};

// Grading-reversing automorphism of order two.
struct Involution {
  AlgebraRef algebra;
  Grading grading;
  Matrix theta;
};

struct JordanAlgebra {
  FieldSpec field;
  std::size_t n = 0;
  std::vector<std::vector<Vec>> product;
  Vec unit;
};

struct TkkResult {
  AlgebraRef algebra;
  Grading grading;
  Matrix embed_plus;   // dim x n+, columns are the images of the V+ basis
  Matrix embed_minus;  // dim x n-
};

struct SelfDualResult {
  enum class Status { yes, no, unknown } status;
  std::optional<Vec> witness;  // invertible element, present iff yes
};

// T(x,y,z) = -[[x,y],z] in graded coordinates.
JordanPair pair_from_grading(const AlgebraRef& l, const Grading& d);

Vec triple_plus(const JordanPair& p, const Vec& x, const Vec& y, const Vec& z);
Vec triple_minus(const JordanPair& p, const Vec& x, const Vec& y, const Vec& z);

// Outer symmetry plus the five-linear identity, on all basis tuples.
bool check_pair(const JordanPair& p);
bool is_pair_automorphism(const JordanPair& p, const Matrix& aplus, const Matrix& aminus);
bool is_pair_derivation(const JordanPair& p, const Matrix& aplus, const Matrix& aminus);

// Q(x)v = T(x,v,x)/2, mapping the opposite side into x's side.
Matrix q_op(const JordanPair& p, int side, const Vec& x);

// (B+(x,y), B-(y,x)) with B+(x,y) = 1 - T+(x,y) + Q+(x)Q-(y).
std::pair<Matrix, Matrix> bergman(const JordanPair& p, const Vec& x, const Vec& y);

bool is_quasi_invertible(const JordanPair& p, const Vec& x, const Vec& y);
// x^y = B+(x,y)^{-1}(x - Q+(x)y).
Vec quasi_inverse(const JordanPair& p, const Vec& x, const Vec& y);
// beta(x,y) = (B+(x,y), B-(y,x)^{-1}), an automorphism of the pair.
std::pair<Matrix, Matrix> bergman_automorphism(const JordanPair& p, const Vec& x, const Vec& y);

// The isomorphic pair transported along (id, -id): both tensors negate and
// the convention tag flips.
JordanPair convention_flip(const JordanPair& p);

// V+ + (ider + K E) + V-, center-free, with the evaluation bracket.
TkkResult tkk(const JordanPair& p);

Involution make_involution(const AlgebraRef& l, const Grading& d, const Matrix& theta);

// T(x,y,z) = -[[x, theta(y)], z] on g1 coordinates.
JTS jts_from_involution(const Involution& th);
bool check_jts(const JTS& t);

struct JtsTriple {
  AlgebraRef algebra;
  Grading grading;
  Involution inv;
};
// Doubles t into the pair (V,V), builds its graded algebra, and returns the
// coordinate-swap involution. Inverse to jts_from_involution on tensors.
JtsTriple involution_from_jts(const JTS& t);

Filtration3 polarity_apply(const Involution& th, const Filtration3& f);
bool is_nonisotropic(const Involution& th, const Filtration3& f);

// mu(x,y) = mu_{-1}(x, p(x), y): the point reflection of y through x on the
// non-isotropic set.
Filtration3 symmetric_multiply(const Involution& th, const Filtration3& x, const Filtration3& y);

bool invertible(const JordanPair& p, const Vec& x);
// j(x) = -Q+(x)^{-1} x.
Vec jordan_inverse(const JordanPair& p, const Vec& x);

// The involution fixing f and the affine midpoint of the two base flags,
// acting by -1 there; swaps the base flags. f must be transversal to both.
Automorphism selfdual_involution(const AlgebraRef& l, const Grading& d, const Filtration3& f);

// Finite fields: exhaustive and decisive. Over the rationals only the given
// candidates are tried (default: all vectors with entries in {-1,0,1}) and
// failure reports unknown.
SelfDualResult is_selfdual(const AlgebraRef& l, const Grading& d,
                           const std::vector<Vec>& candidates = {});

// x.y = -T(x,e,y)/2 on a pair with V+ = V-; e must satisfy Q+(e) = -1.
JordanAlgebra jordan_algebra_from_pair(const JordanPair& p, const Vec& e);
Vec jalg_multiply(const JordanAlgebra& a, const Vec& x, const Vec& y);
// Commutativity, unit law, and the Jordan identity on all basis tuples.
bool check_jordan_algebra(const JordanAlgebra& a);

nlohmann::json pair_to_json(const JordanPair& p);
JordanPair pair_from_json(const nlohmann::json& j);

}  // namespace jpgeom
