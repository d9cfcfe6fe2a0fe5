#pragma once
#include <utility>

#include "jpgeom/grading.hpp"

namespace jpgeom {

enum class LetterKind { exp_plus, exp_minus, dilation };

// One generator: exp(ad x) for x in an extreme component (coords are taken
// in that component's basis), or a dilation by an invertible scalar.
struct WordLetter {
  LetterKind kind;
  Vec coords;     // component coordinates for exp letters
  Scalar scalar;  // dilation ratio
};

struct GroupWord {
  Grading grading;
  std::vector<WordLetter> letters;
};

// sign " +1 " takes x from g1, " -1 " from g-1. Unipotent since ad(x)^3 = 0.
Automorphism exp_ad(const Grading& d, int sign, const Element& x);

// Ordered product of the letter automorphisms, first letter leftmost, so the
// last letter acts first on vectors.
Automorphism evaluate_word(const GroupWord& w);

// Compact form "x+:1,0;x-:0,2;dil:3": letters ';'-separated, exp coordinates
// comma-separated in component bases.
std::string word_to_string(const GroupWord& w);
GroupWord word_from_string(const Grading& d, const std::string& s);

// pr_i . g . incl_j as a matrix in component coordinates; i, j in {1,0,-1}.
Matrix block(const Automorphism& g, int i, int j, const Grading& d);

// d_g(x) = (e^{-ad x} g^{-1})_{11} and c_g(x) = (g e^{ad x})_{-1,-1}, both in
// component coordinates; x must lie in g1.
Matrix denominator(const Automorphism& g, const Element& x, const Grading& d);
Matrix codenominator(const Automorphism& g, const Element& x, const Grading& d);

// n_g(x) = pr_1(e^{-ad x} g^{-1} E), ambient coordinates.
Element nominator(const Automorphism& g, const Element& x, const Grading& d);

// g.x = d_g(x)^{-1} n_g(x), the chart form of the flag action.
Element fractional_action(const Automorphism& g, const Element& x, const Grading& d);

enum class StabilizerClass { h_class, p_plus, p_minus, none };

// Classification by which of the two extreme flags g fixes.
StabilizerClass stabilizer_class(const Automorphism& g, const Grading& d);

struct OmegaParts {
  Element v;       // g1 part
  Automorphism h;  // grading-preserving middle
  Element w;       // g-1 part
};

// g = exp_ad(+,v) . h . exp_ad(-,w); defined exactly when g.f- stays
// transversal to f+.
OmegaParts omega_decompose(const Automorphism& g, const Grading& d);

// e1-coordinates -> canonical coordinates on g/f0, Y |-> Y mod f0.
// Bijective exactly when e1 complements f0.
Matrix canonical_kernel(const Filtration3& f, const Filtration3& e);

// Quadratic self-map of g1 in component coordinates:
// v |-> constant + linear v + sum_{ij} v_i v_j quad[i][j].
struct QuadraticMap {
  Grading grading;
  Vec constant;
  Matrix linear;
  std::vector<std::vector<Vec>> quad;  // symmetric in the two indices
};

Vec quadratic_eval(const QuadraticMap& q, const Vec& v);

// Chart trivialization of the vector field generated by y:
// v |-> pr_1(e^{-ad v} y).
QuadraticMap vector_field_chart(const Element& y, const Grading& d);

// [p,q](x) = dp(x) q(x) - dq(x) p(x). The cubic term must cancel; it does
// whenever p and q are trivializations of algebra elements.
QuadraticMap poly_bracket(const QuadraticMap& p, const QuadraticMap& q);

// Exact denominator and co-denominator composition rules for g1 g2 at x.
bool cocycle_check(const Automorphism& g1, const Automorphism& g2, const Element& x,
                   const Grading& d);

// (d_g(x)^{-1}, c_g(x)); the two components act on g1 and g-1.
std::pair<Matrix, Matrix> structure_pair(const Automorphism& g, const Element& x,
                                         const Grading& d);

// BFS closure of the seed flag under exp_ad(+-, c b) for component basis
// vectors b and scalars c; deterministic sorted output.
std::vector<Filtration3> orbit_enumerate(const Grading& d, const Filtration3& seed,
                                         std::size_t cap);

// Conjugation orbit of the grading itself under the same generators.
std::vector<Grading> grading_orbit(const Grading& d, std::size_t cap);

// Letter-wise image of a word under a surjective graded morphism phi from
// w's algebra onto target_d's algebra.
GroupWord induced_word_map(const Matrix& phi, const Grading& target_d, const GroupWord& w);

// Subalgebra generated by the extreme components and the Euler element,
// with its embedding and the Euler element in subalgebra coordinates.
struct InnerRestriction {
  AlgebraRef sub;
  Matrix embed;  // ambient_dim x sub_dim, columns are the sub basis
  Element sub_euler;
};

InnerRestriction restrict_to_inner(const AlgebraRef& l, const Grading& d);

// Matrix of g on the inner subalgebra in sub coordinates.
Automorphism restrict_automorphism(const InnerRestriction& r, const Automorphism& g);

// (e^{ad x} g e^{ad y} h)_{11} and pr_1((e^{ad x} g e^{ad y} h) E); x and y
// may each lie in either extreme component.
Matrix matrix_coefficient_q(const Element& x, const Automorphism& g, const Element& y,
                            const Automorphism& h, const Grading& d);
Element matrix_coefficient_p(const Element& x, const Automorphism& g, const Element& y,
                             const Automorphism& h, const Grading& d);

}  // namespace jpgeom
