#include "jpgeom/grading.hpp"

namespace jpgeom {

namespace {

Scalar half(const FieldSpec& f) { return Scalar::from_int(f, 2).inverse(); }

// exp(ad x) for x in the abelian top layer of a flag, where ad(x)^3 = 0.
Matrix exp_ad_flag_top(const AlgebraRef& l, const Vec& x) {
  Matrix a = ad(make_element(l, x));
  Matrix a2 = a * a;
  if (!(a2 * a).is_zero()) throw NotTransversal("coordinate vector not nilpotent of order 3");
  return Matrix::identity(l->field(), l->dim()) + a + a2.scaled(half(l->field()));
}

bool bracket_contained(const AlgebraRef& l, const Subspace& a, const Subspace& b,
                       const Subspace& target) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) {
      auto br = bracket(make_element(l, a.basis_vector(i)), make_element(l, b.basis_vector(j)));
      if (!target.contains_vector(br.coords)) return false;
    }
  return true;
}

Subspace transform(const Matrix& g, const Subspace& s) {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < s.dim(); ++i) rows.push_back(g.apply(s.basis_vector(i)));
  return Subspace::span_vecs(s.field(), s.ambient_dim(), rows);
}

}  // namespace

Grading grading_from_euler(const AlgebraRef& l, const Element& e) {
  if (!l->same_as(*e.algebra)) throw AlgebraMismatch();
  const FieldSpec& f = l->field();
  Matrix d = ad(e);
  Matrix d2 = d * d;
  if (d2 * d != d) throw NotTripotent("ad(e)^3 != ad(e)");
  Scalar h = half(f);
  Matrix id = Matrix::identity(f, l->dim());
  Matrix pr1 = (d + d2).scaled(h);
  Matrix pr0 = id - d2;
  Matrix prm1 = (d2 - d).scaled(h);
  Subspace g1 = Subspace::span(kernel_basis(d - id));
  Subspace g0 = Subspace::span(kernel_basis(d));
  Subspace gm1 = Subspace::span(kernel_basis(d + id));
  return Grading{l, e, d, pr1, pr0, prm1, g1, g0, gm1};
}

Filtration3 plus_filtration(const Grading& g) {
  return Filtration3{g.algebra, g.g1, g.g0.sum(g.g1), g.euler};
}

Filtration3 minus_filtration(const Grading& g) {
  return Filtration3{g.algebra, g.gm1, g.g0.sum(g.gm1),
                     elem_scale(-Scalar::one(g.algebra->field()), g.euler)};
}

bool is_filtration(const AlgebraRef& l, const Subspace& f1, const Subspace& f0) {
  if (f1.ambient_dim() != l->dim() || f0.ambient_dim() != l->dim()) throw DimensionMismatch();
  if (!f0.contains(f1)) return false;
  if (!bracket_contained(l, f0, f0, f0)) return false;
  if (!bracket_contained(l, f0, f1, f1)) return false;
  Subspace zero = Subspace::zero(l->field(), l->dim());
  if (!bracket_contained(l, f1, f1, zero)) return false;
  Subspace full = Subspace::full(l->field(), l->dim());
  if (!bracket_contained(l, full, f1, f0)) return false;
  return true;
}

bool filtration_eq(const Filtration3& a, const Filtration3& b) {
  return a.algebra->same_as(*b.algebra) && a.f1 == b.f1 && a.f0 == b.f0;
}

bool is_transversal(const Filtration3& e, const Filtration3& f) {
  if (!e.algebra->same_as(*f.algebra)) throw AlgebraMismatch();
  return e.f1.is_complement(f.f0) && f.f1.is_complement(e.f0);
}

Grading grading_from_transversal(const Filtration3& e, const Filtration3& f) {
  if (!is_transversal(e, f)) throw NotTransversal("flags are not transversal");
  const AlgebraRef& l = f.algebra;
  Grading aux = grading_from_euler(l, e.witness);
  // e0 = ker(aux.prm1), so E - Z lies in e0 iff prm1(Z) = prm1(E).
  const Vec& ec = f.witness.coords;
  Matrix bt = f.f1.basis().transpose();
  auto t = solve_vec(aux.prm1 * bt, aux.prm1.apply(ec));
  if (!t) throw NotTransversal("no adapted Euler element");
  Vec z = bt.apply(*t);
  Grading out = grading_from_euler(l, make_element(l, vec_sub(ec, z)));
  if (!filtration_eq(plus_filtration(out), f) || !filtration_eq(minus_filtration(out), e))
    throw NotTransversal("no grading adapts both flags");
  return out;
}

Element transversal_coordinates(const Filtration3& f, const Filtration3& e,
                                const Filtration3& e2) {
  Grading a = grading_from_transversal(e, f);
  Grading b = grading_from_transversal(e2, f);
  return elem_sub(a.euler, b.euler);
}

bool same_plus_filtration(const Grading& d1, const Grading& d2) {
  if (!d1.algebra->same_as(*d2.algebra)) throw AlgebraMismatch();
  return filtration_eq(plus_filtration(d1), plus_filtration(d2));
}

Automorphism dilation(const Grading& g, const Scalar& r) {
  Matrix m = g.pr1.scaled(r) + g.pr0 + g.prm1.scaled(r.inverse());
  return Automorphism{g.algebra, m, nullptr};
}

Filtration3 apply_to_filtration(const Automorphism& g, const Filtration3& f) {
  if (!g.algebra->same_as(*f.algebra)) throw AlgebraMismatch();
  return Filtration3{f.algebra, transform(g.matrix, f.f1), transform(g.matrix, f.f0),
                     apply(g, f.witness)};
}

Filtration3 structure_map_mu(const Scalar& r, const Filtration3& f1, const Filtration3& f2,
                             const Filtration3& f3) {
  Element x = transversal_coordinates(f2, f1, f3);
  Vec rx = vec_scale(r, x.coords);
  Matrix m = exp_ad_flag_top(f1.algebra, rx);
  return apply_to_filtration(Automorphism{f1.algebra, m, nullptr}, f1);
}

Grading reflection_multiply(const Grading& d1, const Grading& d2) {
  if (!d1.algebra->same_as(*d2.algebra)) throw AlgebraMismatch();
  Automorphism sigma = dilation(d1, -Scalar::one(d1.algebra->field()));
  return grading_from_euler(d1.algebra, apply(sigma, d2.euler));
}

bool grading_eq(const Grading& a, const Grading& b) {
  return a.algebra->same_as(*b.algebra) && a.d == b.d && a.euler.coords == b.euler.coords;
}

nlohmann::json subspace_to_json(const Subspace& s) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < s.dim(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& x : s.basis_vector(i)) row.push_back(x.str());
    rows.push_back(row);
  }
  return {{"ambient", s.ambient_dim()}, {"basis", rows}};
}

nlohmann::json filtration_to_json(const Filtration3& f) {
  nlohmann::json w = nlohmann::json::array();
  for (const auto& x : f.witness.coords) w.push_back(x.str());
  return {{"f1", subspace_to_json(f.f1)}, {"f0", subspace_to_json(f.f0)}, {"witness", w}};
}

nlohmann::json grading_to_json(const Grading& g) {
  nlohmann::json e = nlohmann::json::array();
  for (const auto& x : g.euler.coords) e.push_back(x.str());
  return {{"euler", e},
          {"g1", subspace_to_json(g.g1)},
          {"g0", subspace_to_json(g.g0)},
          {"gm1", subspace_to_json(g.gm1)}};
}

}  // namespace jpgeom
