#include "jpgeom/centext.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "jpgeom/errors.hpp"

namespace jpgeom {
namespace {

// Flat enumeration of the wedge pairs (i,j), i < j, in lexicographic order.
struct WedgeIndex {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;

  explicit WedgeIndex(std::size_t n_) : n(n_) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::size_t size() const { return pairs.size(); }
};

Vec unit_vec(const FieldSpec& f, std::size_t n, std::size_t i) {
  Vec v = vec_zero(f, n);
  v[i] = Scalar::one(f);
  return v;
}

Vec wedge_of(const FieldSpec& f, const WedgeIndex& w, const Vec& u, const Vec& v) {
  Vec out = vec_zero(f, w.size());
  for (std::size_t t = 0; t < w.size(); ++t) {
    auto [i, j] = w.pairs[t];
    out[t] = u[i] * v[j] - u[j] * v[i];
  }
  return out;
}

// b on the exterior square: a wedge vector maps to the matching combination
// of basis brackets.
Vec wedge_bracket_image(const AlgebraRef& l, const WedgeIndex& w, const Vec& v) {
  Vec out = vec_zero(l->field(), l->dim());
  for (std::size_t t = 0; t < w.size(); ++t) {
    auto [i, j] = w.pairs[t];
    if (!v[t].is_zero()) out = vec_add(out, vec_scale(v[t], l->structure(i, j)));
  }
  return out;
}

// g0 must be spanned by the Euler element together with the brackets across
// the outer components.
void require_degree_zero_span(const Grading& d) {
  const AlgebraRef& l = d.algebra;
  std::vector<Vec> gens = {d.euler.coords};
  for (std::size_t i = 0; i < d.g1.dim(); ++i)
    for (std::size_t j = 0; j < d.gm1.dim(); ++j)
      gens.push_back(bracket(make_element(l, d.g1.basis_vector(i)),
                             make_element(l, d.gm1.basis_vector(j)))
                         .coords);
  if (!(Subspace::span_vecs(l->field(), l->dim(), gens) == d.g0))
    throw Hypothesis71Violated();
}

Subspace matrix_kernel_space(const Matrix& a) {
  Matrix k = kernel_basis(a);
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < k.rows(); ++i) rows.push_back(k.row(i));
  return Subspace::span_vecs(a.field(), a.cols(), rows);
}

}  // namespace

Lambda2Result lambda2_quotient(const AlgebraRef& l) {
  const FieldSpec& f = l->field();
  const std::size_t n = l->dim();
  WedgeIndex w(n);

  std::vector<Vec> rels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec r = wedge_of(f, w, l->structure(i, j), unit_vec(f, n, k));
        r = vec_add(r, wedge_of(f, w, l->structure(j, k), unit_vec(f, n, i)));
        r = vec_add(r, wedge_of(f, w, l->structure(k, i), unit_vec(f, n, j)));
        if (!vec_is_zero(r)) rels.push_back(r);
      }
  Subspace rel = Subspace::span_vecs(f, w.size(), rels);

  // The quotient bracket factors through the wedge-to-bracket map in each
  // slot, so it is well defined exactly when that map kills every relation
  // generator; checked here rather than assumed.
  for (const Vec& r : rels)
    if (!vec_is_zero(wedge_bracket_image(l, w, r)))
      throw Error("lambda2_quotient: relation generator survives the bracket map");

  // Quotient basis: unit wedges at the non-pivot columns of the relation
  // space, so quotient_coords reads coordinates directly in that basis.
  std::vector<bool> is_pivot(w.size(), false);
  const Matrix& rb = rel.basis();
  for (std::size_t r = 0; r < rb.rows(); ++r)
    for (std::size_t c = 0; c < w.size(); ++c)
      if (!rb.at(r, c).is_zero()) {
        is_pivot[c] = true;
        break;
      }
  std::vector<std::pair<std::size_t, std::size_t>> reps;
  for (std::size_t c = 0; c < w.size(); ++c)
    if (!is_pivot[c]) reps.push_back(w.pairs[c]);
  const std::size_t qd = reps.size();

  std::vector<std::string> names;
  names.reserve(qd);
  for (auto [i, j] : reps) names.push_back(l->basis_name(i) + "^" + l->basis_name(j));

  std::vector<std::vector<Vec>> sc(qd, std::vector<Vec>(qd));
  for (std::size_t r = 0; r < qd; ++r)
    for (std::size_t s = 0; s < qd; ++s)
      sc[r][s] = rel.quotient_coords(
          wedge_of(f, w, l->structure(reps[r].first, reps[r].second),
                   l->structure(reps[s].first, reps[s].second)));

  AlgebraRef alg = LieAlgebra::create(f, names, sc);

  Matrix b(f, n, qd);
  for (std::size_t t = 0; t < qd; ++t) {
    const Vec& img = l->structure(reps[t].first, reps[t].second);
    for (std::size_t i = 0; i < n; ++i) b.at(i, t) = img[i];
  }
  return Lambda2Result{alg, b, reps, rel};
}

Subspace preimage_subspace(const Matrix& a, const Subspace& s) {
  if (a.rows() != s.ambient_dim()) throw DimensionMismatch();
  if (!(a.field() == s.field())) throw FieldMismatch();
  const FieldSpec& f = a.field();
  if (s.quotient_dim() == 0) return Subspace::full(f, a.cols());
  Matrix m(f, s.quotient_dim(), a.cols());
  for (std::size_t c = 0; c < a.cols(); ++c) {
    Vec qc = s.quotient_coords(a.col(c));
    for (std::size_t r = 0; r < m.rows(); ++r) m.at(r, c) = qc[r];
  }
  return matrix_kernel_space(m);
}

Grading lift_grading(const AlgebraRef& ext_total, const Element& e_hat,
                     const AlgebraRef& base, const Matrix& q) {
  const FieldSpec& f = ext_total->field();
  if (!(f == base->field())) throw FieldMismatch();
  const std::size_t td = ext_total->dim(), bd = base->dim();
  if (q.rows() != bd || q.cols() != td) throw DimensionMismatch();
  if (!e_hat.algebra->same_as(*ext_total)) throw AlgebraMismatch();

  for (std::size_t i = 0; i < td; ++i)
    for (std::size_t j = i + 1; j < td; ++j) {
      Vec lhs = q.apply(ext_total->structure(i, j));
      Vec rhs = bracket(make_element(base, q.col(i)), make_element(base, q.col(j))).coords;
      if (lhs != rhs) throw NotCentralExtension("projection is not a homomorphism");
    }
  std::vector<Vec> cols;
  for (std::size_t c = 0; c < td; ++c) cols.push_back(q.col(c));
  if (Subspace::span_vecs(f, bd, cols).dim() != bd)
    throw NotCentralExtension("projection is not surjective");
  Matrix k = kernel_basis(q);
  for (std::size_t i = 0; i < k.rows(); ++i)
    if (!ad(make_element(ext_total, k.row(i))).is_zero())
      throw NotCentralExtension("kernel is not central");

  Grading base_d = grading_from_euler(base, make_element(base, q.apply(e_hat.coords)));
  require_degree_zero_span(base_d);
  return grading_from_euler(ext_total, e_hat);
}

ExtensionResult make_extension(const Grading& base_d, const AlgebraRef& total,
                               const Matrix& q, const Element& e_hat) {
  if (q.apply(e_hat.coords) != base_d.euler.coords)
    throw NotCentralExtension("section does not project to the base grading element");
  Grading lifted = lift_grading(total, e_hat, base_d.algebra, q);
  return ExtensionResult{total, q, matrix_kernel_space(q), lifted, e_hat, base_d};
}

ExtensionResult universal_extension(const AlgebraRef& l, const Grading& d) {
  if (!d.algebra->same_as(*l)) throw AlgebraMismatch();
  require_degree_zero_span(d);

  const FieldSpec& f = l->field();
  const std::size_t n = l->dim();
  Lambda2Result l2 = lambda2_quotient(l);
  const std::size_t qd = l2.algebra->dim();

  if (is_perfect(l)) {
    auto ehat = solve_vec(l2.b_map, d.euler.coords);
    if (!ehat) throw Error("universal_extension: grading element escapes the derived algebra");
    return make_extension(d, l2.algebra, l2.b_map, make_element(l2.algebra, *ehat));
  }

  // Adjoin one generator acting on wedge classes as the Euler derivation.
  WedgeIndex w(n);
  Matrix ade = ad(d.euler);
  const std::size_t td = qd + 1;
  std::vector<std::string> names;
  names.reserve(td);
  for (std::size_t t = 0; t < qd; ++t) names.push_back(l2.algebra->basis_name(t));
  names.push_back("Et");

  auto pad = [&](const Vec& v) {
    Vec out = v;
    out.push_back(Scalar::zero(f));
    return out;
  };
  std::vector<std::vector<Vec>> sc(td, std::vector<Vec>(td, vec_zero(f, td)));
  for (std::size_t r = 0; r < qd; ++r)
    for (std::size_t s = 0; s < qd; ++s) sc[r][s] = pad(l2.algebra->structure(r, s));
  for (std::size_t t = 0; t < qd; ++t) {
    auto [i, j] = l2.reps[t];
    Vec delta = vec_add(wedge_of(f, w, ade.col(i), unit_vec(f, n, j)),
                        wedge_of(f, w, unit_vec(f, n, i), ade.col(j)));
    Vec coords = pad(l2.relations.quotient_coords(delta));
    sc[qd][t] = coords;
    sc[t][qd] = vec_scale(-Scalar::one(f), coords);
  }
  AlgebraRef total = LieAlgebra::create(f, names, sc);

  Matrix q(f, n, td);
  for (std::size_t t = 0; t < qd; ++t)
    for (std::size_t i = 0; i < n; ++i) q.at(i, t) = l2.b_map.at(i, t);
  for (std::size_t i = 0; i < n; ++i) q.at(i, qd) = d.euler.coords[i];

  return make_extension(d, total, q, make_element(total, unit_vec(f, td, qd)));
}

std::pair<AlgebraRef, Grading> cocycle_extension(std::size_t np, std::size_t nm,
                                                 const Matrix& beta) {
  if (beta.rows() != np || beta.cols() != nm) throw DimensionMismatch();
  const FieldSpec& f = beta.field();
  const std::size_t n = np + nm + 2;
  const std::size_t epos = np, zpos = n - 1;
  auto wpos = [&](std::size_t j) { return np + 1 + j; };

  std::vector<std::string> names;
  for (std::size_t i = 0; i < np; ++i) names.push_back("v" + std::to_string(i));
  names.push_back("E");
  for (std::size_t j = 0; j < nm; ++j) names.push_back("w" + std::to_string(j));
  names.push_back("z");

  const Scalar one = Scalar::one(f);
  std::vector<std::vector<Vec>> sc(n, std::vector<Vec>(n, vec_zero(f, n)));
  for (std::size_t i = 0; i < np; ++i) {
    sc[epos][i][i] = one;
    sc[i][epos][i] = -one;
  }
  for (std::size_t j = 0; j < nm; ++j) {
    sc[epos][wpos(j)][wpos(j)] = -one;
    sc[wpos(j)][epos][wpos(j)] = one;
  }
  for (std::size_t i = 0; i < np; ++i)
    for (std::size_t j = 0; j < nm; ++j) {
      sc[i][wpos(j)][zpos] = beta.at(i, j);
      sc[wpos(j)][i][zpos] = -beta.at(i, j);
    }
  AlgebraRef alg = LieAlgebra::create(f, names, sc);
  return {alg, grading_from_euler(alg, basis_element(alg, epos))};
}

namespace {

// Images of a lifted outer component's basis under the projection, as
// columns; solving against it inverts the component bijection.
Matrix component_image(const ExtensionResult& ext, const Subspace& comp) {
  const FieldSpec& f = ext.projection.field();
  Matrix m(f, ext.projection.rows(), comp.dim());
  for (std::size_t c = 0; c < comp.dim(); ++c) {
    Vec img = ext.projection.apply(comp.basis_vector(c));
    for (std::size_t r = 0; r < m.rows(); ++r) m.at(r, c) = img[r];
  }
  return m;
}

void require_word_grading(const GroupWord& w, const Grading& d) {
  if (!w.grading.algebra->same_as(*d.algebra)) throw AlgebraMismatch();
  if (w.grading.euler.coords != d.euler.coords)
    throw AlgebraMismatch("word grading does not match the extension");
}

}  // namespace

GroupWord lift_word(const ExtensionResult& ext, const GroupWord& w) {
  require_word_grading(w, ext.base_grading);
  Matrix mp = component_image(ext, ext.lifted_grading.g1);
  Matrix mm = component_image(ext, ext.lifted_grading.gm1);

  GroupWord out{ext.lifted_grading, {}};
  for (const WordLetter& lt : w.letters) {
    if (lt.kind == LetterKind::dilation) {
      out.letters.push_back(lt);
      continue;
    }
    const bool plus = lt.kind == LetterKind::exp_plus;
    const Subspace& bcomp = plus ? ext.base_grading.g1 : ext.base_grading.gm1;
    auto c = solve_vec(plus ? mp : mm, bcomp.from_coordinates(lt.coords));
    if (!c) throw NotCentralExtension("outer component does not lift");
    out.letters.push_back(WordLetter{lt.kind, *c, lt.scalar});
  }
  return out;
}

GroupWord push_word(const ExtensionResult& ext, const GroupWord& w) {
  require_word_grading(w, ext.lifted_grading);
  GroupWord out{ext.base_grading, {}};
  for (const WordLetter& lt : w.letters) {
    if (lt.kind == LetterKind::dilation) {
      out.letters.push_back(lt);
      continue;
    }
    const bool plus = lt.kind == LetterKind::exp_plus;
    const Subspace& tcomp = plus ? ext.lifted_grading.g1 : ext.lifted_grading.gm1;
    const Subspace& bcomp = plus ? ext.base_grading.g1 : ext.base_grading.gm1;
    Vec img = ext.projection.apply(tcomp.from_coordinates(lt.coords));
    auto c = bcomp.coordinates_of(img);
    if (!c) throw Error("push_word: image leaves the outer component");
    out.letters.push_back(WordLetter{lt.kind, *c, lt.scalar});
  }
  return out;
}

Matrix universality_map(const ExtensionResult& univ, const ExtensionResult& target) {
  const AlgebraRef& base = univ.base_grading.algebra;
  if (!target.base_grading.algebra->same_as(*base)) throw AlgebraMismatch();
  const FieldSpec& f = base->field();

  Lambda2Result l2 = lambda2_quotient(base);
  const std::size_t qd = l2.algebra->dim();
  const std::size_t ud = univ.total->dim();
  if (ud != qd && ud != qd + 1)
    throw DimensionMismatch("universality_map: source is not the universal extension");

  auto s = solve(target.projection, Matrix::identity(f, base->dim()));
  if (!s) throw NotCentralExtension("target projection is not surjective");

  Matrix a(f, target.total->dim(), ud);
  for (std::size_t t = 0; t < qd; ++t) {
    auto [i, j] = l2.reps[t];
    Vec col = bracket(make_element(target.total, s->col(i)),
                      make_element(target.total, s->col(j)))
                  .coords;
    for (std::size_t r = 0; r < a.rows(); ++r) a.at(r, t) = col[r];
  }
  if (ud == qd + 1)
    for (std::size_t r = 0; r < a.rows(); ++r) a.at(r, qd) = target.section.coords[r];
  return a;
}

}  // namespace jpgeom
