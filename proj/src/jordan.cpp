#include "jpgeom/jordan.hpp"

#include <algorithm>

#include "jpgeom/errors.hpp"

namespace jpgeom {
namespace {

Vec unit_vec(const FieldSpec& f, std::size_t n, std::size_t i) {
  Vec v = vec_zero(f, n);
  v[i] = Scalar::one(f);
  return v;
}

std::size_t out_dim(const TripleTensor& t) {
  return t.empty() ? 0 : t[0][0][0].size();
}

// Trilinear value on composite arguments.
Vec t_full(const FieldSpec& f, const TripleTensor& t, const Vec& x, const Vec& y, const Vec& z) {
  Vec out = vec_zero(f, out_dim(t));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j].is_zero()) continue;
      Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < z.size(); ++k) {
        if (z[k].is_zero()) continue;
        out = vec_add(out, vec_scale(xy * z[k], t[i][j][k]));
      }
    }
  }
  return out;
}

// The operator z -> T(x, y, z) for composite x, y.
Matrix t_operator(const FieldSpec& f, const TripleTensor& t, const Vec& x, const Vec& y) {
  std::size_t n = out_dim(t);
  std::size_t ncols = t.empty() ? 0 : t[0][0].size();
  Matrix m(f, n, ncols);
  for (std::size_t k = 0; k < ncols; ++k) {
    Vec col = vec_zero(f, n);
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < y.size(); ++j) {
        if (y[j].is_zero()) continue;
        col = vec_add(col, vec_scale(x[i] * y[j], t[i][j][k]));
      }
    }
    for (std::size_t r = 0; r < n; ++r) m.at(r, k) = col[r];
  }
  return m;
}

bool tensor_shape_ok(const TripleTensor& t, std::size_t a, std::size_t b, std::size_t out) {
  if (t.size() != a) return false;
  for (const auto& plane : t) {
    if (plane.size() != b) return false;
    for (const auto& row : plane) {
      if (row.size() != a) return false;
      for (const auto& v : row)
        if (v.size() != out) return false;
    }
  }
  return true;
}

// Outer symmetry and the five-linear identity for one side; `touter` plays
// T^s and `tinner` plays T^{-s}.
bool side_identities(const FieldSpec& f, const TripleTensor& touter, const TripleTensor& tinner,
                     std::size_t nout, std::size_t nin) {
  for (std::size_t i = 0; i < nout; ++i)
    for (std::size_t j = 0; j < nin; ++j)
      for (std::size_t k = 0; k < nout; ++k)
        if (touter[i][j][k] != touter[k][j][i]) return false;

  for (std::size_t i = 0; i < nout; ++i)
    for (std::size_t j = 0; j < nin; ++j)
      for (std::size_t u = 0; u < nout; ++u)
        for (std::size_t v = 0; v < nin; ++v)
          for (std::size_t w = 0; w < nout; ++w) {
            Vec lhs = t_full(f, touter, unit_vec(f, nout, i), unit_vec(f, nin, j),
                             touter[u][v][w]);
            Vec r1 = t_full(f, touter, touter[i][j][u], unit_vec(f, nin, v),
                            unit_vec(f, nout, w));
            Vec r2 = t_full(f, touter, unit_vec(f, nout, u), tinner[j][i][v],
                            unit_vec(f, nout, w));
            Vec r3 = t_full(f, touter, unit_vec(f, nout, u), unit_vec(f, nin, v),
                            touter[i][j][w]);
            if (lhs != vec_add(vec_sub(r1, r2), r3)) return false;
          }
  return true;
}

TripleTensor empty_tensor(const FieldSpec& f, std::size_t a, std::size_t b, std::size_t out) {
  return TripleTensor(a, std::vector<std::vector<Vec>>(b, std::vector<Vec>(a, vec_zero(f, out))));
}

Vec flatten_op_pair(const Matrix& a, const Matrix& b) {
  Vec v;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) v.push_back(a.at(i, j));
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) v.push_back(b.at(i, j));
  return v;
}

std::pair<Matrix, Matrix> unflatten_op_pair(const FieldSpec& f, const Vec& v, std::size_t np,
                                            std::size_t nm) {
  Matrix a(f, np, np), b(f, nm, nm);
  std::size_t pos = 0;
  for (std::size_t i = 0; i < np; ++i)
    for (std::size_t j = 0; j < np; ++j) a.at(i, j) = v[pos++];
  for (std::size_t i = 0; i < nm; ++i)
    for (std::size_t j = 0; j < nm; ++j) b.at(i, j) = v[pos++];
  return {a, b};
}

// The inner operator pair of [v_i, w_j]: (-T+(v_i, w_j), T-(w_j, v_i)).
std::pair<Matrix, Matrix> delta_pair(const JordanPair& p, std::size_t i, std::size_t j) {
  const FieldSpec& f = p.field;
  Matrix a(f, p.np, p.np), b(f, p.nm, p.nm);
  for (std::size_t k = 0; k < p.np; ++k)
    for (std::size_t r = 0; r < p.np; ++r) a.at(r, k) = -p.tplus[i][j][k][r];
  for (std::size_t k = 0; k < p.nm; ++k)
    for (std::size_t r = 0; r < p.nm; ++r) b.at(r, k) = p.tminus[j][i][k][r];
  return {a, b};
}

}  // namespace

JordanPair pair_from_grading(const AlgebraRef& l, const Grading& d) {
  if (!d.algebra->same_as(*l)) throw AlgebraMismatch();
  const FieldSpec& f = l->field();
  JordanPair p;
  p.field = f;
  p.np = d.g1.dim();
  p.nm = d.gm1.dim();
  p.convention = "eq3.1";
  p.tplus = empty_tensor(f, p.np, p.nm, p.np);
  p.tminus = empty_tensor(f, p.nm, p.np, p.nm);
  auto fill = [&](TripleTensor& t, const Subspace& outer, const Subspace& inner) {
    for (std::size_t i = 0; i < outer.dim(); ++i)
      for (std::size_t j = 0; j < inner.dim(); ++j) {
        Element bij = bracket(make_element(l, outer.basis_vector(i)),
                              make_element(l, inner.basis_vector(j)));
        for (std::size_t k = 0; k < outer.dim(); ++k) {
          Vec v = vec_scale(-Scalar::one(f),
                            bracket(bij, make_element(l, outer.basis_vector(k))).coords);
          auto coords = outer.coordinates_of(v);
          if (!coords) throw NotGraded("triple bracket leaves the component");
          t[i][j][k] = *coords;
        }
      }
  };
  fill(p.tplus, d.g1, d.gm1);
  fill(p.tminus, d.gm1, d.g1);
  return p;
}

Vec triple_plus(const JordanPair& p, const Vec& x, const Vec& y, const Vec& z) {
  if (x.size() != p.np || y.size() != p.nm || z.size() != p.np) throw DimensionMismatch();
  return t_full(p.field, p.tplus, x, y, z);
}

Vec triple_minus(const JordanPair& p, const Vec& x, const Vec& y, const Vec& z) {
  if (x.size() != p.nm || y.size() != p.np || z.size() != p.nm) throw DimensionMismatch();
  return t_full(p.field, p.tminus, x, y, z);
}

bool check_pair(const JordanPair& p) {
  if (!tensor_shape_ok(p.tplus, p.np, p.nm, p.np)) return false;
  if (!tensor_shape_ok(p.tminus, p.nm, p.np, p.nm)) return false;
  return side_identities(p.field, p.tplus, p.tminus, p.np, p.nm) &&
         side_identities(p.field, p.tminus, p.tplus, p.nm, p.np);
}

bool is_pair_automorphism(const JordanPair& p, const Matrix& aplus, const Matrix& aminus) {
  const FieldSpec& f = p.field;
  if (aplus.rows() != p.np || aplus.cols() != p.np) throw DimensionMismatch();
  if (aminus.rows() != p.nm || aminus.cols() != p.nm) throw DimensionMismatch();
  if (!inverse(aplus) || !inverse(aminus)) return false;
  for (std::size_t i = 0; i < p.np; ++i)
    for (std::size_t j = 0; j < p.nm; ++j)
      for (std::size_t k = 0; k < p.np; ++k)
        if (aplus.apply(p.tplus[i][j][k]) !=
            t_full(f, p.tplus, aplus.col(i), aminus.col(j), aplus.col(k)))
          return false;
  for (std::size_t i = 0; i < p.nm; ++i)
    for (std::size_t j = 0; j < p.np; ++j)
      for (std::size_t k = 0; k < p.nm; ++k)
        if (aminus.apply(p.tminus[i][j][k]) !=
            t_full(f, p.tminus, aminus.col(i), aplus.col(j), aminus.col(k)))
          return false;
  return true;
}

bool is_pair_derivation(const JordanPair& p, const Matrix& aplus, const Matrix& aminus) {
  const FieldSpec& f = p.field;
  if (aplus.rows() != p.np || aplus.cols() != p.np) throw DimensionMismatch();
  if (aminus.rows() != p.nm || aminus.cols() != p.nm) throw DimensionMismatch();
  for (std::size_t i = 0; i < p.np; ++i)
    for (std::size_t j = 0; j < p.nm; ++j)
      for (std::size_t k = 0; k < p.np; ++k) {
        Vec lhs = aplus.apply(p.tplus[i][j][k]);
        Vec rhs = t_full(f, p.tplus, aplus.col(i), unit_vec(f, p.nm, j), unit_vec(f, p.np, k));
        rhs = vec_add(rhs, t_full(f, p.tplus, unit_vec(f, p.np, i), aminus.col(j),
                                  unit_vec(f, p.np, k)));
        rhs = vec_add(rhs, t_full(f, p.tplus, unit_vec(f, p.np, i), unit_vec(f, p.nm, j),
                                  aplus.col(k)));
        if (lhs != rhs) return false;
      }
  for (std::size_t i = 0; i < p.nm; ++i)
    for (std::size_t j = 0; j < p.np; ++j)
      for (std::size_t k = 0; k < p.nm; ++k) {
        Vec lhs = aminus.apply(p.tminus[i][j][k]);
        Vec rhs = t_full(f, p.tminus, aminus.col(i), unit_vec(f, p.np, j), unit_vec(f, p.nm, k));
        rhs = vec_add(rhs, t_full(f, p.tminus, unit_vec(f, p.nm, i), aplus.col(j),
                                  unit_vec(f, p.nm, k)));
        rhs = vec_add(rhs, t_full(f, p.tminus, unit_vec(f, p.nm, i), unit_vec(f, p.np, j),
                                  aminus.col(k)));
        if (lhs != rhs) return false;
      }
  return true;
}

Matrix q_op(const JordanPair& p, int side, const Vec& x) {
  if (side != 1 && side != -1) throw Error("side must be +1 or -1");
  const FieldSpec& f = p.field;
  const TripleTensor& t = side == 1 ? p.tplus : p.tminus;
  std::size_t nx = side == 1 ? p.np : p.nm;
  std::size_t nv = side == 1 ? p.nm : p.np;
  if (x.size() != nx) throw DimensionMismatch();
  Scalar half = Scalar::from_int(f, 2).inverse();
  Matrix m(f, nx, nv);
  for (std::size_t j = 0; j < nv; ++j) {
    Vec col = vec_scale(half, t_full(f, t, x, unit_vec(f, nv, j), x));
    for (std::size_t r = 0; r < nx; ++r) m.at(r, j) = col[r];
  }
  return m;
}

std::pair<Matrix, Matrix> bergman(const JordanPair& p, const Vec& x, const Vec& y) {
  const FieldSpec& f = p.field;
  if (x.size() != p.np || y.size() != p.nm) throw DimensionMismatch();
  Matrix bp = Matrix::identity(f, p.np) - t_operator(f, p.tplus, x, y) +
              q_op(p, 1, x) * q_op(p, -1, y);
  Matrix bm = Matrix::identity(f, p.nm) - t_operator(f, p.tminus, y, x) +
              q_op(p, -1, y) * q_op(p, 1, x);
  return {bp, bm};
}

bool is_quasi_invertible(const JordanPair& p, const Vec& x, const Vec& y) {
  auto [bp, bm] = bergman(p, x, y);
  return inverse(bp).has_value() && inverse(bm).has_value();
}

Vec quasi_inverse(const JordanPair& p, const Vec& x, const Vec& y) {
  auto [bp, bm] = bergman(p, x, y);
  auto bpi = inverse(bp);
  if (!bpi || !inverse(bm)) throw NotQuasiInvertible();
  return bpi->apply(vec_sub(x, q_op(p, 1, x).apply(y)));
}

std::pair<Matrix, Matrix> bergman_automorphism(const JordanPair& p, const Vec& x, const Vec& y) {
  auto [bp, bm] = bergman(p, x, y);
  auto bmi = inverse(bm);
  if (!bmi || !inverse(bp)) throw NotQuasiInvertible();
  return {bp, *bmi};
}

JordanPair convention_flip(const JordanPair& p) {
  JordanPair out = p;
  for (auto& plane : out.tplus)
    for (auto& row : plane)
      for (auto& v : row) v = vec_scale(-Scalar::one(p.field), v);
  for (auto& plane : out.tminus)
    for (auto& row : plane)
      for (auto& v : row) v = vec_scale(-Scalar::one(p.field), v);
  out.convention = p.convention == "eq3.1" ? "sec8.5" : "eq3.1";
  return out;
}

TkkResult tkk(const JordanPair& p) {
  if (!check_pair(p)) throw InvalidPair("pair identities fail");
  const FieldSpec& f = p.field;
  std::size_t flat = p.np * p.np + p.nm * p.nm;

  std::vector<Vec> rows;
  for (std::size_t i = 0; i < p.np; ++i)
    for (std::size_t j = 0; j < p.nm; ++j) {
      auto [a, b] = delta_pair(p, i, j);
      rows.push_back(flatten_op_pair(a, b));
    }
  Subspace ider = Subspace::span_vecs(f, flat, rows);
  for (;;) {
    std::vector<Vec> next;
    for (std::size_t r = 0; r < ider.dim(); ++r)
      for (std::size_t s = r + 1; s < ider.dim(); ++s) {
        auto [ar, br] = unflatten_op_pair(f, ider.basis_vector(r), p.np, p.nm);
        auto [as, bs] = unflatten_op_pair(f, ider.basis_vector(s), p.np, p.nm);
        Vec comm = flatten_op_pair(ar * as - as * ar, br * bs - bs * br);
        if (!ider.contains_vector(comm)) next.push_back(comm);
      }
    if (next.empty()) break;
    for (std::size_t r = 0; r < ider.dim(); ++r) next.push_back(ider.basis_vector(r));
    ider = Subspace::span_vecs(f, flat, next);
  }

  Vec euler_flat = flatten_op_pair(Matrix::identity(f, p.np),
                                   -Matrix::identity(f, p.nm));
  std::vector<Vec> g0rows;
  for (std::size_t r = 0; r < ider.dim(); ++r) g0rows.push_back(ider.basis_vector(r));
  g0rows.push_back(euler_flat);
  Subspace g0 = Subspace::span_vecs(f, flat, g0rows);

  std::size_t n0 = g0.dim();
  std::size_t n = p.np + n0 + p.nm;
  auto idx_plus = [&](std::size_t i) { return i; };
  auto idx_zero = [&](std::size_t r) { return p.np + r; };
  auto idx_minus = [&](std::size_t i) { return p.np + n0 + i; };

  std::vector<std::vector<Vec>> c(n, std::vector<Vec>(n, vec_zero(f, n)));
  auto set_pair = [&](std::size_t a, std::size_t b, const Vec& v) {
    c[a][b] = v;
    c[b][a] = vec_scale(-Scalar::one(f), v);
  };

  std::vector<std::pair<Matrix, Matrix>> g0ops;
  for (std::size_t r = 0; r < n0; ++r)
    g0ops.push_back(unflatten_op_pair(f, g0.basis_vector(r), p.np, p.nm));

  for (std::size_t i = 0; i < p.np; ++i)
    for (std::size_t j = 0; j < p.nm; ++j) {
      auto [a, b] = delta_pair(p, i, j);
      auto coords = g0.coordinates_of(flatten_op_pair(a, b));
      if (!coords) throw InvalidPair("inner operators do not close");
      Vec v = vec_zero(f, n);
      for (std::size_t r = 0; r < n0; ++r) v[idx_zero(r)] = (*coords)[r];
      set_pair(idx_plus(i), idx_minus(j), v);
    }
  for (std::size_t r = 0; r < n0; ++r) {
    for (std::size_t i = 0; i < p.np; ++i) {
      Vec img = g0ops[r].first.apply(unit_vec(f, p.np, i));
      Vec v = vec_zero(f, n);
      for (std::size_t k = 0; k < p.np; ++k) v[idx_plus(k)] = img[k];
      set_pair(idx_zero(r), idx_plus(i), v);
    }
    for (std::size_t i = 0; i < p.nm; ++i) {
      Vec img = g0ops[r].second.apply(unit_vec(f, p.nm, i));
      Vec v = vec_zero(f, n);
      for (std::size_t k = 0; k < p.nm; ++k) v[idx_minus(k)] = img[k];
      set_pair(idx_zero(r), idx_minus(i), v);
    }
    for (std::size_t s = r + 1; s < n0; ++s) {
      Vec comm = flatten_op_pair(g0ops[r].first * g0ops[s].first - g0ops[s].first * g0ops[r].first,
                                 g0ops[r].second * g0ops[s].second -
                                     g0ops[s].second * g0ops[r].second);
      auto coords = g0.coordinates_of(comm);
      if (!coords) throw InvalidPair("inner operators do not close");
      Vec v = vec_zero(f, n);
      for (std::size_t q = 0; q < n0; ++q) v[idx_zero(q)] = (*coords)[q];
      set_pair(idx_zero(r), idx_zero(s), v);
    }
  }

  std::vector<std::string> names;
  for (std::size_t i = 0; i < p.np; ++i) names.push_back("v" + std::to_string(i));
  for (std::size_t r = 0; r < n0; ++r) names.push_back("d" + std::to_string(r));
  for (std::size_t i = 0; i < p.nm; ++i) names.push_back("w" + std::to_string(i));
  AlgebraRef alg = LieAlgebra::create(f, names, c);

  auto ecoords = g0.coordinates_of(euler_flat);
  Vec euler = vec_zero(f, n);
  for (std::size_t r = 0; r < n0; ++r) euler[idx_zero(r)] = (*ecoords)[r];

  Matrix embed_plus(f, n, p.np), embed_minus(f, n, p.nm);
  for (std::size_t i = 0; i < p.np; ++i) embed_plus.at(idx_plus(i), i) = Scalar::one(f);
  for (std::size_t i = 0; i < p.nm; ++i) embed_minus.at(idx_minus(i), i) = Scalar::one(f);

  return TkkResult{alg, grading_from_euler(alg, make_element(alg, euler)), embed_plus,
                   embed_minus};
}

Involution make_involution(const AlgebraRef& l, const Grading& d, const Matrix& theta) {
  if (!d.algebra->same_as(*l)) throw AlgebraMismatch();
  if (theta.rows() != l->dim() || theta.cols() != l->dim())
    throw NotInvolution("wrong shape");
  if (!is_automorphism(l, theta)) throw NotInvolution("not an automorphism");
  if (!(theta * theta).is_identity()) throw NotInvolution("not of order two");
  auto maps_into = [&](const Subspace& src, const Subspace& dst) {
    for (std::size_t i = 0; i < src.dim(); ++i)
      if (!dst.contains_vector(theta.apply(src.basis_vector(i)))) return false;
    return true;
  };
  if (!maps_into(d.g1, d.gm1) || !maps_into(d.gm1, d.g1) || !maps_into(d.g0, d.g0))
    throw NotInvolution("does not reverse the grading");
  return Involution{l, d, theta};
}

JTS jts_from_involution(const Involution& th) {
  const AlgebraRef& l = th.algebra;
  const Grading& d = th.grading;
  const FieldSpec& f = l->field();
  JTS t;
  t.field = f;
  t.n = d.g1.dim();
  t.t = empty_tensor(f, t.n, t.n, t.n);
  for (std::size_t i = 0; i < t.n; ++i)
    for (std::size_t j = 0; j < t.n; ++j) {
      Element inner = bracket(make_element(l, d.g1.basis_vector(i)),
                              make_element(l, th.theta.apply(d.g1.basis_vector(j))));
      for (std::size_t k = 0; k < t.n; ++k) {
        Vec v = vec_scale(-Scalar::one(f),
                          bracket(inner, make_element(l, d.g1.basis_vector(k))).coords);
        auto coords = d.g1.coordinates_of(v);
        if (!coords) throw NotGraded("triple bracket leaves the component");
        t.t[i][j][k] = *coords;
      }
    }
  return t;
}

bool check_jts(const JTS& t) {
  if (!tensor_shape_ok(t.t, t.n, t.n, t.n)) return false;
  return side_identities(t.field, t.t, t.t, t.n, t.n);
}

JtsTriple involution_from_jts(const JTS& t) {
  if (!check_jts(t)) throw InvalidJTS();
  const FieldSpec& f = t.field;
  JordanPair p;
  p.field = f;
  p.np = t.n;
  p.nm = t.n;
  p.tplus = t.t;
  p.tminus = t.t;
  auto r = tkk(p);
  std::size_t n = r.algebra->dim();
  std::size_t n0 = n - 2 * t.n;

  // theta swaps the odd copies and is solved on g0 from the homomorphism
  // rule theta([v_i, w_j]) = [w_i-as-plus, v_j-as-minus] = -[v_j, w_i].
  Matrix theta(f, n, n);
  for (std::size_t i = 0; i < t.n; ++i) {
    theta.at(t.n + n0 + i, i) = Scalar::one(f);
    theta.at(i, t.n + n0 + i) = Scalar::one(f);
  }
  std::vector<Vec> src_cols, dst_cols;
  auto g0_part = [&](const Vec& full) {
    Vec v;
    for (std::size_t r2 = 0; r2 < n0; ++r2) v.push_back(full[t.n + r2]);
    return v;
  };
  for (std::size_t i = 0; i < t.n; ++i)
    for (std::size_t j = 0; j < t.n; ++j) {
      src_cols.push_back(g0_part(r.algebra->structure(i, t.n + n0 + j)));
      dst_cols.push_back(vec_scale(-Scalar::one(f),
                                   g0_part(r.algebra->structure(j, t.n + n0 + i))));
    }
  src_cols.push_back(g0_part(r.grading.euler.coords));
  dst_cols.push_back(vec_scale(-Scalar::one(f), g0_part(r.grading.euler.coords)));

  Matrix s(f, n0, src_cols.size()), dmat(f, n0, src_cols.size());
  for (std::size_t cidx = 0; cidx < src_cols.size(); ++cidx)
    for (std::size_t ridx = 0; ridx < n0; ++ridx) {
      s.at(ridx, cidx) = src_cols[cidx][ridx];
      dmat.at(ridx, cidx) = dst_cols[cidx][ridx];
    }
  // solve Theta * s = dmat columnwise through the transposed system
  auto tsol = solve(s.transpose(), dmat.transpose());
  if (!tsol) throw InvalidJTS("swap does not extend to the inner part");
  Matrix theta0 = tsol->transpose();
  for (std::size_t r2 = 0; r2 < n0; ++r2)
    for (std::size_t c2 = 0; c2 < n0; ++c2) theta.at(t.n + r2, t.n + c2) = theta0.at(r2, c2);

  return JtsTriple{r.algebra, r.grading, make_involution(r.algebra, r.grading, theta)};
}

Filtration3 polarity_apply(const Involution& th, const Filtration3& f) {
  if (!f.algebra->same_as(*th.algebra)) throw AlgebraMismatch();
  Grading d2 = grading_from_euler(th.algebra,
                                  make_element(th.algebra, th.theta.apply(f.witness.coords)));
  Filtration3 out = plus_filtration(d2);
  auto image = [&](const Subspace& s) {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < s.dim(); ++i) rows.push_back(th.theta.apply(s.basis_vector(i)));
    return Subspace::span_vecs(th.algebra->field(), th.algebra->dim(), rows);
  };
  if (out.f1 != image(f.f1) || out.f0 != image(f.f0))
    throw Error("polarity image mismatch");
  return out;
}

bool is_nonisotropic(const Involution& th, const Filtration3& f) {
  return is_transversal(polarity_apply(th, f), f);
}

Filtration3 symmetric_multiply(const Involution& th, const Filtration3& x,
                               const Filtration3& y) {
  Filtration3 px = polarity_apply(th, x);
  if (!is_transversal(px, x)) throw Isotropic();
  if (!is_transversal(y, px)) throw NotTransversal("second point not transversal to the polar");
  return structure_map_mu(-Scalar::one(th.algebra->field()), x, px, y);
}

bool invertible(const JordanPair& p, const Vec& x) {
  return inverse(q_op(p, 1, x)).has_value();
}

Vec jordan_inverse(const JordanPair& p, const Vec& x) {
  auto qi = inverse(q_op(p, 1, x));
  if (!qi) throw NotInvertible();
  return vec_scale(-Scalar::one(p.field), qi->apply(x));
}

Automorphism selfdual_involution(const AlgebraRef& l, const Grading& d, const Filtration3& f) {
  Filtration3 fp = plus_filtration(d), fm = minus_filtration(d);
  if (!is_transversal(f, fp) || !is_transversal(f, fm)) throw NotBitransversal();
  Scalar half = Scalar::from_int(l->field(), 2).inverse();
  Filtration3 mid = structure_map_mu(half, fm, f, fp);
  Grading dprime = grading_from_transversal(mid, f);
  Automorphism j = dilation(dprime, -Scalar::one(l->field()));
  if (!filtration_eq(apply_to_filtration(j, fp), fm) ||
      !filtration_eq(apply_to_filtration(j, fm), fp))
    throw Error("midpoint involution does not swap the base flags");
  return j;
}

SelfDualResult is_selfdual(const AlgebraRef& l, const Grading& d,
                           const std::vector<Vec>& candidates) {
  JordanPair p = pair_from_grading(l, d);
  const FieldSpec& f = l->field();
  if (f.kind == FieldKind::prime) {
    for (const Vec& v : all_vectors(f, p.np))
      if (invertible(p, v)) return {SelfDualResult::Status::yes, v};
    return {SelfDualResult::Status::no, std::nullopt};
  }
  std::vector<Vec> cands = candidates;
  if (cands.empty()) {
    // all {-1,0,1} coordinate vectors, odometer order
    std::size_t total = 1;
    for (std::size_t i = 0; i < p.np; ++i) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
      Vec v = vec_zero(f, p.np);
      std::size_t rem = code;
      for (std::size_t i = p.np; i-- > 0;) {
        v[i] = Scalar::from_int(f, static_cast<long>(rem % 3) - 1);
        rem /= 3;
      }
      cands.push_back(v);
    }
  }
  for (const Vec& v : cands)
    if (v.size() == p.np && invertible(p, v)) return {SelfDualResult::Status::yes, v};
  return {SelfDualResult::Status::unknown, std::nullopt};
}

JordanAlgebra jordan_algebra_from_pair(const JordanPair& p, const Vec& e) {
  if (p.np != p.nm) throw NotUnitCandidate("pair sides differ");
  if (e.size() != p.np) throw DimensionMismatch();
  const FieldSpec& f = p.field;
  Matrix q = q_op(p, 1, e);
  if (q != -Matrix::identity(f, p.np)) throw NotUnitCandidate();
  Scalar mhalf = -Scalar::from_int(f, 2).inverse();
  JordanAlgebra a;
  a.field = f;
  a.n = p.np;
  a.unit = e;
  a.product.assign(a.n, std::vector<Vec>(a.n, vec_zero(f, a.n)));
  for (std::size_t i = 0; i < a.n; ++i)
    for (std::size_t j = 0; j < a.n; ++j)
      a.product[i][j] =
          vec_scale(mhalf, t_full(f, p.tplus, unit_vec(f, a.n, i), e, unit_vec(f, a.n, j)));
  return a;
}

Vec jalg_multiply(const JordanAlgebra& a, const Vec& x, const Vec& y) {
  if (x.size() != a.n || y.size() != a.n) throw DimensionMismatch();
  Vec out = vec_zero(a.field, a.n);
  for (std::size_t i = 0; i < a.n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < a.n; ++j) {
      if (y[j].is_zero()) continue;
      out = vec_add(out, vec_scale(x[i] * y[j], a.product[i][j]));
    }
  }
  return out;
}

bool check_jordan_algebra(const JordanAlgebra& a) {
  const FieldSpec& f = a.field;
  for (std::size_t i = 0; i < a.n; ++i)
    for (std::size_t j = 0; j < a.n; ++j)
      if (a.product[i][j] != a.product[j][i]) return false;
  for (std::size_t i = 0; i < a.n; ++i)
    if (jalg_multiply(a, a.unit, unit_vec(f, a.n, i)) != unit_vec(f, a.n, i)) return false;
  // x(x^2 y) = x^2 (xy), with x running over basis vectors and sums of two
  // basis vectors to pick up part of the polarized identity
  std::vector<Vec> xs;
  for (std::size_t i = 0; i < a.n; ++i) xs.push_back(unit_vec(f, a.n, i));
  for (std::size_t i = 0; i < a.n; ++i)
    for (std::size_t j = i + 1; j < a.n; ++j)
      xs.push_back(vec_add(unit_vec(f, a.n, i), unit_vec(f, a.n, j)));
  for (const Vec& x : xs) {
    Vec x2 = jalg_multiply(a, x, x);
    for (std::size_t j = 0; j < a.n; ++j) {
      Vec y = unit_vec(f, a.n, j);
      if (jalg_multiply(a, x, jalg_multiply(a, x2, y)) !=
          jalg_multiply(a, x2, jalg_multiply(a, x, y)))
        return false;
    }
  }
  return true;
}

namespace {

nlohmann::json tensor_to_json(const TripleTensor& t) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& plane : t) {
    nlohmann::json jp = nlohmann::json::array();
    for (const auto& row : plane) {
      nlohmann::json jr = nlohmann::json::array();
      for (const auto& v : row) {
        nlohmann::json jv = nlohmann::json::array();
        for (const auto& s : v) jv.push_back(s.str());
        jr.push_back(jv);
      }
      jp.push_back(jr);
    }
    out.push_back(jp);
  }
  return out;
}

TripleTensor tensor_from_json(const FieldSpec& f, const nlohmann::json& j, std::size_t a,
                              std::size_t b, std::size_t out) {
  if (!j.is_array() || j.size() != a) throw SchemaViolation("bad tensor shape");
  TripleTensor t = empty_tensor(f, a, b, out);
  for (std::size_t i = 0; i < a; ++i) {
    if (j[i].size() != b) throw SchemaViolation("bad tensor shape");
    for (std::size_t jj = 0; jj < b; ++jj) {
      if (j[i][jj].size() != a) throw SchemaViolation("bad tensor shape");
      for (std::size_t k = 0; k < a; ++k) {
        const auto& jv = j[i][jj][k];
        if (jv.size() != out) throw SchemaViolation("bad tensor shape");
        Vec v;
        for (const auto& s : jv) v.push_back(Scalar::from_string(f, s.get<std::string>()));
        t[i][jj][k] = v;
      }
    }
  }
  return t;
}

}  // namespace

nlohmann::json pair_to_json(const JordanPair& p) {
  nlohmann::json j;
  j["field"] = field_to_json(p.field);
  j["dims"] = {p.np, p.nm};
  j["sign"] = p.convention;
  j["tplus"] = tensor_to_json(p.tplus);
  j["tminus"] = tensor_to_json(p.tminus);
  return j;
}

JordanPair pair_from_json(const nlohmann::json& j) {
  try {
    JordanPair p;
    p.field = field_from_json(j.at("field"));
    p.np = j.at("dims").at(0).get<std::size_t>();
    p.nm = j.at("dims").at(1).get<std::size_t>();
    p.convention = j.at("sign").get<std::string>();
    if (p.convention != "eq3.1" && p.convention != "sec8.5")
      throw SchemaViolation("unknown sign tag: " + p.convention);
    p.tplus = tensor_from_json(p.field, j.at("tplus"), p.np, p.nm, p.np);
    p.tminus = tensor_from_json(p.field, j.at("tminus"), p.nm, p.np, p.nm);
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw SchemaViolation(e.what());
  }
}

}  // namespace jpgeom
