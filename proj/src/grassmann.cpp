#include "jpgeom/grassmann.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "jpgeom/errors.hpp"
#include "jpgeom/projgroup.hpp"

namespace jpgeom {
namespace {

Vec flatten(const Matrix& x) {
  Vec v;
  v.reserve(x.rows() * x.cols());
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < x.cols(); ++c) v.push_back(x.at(r, c));
  return v;
}

Matrix unflatten(const FieldSpec& f, std::size_t rows, std::size_t cols, const Vec& v) {
  if (v.size() != rows * cols) throw DimensionMismatch();
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = v[r * cols + c];
  return m;
}

void check_same_ring(const RingSpec& a, const RingSpec& b) {
  if (!(a.field == b.field)) throw FieldMismatch();
  if (a.k != b.k || a.m != b.m) throw DimensionMismatch("ring specs differ");
}

Subspace column_span(const FieldSpec& f, const Matrix& m) {
  std::vector<Vec> cols;
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.col(c));
  return Subspace::span_vecs(f, m.rows(), cols);
}

// {X : im X inside W} as a flattened subspace; one basis matrix w e_c^T per
// column slot and W basis vector.
Subspace ew_space(const RingSpec& r, const Subspace& w) {
  const FieldSpec& f = r.field;
  std::vector<Vec> vs;
  for (std::size_t i = 0; i < w.dim(); ++i) {
    Vec wb = w.basis_vector(i);
    for (std::size_t c = 0; c < r.k; ++c) {
      Matrix x(f, r.rows(), r.k);
      for (std::size_t a = 0; a < r.rows(); ++a) x.at(a, c) = wb[a];
      vs.push_back(flatten(x));
    }
  }
  return Subspace::span_vecs(f, r.vdim(), vs);
}

Matrix basis_columns(const FieldSpec& f, std::size_t ambient,
                     const std::vector<Vec>& cols) {
  Matrix b(f, ambient, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < ambient; ++r) b.at(r, c) = cols[c][r];
  return b;
}

// Projector with image the first block of columns and kernel the second.
Matrix projector_along(const FieldSpec& f, const Subspace& im, const Subspace& ker) {
  const std::size_t n = im.ambient_dim();
  std::vector<Vec> cols;
  for (std::size_t i = 0; i < im.dim(); ++i) cols.push_back(im.basis_vector(i));
  for (std::size_t i = 0; i < ker.dim(); ++i) cols.push_back(ker.basis_vector(i));
  Matrix b = basis_columns(f, n, cols);
  auto binv = inverse(b);
  if (!binv) throw NotComplementary();
  Matrix dia(f, n, n);
  for (std::size_t i = 0; i < im.dim(); ++i) dia.at(i, i) = Scalar::one(f);
  return b * dia * *binv;
}

Subspace solve_conditions(const FieldSpec& f, std::size_t unknowns,
                          const std::vector<Vec>& rows) {
  if (rows.empty()) return Subspace::full(f, unknowns);
  Matrix m = Matrix::from_rows(f, rows);
  Matrix k = kernel_basis(m);
  std::vector<Vec> kr;
  for (std::size_t i = 0; i < k.rows(); ++i) kr.push_back(k.row(i));
  return Subspace::span_vecs(f, unknowns, kr);
}

std::string unit_name(std::size_t a, std::size_t b, std::size_t n) {
  if (n <= 9) return "e" + std::to_string(a + 1) + std::to_string(b + 1);
  return "e" + std::to_string(a + 1) + "_" + std::to_string(b + 1);
}

nlohmann::json mat_to_json(const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
    rows.push_back(row);
  }
  return rows;
}

Matrix mat_from_json(const FieldSpec& f, const nlohmann::json& j,
                     std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) throw SchemaViolation("bad matrix shape");
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto& row = j[r];
    if (!row.is_array() || row.size() != cols) throw SchemaViolation("bad matrix row");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!row[c].is_string()) throw SchemaViolation("matrix entries are strings");
      m.at(r, c) = Scalar::from_string(f, row[c].get<std::string>());
    }
  }
  return m;
}

}  // namespace

Projector make_projector(const RingSpec& r, const Matrix& p) {
  if (!(p.field() == r.field)) throw FieldMismatch();
  if (p.rows() != r.rows() || p.cols() != r.rows()) throw DimensionMismatch();
  if (p * p != p) throw Error("projector is not idempotent");
  return Projector{r, p};
}

RSubmodule make_submodule(const RingSpec& r, const Subspace& span,
                          const Projector& certificate) {
  check_same_ring(r, certificate.ring);
  if (!(span.field() == r.field)) throw FieldMismatch();
  if (span.ambient_dim() != r.vdim()) throw DimensionMismatch();
  if (span.dim() % r.k != 0) throw Error("submodule dimension is not divisible by k");
  make_projector(r, certificate.p);

  // right multiplication by the matrix units of R keeps the span
  for (std::size_t i = 0; i < span.dim(); ++i) {
    Matrix x = unflatten(r.field, r.rows(), r.k, span.basis_vector(i));
    for (std::size_t a = 0; a < r.k; ++a)
      for (std::size_t b = 0; b < r.k; ++b) {
        Matrix xu(r.field, r.rows(), r.k);
        for (std::size_t rr = 0; rr < r.rows(); ++rr) xu.at(rr, b) = x.at(rr, a);
        if (!span.contains_vector(flatten(xu)))
          throw Error("span is not stable under the right ring action");
      }
  }

  if (ew_space(r, column_span(r.field, certificate.p)) != span)
    throw Error("certificate image differs from the span");
  return RSubmodule{r, span, certificate};
}

Subspace submodule_columns(const RSubmodule& e) {
  const RingSpec& r = e.ring;
  std::vector<Vec> cols;
  for (std::size_t i = 0; i < e.span.dim(); ++i) {
    Matrix x = unflatten(r.field, r.rows(), r.k, e.span.basis_vector(i));
    for (std::size_t c = 0; c < r.k; ++c) cols.push_back(x.col(c));
  }
  return Subspace::span_vecs(r.field, r.rows(), cols);
}

RSubmodule submodule_from_columns(const RingSpec& r, const Subspace& w,
                                  const Projector& certificate) {
  return make_submodule(r, ew_space(r, w), certificate);
}

std::pair<RSubmodule, RSubmodule> projector_to_pair(const Projector& p) {
  Projector pp = make_projector(p.ring, p.p);
  const FieldSpec& f = p.ring.field;
  Matrix comp = Matrix::identity(f, p.ring.rows()) - p.p;
  RSubmodule im = submodule_from_columns(p.ring, column_span(f, p.p), pp);
  RSubmodule ker = submodule_from_columns(p.ring, column_span(f, comp),
                                          Projector{p.ring, comp});
  return {im, ker};
}

Projector pair_to_projector(const RSubmodule& e, const RSubmodule& f) {
  check_same_ring(e.ring, f.ring);
  Subspace we = submodule_columns(e), wf = submodule_columns(f);
  if (!we.is_complement(wf)) throw NotComplementary();
  return make_projector(e.ring, projector_along(e.ring.field, we, wf));
}

std::vector<RSubmodule> complements(const RSubmodule& e) {
  const RingSpec& r = e.ring;
  const FieldSpec& f = r.field;
  Subspace w = submodule_columns(e);
  Subspace base = column_span(f, Matrix::identity(f, r.rows()) - e.certificate.p);
  RSubmodule base_sub = submodule_from_columns(
      r, base, Projector{r, Matrix::identity(f, r.rows()) - e.certificate.p});

  const std::size_t hom = w.dim() * w.quotient_dim();
  if (hom == 0) return {base_sub};
  if (f.kind == FieldKind::rational) throw InfiniteField();

  std::vector<RSubmodule> out;
  for (const Vec& hv : all_vectors(f, hom))
    out.push_back(complement_translate(e, base_sub,
                                       unflatten(f, w.dim(), w.quotient_dim(), hv)));
  std::sort(out.begin(), out.end(), [](const RSubmodule& a, const RSubmodule& b) {
    return a.span.basis().str() < b.span.basis().str();
  });
  return out;
}

RSubmodule complement_translate(const RSubmodule& e, const RSubmodule& f,
                                const Matrix& h) {
  check_same_ring(e.ring, f.ring);
  const FieldSpec& fld = e.ring.field;
  Subspace w = submodule_columns(e), wf = submodule_columns(f);
  if (!w.is_complement(wf)) throw NotComplementary();
  if (h.rows() != w.dim() || h.cols() != w.quotient_dim()) throw DimensionMismatch();

  std::vector<Vec> cols;
  for (std::size_t j = 0; j < wf.dim(); ++j) {
    Vec x = wf.basis_vector(j);
    Vec phi = h.apply(w.quotient_coords(x));
    for (std::size_t i = 0; i < w.dim(); ++i)
      x = vec_add(x, vec_scale(phi[i], w.basis_vector(i)));
    cols.push_back(x);
  }
  Subspace wnew = Subspace::span_vecs(fld, e.ring.rows(), cols);
  Matrix p = projector_along(fld, wnew, w);
  return submodule_from_columns(e.ring, wnew, Projector{e.ring, p});
}

AlgebraRef ring_algebra(const RingSpec& r) {
  const std::size_t n = r.rows();
  std::vector<std::string> names;
  std::vector<Matrix> mats;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      names.push_back(unit_name(a, b, n));
      Matrix u(r.field, n, n);
      u.at(a, b) = Scalar::one(r.field);
      mats.push_back(u);
    }
  return algebra_from_matrices(r.field, names, mats);
}

RSubmodule transform_submodule(const Matrix& g, const RSubmodule& e) {
  const RingSpec& r = e.ring;
  auto gi = inverse(g);
  if (!gi) throw NotInvertible("transform requires an invertible matrix");
  Subspace w = submodule_columns(e);
  std::vector<Vec> cols;
  for (std::size_t i = 0; i < w.dim(); ++i) cols.push_back(g.apply(w.basis_vector(i)));
  Subspace wnew = Subspace::span_vecs(r.field, r.rows(), cols);
  Matrix p = g * e.certificate.p * *gi;
  return submodule_from_columns(r, wnew, make_projector(r, p));
}

Grading grading_from_projector(const Projector& p) {
  Projector pp = make_projector(p.ring, p.p);
  AlgebraRef l = ring_algebra(p.ring);
  return grading_from_euler(l, make_element(l, flatten(pp.p)));
}

Filtration3 flag_from_submodule(const RSubmodule& e) {
  const RingSpec& r = e.ring;
  const FieldSpec& f = r.field;
  const std::size_t n = r.rows();
  Grading d = grading_from_projector(e.certificate);
  Filtration3 flag = plus_filtration(d);

  // re-check the flag against its linear description
  Subspace w = submodule_columns(e);
  std::vector<Vec> qc_unit(n);
  for (std::size_t a = 0; a < n; ++a) {
    Vec u = vec_zero(f, n);
    u[a] = Scalar::one(f);
    qc_unit[a] = w.quotient_coords(u);
  }
  const std::size_t wq = w.quotient_dim();

  std::vector<Vec> f0_rows;  // X W inside W
  for (std::size_t i = 0; i < w.dim(); ++i) {
    Vec wb = w.basis_vector(i);
    for (std::size_t t = 0; t < wq; ++t) {
      Vec row = vec_zero(f, n * n);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) row[a * n + b] = qc_unit[a][t] * wb[b];
      f0_rows.push_back(row);
    }
  }
  std::vector<Vec> f1_rows = f0_rows;  // im X inside W, and X W = 0
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t t = 0; t < wq; ++t) {
      Vec row = vec_zero(f, n * n);
      for (std::size_t a = 0; a < n; ++a) row[a * n + c] = qc_unit[a][t];
      f1_rows.push_back(row);
    }
  for (std::size_t i = 0; i < w.dim(); ++i) {
    Vec wb = w.basis_vector(i);
    for (std::size_t a = 0; a < n; ++a) {
      Vec row = vec_zero(f, n * n);
      for (std::size_t b = 0; b < n; ++b) row[a * n + b] = wb[b];
      f1_rows.push_back(row);
    }
  }
  if (solve_conditions(f, n * n, f1_rows) != flag.f1 ||
      solve_conditions(f, n * n, f0_rows) != flag.f0)
    throw Error("flag equations disagree with the certificate grading");
  return flag;
}

GrassGroup grass_elementary_group(const RSubmodule& e, const RSubmodule& f,
                                  std::size_t cap) {
  const RingSpec& r = e.ring;
  if (r.field.kind == FieldKind::rational) throw InfiniteField();
  Projector p = pair_to_projector(e, f);
  Grading d = grading_from_projector(p);
  const std::size_t n = r.rows();

  std::vector<Matrix> gens;
  for (const Subspace* comp : {&d.g1, &d.gm1})
    for (std::size_t i = 0; i < comp->dim(); ++i)
      gens.push_back(Matrix::identity(r.field, n) +
                     unflatten(r.field, n, n, comp->basis_vector(i)));

  std::map<std::string, Matrix> seen;
  std::vector<Matrix> queue = {Matrix::identity(r.field, n)};
  seen[queue[0].str()] = queue[0];
  while (!queue.empty()) {
    Matrix cur = queue.back();
    queue.pop_back();
    for (const Matrix& g : gens) {
      Matrix next = g * cur;
      if (seen.emplace(next.str(), next).second) {
        if (seen.size() > cap) throw CapExceeded();
        queue.push_back(next);
      }
    }
  }
  std::vector<Matrix> elements;
  elements.reserve(seen.size());
  for (const auto& [key, m] : seen) elements.push_back(m);
  return GrassGroup{d.algebra, d, d.g1, d.gm1, elements};
}

bool stabilizes_submodule(const Matrix& g, const RSubmodule& e) {
  Subspace w = submodule_columns(e);
  std::vector<Vec> cols;
  for (std::size_t i = 0; i < w.dim(); ++i) cols.push_back(g.apply(w.basis_vector(i)));
  return Subspace::span_vecs(e.ring.field, e.ring.rows(), cols) == w;
}

std::vector<RSubmodule> all_submodules(const RingSpec& r, std::size_t cap) {
  const FieldSpec& f = r.field;
  if (f.kind == FieldKind::rational) throw InfiniteField();
  const std::size_t n = r.rows();

  std::map<std::string, Subspace> spaces;
  Subspace zero = Subspace::zero(f, n);
  spaces.emplace(zero.basis().str(), zero);
  std::vector<Subspace> queue = {zero};
  std::vector<Vec> pts = all_vectors(f, n);
  while (!queue.empty()) {
    Subspace s = queue.back();
    queue.pop_back();
    for (const Vec& v : pts) {
      if (vec_is_zero(v) || s.contains_vector(v)) continue;
      Subspace bigger = s.sum(Subspace::span_vecs(f, n, {v}));
      if (spaces.emplace(bigger.basis().str(), bigger).second) {
        if (spaces.size() > cap) throw CapExceeded();
        queue.push_back(bigger);
      }
    }
  }

  std::vector<RSubmodule> out;
  for (const auto& [key, w] : spaces) {
    // complete the column space to a basis for the certificate
    Subspace ext = w;
    std::vector<Vec> extra;
    for (std::size_t i = 0; i < n && ext.dim() < n; ++i) {
      Vec u = vec_zero(f, n);
      u[i] = Scalar::one(f);
      if (!ext.contains_vector(u)) {
        extra.push_back(u);
        ext = ext.sum(Subspace::span_vecs(f, n, {u}));
      }
    }
    Matrix p = projector_along(f, w, Subspace::span_vecs(f, n, extra));
    out.push_back(submodule_from_columns(r, w, Projector{r, p}));
  }
  std::sort(out.begin(), out.end(), [](const RSubmodule& a, const RSubmodule& b) {
    return a.span.basis().str() < b.span.basis().str();
  });
  return out;
}

IdempotentGeometry idempotent_geometry(const RingSpec& r) {
  if (r.m != 1) throw DimensionMismatch("idempotent geometry needs V = R");
  const FieldSpec& f = r.field;
  if (f.kind == FieldKind::rational) throw InfiniteField();

  std::vector<Matrix> idems;
  for (const Vec& v : all_vectors(f, r.k * r.k)) {
    Matrix x = unflatten(f, r.k, r.k, v);
    if (x * x == x) idems.push_back(x);
  }
  std::sort(idems.begin(), idems.end(),
            [](const Matrix& a, const Matrix& b) { return a.str() < b.str(); });
  return IdempotentGeometry{r, idems};
}

Matrix idempotent_multiply(const Matrix& e, const Matrix& f) {
  if (e.rows() != e.cols() || f.rows() != f.cols() || e.rows() != f.rows())
    throw DimensionMismatch();
  Matrix s = e.scaled(Scalar::from_int(e.field(), 2)) - Matrix::identity(e.field(), e.rows());
  return s * f * s;
}

ProjectiveLine projective_line(const RingSpec& r, std::size_t cap) {
  RingSpec doubled{r.field, r.k, 2};
  AlgebraRef l = ring_algebra(doubled);
  Matrix pm(r.field, doubled.rows(), doubled.rows());
  for (std::size_t i = 0; i < r.k; ++i) pm.at(i, i) = Scalar::one(r.field);
  Projector base = make_projector(doubled, pm);
  Grading d = grading_from_euler(l, make_element(l, flatten(pm)));
  Subspace e2 = subalgebra_generated(l, d.g1.sum(d.gm1));

  std::vector<Filtration3> orbit;
  if (r.field.kind != FieldKind::rational)
    orbit = orbit_enumerate(d, plus_filtration(d), cap);
  return ProjectiveLine{r, doubled, l, d, base, e2, orbit};
}

nlohmann::json ring_to_json(const RingSpec& r) {
  return nlohmann::json{
      {"field", field_to_json(r.field)}, {"k", r.k}, {"m", r.m}};
}

RingSpec ring_from_json(const nlohmann::json& j) {
  try {
    RingSpec r{field_from_json(j.at("field")), j.at("k").get<std::size_t>(),
               j.at("m").get<std::size_t>()};
    if (r.k < 1 || r.m < 1) throw SchemaViolation("k and m must be positive");
    return r;
  } catch (const nlohmann::json::exception& ex) {
    throw SchemaViolation(std::string("ring spec: ") + ex.what());
  }
}

nlohmann::json submodule_to_json(const RSubmodule& e) {
  nlohmann::json span = nlohmann::json::array();
  for (std::size_t i = 0; i < e.span.dim(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    Vec b = e.span.basis_vector(i);
    for (const Scalar& s : b) row.push_back(s.str());
    span.push_back(row);
  }
  return nlohmann::json{{"ring", ring_to_json(e.ring)},
                        {"span", span},
                        {"certificate", mat_to_json(e.certificate.p)}};
}

RSubmodule submodule_from_json(const nlohmann::json& j) {
  RingSpec r = [&] {
    try {
      return ring_from_json(j.at("ring"));
    } catch (const nlohmann::json::exception& ex) {
      throw SchemaViolation(std::string("submodule: ") + ex.what());
    }
  }();
  try {
    const auto& span = j.at("span");
    if (!span.is_array()) throw SchemaViolation("span must be an array");
    std::vector<Vec> rows;
    for (const auto& row : span) {
      if (!row.is_array() || row.size() != r.vdim())
        throw SchemaViolation("bad span row length");
      Vec v;
      for (const auto& s : row) {
        if (!s.is_string()) throw SchemaViolation("span entries are strings");
        v.push_back(Scalar::from_string(r.field, s.get<std::string>()));
      }
      rows.push_back(v);
    }
    Matrix cert = mat_from_json(r.field, j.at("certificate"), r.rows(), r.rows());
    return make_submodule(r, Subspace::span_vecs(r.field, r.vdim(), rows),
                          make_projector(r, cert));
  } catch (const nlohmann::json::exception& ex) {
    throw SchemaViolation(std::string("submodule: ") + ex.what());
  }
}

}  // namespace jpgeom
