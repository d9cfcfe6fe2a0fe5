#include "jpgeom/lie.hpp"

namespace jpgeom {

namespace {

Vec bracket_coords(const LieAlgebra& l, const Vec& x, const Vec& y) {
  Vec r = vec_zero(l.field(), l.dim());
  for (std::size_t i = 0; i < l.dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < l.dim(); ++j) {
      if (y[j].is_zero()) continue;
      Scalar c = x[i] * y[j];
      r = vec_add(r, vec_scale(c, l.structure(i, j)));
    }
  }
  return r;
}

}  // namespace

AlgebraRef LieAlgebra::create(const FieldSpec& f, std::vector<std::string> names,
                              std::vector<std::vector<Vec>> c) {
  std::size_t n = names.size();
  if (c.size() != n) throw InvalidStructureConstants("tensor size");
  for (auto& row : c) {
    if (row.size() != n) throw InvalidStructureConstants("tensor size");
    for (auto& v : row)
      if (v.size() != n) throw InvalidStructureConstants("tensor size");
  }
  auto* raw = new LieAlgebra();
  raw->field_ = f;
  raw->dim_ = n;
  raw->names_ = std::move(names);
  raw->c_ = std::move(c);
  AlgebraRef l(raw);

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!vec_is_zero(vec_add(l->c_[i][j], l->c_[j][i])))
        throw InvalidStructureConstants("antisymmetry fails at (" +
                                        std::to_string(i) + "," + std::to_string(j) + ")");
  // Jacobi on basis triples: [[ei,ej],ek] + [[ej,ek],ei] + [[ek,ei],ej] = 0
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec ei = vec_zero(f, n), ej = vec_zero(f, n), ek = vec_zero(f, n);
        ei[i] = Scalar::one(f);
        ej[j] = Scalar::one(f);
        ek[k] = Scalar::one(f);
        Vec sum = bracket_coords(*l, l->c_[i][j], ek);
        sum = vec_add(sum, bracket_coords(*l, l->c_[j][k], ei));
        sum = vec_add(sum, bracket_coords(*l, l->c_[k][i], ej));
        if (!vec_is_zero(sum))
          throw InvalidStructureConstants("Jacobi fails at (" + std::to_string(i) + "," +
                                          std::to_string(j) + "," + std::to_string(k) + ")");
      }
  return l;
}

bool LieAlgebra::same_as(const LieAlgebra& o) const {
  if (this == &o) return true;
  if (!(field_ == o.field_) || dim_ != o.dim_ || names_ != o.names_) return false;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      if (c_[i][j] != o.c_[i][j]) return false;
  return true;
}

Element make_element(const AlgebraRef& l, const Vec& coords) {
  if (coords.size() != l->dim()) throw DimensionMismatch();
  return Element{l, coords};
}

Element zero_element(const AlgebraRef& l) {
  return Element{l, vec_zero(l->field(), l->dim())};
}

Element basis_element(const AlgebraRef& l, std::size_t i) {
  Vec v = vec_zero(l->field(), l->dim());
  v[i] = Scalar::one(l->field());
  return Element{l, v};
}

void check_same_algebra(const Element& x, const Element& y) {
  if (!x.algebra->same_as(*y.algebra)) throw AlgebraMismatch();
}

Element elem_add(const Element& x, const Element& y) {
  check_same_algebra(x, y);
  return Element{x.algebra, vec_add(x.coords, y.coords)};
}

Element elem_sub(const Element& x, const Element& y) {
  check_same_algebra(x, y);
  return Element{x.algebra, vec_sub(x.coords, y.coords)};
}

Element elem_scale(const Scalar& c, const Element& x) {
  return Element{x.algebra, vec_scale(c, x.coords)};
}

bool elem_eq(const Element& x, const Element& y) {
  check_same_algebra(x, y);
  return x.coords == y.coords;
}

Element bracket(const Element& x, const Element& y) {
  check_same_algebra(x, y);
  return Element{x.algebra, bracket_coords(*x.algebra, x.coords, y.coords)};
}

Matrix ad(const Element& x) {
  const auto& l = *x.algebra;
  Matrix m(l.field(), l.dim(), l.dim());
  for (std::size_t j = 0; j < l.dim(); ++j) {
    Vec ej = vec_zero(l.field(), l.dim());
    ej[j] = Scalar::one(l.field());
    Vec col = bracket_coords(l, x.coords, ej);
    for (std::size_t i = 0; i < l.dim(); ++i) m.at(i, j) = col[i];
  }
  return m;
}

Subspace center(const AlgebraRef& l) {
  // joint kernel of all ad(e_i): stack the n matrices
  std::size_t n = l->dim();
  Matrix stacked(l->field(), 0, n);
  for (std::size_t i = 0; i < n; ++i)
    stacked = stacked.vstack(ad(basis_element(l, i)));
  return Subspace::span(kernel_basis(stacked));
}

Subspace subalgebra_generated(const AlgebraRef& l, const Subspace& gens) {
  Subspace cur = gens;
  for (std::size_t round = 0; round <= l->dim(); ++round) {
    std::vector<Vec> add;
    for (std::size_t i = 0; i < cur.dim(); ++i)
      for (std::size_t j = i + 1; j < cur.dim(); ++j) {
        Vec b = bracket_coords(*l, cur.basis_vector(i), cur.basis_vector(j));
        if (!cur.contains_vector(b)) add.push_back(b);
      }
    if (add.empty()) return cur;
    for (std::size_t i = 0; i < cur.dim(); ++i) add.push_back(cur.basis_vector(i));
    cur = Subspace::span_vecs(l->field(), l->dim(), add);
  }
  return cur;
}

bool is_automorphism(const AlgebraRef& l, const Matrix& g) {
  if (g.rows() != l->dim() || g.cols() != l->dim()) return false;
  if (!inverse(g).has_value()) return false;
  for (std::size_t i = 0; i < l->dim(); ++i)
    for (std::size_t j = i + 1; j < l->dim(); ++j) {
      Vec lhs = g.apply(l->structure(i, j));
      Vec rhs = bracket_coords(*l, g.col(i), g.col(j));
      if (lhs != rhs) return false;
    }
  return true;
}

bool is_derivation(const AlgebraRef& l, const Matrix& d) {
  if (d.rows() != l->dim() || d.cols() != l->dim()) return false;
  for (std::size_t i = 0; i < l->dim(); ++i)
    for (std::size_t j = i + 1; j < l->dim(); ++j) {
      Vec ei = vec_zero(l->field(), l->dim());
      ei[i] = Scalar::one(l->field());
      Vec ej = vec_zero(l->field(), l->dim());
      ej[j] = Scalar::one(l->field());
      Vec lhs = d.apply(l->structure(i, j));
      Vec rhs = vec_add(bracket_coords(*l, d.col(i), ej), bracket_coords(*l, ei, d.col(j)));
      if (lhs != rhs) return false;
    }
  return true;
}

Subspace derived_subalgebra(const AlgebraRef& l) {
  std::vector<Vec> brs;
  for (std::size_t i = 0; i < l->dim(); ++i)
    for (std::size_t j = i + 1; j < l->dim(); ++j) brs.push_back(l->structure(i, j));
  return Subspace::span_vecs(l->field(), l->dim(), brs);
}

bool is_perfect(const AlgebraRef& l) { return derived_subalgebra(l).dim() == l->dim(); }

AlgebraRef algebra_from_matrices(const FieldSpec& f, std::vector<std::string> names,
                                 const std::vector<Matrix>& mats) {
  std::size_t n = mats.size();
  if (n == 0) return LieAlgebra::create(f, {}, {});
  std::size_t sz = mats[0].rows();
  auto flat = [&](const Matrix& m) {
    Vec v;
    v.reserve(sz * sz);
    for (std::size_t i = 0; i < sz; ++i)
      for (std::size_t j = 0; j < sz; ++j) v.push_back(m.at(i, j));
    return v;
  };
  std::vector<Vec> rows;
  for (const auto& m : mats) rows.push_back(flat(m));
  Matrix basis = Matrix::from_rows(f, rows);
  auto [r, rank] = rref(basis);
  if (rank != n) throw InvalidStructureConstants("matrices not independent");
  Matrix bt = basis.transpose();
  std::vector<std::vector<Vec>> c(n, std::vector<Vec>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix comm = mats[i] * mats[j] - mats[j] * mats[i];
      auto coords = solve_vec(bt, flat(comm));
      if (!coords) throw InvalidStructureConstants("matrices not closed under commutator");
      c[i][j] = *coords;
    }
  return LieAlgebra::create(f, std::move(names), std::move(c));
}

Automorphism make_automorphism(const AlgebraRef& l, const Matrix& m) {
  return Automorphism{l, m, nullptr};
}

Automorphism compose(const Automorphism& a, const Automorphism& b) {
  if (!a.algebra->same_as(*b.algebra)) throw AlgebraMismatch();
  return Automorphism{a.algebra, a.matrix * b.matrix, nullptr};
}

Automorphism automorphism_inverse(const Automorphism& a) {
  auto inv = inverse(a.matrix);
  if (!inv) throw NotInvertible("automorphism matrix not invertible");
  return Automorphism{a.algebra, *inv, nullptr};
}

Element apply(const Automorphism& a, const Element& x) {
  if (!a.algebra->same_as(*x.algebra)) throw AlgebraMismatch();
  return Element{x.algebra, a.matrix.apply(x.coords)};
}

nlohmann::json field_to_json(const FieldSpec& f) {
  if (f.kind == FieldKind::rational) return {{"kind", "rational"}};
  return {{"kind", "prime"}, {"p", f.p}};
}

FieldSpec field_from_json(const nlohmann::json& j) {
  try {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "rational") return FieldSpec::rational();
    if (kind == "prime") return FieldSpec::prime(j.at("p").get<std::uint64_t>());
    throw SchemaViolation("unknown field kind: " + kind);
  } catch (const nlohmann::json::exception& e) {
    throw SchemaViolation(e.what());
  }
}

nlohmann::json algebra_to_json(const AlgebraRef& l) {
  nlohmann::json j;
  j["field"] = field_to_json(l->field());
  j["dim"] = l->dim();
  j["basis"] = l->basis_names();
  nlohmann::json brackets = nlohmann::json::array();
  for (std::size_t i = 0; i < l->dim(); ++i)
    for (std::size_t j = i + 1; j < l->dim(); ++j) {
      if (vec_is_zero(l->structure(i, j))) continue;
      nlohmann::json coords = nlohmann::json::array();
      for (const auto& s : l->structure(i, j)) coords.push_back(s.str());
      brackets.push_back(nlohmann::json::array({i, j, coords}));
    }
  j["brackets"] = brackets;
  return j;
}

AlgebraRef algebra_from_json(const nlohmann::json& j) {
  try {
    FieldSpec f = field_from_json(j.at("field"));
    std::size_t n = j.at("dim").get<std::size_t>();
    auto names = j.at("basis").get<std::vector<std::string>>();
    if (names.size() != n) throw SchemaViolation("basis size != dim");
    std::vector<std::vector<Vec>> c(n, std::vector<Vec>(n, vec_zero(f, n)));
    for (const auto& entry : j.at("brackets")) {
      std::size_t a = entry.at(0).get<std::size_t>();
      std::size_t b = entry.at(1).get<std::size_t>();
      if (a >= n || b >= n || a >= b) throw SchemaViolation("bad bracket indices");
      const auto& coords = entry.at(2);
      if (coords.size() != n) throw SchemaViolation("bad bracket coords");
      Vec v;
      for (const auto& s : coords) v.push_back(Scalar::from_string(f, s.get<std::string>()));
      c[a][b] = v;
      c[b][a] = vec_scale(-Scalar::one(f), v);
    }
    return LieAlgebra::create(f, names, c);
  } catch (const nlohmann::json::exception& e) {
    throw SchemaViolation(e.what());
  }
}

}  // namespace jpgeom
