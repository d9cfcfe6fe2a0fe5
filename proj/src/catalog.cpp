#include "jpgeom/catalog.hpp"

#include <utility>

#include "jpgeom/errors.hpp"

namespace jpgeom {
namespace {

Vec flatten(const Matrix& m) {
  Vec v;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m.at(r, c));
  return v;
}

// Coordinates of target in the (independent) matrix basis.
Vec coords_in(const FieldSpec& f, const std::vector<Matrix>& basis, const Matrix& target) {
  Matrix a(f, target.rows() * target.cols(), basis.size());
  for (std::size_t t = 0; t < basis.size(); ++t) {
    Vec col = flatten(basis[t]);
    for (std::size_t r = 0; r < col.size(); ++r) a.at(r, t) = col[r];
  }
  auto x = solve_vec(a, flatten(target));
  if (!x) throw Error("coords_in: target is outside the span of the basis");
  return *x;
}

std::string unit_name(std::size_t i, std::size_t j, std::size_t n) {
  std::string sep = n > 9 ? "_" : "";
  return "e" + std::to_string(i + 1) + sep + std::to_string(j + 1);
}

TripleTensor zero_tensor(const FieldSpec& f, std::size_t outer, std::size_t inner) {
  return TripleTensor(
      outer, std::vector<std::vector<Vec>>(inner, std::vector<Vec>(outer, vec_zero(f, outer))));
}

Matrix matrix_from_json(const FieldSpec& f, const nlohmann::json& j, std::size_t rows,
                        std::size_t cols) {
  if (!j.is_array() || j.size() != rows) throw SchemaViolation("bad matrix row count");
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto& row = j[r];
    if (!row.is_array() || row.size() != cols) throw SchemaViolation("bad matrix row length");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!row[c].is_string()) throw SchemaViolation("matrix entries are strings");
      m.at(r, c) = Scalar::from_string(f, row[c].get<std::string>());
    }
  }
  return m;
}

nlohmann::json matrix_to_json(const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

CatalogEntry make_sl_block(std::size_t n, std::size_t p, const FieldSpec& field) {
  if (p < 1 || p >= n) throw DimensionMismatch("block split needs 1 <= p < n");
  const bool rational = field.kind == FieldKind::rational;

  auto unit = [&](std::size_t i, std::size_t j) {
    Matrix m(field, n, n);
    m.at(i, j) = Scalar::one(field);
    return m;
  };
  std::vector<std::string> names;
  std::vector<Matrix> mats;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (rational && i == j) continue;
      names.push_back(unit_name(i, j, n));
      mats.push_back(unit(i, j));
    }
  if (rational)
    for (std::size_t i = 0; i + 1 < n; ++i) {
      names.push_back("h" + std::to_string(i + 1));
      mats.push_back(unit(i, i) - unit(i + 1, i + 1));
    }
  AlgebraRef l = algebra_from_matrices(field, names, mats);

  Matrix e(field, n, n);
  if (rational) {
    Scalar inv_n = Scalar::from_int(field, static_cast<long>(n)).inverse();
    Scalar top = Scalar::from_int(field, static_cast<long>(n - p)) * inv_n;
    Scalar bottom = -(Scalar::from_int(field, static_cast<long>(p)) * inv_n);
    for (std::size_t i = 0; i < n; ++i) e.at(i, i) = i < p ? top : bottom;
  } else {
    for (std::size_t i = 0; i < p; ++i) e.at(i, i) = Scalar::one(field);
  }
  Grading d = grading_from_euler(l, make_element(l, coords_in(field, mats, e)));
  JordanPair pair = pair_from_grading(l, d);

  Matrix theta(field, l->dim(), l->dim());
  for (std::size_t t = 0; t < mats.size(); ++t) {
    Vec col = coords_in(field, mats, mats[t].transpose().scaled(-Scalar::one(field)));
    for (std::size_t r = 0; r < col.size(); ++r) theta.at(r, t) = col[r];
  }
  Involution inv = make_involution(l, d, theta);

  nlohmann::json params{{"n", n},
                        {"p", p},
                        {"ambient", rational ? "sl" : "gl"},
                        {"euler_style", rational ? "traceless" : "projector"}};
  return CatalogEntry{"sl" + std::to_string(n) + "_block" + std::to_string(p),
                      std::move(params),
                      l,
                      d,
                      std::move(pair),
                      std::move(inv)};
}

JordanPair make_rectangular_pair(std::size_t p, std::size_t q, const FieldSpec& field,
                                 const std::string& convention) {
  if (p < 1 || q < 1) throw DimensionMismatch("rectangular pair needs p, q >= 1");
  if (convention != "eq3.1" && convention != "sec8.5")
    throw SchemaViolation("convention must be eq3.1 or sec8.5");
  const Scalar sign = convention == "sec8.5" ? Scalar::one(field) : -Scalar::one(field);
  const std::size_t m = p * q;

  auto basis = [&](std::size_t rows, std::size_t cols) {
    std::vector<Matrix> out;
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) {
        Matrix u(field, rows, cols);
        u.at(r, c) = Scalar::one(field);
        out.push_back(u);
      }
    return out;
  };
  std::vector<Matrix> xs = basis(p, q), ys = basis(q, p);

  TripleTensor tplus = zero_tensor(field, m, m), tminus = zero_tensor(field, m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        tplus[i][j][k] = flatten((xs[i] * ys[j] * xs[k] + xs[k] * ys[j] * xs[i]).scaled(sign));
        tminus[i][j][k] = flatten((ys[i] * xs[j] * ys[k] + ys[k] * xs[j] * ys[i]).scaled(sign));
      }
  return JordanPair{field, m, m, std::move(tplus), std::move(tminus), convention};
}

CatalogEntry make_trivial_pair(std::size_t np, std::size_t nm, const FieldSpec& field) {
  JordanPair pair{field, np, nm, zero_tensor(field, np, nm), zero_tensor(field, nm, np),
                  "eq3.1"};
  TkkResult t = tkk(pair);
  nlohmann::json params{{"n_plus", np}, {"n_minus", nm}};
  return CatalogEntry{"trivial_" + std::to_string(np) + std::to_string(nm),
                      std::move(params),
                      t.algebra,
                      t.grading,
                      std::move(pair),
                      std::nullopt};
}

std::vector<std::string> catalog_names() {
  return {"rect_12", "sl2", "sl3_12", "sl3_21", "trivial_11", "trivial_21"};
}

CatalogEntry catalog_entry(const std::string& name, const FieldSpec& field) {
  auto build = [&]() -> CatalogEntry {
    if (name == "sl2") return make_sl_block(2, 1, field);
    if (name == "sl3_12") return make_sl_block(3, 1, field);
    if (name == "sl3_21") return make_sl_block(3, 2, field);
    if (name == "trivial_11") return make_trivial_pair(1, 1, field);
    if (name == "trivial_21") return make_trivial_pair(2, 1, field);
    if (name == "rect_12") {
      JordanPair pair = make_rectangular_pair(1, 2, field, "sec8.5");
      TkkResult t = tkk(pair);
      nlohmann::json params{{"p", 1}, {"q", 2}, {"convention", "sec8.5"}};
      return CatalogEntry{"rect_12", std::move(params), t.algebra, t.grading,
                          std::move(pair),  std::nullopt};
    }
    throw UnknownEntry("no catalog entry named " + name);
  };
  CatalogEntry e = build();
  e.name = name;
  return e;
}

nlohmann::json entry_to_json(const CatalogEntry& e) {
  nlohmann::json j;
  j["name"] = e.name;
  j["params"] = e.params;
  j["algebra"] = algebra_to_json(e.algebra);
  nlohmann::json euler = nlohmann::json::array();
  for (const Scalar& s : e.grading.euler.coords) euler.push_back(s.str());
  j["euler"] = euler;
  j["pair"] = pair_to_json(e.pair);
  if (e.involution) j["involution"] = matrix_to_json(e.involution->theta);
  return j;
}

CatalogEntry entry_from_json(const nlohmann::json& j) {
  try {
    std::string name = j.at("name").get<std::string>();
    nlohmann::json params = j.value("params", nlohmann::json::object());
    AlgebraRef l = algebra_from_json(j.at("algebra"));
    const FieldSpec f = l->field();

    const auto& ej = j.at("euler");
    if (!ej.is_array() || ej.size() != l->dim())
      throw SchemaViolation("euler coordinate count does not match the algebra");
    Vec coords;
    for (const auto& s : ej) {
      if (!s.is_string()) throw SchemaViolation("euler coordinates are strings");
      coords.push_back(Scalar::from_string(f, s.get<std::string>()));
    }
    Grading d = grading_from_euler(l, make_element(l, coords));

    JordanPair pair = pair_from_json(j.at("pair"));
    if (!(pair.field == f)) throw FieldMismatch("pair field differs from the algebra field");
    if (pair.np != d.g1.dim() || pair.nm != d.gm1.dim())
      throw DimensionMismatch("pair dims do not match the grading");
    if (!check_pair(pair)) throw InvalidPair("pair identities fail");

    std::optional<Involution> inv;
    if (j.contains("involution") && !j.at("involution").is_null())
      inv = make_involution(l, d, matrix_from_json(f, j.at("involution"), l->dim(), l->dim()));

    return CatalogEntry{std::move(name), std::move(params), l, std::move(d),
                        std::move(pair), std::move(inv)};
  } catch (const nlohmann::json::exception& ex) {
    throw SchemaViolation(std::string("catalog entry: ") + ex.what());
  }
}

}  // namespace jpgeom
