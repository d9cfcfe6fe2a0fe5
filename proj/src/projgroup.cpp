#include "jpgeom/projgroup.hpp"

#include <map>
#include <sstream>

namespace jpgeom {

namespace {

const Subspace& component(const Grading& d, int i) {
  switch (i) {
    case 1:
      return d.g1;
    case 0:
      return d.g0;
    case -1:
      return d.gm1;
    default:
      throw DimensionMismatch();
  }
}

const Matrix& projection(const Grading& d, int i) {
  switch (i) {
    case 1:
      return d.pr1;
    case 0:
      return d.pr0;
    case -1:
      return d.prm1;
    default:
      throw DimensionMismatch();
  }
}

// exp(ad x) when ad(x)^3 = 0, which holds throughout the extreme components.
Matrix unipotent_exp(const AlgebraRef& l, const Vec& x) {
  Matrix a = ad(make_element(l, x));
  Matrix a2 = a * a;
  Scalar h = Scalar::from_int(l->field(), 2).inverse();
  return Matrix::identity(l->field(), l->dim()) + a + a2.scaled(h);
}

Matrix exp_any_sign(const Grading& d, const Element& x) {
  if (!d.g1.contains_vector(x.coords) && !d.gm1.contains_vector(x.coords))
    throw NotHomogeneous("element lies in no extreme component");
  return unipotent_exp(d.algebra, x.coords);
}

Vec component_coords(const Subspace& s, const Vec& ambient) {
  auto c = s.coordinates_of(ambient);
  if (!c) throw NotHomogeneous("vector outside component");
  return *c;
}

std::string flag_key(const Filtration3& f) { return f.f1.str() + "|" + f.f0.str(); }

std::vector<Automorphism> component_generators(const Grading& d) {
  const FieldSpec& fld = d.algebra->field();
  std::vector<Automorphism> gens;
  for (int sign : {1, -1}) {
    const Subspace& comp = component(d, sign);
    for (std::size_t b = 0; b < comp.dim(); ++b)
      for (std::uint64_t c = 1; c < fld.p; ++c) {
        Vec x = vec_scale(Scalar::from_int(fld, static_cast<long>(c)), comp.basis_vector(b));
        gens.push_back(Automorphism{d.algebra, unipotent_exp(d.algebra, x), nullptr});
      }
  }
  return gens;
}

}  // namespace

Automorphism exp_ad(const Grading& d, int sign, const Element& x) {
  if (sign != 1 && sign != -1) throw DimensionMismatch();
  if (!d.algebra->same_as(*x.algebra)) throw AlgebraMismatch();
  const Subspace& comp = component(d, sign);
  if (!comp.contains_vector(x.coords))
    throw NotHomogeneous("argument outside the required component");
  GroupWord w{d,
              {WordLetter{sign == 1 ? LetterKind::exp_plus : LetterKind::exp_minus,
                          component_coords(comp, x.coords), Scalar::one(d.algebra->field())}}};
  return Automorphism{d.algebra, unipotent_exp(d.algebra, x.coords),
                      std::make_shared<const GroupWord>(std::move(w))};
}

Automorphism evaluate_word(const GroupWord& w) {
  const AlgebraRef& l = w.grading.algebra;
  Matrix m = Matrix::identity(l->field(), l->dim());
  for (const auto& letter : w.letters) {
    switch (letter.kind) {
      case LetterKind::exp_plus:
        m = m * unipotent_exp(l, w.grading.g1.from_coordinates(letter.coords));
        break;
      case LetterKind::exp_minus:
        m = m * unipotent_exp(l, w.grading.gm1.from_coordinates(letter.coords));
        break;
      case LetterKind::dilation:
        m = m * dilation(w.grading, letter.scalar).matrix;
        break;
    }
  }
  return Automorphism{l, m, std::make_shared<const GroupWord>(w)};
}

std::string word_to_string(const GroupWord& w) {
  std::ostringstream out;
  bool first = true;
  for (const auto& letter : w.letters) {
    if (!first) out << ';';
    first = false;
    switch (letter.kind) {
      case LetterKind::exp_plus:
      case LetterKind::exp_minus:
        out << (letter.kind == LetterKind::exp_plus ? "x+:" : "x-:");
        for (std::size_t i = 0; i < letter.coords.size(); ++i) {
          if (i) out << ',';
          out << letter.coords[i].str();
        }
        break;
      case LetterKind::dilation:
        out << "dil:" << letter.scalar.str();
        break;
    }
  }
  return out.str();
}

GroupWord word_from_string(const Grading& d, const std::string& s) {
  const FieldSpec& fld = d.algebra->field();
  GroupWord w{d, {}};
  std::stringstream ss(s);
  std::string token;
  while (std::getline(ss, token, ';')) {
    if (token.empty()) continue;
    auto colon = token.find(':');
    if (colon == std::string::npos) throw ParseError("word letter needs ':': " + token);
    std::string kind = token.substr(0, colon);
    std::string payload = token.substr(colon + 1);
    if (kind == "dil") {
      w.letters.push_back(
          WordLetter{LetterKind::dilation, {}, Scalar::from_string(fld, payload)});
      continue;
    }
    if (kind != "x+" && kind != "x-") throw ParseError("unknown word letter: " + kind);
    Vec coords;
    std::stringstream ps(payload);
    std::string num;
    while (std::getline(ps, num, ',')) coords.push_back(Scalar::from_string(fld, num));
    std::size_t want = (kind == "x+" ? d.g1 : d.gm1).dim();
    if (coords.size() != want)
      throw ParseError("letter " + token + " needs " + std::to_string(want) + " coordinates");
    w.letters.push_back(WordLetter{
        kind == "x+" ? LetterKind::exp_plus : LetterKind::exp_minus, coords,
        Scalar::one(fld)});
  }
  return w;
}

Matrix block(const Automorphism& g, int i, int j, const Grading& d) {
  const Subspace& rows = component(d, i);
  const Subspace& cols = component(d, j);
  const Matrix& pri = projection(d, i);
  Matrix out(d.algebra->field(), rows.dim(), cols.dim());
  for (std::size_t c = 0; c < cols.dim(); ++c) {
    Vec img = component_coords(rows, pri.apply(g.matrix.apply(cols.basis_vector(c))));
    for (std::size_t r = 0; r < rows.dim(); ++r) out.at(r, c) = img[r];
  }
  return out;
}

Matrix denominator(const Automorphism& g, const Element& x, const Grading& d) {
  if (!d.g1.contains_vector(x.coords)) throw NotHomogeneous("chart point must lie in g1");
  Matrix em = unipotent_exp(d.algebra, vec_scale(-Scalar::one(d.algebra->field()), x.coords));
  auto gi = inverse(g.matrix);
  if (!gi) throw NotInvertible("automorphism matrix not invertible");
  return block(Automorphism{g.algebra, em * *gi, nullptr}, 1, 1, d);
}

Matrix codenominator(const Automorphism& g, const Element& x, const Grading& d) {
  if (!d.g1.contains_vector(x.coords)) throw NotHomogeneous("chart point must lie in g1");
  Matrix em = unipotent_exp(d.algebra, x.coords);
  return block(Automorphism{g.algebra, g.matrix * em, nullptr}, -1, -1, d);
}

Element nominator(const Automorphism& g, const Element& x, const Grading& d) {
  if (!d.g1.contains_vector(x.coords)) throw NotHomogeneous("chart point must lie in g1");
  Matrix em = unipotent_exp(d.algebra, vec_scale(-Scalar::one(d.algebra->field()), x.coords));
  auto gi = inverse(g.matrix);
  if (!gi) throw NotInvertible("automorphism matrix not invertible");
  return make_element(d.algebra, d.pr1.apply((em * *gi).apply(d.euler.coords)));
}

Element fractional_action(const Automorphism& g, const Element& x, const Grading& d) {
  Matrix dm = denominator(g, x, d);
  auto dmi = inverse(dm);
  if (!dmi) throw NotInChart("singular denominator");
  if (!inverse(codenominator(g, x, d))) throw NotInChart("singular co-denominator");
  Vec n = component_coords(d.g1, nominator(g, x, d).coords);
  return make_element(d.algebra, d.g1.from_coordinates(dmi->apply(n)));
}

StabilizerClass stabilizer_class(const Automorphism& g, const Grading& d) {
  auto fp = plus_filtration(d);
  auto fm = minus_filtration(d);
  bool fix_p = filtration_eq(apply_to_filtration(g, fp), fp);
  bool fix_m = filtration_eq(apply_to_filtration(g, fm), fm);
  if (fix_p && fix_m) return StabilizerClass::h_class;
  if (fix_p) return StabilizerClass::p_plus;
  if (fix_m) return StabilizerClass::p_minus;
  return StabilizerClass::none;
}

OmegaParts omega_decompose(const Automorphism& g, const Grading& d) {
  auto fp = plus_filtration(d);
  auto fm = minus_filtration(d);
  auto gfm = apply_to_filtration(g, fm);
  if (!is_transversal(gfm, fp)) throw NotInOmega("image of the minus flag leaves the chart");
  Element v = transversal_coordinates(fp, fm, gfm);
  Automorphism p = compose(exp_ad(d, 1, elem_scale(-Scalar::one(d.algebra->field()), v)), g);
  auto pif = apply_to_filtration(automorphism_inverse(p), fp);
  Element u = transversal_coordinates(fm, fp, pif);
  Element w = elem_scale(-Scalar::one(d.algebra->field()), u);
  Automorphism h = compose(p, exp_ad(d, -1, u));
  if (stabilizer_class(h, d) != StabilizerClass::h_class)
    throw NotInOmega("residual factor does not preserve the grading");
  return OmegaParts{v, h, w};
}

Matrix canonical_kernel(const Filtration3& f, const Filtration3& e) {
  if (!f.algebra->same_as(*e.algebra)) throw AlgebraMismatch();
  Matrix k(f.algebra->field(), f.f0.quotient_dim(), e.f1.dim());
  for (std::size_t j = 0; j < e.f1.dim(); ++j) {
    Vec q = f.f0.quotient_coords(e.f1.basis_vector(j));
    for (std::size_t r = 0; r < q.size(); ++r) k.at(r, j) = q[r];
  }
  return k;
}

Vec quadratic_eval(const QuadraticMap& q, const Vec& v) {
  if (v.size() != q.constant.size()) throw DimensionMismatch();
  Vec out = vec_add(q.constant, q.linear.apply(v));
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) {
      Scalar c = v[i] * v[j];
      if (!c.is_zero()) out = vec_add(out, vec_scale(c, q.quad[i][j]));
    }
  return out;
}

QuadraticMap vector_field_chart(const Element& y, const Grading& d) {
  if (!d.algebra->same_as(*y.algebra)) throw AlgebraMismatch();
  const AlgebraRef& l = d.algebra;
  const FieldSpec& fld = l->field();
  std::size_t m = d.g1.dim();
  auto g1c = [&](const Vec& ambient) { return component_coords(d.g1, d.pr1.apply(ambient)); };

  Vec constant = g1c(y.coords);
  Matrix linear(fld, m, m);
  for (std::size_t j = 0; j < m; ++j) {
    Vec col = g1c(bracket(y, make_element(l, d.g1.basis_vector(j))).coords);
    for (std::size_t i = 0; i < m; ++i) linear.at(i, j) = col[i];
  }
  Scalar quarter = Scalar::from_int(fld, 4).inverse();
  std::vector<std::vector<Vec>> quad(m, std::vector<Vec>(m, vec_zero(fld, m)));
  for (std::size_t i = 0; i < m; ++i) {
    Element bi = make_element(l, d.g1.basis_vector(i));
    for (std::size_t j = i; j < m; ++j) {
      Element bj = make_element(l, d.g1.basis_vector(j));
      Vec s = vec_add(bracket(bi, bracket(bj, y)).coords, bracket(bj, bracket(bi, y)).coords);
      quad[i][j] = vec_scale(quarter, g1c(s));
      quad[j][i] = quad[i][j];
    }
  }
  return QuadraticMap{d, constant, linear, quad};
}

QuadraticMap poly_bracket(const QuadraticMap& p, const QuadraticMap& q) {
  if (!grading_eq(p.grading, q.grading)) throw AlgebraMismatch();
  const FieldSpec& fld = p.grading.algebra->field();
  std::size_t m = p.constant.size();

  // bilinear tensor applied to (basis i, arbitrary u)
  auto bil = [&](const std::vector<std::vector<Vec>>& t, std::size_t i, const Vec& u) {
    Vec out = vec_zero(fld, m);
    for (std::size_t k = 0; k < m; ++k)
      if (!u[k].is_zero()) out = vec_add(out, vec_scale(u[k], t[i][k]));
    return out;
  };

  Vec constant = vec_sub(p.linear.apply(q.constant), q.linear.apply(p.constant));

  Matrix linear(fld, m, m);
  for (std::size_t j = 0; j < m; ++j) {
    Vec col = vec_sub(p.linear.apply(q.linear.col(j)), q.linear.apply(p.linear.col(j)));
    col = vec_add(col, vec_scale(Scalar::from_int(fld, 2), bil(p.quad, j, q.constant)));
    col = vec_sub(col, vec_scale(Scalar::from_int(fld, 2), bil(q.quad, j, p.constant)));
    for (std::size_t i = 0; i < m; ++i) linear.at(i, j) = col[i];
  }

  std::vector<std::vector<Vec>> quad(m, std::vector<Vec>(m, vec_zero(fld, m)));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      Vec t = p.linear.apply(q.quad[i][j]);
      t = vec_sub(t, q.linear.apply(p.quad[i][j]));
      Vec mixed = vec_add(bil(p.quad, i, q.linear.col(j)), bil(p.quad, j, q.linear.col(i)));
      mixed = vec_sub(mixed, vec_add(bil(q.quad, i, p.linear.col(j)), bil(q.quad, j, p.linear.col(i))));
      t = vec_add(t, mixed);
      quad[i][j] = t;
      quad[j][i] = t;
    }

  // cubic coefficients must cancel identically
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j)
      for (std::size_t k = j; k < m; ++k) {
        Vec c = vec_zero(fld, m);
        std::size_t idx[3] = {i, j, k};
        std::size_t perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                   {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        for (auto& pm : perms) {
          std::size_t a = idx[pm[0]], b = idx[pm[1]], cc = idx[pm[2]];
          c = vec_add(c, bil(p.quad, a, q.quad[b][cc]));
          c = vec_sub(c, bil(q.quad, a, p.quad[b][cc]));
        }
        if (!vec_is_zero(c)) throw Error("poly_bracket: cubic term does not cancel");
      }

  return QuadraticMap{p.grading, constant, linear, quad};
}

bool cocycle_check(const Automorphism& g1, const Automorphism& g2, const Element& x,
                   const Grading& d) {
  Element y = fractional_action(g2, x, d);
  Automorphism g12 = compose(g1, g2);
  fractional_action(g12, x, d);
  fractional_action(g1, y, d);
  bool den_ok = denominator(g12, x, d) == denominator(g2, x, d) * denominator(g1, y, d);
  bool cod_ok =
      codenominator(g12, x, d) == codenominator(g1, y, d) * codenominator(g2, x, d);
  return den_ok && cod_ok;
}

std::pair<Matrix, Matrix> structure_pair(const Automorphism& g, const Element& x,
                                         const Grading& d) {
  auto dmi = inverse(denominator(g, x, d));
  if (!dmi) throw NotInChart("singular denominator");
  Matrix c = codenominator(g, x, d);
  if (!inverse(c)) throw NotInChart("singular co-denominator");
  return {*dmi, c};
}

std::vector<Filtration3> orbit_enumerate(const Grading& d, const Filtration3& seed,
                                         std::size_t cap) {
  if (d.algebra->field().kind == FieldKind::rational)
    throw InfiniteField("orbit enumeration needs a finite field");
  if (!d.algebra->same_as(*seed.algebra)) throw AlgebraMismatch();
  auto gens = component_generators(d);
  std::map<std::string, Filtration3> seen;
  std::vector<const Filtration3*> queue;
  seen.emplace(flag_key(seed), seed);
  queue.push_back(&seen.at(flag_key(seed)));
  while (!queue.empty()) {
    const Filtration3 cur = *queue.back();
    queue.pop_back();
    for (const auto& g : gens) {
      Filtration3 nf = apply_to_filtration(g, cur);
      auto [it, inserted] = seen.emplace(flag_key(nf), nf);
      if (inserted) {
        if (seen.size() > cap) throw CapExceeded("orbit larger than cap");
        queue.push_back(&it->second);
      }
    }
  }
  std::vector<Filtration3> out;
  out.reserve(seen.size());
  for (auto& [k, f] : seen) out.push_back(std::move(f));
  return out;
}

std::vector<Grading> grading_orbit(const Grading& d, std::size_t cap) {
  if (d.algebra->field().kind == FieldKind::rational)
    throw InfiniteField("orbit enumeration needs a finite field");
  auto gens = component_generators(d);
  std::map<std::string, Vec> seen;
  std::vector<Vec> queue;
  seen.emplace(vec_str(d.euler.coords), d.euler.coords);
  queue.push_back(d.euler.coords);
  while (!queue.empty()) {
    Vec cur = std::move(queue.back());
    queue.pop_back();
    for (const auto& g : gens) {
      Vec ne = g.matrix.apply(cur);
      if (seen.emplace(vec_str(ne), ne).second) {
        if (seen.size() > cap) throw CapExceeded("orbit larger than cap");
        queue.push_back(ne);
      }
    }
  }
  std::vector<Grading> out;
  out.reserve(seen.size());
  for (const auto& [k, e] : seen)
    out.push_back(grading_from_euler(d.algebra, make_element(d.algebra, e)));
  return out;
}

GroupWord induced_word_map(const Matrix& phi, const Grading& target_d, const GroupWord& w) {
  const AlgebraRef& src = w.grading.algebra;
  const AlgebraRef& tgt = target_d.algebra;
  if (phi.rows() != tgt->dim() || phi.cols() != src->dim()) throw DimensionMismatch();
  for (std::size_t i = 0; i < src->dim(); ++i)
    for (std::size_t j = i + 1; j < src->dim(); ++j) {
      Vec lhs = phi.apply(src->structure(i, j));
      Vec rhs = bracket(make_element(tgt, phi.col(i)), make_element(tgt, phi.col(j))).coords;
      if (lhs != rhs) throw NotGraded("not a Lie algebra homomorphism");
    }
  if (rref(phi).second != tgt->dim()) throw NotSurjective("morphism is not onto");
  for (std::size_t b = 0; b < w.grading.g1.dim(); ++b)
    if (!target_d.g1.contains_vector(phi.apply(w.grading.g1.basis_vector(b))))
      throw NotGraded("morphism does not respect the plus component");
  for (std::size_t b = 0; b < w.grading.gm1.dim(); ++b)
    if (!target_d.gm1.contains_vector(phi.apply(w.grading.gm1.basis_vector(b))))
      throw NotGraded("morphism does not respect the minus component");

  GroupWord out{target_d, {}};
  for (const auto& letter : w.letters) {
    switch (letter.kind) {
      case LetterKind::exp_plus: {
        Vec img = phi.apply(w.grading.g1.from_coordinates(letter.coords));
        out.letters.push_back(WordLetter{LetterKind::exp_plus,
                                         component_coords(target_d.g1, img), letter.scalar});
        break;
      }
      case LetterKind::exp_minus: {
        Vec img = phi.apply(w.grading.gm1.from_coordinates(letter.coords));
        out.letters.push_back(WordLetter{LetterKind::exp_minus,
                                         component_coords(target_d.gm1, img), letter.scalar});
        break;
      }
      case LetterKind::dilation:
        out.letters.push_back(letter);
        break;
    }
  }
  return out;
}

InnerRestriction restrict_to_inner(const AlgebraRef& l, const Grading& d) {
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < d.g1.dim(); ++i) gens.push_back(d.g1.basis_vector(i));
  for (std::size_t i = 0; i < d.gm1.dim(); ++i) gens.push_back(d.gm1.basis_vector(i));
  for (std::size_t i = 0; i < d.g1.dim(); ++i)
    for (std::size_t j = 0; j < d.gm1.dim(); ++j)
      gens.push_back(bracket(make_element(l, d.g1.basis_vector(i)),
                             make_element(l, d.gm1.basis_vector(j)))
                         .coords);
  gens.push_back(d.euler.coords);
  Subspace s = subalgebra_generated(l, Subspace::span_vecs(l->field(), l->dim(), gens));

  std::size_t k = s.dim();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) names.push_back("s" + std::to_string(i));
  std::vector<std::vector<Vec>> c(k, std::vector<Vec>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      auto br = bracket(make_element(l, s.basis_vector(i)), make_element(l, s.basis_vector(j)));
      auto coords = s.coordinates_of(br.coords);
      if (!coords) throw InvalidStructureConstants("generated span not closed");
      c[i][j] = *coords;
    }
  AlgebraRef sub = LieAlgebra::create(l->field(), std::move(names), std::move(c));
  Matrix embed = s.basis().transpose();
  auto ec = s.coordinates_of(d.euler.coords);
  return InnerRestriction{sub, embed, make_element(sub, *ec)};
}

Automorphism restrict_automorphism(const InnerRestriction& r, const Automorphism& g) {
  std::size_t k = r.sub->dim();
  Matrix m(g.algebra->field(), k, k);
  for (std::size_t j = 0; j < k; ++j) {
    Vec img = g.matrix.apply(r.embed.col(j));
    auto coords = solve_vec(r.embed, img);
    if (!coords) throw Error("automorphism does not preserve the inner subalgebra");
    for (std::size_t i = 0; i < k; ++i) m.at(i, j) = (*coords)[i];
  }
  return Automorphism{r.sub, m, nullptr};
}

Matrix matrix_coefficient_q(const Element& x, const Automorphism& g, const Element& y,
                            const Automorphism& h, const Grading& d) {
  Matrix m = exp_any_sign(d, x) * g.matrix * exp_any_sign(d, y) * h.matrix;
  return block(Automorphism{d.algebra, m, nullptr}, 1, 1, d);
}

Element matrix_coefficient_p(const Element& x, const Automorphism& g, const Element& y,
                             const Automorphism& h, const Grading& d) {
  Matrix m = exp_any_sign(d, x) * g.matrix * exp_any_sign(d, y) * h.matrix;
  return make_element(d.algebra, d.pr1.apply(m.apply(d.euler.coords)));
}

}  // namespace jpgeom
