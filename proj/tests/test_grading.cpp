#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "jpgeom/grading.hpp"

using namespace jpgeom;

namespace {

Vec sv(const FieldSpec& f, std::initializer_list<long> xs) {
  Vec v;
  for (long x : xs) v.push_back(Scalar::from_int(f, x));
  return v;
}

// Basis order (e, h, f).
AlgebraRef make_sl2(const FieldSpec& f) {
  auto s = [&](long v) { return Scalar::from_int(f, v); };
  auto mk = [&](long a, long b, long c) { return Vec{s(a), s(b), s(c)}; };
  std::vector<std::vector<Vec>> t(3, std::vector<Vec>(3, mk(0, 0, 0)));
  t[0][1] = mk(-2, 0, 0);
  t[1][0] = mk(2, 0, 0);
  t[0][2] = mk(0, 1, 0);
  t[2][0] = mk(0, -1, 0);
  t[1][2] = mk(0, 0, -2);
  t[2][1] = mk(0, 0, 2);
  return LieAlgebra::create(f, {"e", "h", "f"}, t);
}

Element half_h(const AlgebraRef& l) {
  Scalar h2 = Scalar::from_int(l->field(), 2).inverse();
  return make_element(l, Vec{Scalar::zero(l->field()), h2, Scalar::zero(l->field())});
}

Matrix expad(const AlgebraRef& l, const Vec& x) {
  Matrix a = ad(make_element(l, x));
  Matrix sum = Matrix::identity(l->field(), l->dim());
  Matrix term = sum;
  for (long k = 1; k <= static_cast<long>(l->dim()) + 1; ++k) {
    term = (term * a).scaled(Scalar::from_int(l->field(), k).inverse());
    if (term.is_zero()) break;
    sum = sum + term;
  }
  return sum;
}

std::vector<Grading> all_gradings(const AlgebraRef& l) {
  std::vector<Grading> out;
  for (const auto& v : all_vectors(l->field(), l->dim())) {
    try {
      out.push_back(grading_from_euler(l, make_element(l, v)));
    } catch (const NotTripotent&) {
    }
  }
  return out;
}

}  // namespace

TEST_CASE("grading_from_euler") {
  auto l = make_sl2(FieldSpec::rational());
  auto g = grading_from_euler(l, half_h(l));

  CHECK(g.g1.dim() == 1);
  CHECK(g.g0.dim() == 1);
  CHECK(g.gm1.dim() == 1);
  CHECK(g.g1.contains_vector(sv(l->field(), {1, 0, 0})));
  CHECK(g.gm1.contains_vector(sv(l->field(), {0, 0, 1})));

  // projection algebra
  Matrix id = Matrix::identity(l->field(), 3);
  CHECK(g.pr1 + g.pr0 + g.prm1 == id);
  CHECK(g.pr1 * g.pr1 == g.pr1);
  CHECK(g.pr0 * g.pr0 == g.pr0);
  CHECK(g.prm1 * g.prm1 == g.prm1);
  CHECK((g.pr1 * g.pr0).is_zero());
  CHECK((g.pr1 * g.prm1).is_zero());
  CHECK((g.pr0 * g.prm1).is_zero());

  // degenerate grading: E = 0
  auto g0 = grading_from_euler(l, zero_element(l));
  CHECK(g0.g0.dim() == 3);
  CHECK(g0.g1.dim() == 0);

  // ad(h) has eigenvalues +-2
  CHECK_THROWS_AS(grading_from_euler(l, make_element(l, sv(l->field(), {0, 1, 0}))),
                  NotTripotent);
}

TEST_CASE("plus and minus filtrations") {
  auto l = make_sl2(FieldSpec::rational());
  auto g = grading_from_euler(l, half_h(l));

  auto fp = plus_filtration(g);
  CHECK(fp.f1 == Subspace::span_vecs(l->field(), 3, {sv(l->field(), {1, 0, 0})}));
  CHECK(fp.f0 == Subspace::span_vecs(l->field(), 3,
                                     {sv(l->field(), {1, 0, 0}), sv(l->field(), {0, 1, 0})}));
  CHECK(elem_eq(fp.witness, g.euler));

  // minus-flag of D is the plus-flag of -D, witness included
  auto fm = minus_filtration(g);
  auto gneg = grading_from_euler(l, elem_scale(-Scalar::one(l->field()), g.euler));
  CHECK(filtration_eq(fm, plus_filtration(gneg)));
  CHECK(elem_eq(fm.witness, gneg.euler));

  // witness invariant holds for every flag produced here
  for (const auto& f : {fp, fm}) {
    auto re = grading_from_euler(l, f.witness);
    CHECK(filtration_eq(plus_filtration(re), f));
  }

  auto g0 = grading_from_euler(l, zero_element(l));
  CHECK(plus_filtration(g0).f1.dim() == 0);
  CHECK(plus_filtration(g0).f0.dim() == 3);
}

TEST_CASE("is_filtration") {
  auto q = FieldSpec::rational();
  auto l = make_sl2(q);
  auto span = [&](std::vector<Vec> vs) { return Subspace::span_vecs(q, 3, vs); };

  CHECK(is_filtration(l, Subspace::zero(q, 3), Subspace::full(q, 3)));
  CHECK(is_filtration(l, span({sv(q, {1, 0, 0})}), span({sv(q, {1, 0, 0}), sv(q, {0, 1, 0})})));
  // span(h) is not abelian against the ambient bracket conditions
  CHECK_FALSE(is_filtration(l, span({sv(q, {0, 1, 0})}), Subspace::full(q, 3)));
  // containment violated
  CHECK_FALSE(is_filtration(l, span({sv(q, {0, 0, 1})}), span({sv(q, {1, 0, 0})})));
}

TEST_CASE("transversality") {
  auto l = make_sl2(FieldSpec::rational());
  auto g = grading_from_euler(l, half_h(l));
  auto fp = plus_filtration(g);
  auto fm = minus_filtration(g);

  CHECK(is_transversal(fm, fp));
  CHECK(is_transversal(fp, fm));
  CHECK_FALSE(is_transversal(fp, fp));

  SUBCASE("adapted grading round trip") {
    auto back = grading_from_transversal(fm, fp);
    CHECK(grading_eq(back, g));
  }

  SUBCASE("translated minus flag") {
    // exp(ad e) moves f- off itself; the adapted Euler element is h/2 - e
    auto ge = make_automorphism(l, expad(l, sv(l->field(), {1, 0, 0})));
    auto e2 = apply_to_filtration(ge, fm);
    auto d = grading_from_transversal(e2, fp);
    Vec expect = sv(l->field(), {-1, 0, 0});
    expect[1] = Scalar::from_int(l->field(), 2).inverse();
    CHECK(d.euler.coords == expect);
    CHECK(filtration_eq(plus_filtration(d), fp));
    CHECK(filtration_eq(minus_filtration(d), e2));

    // coordinates recover the translation
    auto x = transversal_coordinates(fp, fm, e2);
    CHECK(x.coords == sv(l->field(), {1, 0, 0}));
    CHECK(elem_eq(transversal_coordinates(fp, fm, fm), zero_element(l)));
  }

  CHECK_THROWS_AS(grading_from_transversal(fp, fp), NotTransversal);
}

TEST_CASE("exhaustive flag geometry over F5") {
  auto f5 = FieldSpec::prime(5);
  auto l = make_sl2(f5);
  auto gradings = all_gradings(l);
  CHECK(gradings.size() == 31);

  // distinct plus-flags: 6 proper ones and the degenerate (0, g)
  std::map<std::string, Filtration3> flags;
  for (const auto& g : gradings) {
    auto f = plus_filtration(g);
    flags.emplace(f.f1.str() + "|" + f.f0.str(), f);
  }
  CHECK(flags.size() == 7);

  std::size_t proper = 0;
  for (const auto& [k, f] : flags)
    if (f.f1.dim() > 0) ++proper;
  CHECK(proper == 6);

  // every flag satisfies the five conditions, and each witness reproduces it
  for (const auto& [k, f] : flags) {
    CHECK(is_filtration(l, f.f1, f.f0));
    CHECK(filtration_eq(plus_filtration(grading_from_euler(l, f.witness)), f));
  }

  // transversal ordered pairs: 30 proper + the degenerate self-pair
  std::size_t pairs = 0, recovered = 0;
  for (const auto& [ka, a] : flags)
    for (const auto& [kb, b] : flags) {
      if (!is_transversal(a, b)) {
        CHECK_THROWS_AS(grading_from_transversal(a, b), NotTransversal);
        continue;
      }
      ++pairs;
      auto d = grading_from_transversal(a, b);
      if (filtration_eq(plus_filtration(d), b) && filtration_eq(minus_filtration(d), a))
        ++recovered;
    }
  CHECK(pairs == 31);
  CHECK(recovered == 31);

  // and the pair map over gradings is injective onto transversal pairs
  std::map<std::string, std::size_t> seen;
  for (const auto& g : gradings) {
    auto fp = plus_filtration(g);
    auto fm = minus_filtration(g);
    seen[fm.f1.str() + "|" + fm.f0.str() + "||" + fp.f1.str() + "|" + fp.f0.str()]++;
  }
  CHECK(seen.size() == 31);

  SUBCASE("chart bijection at a fixed flag") {
    auto d0 = grading_from_euler(l, make_element(l, sv(f5, {0, 3, 0})));  // 3 = 1/2 mod 5
    auto fp = plus_filtration(d0);
    auto fm = minus_filtration(d0);
    std::size_t transversal_count = 0;
    std::map<std::string, bool> coords_seen;
    for (const auto& [k, ef] : flags) {
      if (!is_transversal(ef, fp)) continue;
      ++transversal_count;
      auto x = transversal_coordinates(fp, fm, ef);
      CHECK(fp.f1.contains_vector(x.coords));
      coords_seen[vec_str(x.coords)] = true;
      auto moved = apply_to_filtration(make_automorphism(l, expad(l, x.coords)), fm);
      CHECK(filtration_eq(moved, ef));
    }
    CHECK(transversal_count == 5);
    CHECK(coords_seen.size() == 5);
  }
}

TEST_CASE("same_plus_filtration equivalences on sl3") {
  auto q = FieldSpec::rational();
  auto m = [&](std::size_t i, std::size_t j) {
    Matrix x(q, 3, 3);
    x.at(i, j) = Scalar::one(q);
    return x;
  };
  Matrix h1(q, 3, 3), h2(q, 3, 3);
  h1.at(0, 0) = Scalar::one(q);
  h1.at(1, 1) = -Scalar::one(q);
  h2.at(1, 1) = Scalar::one(q);
  h2.at(2, 2) = -Scalar::one(q);
  auto l = algebra_from_matrices(
      q, {"e12", "e13", "e23", "e21", "e31", "e32", "h1", "h2"},
      {m(0, 1), m(0, 2), m(1, 2), m(1, 0), m(2, 0), m(2, 1), h1, h2});

  // Euler element for the 1|2 block split: (2 h1 + h2)/3
  Scalar third = Scalar::from_int(q, 3).inverse();
  Vec ec = vec_zero(q, 8);
  ec[6] = Scalar::from_int(q, 2) * third;
  ec[7] = third;
  auto d1 = grading_from_euler(l, make_element(l, ec));
  CHECK(d1.g1.dim() == 2);
  CHECK(d1.g0.dim() == 4);

  auto four_way = [&](const Grading& a, const Grading& b) {
    bool c1 = same_plus_filtration(a, b);
    Matrix comm = a.d * b.d - b.d * a.d;
    bool c2 = comm == (b.d - a.d);
    Vec v = vec_sub(a.euler.coords, b.euler.coords);
    bool c4 = a.g1.contains_vector(v);
    bool c3 = false;
    if (c4) {
      Matrix u = expad(l, v);
      auto ui = inverse(u);
      c3 = ui.has_value() && (u * a.d * *ui) == b.d;
    }
    CHECK(c1 == c2);
    CHECK(c2 == c3);
    CHECK(c3 == c4);
    return c1;
  };

  CHECK(four_way(d1, d1));

  std::uint64_t state = 42;
  auto rnd = [&]() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<long>((state >> 32) % 7) - 3;
  };
  for (int trial = 0; trial < 6; ++trial) {
    Vec v = vec_zero(q, 8);
    v[0] = Scalar::from_int(q, rnd());
    v[1] = Scalar::from_int(q, rnd());
    auto d2 = grading_from_euler(l, make_element(l, vec_sub(ec, v)));
    CHECK(four_way(d1, d2));
  }

  // opposite and unrelated gradings do not share the plus-flag
  auto dneg = grading_from_euler(l, elem_scale(-Scalar::one(q), d1.euler));
  CHECK_FALSE(four_way(d1, dneg));
  Vec ec2 = vec_zero(q, 8);
  ec2[6] = third;
  ec2[7] = Scalar::from_int(q, 2) * third;
  CHECK_FALSE(four_way(d1, grading_from_euler(l, make_element(l, ec2))));
}

TEST_CASE("dilation") {
  auto l = make_sl2(FieldSpec::rational());
  auto q = l->field();
  auto g = grading_from_euler(l, half_h(l));

  CHECK(dilation(g, Scalar::one(q)).matrix.is_identity());
  CHECK_THROWS_AS(dilation(g, Scalar::zero(q)), DivisionByZero);

  auto h2 = dilation(g, Scalar::from_int(q, 2));
  CHECK(h2.matrix.at(0, 0) == Scalar::from_int(q, 2));
  CHECK(h2.matrix.at(1, 1) == Scalar::one(q));
  CHECK(h2.matrix.at(2, 2) == Scalar::from_int(q, 2).inverse());
  CHECK(is_automorphism(l, h2.matrix));
  CHECK(h2.matrix * g.d == g.d * h2.matrix);

  // r = -1 is the grading reflection 1 - 2 d^2
  auto sigma = dilation(g, -Scalar::one(q));
  CHECK(sigma.matrix == Matrix::identity(q, 3) - (g.d * g.d).scaled(Scalar::from_int(q, 2)));
  // acts as -1 on both extreme components
  for (std::size_t i = 0; i < g.g1.dim(); ++i) {
    Vec v = g.g1.basis_vector(i);
    CHECK(sigma.matrix.apply(v) == vec_scale(-Scalar::one(q), v));
  }
  for (std::size_t i = 0; i < g.gm1.dim(); ++i) {
    Vec v = g.gm1.basis_vector(i);
    CHECK(sigma.matrix.apply(v) == vec_scale(-Scalar::one(q), v));
  }
}

TEST_CASE("structure map") {
  auto f5 = FieldSpec::prime(5);
  auto l = make_sl2(f5);
  auto g = grading_from_euler(l, make_element(l, sv(f5, {0, 3, 0})));
  auto fp = plus_filtration(g);
  auto fm = minus_filtration(g);
  auto translate = [&](long k) {
    return apply_to_filtration(make_automorphism(l, expad(l, sv(f5, {k, 0, 0}))), fm);
  };

  auto f3 = translate(1);
  CHECK(filtration_eq(structure_map_mu(Scalar::one(f5), fm, fp, f3), f3));
  CHECK(filtration_eq(structure_map_mu(Scalar::zero(f5), fm, fp, f3), fm));
  CHECK(filtration_eq(structure_map_mu(Scalar::from_int(f5, 2), fm, fp, f3), translate(2)));

  // for invertible r the dilation route gives the same flag
  auto d = grading_from_transversal(fm, fp);
  for (long r = 1; r <= 4; ++r) {
    Scalar rs = Scalar::from_int(f5, r);
    auto via_mu = structure_map_mu(rs, fm, fp, f3);
    auto via_dil = apply_to_filtration(dilation(d, rs), f3);
    CHECK(filtration_eq(via_mu, via_dil));
  }
}

TEST_CASE("reflection product") {
  auto f5 = FieldSpec::prime(5);
  auto l = make_sl2(f5);
  auto gradings = all_gradings(l);

  SUBCASE("rational example") {
    auto lq = make_sl2(FieldSpec::rational());
    auto q = lq->field();
    auto d = grading_from_euler(lq, half_h(lq));
    Vec shifted = half_h(lq).coords;
    shifted[0] = -Scalar::one(q);
    auto d2 = grading_from_euler(lq, make_element(lq, shifted));
    auto prod = reflection_multiply(d, d2);
    Vec expect = half_h(lq).coords;
    expect[0] = Scalar::one(q);
    CHECK(prod.euler.coords == expect);
  }

  // pointwise axioms over all 31 gradings
  for (const auto& a : gradings) CHECK(grading_eq(reflection_multiply(a, a), a));

  std::uint64_t state = 7;
  auto pick = [&]() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return gradings[(state >> 32) % gradings.size()];
  };
  for (int trial = 0; trial < 40; ++trial) {
    auto a = pick(), b = pick(), c = pick();
    CHECK(grading_eq(reflection_multiply(a, reflection_multiply(a, b)), b));
    // each left multiplication is an automorphism of the product
    auto lhs = reflection_multiply(a, reflection_multiply(b, c));
    auto rhs = reflection_multiply(reflection_multiply(a, b), reflection_multiply(a, c));
    CHECK(grading_eq(lhs, rhs));
  }
}

TEST_CASE("filtration json shape") {
  auto l = make_sl2(FieldSpec::rational());
  auto g = grading_from_euler(l, half_h(l));
  auto j = filtration_to_json(plus_filtration(g));
  CHECK(j["f1"]["basis"].size() == 1);
  CHECK(j["f0"]["basis"].size() == 2);
  CHECK(j["witness"].size() == 3);
  auto jg = grading_to_json(g);
  CHECK(jg["euler"][1] == "1/2");
}
