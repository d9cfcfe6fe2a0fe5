#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "builders.hpp"
#include "jpgeom/jordan.hpp"
#include "jpgeom/projgroup.hpp"

using namespace jpgeom;
using namespace jpgeom::testutil;

namespace {

struct Setup {
  AlgebraRef l;
  Grading d;
  JordanPair p;
};

Setup sl2_setup(const FieldSpec& f) {
  auto l = sl2(f);
  auto d = grading_from_euler(l, sl2_half_h(l));
  return Setup{l, d, pair_from_grading(l, d)};
}

Setup sl3_setup(const FieldSpec& f) {
  auto l = sl3(f);
  auto d = grading_from_euler(l, sl3_block12_euler(l));
  return Setup{l, d, pair_from_grading(l, d)};
}

Element embed_plus(const Grading& d, const Vec& c) {
  Vec v = vec_zero(d.algebra->field(), d.algebra->dim());
  for (std::size_t i = 0; i < c.size(); ++i)
    v = vec_add(v, vec_scale(c[i], d.g1.basis_vector(i)));
  return make_element(d.algebra, v);
}

Element embed_minus(const Grading& d, const Vec& c) {
  Vec v = vec_zero(d.algebra->field(), d.algebra->dim());
  for (std::size_t i = 0; i < c.size(); ++i)
    v = vec_add(v, vec_scale(c[i], d.gm1.basis_vector(i)));
  return make_element(d.algebra, v);
}

// Flag of the chart point with component coordinates c.
Filtration3 chart_flag(const Grading& d, const Vec& c) {
  return apply_to_filtration(exp_ad(d, 1, embed_plus(d, c)), minus_filtration(d));
}

JordanPair zero_pair(const FieldSpec& f, std::size_t np, std::size_t nm) {
  JordanPair p;
  p.field = f;
  p.np = np;
  p.nm = nm;
  p.tplus.assign(np, std::vector<std::vector<Vec>>(nm, std::vector<Vec>(np, vec_zero(f, np))));
  p.tminus.assign(nm, std::vector<std::vector<Vec>>(np, std::vector<Vec>(nm, vec_zero(f, nm))));
  return p;
}

// e <-> f, h <-> -h; the grading-reversing automorphism used as a polarity.
Matrix swap_involution(const FieldSpec& f) {
  Matrix m(f, 3, 3);
  m.at(2, 0) = Scalar::one(f);
  m.at(1, 1) = -Scalar::one(f);
  m.at(0, 2) = Scalar::one(f);
  return m;
}

Vec rand_vec(TestRng& rng, const FieldSpec& f, std::size_t n, long lo, long hi) {
  Vec v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(Scalar::from_int(f, rng.range(lo, hi)));
  return v;
}

GroupWord rand_word(TestRng& rng, const Grading& d, std::size_t len) {
  const FieldSpec& f = d.algebra->field();
  GroupWord w{d, {}};
  for (std::size_t i = 0; i < len; ++i) {
    bool plus = rng.range(0, 1) == 0;
    std::size_t n = plus ? d.g1.dim() : d.gm1.dim();
    w.letters.push_back({plus ? LetterKind::exp_plus : LetterKind::exp_minus,
                         rand_vec(rng, f, n, -2, 2), Scalar::one(f)});
  }
  return w;
}

}  // namespace

TEST_CASE("pair extraction from gradings") {
  FieldSpec q = FieldSpec::rational();
  auto [l2, d2, p2] = sl2_setup(q);
  CHECK(p2.np == 1);
  CHECK(p2.nm == 1);
  CHECK(p2.convention == "eq3.1");
  CHECK(p2.tplus[0][0][0] == sv(q, {-2}));
  CHECK(p2.tminus[0][0][0] == sv(q, {-2}));
  CHECK(check_pair(p2));

  auto [l3, d3, p3] = sl3_setup(q);
  CHECK(p3.np == 2);
  CHECK(p3.nm == 2);
  // row-by-column pairing: T+(b_i, c_j, b_k) = -(<b_i,c_j> b_k + <b_k,c_j> b_i)
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) {
        Vec want = vec_zero(q, 2);
        if (i == j) want[k] = want[k] - Scalar::one(q);
        if (k == j) want[i] = want[i] - Scalar::one(q);
        CHECK(p3.tplus[i][j][k] == want);
        CHECK(p3.tminus[i][j][k] == want);
      }
  CHECK(check_pair(p3));

  CHECK_THROWS_AS(pair_from_grading(l3, d2), AlgebraMismatch);

  JordanPair bad = zero_pair(q, 2, 2);
  bad.tplus[0][0][1] = sv(q, {1, 0});
  CHECK_FALSE(check_pair(bad));
}

TEST_CASE("pair morphism predicates") {
  FieldSpec q = FieldSpec::rational();
  auto [l3, d3, p] = sl3_setup(q);
  Matrix id2 = Matrix::identity(q, 2);

  CHECK(is_pair_derivation(p, id2, -id2));
  CHECK_FALSE(is_pair_derivation(p, id2, id2));
  CHECK(is_pair_automorphism(p, -id2, -id2));
  CHECK(is_pair_automorphism(p, id2, id2));
  CHECK_FALSE(is_pair_automorphism(p, id2, -id2));
  CHECK_FALSE(is_pair_automorphism(p, Matrix(q, 2, 2), id2));

  // inner derivations (-T+(u,v,.), T-(v,u,.)) from the five-linear identity
  Vec u = sv(q, {1, 2}), v = sv(q, {3, 1});
  Matrix a(q, 2, 2), b(q, 2, 2);
  for (std::size_t k = 0; k < 2; ++k) {
    Vec ak = triple_plus(p, u, v, sv(q, {k == 0 ? 1 : 0, k == 1 ? 1 : 0}));
    Vec bk = triple_minus(p, v, u, sv(q, {k == 0 ? 1 : 0, k == 1 ? 1 : 0}));
    for (std::size_t r = 0; r < 2; ++r) {
      a.at(r, k) = -ak[r];
      b.at(r, k) = bk[r];
    }
  }
  CHECK(is_pair_derivation(p, a, b));

  CHECK_THROWS_AS(is_pair_derivation(p, Matrix::identity(q, 3), -id2), DimensionMismatch);
}

TEST_CASE("quadratic operators") {
  FieldSpec q = FieldSpec::rational();
  auto [l2, d2, p2] = sl2_setup(q);
  for (long t = -3; t <= 3; ++t) {
    Matrix want(q, 1, 1);
    want.at(0, 0) = Scalar::from_int(q, -t * t);
    CHECK(q_op(p2, 1, sv(q, {t})) == want);
    CHECK(q_op(p2, -1, sv(q, {t})) == want);
  }

  auto [l3, d3, p3] = sl3_setup(q);
  CHECK(q_op(p3, 1, sv(q, {0, 0})) == Matrix(q, 2, 2));

  TestRng rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    Vec x = rand_vec(rng, q, 2, -4, 4), z = rand_vec(rng, q, 2, -4, 4);
    Scalar lam = Scalar::from_int(q, rng.range(-3, 3));
    Vec lx = vec_scale(lam, x);
    CHECK(q_op(p3, 1, lx) == q_op(p3, 1, x).scaled(lam * lam));
    // polarization: Q(x+z) - Q(x) - Q(z) = T+(x, . , z)
    Matrix pol = q_op(p3, 1, vec_add(x, z)) - q_op(p3, 1, x) - q_op(p3, 1, z);
    for (std::size_t j = 0; j < 2; ++j) {
      Vec ej = vec_zero(q, 2);
      ej[j] = Scalar::one(q);
      CHECK(pol.col(j) == triple_plus(p3, x, ej, z));
    }
  }

  CHECK_THROWS_AS(q_op(p3, 0, sv(q, {1, 0})), Error);
  CHECK_THROWS_AS(q_op(p3, 1, sv(q, {1})), DimensionMismatch);
}

TEST_CASE("bergman operators and quasi-inversion") {
  FieldSpec q = FieldSpec::rational();
  auto [l2, d2, p2] = sl2_setup(q);
  for (long x = -2; x <= 2; ++x)
    for (long y = -2; y <= 2; ++y) {
      auto [bp, bm] = bergman(p2, sv(q, {x}), sv(q, {y}));
      Scalar want = Scalar::from_int(q, (1 + x * y) * (1 + x * y));
      CHECK(bp.at(0, 0) == want);
      CHECK(bm.at(0, 0) == want);
    }
  CHECK(quasi_inverse(p2, sv(q, {1}), sv(q, {1})) ==
        Vec{Scalar::from_int(q, 2).inverse()});
  CHECK(quasi_inverse(p2, sv(q, {7}), sv(q, {0})) == sv(q, {7}));

  auto [l3, d3, p3] = sl3_setup(q);
  TestRng rng(12);
  for (int trial = 0; trial < 8; ++trial) {
    Vec x = rand_vec(rng, q, 2, -3, 3), y = rand_vec(rng, q, 2, -3, 3);
    auto [bp, bm] = bergman(p3, x, y);
    CHECK(bergman(p3, x, vec_zero(q, 2)).first == Matrix::identity(q, 2));
    CHECK(bergman(p3, vec_zero(q, 2), y).second == Matrix::identity(q, 2));
    if (inverse(bp) && inverse(bm))
      CHECK(is_quasi_invertible(p3, x, y));
  }

  FieldSpec f5 = FieldSpec::prime(5);
  auto [l2f, d2f, p2f] = sl2_setup(f5);
  int defined = 0;
  for (long x = 0; x < 5; ++x)
    for (long y = 0; y < 5; ++y) {
      if (is_quasi_invertible(p2f, sv(f5, {x}), sv(f5, {y}))) {
        ++defined;
        // x^y = x / (1 + x y)
        Scalar den = Scalar::one(f5) + Scalar::from_int(f5, x * y);
        CHECK(quasi_inverse(p2f, sv(f5, {x}), sv(f5, {y})) ==
              Vec{Scalar::from_int(f5, x) * den.inverse()});
      } else {
        CHECK_THROWS_AS(quasi_inverse(p2f, sv(f5, {x}), sv(f5, {y})), NotQuasiInvertible);
      }
    }
  CHECK(defined == 21);

  // the flipped convention inverts along 1 - x y instead
  JordanPair flip = convention_flip(p2f);
  CHECK(flip.convention == "sec8.5");
  CHECK(convention_flip(flip).tplus == p2f.tplus);
  CHECK(is_quasi_invertible(p2f, sv(f5, {1}), sv(f5, {1})));
  CHECK_FALSE(is_quasi_invertible(flip, sv(f5, {1}), sv(f5, {1})));
  int defined_flip = 0;
  for (long x = 0; x < 5; ++x)
    for (long y = 0; y < 5; ++y)
      if (is_quasi_invertible(flip, sv(f5, {x}), sv(f5, {y}))) ++defined_flip;
  CHECK(defined_flip == 21);
}

TEST_CASE("quasi-inversion matches the chart action") {
  FieldSpec f5 = FieldSpec::prime(5);
  auto [l, d, p] = sl2_setup(f5);
  Filtration3 fp = plus_filtration(d), fm = minus_filtration(d);
  for (long x = 0; x < 5; ++x)
    for (long y = 0; y < 5; ++y) {
      Vec xc = sv(f5, {x}), yc = sv(f5, {y});
      Automorphism g = exp_ad(d, -1, embed_minus(d, yc));
      CHECK(denominator(g, embed_plus(d, xc), d) == bergman(p, xc, yc).first);
      bool qi = is_quasi_invertible(p, xc, yc);
      bool in_chart = true;
      Element image = embed_plus(d, xc);
      try {
        image = fractional_action(g, embed_plus(d, xc), d);
      } catch (const NotInChart&) {
        in_chart = false;
      }
      CHECK(qi == in_chart);
      if (qi) CHECK(image.coords == embed_plus(d, quasi_inverse(p, xc, yc)).coords);

      // transversality form of the same dichotomy
      Filtration3 moved_minus = apply_to_filtration(exp_ad(d, 1, embed_plus(d, xc)), fm);
      Filtration3 moved_plus =
          apply_to_filtration(exp_ad(d, -1, elem_scale(-Scalar::one(f5), embed_minus(d, yc))), fp);
      CHECK(qi == is_transversal(moved_minus, moved_plus));
    }

  FieldSpec q = FieldSpec::rational();
  auto [l3, d3, p3] = sl3_setup(q);
  TestRng rng(13);
  int covered = 0;
  while (covered < 12) {
    Vec x = rand_vec(rng, q, 2, -3, 3), y = rand_vec(rng, q, 2, -3, 3);
    Automorphism g = exp_ad(d3, -1, embed_minus(d3, y));
    if (!is_quasi_invertible(p3, x, y)) {
      CHECK_THROWS_AS(fractional_action(g, embed_plus(d3, x), d3), NotInChart);
      continue;
    }
    CHECK(fractional_action(g, embed_plus(d3, x), d3).coords ==
          embed_plus(d3, quasi_inverse(p3, x, y)).coords);
    ++covered;
  }
}

TEST_CASE("structure pairs are pair automorphisms") {
  FieldSpec q = FieldSpec::rational();
  auto [l, d, p] = sl3_setup(q);
  TestRng rng(14);

  int done = 0;
  while (done < 10) {
    Automorphism g = evaluate_word(rand_word(rng, d, 1 + done % 4));
    Vec x = rand_vec(rng, q, 2, -2, 2);
    std::pair<Matrix, Matrix> sp{Matrix(q, 0, 0), Matrix(q, 0, 0)};
    try {
      sp = structure_pair(g, embed_plus(d, x), d);
    } catch (const NotInChart&) {
      continue;
    }
    CHECK(is_pair_automorphism(p, sp.first, sp.second));
    ++done;
  }

  // for g = exp(ad w) the structure pair is (B+(x,w)^{-1}, B-(x,w))
  for (int trial = 0; trial < 6; ++trial) {
    Vec x = rand_vec(rng, q, 2, -2, 2), w = rand_vec(rng, q, 2, -2, 2);
    if (!is_quasi_invertible(p, x, w)) continue;
    auto [bp, bm] = bergman(p, x, w);
    auto sp = structure_pair(exp_ad(d, -1, embed_minus(d, w)), embed_plus(d, x), d);
    CHECK(sp.first == *inverse(bp));
    CHECK(sp.second == bm);
    auto [ap, am] = bergman_automorphism(p, x, w);
    CHECK(ap == bp);
    CHECK(am == *inverse(bm));
    CHECK(is_pair_automorphism(p, ap, am));
  }

  FieldSpec f5 = FieldSpec::prime(5);
  auto [l2, d2, p2] = sl2_setup(f5);
  CHECK_THROWS_AS(bergman_automorphism(p2, sv(f5, {1}), sv(f5, {4})), NotQuasiInvertible);
}

TEST_CASE("tkk construction") {
  FieldSpec q = FieldSpec::rational();
  auto [l2, d2, p2] = sl2_setup(q);

  TkkResult r = tkk(p2);
  CHECK(r.algebra->dim() == 3);
  CHECK(center(r.algebra).dim() == 0);
  CHECK(is_perfect(r.algebra));
  CHECK(r.grading.g1.dim() == 1);
  CHECK(r.grading.g0.dim() == 1);
  // basis order (v0, d0, w0) with d0 the euler operator
  CHECK(r.grading.euler.coords == sv(q, {0, 1, 0}));
  CHECK(r.algebra->structure(1, 0) == sv(q, {1, 0, 0}));
  CHECK(r.algebra->structure(0, 2) == sv(q, {0, 2, 0}));
  CHECK(r.algebra->structure(1, 2) == sv(q, {0, 0, -1}));
  JordanPair back = pair_from_grading(r.algebra, r.grading);
  CHECK(back.tplus == p2.tplus);
  CHECK(back.tminus == p2.tminus);
  CHECK(r.grading.g1.contains_vector(r.embed_plus.col(0)));
  CHECK(r.grading.gm1.contains_vector(r.embed_minus.col(0)));

  TkkResult t11 = tkk(zero_pair(q, 1, 1));
  CHECK(t11.algebra->dim() == 3);
  CHECK(center(t11.algebra).dim() == 0);
  CHECK_FALSE(is_perfect(t11.algebra));

  CHECK(tkk(zero_pair(q, 2, 1)).algebra->dim() == 4);

  auto [l3, d3, p3] = sl3_setup(q);
  TkkResult r3 = tkk(p3);
  CHECK(r3.algebra->dim() == 8);
  CHECK(r3.grading.g0.dim() == 4);
  CHECK(center(r3.algebra).dim() == 0);
  CHECK(is_perfect(r3.algebra));
  JordanPair back3 = pair_from_grading(r3.algebra, r3.grading);
  CHECK(back3.tplus == p3.tplus);
  CHECK(back3.tminus == p3.tminus);

  JordanPair bad = zero_pair(q, 2, 2);
  bad.tplus[0][0][1] = sv(q, {1, 0});
  CHECK_THROWS_AS(tkk(bad), InvalidPair);
}

TEST_CASE("involutions and triple systems") {
  FieldSpec q = FieldSpec::rational();
  auto l = sl2(q);
  Grading d = grading_from_euler(l, sl2_half_h(l));

  Involution th = make_involution(l, d, swap_involution(q));
  JTS t = jts_from_involution(th);
  CHECK(t.n == 1);
  CHECK(t.t[0][0][0] == sv(q, {-2}));
  CHECK(check_jts(t));

  // the sign-twisted reversal gives the opposite tensor
  Matrix omega(q, 3, 3);
  omega.at(2, 0) = -Scalar::one(q);
  omega.at(1, 1) = -Scalar::one(q);
  omega.at(0, 2) = -Scalar::one(q);
  CHECK(jts_from_involution(make_involution(l, d, omega)).t[0][0][0] == sv(q, {2}));

  CHECK_THROWS_AS(make_involution(l, d, Matrix::identity(q, 3)), NotInvolution);
  Matrix notmor = Matrix::identity(q, 3);
  notmor.at(0, 0) = Scalar::from_int(q, 2);
  CHECK_THROWS_AS(make_involution(l, d, notmor), NotInvolution);
  CHECK_THROWS_AS(make_involution(l, d, dilation(d, Scalar::from_int(q, 2)).matrix),
                  NotInvolution);

  JTS zero{q, 1, TripleTensor(1, std::vector<std::vector<Vec>>(
                                    1, std::vector<Vec>(1, vec_zero(q, 1))))};
  CHECK(check_jts(zero));

  JtsTriple round = involution_from_jts(t);
  CHECK(round.algebra->dim() == 3);
  CHECK(jts_from_involution(round.inv).t == t.t);
  CHECK(round.inv.theta.apply(round.grading.g1.basis_vector(0)) ==
        round.grading.gm1.basis_vector(0));

  JtsTriple zr = involution_from_jts(zero);
  CHECK(zr.algebra->dim() == 3);
  CHECK(jts_from_involution(zr.inv).t == zero.t);

  JTS bad{q, 2, TripleTensor(2, std::vector<std::vector<Vec>>(
                                    2, std::vector<Vec>(2, vec_zero(q, 2))))};
  bad.t[0][0][1] = sv(q, {1, 0});
  CHECK_FALSE(check_jts(bad));
  CHECK_THROWS_AS(involution_from_jts(bad), InvalidJTS);
}

TEST_CASE("polarity and isotropy") {
  FieldSpec f5 = FieldSpec::prime(5);
  auto [l, d, p] = sl2_setup(f5);
  Involution th = make_involution(l, d, swap_involution(f5));
  Filtration3 fp = plus_filtration(d);

  std::vector<Filtration3> pts;
  for (long t = 0; t < 5; ++t) pts.push_back(chart_flag(d, sv(f5, {t})));
  pts.push_back(fp);  // index 5 plays infinity

  // polarity sends the chart point t to 1/t, exchanging 0 and infinity
  long polar[6] = {5, 1, 3, 2, 4, 0};
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(filtration_eq(polarity_apply(th, pts[i]), pts[polar[i]]));
    CHECK(filtration_eq(polarity_apply(th, polarity_apply(th, pts[i])), pts[i]));
  }

  int nonisotropic = 0;
  for (const auto& f : pts)
    if (is_nonisotropic(th, f)) ++nonisotropic;
  CHECK(nonisotropic == 4);
  CHECK(is_nonisotropic(th, pts[0]));
  CHECK_FALSE(is_nonisotropic(th, pts[1]));
  CHECK(is_nonisotropic(th, pts[2]));
  CHECK_FALSE(is_nonisotropic(th, pts[4]));
  CHECK(is_nonisotropic(th, pts[5]));

  FieldSpec q = FieldSpec::rational();
  auto [lq, dq, pq] = sl2_setup(q);
  Involution thq = make_involution(lq, dq, swap_involution(q));
  Vec half{Scalar::from_int(q, 2).inverse()};
  CHECK(filtration_eq(polarity_apply(thq, chart_flag(dq, sv(q, {2}))), chart_flag(dq, half)));

  CHECK_THROWS_AS(polarity_apply(th, plus_filtration(dq)), AlgebraMismatch);
}

TEST_CASE("symmetric space multiplication") {
  FieldSpec f5 = FieldSpec::prime(5);
  auto [l, d, p] = sl2_setup(f5);
  Involution th = make_involution(l, d, swap_involution(f5));

  std::vector<Filtration3> pts;
  for (long t = 0; t < 5; ++t) pts.push_back(chart_flag(d, sv(f5, {t})));
  pts.push_back(plus_filtration(d));

  std::vector<std::size_t> ni = {0, 2, 3, 5};
  auto base_grading = [&](const Filtration3& f) {
    return grading_from_transversal(f, polarity_apply(th, f));
  };

  for (std::size_t xi : ni) {
    const Filtration3& x = pts[xi];
    Filtration3 px = polarity_apply(th, x);
    CHECK(filtration_eq(symmetric_multiply(th, x, x), x));
    for (std::size_t yi = 0; yi < 6; ++yi) {
      const Filtration3& y = pts[yi];
      if (!is_transversal(y, px)) {
        CHECK_THROWS_AS(symmetric_multiply(th, x, y), NotTransversal);
        continue;
      }
      Filtration3 z = symmetric_multiply(th, x, y);
      CHECK(filtration_eq(symmetric_multiply(th, x, z), y));
      bool y_ni = std::find(ni.begin(), ni.end(), yi) != ni.end();
      if (y_ni) {
        CHECK(is_nonisotropic(th, z));
        // point reflections realize the product on adapted gradings
        Grading want = reflection_multiply(base_grading(x), base_grading(y));
        CHECK(want.euler.coords == base_grading(z).euler.coords);
      }
    }
  }

  CHECK_THROWS_AS(symmetric_multiply(th, pts[1], pts[0]), Isotropic);
}

TEST_CASE("selfdual involutions") {
  FieldSpec f5 = FieldSpec::prime(5);
  auto [l, d, p] = sl2_setup(f5);
  Filtration3 fp = plus_filtration(d), fm = minus_filtration(d);

  Automorphism j = selfdual_involution(l, d, chart_flag(d, sv(f5, {1})));
  CHECK_FALSE(j.matrix.is_identity());
  CHECK((j.matrix * j.matrix).is_identity());
  CHECK(filtration_eq(apply_to_filtration(j, fp), fm));
  CHECK(filtration_eq(apply_to_filtration(j, fm), fp));
  CHECK(j.matrix.apply(d.euler.coords) == vec_scale(-Scalar::one(f5), d.euler.coords));
  CHECK(stabilizer_class(j, d) == StabilizerClass::none);

  // chart action is the jordan inverse t -> 1/t
  long inv5[5] = {0, 1, 3, 2, 4};
  for (long t = 1; t < 5; ++t) {
    CHECK(filtration_eq(apply_to_filtration(j, chart_flag(d, sv(f5, {t}))),
                        chart_flag(d, sv(f5, {inv5[t]}))));
    CHECK(jordan_inverse(p, sv(f5, {t})) == sv(f5, {inv5[t]}));
  }

  // d_j(x) factors through the corner block of j
  Matrix corner = block(j, -1, 1, d);
  for (long t = 0; t < 5; ++t) {
    Vec xc = sv(f5, {t});
    CHECK(denominator(j, embed_plus(d, xc), d) == q_op(p, 1, xc) * corner);
  }

  Automorphism j2 = selfdual_involution(l, d, chart_flag(d, sv(f5, {2})));
  CHECK((j2.matrix * j2.matrix).is_identity());
  CHECK(filtration_eq(apply_to_filtration(j2, fp), fm));

  CHECK_THROWS_AS(selfdual_involution(l, d, fp), NotBitransversal);
  CHECK_THROWS_AS(selfdual_involution(l, d, fm), NotBitransversal);

  FieldSpec q = FieldSpec::rational();
  auto [lq, dq, pq] = sl2_setup(q);
  Automorphism jq = selfdual_involution(lq, dq, chart_flag(dq, sv(q, {1})));
  CHECK((jq.matrix * jq.matrix).is_identity());
  Vec half{Scalar::from_int(q, 2).inverse()};
  CHECK(filtration_eq(apply_to_filtration(jq, chart_flag(dq, sv(q, {2}))),
                      chart_flag(dq, half)));
}

TEST_CASE("selfduality detection") {
  FieldSpec f5 = FieldSpec::prime(5);
  auto [l, d, p] = sl2_setup(f5);
  SelfDualResult r = is_selfdual(l, d);
  CHECK(r.status == SelfDualResult::Status::yes);
  REQUIRE(r.witness.has_value());
  CHECK(invertible(p, *r.witness));

  TkkResult t11 = tkk(zero_pair(f5, 1, 1));
  CHECK(is_selfdual(t11.algebra, t11.grading).status == SelfDualResult::Status::no);

  auto [l3, d3, p3] = sl3_setup(f5);
  CHECK(is_selfdual(l3, d3).status == SelfDualResult::Status::no);

  FieldSpec q = FieldSpec::rational();
  auto [l3q, d3q, p3q] = sl3_setup(q);
  CHECK(is_selfdual(l3q, d3q).status == SelfDualResult::Status::unknown);

  auto [lq, dq, pq] = sl2_setup(q);
  SelfDualResult rq = is_selfdual(lq, dq);
  CHECK(rq.status == SelfDualResult::Status::yes);
  REQUIRE(rq.witness.has_value());
  CHECK(invertible(pq, *rq.witness));

  SelfDualResult forced = is_selfdual(lq, dq, {sv(q, {7})});
  CHECK(forced.status == SelfDualResult::Status::yes);
  CHECK(*forced.witness == sv(q, {7}));
}

TEST_CASE("jordan inverses") {
  FieldSpec q = FieldSpec::rational();
  auto [l, d, p] = sl2_setup(q);
  CHECK(invertible(p, sv(q, {2})));
  CHECK_FALSE(invertible(p, sv(q, {0})));
  CHECK(jordan_inverse(p, sv(q, {2})) == Vec{Scalar::from_int(q, 2).inverse()});
  for (long t = 1; t <= 4; ++t)
    CHECK(jordan_inverse(p, jordan_inverse(p, sv(q, {t}))) == sv(q, {t}));
  CHECK_THROWS_AS(jordan_inverse(p, sv(q, {0})), NotInvertible);

  FieldSpec f5 = FieldSpec::prime(5);
  auto [lf, df, pf] = sl2_setup(f5);
  int count = 0;
  for (long t = 0; t < 5; ++t)
    if (invertible(pf, sv(f5, {t}))) ++count;
  CHECK(count == 4);
}

TEST_CASE("jordan algebras from invertible elements") {
  FieldSpec q = FieldSpec::rational();
  auto [l, d, p] = sl2_setup(q);

  JordanAlgebra a = jordan_algebra_from_pair(p, sv(q, {1}));
  CHECK(a.n == 1);
  CHECK(a.unit == sv(q, {1}));
  CHECK(a.product[0][0] == sv(q, {1}));
  CHECK(jalg_multiply(a, sv(q, {3}), sv(q, {5})) == sv(q, {15}));
  CHECK(check_jordan_algebra(a));

  CHECK_THROWS_AS(jordan_algebra_from_pair(p, sv(q, {0})), NotUnitCandidate);
  CHECK_THROWS_AS(jordan_algebra_from_pair(p, sv(q, {2})), NotUnitCandidate);
  CHECK_THROWS_AS(jordan_algebra_from_pair(zero_pair(q, 2, 1), sv(q, {1, 0})),
                  NotUnitCandidate);
  auto [l3, d3, p3] = sl3_setup(q);
  CHECK_THROWS_AS(jordan_algebra_from_pair(p3, sv(q, {1, 0})), NotUnitCandidate);

  // in the flipped convention the unit must square to -1
  FieldSpec f5 = FieldSpec::prime(5);
  auto [lf, df, pf] = sl2_setup(f5);
  JordanPair flip = convention_flip(pf);
  CHECK_THROWS_AS(jordan_algebra_from_pair(flip, sv(f5, {1})), NotUnitCandidate);
  JordanAlgebra af = jordan_algebra_from_pair(flip, sv(f5, {2}));
  CHECK(af.product[0][0] == sv(f5, {3}));
  CHECK(check_jordan_algebra(af));

  JordanAlgebra broken = a;
  broken.product[0][0] = sv(q, {2});
  CHECK_FALSE(check_jordan_algebra(broken));
}

TEST_CASE("pair serialization") {
  FieldSpec q = FieldSpec::rational();
  auto [l3, d3, p3] = sl3_setup(q);
  JordanPair back = pair_from_json(pair_to_json(p3));
  CHECK(back.field == p3.field);
  CHECK(back.np == 2);
  CHECK(back.nm == 2);
  CHECK(back.convention == "eq3.1");
  CHECK(back.tplus == p3.tplus);
  CHECK(back.tminus == p3.tminus);

  FieldSpec f5 = FieldSpec::prime(5);
  auto [lf, df, pf] = sl2_setup(f5);
  JordanPair backf = pair_from_json(pair_to_json(convention_flip(pf)));
  CHECK(backf.field == pf.field);
  CHECK(backf.convention == "sec8.5");
  CHECK(backf.tplus == convention_flip(pf).tplus);

  nlohmann::json j = pair_to_json(p3);
  j.erase("tplus");
  CHECK_THROWS_AS(pair_from_json(j), SchemaViolation);
  j = pair_to_json(p3);
  j["sign"] = "other";
  CHECK_THROWS_AS(pair_from_json(j), SchemaViolation);
  j = pair_to_json(p3);
  j["dims"] = {2};
  CHECK_THROWS_AS(pair_from_json(j), SchemaViolation);
  j = pair_to_json(p3);
  j["tplus"][0][0][0] = {"1"};
  CHECK_THROWS_AS(pair_from_json(j), SchemaViolation);
}
