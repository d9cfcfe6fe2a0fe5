#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "builders.hpp"
#include "jpgeom/centext.hpp"
#include "jpgeom/errors.hpp"
#include "jpgeom/jordan.hpp"

using namespace jpgeom;
using namespace jpgeom::testutil;

namespace {

JordanPair trivial_pair(const FieldSpec& f, std::size_t np, std::size_t nm) {
  TripleTensor tp(np, std::vector<std::vector<Vec>>(
                          nm, std::vector<Vec>(np, vec_zero(f, np))));
  TripleTensor tm(nm, std::vector<std::vector<Vec>>(
                          np, std::vector<Vec>(nm, vec_zero(f, nm))));
  return JordanPair{f, np, nm, tp, tm, "eq3.1"};
}

AlgebraRef abelian(const FieldSpec& f, std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("a" + std::to_string(i));
  std::vector<std::vector<Vec>> sc(n, std::vector<Vec>(n, vec_zero(f, n)));
  return LieAlgebra::create(f, names, sc);
}

bool is_hom(const AlgebraRef& src, const AlgebraRef& dst, const Matrix& a) {
  for (std::size_t i = 0; i < src->dim(); ++i)
    for (std::size_t j = i + 1; j < src->dim(); ++j) {
      Vec lhs = a.apply(src->structure(i, j));
      Vec rhs = bracket(make_element(dst, a.col(i)), make_element(dst, a.col(j))).coords;
      if (lhs != rhs) return false;
    }
  return true;
}

// {x : [x, l] inside center(l)}
Subspace second_center(const AlgebraRef& l) {
  Subspace z = center(l);
  const std::size_t n = l->dim(), zq = z.quotient_dim();
  if (zq == 0) return Subspace::full(l->field(), n);
  Matrix m(l->field(), n * zq, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      Vec qc = z.quotient_coords(l->structure(i, j));
      for (std::size_t r = 0; r < zq; ++r) m.at(j * zq + r, i) = qc[r];
    }
  Matrix k = kernel_basis(m);
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < k.rows(); ++i) rows.push_back(k.row(i));
  return Subspace::span_vecs(l->field(), n, rows);
}

Vec unit(const FieldSpec& f, std::size_t n, std::size_t i) {
  Vec v = vec_zero(f, n);
  v[i] = Scalar::one(f);
  return v;
}

// Extension of the dims-(1,1) abelian-pair algebra with [v,w] = z, together
// with the projection that drops the central coordinate.
struct CocycleSetup {
  TkkResult base;
  AlgebraRef total;
  Grading total_d;
  ExtensionResult ext;
};

CocycleSetup cocycle_setup(const FieldSpec& f) {
  TkkResult base = tkk(trivial_pair(f, 1, 1));
  Matrix beta(f, 1, 1);
  beta.at(0, 0) = Scalar::one(f);
  auto [total, td] = cocycle_extension(1, 1, beta);
  Matrix q(f, 3, 4);
  q.at(0, 0) = q.at(1, 1) = q.at(2, 2) = Scalar::one(f);
  ExtensionResult ext =
      make_extension(base.grading, total, q, make_element(total, unit(f, 4, 1)));
  return CocycleSetup{base, total, td, ext};
}

}  // namespace

TEST_CASE("exterior square quotients") {
  FieldSpec q = FieldSpec::rational();

  AlgebraRef ab = abelian(q, 4);
  Lambda2Result la = lambda2_quotient(ab);
  CHECK(la.algebra->dim() == 6);
  CHECK(la.relations.dim() == 0);
  CHECK(la.b_map.is_zero());
  CHECK(la.algebra->basis_name(0) == "a0^a1");
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t s = 0; s < 6; ++s) CHECK(vec_is_zero(la.algebra->structure(r, s)));

  AlgebraRef l = sl2(q);
  Lambda2Result ls = lambda2_quotient(l);
  CHECK(ls.algebra->dim() == 3);
  CHECK(ls.relations.dim() == 0);
  CHECK(inverse(ls.b_map).has_value());
  CHECK(is_hom(ls.algebra, l, ls.b_map));
  CHECK(ls.b_map.at(0, 0) == Scalar::from_int(q, -2));  // e^h -> [e,h]

  AlgebraRef t = tkk(trivial_pair(q, 1, 1)).algebra;
  Lambda2Result lt = lambda2_quotient(t);
  CHECK(lt.algebra->dim() == 3);
  CHECK(is_hom(lt.algebra, t, lt.b_map));
  Matrix k = kernel_basis(lt.b_map);
  REQUIRE(k.rows() == 1);
  CHECK(k.row(0) == unit(q, 3, 1));  // the v0^w0 class
  CHECK(lt.reps[1] == std::pair<std::size_t, std::size_t>{0, 2});
}

TEST_CASE("universal extension of a perfect algebra") {
  FieldSpec q = FieldSpec::rational();
  AlgebraRef l = sl2(q);
  Grading d = grading_from_euler(l, sl2_half_h(l));

  ExtensionResult ext = universal_extension(l, d);
  CHECK(ext.total->dim() == 3);
  CHECK(ext.kernel.dim() == 0);
  CHECK(inverse(ext.projection).has_value());
  CHECK(is_hom(ext.total, l, ext.projection));
  CHECK(ext.projection.apply(ext.section.coords) == d.euler.coords);
  CHECK(ext.lifted_grading.g1.dim() == 1);
  CHECK(ext.lifted_grading.g0.dim() == 1);
  CHECK(ext.lifted_grading.gm1.dim() == 1);
  CHECK(derived_subalgebra(ext.total).dim() == 3);

  // universality into the identity extension collapses to the projection
  ExtensionResult idext = make_extension(d, l, Matrix::identity(q, 3), d.euler);
  Matrix al = universality_map(ext, idext);
  CHECK(al == ext.projection);
  CHECK(is_hom(ext.total, l, al));
}

TEST_CASE("universal extension of the trivial pair") {
  FieldSpec q = FieldSpec::rational();
  TkkResult t = tkk(trivial_pair(q, 1, 1));
  ExtensionResult ext = universal_extension(t.algebra, t.grading);

  CHECK(ext.total->dim() == 4);
  CHECK(ext.kernel.dim() == 1);
  CHECK(center(ext.total).contains(ext.kernel));
  CHECK(ext.lifted_grading.g1.dim() == 1);
  CHECK(ext.lifted_grading.g0.dim() == 2);
  CHECK(ext.lifted_grading.gm1.dim() == 1);
  CHECK_FALSE(is_perfect(ext.total));
  CHECK(ext.section.coords == unit(q, 4, 3));

  // the derived algebra is exactly the wedge-class part
  Subspace wedge = Subspace::span_vecs(
      q, 4, {unit(q, 4, 0), unit(q, 4, 1), unit(q, 4, 2)});
  CHECK(derived_subalgebra(ext.total) == wedge);

  // the projection restricts to bijections between the outer components
  for (int side = 0; side < 2; ++side) {
    const Subspace& up = side == 0 ? ext.lifted_grading.g1 : ext.lifted_grading.gm1;
    const Subspace& dn = side == 0 ? t.grading.g1 : t.grading.gm1;
    REQUIRE(up.dim() == dn.dim());
    Vec img = ext.projection.apply(up.basis_vector(0));
    CHECK(dn.contains_vector(img));
    CHECK_FALSE(vec_is_zero(img));
  }

  AlgebraRef lz = sl2_with_center(q);
  CHECK_THROWS_AS(
      universal_extension(lz, grading_from_euler(lz, sl2_half_h(lz))),
      Hypothesis71Violated);
}

TEST_CASE("centers match across extensions") {
  FieldSpec q = FieldSpec::rational();

  AlgebraRef l = sl2(q);
  Grading d = grading_from_euler(l, sl2_half_h(l));
  TkkResult t = tkk(trivial_pair(q, 1, 1));
  CocycleSetup c = cocycle_setup(q);

  std::vector<ExtensionResult> exts = {
      universal_extension(l, d),
      universal_extension(t.algebra, t.grading),
      c.ext,
      make_extension(d, l, Matrix::identity(q, 3), d.euler),
  };
  for (const ExtensionResult& e : exts) {
    Subspace pre = preimage_subspace(e.projection, center(e.base_grading.algebra));
    CHECK(pre == center(e.total));
  }

  // the center of the quotient by the center vanishes
  CHECK(second_center(l) == center(l));
  CHECK(second_center(t.algebra) == center(t.algebra));
  CHECK(second_center(c.total) == center(c.total));
}

TEST_CASE("grading lifts") {
  FieldSpec q = FieldSpec::rational();
  AlgebraRef l = sl2(q);
  Grading d = grading_from_euler(l, sl2_half_h(l));

  ExtensionResult idext = make_extension(d, l, Matrix::identity(q, 3), d.euler);
  CHECK(idext.kernel.dim() == 0);
  CHECK(idext.lifted_grading.g1 == d.g1);
  CHECK(idext.lifted_grading.g0 == d.g0);
  CHECK(idext.lifted_grading.gm1 == d.gm1);

  // shifting the section by a kernel element keeps the component subspaces
  TkkResult t = tkk(trivial_pair(q, 1, 1));
  ExtensionResult ext = universal_extension(t.algebra, t.grading);
  Vec shifted = vec_add(ext.section.coords, ext.kernel.basis_vector(0));
  Grading g2 = lift_grading(ext.total, make_element(ext.total, shifted),
                            t.algebra, ext.projection);
  CHECK(g2.g1 == ext.lifted_grading.g1);
  CHECK(g2.g0 == ext.lifted_grading.g0);
  CHECK(g2.gm1 == ext.lifted_grading.gm1);
  CHECK(g2.euler.coords != ext.section.coords);

  // not a homomorphism: scaling one root vector alone
  Matrix bad = Matrix::identity(q, 3);
  bad.at(0, 0) = Scalar::from_int(q, 2);
  CHECK_THROWS_AS(lift_grading(l, d.euler, l, bad), NotCentralExtension);

  // homomorphism but not surjective
  CHECK_THROWS_AS(lift_grading(l, d.euler, l, Matrix(q, 3, 3)), NotCentralExtension);

  // surjective homomorphism with non-central kernel
  AlgebraRef lz = sl2_with_center(q);
  AlgebraRef line = abelian(q, 1);
  Matrix zc(q, 1, 4);
  zc.at(0, 3) = Scalar::one(q);
  CHECK_THROWS_AS(lift_grading(lz, basis_element(lz, 3), line, zc), NotCentralExtension);

  // base grading element failing the degree-zero span condition
  CHECK_THROWS_AS(lift_grading(lz, sl2_half_h(lz), lz, Matrix::identity(q, 4)),
                  Hypothesis71Violated);

  // base image that is not a grading element at all
  CHECK_THROWS_AS(lift_grading(l, basis_element(l, 0), l, Matrix::identity(q, 3)),
                  NotTripotent);
}

TEST_CASE("cocycle extensions") {
  FieldSpec q = FieldSpec::rational();

  Matrix zero(q, 1, 1);
  auto [flat, fd] = cocycle_extension(1, 1, zero);
  CHECK(flat->dim() == 4);
  CHECK(vec_is_zero(flat->structure(0, 2)));
  CHECK(center(flat).dim() == 1);
  CHECK(fd.g0.dim() == 2);

  CocycleSetup c = cocycle_setup(q);
  CHECK(c.total->structure(0, 2) == unit(q, 4, 3));  // [v0, w0] = z
  CHECK(c.ext.lifted_grading.g1.dim() == 1);
  CHECK(c.ext.lifted_grading.g0.dim() == 2);
  CHECK(c.ext.lifted_grading.gm1.dim() == 1);
  CHECK(c.ext.kernel.dim() == 1);
  CHECK(c.ext.kernel.contains_vector(unit(q, 4, 3)));

  // the universal extension maps onto it isomorphically
  ExtensionResult univ = universal_extension(c.base.algebra, c.base.grading);
  Matrix al = universality_map(univ, c.ext);
  CHECK(is_hom(univ.total, c.total, al));
  CHECK(inverse(al).has_value());
  CHECK(c.ext.projection * al == univ.projection);
  Matrix expect(q, 4, 4);
  expect.at(0, 0) = -Scalar::one(q);  // v0^d0 -> -v0
  expect.at(3, 1) = Scalar::one(q);   // v0^w0 -> z
  expect.at(2, 2) = -Scalar::one(q);  // d0^w0 -> -w0
  expect.at(1, 3) = Scalar::one(q);   // adjoined generator -> E
  CHECK(al == expect);

  AlgebraRef l = sl2(q);
  Grading d = grading_from_euler(l, sl2_half_h(l));
  ExtensionResult other = make_extension(d, l, Matrix::identity(q, 3), d.euler);
  CHECK_THROWS_AS(universality_map(univ, other), AlgebraMismatch);
}

TEST_CASE("group projections over F5") {
  FieldSpec f = FieldSpec::prime(5);
  CocycleSetup c = cocycle_setup(f);
  const Grading& bg = c.ext.base_grading;
  const Grading& tg = c.ext.lifted_grading;

  CHECK(grading_orbit(bg, 100000).size() == 25);
  CHECK(grading_orbit(tg, 100000).size() == 25);

  Element vhat = make_element(c.total, tg.g1.basis_vector(0));
  Element what = make_element(c.total, tg.gm1.basis_vector(0));
  Element v = make_element(c.base.algebra, bg.g1.basis_vector(0));
  Element w = make_element(c.base.algebra, bg.gm1.basis_vector(0));

  // lifted generators commute up to the center, which acts trivially
  Matrix comm = exp_ad(tg, 1, vhat).matrix * exp_ad(tg, -1, what).matrix *
                exp_ad(tg, 1, make_element(c.total, vec_scale(-Scalar::one(f), vhat.coords))).matrix *
                exp_ad(tg, -1, make_element(c.total, vec_scale(-Scalar::one(f), what.coords))).matrix;
  CHECK(comm.is_identity());

  // closure of the generator pairs; the projected matrix must only depend
  // on the lifted one
  std::vector<std::pair<Matrix, Matrix>> gens = {
      {exp_ad(tg, 1, vhat).matrix, exp_ad(bg, 1, v).matrix},
      {exp_ad(tg, -1, what).matrix, exp_ad(bg, -1, w).matrix},
  };
  std::map<std::string, std::pair<Matrix, Matrix>> seen;
  std::vector<std::pair<Matrix, Matrix>> queue = {
      {Matrix::identity(f, 4), Matrix::identity(f, 3)}};
  seen[queue[0].first.str()] = queue[0];
  while (!queue.empty()) {
    auto [hat, base] = queue.back();
    queue.pop_back();
    for (const auto& [gh, gb] : gens) {
      Matrix nh = gh * hat, nb = gb * base;
      auto it = seen.find(nh.str());
      if (it == seen.end()) {
        seen[nh.str()] = {nh, nb};
        queue.push_back({nh, nb});
      } else {
        CHECK(it->second.second == nb);
      }
    }
  }
  CHECK(seen.size() == 25);

  std::map<std::string, bool> base_seen;
  for (const auto& [key, pr] : seen) {
    base_seen[pr.second.str()] = true;
    CHECK(stabilizer_class(make_automorphism(c.total, pr.first), tg) ==
          stabilizer_class(make_automorphism(c.base.algebra, pr.second), bg));
  }
  CHECK(base_seen.size() == 25);  // bijective here, so the kernel is trivial

  CHECK(orbit_enumerate(tg, minus_filtration(tg), 100000).size() ==
        orbit_enumerate(bg, minus_filtration(bg), 100000).size());
  CHECK(orbit_enumerate(tg, plus_filtration(tg), 100000).size() ==
        orbit_enumerate(bg, plus_filtration(bg), 100000).size());
}

TEST_CASE("word transport") {
  FieldSpec f = FieldSpec::prime(5);
  CocycleSetup c = cocycle_setup(f);

  GroupWord empty{c.ext.base_grading, {}};
  CHECK(lift_word(c.ext, empty).letters.empty());
  CHECK(push_word(c.ext, lift_word(c.ext, empty)).letters.empty());

  GroupWord w{c.ext.base_grading,
              {WordLetter{LetterKind::exp_plus, sv(f, {2}), Scalar::one(f)},
               WordLetter{LetterKind::dilation, {}, Scalar::from_int(f, 3)},
               WordLetter{LetterKind::exp_minus, sv(f, {4}), Scalar::one(f)}}};
  GroupWord lifted = lift_word(c.ext, w);
  REQUIRE(lifted.letters.size() == 3);
  CHECK(lifted.letters[1].scalar == Scalar::from_int(f, 3));

  Matrix down = evaluate_word(w).matrix;
  Matrix up = evaluate_word(lifted).matrix;
  CHECK(c.ext.projection * up == down * c.ext.projection);

  GroupWord back = push_word(c.ext, lifted);
  REQUIRE(back.letters.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(back.letters[i].kind == w.letters[i].kind);
    CHECK(back.letters[i].coords == w.letters[i].coords);
    CHECK(back.letters[i].scalar == w.letters[i].scalar);
  }

  // a word on an unrelated grading is rejected
  AlgebraRef l = sl2(f);
  Grading d = grading_from_euler(l, sl2_half_h(l));
  GroupWord bad{d, {}};
  CHECK_THROWS_AS(lift_word(c.ext, bad), AlgebraMismatch);

  // the identity extension transports words verbatim
  FieldSpec q = FieldSpec::rational();
  AlgebraRef lq = sl2(q);
  Grading dq = grading_from_euler(lq, sl2_half_h(lq));
  ExtensionResult idext = make_extension(dq, lq, Matrix::identity(q, 3), dq.euler);
  GroupWord wq{dq,
               {WordLetter{LetterKind::exp_plus, sv(q, {1}), Scalar::one(q)},
                WordLetter{LetterKind::exp_minus, sv(q, {-2}), Scalar::one(q)}}};
  GroupWord liftedq = lift_word(idext, wq);
  CHECK(evaluate_word(liftedq).matrix == evaluate_word(wq).matrix);
  GroupWord backq = push_word(idext, liftedq);
  CHECK(backq.letters[1].coords == wq.letters[1].coords);
}
