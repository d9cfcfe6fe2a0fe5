#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>

#include "jpgeom/linalg.hpp"

using namespace jpgeom;

namespace {

const FieldSpec Q = FieldSpec::rational();
const FieldSpec F5 = FieldSpec::prime(5);

Scalar q(const std::string& s) { return Scalar::from_string(Q, s); }
Scalar f5(long v) { return Scalar::from_int(F5, v); }

Matrix mat(const FieldSpec& f, std::size_t r, std::size_t c,
           const std::vector<long>& e) {
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Scalar::from_int(f, e[i * c + j]);
  return m;
}

}  // namespace

TEST_CASE("field construction enforces p >= 5") {
  CHECK_THROWS_AS(FieldSpec::prime(2), InvalidField);
  CHECK_THROWS_AS(FieldSpec::prime(3), InvalidField);
  CHECK_THROWS_AS(FieldSpec::prime(6), InvalidField);
  CHECK(FieldSpec::prime(5).p == 5);
  CHECK(FieldSpec::prime(7).p == 7);
}

TEST_CASE("rational scalars stay canonical") {
  CHECK(q("2/4").str() == "1/2");
  CHECK(q("-3/-6").str() == "1/2");
  CHECK(q("4/2").str() == "2");
  CHECK((q("1/3") + q("1/6")).str() == "1/2");
  CHECK((q("2/3") * q("3/2")).is_one());
  CHECK((q("1") / q("-2")).str() == "-1/2");
  CHECK_THROWS_AS(q("1") / q("0"), DivisionByZero);
  CHECK_THROWS_AS(Scalar::from_string(Q, "abc"), ParseError);
}

TEST_CASE("prime field arithmetic") {
  CHECK((f5(3) + f5(4)) == f5(2));
  CHECK((f5(2) - f5(4)) == f5(3));
  CHECK((f5(3) * f5(4)) == f5(2));
  CHECK(f5(3).inverse() == f5(2));
  CHECK(f5(4).inverse() == f5(4));
  CHECK((-f5(2)) == f5(3));
  CHECK(Scalar::from_string(F5, "-1") == f5(4));
  CHECK(Scalar::from_string(F5, "12") == f5(2));
  CHECK_THROWS_AS(f5(0).inverse(), DivisionByZero);
}

TEST_CASE("mixing fields is an error") {
  CHECK_THROWS_AS(q("1") + f5(1), FieldMismatch);
  CHECK(q("1") != f5(1));
}

TEST_CASE("rref on trivial inputs") {
  Matrix z(Q, 2, 3);
  auto [rz, rkz] = rref(z);
  CHECK(rz == z);
  CHECK(rkz == 0);
  Matrix id = Matrix::identity(Q, 3);
  auto [ri, rki] = rref(id);
  CHECK(ri == id);
  CHECK(rki == 3);
}

TEST_CASE("rref of a rank-1 rational matrix") {
  Matrix m = mat(Q, 2, 2, {2, 4, 1, 2});
  auto [r, rk] = rref(m);
  CHECK(rk == 1);
  CHECK(r == mat(Q, 2, 2, {1, 2, 0, 0}));
}

TEST_CASE("rref is idempotent") {
  Matrix m = mat(F5, 3, 4, {1, 2, 3, 4, 2, 4, 1, 3, 0, 1, 1, 1});
  auto [r1, k1] = rref(m);
  auto [r2, k2] = rref(r1);
  CHECK(r1 == r2);
  CHECK(k1 == k2);
}

TEST_CASE("solve basics") {
  Matrix id = Matrix::identity(Q, 2);
  Matrix b = mat(Q, 2, 1, {3, 7});
  CHECK(*solve(id, b) == b);

  Matrix zero(Q, 2, 2);
  CHECK(!solve(zero, b).has_value());

  // free variable zeroed: [[1,1]] x = [3] -> (3,0)
  Matrix a = mat(Q, 1, 2, {1, 1});
  Matrix rhs = mat(Q, 1, 1, {3});
  CHECK(*solve(a, rhs) == mat(Q, 2, 1, {3, 0}));
}

TEST_CASE("solve returns a genuine solution on random systems") {
  // deterministic pseudo-random entries
  long s = 1;
  auto next = [&s]() {
    s = (s * 1103515245 + 12345) % 2147483647;
    return s % 5 - 2;
  };
  for (int trial = 0; trial < 20; ++trial) {
    Matrix m(F5, 3, 4);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 4; ++j) m.at(i, j) = Scalar::from_int(F5, next());
    Matrix x(F5, 4, 1);
    for (std::size_t j = 0; j < 4; ++j) x.at(j, 0) = Scalar::from_int(F5, next());
    Matrix b = m * x;
    auto x2 = solve(m, b);
    REQUIRE(x2.has_value());
    CHECK(m * *x2 == b);
  }
}

TEST_CASE("kernel basis spans the null space") {
  Matrix a = mat(Q, 2, 3, {1, 2, 3, 2, 4, 6});
  Matrix k = kernel_basis(a);
  CHECK(k.rows() == 2);
  for (std::size_t i = 0; i < k.rows(); ++i)
    CHECK(vec_is_zero(a.apply(k.row(i))));
  Matrix full_rank = Matrix::identity(Q, 3);
  CHECK(kernel_basis(full_rank).rows() == 0);
}

TEST_CASE("matrix inverse") {
  Matrix m = mat(Q, 2, 2, {1, 2, 3, 4});
  auto mi = inverse(m);
  REQUIRE(mi.has_value());
  CHECK((m * *mi).is_identity());
  CHECK(!inverse(mat(Q, 2, 2, {1, 2, 2, 4})).has_value());
}

TEST_CASE("subspace sum and intersection") {
  auto e = [&](int i) {
    Vec v = vec_zero(Q, 3);
    v[i] = Scalar::one(Q);
    return v;
  };
  Subspace u = Subspace::span_vecs(Q, 3, {e(0), e(1)});
  Subspace w = Subspace::span_vecs(Q, 3, {e(1), e(2)});
  Subspace z = Subspace::zero(Q, 3);
  Subspace full = Subspace::full(Q, 3);

  CHECK(u.sum(z) == u);
  CHECK(u.intersect(full) == u);
  CHECK(u.sum(w) == full);
  CHECK(u.intersect(w) == Subspace::span_vecs(Q, 3, {e(1)}));
}

TEST_CASE("subspace equality via double inclusion") {
  Vec a{q("1"), q("2")};
  Vec b{q("2"), q("4")};
  Vec c{q("0"), q("1")};
  Subspace s1 = Subspace::span_vecs(Q, 2, {a});
  Subspace s2 = Subspace::span_vecs(Q, 2, {b});
  Subspace s3 = Subspace::span_vecs(Q, 2, {a, c});
  CHECK(s1 == s2);
  CHECK(s1.contains(s2));
  CHECK(s2.contains(s1));
  CHECK(s3.contains(s1));
  CHECK(!s1.contains(s3));
  CHECK(s1 != s3);
}

TEST_CASE("is_complement") {
  auto e = [&](int i) {
    Vec v = vec_zero(F5, 2);
    v[i] = Scalar::one(F5);
    return v;
  };
  Subspace e1 = Subspace::span_vecs(F5, 2, {e(0)});
  Subspace e2 = Subspace::span_vecs(F5, 2, {e(1)});
  CHECK(e1.is_complement(e2));
  CHECK(!e1.is_complement(e1));

  // span(e1) has exactly 5 complements among the 6 lines of F5^2
  int complements = 0;
  int lines = 0;
  std::set<std::string> seen;
  for (long a = 0; a < 5; ++a)
    for (long b = 0; b < 5; ++b) {
      if (a == 0 && b == 0) continue;
      Vec v{f5(a), f5(b)};
      Subspace l = Subspace::span_vecs(F5, 2, {v});
      if (!seen.insert(l.str()).second) continue;
      ++lines;
      if (e1.is_complement(l)) ++complements;
    }
  CHECK(lines == 6);
  CHECK(complements == 5);
}

TEST_CASE("subspace counts over F5 match Gaussian binomials") {
  // enumerate all subspaces of F5^n for n <= 3 by spanning every tuple
  auto all_vectors = [](std::size_t n) {
    std::vector<Vec> out;
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 5;
    for (std::size_t code = 0; code < total; ++code) {
      Vec v = vec_zero(F5, n);
      std::size_t c = code;
      for (std::size_t i = 0; i < n; ++i) {
        v[i] = Scalar::from_int(F5, static_cast<long>(c % 5));
        c /= 5;
      }
      out.push_back(v);
    }
    return out;
  };

  // n=2: 1 + 6 + 1; n=3: 1 + 31 + 31 + 1
  for (std::size_t n = 2; n <= 3; ++n) {
    auto vecs = all_vectors(n);
    std::set<std::string> by_dim[4];
    for (std::size_t i = 0; i < vecs.size(); ++i)
      for (std::size_t j = i; j < vecs.size(); ++j) {
        Subspace s = Subspace::span_vecs(F5, n, {vecs[i], vecs[j]});
        by_dim[s.dim()].insert(s.str());
      }
    // dim-3 spans need three generators; add the full space by hand
    if (n == 3) by_dim[3].insert(Subspace::full(F5, 3).str());
    CHECK(by_dim[0].size() == 1);
    if (n == 2) {
      CHECK(by_dim[1].size() == 6);
      CHECK(by_dim[2].size() == 1);
    } else {
      CHECK(by_dim[1].size() == 31);
      CHECK(by_dim[2].size() == 31);
    }
  }
}

TEST_CASE("quotient coordinates are canonical") {
  // f0 = span{(1,0,2),(0,1,3)} in Q^3; quotient is 1-dimensional
  Subspace s = Subspace::span_vecs(Q, 3, {{q("1"), q("0"), q("2")}, {q("0"), q("1"), q("3")}});
  CHECK(s.quotient_dim() == 1);
  Vec v{q("1"), q("1"), q("6")};
  Vec qc = s.quotient_coords(v);
  REQUIRE(qc.size() == 1);
  CHECK(qc[0] == q("1"));  // v - row0 - row1 = (0,0,1)
  CHECK(vec_is_zero(s.quotient_coords(s.basis_vector(0))));
}

TEST_CASE("coordinates round-trip") {
  Subspace s = Subspace::span_vecs(Q, 3, {{q("1"), q("0"), q("2")}, {q("0"), q("1"), q("3")}});
  Vec v = vec_add(s.basis_vector(0), vec_scale(q("5"), s.basis_vector(1)));
  auto c = s.coordinates_of(v);
  REQUIRE(c.has_value());
  CHECK(s.from_coordinates(*c) == v);
  Vec outside{q("0"), q("0"), q("1")};
  CHECK(!s.coordinates_of(outside).has_value());
}

TEST_CASE("scalar serialization round-trip") {
  for (const char* s : {"0", "1", "-1", "1/2", "-7/3", "22"})
    CHECK(Scalar::from_string(Q, s).str() == s);
  for (long v : {0L, 1L, 4L})
    CHECK(Scalar::from_string(F5, std::to_string(v)).str() == std::to_string(v));
}
