#pragma once
// Shared constructions for the test binaries.
#include <initializer_list>

#include "jpgeom/grading.hpp"

namespace jpgeom::testutil {

inline Vec sv(const FieldSpec& f, std::initializer_list<long> xs) {
  Vec v;
  for (long x : xs) v.push_back(Scalar::from_int(f, x));
  return v;
}

// Basis order (e, h, f): [e,h] = -2e, [e,f] = h, [h,f] = -2f.
inline AlgebraRef sl2(const FieldSpec& f) {
  auto mk = [&](long a, long b, long c) {
    return Vec{Scalar::from_int(f, a), Scalar::from_int(f, b), Scalar::from_int(f, c)};
  };
  std::vector<std::vector<Vec>> t(3, std::vector<Vec>(3, mk(0, 0, 0)));
  t[0][1] = mk(-2, 0, 0);
  t[1][0] = mk(2, 0, 0);
  t[0][2] = mk(0, 1, 0);
  t[2][0] = mk(0, -1, 0);
  t[1][2] = mk(0, 0, -2);
  t[2][1] = mk(0, 0, 2);
  return LieAlgebra::create(f, {"e", "h", "f"}, t);
}

// sl2 plus a one-dimensional center, basis (e, h, f, z).
inline AlgebraRef sl2_with_center(const FieldSpec& f) {
  auto mk = [&](long a, long b, long c, long d) {
    return Vec{Scalar::from_int(f, a), Scalar::from_int(f, b), Scalar::from_int(f, c),
               Scalar::from_int(f, d)};
  };
  std::vector<std::vector<Vec>> t(4, std::vector<Vec>(4, mk(0, 0, 0, 0)));
  auto put = [&](std::size_t i, std::size_t j, Vec v) {
    t[j][i] = vec_scale(-Scalar::one(f), v);
    t[i][j] = std::move(v);
  };
  put(0, 1, mk(-2, 0, 0, 0));
  put(0, 2, mk(0, 1, 0, 0));
  put(1, 2, mk(0, 0, -2, 0));
  return LieAlgebra::create(f, {"e", "h", "f", "z"}, t);
}

// Basis (e12, e13, e23, e21, e31, e32, h1, h2), h_i = E_ii - E_{i+1,i+1}.
inline AlgebraRef sl3(const FieldSpec& f) {
  auto m = [&](std::size_t i, std::size_t j) {
    Matrix x(f, 3, 3);
    x.at(i, j) = Scalar::one(f);
    return x;
  };
  Matrix h1(f, 3, 3), h2(f, 3, 3);
  h1.at(0, 0) = Scalar::one(f);
  h1.at(1, 1) = -Scalar::one(f);
  h2.at(1, 1) = Scalar::one(f);
  h2.at(2, 2) = -Scalar::one(f);
  return algebra_from_matrices(f, {"e12", "e13", "e23", "e21", "e31", "e32", "h1", "h2"},
                               {m(0, 1), m(0, 2), m(1, 2), m(1, 0), m(2, 0), m(2, 1), h1, h2});
}

inline Element sl2_half_h(const AlgebraRef& l) {
  const FieldSpec& f = l->field();
  Vec v = vec_zero(f, l->dim());
  v[1] = Scalar::from_int(f, 2).inverse();
  return make_element(l, v);
}

// Euler element of the 1|2 block split of sl3: (2 h1 + h2)/3.
inline Element sl3_block12_euler(const AlgebraRef& l) {
  const FieldSpec& f = l->field();
  Scalar third = Scalar::from_int(f, 3).inverse();
  Vec v = vec_zero(f, 8);
  v[6] = Scalar::from_int(f, 2) * third;
  v[7] = third;
  return make_element(l, v);
}

// exp(ad x) for nilpotent ad(x); terminates on the first vanishing power.
inline Matrix expad(const AlgebraRef& l, const Vec& x) {
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

// Small deterministic generator for test sampling.
class TestRng {
 public:
  explicit TestRng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_ >> 32;
  }
  long range(long lo, long hi) {  // inclusive bounds
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::uint64_t state_;
};

}  // namespace jpgeom::testutil
