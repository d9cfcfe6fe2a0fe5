#pragma once
#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "jpgeom/errors.hpp"

namespace jpgeom {

enum class FieldKind { rational, prime };

// The base field: Q or F_p with p prime, p >= 5. Everything downstream
// divides by 2 and 3, so those primes are rejected at construction.
struct FieldSpec {
  FieldKind kind = FieldKind::rational;
  std::uint64_t p = 0;

  static FieldSpec rational() { return FieldSpec{FieldKind::rational, 0}; }
  static FieldSpec prime(std::uint64_t p);

  bool operator==(const FieldSpec&) const = default;
  std::string str() const;
};

// One exact field element. Rationals are kept canonical (lowest terms,
// positive denominator); residues lie in [0, p).
class Scalar {
 public:
  Scalar() : field_(FieldSpec::rational()) {}
  static Scalar zero(const FieldSpec& f);
  static Scalar one(const FieldSpec& f);
  static Scalar from_int(const FieldSpec& f, long v);
  static Scalar from_string(const FieldSpec& f, const std::string& s);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws DivisionByZero
  Scalar operator-() const;
  Scalar inverse() const;  // throws DivisionByZero
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const;

 private:
  FieldSpec field_;
  mpq_class q_;          // rational case
  std::uint64_t r_ = 0;  // prime case, residue in [0, p)

  void check_same_field(const Scalar& o) const;
};

}  // namespace jpgeom
