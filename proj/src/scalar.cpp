#include "jpgeom/scalar.hpp"

#include <cstdlib>

namespace jpgeom {

namespace {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  // extended Euclid on (a, p); a in [1, p)
  std::int64_t t = 0, newt = 1;
  std::int64_t r = static_cast<std::int64_t>(p), newr = static_cast<std::int64_t>(a);
  while (newr != 0) {
    std::int64_t q = r / newr;
    std::int64_t tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) throw DivisionByZero("no inverse mod p");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p == 2 || p == 3) throw InvalidField("p must not be 2 or 3");
  if (p >= (1ull << 31)) throw InvalidField("p too large");
  if (!is_prime_u64(p)) throw InvalidField("p is not prime");
  return FieldSpec{FieldKind::prime, p};
}

std::string FieldSpec::str() const {
  return kind == FieldKind::rational ? "q" : "fp:" + std::to_string(p);
}

Scalar Scalar::zero(const FieldSpec& f) {
  Scalar s;
  s.field_ = f;
  return s;
}

Scalar Scalar::one(const FieldSpec& f) { return from_int(f, 1); }

Scalar Scalar::from_int(const FieldSpec& f, long v) {
  Scalar s;
  s.field_ = f;
  if (f.kind == FieldKind::rational) {
    s.q_ = v;
  } else {
    long m = v % static_cast<long>(f.p);
    if (m < 0) m += static_cast<long>(f.p);
    s.r_ = static_cast<std::uint64_t>(m);
  }
  return s;
}

Scalar Scalar::from_string(const FieldSpec& f, const std::string& str) {
  Scalar s;
  s.field_ = f;
  if (str.empty()) throw ParseError("empty scalar");
  if (f.kind == FieldKind::rational) {
    try {
      s.q_ = mpq_class(str, 10);
    } catch (const std::invalid_argument&) {
      throw ParseError("bad rational: " + str);
    }
    if (s.q_.get_den() == 0) throw ParseError("zero denominator: " + str);
    s.q_.canonicalize();
  } else {
    std::size_t i = 0;
    bool neg = false;
    if (str[i] == '-') {
      neg = true;
      ++i;
    }
    if (i == str.size()) throw ParseError("bad residue: " + str);
    mpz_class z;
    try {
      z = mpz_class(str.substr(i), 10);
    } catch (const std::invalid_argument&) {
      throw ParseError("bad residue: " + str);
    }
    mpz_class m = z % static_cast<unsigned long>(f.p);
    std::uint64_t r = m.get_ui();
    if (neg && r != 0) r = f.p - r;
    s.r_ = r;
  }
  return s;
}

bool Scalar::is_zero() const {
  return field_.kind == FieldKind::rational ? q_ == 0 : r_ == 0;
}

bool Scalar::is_one() const {
  return field_.kind == FieldKind::rational ? q_ == 1 : r_ == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
  if (!(field_ == o.field_)) throw FieldMismatch();
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  Scalar s;
  s.field_ = field_;
  if (field_.kind == FieldKind::rational) {
    s.q_ = q_ + o.q_;
  } else {
    s.r_ = r_ + o.r_;
    if (s.r_ >= field_.p) s.r_ -= field_.p;
  }
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same_field(o);
  Scalar s;
  s.field_ = field_;
  if (field_.kind == FieldKind::rational) {
    s.q_ = q_ - o.q_;
  } else {
    s.r_ = r_ + field_.p - o.r_;
    if (s.r_ >= field_.p) s.r_ -= field_.p;
  }
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  Scalar s;
  s.field_ = field_;
  if (field_.kind == FieldKind::rational) {
    s.q_ = q_ * o.q_;
  } else {
    s.r_ = (r_ * o.r_) % field_.p;  // p < 2^31 so the product fits
  }
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  Scalar s;
  s.field_ = field_;
  if (field_.kind == FieldKind::rational) {
    s.q_ = -q_;
  } else {
    s.r_ = r_ == 0 ? 0 : field_.p - r_;
  }
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  Scalar s;
  s.field_ = field_;
  if (field_.kind == FieldKind::rational) {
    s.q_ = 1 / q_;
  } else {
    s.r_ = mod_inverse(r_, field_.p);
  }
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  if (!(field_ == o.field_)) return false;
  return field_.kind == FieldKind::rational ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::str() const {
  if (field_.kind == FieldKind::rational) return q_.get_str();
  return std::to_string(r_);
}

}  // namespace jpgeom
