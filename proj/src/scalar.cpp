#include "gcoh/scalar.hpp"

namespace gcoh {

namespace {

uint64_t mulMod(uint64_t a, uint64_t b, uint64_t p) {
  // p < 2^31, so the product fits in 64 bits
  return (a * b) % p;
}

uint64_t powMod(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulMod(r, a, p);
    a = mulMod(a, a, p);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool isPrime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  // deterministic Miller-Rabin; these bases suffice well past 2^31
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (uint64_t a : {2, 7, 61}) {
    uint64_t x = powMod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulMod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldSpec FieldSpec::primeField(uint32_t p) {
  if (p < 2 || !isPrime(p))
    throw Error("field GF(" + std::to_string(p) + "): modulus is not prime");
  return FieldSpec{Kind::PrimeField, p};
}

std::string FieldSpec::str() const {
  if (kind == Kind::Rationals) return "QQ";
  return "GF(" + std::to_string(p) + ")";
}

Scalar Scalar::zero(const FieldSpec& f) {
  Scalar s;
  s.field_ = f;
  return s;
}

Scalar Scalar::one(const FieldSpec& f) { return ofInt(f, 1); }

Scalar Scalar::ofInt(const FieldSpec& f, long n) {
  Scalar s;
  s.field_ = f;
  if (f.kind == FieldSpec::Kind::Rationals) {
    s.q_ = n;
  } else {
    long r = n % static_cast<long>(f.p);
    if (r < 0) r += f.p;
    s.r_ = static_cast<uint64_t>(r);
  }
  return s;
}

Scalar Scalar::ofFraction(const FieldSpec& f, const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error("scalar: zero denominator");
  Scalar s;
  s.field_ = f;
  if (f.kind == FieldSpec::Kind::Rationals) {
    s.q_ = mpq_class(num, den);
    s.q_.canonicalize();
  } else {
    mpz_class p(static_cast<unsigned long>(f.p));
    mpz_class nr = num % p, dr = den % p;
    if (nr < 0) nr += p;
    if (dr < 0) dr += p;
    uint64_t n64 = nr.get_ui(), d64 = dr.get_ui();
    if (d64 == 0) throw Error("scalar: denominator vanishes in " + f.str());
    s.r_ = mulMod(n64, powMod(d64, f.p - 2, f.p), f.p);
  }
  return s;
}

Scalar Scalar::rational(mpq_class q) {
  Scalar s;
  s.field_ = FieldSpec::rationals();
  q.canonicalize();
  s.q_ = q;
  return s;
}

Scalar Scalar::mod(uint32_t p, uint64_t v) {
  Scalar s;
  s.field_ = FieldSpec::primeField(p);
  s.r_ = v % p;
  return s;
}

bool Scalar::isZero() const {
  return field_.kind == FieldSpec::Kind::Rationals ? q_ == 0 : r_ == 0;
}

bool Scalar::isOne() const {
  return field_.kind == FieldSpec::Kind::Rationals ? q_ == 1 : r_ == 1;
}

void Scalar::checkSameField(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw Error("scalar arithmetic across distinct fields: " + field_.str() + " vs " +
                o.field_.str());
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (field_.kind == FieldSpec::Kind::Rationals)
    s.q_ = -q_;
  else if (r_ != 0)
    s.r_ = field_.p - r_;
  return s;
}

Scalar Scalar::inverse() const {
  if (isZero()) throw Error("scalar: inverse of zero");
  Scalar s = *this;
  if (field_.kind == FieldSpec::Kind::Rationals)
    s.q_ = 1 / q_;
  else
    s.r_ = powMod(r_, field_.p - 2, field_.p);
  return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
  checkSameField(o);
  Scalar s = *this;
  if (field_.kind == FieldSpec::Kind::Rationals)
    s.q_ += o.q_;
  else
    s.r_ = (r_ + o.r_) % field_.p;
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  checkSameField(o);
  Scalar s = *this;
  if (field_.kind == FieldSpec::Kind::Rationals)
    s.q_ *= o.q_;
  else
    s.r_ = mulMod(r_, o.r_, field_.p);
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
  if (!(field_ == o.field_)) return false;
  return field_.kind == FieldSpec::Kind::Rationals ? q_ == o.q_ : r_ == o.r_;
}

const mpq_class& Scalar::rationalValue() const {
  if (field_.kind != FieldSpec::Kind::Rationals)
    throw Error("scalar: rationalValue on " + field_.str());
  return q_;
}

std::string Scalar::str() const {
  if (field_.kind == FieldSpec::Kind::Rationals) return q_.get_str();
  return std::to_string(r_);
}

}  // namespace gcoh
