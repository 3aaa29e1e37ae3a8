#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace gcoh {

// Base class for all errors raised by the library on bad input or misuse.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Coefficient field: the rationals, or a prime field of order p < 2^31.
struct FieldSpec {
  enum class Kind { Rationals, PrimeField };

  Kind kind = Kind::Rationals;
  uint32_t p = 0;  // modulus, PrimeField only

  static FieldSpec rationals() { return FieldSpec{Kind::Rationals, 0}; }
  static FieldSpec primeField(uint32_t p);

  bool operator==(const FieldSpec&) const = default;

  std::string str() const;
};

bool isPrime(uint64_t n);

// An element of a FieldSpec field.  Rationals are kept in lowest terms with
// positive denominator (mpq canonical form); prime-field values in [0, p).
class Scalar {
 public:
  Scalar() : field_(FieldSpec::rationals()) {}  // zero over QQ

  static Scalar zero(const FieldSpec& f);
  static Scalar one(const FieldSpec& f);
  static Scalar ofInt(const FieldSpec& f, long n);
  static Scalar ofFraction(const FieldSpec& f, const mpz_class& num, const mpz_class& den);
  static Scalar rational(mpq_class q);
  static Scalar mod(uint32_t p, uint64_t v);

  const FieldSpec& field() const { return field_; }
  bool isZero() const;
  bool isOne() const;

  Scalar operator-() const;
  Scalar inverse() const;  // throws Error on zero

  Scalar operator+(const Scalar&) const;
  Scalar operator-(const Scalar&) const;
  Scalar operator*(const Scalar&) const;
  Scalar operator/(const Scalar&) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar&) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Rationals only.
  const mpq_class& rationalValue() const;
  // PrimeField only.
  uint64_t residue() const { return r_; }

  std::string str() const;

 private:
  FieldSpec field_;
  mpq_class q_;      // Rationals
  uint64_t r_ = 0;   // PrimeField

  void checkSameField(const Scalar& o) const;
};

}  // namespace gcoh
