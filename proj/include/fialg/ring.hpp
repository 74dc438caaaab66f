#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <variant>

namespace fialg {

enum class RingKind { integers, rationals, modular };

// Which commutative unital coefficient ring a value lives in.
struct RingSpec {
  RingKind kind = RingKind::rationals;
  std::int64_t modulus = 0;  // only meaningful for `modular`, always >= 2 there

  static RingSpec integers() { return {RingKind::integers, 0}; }
  static RingSpec rationals() { return {RingKind::rationals, 0}; }
  static RingSpec modular(std::int64_t n);

  std::string name() const;

  friend bool operator==(const RingSpec& a, const RingSpec& b) {
    return a.kind == b.kind && a.modulus == b.modulus;
  }
};

// 2a = 0 implies a = 0. Integers and rationals: always; Z/n: n odd.
bool is_two_torsionfree(const RingSpec& spec);

// Exact ring element. Rationals are kept in lowest terms with positive
// denominator; residues live in [0, n).
class RingValue {
 public:
  RingValue() : RingValue(RingSpec::rationals()) {}
  explicit RingValue(const RingSpec& spec);  // zero

  static RingValue zero(const RingSpec& spec) { return RingValue(spec); }
  static RingValue one(const RingSpec& spec) { return from_int(spec, 1); }
  static RingValue from_int(const RingSpec& spec, long value);
  static RingValue from_rational(const RingSpec& spec, const mpq_class& value);  // integers/modular need den 1 (or a unit den)
  // Decimal integers, "p/q" for rationals. Throws ParseError.
  static RingValue parse(const RingSpec& spec, const std::string& text);

  const RingSpec& spec() const noexcept { return spec_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  std::optional<RingValue> try_inverse() const;
  RingValue inverse() const;  // throws NotAUnit

  std::string to_string() const;

  // Integer representative: the integer itself, the residue in [0, n), or
  // the rational when its denominator is 1. Throws SpecMismatch otherwise.
  mpz_class to_integer() const;
  mpq_class to_rational() const;

  RingValue& operator+=(const RingValue& other);
  RingValue& operator-=(const RingValue& other);
  RingValue& operator*=(const RingValue& other);
  // this += a * b without a temporary; the hot path of every kernel.
  void add_product(const RingValue& a, const RingValue& b);

  friend RingValue operator+(RingValue a, const RingValue& b) { return a += b; }
  friend RingValue operator-(RingValue a, const RingValue& b) { return a -= b; }
  friend RingValue operator*(RingValue a, const RingValue& b) { return a *= b; }
  RingValue operator-() const;

  friend bool operator==(const RingValue& a, const RingValue& b);
  friend bool operator!=(const RingValue& a, const RingValue& b) { return !(a == b); }

 private:
  void require_same(const RingValue& other) const;

  RingSpec spec_;
  std::variant<mpz_class, mpq_class, std::int64_t> value_;
};

RingValue ring_add(const RingValue& a, const RingValue& b);
RingValue ring_sub(const RingValue& a, const RingValue& b);
RingValue ring_mul(const RingValue& a, const RingValue& b);

// Small random elements, for test corpora and generators.
RingValue random_scalar(const RingSpec& spec, std::mt19937_64& gen);
RingValue random_unit(const RingSpec& spec, std::mt19937_64& gen);

}  // namespace fialg
