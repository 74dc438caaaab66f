#include "fialg/ring.hpp"

#include <numeric>

#include "fialg/error.hpp"

namespace fialg {

namespace {

std::int64_t reduce(std::int64_t v, std::int64_t n) {
  v %= n;
  return v < 0 ? v + n : v;
}

std::int64_t reduce(const mpz_class& v, std::int64_t n) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), mpz_class(static_cast<long>(n)).get_mpz_t());
  return static_cast<std::int64_t>(r.get_si());
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t n) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % n);
}

// Inverse of a modulo n via extended Euclid, if gcd(a, n) = 1.
std::optional<std::int64_t> inverse_mod(std::int64_t a, std::int64_t n) {
  std::int64_t r0 = n, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1) return std::nullopt;
  return reduce(s0, n);
}

}  // namespace

RingSpec RingSpec::modular(std::int64_t n) {
  if (n < 2) throw Error(ErrorKind::ParseError, "modulus must be at least 2, got " + std::to_string(n));
  return {RingKind::modular, n};
}

std::string RingSpec::name() const {
  switch (kind) {
    case RingKind::integers: return "integers";
    case RingKind::rationals: return "rationals";
    case RingKind::modular: return "modular(" + std::to_string(modulus) + ")";
  }
  return "?";
}

bool is_two_torsionfree(const RingSpec& spec) {
  return spec.kind != RingKind::modular || spec.modulus % 2 == 1;
}

RingValue::RingValue(const RingSpec& spec) : spec_(spec) {
  switch (spec.kind) {
    case RingKind::integers: value_ = mpz_class(0); break;
    case RingKind::rationals: value_ = mpq_class(0); break;
    case RingKind::modular: value_ = std::int64_t{0}; break;
  }
}

RingValue RingValue::from_int(const RingSpec& spec, long value) {
  RingValue r(spec);
  switch (spec.kind) {
    case RingKind::integers: r.value_ = mpz_class(value); break;
    case RingKind::rationals: r.value_ = mpq_class(value); break;
    case RingKind::modular: r.value_ = reduce(static_cast<std::int64_t>(value), spec.modulus); break;
  }
  return r;
}

RingValue RingValue::from_rational(const RingSpec& spec, const mpq_class& value) {
  RingValue r(spec);
  switch (spec.kind) {
    case RingKind::rationals: r.value_ = value; break;
    case RingKind::integers:
      if (value.get_den() != 1)
        throw Error(ErrorKind::SpecMismatch, value.get_str() + " is not an integer");
      r.value_ = value.get_num();
      break;
    case RingKind::modular: {
      const std::int64_t num = reduce(value.get_num(), spec.modulus);
      const std::int64_t den = reduce(value.get_den(), spec.modulus);
      auto inv = inverse_mod(den, spec.modulus);
      if (!inv) throw Error(ErrorKind::NotAUnit, "denominator of " + value.get_str() + " is not a unit mod " +
                                                     std::to_string(spec.modulus));
      r.value_ = mul_mod(num, *inv, spec.modulus);
      break;
    }
  }
  return r;
}

RingValue RingValue::parse(const RingSpec& spec, const std::string& text) {
  try {
    switch (spec.kind) {
      case RingKind::integers: {
        if (text.find('/') != std::string::npos) throw std::invalid_argument("fraction");
        RingValue r(spec);
        r.value_ = mpz_class(text, 10);
        return r;
      }
      case RingKind::rationals: {
        mpq_class q(text, 10);
        if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
        q.canonicalize();
        RingValue r(spec);
        r.value_ = q;
        return r;
      }
      case RingKind::modular: {
        if (text.find('/') != std::string::npos) throw std::invalid_argument("fraction");
        RingValue r(spec);
        r.value_ = reduce(mpz_class(text, 10), spec.modulus);
        return r;
      }
    }
  } catch (const std::invalid_argument&) {
  }
  throw Error(ErrorKind::ParseError, "'" + text + "' is not a scalar of " + spec.name());
}

bool RingValue::is_zero() const noexcept {
  switch (value_.index()) {
    case 0: return sgn(std::get<0>(value_)) == 0;
    case 1: return sgn(std::get<1>(value_)) == 0;
    default: return std::get<2>(value_) == 0;
  }
}

bool RingValue::is_one() const noexcept {
  switch (value_.index()) {
    case 0: return std::get<0>(value_) == 1;
    case 1: return std::get<1>(value_) == 1;
    default: return std::get<2>(value_) == 1;
  }
}

std::optional<RingValue> RingValue::try_inverse() const {
  RingValue r(spec_);
  switch (spec_.kind) {
    case RingKind::integers: {
      const auto& v = std::get<0>(value_);
      if (v != 1 && v != -1) return std::nullopt;
      r.value_ = v;
      return r;
    }
    case RingKind::rationals: {
      const auto& v = std::get<1>(value_);
      if (sgn(v) == 0) return std::nullopt;
      r.value_ = mpq_class(1) / v;
      return r;
    }
    case RingKind::modular: {
      auto inv = inverse_mod(std::get<2>(value_), spec_.modulus);
      if (!inv) return std::nullopt;
      r.value_ = *inv;
      return r;
    }
  }
  return std::nullopt;
}

RingValue RingValue::inverse() const {
  auto inv = try_inverse();
  if (!inv) throw Error(ErrorKind::NotAUnit, to_string() + " is not a unit of " + spec_.name());
  return *inv;
}

std::string RingValue::to_string() const {
  switch (value_.index()) {
    case 0: return std::get<0>(value_).get_str();
    case 1: return std::get<1>(value_).get_str();
    default: return std::to_string(std::get<2>(value_));
  }
}

mpz_class RingValue::to_integer() const {
  switch (value_.index()) {
    case 0: return std::get<0>(value_);
    case 1: {
      const auto& q = std::get<1>(value_);
      if (q.get_den() != 1) throw Error(ErrorKind::SpecMismatch, q.get_str() + " is not an integer");
      return q.get_num();
    }
    default: return mpz_class(static_cast<long>(std::get<2>(value_)));
  }
}

mpq_class RingValue::to_rational() const {
  switch (value_.index()) {
    case 0: return mpq_class(std::get<0>(value_));
    case 1: return std::get<1>(value_);
    default: return mpq_class(static_cast<long>(std::get<2>(value_)));
  }
}

void RingValue::require_same(const RingValue& other) const {
  if (!(spec_ == other.spec_))
    throw Error(ErrorKind::SpecMismatch, "mixing " + spec_.name() + " and " + other.spec_.name());
}

RingValue& RingValue::operator+=(const RingValue& other) {
  require_same(other);
  switch (value_.index()) {
    case 0: std::get<0>(value_) += std::get<0>(other.value_); break;
    case 1: std::get<1>(value_) += std::get<1>(other.value_); break;
    default: {
      auto& v = std::get<2>(value_);
      v += std::get<2>(other.value_);
      if (v >= spec_.modulus) v -= spec_.modulus;
    }
  }
  return *this;
}

RingValue& RingValue::operator-=(const RingValue& other) {
  require_same(other);
  switch (value_.index()) {
    case 0: std::get<0>(value_) -= std::get<0>(other.value_); break;
    case 1: std::get<1>(value_) -= std::get<1>(other.value_); break;
    default: {
      auto& v = std::get<2>(value_);
      v -= std::get<2>(other.value_);
      if (v < 0) v += spec_.modulus;
    }
  }
  return *this;
}

RingValue& RingValue::operator*=(const RingValue& other) {
  require_same(other);
  switch (value_.index()) {
    case 0: std::get<0>(value_) *= std::get<0>(other.value_); break;
    case 1: std::get<1>(value_) *= std::get<1>(other.value_); break;
    default: std::get<2>(value_) = mul_mod(std::get<2>(value_), std::get<2>(other.value_), spec_.modulus);
  }
  return *this;
}

void RingValue::add_product(const RingValue& a, const RingValue& b) {
  require_same(a);
  require_same(b);
  switch (value_.index()) {
    case 0: mpz_addmul(std::get<0>(value_).get_mpz_t(), std::get<0>(a.value_).get_mpz_t(),
                       std::get<0>(b.value_).get_mpz_t());
      break;
    case 1: {
      thread_local mpq_class scratch;
      mpq_mul(scratch.get_mpq_t(), std::get<1>(a.value_).get_mpq_t(), std::get<1>(b.value_).get_mpq_t());
      mpq_add(std::get<1>(value_).get_mpq_t(), std::get<1>(value_).get_mpq_t(), scratch.get_mpq_t());
      break;
    }
    default: {
      auto& v = std::get<2>(value_);
      v += mul_mod(std::get<2>(a.value_), std::get<2>(b.value_), spec_.modulus);
      if (v >= spec_.modulus) v -= spec_.modulus;
    }
  }
}

RingValue RingValue::operator-() const {
  RingValue r(spec_);
  r -= *this;
  return r;
}

bool operator==(const RingValue& a, const RingValue& b) {
  return a.spec_ == b.spec_ && a.value_ == b.value_;
}

RingValue ring_add(const RingValue& a, const RingValue& b) { return a + b; }
RingValue ring_sub(const RingValue& a, const RingValue& b) { return a - b; }
RingValue ring_mul(const RingValue& a, const RingValue& b) { return a * b; }

RingValue random_scalar(const RingSpec& spec, std::mt19937_64& gen) {
  switch (spec.kind) {
    case RingKind::integers: return RingValue::from_int(spec, std::uniform_int_distribution<long>(-4, 4)(gen));
    case RingKind::rationals: {
      const long num = std::uniform_int_distribution<long>(-4, 4)(gen);
      const long den = std::uniform_int_distribution<long>(1, 3)(gen);
      mpq_class q(num, den);
      q.canonicalize();
      return RingValue::from_rational(spec, q);
    }
    case RingKind::modular: {
      const std::int64_t v = std::uniform_int_distribution<std::int64_t>(0, spec.modulus - 1)(gen);
      return RingValue::from_int(spec, static_cast<long>(v));
    }
  }
  return RingValue(spec);
}

RingValue random_unit(const RingSpec& spec, std::mt19937_64& gen) {
  switch (spec.kind) {
    case RingKind::integers: return RingValue::from_int(spec, std::bernoulli_distribution(0.5)(gen) ? 1 : -1);
    case RingKind::rationals: {
      for (;;) {
        RingValue v = random_scalar(spec, gen);
        if (!v.is_zero()) return v;
      }
    }
    case RingKind::modular: {
      for (;;) {
        RingValue v = random_scalar(spec, gen);
        if (v.try_inverse()) return v;
      }
    }
  }
  return RingValue::one(spec);
}

}  // namespace fialg
