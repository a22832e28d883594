#pragma once

// Weight arithmetic. Every identity in the library is a rational function of
// the per-edge parameter x = exp(-2J), so exact checks run over GMP rationals
// and production runs over double.

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>

namespace xorloops {

using Rational = mpq_class;

enum class Mode { Exact, Float };

template <class Scalar>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr Mode mode = Mode::Exact;
  static Rational from_rational(const Rational& q) { return q; }
  static Rational from_int(long v) { return Rational(v); }
  static double to_double(const Rational& q) { return q.get_d(); }
  static bool is_zero(const Rational& q) { return sgn(q) == 0; }
  static bool equal(const Rational& a, const Rational& b) { return a == b; }
  /// Exact square root when `q` is the square of a rational.
  static std::optional<Rational> sqrt(const Rational& q);
  static std::string str(const Rational& q) { return q.get_str(); }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static constexpr Mode mode = Mode::Float;
  static constexpr double rel_tol = 1e-9;
  static double from_rational(const Rational& q) { return q.get_d(); }
  static double from_int(long v) { return static_cast<double>(v); }
  static double to_double(double v) { return v; }
  static bool is_zero(double v) { return v == 0.0; }
  static bool equal(double a, double b) {
    const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
    return std::abs(a - b) <= rel_tol * scale;
  }
  static std::optional<double> sqrt(double v) {
    if (v < 0) return std::nullopt;
    return std::sqrt(v);
  }
  static std::string str(double v);
};

/// 2^k as a Scalar (k may be negative).
template <class Scalar>
Scalar pow2(long k) {
  Scalar r = ScalarTraits<Scalar>::from_int(1);
  const Scalar two = ScalarTraits<Scalar>::from_int(2);
  for (long i = 0; i < k; ++i) r *= two;
  for (long i = 0; i > k; --i) r /= two;
  return r;
}

/// Parses "p/q", "p" or a decimal like "0.25" into an exact rational.
Rational parse_rational(const std::string& text);

/// Seeded source of small-denominator rationals in (0,1). Uses the raw
/// mt19937_64 stream so output is identical across standard libraries.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed, unsigned max_denominator = 12)
      : engine_(seed), max_den_(max_denominator) {}

  Rational unit_interval();

  std::uint64_t below(std::uint64_t n) { return engine_() % n; }

 private:
  std::mt19937_64 engine_;
  unsigned max_den_;
};

}  // namespace xorloops
