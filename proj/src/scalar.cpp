#include "xorloops/scalar.hpp"

#include <cstdio>

#include "xorloops/errors.hpp"

namespace xorloops {

std::optional<Rational> ScalarTraits<Rational>::sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

std::string ScalarTraits<double>::str(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Rational parse_rational(const std::string& text) {
  const auto bad = [&] { return Error(ErrorCode::BadSpec, "not a rational: '" + text + "'"); };
  if (text.empty()) throw bad();
  const auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    const std::size_t scale = text.size() - dot - 1;
    if (digits.empty() || digits == "-") throw bad();
    mpz_class num;
    if (num.set_str(digits, 10) != 0) throw bad();
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, scale);
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  Rational r;
  if (r.set_str(text, 10) != 0) throw bad();
  if (sgn(r.get_den()) == 0) throw bad();
  r.canonicalize();
  return r;
}

Rational RationalSampler::unit_interval() {
  const unsigned long den = 2 + below(max_den_ - 1);
  const unsigned long num = 1 + below(den - 1);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace xorloops
