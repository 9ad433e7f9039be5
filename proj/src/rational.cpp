#include "virasoro/rational.hpp"

#include <cctype>

#include "virasoro/errors.hpp"

namespace vir {
namespace {

bool parse_integer(std::string_view s, mpz_class& out) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
  }
  std::string digits(s.substr(s[0] == '+' ? 1 : 0));
  return out.set_str(digits, 10) == 0;
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw UserError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  const auto slash = s.find('/');
  mpz_class num, den = 1;
  const bool ok = slash == std::string::npos
                      ? parse_integer(s, num)
                      : parse_integer(std::string_view(s).substr(0, slash), num) &&
                            s.size() > slash + 1 && std::isdigit(static_cast<unsigned char>(s[slash + 1])) &&
                            parse_integer(std::string_view(s).substr(slash + 1), den);
  if (!ok) throw UserError("malformed rational '" + std::string(text) + "'");
  if (den == 0) throw UserError("zero denominator in '" + std::string(text) + "'");
  mpq_class q(num, den);
  q.canonicalize();
  return Rational(q);
}

long Rational::to_long() const {
  if (!is_integer() || !q_.get_num().fits_slong_p()) {
    throw InternalError("rational " + str() + " is not a machine integer");
  }
  return q_.get_num().get_si();
}

mpz_class Rational::floor() const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(q_))); }

std::optional<Rational> Rational::sqrt() const {
  if (sign() < 0) return std::nullopt;
  const mpz_class num = q_.get_num(), den = q_.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rational(mpq_class(rn, rd));
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw InternalError("division by zero rational");
  q_ /= o.q_;
  return *this;
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational r(1);
  for (unsigned i = 0; i < exponent; ++i) r *= base;
  return r;
}

}  // namespace vir
