#include "virasoro/polynomial.hpp"

#include <algorithm>
#include <set>

#include "virasoro/errors.hpp"

namespace vir {

Polynomial::Polynomial(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }

Polynomial::Polynomial(const Rational& constant) {
  if (!constant.is_zero()) c_.push_back(constant);
}

Polynomial Polynomial::variable() { return Polynomial({Rational(0), Rational(1)}); }

Polynomial Polynomial::linear_root(const Rational& r) { return Polynomial({-r, Rational(1)}); }

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& Polynomial::leading() const {
  if (c_.empty()) throw InternalError("leading coefficient of the zero polynomial");
  return c_.back();
}

Rational Polynomial::coefficient(int k) const {
  return (k < 0 || k >= static_cast<int>(c_.size())) ? Rational(0) : c_[k];
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return *this * (Rational(1) / leading());
}

std::vector<long> Polynomial::integer_roots() const {
  if (is_zero()) throw UserError("every integer is a root of the zero polynomial");
  std::size_t shift = 0;
  while (c_[shift].is_zero()) ++shift;

  // Clear denominators of the deflated polynomial.
  mpz_class lcm = 1;
  for (std::size_t k = shift; k < c_.size(); ++k) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c_[k].raw().get_den_mpz_t());
  }
  std::vector<mpz_class> a;
  for (std::size_t k = shift; k < c_.size(); ++k) {
    mpq_class scaled = c_[k].raw() * lcm;
    a.push_back(scaled.get_num());
  }

  std::set<long> roots;
  if (shift > 0) roots.insert(0);
  if (a.size() > 1) {
    // Cauchy bound |z| <= 1 + max|a_i / a_top|; integer roots also divide a_0.
    mpz_class top = ::abs(a.back()), max_ratio = 0;
    for (std::size_t k = 0; k + 1 < a.size(); ++k) {
      mpz_class r = (::abs(a[k]) + top - 1) / top;
      if (r > max_ratio) max_ratio = r;
    }
    const mpz_class bound = max_ratio + 1;
    const mpz_class a0 = ::abs(a.front());
    mpz_class isqrt;
    mpz_sqrt(isqrt.get_mpz_t(), a0.get_mpz_t());
    const mpz_class limit = std::min(bound, isqrt);
    if (limit > 100000000) throw InternalError("integer_roots: candidate range too large");
    auto test = [&](const mpz_class& d) {
      if (d > bound || !d.fits_slong_p()) return;
      for (long s : {1L, -1L}) {
        const long z = s * d.get_si();
        if (eval(Rational(z)).is_zero()) roots.insert(z);
      }
    };
    for (mpz_class d = 1; d <= limit; ++d) {
      if (mpz_divisible_p(a0.get_mpz_t(), d.get_mpz_t())) {
        test(d);
        test(a0 / d);
      }
    }
  }
  return {roots.begin(), roots.end()};
}

std::string Polynomial::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& a = c_[k];
    if (a.is_zero()) continue;
    const bool neg = a.sign() < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const Rational mag = a.abs();
    std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    if (mono.empty()) {
      out += mag.str();
    } else if (mag == Rational(1)) {
      out += mono;
    } else {
      out += mag.str() + "*" + mono;
    }
  }
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  for (auto& a : c_) a *= s;
  trim();
  return *this;
}

Polynomial interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
  if (points.empty()) throw UserError("interpolate: no points");
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (points[i].first == points[j].first) {
        throw UserError("interpolate: duplicate abscissa " + points[i].first.str());
      }
    }
  }
  // Divided differences in place.
  std::vector<Rational> dd;
  for (const auto& p : points) dd.push_back(p.second);
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - level].first);
    }
  }
  Polynomial result(dd[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) {
    result = result * Polynomial::linear_root(points[i].first) + Polynomial(dd[i]);
  }
  return result;
}

}  // namespace vir
