#pragma once

#include <string>
#include <utility>
#include <vector>

#include "virasoro/rational.hpp"

namespace vir {

// Univariate polynomial over Q, coefficients in ascending degree.
// The zero polynomial has no coefficients; otherwise the leading one is nonzero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> ascending);
  Polynomial(const Rational& constant);  // NOLINT(implicit)

  static Polynomial variable();
  // (x - r) for a root r
  static Polynomial linear_root(const Rational& r);

  const std::vector<Rational>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& leading() const;
  Rational coefficient(int k) const;

  Rational eval(const Rational& x) const;
  Polynomial monic() const;

  // Ascending list of all integer roots. Throws UserError on the zero polynomial.
  std::vector<long> integer_roots() const;

  // Human-readable form in the variable `var`, e.g. "n^2 - 1/5*n".
  std::string str(const std::string& var = "n") const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  Polynomial operator-() const { return *this * Rational(-1); }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<Rational> c_;
};

inline Rational poly_eval(const Polynomial& p, const Rational& x) { return p.eval(x); }

// Unique polynomial of degree < points.size() through the points (Newton form).
// Throws UserError on an empty list or a repeated abscissa.
Polynomial interpolate(const std::vector<std::pair<Rational, Rational>>& points);

}  // namespace vir
