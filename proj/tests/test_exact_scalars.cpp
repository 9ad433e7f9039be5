#include <doctest.h>

#include <random>

#include "virasoro/errors.hpp"
#include "virasoro/polynomial.hpp"
#include "virasoro/rational.hpp"

using vir::Polynomial;
using vir::Rational;

namespace {

Rational q(long a, long b = 1) { return Rational(a, b); }

Polynomial poly(std::initializer_list<Rational> c) { return Polynomial(std::vector<Rational>(c)); }

}  // namespace

TEST_CASE("rationals are canonical") {
  CHECK(q(6, -4).str() == "-3/2");
  CHECK(q(0, 5).str() == "0");
  CHECK(q(0, 5).denominator() == 1);
  CHECK(q(10, 5).str() == "2");
  CHECK(Rational::parse(" -22/5 ") == q(-22, 5));
  CHECK(Rational::parse("4/2").str() == "2");
  CHECK(Rational::parse("+7") == q(7));
}

TEST_CASE("malformed rationals are rejected") {
  for (const char* bad : {"", "1/0", "a", "1/", "/3", "1/-3", "1.5", "--2"}) {
    CHECK_THROWS_AS(Rational::parse(bad), vir::UserError);
  }
}

TEST_CASE("exact square roots") {
  CHECK(q(9, 4).sqrt() == q(3, 2));
  CHECK_FALSE(q(2).sqrt().has_value());
  CHECK_FALSE(q(-1).sqrt().has_value());
  CHECK(q(0).sqrt() == q(0));
}

TEST_CASE("poly_eval") {
  const Polynomial p = poly({q(0), q(-1, 5), q(1)});
  CHECK(vir::poly_eval(p, q(1, 5)) == q(0));
  CHECK(vir::poly_eval(Polynomial(), q(7, 3)) == q(0));
  CHECK(vir::poly_eval(poly({q(-1, 3), q(-1)}), q(2)) == q(-7, 3));
}

TEST_CASE("integer_roots") {
  CHECK(poly({q(0), q(-1, 5), q(1)}).integer_roots() == std::vector<long>{0});
  const Polynomial x = Polynomial::variable();
  const Polynomial cube = (x - Polynomial(q(1))) * (x - Polynomial(q(1))) * (x + Polynomial(q(1)));
  CHECK(cube.integer_roots() == std::vector<long>{-1, 1});
  CHECK(poly({q(1), q(0), q(1)}).integer_roots().empty());
  CHECK_THROWS_AS(Polynomial().integer_roots(), vir::UserError);
  CHECK(Polynomial(q(3)).integer_roots().empty());
  // roots with a large constant term: (n - 1000)(n + 999)(2n - 1)
  const Polynomial big = (x - Polynomial(q(1000))) * (x + Polynomial(q(999))) * (q(2) * x - Polynomial(q(1)));
  CHECK(big.integer_roots() == std::vector<long>{-999, 1000});
}

TEST_CASE("interpolate") {
  CHECK(vir::interpolate({{q(0), q(0)}, {q(1), q(4, 5)}, {q(2), q(18, 5)}}) == poly({q(0), q(-1, 5), q(1)}));
  CHECK(vir::interpolate({{q(5), q(3)}}) == Polynomial(q(3)));
  CHECK_THROWS_AS(vir::interpolate({{q(0), q(1)}, {q(0), q(2)}}), vir::UserError);
  CHECK_THROWS_AS(vir::interpolate({}), vir::UserError);
}

TEST_CASE("polynomial printing") {
  CHECK(poly({q(0), q(-1, 5), q(1)}).str() == "n^2 - 1/5*n");
  CHECK(Polynomial().str() == "0");
  CHECK(poly({q(-1, 3), q(-1)}).str() == "-n - 1/3");
}

TEST_CASE("property: integer roots match evaluation on random polynomials") {
  std::mt19937 rng(20261018);
  std::uniform_int_distribution<int> small(-6, 6), deg(0, 4), den(1, 4), root(-8, 8);
  const Polynomial x = Polynomial::variable();
  for (int trial = 0; trial < 300; ++trial) {
    // Mix of planted integer roots and a random cofactor.
    Polynomial p(q(small(rng) == 0 ? 1 : small(rng), den(rng)));
    const int planted = deg(rng) % 3;
    for (int i = 0; i < planted; ++i) p *= x - Polynomial(q(root(rng)));
    const int extra = deg(rng);
    std::vector<Rational> cof;
    for (int i = 0; i <= extra; ++i) cof.push_back(q(small(rng), den(rng)));
    cof.back() = cof.back().is_zero() ? q(1) : cof.back();
    p *= Polynomial(cof);
    if (p.is_zero()) continue;
    const auto roots = p.integer_roots();
    for (long z = -20; z <= 20; ++z) {
      const bool listed = std::find(roots.begin(), roots.end(), z) != roots.end();
      CHECK(listed == p.eval(q(z)).is_zero());
    }
  }
}

TEST_CASE("property: interpolation recovers random polynomials") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5), deg(0, 6);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = deg(rng);
    std::vector<Rational> c;
    for (int i = 0; i <= d; ++i) c.push_back(q(num(rng), den(rng)));
    if (c.back().is_zero()) c.back() = q(1);
    const Polynomial p(c);
    std::vector<std::pair<Rational, Rational>> pts;
    for (int i = 0; i <= d; ++i) {
      const Rational xi = q(3 * i - 7, 2);
      pts.emplace_back(xi, p.eval(xi));
    }
    CHECK(vir::interpolate(pts) == p);
  }
}

TEST_CASE("property: sums agree with the common-denominator formula") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> num(-1000, 1000), den(1, 1000);
  for (int trial = 0; trial < 1000; ++trial) {
    const long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
    CHECK(q(a, b) + q(c, d) == q(a * d + c * b, b * d));
  }
}
