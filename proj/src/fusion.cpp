#include "virasoro/fusion.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "virasoro/errors.hpp"

namespace vir {

MinimalLabel MinimalLabel::canonical() const {
  const MinimalLabel f = flipped();
  return std::tie(n, m) <= std::tie(f.n, f.m) ? *this : f;
}

std::string MinimalLabel::str() const { return "(" + std::to_string(m) + "," + std::to_string(n) + ")"; }

void validate_model(int p, int q) {
  if (p <= 1 || q <= 1) throw UserError("minimal model needs p, q > 1");
  if (std::gcd(p, q) != 1) throw UserError("minimal model needs coprime p, q");
}

MinimalLabel make_label(int p, int q, int m, int n) {
  validate_model(p, q);
  if (m <= 0 || m >= p || n <= 0 || n >= q) {
    throw UserError("label (" + std::to_string(m) + "," + std::to_string(n) + ") outside 0<m<" +
                    std::to_string(p) + ", 0<n<" + std::to_string(q));
  }
  return {p, q, m, n};
}

Rational central_charge(int p, int q) {
  validate_model(p, q);
  const long d = p - q;
  return Rational(1) - Rational(6 * d * d, long(p) * q);
}

Rational conformal_weight(const MinimalLabel& l) {
  make_label(l.p, l.q, l.m, l.n);
  const long x = long(l.n) * l.p - long(l.m) * l.q, d = l.p - l.q;
  return Rational(x * x - d * d, 4L * l.p * l.q);
}

std::vector<MinimalLabel> kac_table(int p, int q) {
  validate_model(p, q);
  std::vector<MinimalLabel> out;
  for (int m = 1; m < p; ++m) {
    for (int n = 1; n < q; ++n) {
      const MinimalLabel l{p, q, m, n};
      if (l.is_canonical()) out.push_back(l);
    }
  }
  return out;
}

std::optional<std::pair<int, int>> minimal_model_params(const Rational& c) {
  // c = 13 - 6(t + 1/t) with t = p/q, so t^2 - s t + 1 = 0 where s = (13 - c)/6.
  const Rational s = (Rational(13) - c) / Rational(6);
  const auto root = (s * s - Rational(4)).sqrt();
  if (!root) return std::nullopt;
  const Rational t = (s - *root) / Rational(2);
  if (t.sign() <= 0) return std::nullopt;
  const mpz_class a = t.numerator(), b = t.denominator();
  if (!a.fits_sint_p() || !b.fits_sint_p()) return std::nullopt;
  const int p = static_cast<int>(a.get_si()), q = static_cast<int>(b.get_si());
  if (p <= 1 || q <= 1) return std::nullopt;
  return std::make_pair(std::min(p, q), std::max(p, q));
}

std::optional<MinimalLabel> minimal_label(const Rational& c, const Rational& h) {
  const auto pq = minimal_model_params(c);
  if (!pq) return std::nullopt;
  for (const auto& l : kac_table(pq->first, pq->second)) {
    if (conformal_weight(l) == h) return l;
  }
  return std::nullopt;
}

namespace {

void require_same_model(const FusionTriple& t) {
  for (const auto* l : {&t.first, &t.second, &t.third}) make_label(l->p, l->q, l->m, l->n);
  if (t.first.p != t.second.p || t.first.p != t.third.p || t.first.q != t.second.q || t.first.q != t.third.q) {
    throw UserError("fusion triple mixes different minimal models");
  }
}

bool triangle(int a, int b, int c) { return a < b + c && b < a + c && c < a + b; }

std::vector<MinimalLabel> sorted_unique(std::vector<MinimalLabel> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

bool admissible_representatives(const FusionTriple& t) {
  const int p = t.first.p, q = t.first.q;
  const int m1 = t.first.m, m2 = t.second.m, m3 = t.third.m;
  const int n1 = t.first.n, n2 = t.second.n, n3 = t.third.n;
  return m1 + m2 + m3 < 2 * p && n1 + n2 + n3 < 2 * q && triangle(m1, m2, m3) && triangle(n1, n2, n3) &&
         (m1 + m2 + m3) % 2 == 1 && (n1 + n2 + n3) % 2 == 1;
}

bool admissible(const FusionTriple& t) {
  require_same_model(t);
  for (int mask = 0; mask < 8; ++mask) {
    const FusionTriple r{mask & 1 ? t.first.flipped() : t.first, mask & 2 ? t.second.flipped() : t.second,
                         mask & 4 ? t.third.flipped() : t.third};
    if (admissible_representatives(r)) return true;
  }
  return false;
}

std::vector<MinimalLabel> bpz_fusion_range(const MinimalLabel& l1, const MinimalLabel& l2) {
  require_same_model({l1, l2, l1});
  const int p = l1.p, q = l1.q;
  std::vector<MinimalLabel> out;
  for (int m3 = std::abs(l1.m - l2.m) + 1; m3 <= std::min(l1.m + l2.m - 1, 2 * p - l1.m - l2.m - 1); m3 += 2) {
    for (int n3 = std::abs(l1.n - l2.n) + 1; n3 <= std::min(l1.n + l2.n - 1, 2 * q - l1.n - l2.n - 1); n3 += 2) {
      out.push_back(MinimalLabel{p, q, m3, n3}.canonical());
    }
  }
  return sorted_unique(out);
}

std::vector<MinimalLabel> fusion_product(const MinimalLabel& l1, const MinimalLabel& l2) {
  require_same_model({l1, l2, l1});
  std::vector<MinimalLabel> out;
  for (const auto& l3 : kac_table(l1.p, l1.q)) {
    if (admissible({l1, l2, l3})) out.push_back(l3);
  }
  out = sorted_unique(out);
  if (out != bpz_fusion_range(l1, l2)) {
    throw InternalError("fusion data error: admissible triples disagree with the interval construction for " +
                        l1.str() + " x " + l2.str());
  }
  return out;
}

namespace {

std::vector<ReduciblePair> operators(const MinimalLabel& l2, bool want_zero_h1) {
  make_label(l2.p, l2.q, l2.m, l2.n);
  const Rational h2 = conformal_weight(l2);
  std::vector<ReduciblePair> out;
  for (const auto& l1 : kac_table(l2.p, l2.q)) {
    const Rational h1 = conformal_weight(l1);
    if (h1.is_zero() != want_zero_h1) continue;
    for (const auto& l3 : fusion_product(l1, l2)) {
      const Rational h3 = conformal_weight(l3);
      Rational alpha = h1 + h2 - h3;
      if (alpha.is_integer()) alpha = Rational(0);  // V_{a,b} = V_{a+k,b}
      out.push_back({alpha, Rational(1) - h1, h3, l1, l3});
    }
  }
  auto key = [](const ReduciblePair& r) { return std::tie(r.alpha, r.beta, r.h3); };
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
  out.erase(std::unique(out.begin(), out.end(), [&](const auto& a, const auto& b) { return key(a) == key(b); }),
            out.end());
  return out;
}

}  // namespace

std::vector<ReduciblePair> reducible_pairs(const MinimalLabel& l2) { return operators(l2, false); }

std::vector<ReduciblePair> module_operators(const MinimalLabel& l2) { return operators(l2, true); }

std::string to_string(FusionAnswer a) {
  switch (a) {
    case FusionAnswer::Exists: return "exists";
    case FusionAnswer::Absent: return "absent";
    case FusionAnswer::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

// k >= 0 with h = k^2.
std::optional<long> square_root_label(const Rational& h) {
  const auto r = h.sqrt();
  if (!r || !r->is_integer()) return std::nullopt;
  return r->to_long();
}

}  // namespace

FusionAnswer c1_fusion_exists(const Rational& h1, const Rational& h2, const Rational& h3) {
  for (const auto* h : {&h1, &h2, &h3}) {
    if (h->sign() < 0) return FusionAnswer::Inconclusive;
  }
  const auto m = square_root_label(h1), n = square_root_label(h2), k = square_root_label(h3);
  auto answer = [](bool b) { return b ? FusionAnswer::Exists : FusionAnswer::Absent; };
  if (m && n && k) return answer(std::abs(*n - *m) <= *k && *k <= *n + *m);
  if (m && !n) return answer(h3 == h2);
  if (n && !m) return answer(h3 == h1);  // transposed operator
  return FusionAnswer::Inconclusive;
}

Rational delta_weight(const Rational& kappa, long k) {
  if (kappa.is_zero()) throw UserError("kappa must be nonzero");
  return Rational(k * (k + 2)) / (Rational(4) * kappa) - Rational(k, 2);
}

bool triple_admissible(long k1, long k2, long k3) {
  return std::abs(k1 - k2) <= k3 && k3 <= k1 + k2 && (k1 + k2 + k3) % 2 == 0;
}

}  // namespace vir
