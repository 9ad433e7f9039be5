#include "virasoro/intermediate.hpp"

#include "virasoro/errors.hpp"

namespace vir {

std::string to_string(ISVariant v) {
  switch (v) {
    case ISVariant::Full: return "Full";
    case ISVariant::DropV0: return "DropV0";
    case ISVariant::DropVminus1: return "DropVminus1";
  }
  return "?";
}

std::optional<long> ISParams::dropped_index() const {
  switch (variant) {
    case ISVariant::DropV0: return 0;
    case ISVariant::DropVminus1: return -1;
    case ISVariant::Full: break;
  }
  return std::nullopt;
}

bool ISParams::has_index(long m) const {
  const auto d = dropped_index();
  return !d || *d != m;
}

Rational ISParams::coefficient(int n, long m) const {
  return -(Rational(m) + alpha + beta + Rational(n) * beta);
}

ISParams variant_of(const Rational& alpha, const Rational& beta) {
  ISParams p;
  p.alpha_original = alpha;
  p.beta = beta;
  p.normalized = alpha.is_integer();
  p.alpha = p.normalized ? Rational(0) : alpha;
  if (p.normalized && beta == Rational(0)) {
    p.variant = ISVariant::DropV0;
  } else if (p.normalized && beta == Rational(1)) {
    p.variant = ISVariant::DropVminus1;
  }
  return p;
}

ISElement act_is(int n, const ISElement& x) {
  ISElement out{x.params, {}};
  for (const auto& [m, a] : x.terms) {
    const Rational k = x.params.coefficient(n, m);
    if (!x.params.has_index(m + n)) {
      if (!x.params.dropped_is_quotient() && !k.is_zero()) {
        throw InternalError("nonzero coefficient onto the dropped basis vector");
      }
      continue;
    }
    out.terms.add(m + n, a * k);
  }
  return out;
}

std::string format_is(const ISElement& x) {
  if (x.terms.is_zero()) return "0";
  std::string out;
  for (const auto& [m, a] : x.terms) {
    const bool neg = a.sign() < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    out += a.abs().str() + "*v[" + std::to_string(m) + "]";
  }
  return out;
}

}  // namespace vir
