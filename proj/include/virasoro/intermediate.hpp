#pragma once

#include <optional>
#include <string>

#include "virasoro/linear.hpp"
#include "virasoro/rational.hpp"

namespace vir {

enum class ISVariant { Full, DropV0, DropVminus1 };

std::string to_string(ISVariant v);

// Parameters of V'_{alpha,beta}. Integral alpha is replaced by 0 (V_{a,b} = V_{a+k,b});
// basis indices are always expressed relative to the normalized alpha.
struct ISParams {
  Rational alpha_original;
  Rational alpha;
  Rational beta;
  ISVariant variant = ISVariant::Full;
  bool normalized = false;

  std::optional<long> dropped_index() const;
  bool has_index(long m) const;
  // V'_{0,0} = V_{0,0}/C v_0 is a quotient, so components on v_0 are set to zero.
  // V'_{0,1} is the submodule without v_{-1}; nothing can land there.
  bool dropped_is_quotient() const { return variant == ISVariant::DropV0; }
  // L_n v_m = coefficient(n, m) v_{m+n}
  Rational coefficient(int n, long m) const;
};

ISParams variant_of(const Rational& alpha, const Rational& beta);

struct ISElement {
  ISParams params;
  LinearCombination<long> terms;
};

// Components on v_0 of V'_{0,0} are discarded; a nonzero coefficient onto v_{-1} of
// V'_{0,1} throws InternalError.
ISElement act_is(int n, const ISElement& x);

// "v[m]" terms with rational coefficients, e.g. "-12/5*v[1]".
std::string format_is(const ISElement& x);

}  // namespace vir
