#pragma once

#include <optional>
#include <string>
#include <vector>

#include "virasoro/fusion.hpp"
#include "virasoro/polynomial.hpp"
#include "virasoro/tensor.hpp"

namespace vir {

Polynomial phi_n(const PBWMonomial& mono, const Rational& alpha, const Rational& beta);
Polynomial phi_n(const UNegElement& u, const Rational& alpha, const Rational& beta);

enum class PolyMethod { PhiFormula, Elimination };
std::string to_string(PolyMethod m);

// Monic reducibility polynomial in n induced by a level-m singular vector.
struct PPoly {
  Polynomial poly;
  int level = 0;
  PolyMethod method = PolyMethod::PhiFormula;
};

// Throws UserError unless u is a homogeneous singular vector of V(c,h).
PPoly p_from_singular(const Rational& c, const Rational& h, const UNegElement& u, const Rational& alpha,
                      const Rational& beta);

// Samples the proof's elimination in V'_{alpha,beta} (x) V(c,h)/<u> at m+1 points and
// interpolates. Each sample is re-verified by recomputing the discarded terms.
PPoly p_via_elimination(const Rational& c, const Rational& h, const UNegElement& u, const Rational& alpha,
                        const Rational& beta);

// center + sign * scale * sqrt(radicand)
struct RootExpr {
  Rational center, scale, radicand;
  int sign = 0;
  std::optional<Rational> value;  // set when the square root is rational
  bool complex = false;
  std::string str() const;
};
// Closed-form roots for levels 2 and 3; throws UserError for other levels.
std::vector<RootExpr> closed_form_roots(int level, const Rational& h, const Rational& alpha, const Rational& beta);

enum class VerdictStatus { Irreducible, Reducible, Inconclusive };
std::string to_string(VerdictStatus s);

// U_lower / U_upper is a nonzero subquotient with highest weight `weight`.
struct ChainStep {
  long lower = 0, upper = 0;
  Rational weight;
  std::string rule;
};

struct CrossCheck {
  std::string name;
  std::string outcome;  // "agree", "disagree", "not-applicable"
  std::string detail;
};

struct VerdictOptions {
  int cutoff = 12;
  bool run_cross_checks = false;
  TruncationWindow window{-6, 6, 8};
};

struct Verdict {
  VerdictStatus status = VerdictStatus::Inconclusive;
  Rational c, h;
  ISParams params;  // indices and polynomials use the normalized alpha
  std::optional<MinimalLabel> label;
  std::vector<UNegElement> singular_generators;
  std::vector<PPoly> polynomials;
  std::vector<std::vector<long>> integral_roots;
  std::vector<ChainStep> steps;
  std::vector<Rational> subquotient_weights;
  std::vector<std::string> rules_fired;
  std::vector<CrossCheck> cross_checks;
  std::vector<std::string> notes;

  bool has_disagreement() const;
};

Verdict verdict(const Rational& alpha, const Rational& beta, const Rational& c, const Rational& h,
                const VerdictOptions& options = {});

// Strict steps of the U-chain implied by the polynomials, with the dropped-index
// adjustments. Polynomials must be in normalized coordinates.
std::vector<ChainStep> chain_steps(const std::vector<PPoly>& polys, const ISParams& params, const Rational& h);

struct IntertwinerType {
  Rational h1, h2, h3;
  bool alpha_consistent = false;  // alpha - (h1 + h2 - h3) is an integer
  std::string status;             // "indicated, not proven" or the module-operator case
};
std::vector<IntertwinerType> predict_intertwiners(const Verdict& v);

}  // namespace vir
