#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "virasoro/rational.hpp"

namespace vir {

// Kac-table label (m, n) of the minimal model with coprime p, q > 1.
struct MinimalLabel {
  int p = 0, q = 0, m = 0, n = 0;

  MinimalLabel flipped() const { return {p, q, p - m, q - n}; }
  // Representative with the smaller (n, m) pair; see the decisions notes in README.
  MinimalLabel canonical() const;
  bool is_canonical() const { return canonical() == *this; }
  std::string str() const;  // "(m,n)"
  friend auto operator<=>(const MinimalLabel&, const MinimalLabel&) = default;
};

// Throws UserError unless p, q > 1 are coprime.
void validate_model(int p, int q);
// Throws UserError on an invalid model or out-of-range (m, n).
MinimalLabel make_label(int p, int q, int m, int n);

Rational central_charge(int p, int q);
Rational conformal_weight(const MinimalLabel& l);

// Canonical labels of the Kac table, sorted by (m, n).
std::vector<MinimalLabel> kac_table(int p, int q);

// (p, q) with c = c_{p,q}, p < q coprime and > 1.
std::optional<std::pair<int, int>> minimal_model_params(const Rational& c);
// Canonical label with h_{m,n} = h for the minimal model of central charge c.
std::optional<MinimalLabel> minimal_label(const Rational& c, const Rational& h);

struct FusionTriple {
  MinimalLabel first, second, third;
};

// Inequalities, strict triangle conditions and odd-sum parity for one fixed choice
// of representatives.
bool admissible_representatives(const FusionTriple& t);
// True when some choice of the eight per-slot representatives is admissible.
bool admissible(const FusionTriple& t);

// Canonical labels l3 with (l1, l2, l3) admissible, sorted. Cross-checked against
// bpz_fusion_range; a mismatch throws InternalError.
std::vector<MinimalLabel> fusion_product(const MinimalLabel& l1, const MinimalLabel& l2);
// Interval-and-parity construction of the same set (independent oracle).
std::vector<MinimalLabel> bpz_fusion_range(const MinimalLabel& l1, const MinimalLabel& l2);

struct ReduciblePair {
  Rational alpha, beta, h3;
  MinimalLabel l1, l3;
};
// (h1 + h2 - h3, 1 - h1, h3) over admissible (l1, l2, l3) with h1 != 0, deduplicated on
// the (alpha, beta, h3) values, sorted by them. Integral alpha is reported as 0.
std::vector<ReduciblePair> reducible_pairs(const MinimalLabel& l2);
// The h1 = 0 operators (module, transposed, adjoint types) for l2.
std::vector<ReduciblePair> module_operators(const MinimalLabel& l2);

enum class FusionAnswer { Exists, Absent, Inconclusive };
std::string to_string(FusionAnswer a);

// Existence of an intertwining operator of type (h3; h1, h2) among L(1,0)-modules,
// from the rules for integer-square weights m^2. Weights outside those rule families
// give Inconclusive.
FusionAnswer c1_fusion_exists(const Rational& h1, const Rational& h2, const Rational& h3);

// Delta(k) = k(k+2)/(4 kappa) - k/2; throws UserError for kappa = 0.
Rational delta_weight(const Rational& kappa, long k);
// |k1 - k2| <= k3 <= k1 + k2 with k1 + k2 + k3 even.
bool triple_admissible(long k1, long k2, long k3);

}  // namespace vir
