#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "virasoro/intermediate.hpp"
#include "virasoro/verma.hpp"

namespace vir {

// Basis element v_m (x) L_{-mono} v.
struct TensorKey {
  long m;
  PBWMonomial mono;
  // level - m; L_k lowers it by k.
  long weight() const { return mono.level() - m; }
  friend std::strong_ordering operator<=>(const TensorKey&, const TensorKey&) = default;
  friend bool operator==(const TensorKey&, const TensorKey&) = default;
};

using TensorVector = LinearCombination<TensorKey>;

// V'_{alpha,beta} (x) M for a graded module M (Verma or a quotient).
class TensorModule {
 public:
  TensorModule(ISParams params, Presentation module);

  const ISParams& params() const { return params_; }
  const ModulePresentation& module() const { return *module_; }
  const Presentation& module_ptr() const { return module_; }

  // v_m (x) x; throws UserError if v_m is the dropped basis vector.
  TensorVector vector(long m, const UNegElement& x) const;
  TensorVector vector(long m) const;

  TensorVector act(int k, const TensorVector& x) const;
  TensorVector apply(const WordSum& w, const TensorVector& x) const;

  // L_0 eigenvalue h + level - m - alpha - beta.
  Rational l0_eigenvalue(const TensorKey& key) const;

 private:
  ISParams params_;
  Presentation module_;
};

std::string format_tensor(const TensorVector& x);
// Components grouped by weight (level - m).
std::map<long, TensorVector> weight_components(const TensorVector& x);

struct TruncationWindow {
  long m_min = -6;
  long m_max = 6;
  int level_max = 8;
};

// Truncation of U_{n0} = U(Vir)(v_{n0} (x) v): the span of vectors reachable from the
// generator by L_k moves that stay inside the padded window. Every vector it
// contains lies in U_{n0}, so it is a lower bound (evidence, not proof).
class CyclicSubspace {
 public:
  long generator_index() const { return n0_; }
  const TruncationWindow& window() const { return window_; }
  const TruncationWindow& padded() const { return padded_; }
  const std::map<long, EchelonBasis<TensorKey>>& blocks() const { return blocks_; }
  std::map<long, std::size_t> dimensions() const;
  std::size_t closure_rounds() const { return rounds_; }

 private:
  friend CyclicSubspace cyclic_subspace(const TensorModule&, long, const TruncationWindow&, int);
  long n0_ = 0;
  TruncationWindow window_, padded_;
  std::map<long, EchelonBasis<TensorKey>> blocks_;
  std::size_t rounds_ = 0;
};

CyclicSubspace cyclic_subspace(const TensorModule& T, long n0, const TruncationWindow& window, int margin = 4);

struct Membership {
  bool member = false;
  // x = sum of coefficient * basis row, when member.
  std::vector<std::pair<TensorVector, Rational>> certificate;
  bool certificate_verified = false;
};

// Exact membership in the truncated span. Non-homogeneous x is split by weight.
Membership contains(const CyclicSubspace& U, const TensorVector& x);

// Highest weight h - alpha - beta - n of U_n / U_{n+1} (normalized alpha and indices).
// For alpha in Z, beta = 1 this is h+1 at n = -2, the U_{-2}/U_0 step.
Rational subquotient_hw(long n, const ISParams& params, const Rational& h);

// Strict-step evidence between consecutive existing indices a < b of the readout
// window: true when v_a (x) v is not in the truncated U_b.
struct StepEvidence {
  long lower;
  long upper;
  bool gap;
};
std::vector<StepEvidence> chain_evidence(const TensorModule& T, const TruncationWindow& window, int margin = 4);

}  // namespace vir
