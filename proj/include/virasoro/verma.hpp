#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "virasoro/linear.hpp"
#include "virasoro/rational.hpp"
#include "virasoro/words.hpp"

namespace vir {

// Elements of V(c,h) are U(Vir_-) elements applied to the highest weight vector.
using VermaElement = UNegElement;

class VermaModule {
 public:
  VermaModule(Rational c, Rational h);

  const Rational& c() const { return c_; }
  const Rational& h() const { return h_; }

  // L_k (L_{-mono} v). Memoized; the returned reference stays valid for the
  // lifetime of the module.
  const VermaElement& act(int k, const PBWMonomial& mono) const;
  VermaElement act(int k, const VermaElement& x) const;
  // Word sum applied with the rightmost factor first.
  VermaElement apply(const WordSum& w, const VermaElement& x) const;

 private:
  VermaElement compute(int k, const PBWMonomial& mono) const;

  Rational c_, h_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<int, PBWMonomial>, VermaElement> memo_;
};

// Contravariant form on level N, rows and columns indexed by partitions_of(N).
Matrix shapovalov_gram(const Rational& c, const Rational& h, int N);

enum class PresentationKind { Verma, Generated, Irreducible };

struct LevelData {
  int level = 0;
  std::vector<PBWMonomial> monomials;       // partitions_of(level)
  EchelonBasis<PBWMonomial> submodule;      // J at this level
  std::vector<PBWMonomial> quotient_basis;  // monomials that are not pivots of J
};

// V(c,h) or a quotient V(c,h)/J with per-level echelon data built on demand.
class ModulePresentation {
 public:
  static std::shared_ptr<const ModulePresentation> verma(Rational c, Rational h);
  // J = submodule generated by the given vectors; each must be singular modulo J.
  static std::shared_ptr<const ModulePresentation> generated(Rational c, Rational h,
                                                             std::vector<UNegElement> generators);
  // J = radical of the contravariant form, valid for levels <= max_level.
  static std::shared_ptr<const ModulePresentation> irreducible(Rational c, Rational h, int max_level);

  PresentationKind kind() const { return kind_; }
  const Rational& c() const { return verma_.c(); }
  const Rational& h() const { return verma_.h(); }
  const std::vector<UNegElement>& generators() const { return generators_; }
  // Largest level this presentation may be queried at (-1 = unbounded).
  int max_level() const { return max_level_; }
  const VermaModule& verma_module() const { return verma_; }

  const LevelData& level(int N) const;
  std::size_t dimension(int N) const { return level(N).quotient_basis.size(); }
  std::size_t submodule_dimension(int N) const { return level(N).submodule.dimension(); }

  // Canonical representative: supported on quotient basis monomials only.
  UNegElement reduce(const UNegElement& x) const;
  bool in_submodule(const UNegElement& x) const { return reduce(x).is_zero(); }

  // L_k on a basis monomial, reduced. Memoized.
  const UNegElement& act(int k, const PBWMonomial& mono) const;
  UNegElement act(int k, const UNegElement& x) const;
  UNegElement apply(const WordSum& w, const UNegElement& x) const;

 private:
  ModulePresentation(PresentationKind kind, Rational c, Rational h, std::vector<UNegElement> gens,
                     int max_level);
  LevelData build_level(int N) const;

  PresentationKind kind_;
  VermaModule verma_;
  std::vector<UNegElement> generators_;
  int max_level_;
  mutable std::mutex mu_;
  mutable std::map<int, std::unique_ptr<LevelData>> levels_;
  mutable std::map<std::pair<int, PBWMonomial>, UNegElement> act_memo_;
  mutable std::map<int, Matrix> gram_;  // Irreducible only
};

using Presentation = std::shared_ptr<const ModulePresentation>;

// Echelon basis (first nonzero coordinate 1, so L_{-1}^N has coefficient 1 whenever
// it occurs) of level-N vectors killed by L_1 and L_2 modulo J.
std::vector<UNegElement> singular_vectors(const ModulePresentation& M, int N);

// Smallest level <= maxN carrying a singular vector of V(c,h).
std::optional<int> reducibility_degree(const Rational& c, const Rational& h, int maxN);

// Minimal list of vectors generating J(c,h) through level maxN, each singular in the
// quotient by the earlier ones. Cross-checked level by level against the radical;
// throws InternalError on a mismatch.
std::vector<UNegElement> maximal_submodule_generators(const Rational& c, const Rational& h, int maxN);

// L(c,h) through level maxN (radical form), after running the generator cross-check.
Presentation irreducible_quotient(const Rational& c, const Rational& h, int maxN);

// Verma singular vectors up to maxN, skipping those in the submodule generated by
// earlier ones. Stops after `limit` generators when limit > 0.
std::vector<UNegElement> verma_singular_generators(const Rational& c, const Rational& h, int maxN,
                                                   int limit = 0);

}  // namespace vir
