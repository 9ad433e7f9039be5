#include "virasoro/verma.hpp"

#include <algorithm>

#include "virasoro/errors.hpp"

namespace vir {

VermaModule::VermaModule(Rational c, Rational h) : c_(std::move(c)), h_(std::move(h)) {}

const VermaElement& VermaModule::act(int k, const PBWMonomial& mono) const {
  const auto key = std::make_pair(k, mono);
  {
    std::lock_guard lock(mu_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  VermaElement value = compute(k, mono);
  std::lock_guard lock(mu_);
  return memo_.emplace(key, std::move(value)).first->second;
}

VermaElement VermaModule::compute(int k, const PBWMonomial& mono) const {
  VermaElement out;
  if (k == 0) {
    out.add(mono, h_ + Rational(mono.level()));
    return out;
  }
  if (mono.empty()) {
    if (k < 0) out.add(PBWMonomial({-k}), Rational(1));
    return out;
  }
  const int a = mono.parts.front();
  const PBWMonomial rest = mono.rest();
  if (k < 0) {
    const int j = -k;
    if (j >= a) {
      std::vector<int> parts{j};
      parts.insert(parts.end(), mono.parts.begin(), mono.parts.end());
      out.add(PBWMonomial(std::move(parts)), Rational(1));
      return out;
    }
    // L_{-j} L_{-a} = L_{-a} L_{-j} + (a - j) L_{-j-a}
    out = act(-a, act(-j, rest));
    out.add_scaled(act(-(j + a), rest), Rational(a - j));
    return out;
  }
  // L_k L_{-a} = L_{-a} L_k + (k + a) L_{k-a} + delta_{k,a} (k^3 - k)/12 c
  out = act(-a, act(k, rest));
  out.add_scaled(act(k - a, rest), Rational(k + a));
  if (k == a) {
    const long kk = k;
    out.add(rest, Rational(kk * kk * kk - kk, 12) * c_);
  }
  return out;
}

VermaElement VermaModule::act(int k, const VermaElement& x) const {
  VermaElement out;
  for (const auto& [m, a] : x) out.add_scaled(act(k, m), a);
  return out;
}

VermaElement VermaModule::apply(const WordSum& w, const VermaElement& x) const {
  VermaElement out;
  for (const auto& [word, a] : w) {
    VermaElement y = x;
    for (auto it = word.indices.rbegin(); it != word.indices.rend() && !y.is_zero(); ++it) {
      y = act(*it, y);
    }
    out.add_scaled(y, a);
  }
  return out;
}

namespace {

std::size_t index_of(const std::vector<PBWMonomial>& basis, const PBWMonomial& m) {
  auto it = std::lower_bound(basis.begin(), basis.end(), m);
  if (it == basis.end() || *it != m) throw InternalError("monomial " + m.str() + " not in level basis");
  return static_cast<std::size_t>(it - basis.begin());
}

// G_N[lambda][mu] = sum_nu (L_{a} L_{-mu} v)_nu G_{N-a}[lambda'][nu], lambda = [a, lambda'].
const Matrix& gram_level(const VermaModule& V, int N, std::map<int, Matrix>& cache) {
  if (auto it = cache.find(N); it != cache.end()) return it->second;
  const auto basis = partitions_of(N);
  Matrix G(basis.size(), basis.size());
  if (N == 0) {
    G(0, 0) = Rational(1);
  } else {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const int a = basis[i].parts.front();
      const Matrix& lower = gram_level(V, N - a, cache);
      const auto lower_basis = partitions_of(N - a);
      const std::size_t r = index_of(lower_basis, basis[i].rest());
      for (std::size_t j = 0; j < basis.size(); ++j) {
        Rational s(0);
        for (const auto& [nu, coef] : V.act(a, basis[j])) s += coef * lower(r, index_of(lower_basis, nu));
        G(i, j) = s;
      }
    }
  }
  return cache.emplace(N, std::move(G)).first->second;
}

}  // namespace

Matrix shapovalov_gram(const Rational& c, const Rational& h, int N) {
  if (N < 0) throw UserError("gram level must be non-negative");
  VermaModule V(c, h);
  std::map<int, Matrix> cache;
  return gram_level(V, N, cache);
}

ModulePresentation::ModulePresentation(PresentationKind kind, Rational c, Rational h,
                                       std::vector<UNegElement> gens, int max_level)
    : kind_(kind), verma_(std::move(c), std::move(h)), generators_(std::move(gens)), max_level_(max_level) {}

Presentation ModulePresentation::verma(Rational c, Rational h) {
  return Presentation(new ModulePresentation(PresentationKind::Verma, std::move(c), std::move(h), {}, -1));
}

Presentation ModulePresentation::generated(Rational c, Rational h, std::vector<UNegElement> generators) {
  for (const auto& g : generators) {
    if (g.is_zero()) throw UserError("submodule generator is zero");
    const int lvl = g.begin()->first.level();
    for (const auto& [m, a] : g) {
      if (m.level() != lvl) throw UserError("submodule generator is not homogeneous");
    }
    if (lvl == 0) throw UserError("submodule generator at level 0 generates the whole module");
  }
  Presentation P(new ModulePresentation(PresentationKind::Generated, std::move(c), std::move(h),
                                        std::move(generators), -1));
  for (const auto& g : P->generators()) {
    if (!P->in_submodule(P->act(1, g)) || !P->in_submodule(P->act(2, g))) {
      throw UserError("generator " + format_pbw(g) + " is not singular in the quotient");
    }
  }
  return P;
}

Presentation ModulePresentation::irreducible(Rational c, Rational h, int max_level) {
  if (max_level < 0) throw UserError("max level must be non-negative");
  return Presentation(
      new ModulePresentation(PresentationKind::Irreducible, std::move(c), std::move(h), {}, max_level));
}

const LevelData& ModulePresentation::level(int N) const {
  if (N < 0) throw InternalError("negative level");
  if (max_level_ >= 0 && N > max_level_) {
    throw UserError("level " + std::to_string(N) + " exceeds the presentation cap " +
                    std::to_string(max_level_));
  }
  {
    std::lock_guard lock(mu_);
    if (auto it = levels_.find(N); it != levels_.end()) return *it->second;
  }
  auto data = std::make_unique<LevelData>(build_level(N));
  std::lock_guard lock(mu_);
  return *levels_.try_emplace(N, std::move(data)).first->second;
}

LevelData ModulePresentation::build_level(int N) const {
  LevelData d;
  d.level = N;
  d.monomials = partitions_of(N);
  if (kind_ == PresentationKind::Generated) {
    for (const auto& g : generators_) {
      const int m = g.begin()->first.level();
      if (m > N) continue;
      for (const auto& lam : partitions_of(N - m)) {
        UNegElement y = g;
        for (auto it = lam.parts.rbegin(); it != lam.parts.rend(); ++it) y = verma_.act(-*it, y);
        d.submodule.insert(y);
      }
    }
  } else if (kind_ == PresentationKind::Irreducible && N > 0) {
    std::vector<std::vector<Rational>> radical;
    {
      std::lock_guard lock(mu_);
      radical = gram_level(verma_, N, gram_).nullspace();
    }
    for (const auto& v : radical) {
      UNegElement x;
      for (std::size_t j = 0; j < v.size(); ++j) x.add(d.monomials[j], v[j]);
      d.submodule.insert(x);
    }
  }
  for (const auto& m : d.monomials) {
    if (!d.submodule.is_pivot(m)) d.quotient_basis.push_back(m);
  }
  return d;
}

UNegElement ModulePresentation::reduce(const UNegElement& x) const {
  if (kind_ == PresentationKind::Verma) return x;
  std::map<int, UNegElement> by_level;
  for (const auto& [m, a] : x) by_level[m.level()].add(m, a);
  UNegElement out;
  for (auto& [N, part] : by_level) out += level(N).submodule.reduce(std::move(part));
  return out;
}

const UNegElement& ModulePresentation::act(int k, const PBWMonomial& mono) const {
  const auto key = std::make_pair(k, mono);
  {
    std::lock_guard lock(mu_);
    if (auto it = act_memo_.find(key); it != act_memo_.end()) return it->second;
  }
  UNegElement value = reduce(verma_.act(k, mono));
  std::lock_guard lock(mu_);
  return act_memo_.emplace(key, std::move(value)).first->second;
}

UNegElement ModulePresentation::act(int k, const UNegElement& x) const {
  UNegElement out;
  for (const auto& [m, a] : x) out.add_scaled(act(k, m), a);
  return out;
}

UNegElement ModulePresentation::apply(const WordSum& w, const UNegElement& x) const {
  UNegElement out;
  for (const auto& [word, a] : w) {
    UNegElement y = reduce(x);
    for (auto it = word.indices.rbegin(); it != word.indices.rend() && !y.is_zero(); ++it) {
      y = act(*it, y);
    }
    out.add_scaled(y, a);
  }
  return out;
}

std::vector<UNegElement> singular_vectors(const ModulePresentation& M, int N) {
  if (N < 1) throw UserError("singular vector level must be at least 1");
  const auto& Q = M.level(N).quotient_basis;
  if (Q.empty()) return {};
  std::map<PBWMonomial, std::size_t> row_of;
  std::vector<std::pair<UNegElement, UNegElement>> images;
  for (const auto& q : Q) {
    images.emplace_back(M.act(1, q), M.act(2, q));
    for (const auto* img : {&images.back().first, &images.back().second}) {
      for (const auto& [m, a] : *img) row_of.try_emplace(m, 0);
    }
  }
  std::size_t r = 0;
  for (auto& [m, idx] : row_of) idx = r++;
  Matrix A(row_of.size(), Q.size());
  for (std::size_t j = 0; j < Q.size(); ++j) {
    for (const auto* img : {&images[j].first, &images[j].second}) {
      for (const auto& [m, a] : *img) A(row_of[m], j) = a;
    }
  }
  std::vector<UNegElement> out;
  if (row_of.empty()) {
    // Every quotient vector is singular; echelon form of the identity.
    for (const auto& q : Q) out.emplace_back(q);
    return out;
  }
  for (const auto& v : A.nullspace()) {
    UNegElement x;
    for (std::size_t j = 0; j < v.size(); ++j) x.add(Q[j], v[j]);
    out.push_back(std::move(x));
  }
  return out;
}

std::optional<int> reducibility_degree(const Rational& c, const Rational& h, int maxN) {
  if (maxN < 1) throw UserError("max level must be at least 1");
  auto V = ModulePresentation::verma(c, h);
  for (int N = 1; N <= maxN; ++N) {
    if (!singular_vectors(*V, N).empty()) return N;
  }
  return std::nullopt;
}

std::vector<UNegElement> verma_singular_generators(const Rational& c, const Rational& h, int maxN, int limit) {
  auto V = ModulePresentation::verma(c, h);
  std::vector<UNegElement> gens;
  for (int N = 1; N <= maxN; ++N) {
    const auto sv = singular_vectors(*V, N);
    if (sv.empty()) continue;
    Presentation G = ModulePresentation::generated(c, h, gens);
    for (const auto& s : sv) {
      if (G->in_submodule(s)) continue;
      gens.push_back(s);
      if (limit > 0 && static_cast<int>(gens.size()) >= limit) return gens;
      G = ModulePresentation::generated(c, h, gens);
    }
  }
  return gens;
}

std::vector<UNegElement> maximal_submodule_generators(const Rational& c, const Rational& h, int maxN) {
  auto rad = ModulePresentation::irreducible(c, h, maxN);
  std::vector<UNegElement> gens;
  Presentation G = ModulePresentation::generated(c, h, gens);
  for (int N = 1; N <= maxN; ++N) {
    auto check_inclusion = [&] {
      for (const auto& [p, row] : G->level(N).submodule.rows()) {
        if (!rad->in_submodule(row)) {
          throw InternalError("generated submodule escapes the radical at level " + std::to_string(N));
        }
      }
    };
    check_inclusion();
    if (G->submodule_dimension(N) == rad->submodule_dimension(N)) continue;
    for (const auto& s : singular_vectors(*G, N)) {
      if (!rad->in_submodule(s) || G->in_submodule(s)) continue;
      gens.push_back(s);
      G = ModulePresentation::generated(c, h, gens);
      if (G->submodule_dimension(N) == rad->submodule_dimension(N)) break;
    }
    check_inclusion();
    if (G->submodule_dimension(N) != rad->submodule_dimension(N)) {
      throw InternalError("radical at level " + std::to_string(N) +
                          " is not generated by singular vectors of lower quotients");
    }
  }
  return gens;
}

Presentation irreducible_quotient(const Rational& c, const Rational& h, int maxN) {
  if (maxN < 1) throw UserError("max level must be at least 1");
  maximal_submodule_generators(c, h, maxN);
  return ModulePresentation::irreducible(c, h, maxN);
}

}  // namespace vir
