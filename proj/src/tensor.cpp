#include "virasoro/tensor.hpp"

#include <algorithm>
#include <deque>

#include "virasoro/errors.hpp"

namespace vir {

TensorModule::TensorModule(ISParams params, Presentation module)
    : params_(std::move(params)), module_(std::move(module)) {}

TensorVector TensorModule::vector(long m, const UNegElement& x) const {
  if (!params_.has_index(m)) {
    throw UserError("v[" + std::to_string(m) + "] is not a basis vector of the " +
                    to_string(params_.variant) + " intermediate series module");
  }
  TensorVector out;
  for (const auto& [mono, a] : module_->reduce(x)) out.add(TensorKey{m, mono}, a);
  return out;
}

TensorVector TensorModule::vector(long m) const { return vector(m, UNegElement(PBWMonomial())); }

TensorVector TensorModule::act(int k, const TensorVector& x) const {
  TensorVector out;
  for (const auto& [key, a] : x) {
    const Rational coef = params_.coefficient(k, key.m);
    if (!params_.has_index(key.m + k)) {
      if (!params_.dropped_is_quotient() && !coef.is_zero()) {
        throw InternalError("nonzero coefficient onto the dropped basis vector");
      }
    } else {
      out.add(TensorKey{key.m + k, key.mono}, a * coef);
    }
    for (const auto& [mono, b] : module_->act(k, key.mono)) out.add(TensorKey{key.m, mono}, a * b);
  }
  return out;
}

TensorVector TensorModule::apply(const WordSum& w, const TensorVector& x) const {
  TensorVector out;
  for (const auto& [word, a] : w) {
    TensorVector y = x;
    for (auto it = word.indices.rbegin(); it != word.indices.rend() && !y.is_zero(); ++it) y = act(*it, y);
    out.add_scaled(y, a);
  }
  return out;
}

Rational TensorModule::l0_eigenvalue(const TensorKey& key) const {
  return module_->h() + Rational(key.mono.level()) - Rational(key.m) - params_.alpha - params_.beta;
}

std::string format_tensor(const TensorVector& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [key, a] : x) {
    const bool neg = a.sign() < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    out += a.abs().str() + "*v[" + std::to_string(key.m) + "]⊗" + (key.mono.empty() ? "v" : key.mono.str() + "*v");
  }
  return out;
}

std::map<long, TensorVector> weight_components(const TensorVector& x) {
  std::map<long, TensorVector> out;
  for (const auto& [key, a] : x) out[key.weight()].add(key, a);
  return out;
}

std::map<long, std::size_t> CyclicSubspace::dimensions() const {
  std::map<long, std::size_t> out;
  for (const auto& [w, b] : blocks_) out[w] = b.dimension();
  return out;
}

CyclicSubspace cyclic_subspace(const TensorModule& T, long n0, const TruncationWindow& window, int margin) {
  if (window.m_min > window.m_max || window.level_max < 0 || margin < 0) {
    throw UserError("invalid truncation window");
  }
  if (n0 < window.m_min || n0 > window.m_max) throw UserError("generator index outside the window");
  CyclicSubspace U;
  U.n0_ = n0;
  U.window_ = window;
  U.padded_ = TruncationWindow{window.m_min - margin, window.m_max + margin, window.level_max};
  const auto& P = U.padded_;
  const int K = static_cast<int>(P.m_max - P.m_min) + P.level_max;
  auto inside = [&](const TensorVector& y) {
    for (const auto& [key, a] : y) {
      if (key.m < P.m_min || key.m > P.m_max || key.mono.level() > P.level_max) return false;
    }
    return true;
  };

  std::deque<TensorVector> queue;
  auto offer = [&](const TensorVector& y) {
    if (y.is_zero() || !inside(y)) return;
    auto& block = U.blocks_[y.begin()->first.weight()];
    const TensorVector r = block.reduce(y);
    if (r.is_zero()) return;
    block.insert(r);
    queue.push_back(r);
  };
  offer(T.vector(n0));
  while (!queue.empty()) {
    const TensorVector v = std::move(queue.front());
    queue.pop_front();
    ++U.rounds_;
    int top = 0;
    for (const auto& [key, a] : v) top = std::max(top, key.mono.level());
    for (int k = -K; k <= K; ++k) {
      if (k == 0) continue;  // L_0 acts diagonally on weight spaces
      // Lowering past the level cap cannot stay inside; skipping it avoids asking the
      // module for levels beyond its presentation.
      if (k < 0 && top - k > P.level_max) continue;
      offer(T.act(k, v));
    }
  }
  return U;
}

Membership contains(const CyclicSubspace& U, const TensorVector& x) {
  Membership result;
  result.member = true;
  TensorVector rebuilt;
  for (const auto& [w, part] : weight_components(x)) {
    auto it = U.blocks().find(w);
    if (it == U.blocks().end()) {
      result.member = false;
      result.certificate.clear();
      return result;
    }
    auto coords = it->second.coordinates(part);
    if (!coords) {
      result.member = false;
      result.certificate.clear();
      return result;
    }
    for (const auto& [pivot, a] : *coords) {
      const TensorVector& row = it->second.rows().at(pivot);
      result.certificate.emplace_back(row, a);
      rebuilt.add_scaled(row, a);
    }
  }
  result.certificate_verified = rebuilt == x;
  if (!result.certificate_verified) throw InternalError("membership certificate does not re-multiply to the query");
  return result;
}

Rational subquotient_hw(long n, const ISParams& params, const Rational& h) {
  return h - params.alpha - params.beta - Rational(n);
}

std::vector<StepEvidence> chain_evidence(const TensorModule& T, const TruncationWindow& window, int margin) {
  std::vector<long> idx;
  for (long m = window.m_min; m <= window.m_max; ++m) {
    if (T.params().has_index(m)) idx.push_back(m);
  }
  std::vector<StepEvidence> out;
  for (std::size_t i = 0; i + 1 < idx.size(); ++i) {
    const CyclicSubspace U = cyclic_subspace(T, idx[i + 1], window, margin);
    out.push_back({idx[i], idx[i + 1], !contains(U, T.vector(idx[i])).member});
  }
  return out;
}

}  // namespace vir
