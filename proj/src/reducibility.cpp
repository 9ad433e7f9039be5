#include "virasoro/reducibility.hpp"

#include <algorithm>
#include <set>

#include "virasoro/errors.hpp"

namespace vir {

Polynomial phi_n(const PBWMonomial& mono, const Rational& alpha, const Rational& beta) {
  // L_{-k_r} ... L_{-k_1}: k_1 is the rightmost factor, the last stored part.
  Polynomial out(Rational(1));
  long partial = 0;
  for (auto it = mono.parts.rbegin(); it != mono.parts.rend(); ++it) {
    const int k = *it;
    partial += k;
    const Rational constant = alpha + Rational(1 - k) * beta + Rational(partial - 1);
    out *= Polynomial({constant, Rational(1)});
  }
  return out;
}

Polynomial phi_n(const UNegElement& u, const Rational& alpha, const Rational& beta) {
  Polynomial out;
  for (const auto& [m, a] : u) out += phi_n(m, alpha, beta) * a;
  return out;
}

std::string to_string(PolyMethod m) { return m == PolyMethod::PhiFormula ? "phi" : "elimination"; }

namespace {

int homogeneous_level(const UNegElement& u) {
  if (u.is_zero()) throw UserError("zero vector is not singular");
  const int lvl = u.begin()->first.level();
  for (const auto& [m, a] : u) {
    if (m.level() != lvl) throw UserError("vector is not homogeneous");
  }
  return lvl;
}

void require_singular(const Rational& c, const Rational& h, const UNegElement& u) {
  VermaModule V(c, h);
  if (!V.act(1, u).is_zero() || !V.act(2, u).is_zero()) {
    throw UserError(format_pbw(u) + " is not a singular vector of V(" + c.str() + ", " + h.str() + ")");
  }
}

PPoly monic_checked(Polynomial p, int level, PolyMethod method) {
  if (p.degree() != level) {
    throw InternalError("reducibility polynomial has degree " + std::to_string(p.degree()) + ", expected " +
                        std::to_string(level));
  }
  return PPoly{p.monic(), level, method};
}

}  // namespace

PPoly p_from_singular(const Rational& c, const Rational& h, const UNegElement& u, const Rational& alpha,
                      const Rational& beta) {
  const int level = homogeneous_level(u);
  require_singular(c, h, u);
  return monic_checked(phi_n(u, alpha, beta), level, PolyMethod::PhiFormula);
}

namespace {

// Rewrites v_k (x) L_{-j} y = L_{-j}(v_k (x) y) + (k + alpha + (1 - j) beta) v_{k-j} (x) y,
// highest level first, until only v_{n0-1} (x) v is left; returns its coefficient.
Rational eliminate(const TensorModule& T, const UNegElement& u, long n0, int m) {
  const auto& P = T.params();
  const TensorVector X = T.apply(to_words(u), T.vector(n0 + m - 1));
  TensorVector rest = X;
  TensorVector rebuilt;
  while (true) {
    const TensorKey* top = nullptr;
    for (const auto& [key, a] : rest) {
      if (!key.mono.empty() && (!top || key.mono.level() > top->mono.level())) top = &key;
    }
    if (!top) break;
    const TensorKey key = *top;
    const Rational a = rest.coefficient(key);
    const int j = key.mono.parts.front();
    const PBWMonomial tail = key.mono.rest();
    rest.add(key, -a);
    rest.add(TensorKey{key.m - j, tail}, a * (Rational(key.m) + P.alpha + Rational(1 - j) * P.beta));
    rebuilt.add_scaled(T.act(-j, T.vector(key.m, UNegElement(tail))), a);
  }
  const TensorKey target{n0 - 1, PBWMonomial()};
  if (rest.size() > 1 || (rest.size() == 1 && rest.begin()->first != target)) {
    throw InternalError("elimination left terms other than v_{n-1} (x) v: " + format_tensor(rest));
  }
  const Rational value = rest.coefficient(target);
  rebuilt.add(target, value);
  if (rebuilt != X) throw InternalError("elimination identity failed to re-verify");
  return value;
}

}  // namespace

PPoly p_via_elimination(const Rational& c, const Rational& h, const UNegElement& u, const Rational& alpha,
                        const Rational& beta) {
  const int m = homogeneous_level(u);
  require_singular(c, h, u);
  const ISParams params = variant_of(alpha, beta);
  const TensorModule T(params, ModulePresentation::generated(c, h, {u}));
  // Normalized index n0 corresponds to n0 - shift in the caller's alpha.
  const Rational shift = alpha - params.alpha;
  std::vector<std::pair<Rational, Rational>> points;
  for (long n0 = m + 2; n0 <= 2L * m + 2; ++n0) {
    if (!params.has_index(n0 - 1)) throw InternalError("elimination sample hits the dropped index");
    points.emplace_back(Rational(n0) - shift, eliminate(T, u, n0, m));
  }
  return monic_checked(interpolate(points), m, PolyMethod::Elimination);
}

std::string RootExpr::str() const {
  if (value) return value->str();
  std::string s = center.str() + (sign < 0 ? " - " : " + ") + scale.str() + "*sqrt(" + radicand.str() + ")";
  return complex ? s + " (complex)" : s;
}

std::vector<RootExpr> closed_form_roots(int level, const Rational& h, const Rational& alpha, const Rational& beta) {
  Rational center, scale, radicand;
  std::vector<RootExpr> out;
  if (level == 2) {
    center = -alpha + (Rational(4) * h - Rational(1)) / Rational(6);
    scale = Rational(1, 6);
    const Rational t = Rational(4) * h + Rational(5);
    radicand = t * t - Rational(24) * beta * (Rational(2) * h + Rational(1));
  } else if (level == 3) {
    RootExpr r;
    r.center = -alpha + h;
    r.value = r.center;
    out.push_back(r);
    center = -alpha + (h - Rational(1)) / Rational(2);
    scale = Rational(1, 2);
    const Rational t = h + Rational(3);
    radicand = t * t - Rational(8) * beta * (h + Rational(1));
  } else {
    throw UserError("closed-form roots are known for levels 2 and 3 only");
  }
  const auto root = radicand.sqrt();
  for (int sign : {1, -1}) {
    RootExpr r{center, scale, radicand, sign, std::nullopt, radicand.sign() < 0};
    if (root) r.value = center + Rational(sign) * scale * *root;
    out.push_back(r);
  }
  return out;
}

std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Irreducible: return "Irreducible";
    case VerdictStatus::Reducible: return "Reducible";
    case VerdictStatus::Inconclusive: return "Inconclusive";
  }
  return "?";
}

bool Verdict::has_disagreement() const {
  return std::any_of(cross_checks.begin(), cross_checks.end(),
                     [](const CrossCheck& x) { return x.outcome == "disagree"; });
}

namespace {

std::vector<ChainStep> compute_steps(const std::vector<PPoly>& polys, const ISParams& params, const Rational& h,
                                     std::vector<std::string>* notes) {
  const auto d = params.dropped_index();
  std::set<long> candidates;
  for (const auto& P : polys) {
    for (long r : P.poly.integer_roots()) candidates.insert(r);
    if (d) candidates.insert(*d - P.level + 1);
  }
  std::vector<ChainStep> steps;
  for (long n : candidates) {
    if (d && (n == *d || n - 1 == *d)) {
      if (notes && std::any_of(polys.begin(), polys.end(), [&](const PPoly& P) { return P.poly.eval(Rational(n)).is_zero(); })) {
        notes->push_back("root n=" + std::to_string(n) + " discarded: v[" + std::to_string(n == *d ? n : n - 1) +
                         "] is not a basis vector");
      }
      continue;
    }
    bool gap = true, missing_source = false;
    for (const auto& P : polys) {
      const bool unavailable = d && n + P.level - 1 == *d;
      missing_source = missing_source || unavailable;
      gap = gap && (unavailable || P.poly.eval(Rational(n)).is_zero());
    }
    if (!gap) continue;
    std::string rule = missing_source ? "relation needs the missing vector v[" + std::to_string(*d) + "]"
                                      : (polys.size() > 1 ? "common integral root n=" : "integral root n=") +
                                            std::to_string(n);
    steps.push_back({n - 1, n, subquotient_hw(n - 1, params, h), rule});
  }
  if (d) {
    bool gap = true;
    for (const auto& P : polys) gap = gap && (P.level == 1 || P.poly.eval(Rational(*d)).is_zero());
    if (gap) {
      steps.push_back({*d - 1, *d + 1, subquotient_hw(*d - 1, params, h),
                       "no relation bridges the missing vector v[" + std::to_string(*d) + "]"});
    }
  }
  std::sort(steps.begin(), steps.end(), [](const ChainStep& a, const ChainStep& b) { return a.lower < b.lower; });
  return steps;
}

UNegElement l_minus_one() { return UNegElement(PBWMonomial({1})); }

bool is_quarter_square(const Rational& h) {
  const auto r = (Rational(4) * h).sqrt();
  return r && r->is_integer();
}

void fill_polynomials(Verdict& v, const std::vector<UNegElement>& gens) {
  v.singular_generators = gens;
  for (const auto& g : gens) {
    v.polynomials.push_back(p_from_singular(v.c, v.h, g, v.params.alpha, v.params.beta));
    v.integral_roots.push_back(v.polynomials.back().poly.integer_roots());
  }
}

void decide_from_polynomials(Verdict& v) {
  v.steps = compute_steps(v.polynomials, v.params, v.h, &v.notes);
  for (const auto& s : v.steps) v.subquotient_weights.push_back(s.weight);
  v.status = v.steps.empty() ? VerdictStatus::Irreducible : VerdictStatus::Reducible;
}

void fusion_cross_check(Verdict& v, const Rational& alpha) {
  if (!v.label) return;
  if (v.params.beta == Rational(1)) {
    v.cross_checks.push_back({"fusion-predictor", "not-applicable", "beta = 1 means h1 = 0, outside the predictor"});
    return;
  }
  if (v.status == VerdictStatus::Inconclusive) {
    v.cross_checks.push_back({"fusion-predictor", "not-applicable", "no decision to compare"});
    return;
  }
  std::vector<std::string> predicted;
  for (const auto& r : reducible_pairs(*v.label)) {
    if (r.beta == v.params.beta && (r.alpha - alpha).is_integer()) {
      predicted.push_back("(" + r.l1.str() + "," + v.label->str() + "," + r.l3.str() + ") h3=" + r.h3.str());
    }
  }
  const bool predicts_reducible = !predicted.empty();
  const bool agree = predicts_reducible == (v.status == VerdictStatus::Reducible);
  std::string detail = predicts_reducible ? "admissible triples predict reducibility:" : "no admissible triple predicts reducibility";
  for (const auto& s : predicted) detail += " " + s;
  v.cross_checks.push_back({"fusion-predictor", agree ? "agree" : "disagree", detail});
  if (!agree) {
    v.notes.push_back("fusion predictor disagrees with the polynomial rule; status downgraded");
    v.status = VerdictStatus::Inconclusive;
  }
}

void oracle_cross_check(Verdict& v, const VerdictOptions& opt) {
  const TensorModule T(v.params, ModulePresentation::irreducible(v.c, v.h, opt.window.level_max));
  const auto evidence = chain_evidence(T, opt.window);
  std::set<std::pair<long, long>> seen, expected;
  std::string detail = "EVIDENCE (window m in [" + std::to_string(opt.window.m_min) + "," +
                       std::to_string(opt.window.m_max) + "], level <= " + std::to_string(opt.window.level_max) + "):";
  for (const auto& e : evidence) {
    if (e.gap) {
      seen.emplace(e.lower, e.upper);
      detail += " gap " + std::to_string(e.lower) + "->" + std::to_string(e.upper);
    }
  }
  if (seen.empty()) detail += " no gap";
  for (const auto& s : v.steps) {
    if (s.lower >= opt.window.m_min && s.upper <= opt.window.m_max) expected.emplace(s.lower, s.upper);
  }
  // When L_1 kills v[n*] (x) v the chain is not nested at n*, and the relation for U_{n-1}
  // reaching past n* does not put v[n-1] (x) v inside U_n. The rule is silent on those pairs.
  const Rational shift = v.params.alpha + Rational(2) * v.params.beta;
  if (!v.params.dropped_index() && shift.is_integer() && !v.polynomials.empty()) {
    const long nstar = -shift.to_long();
    std::string skipped;
    for (long n = opt.window.m_min + 1; n <= std::min(nstar, opt.window.m_max); ++n) {
      const bool settled = std::any_of(v.polynomials.begin(), v.polynomials.end(), [&](const PPoly& P) {
        return n + P.level - 1 <= nstar && !P.poly.eval(Rational(n)).is_zero();
      });
      if (settled || expected.count({n - 1, n})) continue;
      seen.erase({n - 1, n});
      skipped += " " + std::to_string(n - 1) + "->" + std::to_string(n);
    }
    if (!skipped.empty()) detail += "; not compared (nesting breaks at v[" + std::to_string(nstar) + "]):" + skipped;
  }
  std::string outcome;
  if (v.status == VerdictStatus::Inconclusive) {
    outcome = "not-applicable";
  } else if (v.steps.empty() && v.status == VerdictStatus::Reducible) {
    outcome = seen.empty() ? "disagree" : "agree";  // steps not located by the rule
  } else {
    outcome = seen == expected ? "agree" : "disagree";
  }
  v.cross_checks.push_back({"truncated-oracle", outcome, detail});
  if (outcome == "disagree") {
    v.notes.push_back("truncated oracle disagrees with the decision; status downgraded");
    v.status = VerdictStatus::Inconclusive;
  }
}

void elimination_cross_check(Verdict& v) {
  for (std::size_t i = 0; i < v.singular_generators.size(); ++i) {
    const PPoly e = p_via_elimination(v.c, v.h, v.singular_generators[i], v.params.alpha, v.params.beta);
    const bool agree = e.poly == v.polynomials[i].poly;
    v.cross_checks.push_back({"elimination-level-" + std::to_string(v.polynomials[i].level), agree ? "agree" : "disagree",
                              "phi: " + v.polynomials[i].poly.str() + "; elimination: " + e.poly.str()});
    if (!agree) v.status = VerdictStatus::Inconclusive;
  }
}

}  // namespace

std::vector<ChainStep> chain_steps(const std::vector<PPoly>& polys, const ISParams& params, const Rational& h) {
  return compute_steps(polys, params, h, nullptr);
}

Verdict verdict(const Rational& alpha, const Rational& beta, const Rational& c, const Rational& h,
                const VerdictOptions& opt) {
  if (opt.cutoff < 1) throw UserError("cutoff must be at least 1");
  Verdict v;
  v.c = c;
  v.h = h;
  v.params = variant_of(alpha, beta);
  v.label = minimal_label(c, h);
  const auto pq = minimal_model_params(c);

  if (h.is_zero() && !alpha.is_integer()) {
    fill_polynomials(v, {l_minus_one()});
    v.rules_fired.push_back("h0-nonintegral: h = 0 and alpha is not an integer, so the module is irreducible");
    v.status = VerdictStatus::Irreducible;
  } else if (h.is_zero() && !pq) {
    fill_polynomials(v, {l_minus_one()});
    v.rules_fired.push_back("h0-integral: h = 0, alpha integral, c not minimal; quotient is a Verma module");
    decide_from_polynomials(v);
    if (v.status != VerdictStatus::Reducible) throw InternalError("h = 0 integral-alpha case produced no strict step");
  } else if (v.label) {
    const auto& l = *v.label;
    const int lv1 = l.m * l.n, lv2 = (l.p - l.m) * (l.q - l.n);
    if (std::max(lv1, lv2) > opt.cutoff) {
      v.rules_fired.push_back("minimal model " + l.str() + ": singular vectors at levels " + std::to_string(lv1) +
                              " and " + std::to_string(lv2) + " exceed the cutoff " + std::to_string(opt.cutoff));
      v.status = VerdictStatus::Inconclusive;
    } else {
      const auto gens = verma_singular_generators(c, h, std::max(lv1, lv2));
      if (gens.size() != 2) {
        throw InternalError("minimal model Verma module should have two independent singular vectors, found " +
                            std::to_string(gens.size()));
      }
      fill_polynomials(v, gens);
      v.rules_fired.push_back("minimal model " + l.str() + " of (p,q)=(" + std::to_string(l.p) + "," +
                              std::to_string(l.q) + "): reducible iff both polynomials share an integral root");
      decide_from_polynomials(v);
    }
  } else {
    const auto gens = verma_singular_generators(c, h, opt.cutoff, pq ? 0 : 1);
    if (gens.empty()) {
      if (c == Rational(1) && !is_quarter_square(h)) {
        v.rules_fired.push_back("verma-factor: V(1,h) is irreducible for h != m^2/4, and V' (x) V(c,h) is always reducible");
        v.status = VerdictStatus::Reducible;
      } else {
        v.rules_fired.push_back("no singular vector up to level " + std::to_string(opt.cutoff) +
                                " and no irreducibility certificate for V(c,h)");
        v.status = VerdictStatus::Inconclusive;
      }
    } else {
      fill_polynomials(v, gens);
      v.rules_fired.push_back(gens.size() > 1 ? "common integral root of the generators' polynomials"
                                              : "integral-roots: integral roots of p");
      decide_from_polynomials(v);
      if (pq && gens.size() == 1 && v.status == VerdictStatus::Reducible) {
        v.notes.push_back("minimal central charge with h outside the Kac table: a second generator above the cutoff could remove the step");
        v.status = VerdictStatus::Inconclusive;
      }
    }
  }

  fusion_cross_check(v, alpha);
  if (opt.run_cross_checks) {
    if (!v.singular_generators.empty()) elimination_cross_check(v);
    oracle_cross_check(v, opt);
  }
  return v;
}

std::vector<IntertwinerType> predict_intertwiners(const Verdict& v) {
  if (v.status != VerdictStatus::Reducible) throw UserError("intertwiner prediction needs a Reducible verdict");
  std::vector<IntertwinerType> out;
  const Rational h1 = Rational(1) - v.params.beta;
  for (const auto& h3 : v.subquotient_weights) {
    IntertwinerType t{h1, v.h, h3, (v.params.alpha_original - (h1 + v.h - h3)).is_integer(), ""};
    t.status = h1.is_zero() ? "module/transposed operator (h1 = 0)" : "indicated, not proven";
    out.push_back(t);
  }
  return out;
}

}  // namespace vir
