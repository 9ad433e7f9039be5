#include "virasoro/json_io.hpp"

namespace vir::json_io {

json rational(const Rational& r) { return r.str(); }

json polynomial(const Polynomial& p) {
  json coeffs = json::array();
  for (int i = 0; i <= p.degree(); ++i) coeffs.push_back(rational(p.coefficient(i)));
  return {{"coefficients", coeffs}, {"text", p.str("n")}};
}

json element(const UNegElement& u) {
  json terms = json::array();
  for (const auto& [m, a] : u) terms.push_back({{"monomial", m.parts}, {"coefficient", rational(a)}});
  return {{"text", format_pbw(u)}, {"terms", terms}};
}

json ppoly(const PPoly& p) {
  json out = polynomial(p.poly);
  out["level"] = p.level;
  out["method"] = to_string(p.method);
  out["integral_roots"] = p.poly.integer_roots();
  return out;
}

json label(const MinimalLabel& l) { return {{"m", l.m}, {"n", l.n}, {"h", rational(conformal_weight(l))}}; }

namespace {

json pair_of(const MinimalLabel& l) { return json::array({l.m, l.n}); }

json rationals(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& r : v) out.push_back(rational(r));
  return out;
}

}  // namespace

json verdict(const Verdict& v) {
  json out;
  out["status"] = to_string(v.status);
  out["c"] = rational(v.c);
  out["h"] = rational(v.h);
  out["alpha"] = rational(v.params.alpha_original);
  out["alpha_normalized"] = rational(v.params.alpha);
  out["beta"] = rational(v.params.beta);
  out["variant"] = to_string(v.params.variant);
  if (v.label) {
    out["minimal_model"] = {{"p", v.label->p}, {"q", v.label->q}, {"label", pair_of(*v.label)}};
  } else {
    out["minimal_model"] = nullptr;
  }
  json gens = json::array();
  for (const auto& g : v.singular_generators) gens.push_back(element(g));
  out["singular_generators"] = gens;
  json polys = json::array();
  for (const auto& p : v.polynomials) polys.push_back(ppoly(p));
  out["polynomials"] = polys;
  out["integral_roots"] = v.integral_roots;
  json steps = json::array();
  for (const auto& s : v.steps) {
    steps.push_back({{"lower", s.lower}, {"upper", s.upper}, {"weight", rational(s.weight)}, {"rule", s.rule}});
  }
  out["steps"] = steps;
  out["subquotient_weights"] = rationals(v.subquotient_weights);
  out["rules_fired"] = v.rules_fired;
  json checks = json::array();
  for (const auto& c : v.cross_checks) {
    checks.push_back({{"name", c.name}, {"outcome", c.outcome}, {"detail", c.detail}});
  }
  out["cross_checks"] = checks;
  out["notes"] = v.notes;
  return out;
}

json intertwiners(const std::vector<IntertwinerType>& types) {
  json out = json::array();
  for (const auto& t : types) {
    out.push_back({{"h1", rational(t.h1)},
                   {"h2", rational(t.h2)},
                   {"h3", rational(t.h3)},
                   {"alpha_consistent", t.alpha_consistent},
                   {"status", t.status}});
  }
  return out;
}

json evidence(const std::vector<StepEvidence>& steps, const TruncationWindow& window) {
  json rows = json::array();
  for (const auto& s : steps) rows.push_back({{"lower", s.lower}, {"upper", s.upper}, {"gap", s.gap}});
  return {{"kind", "EVIDENCE"},
          {"window", {{"m_min", window.m_min}, {"m_max", window.m_max}, {"level_max", window.level_max}}},
          {"steps", rows}};
}

json minimal_table(int p, int q) {
  const auto table = kac_table(p, q);
  json labels = json::array(), fusion = json::array();
  for (const auto& l : table) labels.push_back(label(l));
  for (const auto& l1 : table) {
    for (const auto& l2 : table) {
      json out = json::array();
      for (const auto& l3 : fusion_product(l1, l2)) out.push_back(pair_of(l3));
      fusion.push_back(json::array({pair_of(l1), pair_of(l2), out}));
    }
  }
  return {{"p", p}, {"q", q}, {"c", rational(central_charge(p, q))}, {"labels", labels}, {"fusion", fusion}};
}

json reducible_pairs(const MinimalLabel& l2) {
  auto rows = [](const std::vector<ReduciblePair>& v) {
    json out = json::array();
    for (const auto& r : v) {
      out.push_back({{"alpha", rational(r.alpha)},
                     {"beta", rational(r.beta)},
                     {"h3", rational(r.h3)},
                     {"l1", pair_of(r.l1)},
                     {"l3", pair_of(r.l3)}});
    }
    return out;
  };
  return {{"p", l2.p},
          {"q", l2.q},
          {"label", pair_of(l2)},
          {"h", rational(conformal_weight(l2))},
          {"reducible_pairs", rows(vir::reducible_pairs(l2))},
          {"module_operators", rows(module_operators(l2))}};
}

json replay(const std::vector<ReplayCase>& cases) {
  json out = json::array();
  for (const auto& c : cases) {
    json checks = json::array();
    for (const auto& k : c.checks) {
      checks.push_back({{"description", k.description}, {"residual", k.residual}, {"pass", k.pass}});
    }
    out.push_back({{"id", c.id}, {"source", c.source}, {"pass", c.pass()}, {"checks", checks}});
  }
  return out;
}

}  // namespace vir::json_io
