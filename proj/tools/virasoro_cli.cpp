#include <CLI11.hpp>
#include <algorithm>
#include <iostream>
#include <sstream>

#include "virasoro/errors.hpp"
#include "virasoro/json_io.hpp"

using namespace vir;
using json_io::json;

namespace {

// Parsed rational flag; errors name the flag.
Rational flag_rational(const std::string& flag, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const UserError& e) {
    throw UserError(flag + ": " + e.what());
  }
}

void flag_model(int p, int q) {
  try {
    validate_model(p, q);
  } catch (const UserError& e) {
    throw UserError(std::string("--p/--q: ") + e.what());
  }
}

MinimalLabel flag_label(int p, int q, int m, int n, const std::string& mflag, const std::string& nflag) {
  flag_model(p, q);
  if (m <= 0 || m >= p) throw UserError(mflag + ": expected 0 < m < p, got " + std::to_string(m));
  if (n <= 0 || n >= q) throw UserError(nflag + ": expected 0 < n < q, got " + std::to_string(n));
  return make_label(p, q, m, n);
}

void require_positive(const std::string& flag, int v) {
  if (v < 1) throw UserError(flag + ": must be at least 1, got " + std::to_string(v));
}

struct Output {
  bool as_json = false;
  void emit(const json& j, const std::string& text) const {
    if (as_json) {
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << text;
    }
  }
};

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string roots_str(const std::vector<long>& roots) {
  std::vector<std::string> s;
  for (long r : roots) s.push_back(std::to_string(r));
  return "{" + join(s, ", ") + "}";
}

std::string verdict_text(const Verdict& v) {
  std::ostringstream os;
  os << "status: " << to_string(v.status) << "\n";
  os << "c = " << v.c << ", h = " << v.h << ", alpha = " << v.params.alpha_original << " (normalized "
     << v.params.alpha << "), beta = " << v.params.beta << ", variant " << to_string(v.params.variant) << "\n";
  if (v.label) os << "minimal model (p,q) = (" << v.label->p << "," << v.label->q << "), label " << v.label->str() << "\n";
  for (std::size_t i = 0; i < v.polynomials.size(); ++i) {
    os << "level " << v.polynomials[i].level << " singular vector: " << format_pbw(v.singular_generators[i]) << "\n";
    os << "  p(n) = " << v.polynomials[i].poly.str() << ", integral roots " << roots_str(v.integral_roots[i]) << "\n";
  }
  for (const auto& s : v.steps) {
    os << "strict step U_" << s.lower << " / U_" << s.upper << ": highest weight " << s.weight << " (" << s.rule << ")\n";
  }
  for (const auto& r : v.rules_fired) os << "rule: " << r << "\n";
  for (const auto& c : v.cross_checks) os << "cross-check " << c.name << ": " << c.outcome << " (" << c.detail << ")\n";
  for (const auto& n : v.notes) os << "note: " << n << "\n";
  return os.str();
}

int run(int argc, char** argv) {
  CLI::App app{"Exact computations for Virasoro tensor products V'_{alpha,beta} (x) L(c,h)"};
  app.set_help_flag("--help", "Print this help message and exit");  // --h is the highest weight
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  app.add_flag("--json", out.as_json, "Emit JSON");

  std::string c_s, h_s, a_s, b_s;
  auto add_ch = [&](CLI::App* sc) {
    sc->add_option("--c", c_s, "Central charge")->required();
    sc->add_option("--h", h_s, "Highest weight")->required();
  };
  auto add_ab = [&](CLI::App* sc) {
    sc->add_option("--alpha", a_s, "Intermediate series alpha")->required();
    sc->add_option("--beta", b_s, "Intermediate series beta")->required();
  };
  int exit_code = 0;

  auto* singular = app.add_subcommand("singular", "Singular vectors of V(c,h), or of its quotient by lower ones");
  add_ch(singular);
  int level = 0;
  bool quotient = false;
  singular->add_option("--level", level, "Level")->required();
  singular->add_flag("--quotient", quotient, "Work modulo the submodule generated at lower levels");
  singular->callback([&] {
    require_positive("--level", level);
    const Rational c = flag_rational("--c", c_s), h = flag_rational("--h", h_s);
    Presentation M = ModulePresentation::verma(c, h);
    if (quotient && level > 1) {
      const auto lower = verma_singular_generators(c, h, level - 1);
      if (!lower.empty()) M = ModulePresentation::generated(c, h, lower);
    }
    json vecs = json::array();
    std::string text;
    for (const auto& s : singular_vectors(*M, level)) {
      json e = json_io::element(s);
      e["integral"] = format_pbw(primitive_integral(s));
      vecs.push_back(e);
      text += format_pbw(s) + "\n  integral form: " + format_pbw(primitive_integral(s)) + "\n";
    }
    if (text.empty()) text = "no singular vector at level " + std::to_string(level) + "\n";
    out.emit({{"c", c.str()}, {"h", h.str()}, {"level", level}, {"quotient", quotient}, {"singular_vectors", vecs}}, text);
  });

  auto* degree = app.add_subcommand("degree", "Lowest level carrying a singular vector of V(c,h)");
  add_ch(degree);
  int max_level = 12;
  degree->add_option("--max-level", max_level, "Largest level scanned")->capture_default_str();
  degree->callback([&] {
    require_positive("--max-level", max_level);
    const Rational c = flag_rational("--c", c_s), h = flag_rational("--h", h_s);
    const auto d = reducibility_degree(c, h, max_level);
    out.emit({{"c", c.str()}, {"h", h.str()}, {"max_level", max_level}, {"degree", d ? json(*d) : json(nullptr)}},
             d ? "degree " + std::to_string(*d) + "\n" : "no singular vector up to level " + std::to_string(max_level) + "\n");
  });

  auto* ppoly = app.add_subcommand("ppoly", "Reducibility polynomials of the singular generators");
  add_ch(ppoly);
  add_ab(ppoly);
  std::string method = "phi";
  int cutoff = 12;
  ppoly->add_option("--method", method, "phi, elim or both")
      ->check(CLI::IsMember({"phi", "elim", "both"}))
      ->capture_default_str();
  ppoly->add_option("--cutoff", cutoff, "Largest level scanned for singular vectors")->capture_default_str();
  ppoly->callback([&] {
    require_positive("--cutoff", cutoff);
    const Rational c = flag_rational("--c", c_s), h = flag_rational("--h", h_s);
    const Rational a = flag_rational("--alpha", a_s), b = flag_rational("--beta", b_s);
    const auto gens = verma_singular_generators(c, h, cutoff, minimal_model_params(c) ? 0 : 1);
    json rows = json::array();
    std::ostringstream text;
    if (gens.empty()) text << "no singular vector up to level " << cutoff << "\n";
    for (const auto& g : gens) {
      json row;
      row["singular_vector"] = json_io::element(g);
      text << "singular vector " << format_pbw(g) << "\n";
      std::optional<PPoly> phi, elim;
      if (method != "elim") {
        phi = p_from_singular(c, h, g, a, b);
        row["phi"] = json_io::ppoly(*phi);
        text << "  phi:         " << phi->poly.str() << ", integral roots " << roots_str(phi->poly.integer_roots()) << "\n";
      }
      if (method != "phi") {
        elim = p_via_elimination(c, h, g, a, b);
        row["elimination"] = json_io::ppoly(*elim);
        text << "  elimination: " << elim->poly.str() << ", integral roots " << roots_str(elim->poly.integer_roots())
             << "\n";
      }
      if (phi && elim) {
        const bool agree = phi->poly == elim->poly;
        row["agree"] = agree;
        text << "  methods " << (agree ? "agree" : "DISAGREE") << "\n";
        if (!agree) exit_code = 2;
      }
      const int lvl = (phi ? *phi : *elim).level;
      if (lvl == 2 || lvl == 3) {
        json cf = json::array();
        std::vector<std::string> s;
        for (const auto& r : closed_form_roots(lvl, h, a, b)) {
          cf.push_back(r.str());
          s.push_back(r.str());
        }
        row["closed_form_roots"] = cf;
        text << "  closed-form roots: " << join(s, ", ") << "\n";
      }
      rows.push_back(row);
    }
    out.emit({{"c", c.str()}, {"h", h.str()}, {"alpha", a.str()}, {"beta", b.str()}, {"polynomials", rows}}, text.str());
  });

  auto* verdict_cmd = app.add_subcommand("verdict", "Irreducibility verdict for V'_{alpha,beta} (x) L(c,h)");
  add_ch(verdict_cmd);
  add_ab(verdict_cmd);
  bool cross = false;
  int window = 6, vlevel = 8;
  verdict_cmd->add_option("--cutoff", cutoff, "Largest level scanned for singular vectors")->capture_default_str();
  verdict_cmd->add_flag("--cross-check", cross, "Also run the elimination and truncated-oracle cross-checks");
  verdict_cmd->add_option("--window", window, "Oracle window m in [-W, W]")->capture_default_str();
  verdict_cmd->add_option("--level-max", vlevel, "Oracle level cap")->capture_default_str();
  verdict_cmd->callback([&] {
    require_positive("--cutoff", cutoff);
    require_positive("--window", window);
    require_positive("--level-max", vlevel);
    VerdictOptions opt;
    opt.cutoff = cutoff;
    opt.run_cross_checks = cross;
    opt.window = {-window, window, vlevel};
    const Verdict v = verdict(flag_rational("--alpha", a_s), flag_rational("--beta", b_s), flag_rational("--c", c_s),
                              flag_rational("--h", h_s), opt);
    json j = json_io::verdict(v);
    std::string text = verdict_text(v);
    if (v.status == VerdictStatus::Reducible && !v.subquotient_weights.empty()) {
      const auto types = predict_intertwiners(v);
      j["intertwiner_types"] = json_io::intertwiners(types);
      for (const auto& t : types) {
        text += "intertwiner type (h3; h1, h2) = (" + t.h3.str() + "; " + t.h1.str() + ", " + t.h2.str() + "): " +
                t.status + (t.alpha_consistent ? "" : ", alpha not consistent") + "\n";
      }
    }
    out.emit(j, text);
    if (v.has_disagreement()) exit_code = 2;
  });

  int p = 0, q = 0, m1 = 0, n1 = 0, m2 = 0, n2 = 0;
  auto* fusion = app.add_subcommand("fusion", "Fusion product of two minimal-model labels");
  fusion->add_option("--p", p)->required();
  fusion->add_option("--q", q)->required();
  fusion->add_option("--m1", m1)->required();
  fusion->add_option("--n1", n1)->required();
  fusion->add_option("--m2", m2)->required();
  fusion->add_option("--n2", n2)->required();
  fusion->callback([&] {
    const auto l1 = flag_label(p, q, m1, n1, "--m1", "--n1"), l2 = flag_label(p, q, m2, n2, "--m2", "--n2");
    json prod = json::array();
    std::vector<std::string> s;
    for (const auto& l3 : fusion_product(l1, l2)) {
      prod.push_back(json_io::label(l3));
      s.push_back(l3.str());
    }
    out.emit({{"p", p}, {"q", q}, {"l1", json_io::label(l1)}, {"l2", json_io::label(l2)}, {"product", prod}},
             "{" + join(s, ",") + "}\n");
  });

  auto* table = app.add_subcommand("minimal-table", "Kac table and fusion rules of a minimal model");
  table->add_option("--p", p)->required();
  table->add_option("--q", q)->required();
  table->callback([&] {
    flag_model(p, q);
    const json j = json_io::minimal_table(p, q);
    std::ostringstream text;
    text << "c = " << central_charge(p, q) << "\n";
    for (const auto& l : kac_table(p, q)) text << l.str() << " h = " << conformal_weight(l) << "\n";
    for (const auto& row : j["fusion"]) text << row.dump() << "\n";
    out.emit(j, text.str());
  });

  int m = 0, n = 0;
  auto* pairs = app.add_subcommand("reducible-pairs", "(alpha, beta, h3) predicted by fusion rules with h1 != 0");
  pairs->add_option("--p", p)->required();
  pairs->add_option("--q", q)->required();
  pairs->add_option("--m", m)->required();
  pairs->add_option("--n", n)->required();
  pairs->callback([&] {
    const auto l2 = flag_label(p, q, m, n, "--m", "--n");
    std::ostringstream text;
    for (const auto& r : reducible_pairs(l2)) {
      text << "(alpha, beta) = (" << r.alpha << ", " << r.beta << "), h3 = " << r.h3 << " via " << r.l1.str() << " x "
           << l2.str() << " -> " << r.l3.str() << "\n";
    }
    for (const auto& r : module_operators(l2)) {
      text << "module operator: (alpha, beta) = (" << r.alpha << ", " << r.beta << "), h3 = " << r.h3 << "\n";
    }
    out.emit(json_io::reducible_pairs(l2), text.str());
  });

  auto* oracle = app.add_subcommand("oracle", "Truncated cyclic-submodule evidence for the U_n chain");
  add_ch(oracle);
  add_ab(oracle);
  int margin = 4;
  oracle->add_option("--window", window, "Window m in [-W, W]")->capture_default_str();
  oracle->add_option("--level-max", vlevel, "Level cap")->capture_default_str();
  oracle->add_option("--margin", margin, "Internal padding of the window")->capture_default_str();
  oracle->callback([&] {
    require_positive("--window", window);
    require_positive("--level-max", vlevel);
    if (margin < 0) throw UserError("--margin: must be nonnegative");
    const Rational c = flag_rational("--c", c_s), h = flag_rational("--h", h_s);
    const ISParams params = variant_of(flag_rational("--alpha", a_s), flag_rational("--beta", b_s));
    const TruncationWindow w{-window, window, vlevel};
    const TensorModule T(params, ModulePresentation::irreducible(c, h, vlevel + 2 * window + margin + 2));
    const auto ev = chain_evidence(T, w, margin);
    std::ostringstream text;
    text << "EVIDENCE (truncated, not a proof): window m in [" << -window << "," << window << "], level <= " << vlevel
         << "\n";
    for (const auto& e : ev) {
      text << "U_" << e.lower << " vs U_" << e.upper << ": "
           << (e.gap ? "v[" + std::to_string(e.lower) + "] (x) v not in truncated U_" + std::to_string(e.upper)
                     : "contained")
           << "\n";
    }
    out.emit(json_io::evidence(ev, w), text.str());
  });

  auto* verify = app.add_subcommand("verify-paper", "Replay the worked identities, verdicts and fusion lists exactly");
  std::string case_id;
  verify->add_option("--case", case_id, "Run a single case");
  verify->callback([&] {
    const auto ids = replay_case_ids();
    if (!case_id.empty() && std::find(ids.begin(), ids.end(), case_id) == ids.end()) {
      throw UserError("--case: unknown case '" + case_id + "' (known: " + join(ids, ", ") + ")");
    }
    const auto cases = run_replay(case_id.empty() ? std::nullopt : std::optional<std::string>(case_id));
    std::ostringstream text;
    std::size_t passed = 0;
    for (const auto& c : cases) {
      passed += c.pass();
      text << (c.pass() ? "PASS " : "FAIL ") << c.id << " [" << c.source << "]\n";
      for (const auto& k : c.checks) {
        text << "  " << (k.pass ? "ok   " : "FAIL ") << k.description << "; residual " << k.residual << "\n";
      }
    }
    text << passed << "/" << cases.size() << " cases pass\n";
    out.emit({{"cases", json_io::replay(cases)}, {"passed", passed}, {"total", cases.size()}}, text.str());
    if (passed != cases.size()) exit_code = 2;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UserError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const InternalError& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return 2;
  }
}
