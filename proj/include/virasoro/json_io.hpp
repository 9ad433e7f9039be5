#pragma once

#include <json.hpp>
#include <vector>

#include "virasoro/reducibility.hpp"
#include "virasoro/replay.hpp"

namespace vir::json_io {

// Insertion-ordered objects keep output byte-stable across runs.
using json = nlohmann::ordered_json;

json rational(const Rational& r);                 // "num/den" or integer string
json polynomial(const Polynomial& p);             // ascending coefficient strings plus text
json element(const UNegElement& u);               // text plus [{monomial, coefficient}]
json ppoly(const PPoly& p);
json label(const MinimalLabel& l);                // {m, n, h}
json verdict(const Verdict& v);
json intertwiners(const std::vector<IntertwinerType>& types);
json evidence(const std::vector<StepEvidence>& steps, const TruncationWindow& window);
json minimal_table(int p, int q);
json reducible_pairs(const MinimalLabel& l2);
json replay(const std::vector<ReplayCase>& cases);

}  // namespace vir::json_io
