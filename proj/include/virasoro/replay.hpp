#pragma once

#include <optional>
#include <string>
#include <vector>

namespace vir {

// One exact check inside a replay case; residual is "0" when it holds.
struct ReplayCheck {
  std::string description;
  std::string residual;
  bool pass = false;
};

struct ReplayCase {
  std::string id;
  std::string source;  // the statement being replayed
  std::vector<ReplayCheck> checks;
  bool pass() const;
};

// Case identifiers in report order.
std::vector<std::string> replay_case_ids();

// Throws UserError for an unknown id.
ReplayCase run_replay_case(const std::string& id);

// All cases, or only `id` when given.
std::vector<ReplayCase> run_replay(const std::optional<std::string>& id = std::nullopt);

}  // namespace vir
