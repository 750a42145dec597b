#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "lpa/workspace.hpp"

namespace lpa {

// Inputs a command gets beyond the workspace: named vertex sets (V, H, S,
// H1, S1, H2, S2), ideal references, the enumeration or path-length cap,
// and an element expression for normal-form.
struct CommandOptions {
  std::map<std::string, std::vector<std::string>> sets;
  std::optional<std::string> ideal;
  std::optional<std::string> ideal2;
  std::optional<std::size_t> cap;
  std::optional<std::string> expr;
};

const std::vector<std::string>& command_names();

// Dispatches one command against the workspace and returns its JSON
// document: the command name, the echoed inputs, and the result, with all
// vertex lists in name order. Failures raise the library error types; the
// CLI turns them into an error document and a nonzero exit status.
nlohmann::json run_command(const Workspace& ws, const std::string& command,
                           const CommandOptions& opts);

// The structured form of an error, shared by the CLI and tests.
nlohmann::json error_json(const Error& e);

}  // namespace lpa
