#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lpa/commands.hpp"
#include "lpa/errors.hpp"
#include "lpa/workspace.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitCapacity = 3;

// KEY={a,b,c} positional arguments; commas and spaces both separate names.
bool parse_set_arg(const std::string& arg, std::string& key, std::vector<std::string>& names) {
  auto eq = arg.find('=');
  if (eq == std::string::npos || eq == 0) return false;
  key = arg.substr(0, eq);
  for (char c : key) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  std::string body = arg.substr(eq + 1);
  if (!body.empty() && body.front() == '{') {
    if (body.back() != '}')
      throw lpa::ValidationError(lpa::ErrorKind::parse, "unterminated set in '" + arg + "'");
    body = body.substr(1, body.size() - 2);
  }
  names.clear();
  std::string cur;
  for (char c : body) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) names.push_back(std::exchange(cur, {}));
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) names.push_back(cur);
  return true;
}

std::string read_input(const std::string& path) {
  if (path.empty()) {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in)
    throw lpa::ValidationError(lpa::ErrorKind::parse, "cannot read file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const nlohmann::json& doc) { std::cout << doc.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  std::string description = "Ideal computations in Leavitt path algebras of finite graphs.\nCommands:";
  for (const std::string& name : lpa::command_names()) description += " " + name;
  CLI::App app{description};

  std::string command;
  std::vector<std::string> rest;
  std::string file;
  std::string ideal;
  std::string ideal2;
  std::size_t cap = 0;
  bool json_flag = false;

  app.add_option("command", command, "command to run")->required();
  app.add_option("args", rest,
                 "KEY={v1,v2,...} vertex sets (V, H, S, H1, S1, H2, S2) or, for "
                 "normal-form, an element expression");
  app.add_option("--file", file, "workspace file; stdin when omitted");
  auto* ideal_opt = app.add_option("--ideal", ideal, "named ideal from the workspace");
  auto* ideal2_opt = app.add_option("--ideal2", ideal2, "second ideal for join/meet-ann");
  auto* cap_opt = app.add_option(
      "--cap", cap, "enumeration cap (quasibaer, hs-list) or path-length cap (verify)");
  app.add_flag("--json", json_flag, "emit JSON (the default and only format)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    emit(nlohmann::json{{"error", {{"kind", "parse"}, {"message", e.what()}}}});
    return kExitValidation;
  }

  try {
    lpa::CommandOptions opts;
    if (*ideal_opt) opts.ideal = ideal;
    if (*ideal2_opt) opts.ideal2 = ideal2;
    if (*cap_opt) opts.cap = cap;
    std::string expr;
    for (const std::string& arg : rest) {
      std::string key;
      std::vector<std::string> names;
      if (parse_set_arg(arg, key, names)) {
        if (opts.sets.count(key))
          throw lpa::ValidationError(lpa::ErrorKind::parse, "duplicate set argument '" + key + "'");
        opts.sets.emplace(key, std::move(names));
      } else {
        if (!expr.empty()) expr += " ";
        expr += arg;
      }
    }
    if (!expr.empty()) {
      if (command != "normal-form")
        throw lpa::ValidationError(lpa::ErrorKind::parse,
                                   "unexpected positional argument '" + expr + "'");
      opts.expr = expr;
    }

    lpa::Workspace ws = lpa::parse_workspace(read_input(file));
    emit(lpa::run_command(ws, command, opts));
    return kExitOk;
  } catch (const lpa::CapacityError& e) {
    emit(lpa::error_json(e));
    return kExitCapacity;
  } catch (const lpa::Error& e) {
    emit(lpa::error_json(e));
    return kExitValidation;
  }
}
