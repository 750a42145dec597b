#include "lpa/commands.hpp"

#include "lpa/closure.hpp"
#include "lpa/element.hpp"
#include "lpa/errors.hpp"
#include "lpa/ideal.hpp"

namespace lpa {
namespace {

using nlohmann::json;

json names_json(const Graph& g, VertexSet s) { return json(g.names_of(s)); }

json pair_json(const AdmissiblePair& pair) {
  return json{{"H", names_json(pair.graph(), pair.h())},
              {"S", names_json(pair.graph(), pair.s())}};
}

VertexSet get_set(const Workspace& ws, const CommandOptions& opts, const std::string& key,
                  bool required) {
  auto it = opts.sets.find(key);
  if (it == opts.sets.end()) {
    if (required)
      throw ValidationError(ErrorKind::parse, "command needs a " + key + "={...} argument");
    return {};
  }
  return ws.graph->resolve(it->second);
}

bool has_set(const CommandOptions& opts, const std::string& key) {
  return opts.sets.count(key) != 0;
}

const IdealPresentation& find_ideal(const Workspace& ws, const std::string& name) {
  auto it = ws.ideals.find(name);
  if (it == ws.ideals.end())
    throw ValidationError(ErrorKind::parse, "unknown ideal '" + name + "'");
  return it->second;
}

// A presentation argument: --ideal NAME, or H=/S= sets with no cycle part.
IdealPresentation pres_arg(const Workspace& ws, const CommandOptions& opts, json& out) {
  if (opts.ideal) {
    out["ideal"] = *opts.ideal;
    return find_ideal(ws, *opts.ideal);
  }
  if (!has_set(opts, "H") && !has_set(opts, "S"))
    throw ValidationError(ErrorKind::parse, "command needs --ideal or H={...} S={...}");
  VertexSet h = get_set(ws, opts, "H", true);
  VertexSet s = get_set(ws, opts, "S", false);
  AdmissiblePair pair = validate_pair(*ws.graph, h, s);
  out["input"] = pair_json(pair);
  return IdealPresentation::make(std::move(pair), {}, {});
}

// One of the two pair arguments of join/meet-ann.
AdmissiblePair pair_arg(const Workspace& ws, const CommandOptions& opts,
                        const std::optional<std::string>& ideal, const std::string& h_key,
                        const std::string& s_key, json& echo) {
  if (ideal) {
    echo = json{{"ideal", *ideal}};
    return find_ideal(ws, *ideal).pair();
  }
  if (!has_set(opts, h_key) && !has_set(opts, s_key)) {
    throw ValidationError(ErrorKind::parse,
                          "command needs --ideal/--ideal2 or " + h_key + "={...} " + s_key +
                              "={...} for both sides");
  }
  VertexSet h = get_set(ws, opts, h_key, true);
  VertexSet s = get_set(ws, opts, s_key, false);
  AdmissiblePair pair = validate_pair(*ws.graph, h, s);
  echo = pair_json(pair);
  return pair;
}

std::size_t cap_or(const CommandOptions& opts, std::size_t fallback) {
  return opts.cap ? *opts.cap : fallback;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {
      "closure", "saturation", "breaking",  "perp",      "envelope",
      "ann",     "reflexive",  "is-annihilator", "join", "meet-ann",
      "quasibaer", "baer",     "rickart",   "hs-list",   "verify",
      "normal-form"};
  return names;
}

nlohmann::json run_command(const Workspace& ws, const std::string& command,
                           const CommandOptions& opts) {
  const Graph& g = *ws.graph;
  json out;
  out["command"] = command;

  if (command == "closure") {
    VertexSet v = get_set(ws, opts, "V", true);
    out["V"] = names_json(g, v);
    out["result"] = names_json(g, hereditary_closure(g, v));
  } else if (command == "saturation") {
    VertexSet h = get_set(ws, opts, "H", true);
    VertexSet s = get_set(ws, opts, "S", false);
    out["H"] = names_json(g, h);
    out["S"] = names_json(g, s);
    out["result"] = names_json(g, s_saturation(g, h, s).members);
  } else if (command == "breaking") {
    VertexSet h = get_set(ws, opts, "H", true);
    out["H"] = names_json(g, h);
    out["result"] = names_json(g, breaking_vertices(g, h));
  } else if (command == "perp") {
    VertexSet v = get_set(ws, opts, "V", true);
    out["V"] = names_json(g, v);
    out["result"] = names_json(g, perp(g, v).members);
  } else if (command == "envelope") {
    AdmissiblePair env = graded_envelope(pres_arg(ws, opts, out));
    out["H"] = names_json(g, env.h());
    out["S"] = names_json(g, env.s());
  } else if (command == "ann") {
    AdmissiblePair a = annihilator(pres_arg(ws, opts, out));
    out["H"] = names_json(g, a.h());
    out["S"] = names_json(g, a.s());
  } else if (command == "reflexive") {
    IdealPresentation pres = pres_arg(ws, opts, out);
    out["reflexive"] = is_reflexive(pres.pair());
  } else if (command == "is-annihilator") {
    IdealPresentation pres = pres_arg(ws, opts, out);
    out["is_annihilator"] = is_annihilator_ideal(pres.pair());
  } else if (command == "join" || command == "meet-ann") {
    json echo1, echo2;
    AdmissiblePair a = pair_arg(ws, opts, opts.ideal, "H1", "S1", echo1);
    AdmissiblePair b = pair_arg(ws, opts, opts.ideal2, "H2", "S2", echo2);
    out["first"] = echo1;
    out["second"] = echo2;
    AdmissiblePair r = command == "join" ? graded_join(a, b) : boolean_meet(a, b);
    out["H"] = names_json(g, r.h());
    out["S"] = names_json(g, r.s());
  } else if (command == "quasibaer") {
    QuasiBaerResult r = is_quasi_baer(g, cap_or(opts, 0));
    out["quasi_baer"] = r.quasi_baer;
    if (!r.quasi_baer) {
      out["witness_H"] = names_json(g, *r.witness);
      out["join"] = pair_json(*r.witness_join);
    }
  } else if (command == "baer") {
    out["baer"] = is_baer(g);
  } else if (command == "rickart") {
    out["rickart"] = is_rickart(g);
  } else if (command == "hs-list") {
    HsFamily family = enumerate_hs(g, cap_or(opts, 0));
    json sets = json::array();
    for (VertexSet s : family.sets) sets.push_back(names_json(g, s));
    out["count"] = family.sets.size();
    out["result"] = sets;
  } else if (command == "verify") {
    IdealPresentation pres = pres_arg(ws, opts, out);
    std::size_t cap = cap_or(opts, 4);
    AnnihilationReport report = verify_annihilation(pres, cap);
    out["cap"] = cap;
    out["products_checked"] = report.products_checked;
    out["passed"] = report.passed();
    json violations = json::array();
    for (const auto& v : report.violations)
      violations.push_back(json{{"left", v.left}, {"right", v.right}});
    out["violations"] = violations;
  } else if (command == "normal-form") {
    if (!opts.expr)
      throw ValidationError(ErrorKind::parse, "normal-form needs an element expression");
    out["input"] = *opts.expr;
    LpaElement nf = normal_form(parse_element(g, *opts.expr));
    out["result"] = to_string(nf);
    out["is_zero"] = nf.empty();
  } else {
    throw ValidationError(ErrorKind::parse, "unknown command '" + command + "'");
  }
  return out;
}

nlohmann::json error_json(const Error& e) {
  json err;
  err["kind"] = to_string(e.kind());
  err["message"] = e.what();
  if (!e.vertices().empty()) err["vertices"] = e.vertices();
  if (!e.edges().empty()) err["edges"] = e.edges();
  if (const auto* p = dynamic_cast<const ParseError*>(&e)) {
    err["line"] = p->line();
    err["column"] = p->column();
  }
  return json{{"error", err}};
}

}  // namespace lpa
