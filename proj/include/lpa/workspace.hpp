#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>

#include "lpa/element.hpp"
#include "lpa/graph.hpp"
#include "lpa/ideal.hpp"

namespace lpa {

// A parsed graph together with the ideal presentations declared over it.
struct Workspace {
  std::shared_ptr<const Graph> graph;
  std::map<std::string, IdealPresentation> ideals;
};

// Structural equality: graphs by value, presentations by (H, S, C, P).
bool workspaces_equal(const Workspace& a, const Workspace& b);

// Parses the workspace DSL:
//
//   graph {
//     vertices: u v w;
//     edge a: u -> v;
//     edges u -> w : 2 with e f;
//     edges v -> w : inf;
//   }
//   ideal I {
//     H: w;
//     S: v;
//     cycle: c d;
//     poly: 1 0 -2/3;
//   }
//
// `#` starts a line comment. Repeated `edges` lines for one ordered pair
// merge. Lexical, syntactic and semantic failures raise ParseError with the
// offending line and column.
Workspace parse_workspace(std::string_view text);

// Canonical form: sorted vertices, one `edges` line per bundle with every
// named edge listed, ideals in name order, empty H/S lines omitted.
// parse_workspace(print_workspace(ws)) reproduces ws.
std::string print_workspace(const Workspace& ws);

// Element expressions over g: a signed sum of terms, each an optional
// rational coefficient followed by vertex and edge atoms; `e*` is the ghost
// of edge e. Atoms multiply in the algebra, so non-composable products are
// simply zero.
LpaElement parse_element(const Graph& g, std::string_view text);

}  // namespace lpa
