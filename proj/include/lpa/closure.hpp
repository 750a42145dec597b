#pragma once

#include <cstddef>
#include <vector>

#include "lpa/graph.hpp"

namespace lpa {

// A hereditary saturated vertex set, validated on construction.
struct HsSet {
  const Graph* graph = nullptr;
  VertexSet members;

  static HsSet checked(const Graph& g, VertexSet members);

  bool operator==(const HsSet& o) const {
    return graph == o.graph && members == o.members;
  }
};

// Every hereditary saturated subset of one graph, in (size, lex) order.
struct HsFamily {
  const Graph* graph = nullptr;
  std::vector<VertexSet> sets;
};

bool is_hereditary(const Graph& g, VertexSet h);
bool is_saturated(const Graph& g, VertexSet h);

// Members whose out-edges escape h / regular vertices saturation demands.
std::vector<VertexIndex> hereditary_violations(const Graph& g, VertexSet h);
std::vector<VertexIndex> saturation_violations(const Graph& g, VertexSet h);

// Smallest hereditary superset: the forward-reachable set of `seed`.
VertexSet hereditary_closure(const Graph& g, VertexSet seed);

// S-saturation of a hereditary set: the fixpoint of the round-based
// iteration that adds every vertex outside the current set which is regular
// or in `s` and emits only into the current set. All eligible vertices of a
// round are added together, so the round count is deterministic; it is
// reported through `rounds_out` when given. Throws not_hereditary if `h`
// is not hereditary.
HsSet s_saturation(const Graph& g, VertexSet h, VertexSet s, std::size_t* rounds_out = nullptr);

// Breaking vertices of a hereditary set: infinite emitters outside `h`
// whose edge multiset into the complement of `h` is finite and nonempty.
VertexSet breaking_vertices(const Graph& g, VertexSet h);

// Complement of the root: vertices emitting no path into `h`.
HsSet perp(const Graph& g, VertexSet h);

// Enumeration bound: LPA_MAX_VERTICES from the environment, default 20.
std::size_t enumeration_cap();

// All hereditary saturated subsets, by brute force over the 2^n subsets.
// `cap` of 0 means enumeration_cap(). Throws CapacityError when the vertex
// count exceeds the cap. enumerate_hs runs the scan with OpenMP;
// enumerate_hs_serial is the plain reference loop kept for testing.
HsFamily enumerate_hs(const Graph& g, std::size_t cap = 0);
HsFamily enumerate_hs_serial(const Graph& g, std::size_t cap = 0);

}  // namespace lpa
