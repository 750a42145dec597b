#pragma once

// The named graphs most tests run against. Each builder returns a fresh
// value; callers keep it alive for as long as pairs or elements reference it.

#include "lpa/graph.hpp"

namespace fixtures {

// Three vertices; a loop and an edge at u, and infinite fans from u and v
// into w. u is an infinite emitter, v too, w is a sink.
inline lpa::Graph worked_example() {
  lpa::GraphBuilder b;
  b.add_vertices({"u", "v", "w"});
  b.add_edge("ul", "u", "u");
  b.add_edge("uv", "u", "v");
  b.add_bundle("u", "w", lpa::Multiplicity::infinite());
  b.add_bundle("v", "w", lpa::Multiplicity::infinite());
  return b.build();
}

// First quasi-Baer counterexample: v carries a loop and single edges to the
// sinks u and w; everything finite.
inline lpa::Graph counterexample_finite() {
  lpa::GraphBuilder b;
  b.add_vertices({"u", "v", "w"});
  b.add_edge("a", "v", "u");
  b.add_edge("b", "v", "w");
  b.add_edge("l", "v", "v");
  return b.build();
}

// Second counterexample: the same shape with both fans infinite and no loop.
inline lpa::Graph counterexample_infinite() {
  lpa::GraphBuilder b;
  b.add_vertices({"u", "v", "w"});
  b.add_bundle("v", "u", lpa::Multiplicity::infinite());
  b.add_bundle("v", "w", lpa::Multiplicity::infinite());
  return b.build();
}

// One vertex, two named petals.
inline lpa::Graph rose_two_petals() {
  lpa::GraphBuilder b;
  b.add_vertex("v");
  b.add_bundle("v", "v", lpa::Multiplicity::finite(2), {"c1", "c2"});
  return b.build();
}

// Loop c at v with one exit edge g into the sink w.
inline lpa::Graph loop_with_exit() {
  lpa::GraphBuilder b;
  b.add_vertices({"v", "w"});
  b.add_edge("c", "v", "v");
  b.add_edge("g", "v", "w");
  return b.build();
}

// u -> v with v a sink.
inline lpa::Graph chain_two() {
  lpa::GraphBuilder b;
  b.add_vertices({"u", "v"});
  b.add_edge("e", "u", "v");
  return b.build();
}

}  // namespace fixtures
