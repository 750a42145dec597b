#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lpa/errors.hpp"

namespace lpa {

using VertexIndex = std::uint32_t;
using EdgeIndex = std::uint32_t;

// Vertex sets are single 64-bit masks, so graphs are capped at 64 vertices.
inline constexpr std::uint32_t kMaxVertices = 64;

// Bundle multiplicity: a natural number or infinity.
class Multiplicity {
 public:
  constexpr Multiplicity() = default;

  static constexpr Multiplicity finite(std::uint32_t n) { return Multiplicity(n, false); }
  static constexpr Multiplicity infinite() { return Multiplicity(0, true); }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_zero() const { return !infinite_ && count_ == 0; }

  // Finite count; meaningless for infinite bundles.
  constexpr std::uint32_t count() const { return count_; }

  constexpr bool operator==(const Multiplicity&) const = default;

 private:
  constexpr Multiplicity(std::uint32_t n, bool inf) : count_(n), infinite_(inf) {}

  std::uint32_t count_ = 0;
  bool infinite_ = false;
};

// A set of vertices of one graph, as a bitmask over vertex indices. Since
// vertex indices follow lexicographic name order, iterating ascending bits
// visits vertices in name order.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  static constexpr VertexSet from_bits(std::uint64_t bits) { return VertexSet(bits); }
  static constexpr VertexSet full(std::size_t n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr bool contains(VertexIndex v) const { return (bits_ >> v) & 1; }
  constexpr void insert(VertexIndex v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(VertexIndex v) { bits_ &= ~(std::uint64_t{1} << v); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr std::uint64_t bits() const { return bits_; }

  constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ | b.bits_);
  }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ & b.bits_);
  }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ & ~b.bits_);
  }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }

  constexpr bool operator==(const VertexSet&) const = default;

  class iterator {
   public:
    using value_type = VertexIndex;
    explicit constexpr iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr VertexIndex operator*() const {
      return static_cast<VertexIndex>(std::countr_zero(rest_));
    }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr bool operator!=(const iterator& o) const { return rest_ != o.rest_; }

   private:
    std::uint64_t rest_;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<VertexIndex> to_vector() const {
    std::vector<VertexIndex> out;
    out.reserve(size());
    for (VertexIndex v : *this) out.push_back(v);
    return out;
  }

 private:
  explicit constexpr VertexSet(std::uint64_t bits) : bits_(bits) {}
  std::uint64_t bits_ = 0;
};

// Orders sets by (cardinality, lexicographic ascending-index sequence). Used
// wherever families of vertex sets need a reproducible order.
bool set_order_less(VertexSet a, VertexSet b);

struct NamedEdge {
  std::string name;
  VertexIndex source;
  VertexIndex target;
};

// All parallel edges between one ordered vertex pair. Finite bundles have
// every edge named; infinite bundles name finitely many representatives
// (possibly none).
struct EdgeBundle {
  VertexIndex source;
  VertexIndex target;
  Multiplicity mult;
  std::vector<EdgeIndex> named;  // ascending edge indices
};

enum class VertexClass { sink, regular, infinite_emitter };

const char* to_string(VertexClass c);

class Graph;

// A simple closed path through named edges, stored in canonical rotation:
// the lexicographically smallest edge-name sequence among all rotations.
class Cycle {
 public:
  // Validates chaining, closure and simplicity, then canonicalizes.
  static Cycle make(const Graph& g, std::vector<EdgeIndex> edges);

  const std::vector<EdgeIndex>& edges() const { return edges_; }
  VertexIndex base() const { return base_; }
  std::size_t length() const { return edges_.size(); }
  VertexSet vertices(const Graph& g) const;
  const Graph* graph() const { return graph_; }

  bool operator==(const Cycle& o) const { return edges_ == o.edges_; }
  bool operator<(const Cycle& o) const {
    if (edges_.size() != o.edges_.size()) return edges_.size() < o.edges_.size();
    return edges_ < o.edges_;
  }

 private:
  Cycle(const Graph* g, std::vector<EdgeIndex> edges, VertexIndex base)
      : graph_(g), edges_(std::move(edges)), base_(base) {}

  const Graph* graph_;
  std::vector<EdgeIndex> edges_;
  VertexIndex base_;
};

// Immutable directed graph with per-ordered-pair edge bundles. Vertex indices
// are assigned in sorted name order; edge indices in sorted edge-name order,
// so index comparisons coincide with name comparisons everywhere.
class Graph {
 public:
  std::size_t vertex_count() const { return vertex_names_.size(); }
  const std::vector<std::string>& vertex_names() const { return vertex_names_; }
  const std::string& vertex_name(VertexIndex v) const { return vertex_names_[v]; }
  VertexIndex vertex(std::string_view name) const;  // throws unknown_vertex
  std::optional<VertexIndex> find_vertex(std::string_view name) const;
  VertexSet all_vertices() const { return VertexSet::full(vertex_count()); }

  std::size_t edge_count() const { return edges_.size(); }
  const NamedEdge& edge(EdgeIndex e) const { return edges_[e]; }
  EdgeIndex edge_index(std::string_view name) const;  // throws unknown_edge
  std::optional<EdgeIndex> find_edge(std::string_view name) const;

  const std::vector<EdgeBundle>& bundles() const { return bundles_; }
  const std::vector<std::uint32_t>& out_bundles(VertexIndex v) const { return out_bundles_[v]; }
  const std::vector<EdgeIndex>& out_edges(VertexIndex v) const { return out_edges_[v]; }

  // Targets of bundles with multiplicity >= 1 (infinite included).
  VertexSet out_neighbors(VertexIndex v) const { return out_neighbors_[v]; }
  VertexSet in_neighbors(VertexIndex v) const { return in_neighbors_[v]; }

  VertexClass vertex_class(VertexIndex v) const { return classes_[v]; }

  // Lexicographically smallest out-edge of a regular vertex; nullopt at sinks
  // and infinite emitters (the CK2 rewrite never applies there).
  std::optional<EdgeIndex> special_edge(VertexIndex v) const {
    if (classes_[v] != VertexClass::regular) return std::nullopt;
    return out_edges_[v].front();
  }

  // Resolves names to a set; throws unknown_vertex naming every miss.
  VertexSet resolve(const std::vector<std::string>& names) const;
  std::vector<std::string> names_of(VertexSet s) const;

  // Non-fatal diagnostics collected at build time.
  const std::vector<std::string>& warnings() const { return warnings_; }

  bool operator==(const Graph& o) const;

 private:
  friend class GraphBuilder;
  Graph() = default;

  std::vector<std::string> vertex_names_;
  std::vector<NamedEdge> edges_;
  std::vector<EdgeBundle> bundles_;
  std::vector<std::vector<std::uint32_t>> out_bundles_;
  std::vector<std::vector<EdgeIndex>> out_edges_;
  std::vector<VertexSet> out_neighbors_;
  std::vector<VertexSet> in_neighbors_;
  std::vector<VertexClass> classes_;
  std::vector<std::string> warnings_;
};

// Accumulates vertices and edges, then validates and freezes a Graph.
// Repeated declarations for the same ordered pair merge: multiplicities add
// (infinity absorbs), named edges accumulate. Finite bundles declared without
// names get deterministic generated names at build time.
class GraphBuilder {
 public:
  GraphBuilder& add_vertex(std::string name);
  GraphBuilder& add_vertices(std::initializer_list<const char*> names);
  GraphBuilder& add_edge(std::string name, const std::string& source, const std::string& target);
  GraphBuilder& add_bundle(const std::string& source, const std::string& target, Multiplicity mult,
                           std::vector<std::string> names = {});

  Graph build();

 private:
  struct PendingBundle {
    Multiplicity mult = Multiplicity::finite(0);
    std::vector<std::string> names;
  };

  std::vector<std::string> vertex_order_;
  std::map<std::pair<std::string, std::string>, PendingBundle> pending_;
};

// Vertex classification: sink (emits nothing), infinite emitter (some
// infinite bundle), regular (finite nonzero out-multiplicity).
VertexClass classify_vertex(const Graph& g, VertexIndex v);

// Vertices admitting a path of length >= 0 into `targets`; contains `targets`.
VertexSet root(const Graph& g, VertexSet targets);

// All simple cycles through named edges, canonically rotated and sorted.
// Unnamed edges inside infinite bundles never participate.
std::vector<Cycle> find_cycles(const Graph& g);

// True iff some vertex of the cycle emits an edge (counting multiplicities,
// infinite bundles included) that is not an edge of the cycle.
bool cycle_has_exit(const Graph& g, const Cycle& c);

}  // namespace lpa
