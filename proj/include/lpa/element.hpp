#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lpa/graph.hpp"
#include "lpa/ideal.hpp"
#include "lpa/rational.hpp"

namespace lpa {

// A path through named edges, or a single vertex (the empty path at it).
class PathTerm {
 public:
  static PathTerm at_vertex(VertexIndex v) { return PathTerm(v, {}); }
  // Validates that consecutive edges chain.
  static PathTerm from_edges(const Graph& g, std::vector<EdgeIndex> edges);

  VertexIndex source() const { return source_; }
  VertexIndex range(const Graph& g) const {
    return edges_.empty() ? source_ : g.edge(edges_.back()).target;
  }
  const std::vector<EdgeIndex>& edges() const { return edges_; }
  std::size_t length() const { return edges_.size(); }
  bool is_vertex() const { return edges_.empty(); }

  // Concatenation; requires range(this) == source(tail).
  PathTerm concat(const Graph& g, const PathTerm& tail) const;
  PathTerm drop_last(const Graph& g) const;

  // (length, content) order; vertex paths compare by vertex index, edge
  // paths lexicographically by edge index (= edge name) sequence.
  bool operator==(const PathTerm& o) const {
    return source_ == o.source_ && edges_ == o.edges_;
  }
  bool operator<(const PathTerm& o) const {
    if (edges_.size() != o.edges_.size()) return edges_.size() < o.edges_.size();
    if (edges_.empty()) return source_ < o.source_;
    return edges_ < o.edges_;
  }

 private:
  PathTerm(VertexIndex source, std::vector<EdgeIndex> edges)
      : source_(source), edges_(std::move(edges)) {}

  VertexIndex source_;
  std::vector<EdgeIndex> edges_;
};

// If `whole` = `prefix` . r for some path r, returns r (a vertex path when
// they coincide); otherwise nullopt.
std::optional<PathTerm> strip_prefix(const Graph& g, const PathTerm& prefix,
                                     const PathTerm& whole);

// coeff . p . q* with range(p) = range(q) and coeff nonzero.
struct Monomial {
  Rational coeff;
  PathTerm p;
  PathTerm q;

  int degree() const {
    return static_cast<int>(p.length()) - static_cast<int>(q.length());
  }
};

// Canonical monomial order: (degree, |p|, p, q).
bool monomial_key_less(const Monomial& a, const Monomial& b);

// A finite rational-linear combination of monomials p q*, kept canonical:
// ordered, no repeated (p, q), no zero coefficients.
class LpaElement {
 public:
  static LpaElement zero(const Graph& g) { return LpaElement(&g, {}); }
  static LpaElement vertex(const Graph& g, VertexIndex v);
  static LpaElement real_edge(const Graph& g, EdgeIndex e);
  static LpaElement ghost_edge(const Graph& g, EdgeIndex e);
  // Canonicalizes: sorts, merges equal (p, q), drops zeros. Validates the
  // range(p) = range(q) invariant of each monomial.
  static LpaElement from_monomials(const Graph& g, std::vector<Monomial> monomials);

  const Graph& graph() const { return *graph_; }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  bool empty() const { return monomials_.empty(); }

  LpaElement operator+(const LpaElement& o) const;
  LpaElement operator-(const LpaElement& o) const;
  LpaElement operator-() const;
  LpaElement scaled(const Rational& k) const;

  bool operator==(const LpaElement& o) const;
  bool operator<(const LpaElement& o) const;

 private:
  LpaElement(const Graph* g, std::vector<Monomial> ms)
      : graph_(g), monomials_(std::move(ms)) {}

  const Graph* graph_;
  std::vector<Monomial> monomials_;
};

// Bilinear product under the path-contraction rule
//   (p q*)(r s*) = p r' s*   if r = q r',
//                = p (s q')* if q = r q',
//                = 0         otherwise.
LpaElement multiply(const LpaElement& a, const LpaElement& b);

// Star map: coeff p q*  ->  coeff q p* (identity involution on the field).
LpaElement adjoint(const LpaElement& x);

enum class RewriteStrategy {
  canonical_first,  // always rewrite the first reducible monomial
  randomized,       // pick a random reducible monomial each step
};

// Rewrites f f* -> v - sum of e e* (e != f) at the special edge f of each
// regular vertex v, inside monomials whose p and q both end in f, until no
// monomial is reducible. The result is the canonical basis representation;
// both strategies reach the same fixpoint.
LpaElement normal_form(const LpaElement& x);
LpaElement normal_form(const LpaElement& x, RewriteStrategy strategy, std::uint64_t seed);

bool is_zero(const LpaElement& x);

// Sub-sum of monomials with |p| - |q| = n.
LpaElement homogeneous_component(const LpaElement& x, int n);

// v - sum of e e* over the (finitely many, all named) edges from v that
// miss h. Requires v to be a breaking vertex of h.
LpaElement v_h_element(const Graph& g, VertexIndex v, VertexSet h);

// Generating set H union S^H union P_C of the presented ideal.
std::vector<LpaElement> generators(const IdealPresentation& pres);

// Spanning elements of the graded ideal of `pair`: p q* with common range in
// H, and p v^H q* with common range v in S, path lengths capped by len_cap.
std::vector<LpaElement> spanning_monomials(const AdmissiblePair& pair, std::size_t len_cap);

struct AnnihilationReport {
  struct Violation {
    std::string left;
    std::string right;
  };
  std::size_t products_checked = 0;
  std::vector<Violation> violations;
  bool passed() const { return violations.empty(); }
};

// Checks that every product of a spanning element of the annihilator with a
// generator or spanning element of the envelope vanishes, on both sides.
// A violation would expose a bug in the annihilator computation.
// verify_annihilation fans the product grid out with OpenMP;
// verify_annihilation_serial is the reference loop. Reports are identical.
AnnihilationReport verify_annihilation(const IdealPresentation& pres, std::size_t len_cap);
AnnihilationReport verify_annihilation_serial(const IdealPresentation& pres, std::size_t len_cap);

std::string to_string(const LpaElement& x);

}  // namespace lpa
