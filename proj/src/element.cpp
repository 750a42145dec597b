#include "lpa/element.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <utility>

#include "lpa/closure.hpp"
#include "lpa/errors.hpp"

namespace lpa {
namespace {

constexpr std::size_t kPathCap = 200000;
constexpr std::size_t kProductCap = 5000000;

PathTerm append_edge(const Graph& g, const PathTerm& path, EdgeIndex e) {
  std::vector<EdgeIndex> edges = path.edges();
  edges.push_back(e);
  if (path.is_vertex() && path.source() != g.edge(e).source)
    throw ContractViolation("path extension does not chain");
  return PathTerm::from_edges(g, std::move(edges));
}

}  // namespace

PathTerm PathTerm::from_edges(const Graph& g, std::vector<EdgeIndex> edges) {
  if (edges.empty()) throw ContractViolation("edge path must be nonempty; use at_vertex");
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    if (g.edge(edges[i]).target != g.edge(edges[i + 1]).source)
      throw ContractViolation("edge path does not chain");
  }
  VertexIndex source = g.edge(edges.front()).source;
  return PathTerm(source, std::move(edges));
}

PathTerm PathTerm::concat(const Graph& g, const PathTerm& tail) const {
  if (range(g) != tail.source()) throw ContractViolation("path concatenation does not chain");
  if (tail.is_vertex()) return *this;
  if (is_vertex()) return tail;
  std::vector<EdgeIndex> edges = edges_;
  edges.insert(edges.end(), tail.edges_.begin(), tail.edges_.end());
  return PathTerm(source_, std::move(edges));
}

PathTerm PathTerm::drop_last(const Graph& g) const {
  if (is_vertex()) throw ContractViolation("cannot shorten a vertex path");
  if (edges_.size() == 1) return at_vertex(source_);
  (void)g;
  return PathTerm(source_, std::vector<EdgeIndex>(edges_.begin(), edges_.end() - 1));
}

std::optional<PathTerm> strip_prefix(const Graph& g, const PathTerm& prefix,
                                     const PathTerm& whole) {
  if (prefix.source() != whole.source()) return std::nullopt;
  if (prefix.length() > whole.length()) return std::nullopt;
  if (!std::equal(prefix.edges().begin(), prefix.edges().end(), whole.edges().begin()))
    return std::nullopt;
  std::vector<EdgeIndex> rest(whole.edges().begin() + static_cast<long>(prefix.length()),
                              whole.edges().end());
  if (rest.empty()) return PathTerm::at_vertex(whole.range(g));
  return PathTerm::from_edges(g, std::move(rest));
}

bool monomial_key_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  if (a.p.length() != b.p.length()) return a.p.length() < b.p.length();
  if (a.p < b.p) return true;
  if (b.p < a.p) return false;
  return a.q < b.q;
}

LpaElement LpaElement::vertex(const Graph& g, VertexIndex v) {
  if (v >= g.vertex_count()) throw ContractViolation("vertex index out of range");
  return from_monomials(g, {Monomial{1, PathTerm::at_vertex(v), PathTerm::at_vertex(v)}});
}

LpaElement LpaElement::real_edge(const Graph& g, EdgeIndex e) {
  PathTerm p = PathTerm::from_edges(g, {e});
  return from_monomials(g, {Monomial{1, p, PathTerm::at_vertex(g.edge(e).target)}});
}

LpaElement LpaElement::ghost_edge(const Graph& g, EdgeIndex e) {
  PathTerm q = PathTerm::from_edges(g, {e});
  return from_monomials(g, {Monomial{1, PathTerm::at_vertex(g.edge(e).target), q}});
}

LpaElement LpaElement::from_monomials(const Graph& g, std::vector<Monomial> monomials) {
  for (const Monomial& m : monomials) {
    if (m.p.range(g) != m.q.range(g))
      throw ContractViolation("monomial paths must share their range");
  }
  std::sort(monomials.begin(), monomials.end(), monomial_key_less);
  std::vector<Monomial> merged;
  merged.reserve(monomials.size());
  for (Monomial& m : monomials) {
    if (!merged.empty() && merged.back().p == m.p && merged.back().q == m.q) {
      merged.back().coeff += m.coeff;
    } else {
      merged.push_back(std::move(m));
    }
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const Monomial& m) { return m.coeff == 0; }),
               merged.end());
  return LpaElement(&g, std::move(merged));
}

LpaElement LpaElement::operator+(const LpaElement& o) const {
  if (graph_ != o.graph_)
    throw Error(ErrorKind::graph_mismatch, "elements live over different graphs");
  std::vector<Monomial> ms = monomials_;
  ms.insert(ms.end(), o.monomials_.begin(), o.monomials_.end());
  return from_monomials(*graph_, std::move(ms));
}

LpaElement LpaElement::operator-(const LpaElement& o) const { return *this + (-o); }

LpaElement LpaElement::operator-() const { return scaled(-1); }

LpaElement LpaElement::scaled(const Rational& k) const {
  std::vector<Monomial> ms = monomials_;
  for (Monomial& m : ms) m.coeff *= k;
  return from_monomials(*graph_, std::move(ms));
}

bool LpaElement::operator==(const LpaElement& o) const {
  if (graph_ != o.graph_ || monomials_.size() != o.monomials_.size()) return false;
  for (std::size_t i = 0; i < monomials_.size(); ++i) {
    const Monomial& a = monomials_[i];
    const Monomial& b = o.monomials_[i];
    if (!(a.p == b.p) || !(a.q == b.q) || a.coeff != b.coeff) return false;
  }
  return true;
}

bool LpaElement::operator<(const LpaElement& o) const {
  for (std::size_t i = 0; i < monomials_.size() && i < o.monomials_.size(); ++i) {
    const Monomial& a = monomials_[i];
    const Monomial& b = o.monomials_[i];
    if (monomial_key_less(a, b)) return true;
    if (monomial_key_less(b, a)) return false;
    if (a.coeff != b.coeff) return a.coeff < b.coeff;
  }
  return monomials_.size() < o.monomials_.size();
}

LpaElement multiply(const LpaElement& a, const LpaElement& b) {
  if (&a.graph() != &b.graph())
    throw Error(ErrorKind::graph_mismatch, "elements live over different graphs");
  const Graph& g = a.graph();
  std::vector<Monomial> out;
  for (const Monomial& x : a.monomials()) {
    for (const Monomial& y : b.monomials()) {
      if (auto rest = strip_prefix(g, x.q, y.p)) {
        out.push_back(Monomial{x.coeff * y.coeff, x.p.concat(g, *rest), y.q});
      } else if (auto over = strip_prefix(g, y.p, x.q)) {
        out.push_back(Monomial{x.coeff * y.coeff, x.p, y.q.concat(g, *over)});
      }
    }
  }
  return LpaElement::from_monomials(g, std::move(out));
}

LpaElement adjoint(const LpaElement& x) {
  std::vector<Monomial> ms;
  ms.reserve(x.monomials().size());
  for (const Monomial& m : x.monomials()) ms.push_back(Monomial{m.coeff, m.q, m.p});
  return LpaElement::from_monomials(x.graph(), std::move(ms));
}

namespace {

// A monomial is reducible when p and q both end in the special edge of its
// source; that is the only redex shape, so each monomial has at most one.
bool reducible(const Graph& g, const Monomial& m) {
  if (m.p.is_vertex() || m.q.is_vertex()) return false;
  EdgeIndex f = m.p.edges().back();
  if (m.q.edges().back() != f) return false;
  auto special = g.special_edge(g.edge(f).source);
  return special && *special == f;
}

// p f (q f)* -> p q* - sum over siblings e of f of (p e)(q e)*.
std::vector<Monomial> expand(const Graph& g, const Monomial& m) {
  EdgeIndex f = m.p.edges().back();
  VertexIndex v = g.edge(f).source;
  PathTerm p = m.p.drop_last(g);
  PathTerm q = m.q.drop_last(g);
  std::vector<Monomial> out;
  out.push_back(Monomial{m.coeff, p, q});
  for (EdgeIndex e : g.out_edges(v)) {
    if (e == f) continue;
    out.push_back(Monomial{-m.coeff, append_edge(g, p, e), append_edge(g, q, e)});
  }
  return out;
}

LpaElement rewrite(const LpaElement& x, RewriteStrategy strategy, std::uint64_t seed) {
  const Graph& g = x.graph();
  std::mt19937_64 rng(seed);
  LpaElement cur = x;
  for (;;) {
    std::vector<std::size_t> redexes;
    for (std::size_t i = 0; i < cur.monomials().size(); ++i) {
      if (reducible(g, cur.monomials()[i])) redexes.push_back(i);
    }
    if (redexes.empty()) return cur;
    std::size_t pick = redexes.front();
    if (strategy == RewriteStrategy::randomized) {
      std::uniform_int_distribution<std::size_t> dist(0, redexes.size() - 1);
      pick = redexes[dist(rng)];
    }
    std::vector<Monomial> next;
    next.reserve(cur.monomials().size() + g.vertex_count());
    for (std::size_t i = 0; i < cur.monomials().size(); ++i) {
      if (i == pick) continue;
      next.push_back(cur.monomials()[i]);
    }
    std::vector<Monomial> expanded = expand(g, cur.monomials()[pick]);
    next.insert(next.end(), expanded.begin(), expanded.end());
    cur = LpaElement::from_monomials(g, std::move(next));
  }
}

}  // namespace

LpaElement normal_form(const LpaElement& x) {
  return rewrite(x, RewriteStrategy::canonical_first, 0);
}

LpaElement normal_form(const LpaElement& x, RewriteStrategy strategy, std::uint64_t seed) {
  return rewrite(x, strategy, seed);
}

bool is_zero(const LpaElement& x) { return normal_form(x).empty(); }

LpaElement homogeneous_component(const LpaElement& x, int n) {
  std::vector<Monomial> ms;
  for (const Monomial& m : x.monomials()) {
    if (m.degree() == n) ms.push_back(m);
  }
  return LpaElement::from_monomials(x.graph(), std::move(ms));
}

LpaElement v_h_element(const Graph& g, VertexIndex v, VertexSet h) {
  VertexSet breaking = breaking_vertices(g, h);
  if (!breaking.contains(v)) {
    throw ValidationError(ErrorKind::not_breaking_subset,
                          "vertex is not a breaking vertex of the given set",
                          {g.vertex_names()[v]}, {});
  }
  std::vector<Monomial> ms;
  ms.push_back(Monomial{1, PathTerm::at_vertex(v), PathTerm::at_vertex(v)});
  for (std::uint32_t bi : g.out_bundles(v)) {
    const EdgeBundle& b = g.bundles()[bi];
    if (h.contains(b.target)) continue;
    if (b.mult.is_infinite())
      throw ContractViolation("breaking vertex has an infinite bundle missing the set");
    for (EdgeIndex e : b.named) {
      PathTerm pe = PathTerm::from_edges(g, {e});
      ms.push_back(Monomial{-1, pe, pe});
    }
  }
  return LpaElement::from_monomials(g, std::move(ms));
}

std::vector<LpaElement> generators(const IdealPresentation& pres) {
  const Graph& g = pres.graph();
  std::vector<LpaElement> out;
  for (VertexIndex v : pres.pair().h()) out.push_back(LpaElement::vertex(g, v));
  for (VertexIndex v : pres.pair().s()) out.push_back(v_h_element(g, v, pres.pair().h()));
  for (const Cycle& c : pres.cycles()) {
    PathTerm base = PathTerm::at_vertex(c.base());
    PathTerm once = PathTerm::from_edges(g, c.edges());
    for (const RationalPolynomial& poly : pres.polynomials()) {
      std::vector<Monomial> ms;
      PathTerm power = base;
      for (std::size_t i = 0; i < poly.coefficients().size(); ++i) {
        if (i > 0) power = power.concat(g, once);
        const Rational& coeff = poly.coefficients()[i];
        if (coeff != 0) ms.push_back(Monomial{coeff, power, base});
      }
      out.push_back(LpaElement::from_monomials(g, std::move(ms)));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// All named paths of length <= len_cap, grouped by range vertex.
std::vector<std::vector<PathTerm>> paths_by_range(const Graph& g, std::size_t len_cap) {
  std::vector<std::vector<PathTerm>> by_range(g.vertex_count());
  std::vector<PathTerm> frontier;
  std::size_t total = 0;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) frontier.push_back(PathTerm::at_vertex(v));
  for (std::size_t len = 0; len <= len_cap && !frontier.empty(); ++len) {
    std::vector<PathTerm> next;
    for (const PathTerm& p : frontier) {
      by_range[p.range(g)].push_back(p);
      if (++total > kPathCap)
        throw CapacityError("path enumeration exceeds the spanning cap");
      if (len == len_cap) continue;
      for (EdgeIndex e : g.out_edges(p.range(g))) next.push_back(append_edge(g, p, e));
    }
    frontier = std::move(next);
  }
  return by_range;
}

}  // namespace

std::vector<LpaElement> spanning_monomials(const AdmissiblePair& pair, std::size_t len_cap) {
  const Graph& g = pair.graph();
  std::vector<std::vector<PathTerm>> by_range = paths_by_range(g, len_cap);
  std::vector<LpaElement> out;
  for (VertexIndex v : pair.h()) {
    for (const PathTerm& p : by_range[v]) {
      for (const PathTerm& q : by_range[v]) {
        out.push_back(LpaElement::from_monomials(g, {Monomial{1, p, q}}));
      }
    }
  }
  for (VertexIndex v : pair.s()) {
    std::vector<EdgeIndex> misses;
    for (std::uint32_t bi : g.out_bundles(v)) {
      const EdgeBundle& b = g.bundles()[bi];
      if (pair.h().contains(b.target)) continue;
      for (EdgeIndex e : b.named) misses.push_back(e);
    }
    for (const PathTerm& p : by_range[v]) {
      for (const PathTerm& q : by_range[v]) {
        std::vector<Monomial> ms;
        ms.push_back(Monomial{1, p, q});
        for (EdgeIndex e : misses) {
          ms.push_back(Monomial{-1, append_edge(g, p, e), append_edge(g, q, e)});
        }
        out.push_back(LpaElement::from_monomials(g, std::move(ms)));
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

struct ProductGrid {
  std::vector<LpaElement> left;   // spanning set of the annihilator
  std::vector<LpaElement> right;  // generators plus spanning set of the envelope
};

ProductGrid annihilation_grid(const IdealPresentation& pres, std::size_t len_cap) {
  AdmissiblePair env = graded_envelope(pres);
  AdmissiblePair ann = annihilator(pres);
  ProductGrid grid;
  grid.left = spanning_monomials(ann, len_cap);
  grid.right = generators(pres);
  std::vector<LpaElement> span = spanning_monomials(env, len_cap);
  grid.right.insert(grid.right.end(), span.begin(), span.end());
  std::sort(grid.right.begin(), grid.right.end());
  grid.right.erase(std::unique(grid.right.begin(), grid.right.end()), grid.right.end());
  if (grid.left.size() * grid.right.size() * 2 > kProductCap)
    throw CapacityError("annihilation product grid exceeds the capacity bound");
  return grid;
}

AnnihilationReport gather_report(const ProductGrid& grid,
                                 const std::vector<std::uint8_t>& bad_left,
                                 const std::vector<std::uint8_t>& bad_right) {
  AnnihilationReport report;
  report.products_checked = 2 * grid.left.size() * grid.right.size();
  for (std::size_t i = 0; i < grid.left.size(); ++i) {
    for (std::size_t j = 0; j < grid.right.size(); ++j) {
      std::size_t cell = i * grid.right.size() + j;
      if (bad_left[cell])
        report.violations.push_back({to_string(grid.left[i]), to_string(grid.right[j])});
      if (bad_right[cell])
        report.violations.push_back({to_string(grid.right[j]), to_string(grid.left[i])});
    }
  }
  return report;
}

}  // namespace

AnnihilationReport verify_annihilation_serial(const IdealPresentation& pres,
                                              std::size_t len_cap) {
  ProductGrid grid = annihilation_grid(pres, len_cap);
  std::vector<std::uint8_t> bad_left(grid.left.size() * grid.right.size(), 0);
  std::vector<std::uint8_t> bad_right(bad_left.size(), 0);
  for (std::size_t i = 0; i < grid.left.size(); ++i) {
    for (std::size_t j = 0; j < grid.right.size(); ++j) {
      std::size_t cell = i * grid.right.size() + j;
      bad_left[cell] = !is_zero(multiply(grid.left[i], grid.right[j]));
      bad_right[cell] = !is_zero(multiply(grid.right[j], grid.left[i]));
    }
  }
  return gather_report(grid, bad_left, bad_right);
}

AnnihilationReport verify_annihilation(const IdealPresentation& pres, std::size_t len_cap) {
  ProductGrid grid = annihilation_grid(pres, len_cap);
  std::vector<std::uint8_t> bad_left(grid.left.size() * grid.right.size(), 0);
  std::vector<std::uint8_t> bad_right(bad_left.size(), 0);
  const std::int64_t cells = static_cast<std::int64_t>(bad_left.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t cell = 0; cell < cells; ++cell) {
    std::size_t i = static_cast<std::size_t>(cell) / grid.right.size();
    std::size_t j = static_cast<std::size_t>(cell) % grid.right.size();
    bad_left[cell] = !is_zero(multiply(grid.left[i], grid.right[j]));
    bad_right[cell] = !is_zero(multiply(grid.right[j], grid.left[i]));
  }
  return gather_report(grid, bad_left, bad_right);
}

std::string to_string(const LpaElement& x) {
  if (x.empty()) return "0";
  const Graph& g = x.graph();
  std::ostringstream out;
  bool first = true;
  for (const Monomial& m : x.monomials()) {
    Rational mag = m.coeff < 0 ? Rational(-m.coeff) : m.coeff;
    if (first) {
      if (m.coeff < 0) out << "-";
    } else {
      out << (m.coeff < 0 ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> atoms;
    for (EdgeIndex e : m.p.edges()) atoms.push_back(g.edge(e).name);
    for (auto it = m.q.edges().rbegin(); it != m.q.edges().rend(); ++it)
      atoms.push_back(g.edge(*it).name + "*");
    if (atoms.empty()) atoms.push_back(g.vertex_names()[m.p.source()]);
    if (mag != 1) out << to_string(mag) << " ";
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (i > 0) out << " ";
      out << atoms[i];
    }
  }
  return out.str();
}

}  // namespace lpa
