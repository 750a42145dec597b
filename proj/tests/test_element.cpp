#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "lpa/element.hpp"
#include "support/corpus.hpp"
#include "support/fixtures.hpp"
#include "support/pretty.hpp"

using lpa::AdmissiblePair;
using lpa::Graph;
using lpa::LpaElement;
using lpa::Monomial;
using lpa::PathTerm;
using lpa::Rational;
using lpa::VertexSet;

namespace {

PathTerm path(const Graph& g, std::initializer_list<const char*> edge_names) {
  std::vector<lpa::EdgeIndex> edges;
  for (const char* name : edge_names) edges.push_back(g.edge_index(name));
  return PathTerm::from_edges(g, std::move(edges));
}

LpaElement elem(const Graph& g, const PathTerm& p) {
  return LpaElement::from_monomials(g, {Monomial{Rational(1), p, PathTerm::at_vertex(p.range(g))}});
}

LpaElement mono(const Graph& g, const PathTerm& p, const PathTerm& q, int num = 1, int den = 1) {
  return LpaElement::from_monomials(g, {Monomial{Rational(num, den), p, q}});
}

}  // namespace

TEST_SUITE("path terms") {

TEST_CASE("vertex paths and edge paths") {
  Graph g = fixtures::worked_example();
  PathTerm at_u = PathTerm::at_vertex(g.vertex("u"));
  CHECK(at_u.is_vertex());
  CHECK(at_u.length() == 0);
  CHECK(at_u.source() == g.vertex("u"));
  CHECK(at_u.range(g) == g.vertex("u"));

  PathTerm p = path(g, {"ul", "uv"});
  CHECK(p.source() == g.vertex("u"));
  CHECK(p.range(g) == g.vertex("v"));
  CHECK(p.length() == 2);
  CHECK_FALSE(p.is_vertex());
}

TEST_CASE("edge paths must chain") {
  Graph g = fixtures::worked_example();
  CHECK_THROWS_AS(path(g, {"uv", "ul"}), lpa::ContractViolation);
  CHECK_THROWS_AS(PathTerm::from_edges(g, {}), lpa::ContractViolation);
}

TEST_CASE("concat and drop_last invert each other") {
  Graph g = fixtures::worked_example();
  PathTerm loop = path(g, {"ul"});
  PathTerm step = path(g, {"uv"});
  PathTerm joined = loop.concat(g, step);
  CHECK(joined == path(g, {"ul", "uv"}));
  CHECK(joined.drop_last(g) == loop);
  CHECK(loop.concat(g, PathTerm::at_vertex(g.vertex("u"))) == loop);
  CHECK_THROWS_AS(step.concat(g, step), lpa::ContractViolation);
  CHECK_THROWS_AS(PathTerm::at_vertex(0).drop_last(g), lpa::ContractViolation);
}

TEST_CASE("path order sorts by length then content") {
  Graph g = fixtures::worked_example();
  PathTerm at_u = PathTerm::at_vertex(g.vertex("u"));
  PathTerm at_v = PathTerm::at_vertex(g.vertex("v"));
  PathTerm one = path(g, {"ul"});
  PathTerm two = path(g, {"ul", "uv"});
  CHECK(at_u < at_v);
  CHECK(at_v < one);
  CHECK(one < two);
  CHECK(path(g, {"ul"}) < path(g, {"uv"}));
}

TEST_CASE("prefix stripping") {
  Graph g = fixtures::worked_example();
  PathTerm whole = path(g, {"ul", "uv"});
  PathTerm at_u = PathTerm::at_vertex(g.vertex("u"));

  auto whole_again = lpa::strip_prefix(g, at_u, whole);
  REQUIRE(whole_again.has_value());
  CHECK(*whole_again == whole);

  auto tail = lpa::strip_prefix(g, path(g, {"ul"}), whole);
  REQUIRE(tail.has_value());
  CHECK(*tail == path(g, {"uv"}));

  auto nothing = lpa::strip_prefix(g, whole, whole);
  REQUIRE(nothing.has_value());
  CHECK(nothing->is_vertex());
  CHECK(nothing->source() == g.vertex("v"));

  CHECK_FALSE(lpa::strip_prefix(g, path(g, {"uv"}), whole).has_value());
  CHECK_FALSE(lpa::strip_prefix(g, PathTerm::at_vertex(g.vertex("v")), whole).has_value());
  CHECK_FALSE(lpa::strip_prefix(g, whole, path(g, {"ul"})).has_value());
}

}  // TEST_SUITE

TEST_SUITE("elements") {

TEST_CASE("canonicalization merges and drops") {
  Graph g = fixtures::counterexample_finite();
  PathTerm a = path(g, {"a"});
  LpaElement sum = LpaElement::from_monomials(
      g, {Monomial{Rational(1, 2), a, a}, Monomial{Rational(3, 2), a, a}});
  REQUIRE(sum.monomials().size() == 1);
  CHECK(sum.monomials()[0].coeff == Rational(2));

  LpaElement cancel = LpaElement::from_monomials(
      g, {Monomial{Rational(1), a, a}, Monomial{Rational(-1), a, a}});
  CHECK(cancel.empty());
  CHECK(lpa::is_zero(cancel));

  // Monomials must pair paths with a common range.
  CHECK_THROWS_AS(
      LpaElement::from_monomials(g, {Monomial{Rational(1), path(g, {"a"}), path(g, {"b"})}}),
      lpa::ContractViolation);
}

TEST_CASE("constructors give the expected strings") {
  Graph g = fixtures::counterexample_finite();
  CHECK(lpa::to_string(LpaElement::zero(g)) == "0");
  CHECK(lpa::to_string(LpaElement::vertex(g, g.vertex("v"))) == "v");
  CHECK(lpa::to_string(LpaElement::real_edge(g, g.edge_index("a"))) == "a");
  CHECK(lpa::to_string(LpaElement::ghost_edge(g, g.edge_index("a"))) == "a*");
  PathTerm a = path(g, {"a"});
  CHECK(lpa::to_string(mono(g, a, a)) == "a a*");
  CHECK(lpa::to_string(mono(g, a, a, 1, 2)) == "1/2 a a*");
  CHECK(lpa::to_string(mono(g, a, a, -1)) == "-a a*");
  CHECK(lpa::to_string(-LpaElement::vertex(g, g.vertex("v"))) == "-v");
  PathTerm la = path(g, {"l", "a"});
  CHECK(lpa::to_string(mono(g, a, la)) == "a a* l*");
}

TEST_CASE("arithmetic") {
  Graph g = fixtures::counterexample_finite();
  LpaElement v = LpaElement::vertex(g, g.vertex("v"));
  LpaElement a = LpaElement::real_edge(g, g.edge_index("a"));
  CHECK((v + a) - a == v);
  CHECK(lpa::is_zero(v - v));
  CHECK(v.scaled(Rational(0)).empty());
  CHECK((v + v) == v.scaled(Rational(2)));
  CHECK(-(-v) == v);
  CHECK(lpa::to_string(v - a.scaled(Rational(2, 3))) == "v - 2/3 a");
}

TEST_CASE("degrees and homogeneous components") {
  Graph g = fixtures::counterexample_finite();
  PathTerm a = path(g, {"a"});
  PathTerm la = path(g, {"l", "a"});
  LpaElement x = elem(g, a) + mono(g, a, la) + mono(g, a, a, 2);
  // Degrees: |a| = 1, |a (la)*| = -1, |a a*| = 0.
  CHECK(lpa::homogeneous_component(x, 1) == elem(g, a));
  CHECK(lpa::homogeneous_component(x, -1) == mono(g, a, la));
  CHECK(lpa::homogeneous_component(x, 0) == mono(g, a, a, 2));
  CHECK(lpa::homogeneous_component(x, 5).empty());
  LpaElement resum = LpaElement::zero(g);
  for (int n = -3; n <= 3; ++n) resum = resum + lpa::homogeneous_component(x, n);
  CHECK(resum == x);
}

TEST_CASE("mixing graphs is rejected") {
  Graph g1 = fixtures::counterexample_finite();
  Graph g2 = fixtures::counterexample_finite();
  LpaElement x = LpaElement::vertex(g1, 0);
  LpaElement y = LpaElement::vertex(g2, 0);
  CHECK_THROWS_AS(x + y, lpa::Error);
  CHECK_THROWS_AS(lpa::multiply(x, y), lpa::Error);
}

}  // TEST_SUITE

TEST_SUITE("multiplication") {

TEST_CASE("edge contractions") {
  Graph g = fixtures::counterexample_finite();
  LpaElement a = LpaElement::real_edge(g, g.edge_index("a"));
  LpaElement b = LpaElement::real_edge(g, g.edge_index("b"));
  LpaElement l = LpaElement::real_edge(g, g.edge_index("l"));
  LpaElement u = LpaElement::vertex(g, g.vertex("u"));
  LpaElement v = LpaElement::vertex(g, g.vertex("v"));

  CHECK(lpa::multiply(lpa::adjoint(a), a) == u);            // a* a = r(a)
  CHECK(lpa::multiply(lpa::adjoint(a), b).empty());         // a* b = 0
  CHECK(lpa::multiply(v, a) == a);                          // s(a) a = a
  CHECK(lpa::multiply(a, u) == a);                          // a r(a) = a
  CHECK(lpa::multiply(u, a).empty());                       // r(a) a = 0
  CHECK(lpa::multiply(l, a) == elem(g, path(g, {"l", "a"})));
  CHECK_FALSE(lpa::multiply(a, lpa::adjoint(a)).empty());   // a a* is a basis monomial

  // (l* l) l* contracts to l* one step at a time.
  LpaElement ghost_l = lpa::adjoint(l);
  CHECK(lpa::multiply(ghost_l, lpa::multiply(l, ghost_l)) == ghost_l);
}

TEST_CASE("contraction across longer ghost parts") {
  Graph g = fixtures::counterexample_finite();
  PathTerm a = path(g, {"a"});
  PathTerm la = path(g, {"l", "a"});
  PathTerm l = path(g, {"l"});
  // (a (la)*)(l l*) keeps the l in the ghost part: q = la = l . a.
  CHECK(lpa::multiply(mono(g, a, la), mono(g, l, l)) == mono(g, a, la));
  // (a (la)*)(la a'*) contracts the whole ghost part.
  CHECK(lpa::multiply(mono(g, a, la), mono(g, la, a)) == mono(g, a, a));
  // Disjoint supports vanish.
  PathTerm b = path(g, {"b"});
  CHECK(lpa::multiply(mono(g, a, a), mono(g, b, b)).empty());
}

TEST_CASE("multiplication is associative and bilinear") {
  std::mt19937 rng(61);
  int done = 0;
  for (int trial = 0; trial < 200 && done < 60; ++trial) {
    Graph g = corpus::random_named_graph(rng);
    auto paths = corpus::all_paths(g, 3);
    if (paths.size() < 2) continue;
    ++done;
    LpaElement x = corpus::random_element(g, rng, paths);
    LpaElement y = corpus::random_element(g, rng, paths);
    LpaElement z = corpus::random_element(g, rng, paths);
    CHECK(lpa::multiply(lpa::multiply(x, y), z) == lpa::multiply(x, lpa::multiply(y, z)));
    CHECK(lpa::multiply(x, y + z) == lpa::multiply(x, y) + lpa::multiply(x, z));
    CHECK(lpa::multiply(x + y, z) == lpa::multiply(x, z) + lpa::multiply(y, z));
    Rational k(3, 2);
    CHECK(lpa::multiply(x.scaled(k), y) == lpa::multiply(x, y).scaled(k));
  }
  CHECK(done == 60);
}

TEST_CASE("vertices sum to the identity") {
  std::mt19937 rng(62);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = corpus::random_named_graph(rng);
    auto paths = corpus::all_paths(g, 2);
    LpaElement one = LpaElement::zero(g);
    for (lpa::VertexIndex v = 0; v < g.vertex_count(); ++v)
      one = one + LpaElement::vertex(g, v);
    LpaElement x = corpus::random_element(g, rng, paths);
    CHECK(lpa::multiply(one, x) == x);
    CHECK(lpa::multiply(x, one) == x);
  }
}

TEST_CASE("adjoint is an anti-homomorphism and an involution") {
  std::mt19937 rng(63);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = corpus::random_named_graph(rng);
    auto paths = corpus::all_paths(g, 3);
    if (paths.empty()) continue;
    LpaElement x = corpus::random_element(g, rng, paths);
    LpaElement y = corpus::random_element(g, rng, paths);
    CHECK(lpa::adjoint(lpa::adjoint(x)) == x);
    CHECK(lpa::adjoint(x + y) == lpa::adjoint(x) + lpa::adjoint(y));
    CHECK(lpa::adjoint(lpa::multiply(x, y)) == lpa::multiply(lpa::adjoint(y), lpa::adjoint(x)));
  }
}

TEST_CASE("grading is multiplicative") {
  std::mt19937 rng(64);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = corpus::random_named_graph(rng);
    auto paths = corpus::all_paths(g, 3);
    if (paths.empty()) continue;
    LpaElement x = corpus::random_element(g, rng, paths);
    LpaElement y = corpus::random_element(g, rng, paths);
    LpaElement xy = lpa::multiply(x, y);
    for (int k = -4; k <= 4; ++k) {
      LpaElement sum = LpaElement::zero(g);
      for (int n = -4; n <= 4; ++n) {
        if (k - n < -4 || k - n > 4) continue;
        sum = sum + lpa::multiply(lpa::homogeneous_component(x, n),
                                  lpa::homogeneous_component(y, k - n));
      }
      CHECK(lpa::homogeneous_component(xy, k) == sum);
    }
  }
}

}  // TEST_SUITE

TEST_SUITE("normal form") {

TEST_CASE("the special edge square expands") {
  Graph g = fixtures::counterexample_finite();
  PathTerm a = path(g, {"a"});
  LpaElement nf = lpa::normal_form(mono(g, a, a));
  CHECK(lpa::to_string(nf) == "v - b b* - l l*");
  CHECK(lpa::normal_form(nf) == nf);
}

TEST_CASE("relations at regular vertices vanish") {
  Graph g = fixtures::counterexample_finite();
  PathTerm a = path(g, {"a"});
  PathTerm b = path(g, {"b"});
  PathTerm l = path(g, {"l"});
  LpaElement rel = LpaElement::vertex(g, g.vertex("v")) - mono(g, a, a) - mono(g, b, b) -
                   mono(g, l, l);
  CHECK(lpa::is_zero(rel));
  CHECK(lpa::normal_form(rel).empty());

  Graph chain = fixtures::chain_two();
  PathTerm e = path(chain, {"e"});
  CHECK(lpa::is_zero(LpaElement::vertex(chain, chain.vertex("u")) - mono(chain, e, e)));

  Graph rose = fixtures::rose_two_petals();
  PathTerm c1 = path(rose, {"c1"});
  PathTerm c2 = path(rose, {"c2"});
  CHECK(lpa::is_zero(LpaElement::vertex(rose, 0) - mono(rose, c1, c1) - mono(rose, c2, c2)));

  Graph loop = fixtures::loop_with_exit();
  PathTerm c = path(loop, {"c"});
  PathTerm ex = path(loop, {"g"});
  CHECK(lpa::is_zero(LpaElement::vertex(loop, loop.vertex("v")) - mono(loop, c, c) -
                     mono(loop, ex, ex)));
}

TEST_CASE("no rewriting happens at infinite emitters") {
  Graph g = fixtures::worked_example();
  PathTerm ul = path(g, {"ul"});
  PathTerm uv = path(g, {"uv"});
  LpaElement square = mono(g, ul, ul);
  CHECK(lpa::normal_form(square) == square);
  // The finite sub-sum of the CK2 shape is nonzero at an infinite emitter.
  LpaElement partial = LpaElement::vertex(g, g.vertex("u")) - mono(g, ul, ul) - mono(g, uv, uv);
  CHECK_FALSE(lpa::is_zero(partial));
  CHECK(lpa::normal_form(partial) == partial);
}

TEST_CASE("deeper redexes expand under longer paths") {
  Graph g = fixtures::counterexample_finite();
  PathTerm la = path(g, {"l", "a"});
  // l a (l a)* rewrites once at a, then the l l* factor is irreducible:
  // the special edge of v is a, not l.
  LpaElement nf = lpa::normal_form(mono(g, la, la));
  PathTerm l = path(g, {"l"});
  PathTerm lb = path(g, {"l", "b"});
  PathTerm ll = path(g, {"l", "l"});
  CHECK(nf == mono(g, l, l) - mono(g, lb, lb) - mono(g, ll, ll));
  CHECK(lpa::normal_form(nf) == nf);
}

TEST_CASE("both strategies reach the same fixpoint") {
  std::mt19937 rng(65);
  int done = 0;
  for (int trial = 0; trial < 200 && done < 50; ++trial) {
    Graph g = corpus::random_named_graph(rng);
    auto paths = corpus::all_paths(g, 3);
    if (paths.empty()) continue;
    ++done;
    LpaElement x = corpus::random_element(g, rng, paths);
    LpaElement canonical = lpa::normal_form(x);
    CHECK(lpa::normal_form(canonical) == canonical);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      CHECK(lpa::normal_form(x, lpa::RewriteStrategy::randomized, seed) == canonical);
    }
    CHECK(lpa::normal_form(x, lpa::RewriteStrategy::canonical_first, 0) == canonical);
  }
  CHECK(done == 50);
}

TEST_CASE("normal form is a ring congruence") {
  std::mt19937 rng(66);
  int done = 0;
  for (int trial = 0; trial < 200 && done < 40; ++trial) {
    Graph g = corpus::random_named_graph(rng);
    auto paths = corpus::all_paths(g, 3);
    if (paths.size() < 2) continue;
    ++done;
    LpaElement x = corpus::random_element(g, rng, paths);
    LpaElement y = corpus::random_element(g, rng, paths);
    CHECK(lpa::normal_form(x + y) == lpa::normal_form(lpa::normal_form(x) + lpa::normal_form(y)));
    CHECK(lpa::normal_form(lpa::multiply(x, y)) ==
          lpa::normal_form(lpa::multiply(lpa::normal_form(x), lpa::normal_form(y))));
    CHECK(lpa::normal_form(lpa::adjoint(x)) == lpa::adjoint(lpa::normal_form(x)));
    for (int n = -3; n <= 3; ++n) {
      CHECK(lpa::homogeneous_component(lpa::normal_form(x), n) ==
            lpa::normal_form(lpa::homogeneous_component(x, n)));
    }
  }
  CHECK(done == 40);
}

}  // TEST_SUITE

TEST_SUITE("ideal elements") {

TEST_CASE("the breaking vertex element lists the missing edges") {
  Graph g = fixtures::worked_example();
  LpaElement vh = lpa::v_h_element(g, g.vertex("u"), g.resolve({"w"}));
  CHECK(lpa::to_string(vh) == "u - ul ul* - uv uv*");
}

TEST_CASE("non-breaking vertices are rejected") {
  Graph g = fixtures::worked_example();
  try {
    lpa::v_h_element(g, g.vertex("v"), g.resolve({"w"}));
    FAIL("expected not_breaking_subset");
  } catch (const lpa::ValidationError& e) {
    CHECK(e.kind() == lpa::ErrorKind::not_breaking_subset);
    CHECK(e.vertices() == std::vector<std::string>{"v"});
  }
  Graph chain = fixtures::chain_two();
  CHECK_THROWS_AS(lpa::v_h_element(chain, chain.vertex("u"), chain.resolve({"v"})),
                  lpa::ValidationError);
  CHECK_THROWS_AS(lpa::v_h_element(g, g.vertex("u"), g.all_vertices()), lpa::ValidationError);
}

TEST_CASE("generators collect vertices, breaking elements and cycle polynomials") {
  Graph g = fixtures::counterexample_finite();
  AdmissiblePair pair = lpa::validate_pair(g, g.resolve({"u", "w"}), {});
  lpa::Cycle loop = lpa::Cycle::make(g, {g.edge_index("l")});
  lpa::RationalPolynomial poly({Rational(1), Rational(1)});
  lpa::IdealPresentation pres = lpa::IdealPresentation::make(pair, {loop}, {poly});

  std::vector<LpaElement> gens = lpa::generators(pres);
  REQUIRE(gens.size() == 3);
  LpaElement u = LpaElement::vertex(g, g.vertex("u"));
  LpaElement w = LpaElement::vertex(g, g.vertex("w"));
  LpaElement pl = LpaElement::vertex(g, g.vertex("v")) + LpaElement::real_edge(g, g.edge_index("l"));
  CHECK(std::find(gens.begin(), gens.end(), u) != gens.end());
  CHECK(std::find(gens.begin(), gens.end(), w) != gens.end());
  CHECK(std::find(gens.begin(), gens.end(), pl) != gens.end());
}

TEST_CASE("generators include the S part") {
  Graph g = fixtures::worked_example();
  AdmissiblePair pair = lpa::validate_pair(g, g.resolve({"w"}), g.resolve({"u"}));
  lpa::IdealPresentation pres = lpa::IdealPresentation::make(pair, {}, {});
  std::vector<LpaElement> gens = lpa::generators(pres);
  REQUIRE(gens.size() == 2);
  LpaElement vh = lpa::v_h_element(g, g.vertex("u"), g.resolve({"w"}));
  CHECK(std::find(gens.begin(), gens.end(), vh) != gens.end());
}

TEST_CASE("spanning monomials cover both parts of the pair") {
  Graph g = fixtures::worked_example();
  AdmissiblePair pair = lpa::validate_pair(g, g.resolve({"w"}), g.resolve({"u"}));
  std::vector<LpaElement> span = lpa::spanning_monomials(pair, 1);
  // H part: only (w, w), since the fans into w are unnamed. S part: paths
  // of length <= 1 into u are u itself and ul, giving four (p, q) pairs.
  CHECK(span.size() == 5);

  LpaElement w = LpaElement::vertex(g, g.vertex("w"));
  CHECK(std::find(span.begin(), span.end(), w) != span.end());

  LpaElement vh = lpa::v_h_element(g, g.vertex("u"), g.resolve({"w"}));
  CHECK(std::find(span.begin(), span.end(), vh) != span.end());

  PathTerm ul = path(g, {"ul"});
  LpaElement shifted =
      lpa::multiply(lpa::multiply(elem(g, ul), vh), lpa::adjoint(elem(g, ul)));
  CHECK(std::find(span.begin(), span.end(), shifted) != span.end());
}

TEST_CASE("spanning monomials of a graded ideal multiply back into it") {
  Graph g = fixtures::counterexample_finite();
  AdmissiblePair pair = lpa::validate_pair(g, g.resolve({"u"}), {});
  std::vector<LpaElement> span = lpa::spanning_monomials(pair, 2);
  // Paths of length <= 2 with range u: u, a, la. All nine (p, q) pairs.
  CHECK(span.size() == 9);
  PathTerm a = path(g, {"a"});
  PathTerm la = path(g, {"l", "a"});
  CHECK(std::find(span.begin(), span.end(), mono(g, a, la)) != span.end());

  std::size_t big = lpa::spanning_monomials(pair, 3).size();
  CHECK(big == 16);  // adds the path lla
}

TEST_CASE("path explosions hit the capacity guard") {
  Graph rose = fixtures::rose_two_petals();
  AdmissiblePair all = lpa::validate_pair(rose, rose.all_vertices(), {});
  CHECK_THROWS_AS(lpa::spanning_monomials(all, 18), lpa::CapacityError);
}

}  // TEST_SUITE

TEST_SUITE("annihilation check") {

TEST_CASE("the worked annihilation grid passes") {
  Graph g = fixtures::counterexample_finite();
  AdmissiblePair pair = lpa::validate_pair(g, g.resolve({"u"}), {});
  lpa::IdealPresentation pres = lpa::IdealPresentation::make(pair, {}, {});

  lpa::AnnihilationReport report = lpa::verify_annihilation(pres, 2);
  CHECK(report.passed());
  // Annihilator side: nine monomials over paths {w, b, lb}. Ideal side: the
  // generator u plus nine spanning monomials over {u, a, la}, with the
  // vertex monomial u u* shared, so nine distinct elements.
  CHECK(report.products_checked == 2 * 9 * 9);
  CHECK(report.violations.empty());

  lpa::AnnihilationReport serial = lpa::verify_annihilation_serial(pres, 2);
  CHECK(serial.products_checked == report.products_checked);
  CHECK(serial.violations.empty());
}

TEST_CASE("presentations with cycle data still verify") {
  Graph g = fixtures::counterexample_finite();
  AdmissiblePair pair = lpa::validate_pair(g, g.resolve({"u", "w"}), {});
  lpa::Cycle loop = lpa::Cycle::make(g, {g.edge_index("l")});
  lpa::RationalPolynomial poly({Rational(1), Rational(1)});
  lpa::IdealPresentation pres = lpa::IdealPresentation::make(pair, {loop}, {poly});
  // The envelope is everything, so the annihilator side is empty.
  lpa::AnnihilationReport report = lpa::verify_annihilation(pres, 3);
  CHECK(report.passed());
  CHECK(report.products_checked == 0);
}

TEST_CASE("trivial annihilators across fixtures") {
  Graph worked = fixtures::worked_example();
  AdmissiblePair pair = lpa::validate_pair(worked, worked.resolve({"w"}), worked.resolve({"u"}));
  lpa::AnnihilationReport report =
      lpa::verify_annihilation(lpa::IdealPresentation::make(pair, {}, {}), 4);
  CHECK(report.passed());
  CHECK(report.products_checked == 0);  // everything reaches w, so ann is empty
}

TEST_CASE("oversized grids are refused") {
  Graph rose = fixtures::rose_two_petals();
  AdmissiblePair all = lpa::validate_pair(rose, rose.all_vertices(), {});
  lpa::IdealPresentation pres = lpa::IdealPresentation::make(all, {}, {});
  CHECK_THROWS_AS(lpa::verify_annihilation(pres, 18), lpa::CapacityError);
}

TEST_CASE("parallel and serial reports agree on random presentations") {
  std::mt19937 rng(67);
  int done = 0;
  for (int trial = 0; trial < 100 && done < 25; ++trial) {
    Graph g = corpus::random_named_graph(rng, 4);
    auto presentations = corpus::sample_presentations(g, rng, 2);
    for (const lpa::IdealPresentation& pres : presentations) {
      lpa::AnnihilationReport par;
      lpa::AnnihilationReport ser;
      try {
        par = lpa::verify_annihilation(pres, 2);
        ser = lpa::verify_annihilation_serial(pres, 2);
      } catch (const lpa::CapacityError&) {
        continue;
      }
      ++done;
      CHECK(par.passed());
      CHECK(ser.passed());
      CHECK(par.products_checked == ser.products_checked);
      CHECK(par.violations.size() == ser.violations.size());
    }
  }
  CHECK(done >= 25);
}

}  // TEST_SUITE
