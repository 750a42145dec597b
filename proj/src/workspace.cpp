#include "lpa/workspace.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>
#include <vector>

#include "lpa/errors.hpp"
#include "lpa/rational.hpp"

namespace lpa {
namespace {

struct Token {
  enum class Kind { ident, number, lbrace, rbrace, colon, semi, arrow, star, plus, minus, end };
  Kind kind;
  std::string text;
  std::size_t line = 0;
  std::size_t col = 0;
};

const char* describe(Token::Kind k) {
  switch (k) {
    case Token::Kind::ident: return "identifier";
    case Token::Kind::number: return "number";
    case Token::Kind::lbrace: return "'{'";
    case Token::Kind::rbrace: return "'}'";
    case Token::Kind::colon: return "':'";
    case Token::Kind::semi: return "';'";
    case Token::Kind::arrow: return "'->'";
    case Token::Kind::star: return "'*'";
    case Token::Kind::plus: return "'+'";
    case Token::Kind::minus: return "'-'";
    case Token::Kind::end: return "end of input";
  }
  return "token";
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token tok;
    tok.line = line;
    tok.col = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i;
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
        advance(1);
      tok.kind = Token::Kind::ident;
      tok.text = std::string(text.substr(start, i - start));
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) advance(1);
      if (i < text.size() && text[i] == '/') {
        advance(1);
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
          throw ParseError("expected digits after '/' in a rational", line, col);
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) advance(1);
      }
      tok.kind = Token::Kind::number;
      tok.text = std::string(text.substr(start, i - start));
    } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      tok.kind = Token::Kind::arrow;
      advance(2);
    } else {
      switch (c) {
        case '{': tok.kind = Token::Kind::lbrace; break;
        case '}': tok.kind = Token::Kind::rbrace; break;
        case ':': tok.kind = Token::Kind::colon; break;
        case ';': tok.kind = Token::Kind::semi; break;
        case '*': tok.kind = Token::Kind::star; break;
        case '+': tok.kind = Token::Kind::plus; break;
        case '-': tok.kind = Token::Kind::minus; break;
        default:
          throw ParseError(std::string("unexpected character '") + c + "'", line, col);
      }
      advance(1);
    }
    out.push_back(std::move(tok));
  }
  out.push_back(Token{Token::Kind::end, "", line, col});
  return out;
}

class Cursor {
 public:
  explicit Cursor(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  const Token& peek() const { return tokens_[pos_]; }
  bool at(Token::Kind k) const { return peek().kind == k; }
  bool at_keyword(std::string_view word) const {
    return at(Token::Kind::ident) && peek().text == word;
  }

  Token take() { return tokens_[pos_++]; }

  Token expect(Token::Kind k, const std::string& what) {
    if (!at(k)) {
      throw ParseError("expected " + what + ", found " + describe(peek().kind), peek().line,
                       peek().col);
    }
    return take();
  }

  Token expect_keyword(std::string_view word) {
    if (!at_keyword(word))
      throw ParseError("expected '" + std::string(word) + "'", peek().line, peek().col);
    return take();
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

struct EdgeStmt {
  std::string name;
  std::string source;
  std::string target;
  std::size_t line, col;
};

struct BundleStmt {
  std::string source;
  std::string target;
  Multiplicity mult;
  std::vector<std::string> names;
  std::size_t line, col;
};

struct IdealStmt {
  std::string name;
  std::size_t line, col;
  std::vector<std::string> h_names;
  std::vector<std::string> s_names;
  bool has_h = false;
  bool has_s = false;
  std::size_t h_line = 0, h_col = 0;
  std::size_t s_line = 0, s_col = 0;
  std::vector<std::pair<std::vector<std::string>, Token>> cycles;
  std::vector<std::pair<std::vector<Rational>, Token>> polys;
};

std::vector<std::string> ident_list(Cursor& cur) {
  std::vector<std::string> names;
  while (cur.at(Token::Kind::ident)) names.push_back(cur.take().text);
  return names;
}

Rational signed_rational(Cursor& cur) {
  bool neg = false;
  if (cur.at(Token::Kind::minus)) {
    cur.take();
    neg = true;
  }
  Token num = cur.expect(Token::Kind::number, "a rational coefficient");
  Rational value;
  try {
    value = parse_rational(num.text);
  } catch (const Error& e) {
    throw ParseError(e.what(), num.line, num.col);
  }
  return neg ? Rational(-value) : value;
}

std::shared_ptr<const Graph> parse_graph_block(Cursor& cur) {
  cur.expect_keyword("graph");
  cur.expect(Token::Kind::lbrace, "'{'");

  std::map<std::string, Token> vertex_decls;
  std::vector<std::string> vertex_order;
  std::vector<EdgeStmt> edge_stmts;
  std::vector<BundleStmt> bundle_stmts;

  while (!cur.at(Token::Kind::rbrace)) {
    if (cur.at_keyword("vertices")) {
      cur.take();
      cur.expect(Token::Kind::colon, "':'");
      while (cur.at(Token::Kind::ident)) {
        Token name = cur.take();
        if (vertex_decls.count(name.text))
          throw ParseError("duplicate vertex '" + name.text + "'", name.line, name.col);
        vertex_decls.emplace(name.text, name);
        vertex_order.push_back(name.text);
      }
      cur.expect(Token::Kind::semi, "';'");
    } else if (cur.at_keyword("edge")) {
      Token head = cur.take();
      Token name = cur.expect(Token::Kind::ident, "an edge name");
      cur.expect(Token::Kind::colon, "':'");
      Token u = cur.expect(Token::Kind::ident, "a source vertex");
      cur.expect(Token::Kind::arrow, "'->'");
      Token v = cur.expect(Token::Kind::ident, "a target vertex");
      cur.expect(Token::Kind::semi, "';'");
      edge_stmts.push_back({name.text, u.text, v.text, head.line, head.col});
    } else if (cur.at_keyword("edges")) {
      Token head = cur.take();
      Token u = cur.expect(Token::Kind::ident, "a source vertex");
      cur.expect(Token::Kind::arrow, "'->'");
      Token v = cur.expect(Token::Kind::ident, "a target vertex");
      cur.expect(Token::Kind::colon, "':'");
      Multiplicity mult;
      if (cur.at_keyword("inf")) {
        cur.take();
        mult = Multiplicity::infinite();
      } else {
        Token num = cur.expect(Token::Kind::number, "a multiplicity or 'inf'");
        if (num.text.find('/') != std::string::npos)
          throw ParseError("multiplicity must be a natural number", num.line, num.col);
        mult = Multiplicity::finite(static_cast<std::uint32_t>(std::stoul(num.text)));
      }
      std::vector<std::string> names;
      if (cur.at_keyword("with")) {
        cur.take();
        names = ident_list(cur);
        if (names.empty())
          throw ParseError("expected edge names after 'with'", cur.peek().line, cur.peek().col);
      }
      cur.expect(Token::Kind::semi, "';'");
      bundle_stmts.push_back({u.text, v.text, mult, std::move(names), head.line, head.col});
    } else {
      throw ParseError("expected 'vertices', 'edge', 'edges' or '}'", cur.peek().line,
                       cur.peek().col);
    }
  }
  cur.take();

  auto check_vertex = [&](const std::string& name, std::size_t line, std::size_t col) {
    if (!vertex_decls.count(name))
      throw ParseError("unknown vertex '" + name + "'", line, col);
  };
  std::map<std::string, std::pair<std::size_t, std::size_t>> edge_names;
  auto check_edge_name = [&](const std::string& name, std::size_t line, std::size_t col) {
    auto [it, fresh] = edge_names.emplace(name, std::pair{line, col});
    (void)it;
    if (!fresh) throw ParseError("duplicate edge name '" + name + "'", line, col);
  };

  GraphBuilder builder;
  for (const std::string& name : vertex_order) builder.add_vertex(name);
  for (const EdgeStmt& e : edge_stmts) {
    check_vertex(e.source, e.line, e.col);
    check_vertex(e.target, e.line, e.col);
    check_edge_name(e.name, e.line, e.col);
    builder.add_edge(e.name, e.source, e.target);
  }
  for (const BundleStmt& b : bundle_stmts) {
    check_vertex(b.source, b.line, b.col);
    check_vertex(b.target, b.line, b.col);
    for (const std::string& name : b.names) check_edge_name(name, b.line, b.col);
    if (!b.mult.is_infinite() && b.names.size() > b.mult.count())
      throw ParseError("more edge names than the multiplicity allows", b.line, b.col);
    builder.add_bundle(b.source, b.target, b.mult, b.names);
  }
  try {
    return std::make_shared<const Graph>(builder.build());
  } catch (const CapacityError&) {
    throw;
  } catch (const Error& e) {
    // Anything the statement checks above missed; point at the block start.
    throw ParseError(e.what(), 1, 1);
  }
}

IdealStmt parse_ideal_block(Cursor& cur) {
  Token head = cur.expect_keyword("ideal");
  Token name = cur.expect(Token::Kind::ident, "an ideal name");
  cur.expect(Token::Kind::lbrace, "'{'");
  IdealStmt stmt;
  stmt.name = name.text;
  stmt.line = head.line;
  stmt.col = head.col;
  while (!cur.at(Token::Kind::rbrace)) {
    if (cur.at_keyword("H")) {
      Token h = cur.take();
      if (stmt.has_h) throw ParseError("duplicate 'H' line", h.line, h.col);
      stmt.has_h = true;
      stmt.h_line = h.line;
      stmt.h_col = h.col;
      cur.expect(Token::Kind::colon, "':'");
      stmt.h_names = ident_list(cur);
      cur.expect(Token::Kind::semi, "';'");
    } else if (cur.at_keyword("S")) {
      Token s = cur.take();
      if (stmt.has_s) throw ParseError("duplicate 'S' line", s.line, s.col);
      stmt.has_s = true;
      stmt.s_line = s.line;
      stmt.s_col = s.col;
      cur.expect(Token::Kind::colon, "':'");
      stmt.s_names = ident_list(cur);
      cur.expect(Token::Kind::semi, "';'");
    } else if (cur.at_keyword("cycle")) {
      Token c = cur.take();
      cur.expect(Token::Kind::colon, "':'");
      std::vector<std::string> edges = ident_list(cur);
      if (edges.empty()) throw ParseError("a cycle needs at least one edge", c.line, c.col);
      cur.expect(Token::Kind::semi, "';'");
      stmt.cycles.emplace_back(std::move(edges), c);
    } else if (cur.at_keyword("poly")) {
      Token p = cur.take();
      cur.expect(Token::Kind::colon, "':'");
      std::vector<Rational> coeffs;
      while (cur.at(Token::Kind::number) || cur.at(Token::Kind::minus))
        coeffs.push_back(signed_rational(cur));
      if (coeffs.empty())
        throw ParseError("a polynomial needs at least one coefficient", p.line, p.col);
      cur.expect(Token::Kind::semi, "';'");
      stmt.polys.emplace_back(std::move(coeffs), p);
    } else {
      throw ParseError("expected 'H', 'S', 'cycle', 'poly' or '}'", cur.peek().line,
                       cur.peek().col);
    }
  }
  cur.take();
  return stmt;
}

IdealPresentation build_ideal(const Graph& g, const IdealStmt& stmt) {
  VertexSet h, s;
  try {
    h = g.resolve(stmt.h_names);
  } catch (const Error& e) {
    throw ParseError(e.what(), stmt.h_line, stmt.h_col);
  }
  try {
    s = g.resolve(stmt.s_names);
  } catch (const Error& e) {
    throw ParseError(e.what(), stmt.s_line, stmt.s_col);
  }

  std::vector<Cycle> cycles;
  for (const auto& [edge_names, tok] : stmt.cycles) {
    std::vector<EdgeIndex> edges;
    for (const std::string& name : edge_names) {
      auto e = g.find_edge(name);
      if (!e) throw ParseError("unknown edge '" + name + "'", tok.line, tok.col);
      edges.push_back(*e);
    }
    try {
      cycles.push_back(Cycle::make(g, std::move(edges)));
    } catch (const Error& e) {
      throw ParseError(e.what(), tok.line, tok.col);
    }
  }

  std::vector<RationalPolynomial> polys;
  for (const auto& [coeffs, tok] : stmt.polys) {
    try {
      polys.emplace_back(coeffs);
    } catch (const Error& e) {
      throw ParseError(e.what(), tok.line, tok.col);
    }
  }

  try {
    AdmissiblePair pair = validate_pair(g, h, s);
    return IdealPresentation::make(std::move(pair), std::move(cycles), std::move(polys));
  } catch (const Error& e) {
    throw ParseError(e.what(), stmt.line, stmt.col);
  }
}

}  // namespace

Workspace parse_workspace(std::string_view text) {
  Cursor cur(tokenize(text));
  Workspace ws;
  ws.graph = parse_graph_block(cur);
  while (cur.at_keyword("ideal")) {
    IdealStmt stmt = parse_ideal_block(cur);
    if (ws.ideals.count(stmt.name))
      throw ParseError("duplicate ideal '" + stmt.name + "'", stmt.line, stmt.col);
    ws.ideals.emplace(stmt.name, build_ideal(*ws.graph, stmt));
  }
  if (!cur.at(Token::Kind::end)) {
    throw ParseError("expected 'ideal' or end of input", cur.peek().line, cur.peek().col);
  }
  return ws;
}

std::string print_workspace(const Workspace& ws) {
  const Graph& g = *ws.graph;
  std::ostringstream out;
  out << "graph {\n";
  if (g.vertex_count() > 0) {
    out << "  vertices:";
    for (const std::string& name : g.vertex_names()) out << " " << name;
    out << ";\n";
  }
  for (const EdgeBundle& b : g.bundles()) {
    out << "  edges " << g.vertex_name(b.source) << " -> " << g.vertex_name(b.target) << " : ";
    if (b.mult.is_infinite()) {
      out << "inf";
    } else {
      out << b.mult.count();
    }
    if (!b.named.empty()) {
      out << " with";
      for (EdgeIndex e : b.named) out << " " << g.edge(e).name;
    }
    out << ";\n";
  }
  out << "}\n";
  for (const auto& [name, pres] : ws.ideals) {
    out << "\nideal " << name << " {\n";
    if (!pres.pair().h().empty()) {
      out << "  H:";
      for (const std::string& n : g.names_of(pres.pair().h())) out << " " << n;
      out << ";\n";
    }
    if (!pres.pair().s().empty()) {
      out << "  S:";
      for (const std::string& n : g.names_of(pres.pair().s())) out << " " << n;
      out << ";\n";
    }
    for (const Cycle& c : pres.cycles()) {
      out << "  cycle:";
      for (EdgeIndex e : c.edges()) out << " " << g.edge(e).name;
      out << ";\n";
    }
    for (const RationalPolynomial& p : pres.polynomials()) {
      out << "  poly:";
      for (const Rational& c : p.coefficients()) out << " " << to_string(c);
      out << ";\n";
    }
    out << "}\n";
  }
  return out.str();
}

bool workspaces_equal(const Workspace& a, const Workspace& b) {
  if (!(*a.graph == *b.graph)) return false;
  if (a.ideals.size() != b.ideals.size()) return false;
  auto ia = a.ideals.begin();
  auto ib = b.ideals.begin();
  for (; ia != a.ideals.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return false;
    const IdealPresentation& x = ia->second;
    const IdealPresentation& y = ib->second;
    if (x.pair().h() != y.pair().h() || x.pair().s() != y.pair().s()) return false;
    if (x.cycles().size() != y.cycles().size()) return false;
    for (std::size_t i = 0; i < x.cycles().size(); ++i) {
      if (x.cycles()[i].edges() != y.cycles()[i].edges()) return false;
    }
    if (x.polynomials() != y.polynomials()) return false;
  }
  return true;
}

LpaElement parse_element(const Graph& g, std::string_view text) {
  Cursor cur(tokenize(text));
  auto parse_atom = [&]() -> LpaElement {
    Token name = cur.expect(Token::Kind::ident, "a vertex or edge name");
    bool starred = false;
    if (cur.at(Token::Kind::star)) {
      cur.take();
      starred = true;
    }
    if (auto v = g.find_vertex(name.text)) return LpaElement::vertex(g, *v);
    if (auto e = g.find_edge(name.text))
      return starred ? LpaElement::ghost_edge(g, *e) : LpaElement::real_edge(g, *e);
    throw ParseError("unknown vertex or edge '" + name.text + "'", name.line, name.col);
  };
  auto parse_term = [&]() -> LpaElement {
    Rational coeff = 1;
    if (cur.at(Token::Kind::number)) {
      Token num = cur.take();
      try {
        coeff = parse_rational(num.text);
      } catch (const Error& e) {
        throw ParseError(e.what(), num.line, num.col);
      }
    }
    LpaElement acc = parse_atom();
    while (cur.at(Token::Kind::ident)) acc = multiply(acc, parse_atom());
    return acc.scaled(coeff);
  };

  bool negate = false;
  if (cur.at(Token::Kind::minus)) {
    cur.take();
    negate = true;
  } else if (cur.at(Token::Kind::plus)) {
    cur.take();
  }
  LpaElement acc = parse_term();
  if (negate) acc = -acc;
  while (cur.at(Token::Kind::plus) || cur.at(Token::Kind::minus)) {
    bool minus = cur.take().kind == Token::Kind::minus;
    LpaElement term = parse_term();
    acc = minus ? acc - term : acc + term;
  }
  if (!cur.at(Token::Kind::end))
    throw ParseError("expected '+', '-' or end of input", cur.peek().line, cur.peek().col);
  return acc;
}

}  // namespace lpa
