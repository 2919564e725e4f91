#include "lpwr/expr.hpp"

#include <cctype>
#include <stdexcept>

namespace lpwr {

namespace {

enum class Tok {
  Ident, Number, Plus, Minus, Star, Dot, StarOp, LParen, RParen,
  LBracket, RBracket, At, Comma, Slash, End
};

struct Lexer {
  std::string_view text;
  std::size_t pos = 0;
  Tok kind = Tok::End;
  std::string value;

  explicit Lexer(std::string_view t) : text(t) { next(); }

  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("expression error at position " +
                                std::to_string(pos) + ": " + msg);
  }

  void next() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    value.clear();
    if (pos >= text.size()) {
      kind = Tok::End;
      return;
    }
    char c = text[pos];
    auto one = [&](Tok k) { kind = k; ++pos; };
    switch (c) {
      case '+': one(Tok::Plus); return;
      case '-': one(Tok::Minus); return;
      case '.': one(Tok::Dot); return;
      case '(': one(Tok::LParen); return;
      case ')': one(Tok::RParen); return;
      case '[': one(Tok::LBracket); return;
      case ']': one(Tok::RBracket); return;
      case '@': one(Tok::At); return;
      case ',': one(Tok::Comma); return;
      case '/': one(Tok::Slash); return;
      case '*': one(Tok::Star); return;
      case '^':
        if (pos + 1 < text.size() && text[pos + 1] == '*') {
          kind = Tok::StarOp;
          pos += 2;
          return;
        }
        fail("'^' must be followed by '*'");
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      kind = Tok::Number;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        value.push_back(text[pos++]);
      return;
    }
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      kind = Tok::Ident;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        value.push_back(text[pos++]);
      return;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  bool accept(Tok k) {
    if (kind != k) return false;
    next();
    return true;
  }
  void expect(Tok k, const std::string& what) {
    if (kind != k) fail("expected " + what);
    next();
  }
};

struct Parser {
  const ExprEnv& env;
  Lexer lex;
  bool allow_units;

  Parser(const ExprEnv& e, std::string_view text, bool units)
      : env(e), lex(text), allow_units(units) {
    if (!env.graph) throw std::invalid_argument("expression: no graph in context");
    if (allow_units && !env.eg)
      throw std::invalid_argument("expression: matrix units need an extended graph");
  }

  Scalar parse_scalar() {
    long num = std::stol(lex.value);
    lex.next();
    if (lex.accept(Tok::Slash)) {
      if (lex.kind != Tok::Number) lex.fail("expected denominator");
      long den = std::stol(lex.value);
      lex.next();
      return env.field.fraction(num, den);
    }
    return env.field.integer(num);
  }

  CohnElement gen_factor() {
    std::string name = lex.value;
    lex.expect(Tok::Ident, "identifier");
    bool star = lex.accept(Tok::StarOp);
    int v = env.graph->find_vertex(name);
    if (v >= 0) return CohnElement::vertex(env.graph, env.field, v); // v* = v
    int e = env.graph->find_edge(name);
    if (e < 0) lex.fail("unknown vertex or edge '" + name + "'");
    return star ? CohnElement::edge_star(env.graph, env.field, e)
                : CohnElement::edge(env.graph, env.field, e);
  }

  // --- coefficient entry sub-grammar (inside [ ... @ p, q ]) ---------------

  AlgElem entry_factor() {
    const CoeffAlgebra& alg = *env.eg->coeff();
    if (lex.accept(Tok::LParen)) {
      AlgElem e = entry_expr();
      lex.expect(Tok::RParen, "')'");
      return e;
    }
    if (lex.kind == Tok::Number) {
      Scalar s = parse_scalar();
      return alg.scale(s, alg.one());
    }
    std::string name = lex.value;
    lex.expect(Tok::Ident, "identifier");
    bool star = lex.accept(Tok::StarOp);
    return alg.symbol(name, star);
  }

  AlgElem entry_term() {
    const CoeffAlgebra& alg = *env.eg->coeff();
    AlgElem acc = entry_factor();
    for (;;) {
      if (lex.accept(Tok::Dot) || lex.accept(Tok::Star)) {
        acc = alg.mul(acc, entry_factor());
      } else {
        return acc;
      }
    }
  }

  AlgElem entry_expr() {
    const CoeffAlgebra& alg = *env.eg->coeff();
    bool neg = lex.accept(Tok::Minus);
    if (!neg) lex.accept(Tok::Plus);
    AlgElem acc = entry_term();
    if (neg) acc = alg.negate(acc);
    for (;;) {
      if (lex.accept(Tok::Plus)) {
        acc = alg.add(acc, entry_term());
      } else if (lex.accept(Tok::Minus)) {
        acc = alg.sub(acc, entry_term());
      } else {
        return acc;
      }
    }
  }

  BridgePath bpath() {
    if (lex.kind == Tok::Number && lex.value == "0") {
      lex.next();
      return BridgePath::x0();
    }
    std::vector<std::string> names;
    names.push_back(lex.value);
    lex.expect(Tok::Ident, "edge identifier");
    while (lex.accept(Tok::Dot)) {
      names.push_back(lex.value);
      lex.expect(Tok::Ident, "edge identifier");
    }
    const ExtendedGraph& eg = *env.eg;
    int b = eg.find_bridge(names.back());
    if (b < 0) lex.fail("bridge path must end in a bridge edge, got '" + names.back() + "'");
    Path prefix = Path::at(eg.bridge(b).src);
    if (names.size() > 1) {
      int first = eg.base()->find_edge(names.front());
      if (first < 0) lex.fail("unknown edge '" + names.front() + "'");
      prefix = Path::at(eg.base()->edge(first).src);
      for (std::size_t i = 0; i + 1 < names.size(); ++i) {
        int e = eg.base()->find_edge(names[i]);
        if (e < 0) lex.fail("unknown edge '" + names[i] + "'");
        if (eg.base()->edge(e).src != path_range(*eg.base(), prefix))
          lex.fail("edges do not concatenate in bridge path");
        prefix.edges.push_back(e);
      }
      if (path_range(*eg.base(), prefix) != eg.bridge(b).src)
        lex.fail("bridge path does not reach the bridge source");
    }
    return BridgePath{prefix, b};
  }

  ActionElement unit_factor() {
    // '[' entry '@' bpath ',' bpath ']'
    AlgElem a = entry_expr();
    lex.expect(Tok::At, "'@'");
    BridgePath p = bpath();
    lex.expect(Tok::Comma, "','");
    BridgePath q = bpath();
    lex.expect(Tok::RBracket, "']'");
    return ActionElement::of_unit(env.eg, a, p, q);
  }

  // --- main grammar ----------------------------------------------------------

  ActionElement factor() {
    if (lex.accept(Tok::LParen)) {
      ActionElement e = expr();
      lex.expect(Tok::RParen, "')'");
      return e;
    }
    if (lex.accept(Tok::LBracket)) {
      if (!allow_units) lex.fail("matrix units are not allowed in this context");
      return unit_factor();
    }
    CohnElement c = gen_factor();
    if (env.eg) return ActionElement::of_sg(env.eg, std::move(c));
    return ActionElement{std::move(c), MatrixPart(dummy_eg())};
  }

  ActionElement term() {
    Scalar s = env.field.one();
    bool scaled = false;
    if (lex.kind == Tok::Number) {
      s = parse_scalar();
      lex.expect(Tok::Star, "'*' after scalar");
      scaled = true;
    }
    ActionElement acc = factor();
    while (lex.accept(Tok::Dot)) {
      ActionElement rhs = factor();
      acc = mul(acc, rhs);
    }
    return scaled ? acc.scaled(s) : acc;
  }

  ActionElement expr() {
    bool neg = lex.accept(Tok::Minus);
    if (!neg) lex.accept(Tok::Plus);
    ActionElement acc = term();
    if (neg) acc = -acc;
    for (;;) {
      if (lex.accept(Tok::Plus)) {
        acc = acc + term();
      } else if (lex.accept(Tok::Minus)) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  ActionElement mul(const ActionElement& a, const ActionElement& b) {
    if (env.eg) return action_mul(a, b, bridge_biset(env.eg));
    ActionElement r = a;
    r.sg = cohn_mul(a.sg, b.sg);
    return r;
  }

  // minimal extended graph so pure-Cohn parsing can reuse ActionElement
  ExtendedGraphPtr dummy_eg() {
    if (!dummy_) {
      auto coeff = std::make_shared<const FieldCoeff>(env.field);
      dummy_ = extend_graph(env.graph, coeff, {});
    }
    return dummy_;
  }

  ExtendedGraphPtr dummy_;
};

} // namespace

CohnElement parse_cohn_expr(const ExprEnv& env, std::string_view text) {
  Parser p(env, text, false);
  ActionElement e = p.expr();
  if (p.lex.kind != Tok::End) p.lex.fail("trailing input");
  return e.sg;
}

ActionElement parse_action_expr(const ExprEnv& env, std::string_view text) {
  Parser p(env, text, true);
  ActionElement e = p.expr();
  if (p.lex.kind != Tok::End) p.lex.fail("trailing input");
  return e;
}

BridgePath parse_bridge_path(const ExtendedGraph& eg, std::string_view text) {
  ExprEnv env;
  env.graph = eg.base();
  env.field = eg.field();
  // share the instance so indices stay comparable
  env.eg = ExtendedGraphPtr(&eg, [](const ExtendedGraph*) {});
  Parser p(env, text, true);
  BridgePath b = p.bpath();
  if (p.lex.kind != Tok::End) p.lex.fail("trailing input");
  return b;
}

} // namespace lpwr
