#ifndef LPWR_EXPR_HPP
#define LPWR_EXPR_HPP

#include <string_view>

#include "lpwr/action.hpp"

namespace lpwr {

/// Context for the shared expression grammar:
///   expr   := term (('+'|'-') term)*
///   term   := [scalar '*'] factor ('.' factor)*
///   factor := ident | ident '^*' | '(' expr ')' | '[' entry '@' bpath ',' bpath ']'
/// Idents are vertex/edge names; '^*' stars a generator; matrix units are
/// only available when an extended graph is supplied.  Bridge paths are
/// dot-separated edge lists ending in a bridge edge, or '0' for x0.
struct ExprEnv {
  GraphPtr graph;
  Field field = Field::rationals();
  ExtendedGraphPtr eg; // optional; enables [a @ p, q]
};

/// Parses an expression without matrix units.
CohnElement parse_cohn_expr(const ExprEnv& env, std::string_view text);

/// Parses the full grammar; requires env.eg.
ActionElement parse_action_expr(const ExprEnv& env, std::string_view text);

/// Parses a bridge path ('0' or 'e1.e2.b').
BridgePath parse_bridge_path(const ExtendedGraph& eg, std::string_view text);

} // namespace lpwr

#endif
