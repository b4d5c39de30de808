#ifndef HODGECALC_DSL_HPP
#define HODGECALC_DSL_HPP

#include <string>
#include <string_view>
#include <vector>

#include "hodgecalc/grid.hpp"

namespace hodgecalc {

/// AST of the construction language:
///   expr := "point" | "P(" int ")" | "curve(" int ")"
///         | "prod(" expr "," expr ")"
///         | "projbundle(" expr "," "rank=" int ")"
///         | "blowup(" expr "," expr "," "codim=" int ")"
/// Integers are unsigned decimal literals; whitespace is free between tokens.
struct VarietyExpr {
  enum class Kind { Point, Projective, Curve, Product, ProjBundle, BlowUp };

  Kind kind = Kind::Point;
  Int literal = 0;                    // P: n, curve: genus, projbundle: rank, blowup: codim
  std::vector<VarietyExpr> children;  // prod: {a,b}; projbundle: {base}; blowup: {x,z}

  bool operator==(const VarietyExpr&) const = default;
};

// The three parse-error classes are distinct and machine-readable; positions
// are 0-based byte offsets into the input.

struct LexicalError : Error {
  LexicalError(size_t position, const std::string& message)
      : Error(message), position(position) {}
  size_t position;
};

struct SyntaxError : Error {
  SyntaxError(size_t position, std::vector<std::string> expected, const std::string& message)
      : Error(message), position(position), expected(std::move(expected)) {}
  size_t position;
  std::vector<std::string> expected;
};

struct SemanticError : Error {
  SemanticError(size_t position, const std::string& message)
      : Error(message), position(position) {}
  size_t position;
};

/// Evaluation failure; carries the offending subexpression in source form.
struct EvalError : Error {
  EvalError(std::string subexpression, const std::string& message)
      : Error(message), subexpression(std::move(subexpression)) {}
  std::string subexpression;
};

VarietyExpr parse(std::string_view text);

/// Canonical source form; parse(to_string(e)) == e.
std::string to_string(const VarietyExpr& e);

/// Dimension of the variety the expression denotes, checking blow-up
/// dimension consistency in one bottom-up pass.
int dimension(const VarietyExpr& e);

/// Bottom-up evaluation through the grid constructors; the characteristic
/// tag is stamped on the result and never changes the arithmetic.
HodgeGrid eval(const VarietyExpr& e, long long characteristic = 0);

enum class DiamondFormat { Text, Json, Csv };

/// Renders the table: Text is the centered diamond with h[p][q] on row p+q,
/// Json is the canonical single-line schema, Csv is the (n+1)x(n+1) table
/// with a header row.
std::string print_diamond(const HodgeGrid& g, DiamondFormat format);

}  // namespace hodgecalc

#endif
