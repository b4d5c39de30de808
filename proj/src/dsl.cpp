#include "hodgecalc/dsl.hpp"

#include <cctype>
#include <sstream>

#include "hodgecalc/constructors.hpp"
#include "hodgecalc/json_io.hpp"

namespace hodgecalc {

namespace {

// Dimension-bearing literals (P's n, rank, codim) are capped so that a typo
// cannot request a gigantic table; genus stays unbounded.
constexpr long long kMaxDimensionLiteral = 500;

enum class TokenKind { Ident, Integer, LParen, RParen, Comma, Equals, End };

struct Token {
  TokenKind kind;
  size_t position;
  std::string text;  // ident name or digits
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& current() const { return token_; }

  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const size_t start = pos_;
    if (pos_ >= text_.size()) {
      token_ = {TokenKind::End, start, ""};
      return;
    }
    const char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      token_ = {TokenKind::Ident, start, std::string(text_.substr(start, pos_ - start))};
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      token_ = {TokenKind::Integer, start, std::string(text_.substr(start, pos_ - start))};
      return;
    }
    switch (c) {
      case '(': token_ = {TokenKind::LParen, start, "("}; break;
      case ')': token_ = {TokenKind::RParen, start, ")"}; break;
      case ',': token_ = {TokenKind::Comma, start, ","}; break;
      case '=': token_ = {TokenKind::Equals, start, "="}; break;
      default:
        throw LexicalError(start, "unexpected character '" + std::string(1, c) +
                                      "' at offset " + std::to_string(start));
    }
    ++pos_;
  }

 private:
  std::string_view text_;
  size_t pos_ = 0;
  Token token_;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) {}

  VarietyExpr parse_top() {
    VarietyExpr e = parse_expr();
    if (lexer_.current().kind != TokenKind::End)
      fail({"end of input"});
    return e;
  }

 private:
  [[noreturn]] void fail(std::vector<std::string> expected) {
    const Token& t = lexer_.current();
    std::string got = t.kind == TokenKind::End ? "end of input" : "'" + t.text + "'";
    std::string message = "expected ";
    for (size_t i = 0; i < expected.size(); ++i) {
      if (i) message += expected.size() == 2 ? " or " : ", ";
      message += expected[i];
    }
    message += " at offset " + std::to_string(t.position) + ", found " + got;
    throw SyntaxError(t.position, std::move(expected), message);
  }

  void expect(TokenKind kind, const std::string& name) {
    if (lexer_.current().kind != kind) fail({name});
    lexer_.advance();
  }

  // consumes `name=` introducing a named integer argument
  void expect_named(const std::string& name) {
    const Token& t = lexer_.current();
    if (t.kind != TokenKind::Ident || t.text != name) fail({name + "="});
    lexer_.advance();
    if (lexer_.current().kind != TokenKind::Equals) fail({"="});
    lexer_.advance();
  }

  Int parse_integer() {
    const Token& t = lexer_.current();
    if (t.kind != TokenKind::Integer) fail({"an integer"});
    Int value(t.text);
    lexer_.advance();
    return value;
  }

  long long parse_bounded_integer(const char* what, long long minimum) {
    const size_t position = lexer_.current().position;
    Int value = parse_integer();
    if (value > kMaxDimensionLiteral)
      throw SemanticError(position, std::string(what) + " " + value.str() +
                                        " exceeds the supported bound " +
                                        std::to_string(kMaxDimensionLiteral));
    const long long v = static_cast<long long>(value);
    if (v < minimum)
      throw SemanticError(position, std::string(what) + " must be >= " +
                                        std::to_string(minimum) + ", got " + std::to_string(v));
    return v;
  }

  VarietyExpr parse_expr() {
    const Token& t = lexer_.current();
    if (t.kind != TokenKind::Ident)
      fail({"point", "P", "curve", "prod", "projbundle", "blowup"});

    const std::string head = t.text;
    if (head == "point") {
      lexer_.advance();
      return VarietyExpr{VarietyExpr::Kind::Point, 0, {}};
    }
    if (head == "P") {
      lexer_.advance();
      expect(TokenKind::LParen, "(");
      const long long n = parse_bounded_integer("projective dimension", 1);
      expect(TokenKind::RParen, ")");
      return VarietyExpr{VarietyExpr::Kind::Projective, Int(n), {}};
    }
    if (head == "curve") {
      lexer_.advance();
      expect(TokenKind::LParen, "(");
      Int genus = parse_integer();
      expect(TokenKind::RParen, ")");
      return VarietyExpr{VarietyExpr::Kind::Curve, std::move(genus), {}};
    }
    if (head == "prod") {
      lexer_.advance();
      expect(TokenKind::LParen, "(");
      VarietyExpr a = parse_expr();
      expect(TokenKind::Comma, ",");
      VarietyExpr b = parse_expr();
      expect(TokenKind::RParen, ")");
      return VarietyExpr{VarietyExpr::Kind::Product, 0, {std::move(a), std::move(b)}};
    }
    if (head == "projbundle") {
      lexer_.advance();
      expect(TokenKind::LParen, "(");
      VarietyExpr base = parse_expr();
      expect(TokenKind::Comma, ",");
      expect_named("rank");
      const long long rank = parse_bounded_integer("rank", 1);
      expect(TokenKind::RParen, ")");
      return VarietyExpr{VarietyExpr::Kind::ProjBundle, Int(rank), {std::move(base)}};
    }
    if (head == "blowup") {
      lexer_.advance();
      expect(TokenKind::LParen, "(");
      VarietyExpr x = parse_expr();
      expect(TokenKind::Comma, ",");
      VarietyExpr z = parse_expr();
      expect(TokenKind::Comma, ",");
      expect_named("codim");
      const long long codim = parse_bounded_integer("codim", 2);
      expect(TokenKind::RParen, ")");
      return VarietyExpr{VarietyExpr::Kind::BlowUp, Int(codim), {std::move(x), std::move(z)}};
    }
    fail({"point", "P", "curve", "prod", "projbundle", "blowup"});
  }

  Lexer lexer_;
};

}  // namespace

VarietyExpr parse(std::string_view text) { return Parser(text).parse_top(); }

namespace {

// Guards hand-built ASTs that bypass the parser's range checks.
int literal_as_int(const VarietyExpr& e, const char* what) {
  if (e.literal < 0 || e.literal > kMaxDimensionLiteral)
    throw ArgumentError(std::string(what) + " " + e.literal.str() + " outside [0, " +
                        std::to_string(kMaxDimensionLiteral) + "]");
  return static_cast<int>(e.literal);
}

}  // namespace

std::string to_string(const VarietyExpr& e) {
  switch (e.kind) {
    case VarietyExpr::Kind::Point:
      return "point";
    case VarietyExpr::Kind::Projective:
      return "P(" + e.literal.str() + ")";
    case VarietyExpr::Kind::Curve:
      return "curve(" + e.literal.str() + ")";
    case VarietyExpr::Kind::Product:
      return "prod(" + to_string(e.children[0]) + ", " + to_string(e.children[1]) + ")";
    case VarietyExpr::Kind::ProjBundle:
      return "projbundle(" + to_string(e.children[0]) + ", rank=" + e.literal.str() + ")";
    case VarietyExpr::Kind::BlowUp:
      return "blowup(" + to_string(e.children[0]) + ", " + to_string(e.children[1]) +
             ", codim=" + e.literal.str() + ")";
  }
  throw Error("unreachable expression kind");
}

int dimension(const VarietyExpr& e) {
  switch (e.kind) {
    case VarietyExpr::Kind::Point:
      return 0;
    case VarietyExpr::Kind::Projective:
      return literal_as_int(e, "projective dimension");
    case VarietyExpr::Kind::Curve:
      return 1;
    case VarietyExpr::Kind::Product:
      return dimension(e.children[0]) + dimension(e.children[1]);
    case VarietyExpr::Kind::ProjBundle:
      return dimension(e.children[0]) + literal_as_int(e, "rank") - 1;
    case VarietyExpr::Kind::BlowUp: {
      const int dim_x = dimension(e.children[0]);
      const int dim_z = dimension(e.children[1]);
      const int codim = literal_as_int(e, "codim");
      if (dim_z != dim_x - codim)
        throw EvalError(to_string(e), "blow-up center has dimension " + std::to_string(dim_z) +
                                          ", expected " + std::to_string(dim_x) + " - " +
                                          std::to_string(codim) + " in " + to_string(e));
      return dim_x;
    }
  }
  throw Error("unreachable expression kind");
}

HodgeGrid eval(const VarietyExpr& e, long long characteristic) {
  switch (e.kind) {
    case VarietyExpr::Kind::Point: {
      HodgeGrid g = point();
      g.characteristic = characteristic;
      return g;
    }
    case VarietyExpr::Kind::Projective: {
      HodgeGrid g = projective_space(literal_as_int(e, "projective dimension"));
      g.characteristic = characteristic;
      return g;
    }
    case VarietyExpr::Kind::Curve: {
      HodgeGrid g = curve(e.literal);
      g.characteristic = characteristic;
      return g;
    }
    case VarietyExpr::Kind::Product:
      return product(eval(e.children[0], characteristic), eval(e.children[1], characteristic));
    case VarietyExpr::Kind::ProjBundle:
      return projective_bundle(eval(e.children[0], characteristic),
                               literal_as_int(e, "rank"));
    case VarietyExpr::Kind::BlowUp: {
      dimension(e);  // reports the offending subexpression on mismatch
      return blow_up(eval(e.children[0], characteristic),
                     eval(e.children[1], characteristic), literal_as_int(e, "codim"));
    }
  }
  throw Error("unreachable expression kind");
}

namespace {

std::string render_text_diamond(const HodgeGrid& g) {
  const int n = g.dim;
  size_t width = 1;
  for (const auto& row : g.h)
    for (const auto& entry : row) width = std::max(width, entry.str().size());

  const size_t full = (n + 1) * width + n;  // widest row: n+1 entries, single spaces
  std::ostringstream out;
  for (int l = 0; l <= 2 * n; ++l) {
    std::string line;
    for (int p = std::min(l, n); p >= std::max(0, l - n); --p) {
      if (!line.empty()) line += ' ';
      std::string cell = g.h[p][l - p].str();
      line += std::string(width - cell.size(), ' ') + cell;
    }
    out << std::string((full - line.size()) / 2, ' ') << line << "\n";
  }
  return out.str();
}

std::string render_csv(const HodgeGrid& g) {
  std::ostringstream out;
  out << "p\\q";
  for (int q = 0; q <= g.dim; ++q) out << "," << q;
  out << "\n";
  for (int p = 0; p <= g.dim; ++p) {
    out << p;
    for (int q = 0; q <= g.dim; ++q) out << "," << g.h[p][q].str();
    out << "\n";
  }
  return out.str();
}

}  // namespace

std::string print_diamond(const HodgeGrid& g, DiamondFormat format) {
  switch (format) {
    case DiamondFormat::Text:
      return render_text_diamond(g);
    case DiamondFormat::Json:
      return grid_to_json(g).dump() + "\n";
    case DiamondFormat::Csv:
      return render_csv(g);
  }
  throw Error("unreachable diamond format");
}

}  // namespace hodgecalc
