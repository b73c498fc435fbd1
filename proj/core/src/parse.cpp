#include "detcount/parse.hpp"

#include <cctype>
#include <variant>
#include <vector>

namespace detcount {

ParseError::ParseError(std::size_t pos, const std::string& msg)
    : Error("parse error at position " + std::to_string(pos) + ": " + msg),
      pos_(pos) {}

namespace {

struct Token {
  enum Kind { Num, Var, Op, End } kind;
  std::size_t pos;
  std::string text;
  char op = 0;
  char var_letter = 0;
  std::size_t var_index = 0;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Num, i, std::string(s.substr(i, j - i))});
      i = j;
      continue;
    }
    if (c == 'x' || c == 't' || c == 'X' || c == 'T') {
      std::size_t j = i + 1;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j == i + 1) throw ParseError(i, "variable needs an index");
      Token t{Token::Var, i, std::string(s.substr(i, j - i))};
      t.var_letter = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      t.var_index = std::stoul(std::string(s.substr(i + 1, j - i - 1)));
      if (t.var_letter == 't' && t.var_index == 0)
        throw ParseError(i, "affine variables start at t1");
      out.push_back(std::move(t));
      i = j;
      continue;
    }
    if (c == '+' || c == '-' || c == '*' || c == '^' || c == '(' || c == ')') {
      Token t{Token::Op, i, std::string(1, c)};
      t.op = c;
      out.push_back(std::move(t));
      ++i;
      continue;
    }
    throw ParseError(i, std::string("unexpected character '") + c + "'");
  }
  out.push_back({Token::End, s.size(), ""});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, std::size_t nvars, char letter)
      : toks_(std::move(toks)), nvars_(nvars), letter_(letter) {}

  IntPoly parse() {
    IntPoly p = expr();
    if (peek().kind != Token::End)
      throw ParseError(peek().pos, "unexpected '" + peek().text + "'");
    return p;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  bool accept(char op) {
    if (peek().kind == Token::Op && peek().op == op) {
      ++i_;
      return true;
    }
    return false;
  }

  IntPoly expr() {
    IntPoly acc(nvars_);
    bool first = true;
    for (;;) {
      bool neg = false;
      if (accept('-'))
        neg = true;
      else if (!accept('+') && !first)
        break;
      IntPoly t = term();
      if (neg)
        acc -= t;
      else
        acc += t;
      first = false;
    }
    return acc;
  }

  IntPoly term() {
    IntPoly p = power();
    while (accept('*')) p = p * power();
    if (peek().kind == Token::Num || peek().kind == Token::Var ||
        (peek().kind == Token::Op && peek().op == '('))
      throw ParseError(peek().pos, "missing '*' between factors");
    return p;
  }

  IntPoly power() {
    IntPoly base = primary();
    if (accept('^')) {
      const Token& t = peek();
      if (t.kind != Token::Num) throw ParseError(t.pos, "exponent must be a nonnegative integer");
      ++i_;
      unsigned long k = std::stoul(t.text);
      if (k > 10000) throw ParseError(t.pos, "exponent too large");
      base = base.pow(static_cast<unsigned>(k));
    }
    return base;
  }

  IntPoly primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Token::Num: {
        ++i_;
        return IntPoly::constant(nvars_, Integer(t.text));
      }
      case Token::Var: {
        ++i_;
        if (t.var_letter != letter_)
          throw ParseError(t.pos, "cannot mix x and t variables");
        std::size_t idx = letter_ == 'x' ? t.var_index : t.var_index - 1;
        if (idx >= nvars_)
          throw ParseError(t.pos, "variable " + t.text + " outside the ring");
        return IntPoly::variable(nvars_, idx);
      }
      case Token::Op:
        if (t.op == '(') {
          ++i_;
          IntPoly p = expr();
          if (!accept(')')) throw ParseError(peek().pos, "expected ')'");
          return p;
        }
        throw ParseError(t.pos, "unexpected '" + t.text + "'");
      case Token::End:
        break;
    }
    throw ParseError(t.pos, "unexpected end of input");
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
  std::size_t nvars_;
  char letter_;
};

}  // namespace

ParsedPoly parse_poly(std::string_view text, std::optional<std::size_t> num_vars) {
  auto toks = tokenize(text);
  char letter = 0;
  std::size_t need = 0;
  for (const auto& t : toks) {
    if (t.kind != Token::Var) continue;
    if (letter == 0) letter = t.var_letter;
    std::size_t n = t.var_letter == 'x' ? t.var_index + 1 : t.var_index;
    need = std::max(need, n);
  }
  if (letter == 0) letter = 'x';
  std::size_t nvars = num_vars.value_or(std::max<std::size_t>(need, 1));
  if (nvars < need) throw ParseError(0, "polynomial uses more variables than the ring has");
  ParsedPoly out;
  out.style = letter == 'x' ? VarStyle::X : VarStyle::T;
  out.poly = Parser(std::move(toks), nvars, letter).parse();
  return out;
}

}  // namespace detcount
