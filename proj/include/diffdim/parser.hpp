#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "descriptor.hpp"

namespace diffdim {

// Generator expression grammar (whitespace-insensitive):
//
//   expr        := signed_term (("+"|"-") signed_term)*
//   signed_term := [coeff "*"?] factor ("*" factor)*          (additive)
//                | factor ("*" factor)* ["-" "1"]             (multiplicative)
//   factor      := shifts "(" varname ")" ["^" int]           (exponent only multiplicative)
//                | int
//   shifts      := ("s" index ["^" int])*                     (empty = identity shift)
//   coeff       := int | int "/" int
//
// "s1^2 s2(x)" denotes the variable x shifted by s_1^2 s_2; indices are
// 1-based.

namespace parser_detail {

struct Token {
  enum Kind { Ident, Number, Plus, Minus, Star, Slash, Caret, LParen, RParen, End } kind;
  std::string text;
  std::size_t pos;
};

inline std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
      out.push_back({Token::Number, src.substr(start, i - start), start});
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_'))
        ++i;
      out.push_back({Token::Ident, src.substr(start, i - start), start});
    } else {
      Token::Kind k;
      switch (c) {
        case '+': k = Token::Plus; break;
        case '-': k = Token::Minus; break;
        case '*': k = Token::Star; break;
        case '/': k = Token::Slash; break;
        case '^': k = Token::Caret; break;
        case '(': k = Token::LParen; break;
        case ')': k = Token::RParen; break;
        default: throw ParseError(std::string("unexpected character '") + c + "'", start);
      }
      out.push_back({k, std::string(1, c), start});
      ++i;
    }
  }
  out.push_back({Token::End, "", src.size()});
  return out;
}

// One multiplicand of a term: either a pure integer or a shifted variable
// with an exponent.
struct Factor {
  bool is_number = false;
  Int number = 0;
  DiffTerm term;     // valid when !is_number
  Int exponent = 1;  // from a trailing ^k, multiplicative only
  bool had_exponent = false;
  std::size_t pos = 0;
};

struct Term {
  int sign = 1;
  bool has_coeff = false;
  Rat coeff = 1;
  std::vector<Factor> factors;
  std::size_t pos = 0;
};

class Parser {
public:
  Parser(const std::string& src, Family family, int n,
         const std::vector<std::string>& variables)
      : tokens_(lex(src)), family_(family), n_(n), variables_(variables) {}

  SliceVector parse() {
    std::vector<Term> terms;
    int sign = 1;
    // allow a redundant leading sign
    if (peek().kind == Token::Plus || peek().kind == Token::Minus) {
      sign = peek().kind == Token::Minus ? -1 : 1;
      advance();
    }
    terms.push_back(parse_term(sign));
    while (peek().kind == Token::Plus || peek().kind == Token::Minus) {
      int s = peek().kind == Token::Minus ? -1 : 1;
      advance();
      terms.push_back(parse_term(s));
    }
    if (peek().kind != Token::End) throw ParseError("trailing input after expression", peek().pos);
    return family_ == Family::Additive ? build_additive(terms) : build_multiplicative(terms);
  }

private:
  const Token& peek() const { return tokens_[cursor_]; }
  void advance() { ++cursor_; }

  Int parse_int_after_caret() {
    bool neg = false;
    if (peek().kind == Token::Minus) {
      neg = true;
      advance();
    }
    if (peek().kind != Token::Number) throw ParseError("expected an integer exponent", peek().pos);
    Int v(peek().text);
    advance();
    return neg ? -v : v;
  }

  bool looks_like_shift() const {
    const Token& t = peek();
    if (t.kind != Token::Ident || t.text.size() < 2 || t.text[0] != 's') return false;
    for (std::size_t i = 1; i < t.text.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t.text[i]))) return false;
    return true;
  }

  ShiftMonomial parse_shifts() {
    ShiftMonomial m = ShiftMonomial::identity(n_);
    while (looks_like_shift()) {
      std::size_t pos = peek().pos;
      int idx = std::stoi(peek().text.substr(1));
      advance();
      if (idx < 1 || idx > n_)
        throw ParseError("shift index " + std::to_string(idx) + " outside 1.." +
                             std::to_string(n_),
                         pos);
      int exp = 1;
      if (peek().kind == Token::Caret) {
        advance();
        Int e = parse_int_after_caret();
        if (e < 0) throw ParseError("negative shift exponents are not allowed", pos);
        if (e > 1000) throw ParseError("shift exponent too large", pos);
        exp = e.convert_to<int>();
      }
      m.e[idx - 1] += exp;
    }
    return m;
  }

  Factor parse_factor() {
    Factor f;
    f.pos = peek().pos;
    if (peek().kind == Token::Number) {
      f.is_number = true;
      f.number = Int(peek().text);
      advance();
      return f;
    }
    ShiftMonomial m = parse_shifts();
    if (peek().kind != Token::LParen)
      throw ParseError("expected '(' introducing a variable", peek().pos);
    advance();
    if (peek().kind != Token::Ident) throw ParseError("expected a variable name", peek().pos);
    std::string name = peek().text;
    std::size_t name_pos = peek().pos;
    advance();
    if (peek().kind != Token::RParen) throw ParseError("expected ')'", peek().pos);
    advance();
    int var = 0;
    for (std::size_t i = 0; i < variables_.size(); ++i)
      if (variables_[i] == name) var = static_cast<int>(i) + 1;
    if (var == 0) throw ParseError("unknown variable '" + name + "'", name_pos);
    f.term = DiffTerm(var, m);
    if (peek().kind == Token::Caret) {
      std::size_t cp = peek().pos;
      advance();
      if (family_ == Family::Additive)
        throw ParseError("exponents are only allowed in the multiplicative family", cp);
      f.exponent = parse_int_after_caret();
      f.had_exponent = true;
    }
    return f;
  }

  Term parse_term(int sign) {
    Term t;
    t.sign = sign;
    t.pos = peek().pos;
    t.factors.push_back(parse_factor());
    // optional coefficient written as int ["/" int] before the first variable
    if (t.factors.back().is_number && peek().kind == Token::Slash) {
      advance();
      if (peek().kind != Token::Number) throw ParseError("expected a denominator", peek().pos);
      Int den(peek().text);
      if (den == 0) throw ParseError("zero denominator", peek().pos);
      advance();
      t.has_coeff = true;
      t.coeff = Rat(t.factors.back().number, den);
      t.factors.pop_back();
      if (peek().kind == Token::Star) advance();
      t.factors.push_back(parse_factor());
    } else if (t.factors.back().is_number &&
               (peek().kind == Token::Star || peek().kind == Token::Ident ||
                peek().kind == Token::LParen)) {
      // "2 * s1(x)" or "2 s1(x)": integer coefficient
      t.has_coeff = true;
      t.coeff = Rat(t.factors.back().number);
      t.factors.pop_back();
      if (peek().kind == Token::Star) advance();
      t.factors.push_back(parse_factor());
    }
    while (peek().kind == Token::Star) {
      advance();
      t.factors.push_back(parse_factor());
    }
    return t;
  }

  SliceVector build_additive(const std::vector<Term>& terms) {
    SliceVector v;
    for (const Term& t : terms) {
      Rat coeff = t.coeff * t.sign;
      const DiffTerm* dt = nullptr;
      int var_factors = 0;
      for (const Factor& f : t.factors) {
        if (f.is_number) {
          coeff *= f.number;
        } else {
          ++var_factors;
          dt = &f.term;
        }
      }
      if (var_factors > 1)
        throw ParseError("nonlinear term in an additive generator", t.pos);
      if (var_factors == 0)
        throw ParseError("constant term in an additive generator", t.pos);
      v.add_term(*dt, coeff);
    }
    return v;
  }

  SliceVector build_multiplicative(const std::vector<Term>& terms) {
    // accepted shapes: a single monomial term, optionally followed by "- 1"
    if (terms.size() > 2)
      throw ParseError("a multiplicative generator is a monomial, optionally minus 1",
                       terms[2].pos);
    if (terms.size() == 2) {
      const Term& tail = terms[1];
      bool is_minus_one = tail.sign == -1 && !tail.has_coeff && tail.factors.size() == 1 &&
                          tail.factors[0].is_number && tail.factors[0].number == 1;
      if (!is_minus_one)
        throw ParseError("only a trailing '- 1' is allowed after the monomial", tail.pos);
    }
    const Term& head = terms[0];
    if (head.sign != 1)
      throw ParseError("a multiplicative generator cannot be negated", head.pos);
    if (head.has_coeff)
      throw ParseError("coefficients are not allowed in a multiplicative generator", head.pos);
    SliceVector v;
    for (const Factor& f : head.factors) {
      if (f.is_number) {
        if (f.number != 1)
          throw ParseError("non-monomial expression in a multiplicative generator", f.pos);
        continue;
      }
      v.add_term(f.term, Rat(f.exponent));
    }
    return v;
  }

  std::vector<Token> tokens_;
  std::size_t cursor_ = 0;
  Family family_;
  int n_;
  std::vector<std::string> variables_;
};

}  // namespace parser_detail

/// Parses one generator expression into its slice vector. Additive: a
/// homogeneous linear combination of shifted variables. Multiplicative: a
/// product of shifted variables with integer exponents; a trailing "- 1" is
/// accepted and ignored.
inline SliceVector parse_generator(const std::string& text, Family family, int n,
                                   const std::vector<std::string>& variables) {
  if (n < 1) throw InputError("the number of endomorphisms must be at least 1");
  parser_detail::Parser p(text, family, n, variables);
  return p.parse();
}

namespace parser_detail {

inline std::string shift_prefix(const ShiftMonomial& m) {
  std::string out;
  for (int j = 0; j < m.n(); ++j) {
    if (m.e[j] == 0) continue;
    if (!out.empty()) out += " ";
    out += "s" + std::to_string(j + 1);
    if (m.e[j] > 1) out += "^" + std::to_string(m.e[j]);
  }
  return out;
}

inline std::string factor_string(const DiffTerm& t, const std::vector<std::string>& variables) {
  std::string name = (t.var >= 1 && t.var <= static_cast<int>(variables.size()))
                         ? variables[t.var - 1]
                         : ("y" + std::to_string(t.var));
  std::string prefix = shift_prefix(t.shift);
  return prefix.empty() ? "(" + name + ")" : prefix + "(" + name + ")";
}

}  // namespace parser_detail

/// Canonical rendering, leading term first; parse_generator is a left
/// inverse of this on every valid vector.
inline std::string print_generator(const SliceVector& v, Family family,
                                   const std::vector<std::string>& variables) {
  if (family == Family::Multiplicative) {
    if (v.is_zero()) return "1 - 1";
    std::string out;
    for (const auto& [t, c] : v.terms()) {
      if (!is_integer(c)) throw InputError("multiplicative exponents must be integers");
      if (!out.empty()) out += " * ";
      out += parser_detail::factor_string(t, variables);
      Int e = to_integer(c);
      if (e != 1) out += "^" + e.str();
    }
    return out + " - 1";
  }
  if (v.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [t, c] : v.terms()) {
    Rat a = c;
    if (first) {
      if (a < 0) {
        out += "-";
        a = -a;
      }
    } else {
      out += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    if (a != 1) out += rat_to_string(a) + " ";
    out += parser_detail::factor_string(t, variables);
    first = false;
  }
  return out;
}

}  // namespace diffdim
