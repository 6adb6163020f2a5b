#include "bjq/parse.hpp"

#include <cctype>
#include <vector>

namespace bjq {

ParseError::ParseError(const std::string& msg, std::size_t off)
    : std::runtime_error(msg + " at offset " + std::to_string(off)), offset(off) {}

namespace {

constexpr unsigned long kMaxExponent = 1u << 20;
constexpr int kMaxIndex = 9999;

enum class Tok { Number, I, HBar, Var, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };

struct Token {
  Tok kind;
  std::size_t offset;
  mpz_class value;   // Number
  char var = 0;      // Var: 'q' or 'p'
  int index = 1;     // Var
};

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  std::size_t pos = 0;
  auto push = [&](Tok k, std::size_t off) { out.push_back({k, off}); };
  while (pos < text.size()) {
    char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    std::size_t start = pos;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        digits += text[pos++];
      Token t{Tok::Number, start};
      t.value = mpz_class(digits);
      out.push_back(std::move(t));
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string word;
      while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos])))
        word += text[pos++];
      if (word == "i") {
        push(Tok::I, start);
      } else if (word == "hbar") {
        push(Tok::HBar, start);
      } else if (word == "q" || word == "p") {
        Token t{Tok::Var, start};
        t.var = word[0];
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
          std::string digits;
          while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            digits += text[pos++];
          mpz_class idx(digits);
          if (idx == 0) throw ParseError("variable index must be at least 1", start);
          if (idx > kMaxIndex) throw ParseError("variable index too large", start);
          t.index = static_cast<int>(idx.get_ui());
        }
        out.push_back(std::move(t));
      } else {
        throw ParseError("unknown name '" + word + "'", start);
      }
      continue;
    }
    switch (c) {
      case '+': push(Tok::Plus, start); break;
      case '-': push(Tok::Minus, start); break;
      case '*': push(Tok::Star, start); break;
      case '^': push(Tok::Caret, start); break;
      case '/': push(Tok::Slash, start); break;
      case '(': push(Tok::LParen, start); break;
      case ')': push(Tok::RParen, start); break;
      default: throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
    ++pos;
  }
  push(Tok::End, text.size());
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, int dof) : toks_(std::move(tokens)), dof_(dof) {}

  ClassicalPoly run() {
    ClassicalPoly value = expr();
    if (peek().kind != Tok::End) throw ParseError("unexpected trailing input", peek().offset);
    return value;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }

  ClassicalPoly expr() {
    bool negate = false;
    if (peek().kind == Tok::Plus) {
      take();
    } else if (peek().kind == Tok::Minus) {
      take();
      negate = true;
    }
    ClassicalPoly value = term();
    if (negate) value = -value;
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      bool minus = take().kind == Tok::Minus;
      ClassicalPoly rhs = term();
      value = minus ? value - rhs : value + rhs;
    }
    return value;
  }

  ClassicalPoly term() {
    ClassicalPoly value = factor();
    while (peek().kind == Tok::Star) {
      take();
      value = value * factor();
    }
    return value;
  }

  ClassicalPoly factor() {
    ClassicalPoly value = atom();
    if (peek().kind == Tok::Caret) {
      take();
      value = power(value, exponent());
    }
    while (peek().kind == Tok::Slash) {
      take();
      value = HBarPolynomial(GaussianRational(divisor())) * value;
    }
    return value;
  }

  ClassicalPoly atom() {
    const Token& t = take();
    switch (t.kind) {
      case Tok::Number: {
        mpq_class value(t.value);
        if (peek().kind == Tok::Slash && toks_[pos_ + 1].kind == Tok::Number) {
          take();
          value /= denominator(take());
        }
        return ClassicalPoly::constant(dof_, HBarPolynomial(GaussianRational(value)));
      }
      case Tok::I:
        return ClassicalPoly::constant(dof_,
                                       HBarPolynomial(GaussianRational::imaginary_unit()));
      case Tok::HBar:
        return ClassicalPoly::constant(dof_, HBarPolynomial::hbar());
      case Tok::Var:
        return t.var == 'q' ? ClassicalPoly::variable_q(dof_, t.index)
                            : ClassicalPoly::variable_p(dof_, t.index);
      case Tok::LParen: {
        ClassicalPoly value = expr();
        if (peek().kind != Tok::RParen) throw ParseError("expected ')'", peek().offset);
        take();
        return value;
      }
      default:
        throw ParseError("expected a number, 'i', 'hbar', a variable, or '('", t.offset);
    }
  }

  unsigned long exponent() {
    if (peek().kind != Tok::Number) throw ParseError("expected integer exponent", peek().offset);
    const Token& t = take();
    if (t.value > kMaxExponent) throw ParseError("exponent too large", t.offset);
    return t.value.get_ui();
  }

  // Divisor in a factor-level '/': positive integer literal.
  mpq_class divisor() {
    if (peek().kind != Tok::Number) throw ParseError("expected integer after '/'", peek().offset);
    return mpq_class(1) / denominator(take());
  }

  mpz_class denominator(const Token& t) {
    if (t.value == 0) throw ParseError("division by zero", t.offset);
    return t.value;
  }

  static ClassicalPoly power(const ClassicalPoly& base, unsigned long e) {
    ClassicalPoly acc = ClassicalPoly::constant(base.dof(), HBarPolynomial(1));
    ClassicalPoly sq = base;
    while (e > 0) {
      if (e & 1) acc = acc * sq;
      e >>= 1;
      if (e) sq = sq * sq;
    }
    return acc;
  }

  std::vector<Token> toks_;
  int dof_;
  std::size_t pos_ = 0;
};

}  // namespace

ClassicalPoly parse_classical(const std::string& text) {
  std::vector<Token> tokens = lex(text);
  int dof = 1;
  for (const Token& t : tokens)
    if (t.kind == Tok::Var && t.index > dof) dof = t.index;
  return Parser(std::move(tokens), dof).run();
}

}  // namespace bjq
