#include "betainv/parser.hpp"

#include <cctype>
#include <string>

namespace betainv {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& current() const { return current_; }

  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::size_t start = pos_;
    if (pos_ >= text_.size()) {
      current_ = {Tok::End, "", start};
      return;
    }
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      current_ = {Tok::Number, std::string(text_.substr(start, pos_ - start)), start};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      current_ = {Tok::Ident, std::string(text_.substr(start, pos_ - start)), start};
      return;
    }
    ++pos_;
    switch (c) {
      case '+': current_ = {Tok::Plus, "+", start}; return;
      case '-': current_ = {Tok::Minus, "-", start}; return;
      case '*': current_ = {Tok::Star, "*", start}; return;
      case '^': current_ = {Tok::Caret, "^", start}; return;
      case '/': current_ = {Tok::Slash, "/", start}; return;
      case '(': current_ = {Tok::LParen, "(", start}; return;
      case ')': current_ = {Tok::RParen, ")", start}; return;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  Token current_;
};

class Parser {
 public:
  Parser(std::string_view text, RingPtr ring) : lex_(text), ring_(std::move(ring)) {}

  Polynomial parse() {
    Polynomial p = expression();
    if (lex_.current().kind != Tok::End) {
      throw ParseError("unexpected token '" + lex_.current().text + "'", lex_.current().pos);
    }
    return p;
  }

 private:
  Polynomial expression() {
    Polynomial p = term();
    while (lex_.current().kind == Tok::Plus || lex_.current().kind == Tok::Minus) {
      bool minus = lex_.current().kind == Tok::Minus;
      lex_.advance();
      Polynomial q = term();
      p = minus ? p - q : p + q;
    }
    return p;
  }

  Polynomial term() {
    Polynomial p = factor();
    while (lex_.current().kind == Tok::Star) {
      lex_.advance();
      p = p * factor();
    }
    return p;
  }

  Polynomial factor() {
    if (lex_.current().kind == Tok::Minus) {
      lex_.advance();
      return -factor();
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (lex_.current().kind == Tok::Caret) {
      lex_.advance();
      const Token& t = lex_.current();
      if (t.kind == Tok::Minus) {
        throw ParseError("exponent must be a non-negative integer", t.pos);
      }
      if (t.kind != Tok::Number) {
        throw ParseError("exponent must be a non-negative integer literal", t.pos);
      }
      unsigned long e = 0;
      try {
        e = std::stoul(t.text);
        if (e > 100000ul) throw std::out_of_range("exponent");
      } catch (const std::exception&) {
        throw ParseError("exponent out of range", t.pos);
      }
      lex_.advance();
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial primary() {
    const Token t = lex_.current();
    switch (t.kind) {
      case Tok::Number: {
        lex_.advance();
        Int num(t.text);
        if (lex_.current().kind == Tok::Slash) {
          lex_.advance();
          const Token& d = lex_.current();
          if (d.kind != Tok::Number) {
            throw ParseError("expected integer denominator", d.pos);
          }
          Int den(d.text);
          if (den == 0) throw ParseError("zero denominator", d.pos);
          lex_.advance();
          Rat q(num, den);
          q.canonicalize();
          return Polynomial::constant(ring_, q);
        }
        return Polynomial::constant(ring_, Rat(num));
      }
      case Tok::Ident: {
        auto idx = ring_->index_of(t.text);
        if (!idx) throw ParseError("unknown variable '" + t.text + "'", t.pos);
        lex_.advance();
        return Polynomial::variable(ring_, *idx);
      }
      case Tok::LParen: {
        lex_.advance();
        Polynomial p = expression();
        if (lex_.current().kind != Tok::RParen) {
          throw ParseError("expected ')'", lex_.current().pos);
        }
        lex_.advance();
        return p;
      }
      case Tok::End:
        throw ParseError("unexpected end of input", t.pos);
      default:
        throw ParseError("unexpected token '" + t.text + "'", t.pos);
    }
  }

  Lexer lex_;
  RingPtr ring_;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  return Parser(text, ring).parse();
}

LinearForm parse_linear_form(std::string_view text, const RingPtr& ring) {
  return LinearForm::from_polynomial(parse_polynomial(text, ring));
}

}  // namespace betainv
