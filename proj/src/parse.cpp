#include "homlink/parse.hpp"

#include <cctype>

namespace homlink {

namespace {

class Parser {
 public:
  Parser(const std::string& text, const RingPtr& ring) : s_(text), ring_(ring) {}

  Polynomial parse_all() {
    skip();
    if (pos_ == s_.size()) throw ParseError("empty polynomial", pos_);
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return p;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  mpz_class integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected integer", start);
    return mpz_class(s_.substr(start, pos_ - start));
  }

  Polynomial expr() {
    bool neg = false;
    if (accept('-')) {
      neg = true;
    } else {
      accept('+');
    }
    Polynomial acc = term();
    if (neg) acc = -acc;
    for (;;) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = power();
    for (;;) {
      if (accept('*')) {
        acc = acc * power();
      } else if (accept('/')) {
        std::size_t at = pos_;
        mpz_class d = integer();
        if (d == 0) throw ParseError("division by zero", at);
        Scalar inv = ring_->field().from_mpq(mpq_class(mpz_class(1), d));
        acc = acc.scale(inv);
      } else {
        break;
      }
    }
    skip();
    if (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(' || s_[pos_] == '_'))
      throw ParseError("implicit multiplication is not allowed; use '*'", pos_);
    return acc;
  }

  Polynomial power() {
    Polynomial base = primary();
    if (accept('^')) {
      std::size_t at = pos_;
      mpz_class e = integer();
      if (!e.fits_uint_p() || e > 10000) throw ParseError("exponent too large", at);
      return base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  Polynomial primary() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class v = integer();
      return Polynomial::monomial(ring_, Monomial{}, ring_->field().from_mpq(mpq_class(v)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      int idx = ring_->index_of(name);
      if (idx < 0) throw ParseError("unknown variable '" + name + "'", start);
      return Polynomial::variable(ring_, static_cast<std::size_t>(idx));
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  const std::string& s_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring) {
  return Parser(text, ring).parse_all();
}

std::vector<Polynomial> parse_polynomial_list(const std::string& text, const RingPtr& ring, char sep) {
  std::vector<Polynomial> out;
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) return out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size()) {
      if (text[i] == '(') ++depth;
      if (text[i] == ')') --depth;
      if (text[i] != sep || depth != 0) continue;
    }
    std::string piece = text.substr(start, i - start);
    try {
      out.push_back(parse_polynomial(piece, ring));
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()).substr(0, std::string(e.what()).rfind(" at offset")),
                       start + e.position());
    }
    start = i + 1;
  }
  return out;
}

std::vector<std::string> parse_variable_list(const std::string& text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
    if (i >= text.size()) break;
    std::size_t start = i;
    if (!(std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_'))
      throw ParseError("bad variable name", i);
    while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
    out.push_back(text.substr(start, i - start));
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i < text.size() && text[i] != ',') throw ParseError("expected ','", i);
  }
  return out;
}

}  // namespace homlink
