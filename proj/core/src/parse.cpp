#include "reesd/parse.hpp"

#include <cctype>
#include <sstream>

namespace reesd {

namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;
  int line = 1, col = 1;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  char take() {
    const char c = text[pos++];
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    return c;
  }

  void skip_space() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) take();
  }

  [[noreturn]] void fail(const std::string& what) const {
    std::ostringstream msg;
    msg << "parse error at " << line << ":" << col << ": " << what;
    throw ParseError(msg.str());
  }
};

class Parser {
 public:
  Parser(const std::string& text, const RingCtx& ctx) : cur_{text}, ctx_(ctx) {}

  CommPoly run() {
    cur_.skip_space();
    if (cur_.done()) cur_.fail("empty expression");
    CommPoly v = expr();
    cur_.skip_space();
    if (!cur_.done()) cur_.fail(std::string("unexpected '") + cur_.peek() + "'");
    return v;
  }

 private:
  CommPoly expr() {
    CommPoly acc = signed_term();
    for (;;) {
      cur_.skip_space();
      if (cur_.done()) break;
      const char c = cur_.peek();
      if (c == '+') {
        cur_.take();
        acc = acc + term();
      } else if (c == '-') {
        cur_.take();
        acc = acc - term();
      } else {
        break;
      }
    }
    return acc;
  }

  CommPoly signed_term() {
    cur_.skip_space();
    if (!cur_.done() && cur_.peek() == '+') cur_.take();
    if (!cur_.done() && cur_.peek() == '-') {
      cur_.take();
      return -term();
    }
    return term();
  }

  CommPoly term() {
    CommPoly acc = factor();
    for (;;) {
      cur_.skip_space();
      if (cur_.done()) break;
      const char c = cur_.peek();
      if (c == '*') {
        cur_.take();
        acc = acc * factor();
      } else if (std::isalpha(static_cast<unsigned char>(c)) ||
                 std::isdigit(static_cast<unsigned char>(c)) || c == '(') {
        acc = acc * factor();  // implicit product
      } else {
        break;
      }
    }
    return acc;
  }

  CommPoly factor() {
    cur_.skip_space();
    if (!cur_.done() && cur_.peek() == '-') {
      cur_.take();
      return -factor();
    }
    CommPoly base = atom();
    for (;;) {
      cur_.skip_space();
      if (cur_.done() || cur_.peek() != '^') break;
      cur_.take();
      const long e = natural();
      CommPoly powed = CommPoly::constant(ctx_, 1);
      for (long i = 0; i < e; ++i) powed = powed * base;
      base = powed;
    }
    return base;
  }

  CommPoly atom() {
    cur_.skip_space();
    if (cur_.done()) cur_.fail("expected a factor");
    const char c = cur_.peek();
    if (c == '(') {
      cur_.take();
      CommPoly v = expr();
      cur_.skip_space();
      if (cur_.done() || cur_.peek() != ')') cur_.fail("expected ')'");
      cur_.take();
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      BigInt num = integer();
      cur_.skip_space();
      if (!cur_.done() && cur_.peek() == '/') {
        cur_.take();
        cur_.skip_space();
        if (cur_.done() || !std::isdigit(static_cast<unsigned char>(cur_.peek())))
          cur_.fail("expected a denominator");
        BigInt den = integer();
        if (den == 0) cur_.fail("zero denominator");
        Rational q(num, den);
        q.canonicalize();
        return CommPoly::constant(ctx_, q);
      }
      return CommPoly::constant(ctx_, Rational(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return variable();
    cur_.fail(std::string("unexpected '") + c + "'");
  }

  CommPoly variable() {
    const int at_line = cur_.line, at_col = cur_.col;
    std::string name;
    while (!cur_.done()) {
      const char c = cur_.peek();
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_')
        name.push_back(cur_.take());
      else
        break;
    }
    std::string resolved = name;
    if (ctx_->index_of(resolved) < 0) {
      if (name == "x" && ctx_->index_of("x1") >= 0)
        resolved = "x1";
      else if (name == "y" && ctx_->index_of("x2") >= 0)
        resolved = "x2";
      else {
        std::ostringstream msg;
        msg << "parse error at " << at_line << ":" << at_col << ": unknown variable '"
            << name << "'";
        throw ParseError(msg.str());
      }
    }
    return CommPoly::variable(ctx_, resolved);
  }

  BigInt integer() {
    std::string digits;
    while (!cur_.done() && std::isdigit(static_cast<unsigned char>(cur_.peek())))
      digits.push_back(cur_.take());
    return BigInt(digits);
  }

  long natural() {
    cur_.skip_space();
    if (cur_.done() || !std::isdigit(static_cast<unsigned char>(cur_.peek())))
      cur_.fail("expected an exponent");
    BigInt n = integer();
    if (n > 0xffff) cur_.fail("exponent too large");
    return n.get_si();
  }

  Cursor cur_;
  const RingCtx& ctx_;
};

}  // namespace

CommPoly parse_polynomial(const std::string& text, const RingCtx& ctx) {
  return Parser(text, ctx).run();
}

std::vector<CommPoly> parse_ideal_text(const std::string& text, const RingCtx& ctx) {
  std::vector<CommPoly> polys;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (blank) continue;
    polys.push_back(parse_polynomial(line, ctx));
  }
  if (polys.size() != 3)
    throw ParseError("ideal input must contain exactly three polynomials, got " +
                     std::to_string(polys.size()));
  return polys;
}

}  // namespace reesd
