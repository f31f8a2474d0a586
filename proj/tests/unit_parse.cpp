// Expression parser: round trips against programmatically built polynomials,
// alias handling, precedence, and error positions.

#include <doctest.h>

#include <string>

#include "reesd/parse.hpp"
#include "reesd/rees.hpp"

using namespace reesd;

namespace {

CommPoly P(const std::string& s) { return parse_polynomial(s, base_ring()); }

std::string err_of(const std::string& s, const RingCtx& ctx) {
  try {
    (void)parse_polynomial(s, ctx);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("basic expressions round trip") {
  RingCtx R = base_ring();
  CommPoly x = CommPoly::variable(R, "x1"), y = CommPoly::variable(R, "x2");

  CHECK(P("x1") == x);
  CHECK(P("x") == x);  // surface alias
  CHECK(P("y") == y);
  CHECK(P("x^2 + 2*x*y + y^2") == (x + y) * (x + y));
  CHECK(P("(x + y)^2") == (x + y) * (x + y));
  CHECK(P("(x+y)(x-y)") == x * x - y * y);  // implicit product
  CHECK(P("2x") == x.scaled(Rational(2)));
  CHECK(P("x y") == x * y);
  CHECK(P("-x^2") == -(x * x));  // unary minus binds below the power
  CHECK(P("-(x + y)") == -(x + y));
  CHECK(P("x - - y") == x + y);
  CHECK(P("1/2*x + 3/4") == x.scaled(Rational(1, 2)) + CommPoly::constant(R, Rational(3, 4)));
  CHECK(P("7") == CommPoly::constant(R, Rational(7)));
  CHECK(P("0") == CommPoly::zero(R));
  CHECK(P("x^0") == CommPoly::constant(R, Rational(1)));
  CHECK(P("  x1 \t+\n x2 ") == x + y);
}

TEST_CASE("printing round trips through the parser") {
  RingCtx R = base_ring();
  CommPoly x = CommPoly::variable(R, "x1"), y = CommPoly::variable(R, "x2");
  CommPoly f = (x + y.scaled(Rational(2))) * (x - y) * x;
  CHECK(parse_polynomial(f.str(), R) == f);
  CHECK(parse_polynomial(CommPoly::zero(R).str(), R) == CommPoly::zero(R));
}

TEST_CASE("aliases defer to explicit ring variables") {
  // In a ring that owns "x", the alias must not fire.
  RingCtx R = make_ring({"x", "x1"});
  CommPoly x = CommPoly::variable(R, "x");
  CHECK(parse_polynomial("x", R) == x);
  CHECK(parse_polynomial("x1", R) == CommPoly::variable(R, "x1"));
}

TEST_CASE("sym ring variables parse") {
  RingCtx S = sym_ring();
  CommPoly g = parse_polynomial("x2^2*T2 - x1^2*T3", S);
  CHECK(g.num_terms() == 2);
  auto bd = g.bidegree();
  REQUIRE(bd.has_value());
  CHECK(*bd == std::pair<long, long>{1, 2});
}

TEST_CASE("errors carry positions") {
  RingCtx R = base_ring();
  CHECK(err_of("x + z", R) == "parse error at 1:5: unknown variable 'z'");
  CHECK(err_of("x +", R).find("expected a factor") != std::string::npos);
  CHECK(err_of("(x", R).find("expected ')'") != std::string::npos);
  CHECK(err_of("", R).find("empty expression") != std::string::npos);
  CHECK(err_of("x )", R).find("unexpected ')'") != std::string::npos);
  CHECK(err_of("1/0", R).find("zero denominator") != std::string::npos);
  CHECK(err_of("1/", R).find("expected a denominator") != std::string::npos);
  CHECK(err_of("x^70000", R) != "");  // exponent beyond the packed range
  // Multi-line input: the position names the offending line.
  CHECK(err_of("x +\n qq", R).find("2:") != std::string::npos);
}

TEST_CASE("ideal files") {
  RingCtx R = base_ring();
  auto f = parse_ideal_text("# running example\nx^5\n\nx^2*y^3  # middle\ny^5\n", R);
  REQUIRE(f.size() == 3);
  CHECK(f[0] == P("x^5"));
  CHECK(f[1] == P("x^2*y^3"));
  CHECK(f[2] == P("y^5"));

  CHECK_THROWS_AS((void)parse_ideal_text("x^2\ny^2\n", R), ParseError);
  CHECK_THROWS_AS((void)parse_ideal_text("x\ny\nx*y\nx^2\n", R), ParseError);
  CHECK_THROWS_AS((void)parse_ideal_text("", R), ParseError);
  CHECK_THROWS_AS((void)parse_ideal_text("x\ny\nz\n", R), ParseError);
}
