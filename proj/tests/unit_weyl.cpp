// Weyl algebra arithmetic, its automorphisms, the operator identities the
// b-function machinery depends on, noncommutative Groebner bases, and the
// univariate b-function utilities. Anchor b-functions were derived by hand
// from the commutation relations and are frozen below.

#include <doctest.h>

#include <string>
#include <vector>

#include "reesd/bfunction.hpp"
#include "reesd/parse.hpp"
#include "reesd/weyl.hpp"
#include "reesd/weyl_groebner.hpp"
#include "test_util.hpp"

using namespace reesd;
using testutil::euler_s;
using testutil::ex61_ideal;
using testutil::random_weyl;
using testutil::weyl_power;

namespace {

UniPoly uni(std::vector<long> asc) {
  UniPoly u;
  for (long v : asc) u.c.emplace_back(v);
  return u;
}

}  // namespace

TEST_CASE("commutation relations") {
  WeylOp x1 = weyl_power(WX1, 1), d1 = weyl_power(WD1, 1);
  WeylOp x2 = weyl_power(WX2, 1), d2 = weyl_power(WD2, 1);
  WeylOp t1 = weyl_power(WT1, 1);

  // d1*x1 = x1*d1 + 1; cross pairs commute.
  WeylOp lhs = weyl_mul(d1, x1);
  WeylOp rhs = weyl_mul(x1, d1) + WeylOp::constant(Rational(1));
  CHECK(lhs == rhs);
  CHECK(weyl_mul(d1, x2) == weyl_mul(x2, d1));
  CHECK(weyl_mul(d2, x1) == weyl_mul(x1, d2));
  CHECK(weyl_mul(t1, d1) == weyl_mul(d1, t1));  // T central
  CHECK(weyl_mul(t1, x1) == weyl_mul(x1, t1));

  // d1 * x1^3 = x1^3 d1 + 3 x1^2.
  WeylOp x13 = weyl_power(WX1, 3);
  CHECK(weyl_mul(d1, x13) ==
        weyl_mul(x13, d1) + weyl_power(WX1, 2).scaled(Rational(3)));

  // Normal order is x-before-D: the monomial (1,0,1,0,...) is x1*d1.
  ExpVec e(kWeylVars);
  e.set(WX1, 1);
  e.set(WD1, 1);
  CHECK(weyl_mul(x1, d1) == WeylOp::monomial(e));
}

TEST_CASE("associativity and distributivity on random triples") {
  SplitMix64 rng(7001);
  for (int it = 0; it < 1000; ++it) {
    WeylOp a = random_weyl(rng, 3, 3, it % 2 == 0);
    WeylOp b = random_weyl(rng, 3, 3, it % 3 == 0);
    WeylOp c = random_weyl(rng, 3, 3, false);
    CHECK(weyl_mul(weyl_mul(a, b), c) == weyl_mul(a, weyl_mul(b, c)));
    if (it < 200) {
      CHECK(weyl_mul(a, b + c) == weyl_mul(a, b) + weyl_mul(a, c));
      CHECK(weyl_mul(a + b, c) == weyl_mul(a, c) + weyl_mul(b, c));
    }
  }
}

TEST_CASE("fourier automorphism") {
  CHECK(fourier(weyl_power(WX1, 1)) == weyl_power(WD1, 1));
  CHECK(fourier(weyl_power(WD1, 1)) == -weyl_power(WX1, 1));
  CHECK(fourier(weyl_power(WT2, 1)) == weyl_power(WT2, 1));

  SplitMix64 rng(7002);
  for (int it = 0; it < 1000; ++it) {
    WeylOp a = random_weyl(rng, 3, 3, true);
    WeylOp b = random_weyl(rng, 3, 3, true);
    CHECK(fourier(weyl_mul(a, b)) == weyl_mul(fourier(a), fourier(b)));
    if (it < 250) {
      CHECK(fourier(a + b) == fourier(a) + fourier(b));
      CHECK(fourier(fourier(fourier(fourier(a)))) == a);
    }
  }
}

TEST_CASE("standard transposition anti-automorphism") {
  CHECK(transpose_std(weyl_power(WX1, 1)) == weyl_power(WX1, 1));
  CHECK(transpose_std(weyl_power(WD1, 1)) == -weyl_power(WD1, 1));

  SplitMix64 rng(7003);
  for (int it = 0; it < 1000; ++it) {
    WeylOp a = random_weyl(rng, 3, 3, true);
    WeylOp b = random_weyl(rng, 3, 3, true);
    CHECK(transpose_std(weyl_mul(a, b)) ==
          weyl_mul(transpose_std(b), transpose_std(a)));
    if (it < 250) CHECK(transpose_std(transpose_std(a)) == a);
  }
}

TEST_CASE("operator action composes") {
  RingCtx R = base_ring();
  CommPoly x = CommPoly::variable(R, "x1"), y = CommPoly::variable(R, "x2");

  CHECK(weyl_act(weyl_power(WD1, 1), x * x * x) == x.scaled(Rational(3)) * x);
  CHECK(weyl_act(weyl_power(WD2, 2), y * y) == CommPoly::constant(R, Rational(2)));

  SplitMix64 rng(7004);
  for (int it = 0; it < 200; ++it) {
    WeylOp p = random_weyl(rng, 3, 3, false);
    WeylOp q = random_weyl(rng, 3, 3, false);
    CommPoly f = testutil::random_poly(rng, R, 4, 4);
    CHECK(weyl_act(p, weyl_act(q, f)) == weyl_act(weyl_mul(p, q), f));
  }
}

TEST_CASE("multiplication operators embed polynomials") {
  RingCtx Sy = sym_ring();
  SplitMix64 rng(7005);
  for (int it = 0; it < 100; ++it) {
    CommPoly g = testutil::random_poly(rng, Sy, 4, 3);
    CommPoly f = testutil::random_poly(rng, Sy, 4, 3);
    CHECK(weyl_act(weyl_from_poly(g), f) == g * f);
  }
}

TEST_CASE("weights and initial forms") {
  WeightSpec w;
  WeylOp s = euler_s();
  CHECK(s.is_weight_homogeneous(w));  // both terms have weight 0
  CHECK(initial_form(s, w) == s);

  // x1^2 D2 has weight 1, x1 has weight 1: sum stays homogeneous.
  ExpVec e(kWeylVars);
  e.set(WX1, 2);
  e.set(WD2, 1);
  WeylOp mixed = WeylOp::monomial(e) + weyl_power(WX1, 1);
  CHECK(mixed.is_weight_homogeneous(w));
  // Adding D1 (weight -1) breaks homogeneity; the initial form drops it.
  WeylOp broken = mixed + weyl_power(WD1, 1);
  CHECK(!broken.is_weight_homogeneous(w));
  CHECK(initial_form(broken, w) == mixed);

  CHECK(weyl_power(WD1, 1).t_free());
  CHECK(weyl_power(WD1, 1).pure_derivative());
  CHECK(!weyl_power(WX1, 1).pure_derivative());
  CHECK(!weyl_power(WT1, 1).t_free());
  CHECK(s.total_degree() == 2);
}

TEST_CASE("euler products expand to symmetric derivative sums") {
  // s(s+1)...(s+k) equals (-1)^{k+1} sum_j C(k+1,j) x1^j x2^{k+1-j} D1^j D2^{k+1-j}
  // for every k; verified term-by-term up to k = 10.
  WeylOp s = euler_s();
  for (long k = 0; k <= 10; ++k) {
    WeylOp lhs = WeylOp::constant(Rational(1));
    for (long i = 0; i <= k; ++i)
      lhs = weyl_mul(lhs, s + WeylOp::constant(Rational(i)));

    WeylOp rhs;
    const long m = k + 1;
    for (long j = 0; j <= m; ++j) {
      ExpVec e(kWeylVars);
      e.set(WX1, static_cast<int>(j));
      e.set(WX2, static_cast<int>(m - j));
      e.set(WD1, static_cast<int>(j));
      e.set(WD2, static_cast<int>(m - j));
      Rational c = Rational(binomial(static_cast<unsigned long>(m),
                                     static_cast<unsigned long>(j)));
      if (m % 2 == 1) c = -c;
      rhs = rhs + WeylOp::monomial(e, c);
    }
    CHECK(lhs == rhs);
  }
}

TEST_CASE("euler polynomial action scales homogeneous forms") {
  // P(s) applied to a homogeneous f of degree k is the scalar P(-k).
  SplitMix64 rng(7006);
  RingCtx R = base_ring();
  WeylOp s = euler_s();
  for (int it = 0; it < 100; ++it) {
    UniPoly P;
    const int deg = static_cast<int>(rng.next() % 5);
    for (int i = 0; i <= deg; ++i) P.c.emplace_back(rng.nonzero_in_band(9));
    const long k = static_cast<long>(rng.next() % 9);
    CommPoly f = testutil::random_homogeneous(rng, R, k);

    WeylOp op;  // P(s) by Horner
    for (std::size_t i = P.c.size(); i-- > 0;)
      op = weyl_mul(op, s) + WeylOp::constant(P.c[i]);
    CHECK(weyl_act(op, f) == f.scaled(P.eval(Rational(-k))));
  }
}

TEST_CASE("weyl term orders") {
  WeylOrder ord = WeylOrder::term_order();
  SplitMix64 rng(7007);
  for (int it = 0; it < 300; ++it) {
    WeylOp a = random_weyl(rng, 1, 4, true), b = random_weyl(rng, 1, 4, true);
    const ExpVec &ea = a.terms()[0].mono, &eb = b.terms()[0].mono;
    int c = weyl_term_cmp(ord, ea, 0, eb, 0);
    CHECK(c == -weyl_term_cmp(ord, eb, 0, ea, 0));
    if (ea.total_degree() > eb.total_degree()) CHECK(c > 0);  // degree-compatible
  }

  // Component elimination ranks the target component below every other.
  WeylOrder elim = WeylOrder::component_elim(3, 1);
  ExpVec e(kWeylVars);
  e.set(WD1, 5);
  CHECK(weyl_term_cmp(elim, e, 1, ExpVec(kWeylVars), 0) < 0);
  CHECK(weyl_term_cmp(elim, e, 1, ExpVec(kWeylVars), 2) < 0);
}

TEST_CASE("left ideal membership via noncommutative bases") {
  // In D*(x1, x2): x1 D1 = D1 x1 - 1 = -1 mod the ideal, so s reduces to 2.
  auto gb = weyl_ideal_gb({weyl_power(WX1, 1), weyl_power(WX2, 1)},
                          WeylOrder::term_order());
  CHECK(weyl_certify(gb));
  CHECK(weyl_normal_form(euler_s(), gb) == WeylOp::constant(Rational(2)));

  // In D*(D1, D2): s is already in the ideal.
  auto gb2 = weyl_ideal_gb({weyl_power(WD1, 1), weyl_power(WD2, 1)},
                           WeylOrder::term_order());
  CHECK(weyl_normal_form(euler_s(), gb2).is_zero());
}

TEST_CASE("anchor b-functions, hand-derived") {
  WeightSpec w;
  const long cap = 16;
  // D*(x1, x2): b(s) = s - 2.
  CHECK(ideal_bfunction({weyl_power(WX1, 1), weyl_power(WX2, 1)}, w, cap).c ==
        uni({-2, 1}).c);
  // D*(D1, D2): b(s) = s.
  CHECK(ideal_bfunction({weyl_power(WD1, 1), weyl_power(WD2, 1)}, w, cap).c ==
        uni({0, 1}).c);
  // D*(D1^2, D2^2): b(s) = s(s+1)(s+2) = s^3 + 3 s^2 + 2 s.
  CHECK(ideal_bfunction({weyl_power(WD1, 2), weyl_power(WD2, 2)}, w, cap).c ==
        uni({0, 2, 3, 1}).c);

  CHECK_THROWS_WITH_AS(
      (void)ideal_bfunction({weyl_power(WD1, 2), weyl_power(WD2, 2)}, w, 2),
      "b-function degree cap exceeded", std::runtime_error);
}

TEST_CASE("univariate utilities") {
  UniPoly zero;
  CHECK(zero.is_zero());
  CHECK(zero.str() == "0");
  CHECK(uni({-2, 1}).str() == "s - 2");
  CHECK(uni({1, 0, 1}).str() == "s^2 + 1");
  CHECK(uni({0, 2, 3, 1}).str() == "s^3 + 3*s^2 + 2*s");
  CHECK(uni({0, -2, 0, 4}).str("t") == "4*t^3 - 2*t");
  CHECK(uni({0, 2, 3, 1}).eval(Rational(2)) == Rational(24));
  CHECK(uni({0, 2, 4}).monic().c == std::vector<Rational>{0, Rational(1, 2), 1});

  // (s)(s+1) * (s+2) = s^3 + 3 s^2 + 2 s.
  CHECK(uni_mul(uni({0, 1, 1}), uni({2, 1})).c == uni({0, 2, 3, 1}).c);
  // gcd((s)(s+1), (s+1)(s+2)) = s + 1; lcm = s(s+1)(s+2).
  CHECK(uni_gcd_monic(uni({0, 1, 1}), uni({2, 3, 1})).c == uni({1, 1}).c);
  CHECK(uni_lcm_monic(uni({0, 1, 1}), uni({2, 3, 1})).c == uni({0, 2, 3, 1}).c);

  auto q = uni_div_exact(uni({0, 2, 3, 1}), uni({2, 1}));
  REQUIRE(q.has_value());
  CHECK(q->c == uni({0, 1, 1}).c);
  CHECK(!uni_div_exact(uni({0, 2, 3, 1}), uni({1, 1, 1})).has_value());
}

TEST_CASE("integer roots and factored display") {
  auto [r1, rem1] = integer_roots(uni({0, 2, 3, 1}));
  CHECK(r1 == std::vector<std::pair<long, int>>{{-2, 1}, {-1, 1}, {0, 1}});
  CHECK(rem1.degree() == 0);
  CHECK(factored_bfunction(uni({0, 2, 3, 1})) == "(s)(s + 1)(s + 2)");

  // (s + 1)^2 * s has a double root.
  auto sq = uni_mul(uni({1, 1}), uni_mul(uni({1, 1}), uni({0, 1})));
  auto [r2, rem2] = integer_roots(sq);
  CHECK(r2 == std::vector<std::pair<long, int>>{{-1, 2}, {0, 1}});
  CHECK(factored_bfunction(sq) == "(s)(s + 1)^2");

  CHECK(factored_bfunction(uni({-3, 1})) == "(s - 3)");
  CHECK(factored_bfunction(uni({-2, 0, 1})) == "[s^2 - 2]");
  CHECK(factored_bfunction(uni_mul(uni({0, 1}), uni({-2, 0, 1}))) ==
        "(s)[s^2 - 2]");
  CHECK(factored_bfunction(uni({5})) == "1");
  CHECK(factored_bfunction(UniPoly{}) == "0");
  // Scaling does not change the display.
  CHECK(factored_bfunction(uni({0, 4, 6, 2})) == "(s)(s + 1)(s + 2)");
}

TEST_CASE("T-monomial enumeration") {
  for (long k = 0; k <= 5; ++k)
    CHECK(static_cast<long>(t_monomials(k).size()) == (k + 2) * (k + 1) / 2);
  auto m2 = t_monomials(2);
  auto tup = [](const ExpVec& e) {
    return std::vector<int>{e[0], e[1], e[2]};
  };
  REQUIRE(m2.size() == 6);
  CHECK(tup(m2[0]) == std::vector<int>{2, 0, 0});
  CHECK(tup(m2[1]) == std::vector<int>{1, 1, 0});
  CHECK(tup(m2[2]) == std::vector<int>{1, 0, 1});
  CHECK(tup(m2[3]) == std::vector<int>{0, 2, 0});
  CHECK(tup(m2[4]) == std::vector<int>{0, 1, 1});
  CHECK(tup(m2[5]) == std::vector<int>{0, 0, 2});
}

TEST_CASE("restriction system layout for the running example") {
  auto hb = hilbert_burch(ex61_ideal());
  auto sys = restriction_matrices(hb, 3);
  CHECK(sys.p == 3);
  CHECK(sys.d == 5);
  CHECK(sys.mu == 2);
  CHECK(sys.m == 3);
  CHECK(sys.n == 6);
  CHECK(sys.src.size() == 3);
  CHECK(sys.dest.size() == 6);
  REQUIRE(sys.L1m.size() == 6);
  REQUIRE(sys.L2m.size() == 6);
  REQUIRE(sys.rows.size() == 12);

  // Every matrix entry is a pure derivative operator; an entry sits at
  // (delta, gamma) exactly when T^delta = T_k * T^gamma, and then equals the
  // k-th T-coefficient of the corresponding equation.
  for (int i = 0; i < 2; ++i) {
    const auto& M = i == 0 ? sys.L1m : sys.L2m;
    for (int r = 0; r < sys.n; ++r)
      for (int c = 0; c < sys.m; ++c) {
        const WeylOp& entry = M[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        bool found = false;
        for (int k = 0; k < 3; ++k)
          if (sys.src[static_cast<std::size_t>(c)].plus(ExpVec::unit(3, k)) ==
              sys.dest[static_cast<std::size_t>(r)]) {
            CHECK(entry == sys.coeff[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]);
            found = true;
          }
        if (!found) CHECK(entry.is_zero());
        CHECK((entry.is_zero() || entry.pure_derivative()));
      }
  }

  // The T-coefficients are the derivative images of the syzygy entries.
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 3; ++k)
      CHECK(sys.coeff[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] ==
            fourier(weyl_from_poly(
                hb.phi[static_cast<std::size_t>(i)].comps[static_cast<std::size_t>(k)]
                    .mapped_to(sym_ring()))));

  // Generator rows stack the L1 block over the L2 block.
  for (int r = 0; r < sys.n; ++r)
    for (int c = 0; c < sys.m; ++c) {
      CHECK(sys.rows[static_cast<std::size_t>(r)].comps[static_cast<std::size_t>(c)] ==
            sys.L1m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
      CHECK(sys.rows[static_cast<std::size_t>(sys.n + r)].comps[static_cast<std::size_t>(c)] ==
            sys.L2m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
    }

  // Dual rows live in the base ring and mirror the sparsity pattern.
  REQUIRE(sys.dual_rows.size() == 12);
  for (std::size_t r = 0; r < sys.dual_rows.size(); ++r) {
    CHECK(sys.dual_rows[r].ncomps() == 3);
    const auto& wrow = sys.rows[r];
    for (int c = 0; c < 3; ++c) {
      const CommPoly& dual = sys.dual_rows[r].comps[static_cast<std::size_t>(c)];
      CHECK(dual.is_zero() == wrow.comps[static_cast<std::size_t>(c)].is_zero());
      if (!dual.is_zero()) CHECK(dual.ctx()->nvars() == 2);
    }
  }
}

TEST_CASE("component ideal members stay inside the module") {
  auto hb = hilbert_burch(ex61_ideal());
  for (long p = 2; p <= 3; ++p) {
    auto sys = restriction_matrices(hb, p);
    auto gb = weyl_module_gb(sys.rows, sys.m, WeylOrder::term_order());
    for (int i = 0; i < sys.m; ++i) {
      auto gens = component_ideal(sys, i);
      CHECK(!gens.empty());
      for (const auto& P : gens) {
        CHECK(P.t_free());
        WeylVector v;
        v.comps.assign(static_cast<std::size_t>(sys.m), WeylOp::zero());
        v.comps[static_cast<std::size_t>(i)] = P;
        CHECK(weyl_normal_form(v, gb).is_zero());
      }
    }
  }
}

TEST_CASE("module b-function of the running example at p = 2") {
  auto hb = hilbert_burch(ex61_ideal());
  auto sys = restriction_matrices(hb, 2);
  CHECK(sys.m == 1);
  CHECK(sys.n == 3);
  CHECK(holonomicity_check(sys));

  auto bf = module_bfunction(sys, 0 /* default cap */ + 4 * (5 + 2));
  CHECK(bf.p == 2);
  CHECK(bf.all_roots_integer);
  CHECK(bf.b.c == uni({0, 2, 3, 1}).c);
  CHECK(factored_bfunction(bf.b) == "(s)(s + 1)(s + 2)");
  CHECK(bf.roots ==
        std::vector<std::pair<long, int>>{{-2, 1}, {-1, 1}, {0, 1}});
  REQUIRE(bf.per_component.size() == 1);
  CHECK(uni_div_exact(bf.b, bf.per_component[0]).has_value());

  CHECK(theorem_b_support(bf, 5) == std::vector<long>{1, 2, 3});
}

TEST_CASE("b-function support versus the bigraded table") {
  auto hb = hilbert_burch(ex61_ideal());
  auto req = rees_ideal(hb, ReesRoute::Saturation);
  auto table = k_table(hb, req, 3);
  for (long p = 2; p <= 3; ++p) {
    auto sys = restriction_matrices(hb, p);
    auto bf = module_bfunction(sys, 4 * (5 + p));
    auto rep = verify_theorem_b(table, bf);
    CHECK(rep.p == p);
    CHECK(rep.support_match);
    CHECK(rep.product_match);
    CHECK(rep.expected_q == rep.got_q);
  }
}
