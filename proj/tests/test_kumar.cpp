#include <cstdlib>
#include <random>
#include <vector>

#include "doctest.h"
#include "kumar.hpp"

using namespace schubert;

namespace {

// raw subexpression sum: all 2^n subsets, no pruning, no cap; same leaf
// formula as the engine but built only from the expr primitives
RationalExpr e_v_X_bruteforce(const GCM& g, const CoxeterWord& w,
                              const CoxeterWord& v) {
  const std::vector<int>& letters = w.letters;
  int n = static_cast<int>(letters.size());
  WeylElement target = element_of(g, v);
  RationalExpr total = expr_zero(g.size);
  for (long long mask = 0; mask < (1LL << n); ++mask) {
    WeylElement u = identity_element(g);
    RationalExpr term = expr_const(g.size, 1);
    int sign = 1;
    for (int k = 0; k < n; ++k) {
      ivec e(g.size, 0);
      e[letters[k]] = 1;
      AffineRoot root = schubert::apply(u, e);
      term = expr_mul(term, expr_inv_root(root));
      // expr_inv_root normalizes the sign into the numerator already; the
      // subset sign is the count of chosen letters
      if (mask & (1LL << k)) {
        sign = -sign;
        u = mul(u, gen(g, letters[k]));
      }
    }
    if (u == target)
      total = expr_add(total, expr_mul(expr_const(g.size, sign), term));
  }
  return total;
}

Poly random_poly(std::mt19937& rng, int nvars, int nterms) {
  std::uniform_int_distribution<int> expo(0, 2), coef(-3, 3);
  Poly p;
  for (int t = 0; t < nterms; ++t) {
    ivec e(nvars);
    for (int i = 0; i < nvars; ++i) e[i] = expo(rng);
    long c = coef(rng);
    if (c == 0) continue;
    Poly m;
    m.terms[e] = mpq_class(c);
    p = poly_add(p, m);
  }
  return p;
}

RationalExpr random_expr(std::mt19937& rng, int nvars) {
  std::uniform_int_distribution<int> pick(0, 3);
  RationalExpr e;
  e.nvars = nvars;
  e.num = random_poly(rng, nvars, 3);
  e.den.clear();
  std::vector<ivec> forms = {{1, 0}, {0, 1}, {1, 2}, {1, 4}};
  for (int k = 0; k < 2; ++k) {
    int i = pick(rng);
    if (i < static_cast<int>(forms.size())) e.den[forms[i]] += 1;
  }
  return expr_reduce(e);
}

}  // namespace

TEST_SUITE("kumar") {

TEST_CASE("polynomial primitives") {
  Poly x;  // a0
  x.terms[{1, 0}] = 1;
  Poly y;  // a1
  y.terms[{0, 1}] = 1;
  Poly s = poly_add(x, y);
  CHECK(s.terms.size() == 2);
  CHECK(poly_add(s, poly_scale(s, -1)).is_zero());

  Poly p = poly_mul(s, s);  // (x+y)^2
  CHECK(p.terms.at(ivec{2, 0}) == 1);
  CHECK(p.terms.at(ivec{1, 1}) == 2);
  CHECK(p.terms.at(ivec{0, 2}) == 1);

  // multiply and divide by a linear form round trips
  ivec form{1, 2};
  Poly q = poly_mul_linear(p, form);
  auto back = poly_div_linear(q, form);
  REQUIRE(back.has_value());
  CHECK(*back == p);

  // x^2 is not divisible by x + 2y
  Poly x2 = poly_mul(x, x);
  CHECK_FALSE(poly_div_linear(x2, form).has_value());
  CHECK(poly_div_linear(x2, ivec{1, 0}).has_value());
}

TEST_CASE("expression algebra, randomized") {
  std::mt19937 rng(20260814);
  for (int trial = 0; trial < 40; ++trial) {
    RationalExpr a = random_expr(rng, 2);
    RationalExpr b = random_expr(rng, 2);
    RationalExpr c = random_expr(rng, 2);
    CHECK(expr_equal(expr_add(a, b), expr_add(b, a)));
    CHECK(expr_equal(expr_mul(a, b), expr_mul(b, a)));
    CHECK(expr_equal(expr_add(expr_add(a, b), c), expr_add(a, expr_add(b, c))));
    CHECK(expr_equal(expr_mul(a, expr_add(b, c)),
                     expr_add(expr_mul(a, b), expr_mul(a, c))));
    CHECK(expr_equal(expr_reduce(a), a));
    CHECK(expr_equal(expr_add(a, expr_zero(2)), a));
    CHECK(expr_equal(expr_mul(a, expr_const(2, 1)), a));
  }
  // 1/(-root) = -1/root
  CHECK(expr_equal(expr_inv_root(ivec{-1, -2}),
                   expr_mul(expr_const(2, -1), expr_inv_root(ivec{1, 2}))));
}

TEST_CASE("subexpression sum against the unpruned oracle") {
  GCM g = pu3_gcm();
  for (int l = 1; l <= 3; ++l) {
    for (char ab : {'A', 'B'}) {
      auto [w, v] = case_words(ab, l);
      CHECK(expr_equal(e_v_X(g, w, v), e_v_X_bruteforce(g, w, v)));
    }
  }
  // degenerate choices of v
  CoxeterWord w = s_range(1, 5), e;
  CHECK(expr_equal(e_v_X(g, w, e), e_v_X_bruteforce(g, w, e)));
  CHECK(expr_equal(e_v_X(g, w, w), e_v_X_bruteforce(g, w, w)));
  CoxeterWord s1;
  s1.letters = {1};
  CHECK(expr_equal(e_v_X(g, w, s1), e_v_X_bruteforce(g, w, s1)));
}

TEST_CASE("smoothness at the tower levels") {
  GCM g = pu3_gcm();
  for (int l = 1; l <= 4; ++l) {
    auto [wa, va] = case_words('A', l);
    CHECK_FALSE(smooth_at(g, wa, va));
    auto ra = smoothness_ratio(g, wa, va);
    REQUIRE(ra.has_value());
    CHECK(*ra == mpq_class(4 * l));

    auto [wb, vb] = case_words('B', l);
    CHECK(smooth_at(g, wb, vb) == (l == 1));
    auto rb = smoothness_ratio(g, wb, vb);
    REQUIRE(rb.has_value());
    CHECK(*rb == mpq_class(l));
  }
}

TEST_CASE("point evaluations are smooth") {
  GCM g = pu3_gcm();
  for (const CoxeterWord& v : {s_range(1, 1), s_range(1, 3), s_range(0, 2)}) {
    CHECK(smooth_at(g, v, v));
    auto r = smoothness_ratio(g, v, v);
    REQUIRE(r.has_value());
    CHECK(*r == 1);
  }
}

TEST_CASE("telescoping sums") {
  // alpha + beta = n delta is required; these are the tower configurations
  ivec a1{1, 1}, b1{0, 1};  // n = 1: (delta - a_1) + a_1
  ivec a2{1, 4}, b2{1, 0};  // n = 2: (2 delta - a_0) + a_0
  for (long long l = 1; l <= 10; ++l) {
    CHECK(telescope_check(1, l, a1, b1));
    CHECK(telescope_check(2, l, a2, b2));
  }
  CHECK_THROWS_AS(telescope_check(1, 1, ivec{1, 0}, ivec{1, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(telescope_check(0, 1, a1, b1), std::invalid_argument);
  CHECK_THROWS_AS(telescope_check(1, 0, a1, b1), std::invalid_argument);
}

TEST_CASE("enumeration cap") {
  GCM g = pu3_gcm();
  CHECK(max_terms_cap() == (1LL << 26));
  setenv("SCHUBERT_MAX_TERMS", "10", 1);
  CHECK(max_terms_cap() == 10);
  auto [w, v] = case_words('A', 2);
  CHECK_THROWS_AS(e_v_X(g, w, v), LimitError);
  unsetenv("SCHUBERT_MAX_TERMS");
  CHECK(max_terms_cap() == (1LL << 26));
}

}  // TEST_SUITE
