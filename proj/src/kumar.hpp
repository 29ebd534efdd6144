#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coxeter.hpp"
#include "mult.hpp"

namespace schubert {

// sparse polynomial in the affine simple roots, exponent vector -> coefficient
struct Poly {
  std::map<ivec, mpq_class> terms;

  bool is_zero() const { return terms.empty(); }
  bool operator==(const Poly& o) const { return terms == o.terms; }
};

Poly poly_const(int nvars, const mpq_class& c);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, const mpq_class& c);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_mul_linear(const Poly& a, const ivec& form);
// exact division by a linear form; nullopt when not divisible
std::optional<Poly> poly_div_linear(const Poly& a, const ivec& form);

// numerator over a multiset of normalized linear forms (first nonzero
// coefficient positive); kept reduced
struct RationalExpr {
  int nvars = 0;
  Poly num;
  std::map<ivec, int> den;
};

RationalExpr expr_zero(int nvars);
RationalExpr expr_const(int nvars, const mpq_class& c);
// 1 / root, sign normalized into the numerator
RationalExpr expr_inv_root(const AffineRoot& root);
RationalExpr expr_add(const RationalExpr& a, const RationalExpr& b);
RationalExpr expr_mul(const RationalExpr& a, const RationalExpr& b);
RationalExpr expr_reduce(RationalExpr e);
bool expr_equal(const RationalExpr& a, const RationalExpr& b);

// subexpression sum over choices multiplying to v along the fixed reduced
// word w; factor at position k is the inverse of the chosen-prefix image of
// the k-th letter's simple root. Bruhat pruning on the remaining suffix.
RationalExpr e_v_X(const GCM& g, const CoxeterWord& w, const CoxeterWord& v);

// (-1)^{l(v)} * product of 1/alpha over positive real alpha with s_alpha v <= w
RationalExpr rhs_product(const GCM& g, const CoxeterWord& w,
                         const CoxeterWord& v);

bool smooth_at(const GCM& g, const CoxeterWord& w, const CoxeterWord& v);

// constant c with e_v_X = c * rhs_product, when the quotient is constant
std::optional<mpq_class> smoothness_ratio(const GCM& g, const CoxeterWord& w,
                                          const CoxeterWord& v);

// sum_{i=0}^{l-1} 1/((alpha - n i delta)(beta + n i delta))
//   = l / (alpha (beta + n (l-1) delta)),   delta = alpha_0 + 2 alpha_1
bool telescope_check(long long n, long long l, const AffineRoot& alpha,
                     const AffineRoot& beta);

// enumeration cap, from SCHUBERT_MAX_TERMS (default 1 << 26)
long long max_terms_cap();

}  // namespace schubert
