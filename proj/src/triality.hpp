#pragma once

#include <map>
#include <string>
#include <vector>

#include "rootsys.hpp"

namespace schubert {

// element a + b*zeta of Q(zeta_3), zeta^2 = -1 - zeta
struct Cyclo3 {
  mpq_class a, b;

  Cyclo3() : a(0), b(0) {}
  Cyclo3(mpq_class a_, mpq_class b_) : a(std::move(a_)), b(std::move(b_)) {}
  explicit Cyclo3(long long n) : a(static_cast<long>(n)), b(0) {}

  bool is_zero() const { return a == 0 && b == 0; }
  bool operator==(const Cyclo3& o) const { return a == o.a && b == o.b; }
  bool operator!=(const Cyclo3& o) const { return !(*this == o); }
  Cyclo3 operator+(const Cyclo3& o) const { return {a + o.a, b + o.b}; }
  Cyclo3 operator-(const Cyclo3& o) const { return {a - o.a, b - o.b}; }
  Cyclo3 operator-() const { return {-a, -b}; }
  Cyclo3 operator*(const Cyclo3& o) const {
    return {a * o.a - b * o.b, a * o.b + b * o.a - b * o.b};
  }
  Cyclo3 inverse() const;             // errors on zero
  static Cyclo3 zeta_pow(long long k);  // zeta^k, any integer k
};

// finitely supported map u-exponent -> coefficient
struct LaurentPoly {
  std::map<int, Cyclo3> c;

  bool is_zero() const { return c.empty(); }
  bool operator==(const LaurentPoly& o) const { return c == o.c; }
  long long valuation() const;  // errors on zero
  Cyclo3 coeff(int e) const;
};

LaurentPoly lp_const(const Cyclo3& v);
LaurentPoly lp_monomial(int exp, const Cyclo3& v);
LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly lp_neg(const LaurentPoly& a);
LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly lp_scale(const LaurentPoly& a, const Cyclo3& v);

using LaurentMatrix = std::vector<std::vector<LaurentPoly>>;

LaurentMatrix lm_zero(int n);
LaurentMatrix lm_identity(int n);
LaurentMatrix lm_add(const LaurentMatrix& a, const LaurentMatrix& b);
LaurentMatrix lm_mul(const LaurentMatrix& a, const LaurentMatrix& b);
LaurentMatrix lm_scale(const LaurentMatrix& a, const LaurentPoly& s);
LaurentMatrix lm_transpose(const LaurentMatrix& a);
bool lm_equal(const LaurentMatrix& a, const LaurentMatrix& b);

// A J A^t J = id with J the antidiagonal of ones
bool orthogonality_check(const LaurentMatrix& a);
// X^t J + J X = 0
bool lie_algebra_check(const LaurentMatrix& x);

// D4 roots: simple-root coordinates -> coordinates in the epsilon basis
ivec eps_coords_d4(const ivec& root);

// constant 8x8 matrix E_gamma of the so_8 root space, Chevalley conventions
// E_{e_i - e_j} = e_ij - e_{9-j,9-i}, E_{e_i + e_j} = e_{i,9-j} - e_{j,9-i}
LaurentMatrix root_vector(const ivec& gamma);

struct NilpotentVector {
  std::map<ivec, Cyclo3> x;  // root (simple coords) -> u^{-1} coefficient
  std::vector<Cyclo3> cartan = std::vector<Cyclo3>(4);  // coroot coordinates

  bool operator==(const NilpotentVector& o) const {
    return x == o.x && cartan == o.cartan;
  }
};

NilpotentVector build_v_max(const Cyclo3& x);

// x_{sigma gamma} = zeta^{-1} x_gamma for all gamma (forces x = 0 on fixed
// roots), and the Cartan line lies in the zeta^{-1} eigenspace
bool sigma_fixed(const NilpotentVector& v, const std::vector<int>& node_perm);

// free size-3 root orbits plus the 3-cycle count of the node permutation
int sigma_fixed_dimension(const std::vector<int>& node_perm);
int sigma_fixed_dimension();  // for the order-3 automorphism: 7

LaurentMatrix matrix_of(const NilpotentVector& v);
// finite exponential sum; errors when the matrix is not nilpotent
LaurentMatrix exp_matrix(const NilpotentVector& v);
LaurentMatrix exp_of_matrix(const LaurentMatrix& m);

// a_1 <= ... <= a_n with a_1+...+a_i = min valuation over i x i minors
std::vector<long long> smith_valuations(const LaurentMatrix& m);
std::vector<long long> coset_cocharacter(const LaurentMatrix& m);

// <2 rho, mu> in the D4 system; the distinguished coweight is
// 2(a_1 + a_3 + a_4)^vee + 3 a_2^vee
long long schubert_dimension_check(const ivec& coroot_coords);
long long schubert_dimension_check();

// true iff the u^{-1} coefficients of the two exponentials differ
bool exp_injectivity_probe(const NilpotentVector& v1, const NilpotentVector& v2);

}  // namespace schubert
