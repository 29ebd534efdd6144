#include "triality.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <utility>

#include "fold.hpp"

namespace schubert {

namespace {

int popcount8(int m) { return __builtin_popcount(static_cast<unsigned>(m)); }

ivec apply_node_perm(const std::vector<int>& perm, const ivec& root) {
  ivec out(root.size(), 0);
  for (size_t i = 0; i < root.size(); ++i) out[perm[i]] = root[i];
  return out;
}

}  // namespace

Cyclo3 Cyclo3::inverse() const {
  mpq_class n = a * a - a * b + b * b;
  if (n == 0) throw std::invalid_argument("Cyclo3: division by zero");
  return {(a - b) / n, -b / n};
}

Cyclo3 Cyclo3::zeta_pow(long long k) {
  switch (((k % 3) + 3) % 3) {
    case 0: return Cyclo3(1);
    case 1: return {0, 1};
    default: return {-1, -1};
  }
}

long long LaurentPoly::valuation() const {
  if (c.empty()) throw std::invalid_argument("valuation of zero");
  return c.begin()->first;
}

Cyclo3 LaurentPoly::coeff(int e) const {
  auto it = c.find(e);
  return it == c.end() ? Cyclo3() : it->second;
}

LaurentPoly lp_const(const Cyclo3& v) { return lp_monomial(0, v); }

LaurentPoly lp_monomial(int exp, const Cyclo3& v) {
  LaurentPoly p;
  if (!v.is_zero()) p.c[exp] = v;
  return p;
}

LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out = a;
  for (const auto& [e, v] : b.c) {
    Cyclo3 s = out.coeff(e) + v;
    if (s.is_zero())
      out.c.erase(e);
    else
      out.c[e] = s;
  }
  return out;
}

LaurentPoly lp_neg(const LaurentPoly& a) {
  LaurentPoly out;
  for (const auto& [e, v] : a.c) out.c[e] = -v;
  return out;
}

LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, va] : a.c)
    for (const auto& [eb, vb] : b.c) {
      Cyclo3 s = out.coeff(ea + eb) + va * vb;
      if (s.is_zero())
        out.c.erase(ea + eb);
      else
        out.c[ea + eb] = s;
    }
  return out;
}

LaurentPoly lp_scale(const LaurentPoly& a, const Cyclo3& v) {
  return lp_mul(a, lp_const(v));
}

LaurentMatrix lm_zero(int n) {
  return LaurentMatrix(n, std::vector<LaurentPoly>(n));
}

LaurentMatrix lm_identity(int n) {
  LaurentMatrix m = lm_zero(n);
  for (int i = 0; i < n; ++i) m[i][i] = lp_const(Cyclo3(1));
  return m;
}

LaurentMatrix lm_add(const LaurentMatrix& a, const LaurentMatrix& b) {
  assert(a.size() == b.size());
  LaurentMatrix out = a;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a.size(); ++j) out[i][j] = lp_add(a[i][j], b[i][j]);
  return out;
}

LaurentMatrix lm_mul(const LaurentMatrix& a, const LaurentMatrix& b) {
  size_t n = a.size();
  assert(b.size() == n);
  LaurentMatrix out = lm_zero(static_cast<int>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (size_t j = 0; j < n; ++j)
        out[i][j] = lp_add(out[i][j], lp_mul(a[i][k], b[k][j]));
    }
  return out;
}

LaurentMatrix lm_scale(const LaurentMatrix& a, const LaurentPoly& s) {
  LaurentMatrix out = a;
  for (auto& row : out)
    for (auto& e : row) e = lp_mul(e, s);
  return out;
}

LaurentMatrix lm_transpose(const LaurentMatrix& a) {
  size_t n = a.size();
  LaurentMatrix out = lm_zero(static_cast<int>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) out[j][i] = a[i][j];
  return out;
}

bool lm_equal(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

static LaurentMatrix antidiag_j() {
  LaurentMatrix j = lm_zero(8);
  for (int i = 0; i < 8; ++i) j[i][7 - i] = lp_const(Cyclo3(1));
  return j;
}

bool orthogonality_check(const LaurentMatrix& a) {
  LaurentMatrix j = antidiag_j();
  LaurentMatrix p = lm_mul(lm_mul(lm_mul(a, j), lm_transpose(a)), j);
  return lm_equal(p, lm_identity(8));
}

bool lie_algebra_check(const LaurentMatrix& x) {
  LaurentMatrix j = antidiag_j();
  LaurentMatrix s = lm_add(lm_mul(lm_transpose(x), j), lm_mul(j, x));
  return lm_equal(s, lm_zero(8));
}

ivec eps_coords_d4(const ivec& root) {
  assert(root.size() == 4);
  // alpha_1 = e1 - e2, alpha_2 = e2 - e3, alpha_3 = e3 - e4, alpha_4 = e3 + e4
  static const int col[4][4] = {
      {1, -1, 0, 0}, {0, 1, -1, 0}, {0, 0, 1, -1}, {0, 0, 1, 1}};
  ivec eps(4, 0);
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) eps[i] += root[k] * col[k][i];
  return eps;
}

LaurentMatrix root_vector(const ivec& gamma) {
  ivec eps = eps_coords_d4(gamma);
  std::vector<int> pos;
  for (int i = 0; i < 4; ++i)
    if (eps[i] != 0) pos.push_back(i);
  if (pos.size() != 2 || std::abs(eps[pos[0]]) != 1 || std::abs(eps[pos[1]]) != 1)
    throw std::invalid_argument("root_vector: not a D4 root");
  int i = pos[0], j = pos[1];  // i < j, 0-based
  LaurentMatrix m = lm_zero(8);
  LaurentPoly one = lp_const(Cyclo3(1));
  LaurentPoly neg = lp_const(Cyclo3(-1));
  if (eps[i] == 1 && eps[j] == -1) {  // e_i - e_j -> e_ij - e_{9-j,9-i}
    m[i][j] = one;
    m[7 - j][7 - i] = neg;
  } else if (eps[i] == -1 && eps[j] == 1) {
    m[j][i] = one;
    m[7 - i][7 - j] = neg;
  } else if (eps[i] == 1 && eps[j] == 1) {  // e_i + e_j -> e_{i,9-j} - e_{j,9-i}
    m[i][7 - j] = one;
    m[j][7 - i] = neg;
  } else {
    m[7 - j][i] = one;
    m[7 - i][j] = neg;
  }
  return m;
}

NilpotentVector build_v_max(const Cyclo3& x) {
  NilpotentVector v;
  if (x.is_zero()) return v;
  v.x[{1, 1, 1, 0}] = x;
  v.x[{0, 1, 1, 1}] = Cyclo3::zeta_pow(-1) * x;
  v.x[{1, 1, 0, 1}] = Cyclo3::zeta_pow(-2) * x;
  return v;
}

bool sigma_fixed(const NilpotentVector& v, const std::vector<int>& node_perm) {
  RootSystem rs = build('D', 4);
  std::set<ivec> root_set;
  for (const ivec& r : all_roots(rs)) root_set.insert(r);
  for (const auto& [gamma, c] : v.x) {
    (void)c;
    if (!root_set.count(gamma))
      throw std::invalid_argument("sigma_fixed: support is not a set of roots");
  }
  Cyclo3 zinv = Cyclo3::zeta_pow(-1);
  auto coeff = [&](const ivec& g) {
    auto it = v.x.find(g);
    return it == v.x.end() ? Cyclo3() : it->second;
  };
  for (const ivec& gamma : root_set) {
    if (coeff(apply_node_perm(node_perm, gamma)) != zinv * coeff(gamma))
      return false;
  }
  for (size_t i = 0; i < 4; ++i)
    if (v.cartan[node_perm[i]] != zinv * v.cartan[i]) return false;
  return true;
}

int sigma_fixed_dimension(const std::vector<int>& node_perm) {
  RootSystem rs = build('D', 4);
  std::set<ivec> seen;
  int orbits3 = 0;
  for (const ivec& g : all_roots(rs)) {
    if (seen.count(g)) continue;
    std::vector<ivec> orbit{g};
    ivec cur = apply_node_perm(node_perm, g);
    while (cur != g) {
      orbit.push_back(cur);
      cur = apply_node_perm(node_perm, cur);
    }
    for (const ivec& o : orbit) seen.insert(o);
    if (orbit.size() == 3) ++orbits3;
  }
  // each node 3-cycle contributes one zeta^{-1} eigenline of the Cartan
  std::vector<bool> done(4, false);
  int cycles3 = 0;
  for (int i = 0; i < 4; ++i) {
    if (done[i]) continue;
    int len = 0, cur = i;
    do {
      done[cur] = true;
      cur = node_perm[cur];
      ++len;
    } while (cur != i);
    if (len == 3) ++cycles3;
  }
  return orbits3 + cycles3;
}

int sigma_fixed_dimension() {
  return sigma_fixed_dimension(triality_permutation(build('D', 4)));
}

LaurentMatrix matrix_of(const NilpotentVector& v) {
  LaurentMatrix m = lm_zero(8);
  for (const auto& [gamma, c] : v.x)
    m = lm_add(m, lm_scale(root_vector(gamma), lp_const(c)));
  for (int i = 0; i < 4; ++i) {
    if (v.cartan[i].is_zero()) continue;
    ivec e(4, 0);
    e[i] = 1;
    ivec t = eps_coords_d4(e);
    for (int k = 0; k < 4; ++k) {
      m[k][k] = lp_add(m[k][k], lp_const(Cyclo3(mpq_class(static_cast<long>(t[k])), 0) * v.cartan[i]));
      m[7 - k][7 - k] =
          lp_add(m[7 - k][7 - k], lp_const(Cyclo3(mpq_class(static_cast<long>(-t[k])), 0) * v.cartan[i]));
    }
  }
  return lm_scale(m, lp_monomial(-1, Cyclo3(1)));
}

LaurentMatrix exp_of_matrix(const LaurentMatrix& m) {
  int n = static_cast<int>(m.size());
  LaurentMatrix out = lm_identity(n);
  LaurentMatrix power = lm_identity(n);
  mpz_class fact = 1;
  for (int k = 1; k <= n; ++k) {
    power = lm_mul(power, m);
    if (lm_equal(power, lm_zero(n))) return out;
    if (k == n) throw std::invalid_argument("exp: matrix is not nilpotent");
    fact *= k;
    out = lm_add(out, lm_scale(power, lp_const(Cyclo3(mpq_class(1) / fact, 0))));
  }
  return out;
}

LaurentMatrix exp_matrix(const NilpotentVector& v) {
  return exp_of_matrix(matrix_of(v));
}

std::vector<long long> smith_valuations(const LaurentMatrix& m) {
  int n = static_cast<int>(m.size());
  if (n == 0 || n > 12) throw std::invalid_argument("smith: bad matrix size");
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("smith: matrix is not square");
  std::map<std::pair<int, int>, LaurentPoly> memo;
  std::function<const LaurentPoly&(int, int)> det = [&](int rmask,
                                                        int cmask) -> const LaurentPoly& {
    auto it = memo.find({rmask, cmask});
    if (it != memo.end()) return it->second;
    LaurentPoly d;
    if (rmask == 0) {
      d = lp_const(Cyclo3(1));
    } else {
      int r = 31 - __builtin_clz(static_cast<unsigned>(rmask));  // expand last row
      int sign = (popcount8(rmask) - 1) % 2 == 0 ? 1 : -1;
      int colpos = 0;
      for (int c = 0; c < n; ++c) {
        if (!(cmask & (1 << c))) continue;
        if (!m[r][c].is_zero()) {
          LaurentPoly t = lp_mul(m[r][c], det(rmask & ~(1 << r), cmask & ~(1 << c)));
          int s = sign * ((colpos % 2 == 0) ? 1 : -1);
          d = lp_add(d, s == 1 ? t : lp_neg(t));
        }
        ++colpos;
      }
    }
    return memo.emplace(std::make_pair(rmask, cmask), std::move(d)).first->second;
  };
  std::vector<std::vector<int>> masks_by_size(n + 1);
  for (int mask = 0; mask < (1 << n); ++mask)
    masks_by_size[popcount8(mask)].push_back(mask);
  std::vector<long long> out;
  long long prev_sum = 0;
  for (int k = 1; k <= n; ++k) {
    bool found = false;
    long long best = 0;
    for (int rmask : masks_by_size[k])
      for (int cmask : masks_by_size[k]) {
        const LaurentPoly& d = det(rmask, cmask);
        if (d.is_zero()) continue;
        long long val = d.valuation();
        if (!found || val < best) {
          best = val;
          found = true;
        }
      }
    if (!found) throw std::invalid_argument("smith: singular matrix");
    out.push_back(best - prev_sum);
    prev_sum = best;
  }
  for (size_t i = 1; i < out.size(); ++i) assert(out[i - 1] <= out[i]);
  return out;
}

std::vector<long long> coset_cocharacter(const LaurentMatrix& m) {
  return smith_valuations(m);
}

long long schubert_dimension_check(const ivec& coroot_coords) {
  RootSystem rs = build('G', 2);
  assert(coroot_coords.size() == 2);
  Weight tr = rs.weight_of_root(rs.two_rho);
  long long out = 0;
  for (size_t i = 0; i < 2; ++i) out += coroot_coords[i] * tr.coords[i];
  return out;
}

long long schubert_dimension_check() { return schubert_dimension_check({2, 1}); }

bool exp_injectivity_probe(const NilpotentVector& v1, const NilpotentVector& v2) {
  LaurentMatrix e1 = exp_matrix(v1), e2 = exp_matrix(v2);
  bool distinguished = false;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      if (e1[i][j].coeff(-1) != e2[i][j].coeff(-1)) distinguished = true;
  // the u^{-1} layer of exp(v) is exactly v
  bool same_vector = lm_equal(matrix_of(v1), matrix_of(v2));
  if (distinguished == same_vector)
    throw std::runtime_error("exp_injectivity_probe: inconsistent extraction");
  return distinguished;
}

}  // namespace schubert
