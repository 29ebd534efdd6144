#include "kumar.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <stdexcept>

namespace schubert {

namespace {

// returns (normalized form, sign)
std::pair<ivec, int> normalize_form(const ivec& form) {
  for (long long c : form) {
    if (c > 0) return {form, 1};
    if (c < 0) {
      ivec neg(form.size());
      for (size_t i = 0; i < form.size(); ++i) neg[i] = -form[i];
      return {neg, -1};
    }
  }
  throw std::invalid_argument("zero linear form");
}

Poly poly_of_form(const ivec& form) {
  Poly p;
  int n = static_cast<int>(form.size());
  for (int i = 0; i < n; ++i) {
    if (form[i] == 0) continue;
    ivec e(n, 0);
    e[i] = 1;
    p.terms[e] = static_cast<long>(form[i]);
  }
  return p;
}

void add_term(Poly& p, const ivec& expo, const mpq_class& c) {
  auto [it, inserted] = p.terms.emplace(expo, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) p.terms.erase(it);
  } else if (c == 0) {
    p.terms.erase(it);
  }
}

}  // namespace

Poly poly_const(int nvars, const mpq_class& c) {
  Poly p;
  if (c != 0) p.terms.emplace(ivec(nvars, 0), c);
  return p;
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly p = a;
  for (const auto& [e, c] : b.terms) add_term(p, e, c);
  return p;
}

Poly poly_scale(const Poly& a, const mpq_class& c) {
  Poly p;
  if (c == 0) return p;
  for (const auto& [e, k] : a.terms) p.terms.emplace(e, k * c);
  return p;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly p;
  for (const auto& [ea, ca] : a.terms) {
    for (const auto& [eb, cb] : b.terms) {
      ivec e = ea;
      for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      add_term(p, e, ca * cb);
    }
  }
  return p;
}

Poly poly_mul_linear(const Poly& a, const ivec& form) {
  return poly_mul(a, poly_of_form(form));
}

std::optional<Poly> poly_div_linear(const Poly& a, const ivec& form) {
  size_t pivot = 0;
  while (pivot < form.size() && form[pivot] == 0) ++pivot;
  if (pivot == form.size()) throw std::invalid_argument("zero linear form");
  mpq_class lead = static_cast<long>(form[pivot]);
  Poly rem = a, quot;
  // peel the highest pivot-degree slice; terminates since degree drops
  while (!rem.is_zero()) {
    auto it = std::max_element(
        rem.terms.begin(), rem.terms.end(), [&](const auto& x, const auto& y) {
          return x.first[pivot] < y.first[pivot];
        });
    if (it->first[pivot] == 0) return std::nullopt;  // nonzero remainder
    ivec e = it->first;
    e[pivot] -= 1;
    mpq_class c = it->second / lead;
    add_term(quot, e, c);
    Poly sub = poly_mul_linear(poly_const(static_cast<int>(form.size()), c),
                               form);
    for (auto& [se, sc] : sub.terms) {
      ivec shifted = se;
      for (size_t i = 0; i < shifted.size(); ++i) shifted[i] += e[i];
      add_term(rem, shifted, -sc);
    }
  }
  return quot;
}

RationalExpr expr_zero(int nvars) { return RationalExpr{nvars, Poly{}, {}}; }

RationalExpr expr_const(int nvars, const mpq_class& c) {
  return RationalExpr{nvars, poly_const(nvars, c), {}};
}

RationalExpr expr_inv_root(const AffineRoot& root) {
  auto [form, sign] = normalize_form(root);
  RationalExpr e;
  e.nvars = static_cast<int>(root.size());
  e.num = poly_const(e.nvars, sign);
  e.den[form] = 1;
  return e;
}

RationalExpr expr_reduce(RationalExpr e) {
  if (e.num.is_zero()) {
    e.den.clear();
    return e;
  }
  for (auto it = e.den.begin(); it != e.den.end();) {
    while (it->second > 0) {
      auto q = poly_div_linear(e.num, it->first);
      if (!q) break;
      e.num = *q;
      it->second -= 1;
    }
    if (it->second == 0)
      it = e.den.erase(it);
    else
      ++it;
  }
  return e;
}

RationalExpr expr_add(const RationalExpr& a, const RationalExpr& b) {
  assert(a.nvars == b.nvars || a.num.is_zero() || b.num.is_zero());
  RationalExpr out;
  out.nvars = a.num.is_zero() ? b.nvars : a.nvars;
  // least common multiple of the two denominator multisets
  out.den = a.den;
  for (const auto& [f, m] : b.den) {
    int& cur = out.den[f];
    cur = std::max(cur, m);
  }
  Poly na = a.num, nb = b.num;
  for (const auto& [f, m] : out.den) {
    auto ita = a.den.find(f);
    int ma = ita == a.den.end() ? 0 : ita->second;
    for (int k = ma; k < m; ++k) na = poly_mul_linear(na, f);
    auto itb = b.den.find(f);
    int mb = itb == b.den.end() ? 0 : itb->second;
    for (int k = mb; k < m; ++k) nb = poly_mul_linear(nb, f);
  }
  out.num = poly_add(na, nb);
  return expr_reduce(std::move(out));
}

RationalExpr expr_mul(const RationalExpr& a, const RationalExpr& b) {
  RationalExpr out;
  out.nvars = a.nvars;
  out.num = poly_mul(a.num, b.num);
  out.den = a.den;
  for (const auto& [f, m] : b.den) out.den[f] += m;
  return expr_reduce(std::move(out));
}

bool expr_equal(const RationalExpr& a, const RationalExpr& b) {
  Poly lhs = a.num, rhs = b.num;
  for (const auto& [f, m] : b.den)
    for (int k = 0; k < m; ++k) lhs = poly_mul_linear(lhs, f);
  for (const auto& [f, m] : a.den)
    for (int k = 0; k < m; ++k) rhs = poly_mul_linear(rhs, f);
  return lhs == rhs;
}

long long max_terms_cap() {
  if (const char* env = std::getenv("SCHUBERT_MAX_TERMS")) {
    long long v = std::atoll(env);
    if (v > 0) return v;
  }
  return 1LL << 26;
}

namespace {

struct Leaf {
  int sign;
  std::map<ivec, int> forms;  // normalized factor forms with multiplicity
};

RationalExpr combine_leaves(int nvars, const std::vector<Leaf>& leaves) {
  if (leaves.empty()) return expr_zero(nvars);
  std::map<ivec, int> lcm;
  for (const Leaf& t : leaves)
    for (const auto& [f, m] : t.forms) {
      int& cur = lcm[f];
      cur = std::max(cur, m);
    }
  Poly num;
  for (const Leaf& t : leaves) {
    Poly part = poly_const(nvars, t.sign);
    for (const auto& [f, m] : lcm) {
      auto it = t.forms.find(f);
      int have = it == t.forms.end() ? 0 : it->second;
      for (int k = have; k < m; ++k) part = poly_mul_linear(part, f);
    }
    num = poly_add(num, part);
  }
  return expr_reduce(RationalExpr{nvars, std::move(num), std::move(lcm)});
}

}  // namespace

RationalExpr e_v_X(const GCM& g, const CoxeterWord& w, const CoxeterWord& v) {
  if (!is_reduced(g, w))
    throw std::invalid_argument("e_v_X: w must be a reduced word");
  const std::vector<int>& letters = w.letters;
  int n = static_cast<int>(letters.size());

  // suffix elements for Bruhat feasibility pruning
  std::vector<WeylElement> suffix(n + 1, identity_element(g));
  for (int k = n - 1; k >= 0; --k)
    suffix[k] = mul(gen(g, letters[k]), suffix[k + 1]);
  std::vector<CoxeterWord> suffix_word(n + 1);
  for (int k = 0; k <= n; ++k)
    suffix_word[k].letters.assign(letters.begin() + k, letters.end());

  WeylElement target = element_of(g, v);
  WeylElement id = identity_element(g);
  long long cap = max_terms_cap();
  long long visited = 0;
  std::vector<Leaf> leaves;

  // DFS over chosen/skipped letters; u = chosen prefix, u_inv maintained
  struct Frame {
    WeylElement u;
    int sign;
    std::map<ivec, int> forms;
  };
  std::function<void(int, Frame&)> dfs = [&](int k, Frame& f) {
    if (++visited > cap)
      throw LimitError("subexpression enumeration exceeded SCHUBERT_MAX_TERMS");
    if (k == n) {
      if (f.u == target) leaves.push_back({f.sign, f.forms});
      return;
    }
    // remaining letters must still be able to reach the target
    WeylElement need = mul(WeylElement{f.u.m_inv, f.u.m}, target);
    CoxeterWord need_word;
    need_word.letters = canonical_word(g, need);
    if (!bruhat_leq(g, need_word, suffix_word[k])) return;

    ivec e(g.size, 0);
    e[letters[k]] = 1;
    AffineRoot root = schubert::apply(f.u, e);
    auto [form, fsign] = normalize_form(root);

    {  // skip letter k: factor +(u(alpha))^{-1}
      Frame nxt{f.u, f.sign * fsign, f.forms};
      nxt.forms[form] += 1;
      dfs(k + 1, nxt);
    }
    {  // choose letter k: factor -(u(alpha))^{-1}
      Frame nxt{mul(f.u, gen(g, letters[k])), -f.sign * fsign, f.forms};
      nxt.forms[form] += 1;
      dfs(k + 1, nxt);
    }
  };
  Frame root_frame{id, 1, {}};
  dfs(0, root_frame);
  return combine_leaves(g.size, leaves);
}

RationalExpr rhs_product(const GCM& g, const CoxeterWord& w,
                         const CoxeterWord& v) {
  long long bound = word_length(g, v) + word_length(g, w);
  WeylElement ve = element_of(g, v);
  RationalExpr out = expr_const(
      g.size, (word_length(g, v) % 2 == 0) ? mpq_class(1) : mpq_class(-1));
  for (const auto& [root, refl] : reflections_with_bound(g, bound)) {
    WeylElement sv = mul(element_of(g, refl), ve);
    CoxeterWord sv_word;
    sv_word.letters = canonical_word(g, sv);
    if (!bruhat_leq(g, sv_word, w)) continue;
    out = expr_mul(out, expr_inv_root(root));
  }
  return out;
}

bool smooth_at(const GCM& g, const CoxeterWord& w, const CoxeterWord& v) {
  return expr_equal(e_v_X(g, w, v), rhs_product(g, w, v));
}

std::optional<mpq_class> smoothness_ratio(const GCM& g, const CoxeterWord& w,
                                          const CoxeterWord& v) {
  RationalExpr lhs = e_v_X(g, w, v);
  RationalExpr rhs = rhs_product(g, w, v);
  Poly a = lhs.num, b = rhs.num;
  for (const auto& [f, m] : rhs.den)
    for (int k = 0; k < m; ++k) a = poly_mul_linear(a, f);
  for (const auto& [f, m] : lhs.den)
    for (int k = 0; k < m; ++k) b = poly_mul_linear(b, f);
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return mpq_class(0);
  auto it = b.terms.begin();
  auto ia = a.terms.find(it->first);
  if (ia == a.terms.end()) return std::nullopt;
  mpq_class c = ia->second / it->second;
  if (poly_add(a, poly_scale(b, -c)).is_zero()) return c;
  return std::nullopt;
}

bool telescope_check(long long n, long long l, const AffineRoot& alpha,
                     const AffineRoot& beta) {
  if (n < 1 || l < 1) throw std::invalid_argument("telescope_check: n, l >= 1");
  ivec delta = pu3_delta();
  if (alpha.size() != delta.size() || beta.size() != delta.size())
    throw std::invalid_argument("telescope_check: rank-2 roots expected");
  for (size_t i = 0; i < delta.size(); ++i)
    if (alpha[i] + beta[i] != n * delta[i])
      throw std::invalid_argument("telescope_check: alpha + beta != n delta");
  int nv = static_cast<int>(delta.size());
  RationalExpr lhs = expr_zero(nv);
  for (long long i = 0; i < l; ++i) {
    ivec a(nv), b(nv);
    for (int j = 0; j < nv; ++j) {
      a[j] = alpha[j] - n * i * delta[j];
      b[j] = beta[j] + n * i * delta[j];
    }
    lhs = expr_add(lhs, expr_mul(expr_inv_root(a), expr_inv_root(b)));
  }
  ivec tail(nv);
  for (int j = 0; j < nv; ++j) tail[j] = beta[j] + n * (l - 1) * delta[j];
  RationalExpr rhs = expr_mul(expr_const(nv, mpq_class(static_cast<long>(l))),
                              expr_mul(expr_inv_root(alpha), expr_inv_root(tail)));
  return expr_equal(lhs, rhs);
}

}  // namespace schubert
