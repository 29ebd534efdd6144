#include "coxeter.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace schubert {

namespace {

bool is_negative(const ivec& v) {
  bool nonpos = true, zero = true;
  for (long long c : v) {
    nonpos &= (c <= 0);
    zero &= (c == 0);
  }
  return nonpos && !zero;
}

imat mat_mul(const imat& a, const imat& b) {
  size_t n = a.size();
  imat c(n, ivec(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      long long aik = a[i][k];
      if (aik == 0) continue;
      for (size_t j = 0; j < n; ++j) c[i][j] += aik * b[k][j];
    }
  return c;
}

imat identity_mat(int n) {
  imat m(n, ivec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

}  // namespace

GCM make_gcm(const imat& a) {
  int n = static_cast<int>(a.size());
  if (n == 0) throw std::invalid_argument("gcm: empty matrix");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(a[i].size()) != n)
      throw std::invalid_argument("gcm: not square");
    if (a[i][i] != 2) throw std::invalid_argument("gcm: diagonal must be 2");
    for (int j = 0; j < n; ++j) {
      if (i != j && a[i][j] > 0)
        throw std::invalid_argument("gcm: positive off-diagonal entry");
      if ((a[i][j] == 0) != (a[j][i] == 0))
        throw std::invalid_argument("gcm: zero pattern not symmetric");
    }
  }
  return GCM{n, a};
}

GCM pu3_gcm() { return make_gcm({{2, -4}, {-1, 2}}); }

ivec pu3_delta() { return {1, 2}; }

AffineRoot reflect(const GCM& g, int i, const AffineRoot& beta) {
  if (i < 0 || i >= g.size) throw std::invalid_argument("reflect: bad index");
  long long p = 0;
  for (int j = 0; j < g.size; ++j) p += g.a[j][i] * beta[j];
  AffineRoot r = beta;
  r[i] -= p;
  return r;
}

WeylElement identity_element(const GCM& g) {
  imat id = identity_mat(g.size);
  return WeylElement{id, id};
}

WeylElement gen(const GCM& g, int i) {
  imat m = identity_mat(g.size);
  for (int j = 0; j < g.size; ++j) m[i][j] -= g.a[j][i];
  return WeylElement{m, m};
}

WeylElement mul(const WeylElement& x, const WeylElement& y) {
  return WeylElement{mat_mul(x.m, y.m), mat_mul(y.m_inv, x.m_inv)};
}

AffineRoot apply(const WeylElement& w, const AffineRoot& beta) {
  size_t n = w.m.size();
  AffineRoot out(n, 0);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) out[i] += w.m[i][j] * beta[j];
  return out;
}

AffineRoot apply_inv(const WeylElement& w, const AffineRoot& beta) {
  size_t n = w.m_inv.size();
  AffineRoot out(n, 0);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) out[i] += w.m_inv[i][j] * beta[j];
  return out;
}

WeylElement element_of(const GCM& g, const CoxeterWord& w) {
  WeylElement e = identity_element(g);
  for (int i : w.letters) e = mul(e, gen(g, i));
  return e;
}

std::vector<int> canonical_word(const GCM& g, const WeylElement& w) {
  std::vector<int> out;
  WeylElement cur = w;
  WeylElement id = identity_element(g);
  while (cur != id) {
    int pick = -1;
    for (int i = 0; i < g.size; ++i) {
      ivec e(g.size, 0);
      e[i] = 1;
      if (is_negative(apply_inv(cur, e))) {  // left descent: s_i cur < cur
        pick = i;
        break;
      }
    }
    assert(pick >= 0);
    out.push_back(pick);
    cur = mul(gen(g, pick), cur);
  }
  return out;
}

std::vector<int> canonical_word(const GCM& g, const CoxeterWord& w) {
  return canonical_word(g, element_of(g, w));
}

long long word_length(const GCM& g, const CoxeterWord& w) {
  return static_cast<long long>(canonical_word(g, w).size());
}

bool is_reduced(const GCM& g, const CoxeterWord& w) {
  return word_length(g, w) == static_cast<long long>(w.letters.size());
}

AffineRoot act(const GCM& g, const CoxeterWord& w, const AffineRoot& beta) {
  return schubert::apply(element_of(g, w), beta);
}

bool bruhat_leq(const GCM& g, const CoxeterWord& v, const CoxeterWord& w) {
  std::vector<int> wred = canonical_word(g, w);
  WeylElement u = element_of(g, v);
  WeylElement id = identity_element(g);
  // scan from the right, taking a letter whenever it is a right descent of u
  for (auto it = wred.rbegin(); it != wred.rend(); ++it) {
    if (u == id) return true;
    ivec e(g.size, 0);
    e[*it] = 1;
    if (is_negative(schubert::apply(u, e))) u = mul(u, gen(g, *it));
  }
  return u == id;
}

CoxeterWord s_range(int i, int j) {
  CoxeterWord w;
  for (int k = i; k <= j; ++k) w.letters.push_back(((k % 2) + 2) % 2);
  return w;
}

std::pair<CoxeterWord, CoxeterWord> case_words(char case_ab, int l) {
  if (l < 1) throw std::invalid_argument("case_words: l must be >= 1");
  if (case_ab == 'A') return {s_range(1, 2 * l + 1), s_range(1, 2 * l - 1)};
  if (case_ab == 'B') return {s_range(0, 2 * l), s_range(0, 2 * l - 2)};
  throw std::invalid_argument("case_words: case must be A or B");
}

std::vector<std::pair<AffineRoot, CoxeterWord>> reflections_with_bound(
    const GCM& g, long long L) {
  if (L < 0) throw std::invalid_argument("reflections_with_bound: L < 0");
  // every reflection of length 2m+1 is w s_i w^{-1} with l(w) = m, so a BFS
  // of elements up to length (L-1)/2 is exhaustive
  long long half = (L - 1) / 2;
  std::map<imat, std::pair<WeylElement, std::vector<int>>> layer;
  WeylElement id = identity_element(g);
  layer.emplace(id.m, std::make_pair(id, std::vector<int>{}));
  std::map<AffineRoot, std::pair<long long, CoxeterWord>> best;
  std::deque<imat> queue{id.m};
  std::set<imat> seen{id.m};
  while (!queue.empty()) {
    imat key = queue.front();
    queue.pop_front();
    auto [w, word] = layer.at(key);
    for (int i = 0; i < g.size; ++i) {
      ivec e(g.size, 0);
      e[i] = 1;
      AffineRoot root = schubert::apply(w, e);
      bool flip = is_negative(root);
      if (flip)
        for (long long& c : root) c = -c;
      CoxeterWord refl;
      refl.letters = word;
      refl.letters.push_back(i);
      refl.letters.insert(refl.letters.end(), word.rbegin(), word.rend());
      long long len = word_length(g, refl);
      if (len <= L) {
        auto it = best.find(root);
        if (it == best.end() || len < it->second.first)
          best[root] = {len, refl};
      }
      if (static_cast<long long>(word.size()) < half && !flip) {
        // extend only by ascents so stored words stay reduced
        WeylElement nxt = mul(w, gen(g, i));
        if (seen.insert(nxt.m).second) {
          auto nw = word;
          nw.push_back(i);
          layer.emplace(nxt.m, std::make_pair(nxt, nw));
          queue.push_back(nxt.m);
        }
      }
    }
  }
  std::vector<std::pair<AffineRoot, CoxeterWord>> out(best.size());
  std::transform(best.begin(), best.end(), out.begin(), [&](const auto& kv) {
    return std::make_pair(kv.first, kv.second.second);
  });
  std::stable_sort(out.begin(), out.end(),
                   [&](const auto& x, const auto& y) {
                     long long lx = word_length(g, x.second);
                     long long ly = word_length(g, y.second);
                     if (lx != ly) return lx < ly;
                     return x.first < y.first;
                   });
  return out;
}

}  // namespace schubert
