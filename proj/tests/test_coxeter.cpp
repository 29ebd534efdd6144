#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <vector>

#include "coxeter.hpp"
#include "doctest.h"

using namespace schubert;

namespace {

ivec scaled(const ivec& v, long long c) {
  ivec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

ivec add(const ivec& a, const ivec& b) {
  ivec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

bool positive(const ivec& v) {
  bool nonneg = true, zero = true;
  for (long long c : v) {
    nonneg &= (c >= 0);
    zero &= (c == 0);
  }
  return nonneg && !zero;
}

// positive real roots of the rank-2 board, derived by hand from the two
// reflection orbits: {a0 + 2i*delta, 2i*delta - a0} and {a1 + i*delta,
// i*delta - a1}
std::set<ivec> closed_form_roots(long long max_delta) {
  ivec a0{1, 0}, a1{0, 1}, delta = pu3_delta();
  std::set<ivec> out{a0, a1};
  for (long long i = 1; i <= max_delta; ++i) {
    out.insert(add(a0, scaled(delta, 2 * i)));
    out.insert(add(scaled(a0, -1), scaled(delta, 2 * i)));
    out.insert(add(a1, scaled(delta, i)));
    out.insert(add(scaled(a1, -1), scaled(delta, i)));
  }
  return out;
}

// plain matrix BFS over the group, no reduced-word bookkeeping
std::vector<WeylElement> elements_up_to(const GCM& g, long long L) {
  std::vector<WeylElement> out;
  std::set<imat> seen;
  std::deque<WeylElement> layer{identity_element(g)};
  seen.insert(identity_element(g).m);
  out.push_back(identity_element(g));
  for (long long depth = 0; depth < L; ++depth) {
    std::deque<WeylElement> next;
    for (const WeylElement& w : layer) {
      for (int i = 0; i < g.size; ++i) {
        WeylElement v = mul(w, gen(g, i));
        if (seen.insert(v.m).second) {
          next.push_back(v);
          out.push_back(v);
        }
      }
    }
    layer = std::move(next);
  }
  return out;
}

}  // namespace

TEST_SUITE("coxeter") {

TEST_CASE("board data") {
  GCM g = pu3_gcm();
  CHECK(g.size == 2);
  CHECK(g.a == imat{{2, -4}, {-1, 2}});
  CHECK(pu3_delta() == ivec{1, 2});

  // the null root is fixed by both generators
  CHECK(reflect(g, 0, pu3_delta()) == pu3_delta());
  CHECK(reflect(g, 1, pu3_delta()) == pu3_delta());

  CHECK_THROWS_AS(make_gcm(imat{{2, 1}, {-1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(make_gcm(imat{{1, -1}, {-1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(make_gcm(imat{{2, 0}, {-1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(reflect(g, 2, ivec{1, 0}), std::invalid_argument);
}

TEST_CASE("frozen reflections") {
  GCM g = pu3_gcm();
  CHECK(reflect(g, 1, ivec{1, 0}) == ivec{1, 4});  // s1(a0) = a0 + 4a1
  CHECK(reflect(g, 0, ivec{0, 1}) == ivec{1, 1});  // s0(a1) = a0 + a1
  CHECK(reflect(g, 0, ivec{1, 0}) == ivec{-1, 0});
  CHECK(reflect(g, 1, ivec{0, 1}) == ivec{0, -1});

  // s_{1,2}(a0) = a0 - 2*delta
  CHECK(act(g, s_range(1, 2), ivec{1, 0}) == ivec{-1, -4});
}

TEST_CASE("group structure") {
  GCM g = pu3_gcm();
  WeylElement id = identity_element(g);
  for (int i = 0; i < 2; ++i) {
    WeylElement s = gen(g, i);
    CHECK(mul(s, s) == id);
    CHECK(s.m == s.m_inv);
  }
  WeylElement w = element_of(g, s_range(0, 17));
  WeylElement winv{w.m_inv, w.m};
  CHECK(mul(w, winv) == id);
  CHECK(mul(winv, w) == id);
  for (const ivec& beta : {ivec{1, 0}, ivec{0, 1}, ivec{3, 4}})
    CHECK(apply_inv(w, schubert::apply(w, beta)) == beta);
}

TEST_CASE("s_range words and lengths") {
  GCM g = pu3_gcm();
  CHECK(s_range(1, 3).letters == std::vector<int>{1, 0, 1});
  CHECK(s_range(0, 2).letters == std::vector<int>{0, 1, 0});
  CHECK(s_range(2, 1).letters.empty());

  // alternating words are reduced at every length
  for (int j = 1; j <= 25; ++j) {
    CHECK(word_length(g, s_range(1, j)) == j);
    CHECK(is_reduced(g, s_range(1, j)));
    CHECK(word_length(g, s_range(0, j - 1)) == j);
  }
  // repeating a letter drops the length by two
  CoxeterWord sq;
  sq.letters = {0, 0, 1};
  CHECK(word_length(g, sq) == 1);
  CHECK_FALSE(is_reduced(g, sq));
  CHECK(canonical_word(g, sq) == std::vector<int>{1});
}

TEST_CASE("closed forms of alternating images") {
  GCM g = pu3_gcm();
  ivec a0{1, 0}, a1{0, 1}, delta = pu3_delta();
  for (long long i = 1; i <= 20; ++i) {
    // s_{1,2i}(a0) = a0 - 2i*delta, s_{1,2i+1}(a0) = (2i+2)*delta - a0
    CHECK(act(g, s_range(1, 2 * i), a0) == add(a0, scaled(delta, -2 * i)));
    CHECK(act(g, s_range(1, 2 * i + 1), a0) ==
          add(scaled(a0, -1), scaled(delta, 2 * i + 2)));
    // s_{0,2i}(a1) = (i+1)*delta - a1, s_{0,2i+1}(a1) = a1 - (i+1)*delta
    CHECK(act(g, s_range(0, 2 * i), a1) ==
          add(scaled(a1, -1), scaled(delta, i + 1)));
    CHECK(act(g, s_range(0, 2 * i + 1), a1) ==
          add(a1, scaled(delta, -(i + 1))));
  }
}

TEST_CASE("case words") {
  GCM g = pu3_gcm();
  for (int l = 1; l <= 8; ++l) {
    auto [wa, va] = case_words('A', l);
    CHECK(wa.letters == s_range(1, 2 * l + 1).letters);
    CHECK(va.letters == s_range(1, 2 * l - 1).letters);
    CHECK(word_length(g, wa) == 2 * l + 1);
    CHECK(word_length(g, va) == 2 * l - 1);
    CHECK(bruhat_leq(g, va, wa));

    auto [wb, vb] = case_words('B', l);
    CHECK(wb.letters == s_range(0, 2 * l).letters);
    CHECK(vb.letters == s_range(0, 2 * l - 2).letters);
    CHECK(bruhat_leq(g, vb, wb));
  }
  CHECK_THROWS_AS(case_words('A', 0), std::invalid_argument);
  CHECK_THROWS_AS(case_words('C', 1), std::invalid_argument);
}

TEST_CASE("bruhat order against the dihedral oracle") {
  GCM g = pu3_gcm();
  // in the infinite dihedral group: v <= w iff l(v) < l(w) or v = w
  std::vector<CoxeterWord> words;
  for (int j = 0; j <= 25; ++j) {
    CoxeterWord w1 = s_range(1, j);  // length j, empty when j = 0
    words.push_back(w1);
    if (j >= 1) words.push_back(s_range(0, j - 1));
  }
  for (const CoxeterWord& v : words) {
    for (const CoxeterWord& w : words) {
      long long lv = word_length(g, v), lw = word_length(g, w);
      bool expect = lv < lw || element_of(g, v) == element_of(g, w);
      CHECK(bruhat_leq(g, v, w) == expect);
    }
  }
}

TEST_CASE("reflections with bound") {
  GCM g = pu3_gcm();
  long long L = 15;
  auto refl = reflections_with_bound(g, L);

  // count: two reflections per odd length
  CHECK(refl.size() == 2 * ((L + 1) / 2));

  std::set<ivec> roots_seen;
  std::set<ivec> allowed = closed_form_roots(L);
  for (const auto& [root, word] : refl) {
    CHECK(positive(root));
    CHECK(roots_seen.insert(root).second);
    CHECK(allowed.count(root) == 1);
    long long len = word_length(g, word);
    CHECK(len <= L);
    CHECK(len % 2 == 1);
    CHECK(is_reduced(g, word));
    WeylElement t = element_of(g, word);
    CHECK(mul(t, t) == identity_element(g));
    // t is the reflection in its root
    ivec neg = scaled(root, -1);
    CHECK(schubert::apply(t, root) == neg);
  }

  // cross-check against a plain matrix BFS: the involutions of length <= L
  // are exactly the elements returned
  std::set<imat> from_refl;
  for (const auto& [root, word] : refl) from_refl.insert(element_of(g, word).m);
  std::set<imat> from_bfs;
  WeylElement id = identity_element(g);
  for (const WeylElement& w : elements_up_to(g, L)) {
    if (w == id) continue;
    if (!(mul(w, w) == id)) continue;
    CoxeterWord cw;
    cw.letters = canonical_word(g, w);
    if (static_cast<long long>(cw.letters.size()) <= L) from_bfs.insert(w.m);
  }
  CHECK(from_refl == from_bfs);

  CHECK(reflections_with_bound(g, 0).empty());
  CHECK_THROWS_AS(reflections_with_bound(g, -1), std::invalid_argument);
}

TEST_CASE("bruhat basics") {
  GCM g = pu3_gcm();
  CoxeterWord e;
  CHECK(bruhat_leq(g, e, e));
  CHECK(bruhat_leq(g, e, s_range(0, 5)));
  CHECK_FALSE(bruhat_leq(g, s_range(0, 5), e));
  CHECK(bruhat_leq(g, s_range(1, 7), s_range(1, 7)));
}

}  // TEST_SUITE
