#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rootsys.hpp"

namespace schubert {

// Generalized Cartan matrix with rows indexed by roots: a[j][i] = <alpha_j, alpha_i^vee>.
struct GCM {
  int size = 0;
  imat a;
};

GCM make_gcm(const imat& a);
// affine C-BC_1 lattice: rows <alpha_0,.>, <alpha_1,.> = [[2,-4],[-1,2]]
GCM pu3_gcm();
// delta = alpha_0 + 2 alpha_1, the primitive imaginary root of pu3_gcm
ivec pu3_delta();

using AffineRoot = ivec;  // coordinates in the simple affine roots

AffineRoot reflect(const GCM& g, int i, const AffineRoot& beta);

// group element as a matrix pair acting on root coordinates
struct WeylElement {
  imat m;
  imat m_inv;
  bool operator==(const WeylElement& o) const { return m == o.m; }
  bool operator!=(const WeylElement& o) const { return m != o.m; }
};

WeylElement identity_element(const GCM& g);
WeylElement gen(const GCM& g, int i);
WeylElement mul(const WeylElement& x, const WeylElement& y);
AffineRoot apply(const WeylElement& w, const AffineRoot& beta);
AffineRoot apply_inv(const WeylElement& w, const AffineRoot& beta);

struct CoxeterWord {
  std::vector<int> letters;
};

WeylElement element_of(const GCM& g, const CoxeterWord& w);
// lex-least reduced word of the element, peeled by left descents
std::vector<int> canonical_word(const GCM& g, const WeylElement& w);
std::vector<int> canonical_word(const GCM& g, const CoxeterWord& w);
long long word_length(const GCM& g, const CoxeterWord& w);
bool is_reduced(const GCM& g, const CoxeterWord& w);
AffineRoot act(const GCM& g, const CoxeterWord& w, const AffineRoot& beta);

// subword test against a fixed reduced word of w (right-descent greedy)
bool bruhat_leq(const GCM& g, const CoxeterWord& v, const CoxeterWord& w);

// s_{i,j} = s_i s_{i+1} ... s_j with indices taken mod 2; empty when i > j
CoxeterWord s_range(int i, int j);
// fixed reduced expressions of the two PU_3 cases:
// A: w = s_{1,2l+1}, v = s_{1,2l-1};  B: w = s_{0,2l}, v = s_{0,2l-2}
std::pair<CoxeterWord, CoxeterWord> case_words(char case_ab, int l);

// all positive real roots alpha with l(s_alpha) <= L, with reflection words,
// sorted by (reflection length, root coordinates)
std::vector<std::pair<AffineRoot, CoxeterWord>> reflections_with_bound(
    const GCM& g, long long L);

}  // namespace schubert
