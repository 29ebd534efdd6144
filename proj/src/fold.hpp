#pragma once

#include <string>
#include <vector>

#include "rootsys.hpp"

namespace schubert {

using qvec = std::vector<mpq_class>;

struct FoldSpec {
  RootSystem source;
  std::vector<int> perm;  // node permutation, 0-based
  int order = 1;
};

// validates that perm is a diagram automorphism and computes its order
FoldSpec make_fold_spec(const RootSystem& rs, const std::vector<int>& perm);

std::vector<int> identity_permutation(const RootSystem& rs);
// the standard nontrivial diagram flip (types A_n n>=2, D_n, E6)
std::vector<int> flip_permutation(const RootSystem& rs);
// D4 only: 1 -> 3 -> 4 -> 1, node 2 fixed
std::vector<int> triality_permutation(const RootSystem& rs);

struct FoldedRootData {
  std::string fixed_type_label;
  int fixed_rank = 0;
  std::vector<qvec> fixed_simples;         // source simple-root coordinates
  std::vector<qvec> fixed_positive_roots;  // non-divisible positive averages
  std::string echelonnage_type_label;
  int echelonnage_rank = 0;
  std::vector<qvec> echelonnage_simples;   // modified norms of node orbits
  int coinvariant_rank = 0;                // number of node orbits
  int coroot_index = 1;                    // in {1, 2}
};

FoldedRootData fold(const FoldSpec& spec);

// true iff modified norms of simple coroots equal the plain orbit sums,
// i.e. coroot_index == 1; false exactly for A_{2n} with the flip
bool simply_connected_check(const FoldSpec& spec);

// order of coweights-mod-coroots coinvariants for the source adjoint group
long long component_group_order_of(const FoldSpec& spec);

// recognizes the type of an integral pairing matrix p[i][j] = <b_j, b_i^vee>
// computed from a rational Gram matrix; rank-2 aliases report as B2, rank-1 as A1
std::string recognize_type(const std::vector<qvec>& gram);

// ---- static case table ----

struct DualFixedGroup {
  char type = 0;
  int rank = 0;
  std::string isogeny;  // "simply_connected" | "adjoint"
};

struct CaseInfo {
  std::string tits_pattern;  // e.g. "C-BC_n"
  std::string tits_name;     // e.g. "C-BC_2"
  std::string group_name;    // e.g. "PU_5"
  bool split = false;
  int n = 0;
  char source_type = 0;
  int source_rank = 0;
  std::string automorphism;  // "identity" | "flip" | "triality"
  int order = 1;
  DualFixedGroup dual;
  long long component_group_order = 1;
  std::vector<std::string> vertex_types;
};

std::vector<std::string> fold_case_patterns();
// n is the dual rank parameter; fixed cases (F4^I, G2^I) require their own n
CaseInfo instantiate_case(const std::string& tits_pattern, int n);
DualFixedGroup dual_fixed_group(const std::string& tits_pattern, int n);
long long component_group_order(const std::string& tits_pattern, int n);
// fold spec of the case's source system with its automorphism
FoldSpec case_fold_spec(const CaseInfo& info);

}  // namespace schubert
