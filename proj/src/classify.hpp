#pragma once

#include <string>
#include <vector>

#include "fold.hpp"
#include "kumar.hpp"
#include "mult.hpp"
#include "triality.hpp"

namespace schubert {

// one row of the group-case table: a split adjoint group or one of the five
// ramified families, with the fixed subgroup of the dual under the diagram
// automorphism
struct GroupCase {
  std::string tits_pattern;  // "split", "C-BC_n", ..., family key
  std::string tits_name;     // sort key; split cases use the type label
  std::string group_name;
  bool split = false;
  int n = 0;  // dual rank parameter
  char source_type = 0;
  int source_rank = 0;
  std::string automorphism;  // "identity" | "flip" | "triality"
  DualFixedGroup dual;
  long long component_group_order = 0;  // 0 = not tracked (split cases)
  std::vector<std::string> vertex_types;
  std::string cross_reference;  // non-empty marks an annotation-only row
};

// all cases with dual rank <= max_rank, split first, then the ramified
// families, then cross-reference annotations
std::vector<GroupCase> group_cases(int max_rank);

struct ClassRow {
  std::string case_name;
  std::string group_name;
  ivec weight;  // coordinates in the dual fixed system
  bool minuscule = false;
  bool quasi_minuscule = false;
  std::string vertex;  // empty in the rationally-smooth table
  bool verdict = false;
};

long long a_family_l_max();  // 6

// weight scan per case over the dual fixed group; adjoint duals range over
// the root lattice only; verdict = weight-multiplicity-free
std::vector<ClassRow> rationally_smooth_table(int max_rank, long long coord_bound);

// verdict = minuscule, or quasi-minuscule at the special-not-absolutely-
// special vertex of a C-BC case; every true row is also rationally smooth
std::vector<ClassRow> smooth_table(int max_rank, long long coord_bound);

struct TowerEntry {
  int l = 0;
  bool smooth = false;
  mpq_class ratio;
  bool expected_smooth = false;
  mpq_class expected_ratio;
};

struct TowerReport {
  std::vector<TowerEntry> case_a, case_b;
  bool ok = false;
};

// Case A is singular for every l with ratio 4l; Case B is smooth only at
// l = 1 with ratio l
TowerReport verify_pu3_tower(int l_max);

struct TrialityReport {
  long long orbit_dimension = 0;   // 6
  int tangent_dimension = 0;       // 7
  std::vector<long long> smith;    // (-2,-1,-1,0,0,1,1,2)
  ivec two_rho_coefficients;       // D4: (6,10,6,6)
  bool sigma_fixed_vmax = false;
  bool orthogonality = false;
  bool entry_check = false;  // top-right entry -u^{-2} zeta^{-2} x^2
  bool commute = false;      // the three root-group factors
  bool no_root_sums = false;
  mpz_class g2_qm_zero_multiplicity;  // 1
  bool g2_qm_wmf = false;
  bool ok = false;
};

TrialityReport verify_triality();

}  // namespace schubert
