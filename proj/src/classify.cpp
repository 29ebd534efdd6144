#include "classify.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>
#include <tuple>

namespace schubert {

namespace {

GroupCase from_case_info(const CaseInfo& info) {
  GroupCase c;
  c.tits_pattern = info.tits_pattern;
  c.tits_name = info.tits_name;
  c.group_name = info.group_name;
  c.split = false;
  c.n = info.n;
  c.source_type = info.source_type;
  c.source_rank = info.source_rank;
  c.automorphism = info.automorphism;
  c.dual = info.dual;
  c.component_group_order = info.component_group_order;
  c.vertex_types = info.vertex_types;
  return c;
}

// nonzero dominant weights of the dual fixed group with coordinates up to
// coord_bound; adjoint duals stay inside the root lattice; A-type duals get
// the l*omega_1 and l*omega_n tails up to a_family_l_max
std::vector<ivec> case_weights(const GroupCase& c, long long coord_bound) {
  RootSystem rs = build(c.dual.type, c.dual.rank);
  bool adjoint = c.dual.isogeny == "adjoint";
  std::set<ivec> weights;
  ivec w(rs.rank, 0);
  for (;;) {
    int i = 0;
    while (i < rs.rank && w[i] == coord_bound) w[i++] = 0;
    if (i == rs.rank) break;
    ++w[i];
    if (!adjoint || rs.in_root_lattice(Weight(w))) weights.insert(w);
  }
  if (c.dual.type == 'A') {
    for (long long l = 1; l <= a_family_l_max(); ++l) {
      ivec first(rs.rank, 0), last(rs.rank, 0);
      first[0] = l;
      last[rs.rank - 1] = l;
      weights.insert(first);
      weights.insert(last);
    }
  }
  return {weights.begin(), weights.end()};
}

}  // namespace

long long a_family_l_max() { return 6; }

std::vector<GroupCase> group_cases(int max_rank) {
  if (max_rank < 1) throw std::invalid_argument("group_cases: max_rank < 1");
  std::vector<GroupCase> out;
  auto add_split = [&](char t, int r, const std::string& name) {
    GroupCase c;
    c.tits_pattern = "split";
    c.tits_name = std::string(1, t) + std::to_string(r);
    c.group_name = name;
    c.split = true;
    c.n = r;
    c.source_type = t;
    c.source_rank = r;
    c.automorphism = "identity";
    c.dual = dual_fixed_group(c.tits_name, r);
    c.vertex_types = {"absolutely_special"};
    out.push_back(std::move(c));
  };
  for (int r = 1; r <= max_rank; ++r)
    add_split('A', r, "PGL_" + std::to_string(r + 1));
  for (int r = 2; r <= max_rank; ++r)
    add_split('B', r, "SO_" + std::to_string(2 * r + 1));
  for (int r = 3; r <= max_rank; ++r)
    add_split('C', r, "PSp_" + std::to_string(2 * r));
  for (int r = 4; r <= max_rank; ++r)
    add_split('D', r, "PSO_" + std::to_string(2 * r));
  for (int r = 6; r <= std::min(max_rank, 8); ++r)
    add_split('E', r, "E" + std::to_string(r) + "^ad");
  if (max_rank >= 4) add_split('F', 4, "F4");
  if (max_rank >= 2) add_split('G', 2, "G2");

  for (const std::string& pattern : fold_case_patterns()) {
    for (int n = 1; n <= max_rank; ++n) {
      try {
        CaseInfo info = instantiate_case(pattern, n);
        if (info.dual.rank > max_rank) continue;
        out.push_back(from_case_info(info));
      } catch (const std::invalid_argument&) {
        continue;  // n outside the family's range
      }
    }
  }

  if (max_rank >= 2) {
    // PU_4 coincides with the quasi-split PSO_6 row C-B_2; kept as an
    // annotation, not scanned twice
    GroupCase x;
    x.tits_pattern = "B-C_n";
    x.tits_name = "B-C_2";
    x.group_name = "PU_4";
    x.split = false;
    x.n = 2;
    x.source_type = 'A';
    x.source_rank = 3;
    x.automorphism = "flip";
    x.dual = DualFixedGroup{'C', 2, "simply_connected"};
    x.component_group_order = 2;
    x.vertex_types = {"absolutely_special"};
    x.cross_reference = "C-B_2";
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<ClassRow> rationally_smooth_table(int max_rank, long long coord_bound) {
  std::vector<ClassRow> rows;
  for (const GroupCase& c : group_cases(max_rank)) {
    if (!c.cross_reference.empty()) continue;
    RootSystem rs = build(c.dual.type, c.dual.rank);
    for (const ivec& coords : case_weights(c, coord_bound)) {
      Weight w(coords);
      ClassRow row;
      row.case_name = c.tits_name;
      row.group_name = c.group_name;
      row.weight = coords;
      row.minuscule = is_minuscule(rs, w);
      row.quasi_minuscule = is_quasi_minuscule(rs, w);
      row.verdict = is_wmf(rs, w);
      rows.push_back(std::move(row));
    }
  }
  std::sort(rows.begin(), rows.end(), [](const ClassRow& a, const ClassRow& b) {
    return std::tie(a.case_name, a.weight) < std::tie(b.case_name, b.weight);
  });
  return rows;
}

std::vector<ClassRow> smooth_table(int max_rank, long long coord_bound) {
  std::vector<ClassRow> rows;
  for (const GroupCase& c : group_cases(max_rank)) {
    if (!c.cross_reference.empty()) continue;
    RootSystem rs = build(c.dual.type, c.dual.rank);
    bool exotic_family = c.tits_pattern == "C-BC_n";
    for (const ivec& coords : case_weights(c, coord_bound)) {
      Weight w(coords);
      bool mini = is_minuscule(rs, w);
      bool qm = is_quasi_minuscule(rs, w);
      for (const std::string& vertex : c.vertex_types) {
        ClassRow row;
        row.case_name = c.tits_name;
        row.group_name = c.group_name;
        row.weight = coords;
        row.minuscule = mini;
        row.quasi_minuscule = qm;
        row.vertex = vertex;
        row.verdict =
            mini || (exotic_family && qm && vertex == "special_not_absolutely_special");
        if (row.verdict) assert(is_wmf(rs, w));  // smooth implies rationally smooth
        rows.push_back(std::move(row));
      }
    }
  }
  std::sort(rows.begin(), rows.end(), [](const ClassRow& a, const ClassRow& b) {
    return std::tie(a.case_name, a.weight, a.vertex) <
           std::tie(b.case_name, b.weight, b.vertex);
  });
  return rows;
}

TowerReport verify_pu3_tower(int l_max) {
  if (l_max < 1) throw std::invalid_argument("verify_pu3_tower: l_max < 1");
  GCM g = pu3_gcm();
  TowerReport rep;
  rep.ok = true;
  for (int l = 1; l <= l_max; ++l) {
    for (char ab : {'A', 'B'}) {
      auto [w, v] = case_words(ab, l);
      TowerEntry e;
      e.l = l;
      e.smooth = smooth_at(g, w, v);
      e.expected_smooth = ab == 'B' && l == 1;
      e.expected_ratio = ab == 'A' ? 4 * l : l;
      auto ratio = smoothness_ratio(g, w, v);
      if (ratio)
        e.ratio = *ratio;
      else
        rep.ok = false;
      rep.ok = rep.ok && e.smooth == e.expected_smooth && ratio &&
               e.ratio == e.expected_ratio;
      (ab == 'A' ? rep.case_a : rep.case_b).push_back(std::move(e));
    }
  }
  return rep;
}

TrialityReport verify_triality() {
  TrialityReport rep;
  rep.orbit_dimension = schubert_dimension_check();
  rep.tangent_dimension = sigma_fixed_dimension();

  RootSystem d4 = build('D', 4);
  rep.two_rho_coefficients = d4.two_rho;

  NilpotentVector v = build_v_max(Cyclo3(1));
  rep.sigma_fixed_vmax = sigma_fixed(v, triality_permutation(d4));
  LaurentMatrix e = exp_matrix(v);
  rep.orthogonality = orthogonality_check(e);
  rep.smith = smith_valuations(e);
  rep.entry_check = e[0][7] == lp_monomial(-2, -Cyclo3::zeta_pow(-2));

  const ivec r1{1, 1, 1, 0}, r2{0, 1, 1, 1}, r3{1, 1, 0, 1};
  NilpotentVector n1, n2, n3;
  n1.x[r1] = Cyclo3(1);
  n2.x[r2] = Cyclo3::zeta_pow(-1);
  n3.x[r3] = Cyclo3::zeta_pow(-2);
  LaurentMatrix u1 = exp_matrix(n1), u2 = exp_matrix(n2), u3 = exp_matrix(n3);
  rep.commute = lm_equal(lm_mul(u1, u2), lm_mul(u2, u1)) &&
                lm_equal(lm_mul(u1, u3), lm_mul(u3, u1)) &&
                lm_equal(lm_mul(u2, u3), lm_mul(u3, u2)) &&
                lm_equal(lm_mul(lm_mul(u1, u2), u3), e);

  std::set<ivec> roots;
  for (const ivec& r : all_roots(d4)) roots.insert(r);
  auto vsum = [](const ivec& a, const ivec& b) {
    ivec s = a;
    for (size_t i = 0; i < a.size(); ++i) s[i] += b[i];
    return s;
  };
  rep.no_root_sums = !roots.count(vsum(r1, r2)) && !roots.count(vsum(r1, r3)) &&
                     !roots.count(vsum(r2, r3));

  RootSystem g2 = build('G', 2);
  Weight qm = quasi_minuscule_weight(g2);
  rep.g2_qm_zero_multiplicity = weight_multiplicity(g2, qm, Weight(ivec(2, 0)));
  rep.g2_qm_wmf = is_wmf(g2, qm);

  rep.ok = rep.orbit_dimension == 6 && rep.tangent_dimension == 7 &&
           rep.smith == std::vector<long long>{-2, -1, -1, 0, 0, 1, 1, 2} &&
           rep.sigma_fixed_vmax && rep.orthogonality && rep.entry_check &&
           rep.commute && rep.no_root_sums &&
           rep.g2_qm_zero_multiplicity == 1 && rep.g2_qm_wmf;
  return rep;
}

}  // namespace schubert
