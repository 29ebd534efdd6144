#include "jsonio.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace schubert {

namespace {

constexpr const char* kSchema = "schubert-smooth/1";

json head(const std::string& command) {
  json j;
  j["schema"] = kSchema;
  j["command"] = command;
  return j;
}

json json_of_qvec_rows(const std::vector<qvec>& rows) {
  json out = json::array();
  for (const qvec& row : rows) {
    json r = json::array();
    for (const mpq_class& q : row) r.push_back(json_of_rational(q));
    out.push_back(std::move(r));
  }
  return out;
}

json fold_data_json(const FoldSpec& spec) {
  FoldedRootData data = fold(spec);
  json j;
  j["fixed"] = {{"type", data.fixed_type_label},
                {"rank", data.fixed_rank},
                {"simples", json_of_qvec_rows(data.fixed_simples)},
                {"positive_roots", json_of_qvec_rows(data.fixed_positive_roots)}};
  j["echelonnage"] = {{"type", data.echelonnage_type_label},
                      {"rank", data.echelonnage_rank},
                      {"simples", json_of_qvec_rows(data.echelonnage_simples)}};
  j["coinvariant_rank"] = data.coinvariant_rank;
  j["coroot_index"] = data.coroot_index;
  j["simply_connected"] = simply_connected_check(spec);
  j["component_group_order"] = component_group_order_of(spec);
  return j;
}

mpq_class rat_from_json(const json& v) {
  if (v.is_string()) {
    mpq_class q(v.get<std::string>());
    q.canonicalize();
    return q;
  }
  if (v.is_number_integer()) return mpq_class(static_cast<long>(v.get<long long>()));
  throw std::invalid_argument("matrix entries must be exact: integer or \"p/q\"");
}

std::string dual_label(const DualFixedGroup& d) {
  return std::string(1, d.type) + std::to_string(d.rank);
}

// the nine positive roots with free triality orbits
const std::vector<ivec>& free_positive_roots() {
  static const std::vector<ivec> roots = {
      {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1},
      {1, 1, 0, 0}, {0, 1, 1, 0}, {0, 1, 0, 1},
      {1, 1, 1, 0}, {0, 1, 1, 1}, {1, 1, 0, 1}};
  return roots;
}

json injectivity_probe_json(unsigned seed, int pairs) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coeff(-2, 2);
  auto random_vector = [&]() {
    NilpotentVector v;
    for (const ivec& r : free_positive_roots()) {
      Cyclo3 c(mpq_class(coeff(rng)), mpq_class(coeff(rng)));
      if (!c.is_zero()) v.x[r] = c;
    }
    return v;
  };
  int distinguished = 0;
  bool consistent = true;
  for (int i = 0; i < pairs; ++i) {
    NilpotentVector v1 = random_vector(), v2 = random_vector();
    bool d = exp_injectivity_probe(v1, v2);
    if (d != !(v1 == v2)) consistent = false;
    if (d) ++distinguished;
  }
  json j;
  j["pairs"] = pairs;
  j["distinguished"] = distinguished;
  j["consistent"] = consistent;
  j["ok"] = consistent;
  return j;
}

json class_row_json(const ClassRow& row, const char* verdict_key, bool with_vertex) {
  json r;
  r["case"] = row.case_name;
  r["group"] = row.group_name;
  r["weight"] = row.weight;
  if (with_vertex) r["vertex"] = row.vertex;
  r["minuscule"] = row.minuscule;
  r["quasi_minuscule"] = row.quasi_minuscule;
  r[verdict_key] = row.verdict;
  return r;
}

json tower_entries_json(const std::vector<TowerEntry>& entries) {
  json arr = json::array();
  for (const TowerEntry& e : entries) {
    json r;
    r["l"] = e.l;
    r["smooth"] = e.smooth;
    r["ratio"] = json_of_rational(e.ratio);
    r["expected_smooth"] = e.expected_smooth;
    r["expected_ratio"] = json_of_rational(e.expected_ratio);
    arr.push_back(std::move(r));
  }
  return arr;
}

}  // namespace

json json_of_integer(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

json json_of_rational(const mpq_class& q) {
  if (q.get_den() == 1) return json_of_integer(q.get_num());
  return q.get_str();
}

json matrix_to_json(const LaurentMatrix& m) {
  json entries = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const LaurentPoly& p : row) {
      json terms = json::array();
      for (const auto& [e, c] : p.c)
        terms.push_back({e, c.a.get_str(), c.b.get_str()});
      r.push_back(std::move(terms));
    }
    entries.push_back(std::move(r));
  }
  json j;
  j["schema"] = kSchema;
  j["kind"] = "laurent-matrix";
  j["size"] = m.size();
  j["entries"] = std::move(entries);
  return j;
}

LaurentMatrix matrix_from_json(const json& doc) {
  const json& entries = doc.is_array() ? doc : doc.at("entries");
  if (!entries.is_array() || entries.empty())
    throw std::invalid_argument("matrix document: missing entries");
  size_t n = entries.size();
  LaurentMatrix m(n, std::vector<LaurentPoly>(n));
  for (size_t i = 0; i < n; ++i) {
    if (!entries[i].is_array() || entries[i].size() != n)
      throw std::invalid_argument("matrix document: not square");
    for (size_t j = 0; j < n; ++j) {
      LaurentPoly p;
      for (const json& term : entries[i][j]) {
        if (!term.is_array() || term.size() != 3 || !term[0].is_number_integer())
          throw std::invalid_argument(
              "matrix entry terms must be [exponent, \"p/q\", \"r/s\"]");
        int e = term[0].get<int>();
        Cyclo3 c(rat_from_json(term[1]), rat_from_json(term[2]));
        p = lp_add(p, lp_monomial(e, c));
      }
      m[i][j] = std::move(p);
    }
  }
  return m;
}

json wmf_json(const RootSystem& rs, const Weight& mu) {
  json j = head("wmf");
  j["parameters"] = {{"type", rs.type_label}, {"weight", mu.coords}};
  j["minuscule"] = is_minuscule(rs, mu);
  j["quasi_minuscule"] = is_quasi_minuscule(rs, mu);
  j["wmf"] = is_wmf(rs, mu);
  j["dim"] = json_of_integer(dim_irrep(rs, mu));
  return j;
}

json mult_table_json(const RootSystem& rs, const Weight& mu) {
  json j = head("mult");
  j["parameters"] = {{"type", rs.type_label}, {"weight", mu.coords}};
  MultiplicityTable table = mult_table(rs, mu);
  json rows = json::array();
  bool wmf = true;
  for (const auto& [lambda, m] : table.entries) {
    rows.push_back({{"weight", lambda.coords},
                    {"level", rs.level(mu, lambda)},
                    {"multiplicity", json_of_integer(m)}});
    if (m > 1) wmf = false;
  }
  j["dominant_weights"] = std::move(rows);
  j["wmf"] = wmf;
  j["dim"] = json_of_integer(dim_irrep(rs, mu));
  return j;
}

json fold_json(const std::string& type_label, int rank, int order) {
  RootSystem rs = rank > 0 && type_label.size() == 1
                      ? build(type_label[0], rank)
                      : build(type_label);
  std::vector<int> perm;
  if (order == 1)
    perm = identity_permutation(rs);
  else if (order == 2)
    perm = flip_permutation(rs);
  else if (order == 3)
    perm = triality_permutation(rs);
  else
    throw std::invalid_argument("fold: order must be 1, 2 or 3");
  FoldSpec spec = make_fold_spec(rs, perm);
  json j = head("fold");
  j["parameters"] = {{"type", rs.type_label}, {"order", order}};
  j.update(fold_data_json(spec));
  return j;
}

json fold_case_json(const std::string& case_name, int n) {
  std::vector<std::string> patterns = fold_case_patterns();
  std::string pattern = case_name;
  int nn = n;
  if (std::find(patterns.begin(), patterns.end(), pattern) == patterns.end()) {
    size_t pos = case_name.rfind('_');
    if (pos != std::string::npos && pos + 1 < case_name.size() &&
        case_name.find_first_not_of("0123456789", pos + 1) == std::string::npos) {
      pattern = case_name.substr(0, pos) + "_n";
      nn = std::stoi(case_name.substr(pos + 1));
    }
  }
  if (nn <= 0) {
    if (pattern == "F4^I") nn = 4;
    if (pattern == "G2^I") nn = 2;
  }
  CaseInfo info = instantiate_case(pattern, nn);
  FoldSpec spec = case_fold_spec(info);
  json j = head("fold-case");
  j["parameters"] = {{"case", info.tits_name}, {"n", info.n}};
  j["case"] = {{"tits_name", info.tits_name},
               {"group", info.group_name},
               {"split", info.split},
               {"n", info.n},
               {"source",
                {{"type", std::string(1, info.source_type) +
                              std::to_string(info.source_rank)},
                 {"automorphism", info.automorphism},
                 {"order", info.order}}},
               {"dual_fixed",
                {{"type", dual_label(info.dual)}, {"isogeny", info.dual.isogeny}}},
               {"component_group_order", component_group_order(pattern, info.n)},
               {"vertex_types", info.vertex_types}};
  j.update(fold_data_json(spec));
  return j;
}

json howe_json(int max_rank, long long coord_bound) {
  json j = head("wmf-scan");
  j["parameters"] = {{"max_rank", max_rank},
                     {"coord_bound", coord_bound},
                     {"a_family_l_max", std::max<long long>(coord_bound, 6)}};
  j["note"] = "infinite weight families verified up to the stated bounds";
  json rows = json::array();
  long long wmf_count = 0;
  for (const HoweRow& row : howe_table(max_rank, coord_bound)) {
    rows.push_back(
        {{"type", row.type_label}, {"weight", row.weight}, {"wmf", row.wmf}});
    if (row.wmf) ++wmf_count;
  }
  j["rows"] = std::move(rows);
  j["wmf_count"] = wmf_count;
  return j;
}

json classify_json(int max_rank, long long coord_bound) {
  json j = head("classify");
  j["parameters"] = {{"max_rank", max_rank},
                     {"coord_bound", coord_bound},
                     {"a_family_l_max", a_family_l_max()}};
  j["note"] = "infinite weight families verified up to the stated bounds";
  json cases = json::array();
  for (const GroupCase& c : group_cases(max_rank)) {
    json r;
    r["tits_name"] = c.tits_name;
    r["group"] = c.group_name;
    r["split"] = c.split;
    r["source"] = {{"type", std::string(1, c.source_type) +
                                std::to_string(c.source_rank)},
                   {"automorphism", c.automorphism}};
    r["dual_fixed"] = {{"type", dual_label(c.dual)}, {"isogeny", c.dual.isogeny}};
    r["vertex_types"] = c.vertex_types;
    if (!c.split) r["component_group_order"] = c.component_group_order;
    if (!c.cross_reference.empty()) r["cross_reference"] = c.cross_reference;
    cases.push_back(std::move(r));
  }
  j["cases"] = std::move(cases);
  json rs_rows = json::array();
  for (const ClassRow& row : rationally_smooth_table(max_rank, coord_bound))
    rs_rows.push_back(class_row_json(row, "rationally_smooth", false));
  j["rationally_smooth"] = std::move(rs_rows);
  json s_rows = json::array();
  for (const ClassRow& row : smooth_table(max_rank, coord_bound))
    s_rows.push_back(class_row_json(row, "smooth", true));
  j["smooth"] = std::move(s_rows);
  return j;
}

json kumar_json(char case_ab, int l) {
  GCM g = pu3_gcm();
  auto [w, v] = case_words(case_ab, l);
  json j = head("kumar");
  j["parameters"] = {{"case", std::string(1, case_ab)}, {"l", l}};
  j["w"] = w.letters;
  j["v"] = v.letters;
  j["length_w"] = word_length(g, w);
  j["length_v"] = word_length(g, v);
  j["smooth"] = smooth_at(g, w, v);
  auto ratio = smoothness_ratio(g, w, v);
  j["ratio"] = ratio ? json_of_rational(*ratio) : json();
  return j;
}

json pu3_tower_json(int l_max) {
  TowerReport rep = verify_pu3_tower(l_max);
  json j = head("pu3-tower");
  j["parameters"] = {{"l_max", l_max}};
  j["case_a"] = tower_entries_json(rep.case_a);
  j["case_b"] = tower_entries_json(rep.case_b);
  j["ok"] = rep.ok;
  return j;
}

json triality_json(const std::string& check, unsigned seed) {
  json j = head("triality");
  j["parameters"] = {{"check", check}, {"seed", seed}};
  if (check == "injectivity") {
    j["injectivity"] = injectivity_probe_json(seed, 100);
    j["ok"] = j["injectivity"]["ok"];
    return j;
  }
  TrialityReport rep = verify_triality();
  if (check == "all") {
    j["orbit_dimension"] = rep.orbit_dimension;
    j["tangent_dimension"] = rep.tangent_dimension;
    j["smith"] = rep.smith;
    j["two_rho_coefficients"] = rep.two_rho_coefficients;
    j["sigma_fixed"] = rep.sigma_fixed_vmax;
    j["orthogonality"] = rep.orthogonality;
    j["entry_check"] = rep.entry_check;
    j["commute"] = rep.commute;
    j["no_root_sums"] = rep.no_root_sums;
    j["g2_qm_zero_multiplicity"] = json_of_integer(rep.g2_qm_zero_multiplicity);
    j["g2_qm_wmf"] = rep.g2_qm_wmf;
    j["injectivity"] = injectivity_probe_json(seed, 100);
    j["ok"] = rep.ok && j["injectivity"]["ok"].get<bool>();
  } else if (check == "smith") {
    j["smith"] = rep.smith;
    j["ok"] = rep.smith == std::vector<long long>{-2, -1, -1, 0, 0, 1, 1, 2};
  } else if (check == "matrix") {
    j["matrix"] = matrix_to_json(exp_matrix(build_v_max(Cyclo3(1))));
    j["entry_check"] = rep.entry_check;
    j["ok"] = rep.entry_check;
  } else if (check == "orthogonality") {
    j["orthogonality"] = rep.orthogonality;
    j["ok"] = rep.orthogonality;
  } else if (check == "sigma") {
    j["sigma_fixed"] = rep.sigma_fixed_vmax;
    j["tangent_dimension"] = rep.tangent_dimension;
    j["ok"] = rep.sigma_fixed_vmax && rep.tangent_dimension == 7;
  } else if (check == "dimension") {
    j["orbit_dimension"] = rep.orbit_dimension;
    j["tangent_dimension"] = rep.tangent_dimension;
    j["ok"] = rep.orbit_dimension == 6 && rep.tangent_dimension == 7;
  } else if (check == "commute") {
    j["commute"] = rep.commute;
    j["no_root_sums"] = rep.no_root_sums;
    j["ok"] = rep.commute && rep.no_root_sums;
  } else {
    throw std::invalid_argument("triality: unknown check \"" + check + "\"");
  }
  return j;
}

json smith_json(const json& matrix_doc) {
  LaurentMatrix m = matrix_from_json(matrix_doc);
  json j = head("smith");
  j["parameters"] = {{"size", m.size()}};
  j["valuations"] = smith_valuations(m);
  return j;
}

std::string render_table(const json& doc) {
  std::ostringstream out;
  auto cell = [](const json& v) {
    return v.is_string() ? v.get<std::string>() : v.dump();
  };
  for (const auto& [key, value] : doc.items()) {
    if (value.is_array() && !value.empty() && value.front().is_object()) {
      out << key << ":\n";
      std::vector<std::string> cols;
      for (const auto& [ck, cv] : value.front().items()) {
        (void)cv;
        cols.push_back(ck);
      }
      std::vector<size_t> width(cols.size());
      std::vector<std::vector<std::string>> grid;
      grid.push_back(cols);
      for (const json& row : value) {
        std::vector<std::string> r;
        for (const std::string& c : cols)
          r.push_back(row.contains(c) ? cell(row.at(c)) : "");
        grid.push_back(std::move(r));
      }
      for (const auto& r : grid)
        for (size_t i = 0; i < cols.size(); ++i)
          width[i] = std::max(width[i], r[i].size());
      for (size_t rI = 0; rI < grid.size(); ++rI) {
        out << "  ";
        for (size_t i = 0; i < cols.size(); ++i) {
          out << grid[rI][i];
          if (i + 1 < cols.size())
            out << std::string(width[i] - grid[rI][i].size() + 2, ' ');
        }
        out << "\n";
        if (rI == 0) {
          out << "  ";
          size_t total = 0;
          for (size_t i = 0; i < cols.size(); ++i)
            total += width[i] + (i + 1 < cols.size() ? 2 : 0);
          out << std::string(total, '-') << "\n";
        }
      }
    } else {
      out << key << ": " << cell(value) << "\n";
    }
  }
  return out.str();
}

}  // namespace schubert
