#include "fold.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

extern const char* fold_cases_json();

namespace schubert {

namespace {

std::vector<std::vector<int>> node_orbits(const std::vector<int>& perm) {
  int n = static_cast<int>(perm.size());
  std::vector<bool> seen(n, false);
  std::vector<std::vector<int>> orbits;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::vector<int> orb;
    int j = i;
    while (!seen[j]) {
      seen[j] = true;
      orb.push_back(j);
      j = perm[j];
    }
    std::sort(orb.begin(), orb.end());
    orbits.push_back(orb);
  }
  return orbits;
}

ivec apply_perm(const std::vector<int>& perm, const ivec& root) {
  ivec out(root.size());
  for (size_t i = 0; i < root.size(); ++i) out[perm[i]] = root[i];
  return out;
}

qvec orbit_average(const FoldSpec& spec, const ivec& root) {
  int n = spec.source.rank;
  ivec total(n, 0);
  ivec cur = root;
  for (int k = 0; k < spec.order; ++k) {
    for (int i = 0; i < n; ++i) total[i] += cur[i];
    cur = apply_perm(spec.perm, cur);
  }
  assert(cur == root);
  qvec avg(n);
  for (int i = 0; i < n; ++i) {
    avg[i] = mpq_class(static_cast<long>(total[i]), spec.order);
    avg[i].canonicalize();
  }
  return avg;
}

mpq_class gram_entry(const RootSystem& rs, const qvec& a, const qvec& b) {
  mpq_class acc = 0;
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j)
      acc += a[i] * mpq_class(static_cast<long>(rs.sym_bilinear[i][j])) * b[j];
  return acc;
}

bool orbit_nonorthogonal(const RootSystem& rs, const std::vector<int>& orb) {
  for (int i : orb)
    for (int j : orb)
      if (i != j && rs.cartan[i][j] != 0) return true;
  return false;
}

struct CasePattern {
  std::string tits;
  int n_min;
  int n_max;  // -1 = unbounded
  char source_type;
  std::string source_rank_formula;
  std::string automorphism;
  int order;
  DualFixedGroup dual;  // rank field holds 0 for "n"
  std::string dual_rank_formula;
  long long component_group_order;
  std::vector<std::string> vertex_types;
};

const std::vector<CasePattern>& case_patterns() {
  static const std::vector<CasePattern> patterns = [] {
    auto doc = nlohmann::json::parse(fold_cases_json());
    std::vector<CasePattern> out;
    for (const auto& c : doc.at("cases")) {
      CasePattern p;
      p.tits = c.at("tits_name").get<std::string>();
      p.n_min = c.at("n_min").get<int>();
      p.n_max = c.at("n_max").is_null() ? -1 : c.at("n_max").get<int>();
      p.source_type = c.at("source").at("type").get<std::string>()[0];
      p.source_rank_formula = c.at("source").at("rank").get<std::string>();
      p.automorphism = c.at("source").at("automorphism").get<std::string>();
      p.order = c.at("source").at("order").get<int>();
      p.dual.type = c.at("dual_fixed").at("type").get<std::string>()[0];
      p.dual_rank_formula = c.at("dual_fixed").at("rank").get<std::string>();
      p.dual.isogeny = c.at("dual_fixed").at("isogeny").get<std::string>();
      p.component_group_order = c.at("component_group_order").get<long long>();
      p.vertex_types =
          c.at("vertex_types").get<std::vector<std::string>>();
      out.push_back(std::move(p));
    }
    return out;
  }();
  return patterns;
}

int eval_rank_formula(const std::string& f, int n) {
  if (f == "n") return n;
  if (f == "2n") return 2 * n;
  if (f == "2n-1") return 2 * n - 1;
  if (f == "2n+1") return 2 * n + 1;
  if (f == "n+1") return n + 1;
  return std::stoi(f);  // fixed ranks like "4", "6"
}

}  // namespace

std::vector<int> identity_permutation(const RootSystem& rs) {
  std::vector<int> p(rs.rank);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

std::vector<int> flip_permutation(const RootSystem& rs) {
  std::vector<int> p = identity_permutation(rs);
  switch (rs.type) {
    case 'A':
      std::reverse(p.begin(), p.end());
      break;
    case 'D':
      std::swap(p[rs.rank - 2], p[rs.rank - 1]);
      break;
    case 'E':
      if (rs.rank != 6)
        throw std::invalid_argument("flip: only E6 in the E series");
      std::swap(p[0], p[5]);
      std::swap(p[2], p[4]);
      break;
    default:
      throw std::invalid_argument("flip: type has no nontrivial diagram flip");
  }
  return p;
}

std::vector<int> triality_permutation(const RootSystem& rs) {
  if (rs.type != 'D' || rs.rank != 4)
    throw std::invalid_argument("triality: only D4");
  return {2, 1, 3, 0};  // 0 -> 2 -> 3 -> 0, node 1 fixed
}

FoldSpec make_fold_spec(const RootSystem& rs, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != rs.rank)
    throw std::invalid_argument("fold: permutation size mismatch");
  std::vector<bool> hit(rs.rank, false);
  for (int v : perm) {
    if (v < 0 || v >= rs.rank || hit[v])
      throw std::invalid_argument("fold: not a permutation");
    hit[v] = true;
  }
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j)
      if (rs.cartan[perm[i]][perm[j]] != rs.cartan[i][j])
        throw std::invalid_argument("fold: not a diagram automorphism");
  FoldSpec spec{rs, perm, 1};
  std::vector<int> cur = perm;
  while (cur != identity_permutation(rs)) {
    std::vector<int> nxt(rs.rank);
    for (int i = 0; i < rs.rank; ++i) nxt[i] = perm[cur[i]];
    cur = nxt;
    spec.order += 1;
    if (spec.order > 3)
      throw std::invalid_argument("fold: automorphism order exceeds 3");
  }
  return spec;
}

std::string recognize_type(const std::vector<qvec>& gram) {
  int n = static_cast<int>(gram.size());
  imat p(n, ivec(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      mpq_class v = 2 * gram[i][j] / gram[i][i];
      if (v.get_den() != 1)
        throw std::invalid_argument("recognize_type: non-integral pairing");
      p[i][j] = static_cast<long long>(v.get_num().get_si());
    }
  }
  for (char t : {'A', 'B', 'C', 'D', 'E', 'F', 'G'}) {
    if (!valid_type(t, n)) continue;
    RootSystem cand = build(t, n);
    std::vector<int> phi(n, -1);
    std::vector<bool> used(n, false);
    std::function<bool(int)> match = [&](int i) -> bool {
      if (i == n) return true;
      for (int v = 0; v < n; ++v) {
        if (used[v]) continue;
        bool ok = true;
        for (int j = 0; j < i && ok; ++j) {
          ok = cand.cartan[v][phi[j]] == p[i][j] &&
               cand.cartan[phi[j]][v] == p[j][i];
        }
        if (!ok) continue;
        phi[i] = v;
        used[v] = true;
        if (match(i + 1)) return true;
        used[v] = false;
        phi[i] = -1;
      }
      return false;
    };
    if (match(0)) return cand.type_label;
  }
  throw std::invalid_argument("recognize_type: not an irreducible Cartan matrix");
}

FoldedRootData fold(const FoldSpec& spec) {
  const RootSystem& rs = spec.source;
  make_fold_spec(rs, spec.perm);  // revalidate
  FoldedRootData out;
  auto orbits = node_orbits(spec.perm);
  out.coinvariant_rank = static_cast<int>(orbits.size());

  for (const auto& orb : orbits) {
    ivec e(rs.rank, 0);
    e[orb[0]] = 1;
    out.fixed_simples.push_back(orbit_average(spec, e));
  }

  // positive averages, then drop integer multiples of smaller averages
  std::set<qvec> averages;
  for (const ivec& r : rs.positive_roots)
    averages.insert(orbit_average(spec, r));
  for (const qvec& v : averages) {
    bool divisible = false;
    for (int m = 2; m <= 3 && !divisible; ++m) {
      qvec half(v.size());
      for (size_t i = 0; i < v.size(); ++i) {
        half[i] = v[i] / m;
        half[i].canonicalize();
      }
      divisible = averages.count(half) > 0;
    }
    if (!divisible) out.fixed_positive_roots.push_back(v);
  }
  for (const qvec& s : out.fixed_simples)
    assert(std::find(out.fixed_positive_roots.begin(),
                     out.fixed_positive_roots.end(),
                     s) != out.fixed_positive_roots.end());

  std::vector<qvec> fixed_gram(orbits.size(), qvec(orbits.size()));
  for (size_t i = 0; i < orbits.size(); ++i)
    for (size_t j = 0; j < orbits.size(); ++j)
      fixed_gram[i][j] =
          gram_entry(rs, out.fixed_simples[i], out.fixed_simples[j]);
  out.fixed_type_label = recognize_type(fixed_gram);
  out.fixed_rank = out.coinvariant_rank;

  out.coroot_index = 1;
  for (const auto& orb : orbits) {
    qvec sum(rs.rank, mpq_class(0));
    for (int j : orb) sum[j] = 1;
    if (orbit_nonorthogonal(rs, orb)) {
      for (auto& c : sum) c *= 2;
      out.coroot_index *= 2;
    }
    out.echelonnage_simples.push_back(sum);
  }
  std::vector<qvec> ech_gram(orbits.size(), qvec(orbits.size()));
  for (size_t i = 0; i < orbits.size(); ++i)
    for (size_t j = 0; j < orbits.size(); ++j)
      ech_gram[i][j] =
          gram_entry(rs, out.echelonnage_simples[i], out.echelonnage_simples[j]);
  out.echelonnage_type_label = recognize_type(ech_gram);
  out.echelonnage_rank = out.coinvariant_rank;
  return out;
}

bool simply_connected_check(const FoldSpec& spec) {
  for (const auto& orb : node_orbits(spec.perm))
    if (orbit_nonorthogonal(spec.source, orb)) return false;
  return true;
}

long long component_group_order_of(const FoldSpec& spec) {
  const RootSystem& rs = spec.source;
  int n = rs.rank;
  // lattice spanned by simple coroots and (1 - sigma) of the coweight basis,
  // inside the coweight lattice of the adjoint source
  std::vector<std::vector<mpz_class>> m;
  for (int i = 0; i < n; ++i) {
    std::vector<mpz_class> row(n);
    for (int j = 0; j < n; ++j) row[j] = static_cast<long>(rs.cartan[i][j]);
    m.push_back(std::move(row));
  }
  for (int i = 0; i < n; ++i) {
    if (spec.perm[i] == i) continue;
    std::vector<mpz_class> row(n, 0);
    row[i] = 1;
    row[spec.perm[i]] = -1;
    m.push_back(std::move(row));
  }
  // column-wise Hermite elimination; index = product of pivots
  mpz_class index = 1;
  size_t r = 0;
  for (int c = 0; c < n; ++c) {
    for (;;) {
      size_t piv = m.size();
      for (size_t i = r; i < m.size(); ++i) {
        if (m[i][c] == 0) continue;
        if (piv == m.size() || cmp(abs(m[i][c]), abs(m[piv][c])) < 0) piv = i;
      }
      assert(piv != m.size());
      std::swap(m[r], m[piv]);
      bool clear = true;
      for (size_t i = r + 1; i < m.size(); ++i) {
        if (m[i][c] == 0) continue;
        mpz_class q = m[i][c] / m[r][c];  // truncated is fine, loop repeats
        for (int j = 0; j < n; ++j) m[i][j] -= q * m[r][j];
        if (m[i][c] != 0) clear = false;
      }
      if (clear) break;
    }
    index *= abs(m[r][c]);
    ++r;
  }
  assert(index.fits_slong_p());
  return index.get_si();
}

std::vector<std::string> fold_case_patterns() {
  std::vector<std::string> names;
  for (const auto& p : case_patterns()) names.push_back(p.tits);
  return names;
}

CaseInfo instantiate_case(const std::string& tits_pattern, int n) {
  for (const auto& p : case_patterns()) {
    if (p.tits != tits_pattern) continue;
    if (n < p.n_min || (p.n_max >= 0 && n > p.n_max))
      throw std::invalid_argument("case " + tits_pattern + ": n=" +
                                  std::to_string(n) + " out of range");
    CaseInfo info;
    info.tits_pattern = p.tits;
    info.split = false;
    info.n = n;
    info.source_type = p.source_type;
    info.source_rank = eval_rank_formula(p.source_rank_formula, n);
    info.automorphism = p.automorphism;
    info.order = p.order;
    info.dual.type = p.dual.type;
    info.dual.rank = eval_rank_formula(p.dual_rank_formula, n);
    info.dual.isogeny = p.dual.isogeny;
    info.component_group_order = p.component_group_order;
    info.vertex_types = p.vertex_types;
    if (p.tits == "B-C_n") {
      info.tits_name = "B-C_" + std::to_string(n);
      info.group_name = "PU_" + std::to_string(2 * n);
    } else if (p.tits == "C-BC_n") {
      info.tits_name = "C-BC_" + std::to_string(n);
      info.group_name = "PU_" + std::to_string(2 * n + 1);
    } else if (p.tits == "C-B_n") {
      info.tits_name = "C-B_" + std::to_string(n);
      info.group_name = "PSO_" + std::to_string(2 * n + 2);
    } else if (p.tits == "F4^I") {
      info.tits_name = "F4^I";
      info.group_name = "2E6";
    } else if (p.tits == "G2^I") {
      info.tits_name = "G2^I";
      info.group_name = "3D4";
    } else {
      info.tits_name = p.tits;
      info.group_name = p.tits;
    }
    return info;
  }
  throw std::invalid_argument("unknown case name: " + tits_pattern);
}

DualFixedGroup dual_fixed_group(const std::string& tits_pattern, int n) {
  // split types are addressed by their labels, e.g. "B3"
  if (!tits_pattern.empty() && tits_pattern.find('_') == std::string::npos &&
      tits_pattern.find('^') == std::string::npos &&
      tits_pattern[0] >= 'A' && tits_pattern[0] <= 'G' &&
      tits_pattern.size() >= 2 && std::isdigit(tits_pattern[1])) {
    RootSystem rs = build(tits_pattern);
    char dual_t = rs.type == 'B' ? 'C' : rs.type == 'C' ? 'B' : rs.type;
    return DualFixedGroup{dual_t, rs.rank, "simply_connected"};
  }
  return instantiate_case(tits_pattern, n).dual;
}

long long component_group_order(const std::string& tits_pattern, int n) {
  CaseInfo info = instantiate_case(tits_pattern, n);
  long long computed = component_group_order_of(case_fold_spec(info));
  assert(computed == info.component_group_order);
  return computed;
}

FoldSpec case_fold_spec(const CaseInfo& info) {
  RootSystem src = build(info.source_type, info.source_rank);
  std::vector<int> perm;
  if (info.automorphism == "identity")
    perm = identity_permutation(src);
  else if (info.automorphism == "flip")
    perm = flip_permutation(src);
  else if (info.automorphism == "triality")
    perm = triality_permutation(src);
  else
    throw std::invalid_argument("unknown automorphism: " + info.automorphism);
  return make_fold_spec(src, perm);
}

}  // namespace schubert
