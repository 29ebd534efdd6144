#include "rootsys.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <queue>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace schubert {

namespace {

long long expected_positive_count(char type, int rank) {
  switch (type) {
    case 'A': return 1LL * rank * (rank + 1) / 2;
    case 'B':
    case 'C': return 1LL * rank * rank;
    case 'D': return 1LL * rank * (rank - 1);
    case 'E': return rank == 6 ? 36 : rank == 7 ? 63 : 120;
    case 'F': return 24;
    case 'G': return 6;
  }
  return -1;
}

// Bourbaki Cartan matrices, cartan[i][j] = <alpha_j, alpha_i^vee>.
void make_cartan(char type, int n, imat& c, ivec& d) {
  c.assign(n, ivec(n, 0));
  d.assign(n, 1);
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto bond = [&](int i, int j) { c[i][j] = c[j][i] = -1; };
  switch (type) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      break;
    case 'B':  // node n short; the short-node row carries the -2
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1);
      if (n >= 2) {
        c[n - 2][n - 1] = -1;
        c[n - 1][n - 2] = -2;
      }
      for (int i = 0; i + 1 < n; ++i) d[i] = 2;
      break;
    case 'C':  // node n long
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1);
      c[n - 2][n - 1] = -2;
      c[n - 1][n - 2] = -1;
      d[n - 1] = 2;
      break;
    case 'D':
      for (int i = 0; i + 3 < n; ++i) bond(i, i + 1);
      bond(n - 3, n - 2);
      bond(n - 3, n - 1);
      break;
    case 'E':
      bond(0, 2);
      bond(1, 3);
      for (int i = 2; i + 1 < n; ++i) bond(i, i + 1);
      break;
    case 'F':  // nodes 1,2 long; 3,4 short
      bond(0, 1);
      bond(2, 3);
      c[1][2] = -1;
      c[2][1] = -2;
      d[0] = d[1] = 2;
      break;
    case 'G':  // node 1 short, node 2 long
      c[0][1] = -3;
      c[1][0] = -1;
      d[1] = 3;
      break;
  }
}

imat adjugate(const imat& m, long long& det) {
  int n = static_cast<int>(m.size());
  // fraction-free Gauss-Bartels is overkill at rank <= 8; expand by minors
  std::function<long long(std::vector<int>, std::vector<int>)> det_of =
      [&](std::vector<int> rows, std::vector<int> cols) -> long long {
    if (rows.empty()) return 1;
    long long acc = 0, sign = 1;
    int r0 = rows.front();
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    for (size_t k = 0; k < cols.size(); ++k) {
      if (m[r0][cols[k]] != 0) {
        std::vector<int> sub_cols;
        for (size_t t = 0; t < cols.size(); ++t)
          if (t != k) sub_cols.push_back(cols[t]);
        acc += sign * m[r0][cols[k]] * det_of(sub_rows, sub_cols);
      }
      sign = -sign;
    }
    return acc;
  };
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  det = det_of(all, all);
  imat adj(n, ivec(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::vector<int> rows, cols;
      for (int k = 0; k < n; ++k) {
        if (k != j) rows.push_back(k);
        if (k != i) cols.push_back(k);
      }
      long long mn = det_of(rows, cols);
      adj[i][j] = (((i + j) & 1) ? -1 : 1) * mn;
    }
  }
  return adj;
}

}  // namespace

// B1, C2 and D3 are permitted as labeled aliases (of A1, B2, A3) so small
// members of the case families can be built under their own names
bool valid_type(char type, int rank) {
  switch (type) {
    case 'A': return rank >= 1;
    case 'B': return rank >= 1;
    case 'C': return rank >= 2;
    case 'D': return rank >= 3;
    case 'E': return rank >= 6 && rank <= 8;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
  }
  return false;
}

RootSystem build(char type, int rank) {
  if (!valid_type(type, rank))
    throw std::invalid_argument("not an irreducible type: " +
                                std::string(1, type) + std::to_string(rank));
  RootSystem rs;
  rs.type = type;
  rs.rank = rank;
  rs.type_label = std::string(1, type) + std::to_string(rank);
  make_cartan(type, rank, rs.cartan, rs.symmetrizer);

  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      assert(rs.symmetrizer[i] * rs.cartan[i][j] ==
             rs.symmetrizer[j] * rs.cartan[j][i]);

  rs.sym_bilinear.assign(rank, ivec(rank, 0));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      rs.sym_bilinear[i][j] = rs.symmetrizer[i] * rs.cartan[i][j];

  rs.adj_cartan = adjugate(rs.cartan, rs.det_cartan);
  assert(rs.det_cartan > 0);
  rs.sip.assign(rank, ivec(rank, 0));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      rs.sip[i][j] = rs.adj_cartan[j][i] * rs.symmetrizer[j];
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) assert(rs.sip[i][j] == rs.sip[j][i]);

  // root set = Weyl orbit of the simple roots
  std::unordered_set<ivec, IvecHash> seen;
  std::deque<ivec> queue;
  for (int i = 0; i < rank; ++i) {
    ivec e(rank, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    ivec r = queue.front();
    queue.pop_front();
    for (int i = 0; i < rank; ++i) {
      ivec s = rs.reflect_root(i, r);
      if (seen.insert(s).second) queue.push_back(s);
    }
  }
  for (const ivec& r : seen) {
    bool nonneg = true, nonpos = true;
    for (long long c : r) {
      nonneg &= (c >= 0);
      nonpos &= (c <= 0);
    }
    assert(nonneg || nonpos);
    if (nonneg) rs.positive_roots.push_back(r);
  }
  std::sort(rs.positive_roots.begin(), rs.positive_roots.end(),
            [&](const ivec& a, const ivec& b) {
              long long ha = rs.height_of_root_vector(a);
              long long hb = rs.height_of_root_vector(b);
              if (ha != hb) return ha < hb;
              return a < b;
            });
  if (static_cast<long long>(rs.positive_roots.size()) !=
      expected_positive_count(type, rank))
    throw std::logic_error("positive root count mismatch for " + rs.type_label);

  rs.two_rho.assign(rank, 0);
  for (const ivec& r : rs.positive_roots)
    for (int i = 0; i < rank; ++i) rs.two_rho[i] += r[i];
  {
    Weight w = rs.weight_of_root(rs.two_rho);
    for (long long c : w.coords) assert(c == 2);
  }

  rs.highest_root = rs.positive_roots.back();
  rs.highest_short_root = rs.highest_root;
  for (auto it = rs.positive_roots.rbegin(); it != rs.positive_roots.rend(); ++it) {
    if (rs.root_norm2(*it) == 2) {
      rs.highest_short_root = *it;
      break;
    }
  }
  return rs;
}

RootSystem build(const std::string& label) {
  if (label.size() < 2) throw std::invalid_argument("bad type label: " + label);
  char t = label[0];
  int rank = 0;
  try {
    rank = std::stoi(label.substr(1));
  } catch (...) {
    throw std::invalid_argument("bad type label: " + label);
  }
  return build(t, rank);
}

std::vector<mpq_class> RootSystem::rho() const {
  std::vector<mpq_class> r(rank);
  for (int i = 0; i < rank; ++i) {
    r[i] = mpq_class(static_cast<long>(two_rho[i]), 2);
    r[i].canonicalize();
  }
  return r;
}

Weight RootSystem::weight_of_root(const ivec& root) const {
  Weight w;
  w.coords.assign(rank, 0);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) w.coords[i] += cartan[i][j] * root[j];
  return w;
}

ivec RootSystem::root_coords_of_weight(const Weight& w) const {
  ivec r(rank, 0);
  for (int i = 0; i < rank; ++i) {
    long long acc = 0;
    for (int j = 0; j < rank; ++j) acc += adj_cartan[i][j] * w.coords[j];
    assert(acc % det_cartan == 0);
    r[i] = acc / det_cartan;
  }
  return r;
}

bool RootSystem::in_root_lattice(const Weight& w) const {
  for (int i = 0; i < rank; ++i) {
    long long acc = 0;
    for (int j = 0; j < rank; ++j) acc += adj_cartan[i][j] * w.coords[j];
    if (acc % det_cartan != 0) return false;
  }
  return true;
}

long long RootSystem::height_of_root_vector(const ivec& root) const {
  long long h = 0;
  for (long long c : root) h += c;
  return h;
}

long long RootSystem::level(const Weight& mu, const Weight& lambda) const {
  long long h = 0;
  for (int i = 0; i < rank; ++i) {
    long long acc = 0;
    for (int j = 0; j < rank; ++j)
      acc += adj_cartan[i][j] * (mu.coords[j] - lambda.coords[j]);
    assert(acc % det_cartan == 0);
    h += acc / det_cartan;
  }
  return h;
}

ivec RootSystem::reflect_root(int i, const ivec& root) const {
  long long p = 0;
  for (int j = 0; j < rank; ++j) p += cartan[i][j] * root[j];
  ivec r = root;
  r[i] -= p;
  return r;
}

Weight RootSystem::reflect_weight(int i, const Weight& w) const {
  Weight r = w;
  long long wi = w.coords[i];
  for (int k = 0; k < rank; ++k) r.coords[k] -= wi * cartan[k][i];
  return r;
}

std::pair<Weight, int> RootSystem::dominantize(const Weight& w) const {
  Weight cur = w;
  int parity = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < rank; ++i) {
      if (cur.coords[i] < 0) {
        cur = reflect_weight(i, cur);
        parity ^= 1;
        changed = true;
      }
    }
  }
  return {cur, parity};
}

long long RootSystem::root_norm2(const ivec& root) const {
  long long acc = 0;
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) acc += root[i] * sym_bilinear[i][j] * root[j];
  return acc;
}

ivec RootSystem::coroot_of_root(const ivec& root) const {
  long long d_r = root_norm2(root) / 2;
  ivec c(rank, 0);
  for (int i = 0; i < rank; ++i) {
    long long num = root[i] * symmetrizer[i];
    assert(num % d_r == 0);
    c[i] = num / d_r;
  }
  return c;
}

long long RootSystem::sip_pair(const Weight& a, const Weight& b) const {
  long long acc = 0;
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) acc += a.coords[i] * sip[i][j] * b.coords[j];
  return acc;
}

int RootSystem::short_node_count() const {
  int c = 0;
  for (long long d : symmetrizer) c += (d == 1);
  return c;
}

long long pairing(const RootSystem& rs, const Weight& w, const ivec& coroot) {
  if (static_cast<int>(w.coords.size()) != rs.rank ||
      static_cast<int>(coroot.size()) != rs.rank)
    throw std::invalid_argument("pairing: dimension mismatch");
  long long acc = 0;
  for (int i = 0; i < rs.rank; ++i) acc += coroot[i] * w.coords[i];
  return acc;
}

std::vector<Weight> dominant_weights_below(const RootSystem& rs, const Weight& mu) {
  if (static_cast<int>(mu.coords.size()) != rs.rank)
    throw std::invalid_argument("dominant_weights_below: rank mismatch");
  if (!mu.is_dominant())
    throw std::invalid_argument("dominant_weights_below: weight not dominant");

  // Covers between dominant weights differ by a positive root, so closing the
  // dominant set under positive-root subtraction is exhaustive.
  std::vector<Weight> roots_w;
  for (const ivec& r : rs.positive_roots) roots_w.push_back(rs.weight_of_root(r));

  std::map<std::pair<long long, ivec>, Weight> out;  // (level, coords) ordered
  std::unordered_set<ivec, IvecHash> seen;
  std::deque<Weight> queue;
  queue.push_back(mu);
  seen.insert(mu.coords);
  while (!queue.empty()) {
    Weight w = queue.front();
    queue.pop_front();
    out.emplace(std::make_pair(rs.level(mu, w), w.coords), w);
    for (const Weight& rw : roots_w) {
      Weight nxt;
      nxt.coords.resize(rs.rank);
      for (int i = 0; i < rs.rank; ++i)
        nxt.coords[i] = w.coords[i] - rw.coords[i];
      if (!nxt.is_dominant()) continue;
      if (seen.insert(nxt.coords).second) queue.push_back(nxt);
    }
  }
  std::vector<Weight> res;
  res.reserve(out.size());
  for (auto& kv : out) res.push_back(kv.second);
  return res;
}

bool is_minuscule(const RootSystem& rs, const Weight& w) {
  if (!w.is_dominant() || w.is_zero()) return false;
  for (const ivec& r : rs.positive_roots) {
    long long p = pairing(rs, w, rs.coroot_of_root(r));
    if (p < -1 || p > 1) return false;
  }
  return true;
}

Weight quasi_minuscule_weight(const RootSystem& rs) {
  return rs.weight_of_root(rs.highest_short_root);
}

bool is_quasi_minuscule(const RootSystem& rs, const Weight& w) {
  if (!w.is_dominant() || w.is_zero()) return false;
  if (w != quasi_minuscule_weight(rs)) return false;
  for (const ivec& r : rs.positive_roots) {
    long long p = pairing(rs, w, rs.coroot_of_root(r));
    assert(p >= -2 && p <= 2);
  }
  return true;
}

std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& w) {
  std::unordered_set<ivec, IvecHash> seen;
  std::deque<Weight> queue;
  std::vector<Weight> orbit;
  queue.push_back(w);
  seen.insert(w.coords);
  while (!queue.empty()) {
    Weight cur = queue.front();
    queue.pop_front();
    orbit.push_back(cur);
    for (int i = 0; i < rs.rank; ++i) {
      Weight nxt = rs.reflect_weight(i, cur);
      if (seen.insert(nxt.coords).second) queue.push_back(nxt);
    }
  }
  return orbit;
}

mpz_class weyl_orbit_size(const RootSystem& rs, const Weight& dominant) {
  return mpz_class(static_cast<unsigned long>(weyl_orbit(rs, dominant).size()));
}

std::vector<ivec> all_roots(const RootSystem& rs) {
  std::vector<ivec> out;
  out.reserve(rs.positive_roots.size() * 2);
  for (const ivec& r : rs.positive_roots) {
    out.push_back(r);
    ivec neg = r;
    for (long long& c : neg) c = -c;
    out.push_back(neg);
  }
  return out;
}

}  // namespace schubert
