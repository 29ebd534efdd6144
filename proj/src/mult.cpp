#include "mult.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <mutex>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace schubert {

namespace {

ivec add_scaled(const ivec& a, long long k, const ivec& b) {
  ivec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += k * b[i];
  return r;
}

// Lazy Freudenthal evaluation over the dominant cone below mu, popped in
// increasing height(mu - lambda). Every multiplicity the recursion consults
// lives at strictly smaller height, so popped values are always final.
struct Engine {
  const RootSystem& rs;
  ivec mu;
  std::vector<ivec> root_w;        // positive roots, weight coordinates
  std::vector<long long> root_ht;
  long long mu_rho_norm;           // det_cartan * (mu+rho, mu+rho)
  std::unordered_map<ivec, mpz_class, IvecHash> value;
  std::set<std::pair<long long, ivec>> frontier;  // (height, coords)
  std::unordered_set<ivec, IvecHash> discovered;

  explicit Engine(const RootSystem& rs_, const Weight& mu_w)
      : rs(rs_), mu(mu_w.coords) {
    for (const ivec& r : rs.positive_roots) {
      root_w.push_back(rs.weight_of_root(r).coords);
      root_ht.push_back(rs.height_of_root_vector(r));
    }
    Weight mu_rho{add_scaled(mu, 1, ivec(rs.rank, 1))};
    mu_rho_norm = rs.sip_pair(mu_rho, mu_rho);
    frontier.insert({0, mu});
    discovered.insert(mu);
  }

  bool exhausted() const { return frontier.empty(); }

  // returns (lambda, multiplicity) of the next weight in height order
  std::pair<Weight, mpz_class> pop() {
    auto [lev, lam] = *frontier.begin();
    frontier.erase(frontier.begin());
    mpz_class m;
    if (lam == mu) {
      m = 1;
    } else {
      mpz_class num = 0;
      for (size_t a = 0; a < root_w.size(); ++a) {
        for (long long k = 1; k * root_ht[a] <= lev; ++k) {
          ivec nu = add_scaled(lam, k, root_w[a]);
          Weight dom = rs.dominantize(Weight{nu}).first;
          auto it = value.find(dom.coords);
          if (it == value.end()) break;  // weight strings are contiguous
          long long pr = rs.sip_pair(Weight{nu}, Weight{root_w[a]});
          num += it->second * static_cast<long>(pr);
        }
      }
      Weight lam_rho{add_scaled(lam, 1, ivec(rs.rank, 1))};
      long long den = mu_rho_norm - rs.sip_pair(lam_rho, lam_rho);
      assert(den > 0);
      num *= 2;
      mpz_class q, r;
      mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(),
                  mpz_class(static_cast<long>(den)).get_mpz_t());
      assert(r == 0);
      m = q;
      assert(m >= 1);
    }
    value.emplace(lam, m);
    for (const ivec& rw : root_w) {
      ivec child = add_scaled(lam, -1, rw);
      bool dom = true;
      for (long long c : child) dom &= (c >= 0);
      if (!dom) continue;
      if (discovered.insert(child).second)
        frontier.insert({rs.level(Weight{mu}, Weight{child}), child});
    }
    return {Weight{lam}, m};
  }
};

void require_dominant(const RootSystem& rs, const Weight& mu) {
  if (static_cast<int>(mu.coords.size()) != rs.rank)
    throw std::invalid_argument("weight rank mismatch");
  if (!mu.is_dominant())
    throw std::invalid_argument("weight is not dominant");
}

std::mutex table_cache_mutex;
std::map<std::pair<std::string, ivec>, MultiplicityTable> table_cache;

}  // namespace

MultiplicityTable mult_table(const RootSystem& rs, const Weight& mu) {
  require_dominant(rs, mu);
  {
    std::lock_guard<std::mutex> lock(table_cache_mutex);
    auto it = table_cache.find({rs.type_label, mu.coords});
    if (it != table_cache.end()) return it->second;
  }
  MultiplicityTable t;
  t.mu = mu;
  Engine eng(rs, mu);
  while (!eng.exhausted()) t.entries.push_back(eng.pop());
  std::lock_guard<std::mutex> lock(table_cache_mutex);
  table_cache.emplace(std::make_pair(rs.type_label, mu.coords), t);
  return t;
}

mpz_class weight_multiplicity(const RootSystem& rs, const Weight& mu,
                              const Weight& lambda) {
  require_dominant(rs, mu);
  if (static_cast<int>(lambda.coords.size()) != rs.rank)
    throw std::invalid_argument("weight rank mismatch");
  Weight lam = rs.dominantize(lambda).first;  // multiplicity is Weyl-invariant
  ivec diff(rs.rank);
  for (int i = 0; i < rs.rank; ++i) diff[i] = mu.coords[i] - lam.coords[i];
  if (!rs.in_root_lattice(Weight{diff})) return 0;
  long long lev = rs.level(mu, lam);
  if (lev < 0) return 0;
  Engine eng(rs, mu);
  while (!eng.exhausted()) {
    if (eng.frontier.begin()->first > lev) return 0;
    auto [w, m] = eng.pop();
    if (w == lam) return m;
  }
  return 0;
}

bool is_wmf(const RootSystem& rs, const Weight& mu) {
  require_dominant(rs, mu);
  Engine eng(rs, mu);
  while (!eng.exhausted()) {
    if (eng.pop().second >= 2) return false;
  }
  return true;
}

mpz_class dim_irrep(const RootSystem& rs, const Weight& mu) {
  require_dominant(rs, mu);
  mpz_class num = 1, den = 1;
  for (const ivec& r : rs.positive_roots) {
    ivec cv = rs.coroot_of_root(r);
    long long n = 0, d = 0;
    for (int i = 0; i < rs.rank; ++i) {
      n += (mu.coords[i] + 1) * cv[i];
      d += cv[i];
    }
    num *= static_cast<long>(n);
    den *= static_cast<long>(d);
  }
  mpz_class q, rem;
  mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  assert(rem == 0);
  return q;
}

mpz_class weight_multiplicity_bruteforce(const RootSystem& rs, const Weight& mu,
                                         const Weight& lambda,
                                         long long height_bound) {
  require_dominant(rs, mu);
  if (static_cast<int>(lambda.coords.size()) != rs.rank)
    throw std::invalid_argument("weight rank mismatch");
  Weight lam = rs.dominantize(lambda).first;
  ivec diff(rs.rank);
  for (int i = 0; i < rs.rank; ++i) diff[i] = mu.coords[i] - lam.coords[i];
  if (!rs.in_root_lattice(Weight{diff})) return 0;
  long long lev = rs.level(mu, lam);
  if (lev < 0) return 0;
  if (lev > height_bound)
    throw LimitError("bruteforce multiplicity refused: height " +
                     std::to_string(lev) + " exceeds bound " +
                     std::to_string(height_bound));

  // Weyl group as the orbit of the regular weight mu + rho, with parity
  ivec start = mu.coords;
  for (long long& c : start) c += 1;
  std::unordered_map<ivec, int, IvecHash> orbit;  // coords -> sign
  std::vector<ivec> queue{start};
  orbit.emplace(start, 1);
  while (!queue.empty()) {
    ivec cur = queue.back();
    queue.pop_back();
    int sign = orbit[cur];
    for (int i = 0; i < rs.rank; ++i) {
      Weight nxt = rs.reflect_weight(i, Weight{cur});
      auto it = orbit.find(nxt.coords);
      if (it == orbit.end()) {
        orbit.emplace(nxt.coords, -sign);
        queue.push_back(nxt.coords);
      } else {
        assert(it->second == -sign);
      }
    }
  }

  // Kostant partition function over positive roots, memoized on suffix state
  std::map<std::pair<size_t, ivec>, mpz_class> memo;
  std::function<mpz_class(size_t, const ivec&)> pf = [&](size_t idx,
                                                         const ivec& v) {
    bool zero = true;
    for (long long c : v) zero &= (c == 0);
    if (zero) return mpz_class(1);
    if (idx == rs.positive_roots.size()) return mpz_class(0);
    auto key = std::make_pair(idx, v);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    mpz_class acc = 0;
    ivec rem = v;
    for (;;) {
      acc += pf(idx + 1, rem);
      bool ok = true;
      for (int i = 0; i < rs.rank; ++i) {
        rem[i] -= rs.positive_roots[idx][i];
        ok &= (rem[i] >= 0);
      }
      if (!ok) break;
    }
    memo.emplace(key, acc);
    return acc;
  };

  ivec lam_rho = lam.coords;
  for (long long& c : lam_rho) c += 1;
  mpz_class total = 0;
  for (const auto& [wcoords, sign] : orbit) {
    ivec target_w(rs.rank);
    for (int i = 0; i < rs.rank; ++i) target_w[i] = wcoords[i] - lam_rho[i];
    Weight tw{target_w};
    if (!rs.in_root_lattice(tw)) continue;
    ivec target = rs.root_coords_of_weight(tw);
    bool nonneg = true;
    for (long long c : target) nonneg &= (c >= 0);
    if (!nonneg) continue;
    total += sign * pf(0, target);
  }
  assert(total >= 0);
  return total;
}

std::vector<HoweRow> howe_table(int max_rank, long long coord_bound) {
  if (max_rank < 1 || coord_bound < 1)
    throw std::invalid_argument("howe_table: bounds must be positive");
  std::vector<std::pair<char, int>> types;
  for (int n = 1; n <= max_rank; ++n) types.push_back({'A', n});
  for (int n = 2; n <= max_rank; ++n) types.push_back({'B', n});
  for (int n = 3; n <= max_rank; ++n) types.push_back({'C', n});
  for (int n = 4; n <= max_rank; ++n) types.push_back({'D', n});
  for (int n = 6; n <= std::min(max_rank, 8); ++n) types.push_back({'E', n});
  if (max_rank >= 4) types.push_back({'F', 4});
  if (max_rank >= 2) types.push_back({'G', 2});

  std::vector<HoweRow> rows;
  for (auto [t, n] : types) {
    RootSystem rs = build(t, n);
    std::set<ivec> weights;
    ivec w(n, 0);
    for (;;) {
      int i = 0;
      while (i < n && w[i] == coord_bound) w[i++] = 0;
      if (i == n) break;
      w[i] += 1;
      weights.insert(w);
    }
    if (t == 'A') {
      for (long long l = 1; l <= std::max<long long>(coord_bound, 6); ++l) {
        ivec w1(n, 0), wn(n, 0);
        w1[0] = l;
        wn[n - 1] = l;
        weights.insert(w1);
        weights.insert(wn);
      }
    }
    for (const ivec& wc : weights)
      rows.push_back({rs.type_label, wc, is_wmf(rs, Weight{wc})});
  }
  return rows;
}

}  // namespace schubert
