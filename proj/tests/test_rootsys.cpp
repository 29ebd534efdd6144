#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "rootsys.hpp"

using namespace schubert;

namespace {

// Independent oracle for dominant_weights_below: walk the box of root-lattice
// drops 0 <= k_i <= bound and keep the dominant ones. The bound is safe as
// long as it exceeds every coefficient of mu - lambda that can occur; for the
// small systems used here height(mu) drops suffice.
std::vector<Weight> dominant_below_oracle(const RootSystem& rs, const Weight& mu,
                                          long long bound) {
  std::vector<Weight> out;
  ivec k(rs.rank, 0);
  while (true) {
    ivec wc(rs.rank);
    for (int i = 0; i < rs.rank; ++i) {
      wc[i] = mu.coords[i];
      for (int j = 0; j < rs.rank; ++j) wc[i] -= rs.cartan[i][j] * k[j];
    }
    Weight lam{wc};
    if (lam.is_dominant()) out.push_back(lam);
    int p = 0;
    while (p < rs.rank && k[p] == bound) k[p++] = 0;
    if (p == rs.rank) break;
    ++k[p];
  }
  std::sort(out.begin(), out.end(), [&](const Weight& a, const Weight& b) {
    long long la = rs.level(mu, a), lb = rs.level(mu, b);
    if (la != lb) return la < lb;
    return a.coords < b.coords;
  });
  return out;
}

long long expected_positive_count(char t, int n) {
  switch (t) {
    case 'A': return static_cast<long long>(n) * (n + 1) / 2;
    case 'B':
    case 'C': return static_cast<long long>(n) * n;
    case 'D': return static_cast<long long>(n) * (n - 1);
    case 'E': return n == 6 ? 36 : (n == 7 ? 63 : 120);
    case 'F': return 24;
    case 'G': return 6;
  }
  return -1;
}

}  // namespace

TEST_SUITE("rootsys") {

TEST_CASE("cartan tables") {
  RootSystem a2 = build('A', 2);
  CHECK(a2.cartan == imat{{2, -1}, {-1, 2}});
  CHECK(a2.symmetrizer == ivec{1, 1});

  RootSystem g2 = build('G', 2);
  CHECK(g2.cartan == imat{{2, -3}, {-1, 2}});
  CHECK(g2.symmetrizer == ivec{1, 3});

  RootSystem b3 = build('B', 3);
  CHECK(b3.cartan[1][2] == -1);
  CHECK(b3.cartan[2][1] == -2);  // alpha_3 short
  CHECK(b3.symmetrizer == ivec{2, 2, 1});

  RootSystem c3 = build('C', 3);
  CHECK(c3.cartan[1][2] == -2);
  CHECK(c3.cartan[2][1] == -1);
  CHECK(c3.symmetrizer == ivec{1, 1, 2});

  RootSystem f4 = build('F', 4);
  CHECK(f4.cartan[1][2] == -1);  // row = coroot: <a3, a2^vee> = -1, <a2, a3^vee> = -2
  CHECK(f4.cartan[2][1] == -2);
  CHECK(f4.symmetrizer == ivec{2, 2, 1, 1});
  CHECK(f4.short_node_count() == 2);
  CHECK(b3.short_node_count() == 1);
  CHECK(c3.short_node_count() == 2);
  CHECK(g2.short_node_count() == 1);
}

TEST_CASE("positive root counts") {
  for (int n = 1; n <= 6; ++n) CHECK(expected_positive_count('A', n) ==
                                     (long long)build('A', n).positive_roots.size());
  for (int n = 2; n <= 6; ++n) CHECK(expected_positive_count('B', n) ==
                                     (long long)build('B', n).positive_roots.size());
  for (int n = 3; n <= 6; ++n) CHECK(expected_positive_count('C', n) ==
                                     (long long)build('C', n).positive_roots.size());
  for (int n = 4; n <= 6; ++n) CHECK(expected_positive_count('D', n) ==
                                     (long long)build('D', n).positive_roots.size());
  CHECK(build('E', 6).positive_roots.size() == 36);
  CHECK(build('E', 7).positive_roots.size() == 63);
  CHECK(build('E', 8).positive_roots.size() == 120);
  CHECK(build('F', 4).positive_roots.size() == 24);
  CHECK(build('G', 2).positive_roots.size() == 6);
}

TEST_CASE("labeled aliases") {
  RootSystem b1 = build("B1");
  CHECK(b1.rank == 1);
  CHECK(b1.cartan == imat{{2}});

  RootSystem c2 = build("C2");
  RootSystem b2 = build("B2");
  CHECK(c2.cartan[0][1] == b2.cartan[1][0]);
  CHECK(c2.cartan[1][0] == b2.cartan[0][1]);
  CHECK(c2.positive_roots.size() == 4);

  // D3 is A3 with node 0 in the middle
  RootSystem d3 = build("D3");
  CHECK(d3.positive_roots.size() == 6);
  CHECK(d3.cartan[0][1] == -1);
  CHECK(d3.cartan[0][2] == -1);
  CHECK(d3.cartan[1][2] == 0);

  CHECK(valid_type('D', 3));
  CHECK_FALSE(valid_type('D', 2));
  CHECK_FALSE(valid_type('E', 5));
  CHECK_FALSE(valid_type('G', 3));
}

TEST_CASE("two_rho and highest roots") {
  RootSystem d4 = build('D', 4);
  CHECK(d4.positive_roots.size() == 12);
  CHECK(d4.highest_root == ivec{1, 2, 1, 1});
  CHECK(d4.two_rho == ivec{6, 10, 6, 6});
  CHECK(d4.weight_of_root(d4.two_rho) == Weight{ivec{2, 2, 2, 2}});

  // <2rho, alpha_i^vee> = 2 in every type
  for (std::string label : {"A3", "B4", "C5", "D6", "E6", "F4", "G2"}) {
    RootSystem rs = build(label);
    Weight w = rs.weight_of_root(rs.two_rho);
    for (int i = 0; i < rs.rank; ++i) CHECK(w.coords[i] == 2);
  }

  RootSystem g2 = build('G', 2);
  CHECK(g2.highest_root == ivec{3, 2});        // long
  CHECK(g2.highest_short_root == ivec{2, 1});  // = 2a1 + a2
  CHECK(g2.weight_of_root(g2.highest_short_root) == Weight{ivec{1, 0}});
}

TEST_CASE("roots and weights round trip") {
  for (std::string label : {"A2", "B3", "C3", "D4", "G2", "F4"}) {
    RootSystem rs = build(label);
    for (const ivec& r : rs.positive_roots) {
      Weight w = rs.weight_of_root(r);
      CHECK(rs.root_coords_of_weight(w) == r);
      CHECK(rs.in_root_lattice(w));
      CHECK(rs.height_of_root_vector(r) >= 1);
    }
  }
  // A2 weight lattice / root lattice has index 3
  RootSystem a2 = build('A', 2);
  CHECK_FALSE(a2.in_root_lattice(Weight{ivec{1, 0}}));
  CHECK_FALSE(a2.in_root_lattice(Weight{ivec{0, 1}}));
  CHECK(a2.in_root_lattice(Weight{ivec{1, 1}}));
}

TEST_CASE("norms and coroots") {
  RootSystem g2 = build('G', 2);
  CHECK(g2.root_norm2(ivec{1, 0}) == 2);
  CHECK(g2.root_norm2(ivec{0, 1}) == 6);
  CHECK(g2.root_norm2(g2.highest_root) == 6);
  CHECK(g2.root_norm2(g2.highest_short_root) == 2);

  // coroot coords are in the simple-coroot basis; short roots pick up d_i
  CHECK(g2.coroot_of_root(ivec{0, 1}) == ivec{0, 1});
  CHECK(g2.coroot_of_root(ivec{1, 0}) == ivec{1, 0});
  CHECK(g2.coroot_of_root(g2.highest_short_root) == ivec{2, 3});

  RootSystem b2 = build('B', 2);
  CHECK(b2.root_norm2(ivec{1, 0}) == 4);
  CHECK(b2.root_norm2(ivec{0, 1}) == 2);

  // sip_pair is det_cartan * (.,.) and symmetric
  RootSystem c3 = build('C', 3);
  Weight u{ivec{1, 0, 2}}, v{ivec{0, 3, 1}};
  CHECK(c3.sip_pair(u, v) == c3.sip_pair(v, u));
  Weight alpha1 = c3.weight_of_root(ivec{1, 0, 0});
  CHECK(c3.sip_pair(alpha1, alpha1) == 2 * c3.det_cartan);
}

TEST_CASE("simple reflections and dominantize") {
  RootSystem b2 = build('B', 2);
  for (int i = 0; i < 2; ++i) {
    for (const ivec& r : b2.positive_roots) {
      CHECK(b2.reflect_root(i, b2.reflect_root(i, r)) == r);
      CHECK(b2.weight_of_root(b2.reflect_root(i, r)) ==
            b2.reflect_weight(i, b2.weight_of_root(r)));
    }
  }
  // s_i(alpha_i) = -alpha_i
  CHECK(b2.reflect_root(0, ivec{1, 0}) == ivec{-1, 0});

  RootSystem g2 = build('G', 2);
  Weight w{ivec{-1, 2}};
  auto [dom, parity] = g2.dominantize(w);
  CHECK(dom.is_dominant());
  CHECK((parity == 0 || parity == 1));
  CHECK(g2.dominantize(dom).first == dom);
  CHECK(g2.dominantize(dom).second == 0);
  // orbit membership: dominantize of any orbit element gives the same rep
  for (const Weight& x : weyl_orbit(g2, dom)) CHECK(g2.dominantize(x).first == dom);
}

TEST_CASE("dominant weights below, against the box oracle") {
  struct Probe { std::string label; ivec mu; };
  std::vector<Probe> probes = {
      {"A2", {1, 1}}, {"A2", {2, 2}}, {"B2", {2, 1}}, {"G2", {0, 1}},
      {"G2", {1, 1}}, {"A3", {1, 1, 1}}, {"C3", {1, 0, 1}}, {"B3", {0, 0, 2}},
  };
  for (const auto& p : probes) {
    RootSystem rs = build(p.label);
    Weight mu{p.mu};
    std::vector<Weight> got = dominant_weights_below(rs, mu);
    std::vector<Weight> want = dominant_below_oracle(rs, mu, 12);
    REQUIRE(got.size() == want.size());
    for (size_t i = 0; i < got.size(); ++i) CHECK(got[i] == want[i]);
    REQUIRE(!got.empty());
    CHECK(got.front() == mu);
    for (const Weight& lam : got) CHECK(rs.level(mu, lam) >= 0);
  }

  // frozen counts: G2 adjoint has 3 dominant weights, A2 adjoint 2
  CHECK(dominant_weights_below(build("G2"), Weight{ivec{0, 1}}).size() == 3);
  CHECK(dominant_weights_below(build("A2"), Weight{ivec{1, 1}}).size() == 2);
}

TEST_CASE("minuscule and quasi-minuscule classification") {
  // minuscule nodes in Bourbaki order
  std::map<std::string, std::set<int>> minu = {
      {"A3", {0, 1, 2}}, {"B3", {2}}, {"C3", {0}}, {"D4", {0, 2, 3}},
      {"D5", {0, 3, 4}}, {"E6", {0, 5}}, {"E7", {6}}, {"E8", {}},
      {"F4", {}}, {"G2", {}},
  };
  for (const auto& [label, nodes] : minu) {
    RootSystem rs = build(label);
    for (int i = 0; i < rs.rank; ++i) {
      ivec e(rs.rank, 0);
      e[i] = 1;
      CHECK(is_minuscule(rs, Weight{e}) == (nodes.count(i) > 0));
    }
  }

  // qm weight is the highest short root; never minuscule
  for (std::string label : {"A2", "B3", "C3", "D4", "G2", "F4"}) {
    RootSystem rs = build(label);
    Weight qm = quasi_minuscule_weight(rs);
    CHECK(qm == rs.weight_of_root(rs.highest_short_root));
    CHECK(is_quasi_minuscule(rs, qm));
    CHECK_FALSE(is_minuscule(rs, qm));
  }
  CHECK(quasi_minuscule_weight(build("G2")) == Weight{ivec{1, 0}});
  CHECK(quasi_minuscule_weight(build("B3")) == Weight{ivec{1, 0, 0}});
  CHECK(quasi_minuscule_weight(build("C3")) == Weight{ivec{0, 1, 0}});
  CHECK(quasi_minuscule_weight(build("A2")) == Weight{ivec{1, 1}});

  // pairings of a qm weight with coroots stay within |.| <= 2
  RootSystem g2 = build('G', 2);
  Weight qm = quasi_minuscule_weight(g2);
  for (const ivec& r : g2.positive_roots) {
    long long p = pairing(g2, qm, g2.coroot_of_root(r));
    CHECK(p <= 2);
    CHECK(p >= -2);
  }
  CHECK(pairing(g2, qm, g2.coroot_of_root(g2.highest_short_root)) == 2);
}

TEST_CASE("weyl orbits") {
  RootSystem a2 = build('A', 2);
  CHECK(weyl_orbit_size(a2, Weight{ivec{1, 0}}) == 3);
  CHECK(weyl_orbit_size(a2, Weight{ivec{1, 1}}) == 6);
  CHECK(weyl_orbit(a2, Weight{ivec{1, 1}}).size() == 6);

  RootSystem g2 = build('G', 2);
  CHECK(weyl_orbit_size(g2, Weight{ivec{1, 0}}) == 6);  // short roots
  CHECK(weyl_orbit_size(g2, Weight{ivec{0, 1}}) == 6);  // long roots
  CHECK(weyl_orbit_size(g2, Weight{ivec{1, 1}}) == 12);

  RootSystem b3 = build('B', 3);
  CHECK(weyl_orbit_size(b3, Weight{ivec{0, 0, 1}}) == 8);  // spin
  CHECK(weyl_orbit_size(b3, Weight{ivec{1, 0, 0}}) == 6);

  // enumerated orbit agrees with the counting formula
  for (std::string label : {"A3", "B3", "C3"}) {
    RootSystem rs = build(label);
    Weight mu = quasi_minuscule_weight(rs);
    CHECK(weyl_orbit_size(rs, mu) == mpz_class((long)weyl_orbit(rs, mu).size()));
  }
}

TEST_CASE("all_roots covers both signs") {
  RootSystem d4 = build('D', 4);
  std::vector<ivec> all = all_roots(d4);
  CHECK(all.size() == 24);
  std::set<ivec> seen(all.begin(), all.end());
  CHECK(seen.size() == 24);
  for (const ivec& r : d4.positive_roots) {
    CHECK(seen.count(r) == 1);
    ivec neg(r.size());
    for (size_t i = 0; i < r.size(); ++i) neg[i] = -r[i];
    CHECK(seen.count(neg) == 1);
  }
}

TEST_CASE("invalid input") {
  CHECK_THROWS_AS(build('H', 3), std::invalid_argument);
  CHECK_THROWS_AS(build('A', 0), std::invalid_argument);
  CHECK_THROWS_AS(build("E9"), std::invalid_argument);
  CHECK_THROWS_AS(build(""), std::invalid_argument);
  RootSystem a2 = build('A', 2);
  CHECK_THROWS_AS(pairing(a2, Weight{ivec{1}}, ivec{1, 0}), std::invalid_argument);
}

}  // TEST_SUITE
