#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace schubert {

using ivec = std::vector<long long>;
using imat = std::vector<ivec>;

// Fundamental-weight coordinates: coords[i] = <lambda, alpha_i^vee>.
struct Weight {
  ivec coords;

  Weight() = default;
  explicit Weight(ivec c) : coords(std::move(c)) {}

  bool operator==(const Weight& o) const { return coords == o.coords; }
  bool operator!=(const Weight& o) const { return coords != o.coords; }
  bool operator<(const Weight& o) const { return coords < o.coords; }
  bool is_zero() const {
    for (long long c : coords)
      if (c != 0) return false;
    return true;
  }
  bool is_dominant() const {
    for (long long c : coords)
      if (c < 0) return false;
    return true;
  }
};

// Finite irreducible root system in Bourbaki numbering. Roots are kept in
// simple-root coordinates, weights in fundamental-weight coordinates; the two
// are related by w = cartan * r with cartan[i][j] = <alpha_j, alpha_i^vee>.
struct RootSystem {
  char type = 0;
  int rank = 0;
  std::string type_label;

  imat cartan;       // cartan[i][j] = <alpha_j, alpha_i^vee>
  ivec symmetrizer;  // d_i = (alpha_i, alpha_i)/2, short roots have d_i = 1

  std::vector<ivec> positive_roots;  // sorted by (height, lex)
  ivec two_rho;                      // sum of positive roots, root coordinates
  ivec highest_root;
  ivec highest_short_root;  // equals highest_root when simply laced

  // derived linear algebra, scaled to stay integral
  imat adj_cartan;   // adjugate of cartan
  long long det_cartan = 0;
  imat sym_bilinear;  // B[i][j] = (alpha_i, alpha_j) = d_i * cartan[i][j]
  imat sip;           // det_cartan * (lambda, mu) = w(lambda)^T sip w(mu)

  std::vector<mpq_class> rho() const;  // root coordinates of rho

  // roots <-> weights
  Weight weight_of_root(const ivec& root) const;
  // exact only on the root lattice; asserts divisibility
  ivec root_coords_of_weight(const Weight& w) const;
  bool in_root_lattice(const Weight& w) const;
  long long height_of_root_vector(const ivec& root) const;
  // height of mu - lambda as a root-lattice vector
  long long level(const Weight& mu, const Weight& lambda) const;

  // simple reflections
  ivec reflect_root(int i, const ivec& root) const;
  Weight reflect_weight(int i, const Weight& w) const;
  // dominant representative plus the parity of the reflection chain used
  std::pair<Weight, int> dominantize(const Weight& w) const;

  long long root_norm2(const ivec& root) const;            // (root, root)
  ivec coroot_of_root(const ivec& root) const;             // simple-coroot coords
  long long sip_pair(const Weight& a, const Weight& b) const;  // det_cartan*(a,b)

  int short_node_count() const;
};

RootSystem build(char type, int rank);
RootSystem build(const std::string& type_label);
bool valid_type(char type, int rank);

// <w, sum c_i alpha_i^vee> = sum c_i w_i
long long pairing(const RootSystem& rs, const Weight& w, const ivec& coroot);

// All dominant lambda with mu - lambda a nonnegative integral combination of
// simple roots; mu first, then increasing level, lex tie-break.
std::vector<Weight> dominant_weights_below(const RootSystem& rs, const Weight& mu);

bool is_minuscule(const RootSystem& rs, const Weight& w);
bool is_quasi_minuscule(const RootSystem& rs, const Weight& w);
Weight quasi_minuscule_weight(const RootSystem& rs);

mpz_class weyl_orbit_size(const RootSystem& rs, const Weight& dominant);
std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& w);

// full root set (positive and negative), for orbit/closure checks
std::vector<ivec> all_roots(const RootSystem& rs);

struct IvecHash {
  size_t operator()(const ivec& v) const {
    size_t h = 1469598103934665603ull;
    for (long long x : v) {
      h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace schubert
