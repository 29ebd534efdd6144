#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rootsys.hpp"

namespace schubert {

// Thrown when an operation refuses an input to bound runtime.
struct LimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MultiplicityTable {
  Weight mu;
  // dominant lambda <= mu with multiplicities, ordered by increasing
  // height(mu - lambda), lex tie-break; first entry is (mu, 1)
  std::vector<std::pair<Weight, mpz_class>> entries;
};

// Freudenthal recursion, evaluated lazily in increasing height(mu - lambda).
mpz_class weight_multiplicity(const RootSystem& rs, const Weight& mu,
                              const Weight& lambda);

// Kostant alternating sum over the Weyl orbit of mu + rho with a partition
// function DP; independent oracle for weight_multiplicity.
mpz_class weight_multiplicity_bruteforce(const RootSystem& rs, const Weight& mu,
                                         const Weight& lambda,
                                         long long height_bound = 12);

mpz_class dim_irrep(const RootSystem& rs, const Weight& mu);

bool is_wmf(const RootSystem& rs, const Weight& mu);

MultiplicityTable mult_table(const RootSystem& rs, const Weight& mu);

struct HoweRow {
  std::string type_label;
  ivec weight;
  bool wmf;
};

// Scan of all irreducible types of rank <= max_rank over nonzero dominant
// weights with coordinates <= coord_bound; type A additionally gets l*omega_1
// and l*omega_n up to l = max(coord_bound, 6).
std::vector<HoweRow> howe_table(int max_rank, long long coord_bound);

}  // namespace schubert
