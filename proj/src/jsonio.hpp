#pragma once

#include <string>

#include "json.hpp"

#include "classify.hpp"

namespace schubert {

using json = nlohmann::ordered_json;

// integers stay numbers while they fit; anything else becomes an exact
// decimal or "p/q" string
json json_of_integer(const mpz_class& z);
json json_of_rational(const mpq_class& q);

json matrix_to_json(const LaurentMatrix& m);
LaurentMatrix matrix_from_json(const json& doc);

json wmf_json(const RootSystem& rs, const Weight& mu);
json mult_table_json(const RootSystem& rs, const Weight& mu);
json fold_json(const std::string& type_label, int rank, int order);
json fold_case_json(const std::string& case_name, int n);
json howe_json(int max_rank, long long coord_bound);
json classify_json(int max_rank, long long coord_bound);
json kumar_json(char case_ab, int l);
json pu3_tower_json(int l_max);
json triality_json(const std::string& check, unsigned seed);
json smith_json(const json& matrix_doc);

// aligned plain-text rendering of a report document
std::string render_table(const json& doc);

}  // namespace schubert
