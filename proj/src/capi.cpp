#include "schubert.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "classify.hpp"
#include "jsonio.hpp"

using namespace schubert;

namespace {

thread_local std::string g_last_error;

const RootSystem* unwrap(const schubert_rootsys* rs) {
  return reinterpret_cast<const RootSystem*>(rs);
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

schubert_status fail(schubert_status st, const std::string& what) {
  g_last_error = what;
  return st;
}

template <typename F>
schubert_status guarded(F&& f) {
  try {
    f();
    return SCHUBERT_OK;
  } catch (const std::invalid_argument& e) {
    return fail(SCHUBERT_ERR_INVALID_ARGUMENT, e.what());
  } catch (const LimitError& e) {
    return fail(SCHUBERT_ERR_LIMIT, e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(SCHUBERT_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(SCHUBERT_ERR_INTERNAL, e.what());
  }
}

RootSystem build_from(const char* type_label, int rank) {
  if (type_label == nullptr)
    throw std::invalid_argument("type label is null");
  std::string label(type_label);
  if (rank > 0 && label.size() == 1) return build(label[0], rank);
  return build(label);
}

Weight weight_from(const RootSystem& rs, const long long* coords) {
  if (coords == nullptr) throw std::invalid_argument("weight array is null");
  return Weight(ivec(coords, coords + rs.rank));
}

void emit(char** out, const std::string& s) {
  if (out == nullptr) throw std::invalid_argument("output pointer is null");
  *out = dup_string(s);
  if (*out == nullptr) throw std::bad_alloc();
}

void emit_json(char** out, const json& j) { emit(out, j.dump(2)); }

}  // namespace

// ---- plumbing ----

const char* schubert_version(void) { return "1.0.0"; }

const char* schubert_last_error(void) { return g_last_error.c_str(); }

void schubert_string_free(char* s) { std::free(s); }

// ---- root systems ----

schubert_status schubert_rootsys_create(const char* type_label, int rank,
                                        schubert_rootsys** out) {
  return guarded([&] {
    if (out == nullptr) throw std::invalid_argument("output pointer is null");
    RootSystem rs = build_from(type_label, rank);
    *out = reinterpret_cast<schubert_rootsys*>(new RootSystem(std::move(rs)));
  });
}

void schubert_rootsys_destroy(schubert_rootsys* rs) {
  delete reinterpret_cast<RootSystem*>(rs);
}

int schubert_rootsys_rank(const schubert_rootsys* rs) {
  return rs == nullptr ? 0 : unwrap(rs)->rank;
}

long long schubert_rootsys_positive_root_count(const schubert_rootsys* rs) {
  return rs == nullptr
             ? 0
             : static_cast<long long>(unwrap(rs)->positive_roots.size());
}

schubert_status schubert_pairing(const schubert_rootsys* rs,
                                 const long long* weight,
                                 const long long* coroot, long long* out) {
  return guarded([&] {
    if (rs == nullptr || out == nullptr)
      throw std::invalid_argument("null argument");
    const RootSystem& r = *unwrap(rs);
    Weight w = weight_from(r, weight);
    if (coroot == nullptr) throw std::invalid_argument("coroot array is null");
    *out = pairing(r, w, ivec(coroot, coroot + r.rank));
  });
}

namespace {

template <typename Pred>
schubert_status predicate_call(const schubert_rootsys* rs,
                               const long long* weight, int* out, Pred pred) {
  return guarded([&] {
    if (rs == nullptr || out == nullptr)
      throw std::invalid_argument("null argument");
    const RootSystem& r = *unwrap(rs);
    *out = pred(r, weight_from(r, weight)) ? 1 : 0;
  });
}

}  // namespace

schubert_status schubert_is_minuscule(const schubert_rootsys* rs,
                                      const long long* weight, int* out) {
  return predicate_call(rs, weight, out,
                        [](const RootSystem& r, const Weight& w) {
                          return is_minuscule(r, w);
                        });
}

schubert_status schubert_is_quasi_minuscule(const schubert_rootsys* rs,
                                            const long long* weight, int* out) {
  return predicate_call(rs, weight, out,
                        [](const RootSystem& r, const Weight& w) {
                          return is_quasi_minuscule(r, w);
                        });
}

schubert_status schubert_is_wmf(const schubert_rootsys* rs,
                                const long long* weight, int* out) {
  return predicate_call(
      rs, weight, out,
      [](const RootSystem& r, const Weight& w) { return is_wmf(r, w); });
}

schubert_status schubert_weight_multiplicity(const schubert_rootsys* rs,
                                             const long long* mu,
                                             const long long* lambda,
                                             char** out) {
  return guarded([&] {
    if (rs == nullptr) throw std::invalid_argument("null root system");
    const RootSystem& r = *unwrap(rs);
    mpz_class m = weight_multiplicity(r, weight_from(r, mu), weight_from(r, lambda));
    emit(out, m.get_str());
  });
}

schubert_status schubert_dim_irrep(const schubert_rootsys* rs,
                                   const long long* mu, char** out) {
  return guarded([&] {
    if (rs == nullptr) throw std::invalid_argument("null root system");
    const RootSystem& r = *unwrap(rs);
    emit(out, dim_irrep(r, weight_from(r, mu)).get_str());
  });
}

// ---- JSON pipelines ----

schubert_status schubert_mult_table_json(const schubert_rootsys* rs,
                                         const long long* mu, char** out_json) {
  return guarded([&] {
    if (rs == nullptr) throw std::invalid_argument("null root system");
    const RootSystem& r = *unwrap(rs);
    emit_json(out_json, mult_table_json(r, weight_from(r, mu)));
  });
}

schubert_status schubert_wmf_json(const schubert_rootsys* rs,
                                  const long long* mu, char** out_json) {
  return guarded([&] {
    if (rs == nullptr) throw std::invalid_argument("null root system");
    const RootSystem& r = *unwrap(rs);
    emit_json(out_json, wmf_json(r, weight_from(r, mu)));
  });
}

schubert_status schubert_fold_json(const char* type_label, int rank, int order,
                                   char** out_json) {
  return guarded([&] {
    if (type_label == nullptr) throw std::invalid_argument("type label is null");
    emit_json(out_json, fold_json(type_label, rank, order));
  });
}

schubert_status schubert_fold_case_json(const char* case_name, int n,
                                        char** out_json) {
  return guarded([&] {
    if (case_name == nullptr) throw std::invalid_argument("case name is null");
    emit_json(out_json, fold_case_json(case_name, n));
  });
}

schubert_status schubert_kumar_json(const char* case_ab, int l, char** out_json) {
  return guarded([&] {
    if (case_ab == nullptr || std::strlen(case_ab) != 1 ||
        (case_ab[0] != 'A' && case_ab[0] != 'B'))
      throw std::invalid_argument("case must be \"A\" or \"B\"");
    emit_json(out_json, kumar_json(case_ab[0], l));
  });
}

schubert_status schubert_triality_json(const char* check, unsigned seed,
                                       char** out_json) {
  bool ok = false;
  schubert_status st = guarded([&] {
    std::string c = check == nullptr ? "all" : check;
    json j = triality_json(c, seed);
    ok = j.at("ok").get<bool>();
    emit_json(out_json, j);
  });
  if (st != SCHUBERT_OK) return st;
  if (!ok) return fail(SCHUBERT_ERR_VERIFICATION, "triality check failed");
  return SCHUBERT_OK;
}

schubert_status schubert_smith_json(const char* matrix_json, char** out_json) {
  return guarded([&] {
    if (matrix_json == nullptr)
      throw std::invalid_argument("matrix document is null");
    emit_json(out_json, smith_json(json::parse(matrix_json)));
  });
}

schubert_status schubert_howe_json(int max_rank, int coord_bound,
                                   char** out_json) {
  return guarded([&] {
    if (max_rank < 1 || coord_bound < 1)
      throw std::invalid_argument("bounds must be positive");
    emit_json(out_json, howe_json(max_rank, coord_bound));
  });
}

schubert_status schubert_classify_json(int max_rank, int coord_bound,
                                       char** out_json) {
  return guarded([&] {
    if (max_rank < 1 || coord_bound < 1)
      throw std::invalid_argument("bounds must be positive");
    emit_json(out_json, classify_json(max_rank, coord_bound));
  });
}

schubert_status schubert_render_table(const char* json_doc, char** out_text) {
  return guarded([&] {
    if (json_doc == nullptr) throw std::invalid_argument("document is null");
    emit(out_text, render_table(json::parse(json_doc)));
  });
}

schubert_status schubert_pu3_tower_json(int l_max, char** out_json) {
  bool ok = false;
  schubert_status st = guarded([&] {
    json j = pu3_tower_json(l_max);
    ok = j.at("ok").get<bool>();
    emit_json(out_json, j);
  });
  if (st != SCHUBERT_OK) return st;
  if (!ok) return fail(SCHUBERT_ERR_VERIFICATION, "tower expectations failed");
  return SCHUBERT_OK;
}
