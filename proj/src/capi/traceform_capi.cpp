// SPDX-License-Identifier: MIT
//
// C boundary of the library. Every entry point catches all exceptions,
// maps them to tf_status codes, and stashes the message in a thread-local
// buffer queried via tf_last_error(). Arbitrary-precision values cross as
// malloc'd decimal strings released by tf_string_free().

#define TF_API __attribute__((visibility("default")))

#include "traceform/traceform.h"

#include "core/chevalley.hpp"
#include "core/classify.hpp"
#include "core/numeric.hpp"

#include "json.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

using json = nlohmann::ordered_json;
using namespace traceform;

extern "C" {
struct tf_root_system {
  std::shared_ptr<const RootSystem> rs;
};
struct tf_group {
  GroupForm form;
};
}

namespace {

thread_local std::string tl_error;

tf_status map_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidArgument: return TF_ERR_INVALID_ARGUMENT;
    case ErrorCode::CapExceeded:     return TF_ERR_CAP_EXCEEDED;
    case ErrorCode::NotStabilized:   return TF_ERR_NOT_STABILIZED;
    case ErrorCode::Overflow:        return TF_ERR_OVERFLOW;
    case ErrorCode::OutOfScope:      return TF_ERR_OUT_OF_SCOPE;
    case ErrorCode::Internal:        return TF_ERR_INTERNAL;
  }
  return TF_ERR_INTERNAL;
}

// Runs the body, translating exceptions into status codes.
template <typename Fn>
tf_status guarded(Fn&& fn) {
  try {
    fn();
    return TF_OK;
  } catch (const Error& e) {
    tl_error = e.what();
    return map_code(e.code());
  } catch (const std::bad_alloc&) {
    tl_error = "out of memory";
    return TF_ERR_INTERNAL;
  } catch (const std::exception& e) {
    tl_error = e.what();
    return TF_ERR_INTERNAL;
  } catch (...) {
    tl_error = "unknown error";
    return TF_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool cond, const char* what) {
  if (!cond) fail(ErrorCode::InvalidArgument, what);
}

std::span<const int64_t> weight_span(const tf_root_system* rs,
                                     const int64_t* weight, size_t len) {
  require(rs != nullptr, "root system handle is null");
  require(weight != nullptr || len == 0, "weight pointer is null");
  require(len == static_cast<size_t>(rs->rs->rank()),
          "weight length does not match the rank");
  return {weight, len};
}

Int parse_int(const char* text, const char* what) {
  require(text != nullptr, what);
  try {
    return Int(text);
  } catch (const std::exception&) {
    fail(ErrorCode::InvalidArgument,
         std::string(what) + ": not a decimal integer: '" + text + "'");
  }
}

std::vector<std::string> decimals(const std::vector<Int>& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const Int& x : v) out.push_back(x.str());
  return out;
}

}  // namespace

extern "C" {

TF_API const char* tf_version(void) { return "1.0.0"; }

TF_API const char* tf_last_error(void) { return tl_error.c_str(); }

TF_API void tf_string_free(char* s) { std::free(s); }

/* ------------------------------------------------------------------ */

TF_API tf_status tf_root_system_create(char type, int rank,
                                       tf_root_system** out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    *out = new tf_root_system{RootSystem::create(type, rank)};
  });
}

TF_API void tf_root_system_free(tf_root_system* rs) { delete rs; }

TF_API int tf_root_system_rank(const tf_root_system* rs) {
  return rs == nullptr ? -1 : rs->rs->rank();
}

TF_API tf_status tf_root_system_info_json(const tf_root_system* rs,
                                          char** out_json) {
  return guarded([&] {
    require(rs != nullptr, "root system handle is null");
    require(out_json != nullptr, "output pointer is null");
    const RootSystem& r = *rs->rs;
    FundamentalGroup fg(r);
    json j;
    j["type"] = std::string(1, r.type());
    j["rank"] = r.rank();
    j["roots"] = r.root_count();
    j["long_roots"] = r.long_root_count();
    j["short_roots"] = r.short_root_count();
    j["coxeter"] = r.coxeter_number();
    j["dual_coxeter"] = r.dual_coxeter_number();
    j["weyl_order"] = r.weyl_order().str();
    j["fundamental_group"] = fg.invariants();
    *out_json = dup_string(j.dump());
  });
}

TF_API tf_status tf_orbit_size(const tf_root_system* rs, const int64_t* weight,
                               size_t len, char** out_decimal) {
  return guarded([&] {
    require(out_decimal != nullptr, "output pointer is null");
    auto w = weight_span(rs, weight, len);
    *out_decimal = dup_string(rs->rs->orbit_size(w).str());
  });
}

TF_API tf_status tf_orbit_index(const tf_root_system* rs,
                                const int64_t* weight, size_t len,
                                char** out_decimal) {
  return guarded([&] {
    require(out_decimal != nullptr, "output pointer is null");
    auto w = weight_span(rs, weight, len);
    *out_decimal = dup_string(orbit_index_closed(*rs->rs, w).str());
  });
}

TF_API tf_status tf_irrep_dimension(const tf_root_system* rs,
                                    const int64_t* weight, size_t len,
                                    char** out_decimal) {
  return guarded([&] {
    require(out_decimal != nullptr, "output pointer is null");
    auto w = weight_span(rs, weight, len);
    *out_decimal = dup_string(irrep_dimension(*rs->rs, w).str());
  });
}

TF_API tf_status tf_irrep_index(const tf_root_system* rs,
                                const int64_t* weight, size_t len,
                                int64_t dimension_cap, char** out_decimal) {
  return guarded([&] {
    require(out_decimal != nullptr, "output pointer is null");
    auto w = weight_span(rs, weight, len);
    const uint64_t cap = dimension_cap <= 0
                             ? kDefaultDimensionCap
                             : static_cast<uint64_t>(dimension_cap);
    *out_decimal = dup_string(irrep_index(*rs->rs, w, cap).str());
  });
}

TF_API tf_status tf_tensor_index(const char* dim1, const char* index1,
                                 const char* dim2, const char* index2,
                                 char** out_decimal) {
  return guarded([&] {
    require(out_decimal != nullptr, "output pointer is null");
    Int d1 = parse_int(dim1, "dim1");
    Int i1 = parse_int(index1, "index1");
    Int d2 = parse_int(dim2, "dim2");
    Int i2 = parse_int(index2, "index2");
    *out_decimal = dup_string(tensor_index(d1, i1, d2, i2).str());
  });
}

/* ------------------------------------------------------------------ */

TF_API tf_status tf_group_parse(const char* label, tf_group** out) {
  return guarded([&] {
    require(label != nullptr, "label is null");
    require(out != nullptr, "output pointer is null");
    *out = new tf_group{parse_group(label)};
  });
}

TF_API void tf_group_free(tf_group* g) { delete g; }

TF_API tf_status tf_group_label(const tf_group* g, char** out) {
  return guarded([&] {
    require(g != nullptr, "group handle is null");
    require(out != nullptr, "output pointer is null");
    *out = dup_string(g->form.label);
  });
}

TF_API tf_status tf_group_info_json(const tf_group* g, char** out_json) {
  return guarded([&] {
    require(g != nullptr, "group handle is null");
    require(out_json != nullptr, "output pointer is null");
    LatticePresentation lp = resolve_lattices(g->form);
    json j;
    j["label"] = g->form.label;
    j["type"] = std::string(1, g->form.rs->type());
    j["rank"] = g->form.rs->rank();
    j["simply_connected"] = lp.simply_connected();
    j["adjoint"] = lp.adjoint();
    j["subgroup_order"] = lp.subgroup_order.str();
    j["index_in_p"] = lp.index_in_p.str();
    *out_json = dup_string(j.dump());
  });
}

TF_API tf_status tf_group_e(const tf_group* g, char** out_decimal) {
  return guarded([&] {
    require(g != nullptr, "group handle is null");
    require(out_decimal != nullptr, "output pointer is null");
    *out_decimal = dup_string(compute_E(g->form).str());
  });
}

TF_API tf_status tf_group_eq(const tf_group* g, char** out_decimal) {
  return guarded([&] {
    require(g != nullptr, "group handle is null");
    require(out_decimal != nullptr, "output pointer is null");
    *out_decimal = dup_string(compute_Eq(g->form).str());
  });
}

TF_API tf_status tf_group_index(const tf_group* g, int bound,
                                char** out_decimal, int* out_stabilized) {
  return guarded([&] {
    require(g != nullptr, "group handle is null");
    require(out_decimal != nullptr, "output pointer is null");
    GroupIndexResult r = group_index(g->form, bound <= 0 ? 4 : bound);
    *out_decimal = dup_string(r.value.str());
    if (out_stabilized != nullptr) *out_stabilized = r.stabilized ? 1 : 0;
  });
}

TF_API tf_status tf_group_classify_json(const tf_group* g, int bound,
                                        char** out_json) {
  return guarded([&] {
    require(g != nullptr, "group handle is null");
    require(out_json != nullptr, "output pointer is null");
    Classification c = classify_group(g->form, bound <= 0 ? 4 : bound);
    json j;
    j["label"] = c.label;
    j["group_index"] = c.group_index_value.str();
    j["e"] = c.e_value.str();
    j["eq"] = compute_Eq(g->form).str();
    j["ratio"] = c.ratio.str();
    j["degenerate_primes"] = decimals(c.degenerate_primes);
    j["zero_primes"] = decimals(c.zero_primes);
    *out_json = dup_string(j.dump());
  });
}

TF_API tf_status tf_trace_zero_all(const tf_group* g, const char* p, int bound,
                                   int* out) {
  return guarded([&] {
    require(g != nullptr, "group handle is null");
    require(out != nullptr, "output pointer is null");
    *out = trace_zero_all(g->form, parse_int(p, "p"), bound <= 0 ? 4 : bound)
               ? 1
               : 0;
  });
}

TF_API tf_status tf_trace_zero_single(const char* n_rho, const char* e_g,
                                      const char* p, int* out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    *out = trace_zero_single(parse_int(n_rho, "n_rho"), parse_int(e_g, "e_g"),
                             parse_int(p, "p"))
               ? 1
               : 0;
  });
}

TF_API tf_status tf_nondegenerate_exists(const tf_group* g, const char* p,
                                         int* out) {
  return guarded([&] {
    require(g != nullptr, "group handle is null");
    require(out != nullptr, "output pointer is null");
    *out = nondegenerate_exists(g->form, parse_int(p, "p")) ? 1 : 0;
  });
}

/* ------------------------------------------------------------------ */

namespace {

json classification_table(int max_n, int bound) {
  struct Row {
    std::string family;
    std::string params;
    GroupForm form;
  };
  // Rows grouped per root system so one scan serves all isogenies.
  std::vector<std::vector<Row>> batches;

  // Special linear quotients: every m | n.
  for (int n = 2; n <= max_n; ++n) {
    std::vector<Row> batch;
    for (int64_t m = 1; m <= n; ++m) {
      if (n % m != 0) continue;
      batch.push_back({"SL", "n=" + std::to_string(n) + ";m=" + std::to_string(m),
                       form_sl_quotient(n, m)});
    }
    batches.push_back(std::move(batch));
  }
  // Symplectic pairs.
  for (int n = 4; n <= max_n; n += 2) {
    batches.push_back({{"Sp", "n=" + std::to_string(n), form_sp(n)},
                       {"PSp", "n=" + std::to_string(n), form_psp(n)}});
  }
  // Orthogonal families; PSO_n for odd n coincides with SO_n and is not
  // repeated. HSpin_n exists for n = 0 mod 4 (n >= 12 here).
  for (int n = 7; n <= max_n; ++n) {
    std::vector<Row> batch;
    const std::string params = "n=" + std::to_string(n);
    batch.push_back({"Spin", params, form_spin(n)});
    batch.push_back({"SO", params, form_so(n)});
    if (n % 2 == 0) batch.push_back({"PSO", params, form_pso(n)});
    if (n % 4 == 0 && n >= 12) {
      batch.push_back({"HSpin", params, form_half_spin(n)});
    }
    batches.push_back(std::move(batch));
  }
  // Exceptional types, gated on rank.
  auto exceptional = [&](char type, int rank, bool both_isogenies) {
    if (rank > max_n) return;
    auto rs = RootSystem::create(type, rank);
    std::string family = std::string(1, type) + std::to_string(rank);
    if (both_isogenies) {
      batches.push_back(
          {{family, "sc", form_simply_connected(rs)},
           {family, "ad", form_adjoint(rs)}});
    } else {
      // Trivial center: there is only one isogeny form, named plainly.
      GroupForm f = form_simply_connected(rs);
      f.label = family;
      batches.push_back({{family, "", std::move(f)}});
    }
  };
  exceptional('G', 2, false);
  exceptional('F', 4, false);
  exceptional('E', 6, true);
  exceptional('E', 7, true);
  exceptional('E', 8, false);

  json rows = json::array();
  for (const auto& batch : batches) {
    if (batch.empty()) continue;
    std::vector<std::vector<WeightCoords>> gens;
    gens.reserve(batch.size());
    for (const Row& r : batch) gens.push_back(r.form.gens);
    std::vector<GroupIndexResult> results =
        group_index_batch(*batch.front().form.rs, gens, bound);
    for (size_t i = 0; i < batch.size(); ++i) {
      const Row& r = batch[i];
      const GroupIndexResult& gi = results[i];
      json row;
      row["family"] = r.family;
      row["params"] = r.params;
      row["label"] = r.form.label;
      row["group_index"] = gi.value.str();
      LatticePresentation lp = resolve_lattices(r.form);
      Int e = compute_E(lp);
      row["e"] = e.str();
      row["eq"] = compute_Eq(lp).str();
      row["stabilized"] = gi.stabilized;
      if (gi.stabilized) {
        Int ratio = gi.value / e;
        row["ratio"] = ratio.str();
        row["ratio_primes"] = decimals(prime_divisors(ratio));
        row["degenerate_primes"] =
            decimals(very_good_excluded_primes(r.form));
        row["zero_primes"] = decimals(prime_divisors(ratio));
      } else {
        row["ratio"] = nullptr;
        row["ratio_primes"] = nullptr;
        row["degenerate_primes"] =
            decimals(very_good_excluded_primes(r.form));
        row["zero_primes"] = nullptr;
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

void push_check(json& checks, bool& all, const std::string& name, bool ok) {
  json c;
  c["name"] = name;
  c["passed"] = ok;
  checks.push_back(std::move(c));
  all = all && ok;
}

// Matrix-model trace Grams against the normalized form: E * Tr == N * b
// entrywise, and mod-p vanishing of the Gram matches the divisibility
// criterion, for the natural and adjoint models of sl_n, n <= 5.
void run_trace_suite(json& checks, bool& all) {
  for (int n = 2; n <= 5; ++n) {
    auto rs = RootSystem::create('A', n - 1);
    GroupForm sc = form_simply_connected(rs);
    const Int e = compute_E(sc);
    const IMat bt = normalized_form_gram(n);
    const std::string base = "sl" + std::to_string(n);

    MatrixRep natural = chevalley_sl(n);
    MatrixRep adjoint = adjoint_of(natural);

    WeightCoords natural_hw(n - 1, 0);
    natural_hw[0] = 1;
    WeightCoords adjoint_hw(n - 1, 0);
    if (n == 2) {
      adjoint_hw[0] = 2;
    } else {
      adjoint_hw[0] = 1;
      adjoint_hw[n - 2] = 1;
    }

    struct Model {
      const char* kind;
      const MatrixRep* rep;
      const WeightCoords* hw;
    };
    const Model models[] = {{"natural", &natural, &natural_hw},
                            {"adjoint", &adjoint, &adjoint_hw}};
    for (const Model& m : models) {
      const Int nrho = irrep_index(*rs, *m.hw);
      const IMat gram = trace_gram(*m.rep);
      bool entrywise = gram.rows == bt.rows && gram.cols == bt.cols;
      if (entrywise) {
        for (size_t i = 0; i < gram.rows && entrywise; ++i) {
          for (size_t j = 0; j < gram.cols && entrywise; ++j) {
            entrywise = (e * gram(i, j) == nrho * bt(i, j));
          }
        }
      }
      push_check(checks, all, base + "_" + m.kind + "_gram", entrywise);

      bool modp = true;
      for (int64_t p : {2, 3, 5, 7, 11, 13}) {
        modp = modp &&
               (is_zero_mod(gram, p) == trace_zero_single(nrho, e, Int(p)));
      }
      push_check(checks, all, base + "_" + m.kind + "_modp", modp);
    }
  }
}

// Restricted induced-module weight-square sums: 0 mod p for every prime
// p >= 5, and 2 mod 3, independent of the highest weight residue.
void run_appendix_suite(json& checks, bool& all) {
  bool three = true;
  for (int64_t a = 0; a < 3; ++a) three = three && (baby_verma_trace(3, a) == 2);
  push_check(checks, all, "induced_trace_p3_equals_2", three);

  for (int64_t p = 5; p <= 97; ++p) {
    if (!is_prime(Int(p))) continue;
    bool zero = true;
    for (int64_t a = 0; a < p; ++a) zero = zero && (baby_verma_trace(p, a) == 0);
    push_check(checks, all, "induced_trace_p" + std::to_string(p) + "_zero",
               zero);
  }
}

}  // namespace

TF_API tf_status tf_table1_json(int max_n, int bound, char** out_json) {
  return guarded([&] {
    require(out_json != nullptr, "output pointer is null");
    const int n = max_n <= 0 ? 12 : max_n;
    require(n >= 2 && n <= 40, "max_n must be between 2 and 40");
    *out_json =
        dup_string(classification_table(n, bound <= 0 ? 4 : bound).dump());
  });
}

TF_API tf_status tf_verify_json(const char* suite, char** out_json) {
  return guarded([&] {
    require(suite != nullptr, "suite is null");
    require(out_json != nullptr, "output pointer is null");
    const std::string s = suite;
    require(s == "all" || s == "trace" || s == "appendix",
            "suite must be all, trace or appendix");
    json checks = json::array();
    bool all = true;
    if (s == "all" || s == "trace") run_trace_suite(checks, all);
    if (s == "all" || s == "appendix") run_appendix_suite(checks, all);
    json j;
    j["suite"] = s;
    j["passed"] = all;
    j["checks"] = std::move(checks);
    *out_json = dup_string(j.dump());
  });
}

TF_API tf_status tf_twisted_classify_json(const char* twisted_label,
                                          const char* p, int simply_connected,
                                          char** out_json) {
  return guarded([&] {
    require(twisted_label != nullptr, "twisted label is null");
    require(out_json != nullptr, "output pointer is null");
    TwistedType t = parse_twisted(twisted_label);
    Int pc = parse_int(p, "p");
    TwistedVerdict v = twisted_classify(t, pc, simply_connected != 0);
    json j;
    j["label"] = twisted_label;
    j["type"] = std::string(1, t.type);
    j["rank"] = t.rank;
    j["twist"] = t.twist;
    j["p"] = pc.str();
    j["simply_connected"] = simply_connected != 0;
    j["degenerate_always"] = v.degenerate_always;
    if (v.zero_always.has_value()) {
      j["zero_always"] = *v.zero_always;
    } else {
      j["zero_always"] = nullptr;
    }
    j["computed"] = v.computed;
    *out_json = dup_string(j.dump());
  });
}

}  // extern "C"
