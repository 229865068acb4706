#include <ginkit/ginkit.h>

#include <cstring>
#include <memory>
#include <string>

#include "algorithms.hpp"
#include "groebner.hpp"
#include "hilbert.hpp"
#include "render.hpp"
#include "verify.hpp"

using namespace ginkit;

struct ginkit_result {
  CIParams params;
  OutputRecord record;
  StableIdeal ideal;
  std::vector<long long> pristine_lambdas;  // as computed, before any injected fault
  // strings cached so returned pointers stay valid for the handle lifetime
  std::string case_str;
  std::vector<std::string> phase_strs;
  std::string text, json, m2, chart, report;

  void cache_strings() {
    case_str = to_string(record.tag);
    phase_strs.clear();
    for (const auto& ph : record.phases) phase_strs.push_back(to_string(ph));
  }
};

namespace {

thread_local std::string tl_error;

ginkit_status status_of(const error& e) {
  switch (e.code()) {
    case errc::invalid_params: return GINKIT_ERR_INVALID_PARAMS;
    case errc::structural_violation: return GINKIT_ERR_STRUCTURE;
    case errc::index_out_of_range: return GINKIT_ERR_RANGE;
    case errc::coverage_gap: return GINKIT_ERR_INTERNAL;
    case errc::scale_exceeded: return GINKIT_ERR_SCALE;
    case errc::cap_exceeded: return GINKIT_ERR_CAP;
    case errc::unstable: return GINKIT_ERR_UNSTABLE;
    case errc::regularity_failure: return GINKIT_ERR_UNSTABLE;
    case errc::internal: return GINKIT_ERR_INTERNAL;
  }
  return GINKIT_ERR_INTERNAL;
}

template <typename F>
ginkit_status guarded(F body) {
  try {
    tl_error.clear();
    return body();
  } catch (const error& e) {
    tl_error = e.what();
    return status_of(e);
  } catch (const std::exception& e) {
    tl_error = e.what();
    return GINKIT_ERR_INTERNAL;
  }
}

ginkit_status copy_values(const std::vector<long long>& values, long long* buf, size_t cap,
                          size_t* count) {
  if (count) *count = values.size();
  if (!buf || cap < values.size()) {
    tl_error = "buffer too small: need " + std::to_string(values.size());
    return GINKIT_ERR_BUFFER;
  }
  std::memcpy(buf, values.data(), values.size() * sizeof(long long));
  return GINKIT_OK;
}

ginkit_status copy_string(const std::string& s, char* buf, size_t cap) {
  if (!buf || cap < s.size() + 1) {
    tl_error = "buffer too small: need " + std::to_string(s.size() + 1);
    return GINKIT_ERR_BUFFER;
  }
  std::memcpy(buf, s.c_str(), s.size() + 1);
  return GINKIT_OK;
}

}  // namespace

extern "C" {

const char* ginkit_version(void) { return "ginkit 1.0.0"; }

const char* ginkit_last_error(void) { return tl_error.c_str(); }

ginkit_status ginkit_compute(long long alpha, long long beta, long long power, long long vars,
                             ginkit_result** out) {
  return guarded([&]() -> ginkit_status {
    if (!out) {
      tl_error = "null output pointer";
      return GINKIT_ERR_INVALID_PARAMS;
    }
    const CIParams p{alpha, beta, power, vars};
    auto result = std::make_unique<ginkit_result>();
    result->params = p;
    result->record = make_record(p);
    result->ideal = StableIdeal{result->record.k, result->record.lambdas};
    result->pristine_lambdas = result->record.lambdas;
    result->cache_strings();
    *out = result.release();
    return GINKIT_OK;
  });
}

ginkit_status ginkit_oracle_gin(long long alpha, long long beta, long long power, long long vars,
                                uint64_t seed, size_t max_basis, ginkit_result** out) {
  return guarded([&]() -> ginkit_status {
    if (!out) {
      tl_error = "null output pointer";
      return GINKIT_ERR_INVALID_PARAMS;
    }
    const CIParams p{alpha, beta, power, vars};
    OracleConfig cfg = default_oracle_config(seed);
    if (max_basis > 0) cfg.max_basis_size = max_basis;
    const StableIdeal ideal = oracle_gin(p, cfg);
    auto result = std::make_unique<ginkit_result>();
    result->params = p;
    result->record = make_record_from_ideal(p, ideal);
    result->ideal = ideal;
    result->pristine_lambdas = ideal.lambdas;
    result->cache_strings();
    *out = result.release();
    return GINKIT_OK;
  });
}

void ginkit_result_free(ginkit_result* result) { delete result; }

const char* ginkit_result_case(const ginkit_result* result) { return result->case_str.c_str(); }

long long ginkit_result_k(const ginkit_result* result) { return result->record.k; }

ginkit_status ginkit_result_lambdas(const ginkit_result* result, long long* buf, size_t cap,
                                    size_t* count) {
  return copy_values(result->record.lambdas, buf, cap, count);
}

ginkit_status ginkit_result_gaps(const ginkit_result* result, long long* buf, size_t cap,
                                 size_t* count) {
  return copy_values(result->record.gap_values, buf, cap, count);
}

const char* ginkit_result_phase(const ginkit_result* result, size_t i) {
  if (i >= result->phase_strs.size()) return nullptr;
  return result->phase_strs[i].c_str();
}

const char* ginkit_result_generator(const ginkit_result* result, size_t i) {
  if (i >= result->record.generators.size()) return nullptr;
  return result->record.generators[i].c_str();
}

size_t ginkit_result_generator_count(const ginkit_result* result) {
  return result->record.generators.size();
}

const char* ginkit_result_render(ginkit_result* result, const char* format) {
  if (!format) return nullptr;
  const std::string f = format;
  if (f == "text") {
    result->text = render_text(result->record);
    return result->text.c_str();
  }
  if (f == "json") {
    result->json = render_json(result->record);
    return result->json.c_str();
  }
  if (f == "m2") {
    result->m2 = render_m2(result->record);
    return result->m2.c_str();
  }
  return nullptr;
}

const char* ginkit_result_chart(ginkit_result* result) {
  result->chart = render_chart(result->record);
  return result->chart.c_str();
}

const char* ginkit_result_report(ginkit_result* result) {
  result->report = render_report(result->record);
  return result->report.c_str();
}

ginkit_status ginkit_verify(ginkit_result* result, unsigned checks, long long t_max,
                            uint64_t seed, long long fault_index, long long fault_delta) {
  return guarded([&]() -> ginkit_status {
    VerifyOptions opts;
    if (t_max >= 0) opts.t_max = t_max;
    opts.seed = seed;
    opts.fault_index = fault_index;
    opts.fault_delta = fault_delta;
    const VerifyReport report = run_checks(result->params, checks, opts);
    result->record.checks = report.results;
    // keep the handle's view consistent with what was checked; faults are
    // applied to the pristine sequence, so repeated calls do not stack
    result->ideal.lambdas = result->pristine_lambdas;
    if (fault_index >= 0)  // run_checks already validated the index
      result->ideal.lambdas[static_cast<std::size_t>(fault_index)] += fault_delta;
    result->record.lambdas = result->ideal.lambdas;
    result->record.gap_values.clear();
    for (std::size_t i = 1; i < result->ideal.lambdas.size(); ++i)
      result->record.gap_values.push_back(result->ideal.lambdas[i - 1] -
                                          result->ideal.lambdas[i]);
    result->record.generators = result->ideal.generators();
    if (!report.all_pass) {
      tl_error = "verification failed";
      return GINKIT_ERR_VERIFY;
    }
    return GINKIT_OK;
  });
}

ginkit_status ginkit_hilbert_in(long long alpha, long long beta, long long power, long long vars,
                                long long t, char* buf, size_t cap) {
  return guarded([&]() -> ginkit_status {
    const CIParams p{alpha, beta, power, vars};
    return copy_string(hilbert_In(p, t).str(), buf, cap);
  });
}

ginkit_status ginkit_result_hilbert_j(const ginkit_result* result, long long t, char* buf,
                                      size_t cap) {
  return guarded([&]() -> ginkit_status {
    return copy_string(hilbert_J(result->ideal, result->params.m, t).str(), buf, cap);
  });
}

ginkit_status ginkit_hilbert_in_bruteforce(long long alpha, long long beta, long long power,
                                           long long vars, long long t, long long bound,
                                           char* buf, size_t cap) {
  return guarded([&]() -> ginkit_status {
    const CIParams p{alpha, beta, power, vars};
    const BigInt value = hilbert_In_bruteforce(p, t, bound > 0 ? bound : 60);
    return copy_string(value.str(), buf, cap);
  });
}

}  // extern "C"
