#include "ultraembed.h"

#include <cstring>
#include <new>
#include <string>

#include "generate.hpp"
#include "hilbert.hpp"
#include "io.hpp"
#include "oracle.hpp"
#include "pipeline.hpp"
#include "ultra.hpp"

namespace {

thread_local std::string g_last_error;

ue_status status_of(ue::ErrorCode c) {
  switch (c) {
    case ue::ErrorCode::InvalidArgument:
      return UE_INVALID_ARGUMENT;
    case ue::ErrorCode::NotMetric:
      return UE_NOT_METRIC;
    case ue::ErrorCode::NotUltrametric:
      return UE_NOT_ULTRAMETRIC;
    case ue::ErrorCode::BoundViolation:
      return UE_BOUND_VIOLATION;
    case ue::ErrorCode::Undecided:
      return UE_UNDECIDED;
    case ue::ErrorCode::CapExceeded:
      return UE_CAP_EXCEEDED;
    case ue::ErrorCode::Io:
      return UE_IO_ERROR;
    case ue::ErrorCode::BadJson:
      return UE_BAD_JSON;
  }
  return UE_INTERNAL;
}

template <typename F>
ue_status guarded(F&& f) {
  try {
    f();
    return UE_OK;
  } catch (const ue::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return UE_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

const ue::FiniteMetricSpace& space(const ue_metric* m);

}  // namespace

struct ue_metric {
  ue::FiniteMetricSpace m;
};

namespace {
const ue::FiniteMetricSpace& space(const ue_metric* m) { return m->m; }
}  // namespace

extern "C" {

const char* ue_last_error(void) { return g_last_error.c_str(); }

ue_status ue_metric_create(size_t n, const double* dense, ue_metric** out) {
  return guarded([&] {
    if (!dense || !out)
      throw ue::Error(ue::ErrorCode::InvalidArgument, "null argument");
    std::vector<double> d(dense, dense + n * n);
    auto m = ue::validate_metric(n, std::move(d));
    *out = new ue_metric{std::move(m)};
  });
}

ue_status ue_metric_from_csv(const char* text, ue_metric** out) {
  return guarded([&] {
    if (!text || !out)
      throw ue::Error(ue::ErrorCode::InvalidArgument, "null argument");
    auto m = ue::matrix_from_csv(text);
    m = ue::validate_metric(m.size(), m.dense(), m.labels());
    *out = new ue_metric{std::move(m)};
  });
}

ue_status ue_metric_from_json(const char* text, ue_metric** out) {
  return guarded([&] {
    if (!text || !out)
      throw ue::Error(ue::ErrorCode::InvalidArgument, "null argument");
    auto m = ue::matrix_from_json(text);
    m = ue::validate_metric(m.size(), m.dense(), m.labels());
    *out = new ue_metric{std::move(m)};
  });
}

void ue_metric_free(ue_metric* m) { delete m; }

size_t ue_metric_size(const ue_metric* m) { return m ? space(m).size() : 0; }

double ue_metric_distance(const ue_metric* m, size_t i, size_t j) {
  if (!m || i >= space(m).size() || j >= space(m).size()) return -1.0;
  return space(m)(i, j);
}

ue_status ue_metric_to_csv(const ue_metric* m, char** out) {
  return guarded([&] {
    if (!m || !out)
      throw ue::Error(ue::ErrorCode::InvalidArgument, "null argument");
    *out = dup_string(ue::matrix_to_csv(space(m)));
  });
}

ue_status ue_metric_to_json(const ue_metric* m, char** out) {
  return guarded([&] {
    if (!m || !out)
      throw ue::Error(ue::ErrorCode::InvalidArgument, "null argument");
    *out = dup_string(ue::matrix_to_json(space(m)));
  });
}

ue_status ue_is_ultrametric(const ue_metric* m, double tol, int* out) {
  return guarded([&] {
    if (!m || !out)
      throw ue::Error(ue::ErrorCode::InvalidArgument, "null argument");
    *out = ue::is_ultrametric(space(m), tol) ? 1 : 0;
  });
}

ue_status ue_subdominant(const ue_metric* m, ue_metric** out) {
  return guarded([&] {
    if (!m || !out)
      throw ue::Error(ue::ErrorCode::InvalidArgument, "null argument");
    ue::UltraSpace u = ue::subdominant_ultrametric(space(m));
    *out = new ue_metric{std::move(u.base)};
  });
}

ue_status ue_tree_newick(const ue_metric* m, char** out) {
  return guarded([&] {
    if (!m || !out)
      throw ue::Error(ue::ErrorCode::InvalidArgument, "null argument");
    ue::LevelTree t = ue::tree_from_matrix(space(m));
    *out = dup_string(t.newick());
  });
}

ue_status ue_distortion(const ue_metric* src, const ue_metric* dst,
                        const size_t* f, size_t flen, double* distortion,
                        double* scale) {
  return guarded([&] {
    if (!src || !dst || !f || !distortion)
      throw ue::Error(ue::ErrorCode::InvalidArgument, "null argument");
    if (flen != space(src).size())
      throw ue::Error(ue::ErrorCode::InvalidArgument,
                      "map length does not match source size");
    std::vector<std::size_t> map(f, f + flen);
    ue::DistortionReport rep = ue::distortion(space(src), space(dst), map);
    *distortion = rep.distortion;
    if (scale) *scale = rep.scale;
  });
}

ue_status ue_generate(const char* config_json, ue_metric** out) {
  return guarded([&] {
    if (!config_json || !out)
      throw ue::Error(ue::ErrorCode::InvalidArgument, "null argument");
    ue::PointStream s = ue::generate_stream(config_json);
    *out = new ue_metric{s.prefix(s.horizon)};
  });
}

ue_status ue_run_json(const char* config_json, char** report_json,
                      char** rendered, int* exit_code) {
  return guarded([&] {
    if (!config_json)
      throw ue::Error(ue::ErrorCode::InvalidArgument, "null argument");
    ue::RunConfig cfg = ue::config_from_json(config_json);
    ue::RunOutcome out = ue::run(cfg);
    if (report_json) *report_json = dup_string(out.report.dump());
    if (rendered) *rendered = dup_string(out.rendered);
    if (exit_code) *exit_code = out.exit_code;
  });
}

ue_status ue_oracle_best_subset(const ue_metric* m, double bound, size_t cap,
                                char** result_json) {
  return guarded([&] {
    if (!m || !result_json)
      throw ue::Error(ue::ErrorCode::InvalidArgument, "null argument");
    ue::SubsetSearchResult r =
        ue::best_subset_under_distortion(space(m), bound, cap);
    ue::ordered_json j;
    j["subset"] = r.subset;
    j["objective"] = r.objective;
    j["enumerated"] = r.enumerated;
    *result_json = dup_string(j.dump());
  });
}

ue_status ue_oracle_optimal_distortion(const ue_metric* m, double* out) {
  return guarded([&] {
    if (!m || !out)
      throw ue::Error(ue::ErrorCode::InvalidArgument, "null argument");
    *out = ue::optimal_ultra_distortion(space(m));
  });
}

ue_status ue_hilbert_coordinates(const ue_metric* m, char** csv) {
  return guarded([&] {
    if (!m || !csv)
      throw ue::Error(ue::ErrorCode::InvalidArgument, "null argument");
    ue::UltraSpace u = ue::ultra_from_matrix(space(m));
    ue::CoordinateEmbedding c = ue::coordinates(u);
    *csv = dup_string(ue::coordinates_to_csv(c));
  });
}

void ue_string_free(char* s) { delete[] s; }

}  // extern "C"
