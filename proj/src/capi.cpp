// Copyright 2026 The tam authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tam/tam.h"

#include <string>

#include "tam/benchgen.hpp"
#include "tam/error.hpp"
#include "tam/metrics.hpp"
#include "tam/pipeline.hpp"

struct tam_pipeline {
  tam::Pipeline impl;
  std::string last_error;

  explicit tam_pipeline(tam::Pipeline p) : impl(std::move(p)) {}
};

namespace {

thread_local std::string g_thread_error;

tam_status status_from_code(int code) {
  switch (code) {
    case 2:
      return TAM_CONFIG_ERROR;
    case 3:
      return TAM_DATA_ERROR;
    default:
      return TAM_RUNTIME_ERROR;
  }
}

template <typename Fn>
tam_status guarded(tam_pipeline* p, Fn&& fn) {
  std::string* sink = p ? &p->last_error : &g_thread_error;
  try {
    fn();
    sink->clear();
    return TAM_OK;
  } catch (const tam::Error& e) {
    *sink = e.what();
    return status_from_code(e.code());
  } catch (const std::exception& e) {
    *sink = e.what();
    return TAM_RUNTIME_ERROR;
  }
}

}  // namespace

extern "C" {

const char* tam_version(void) { return tam::kVersion; }

tam_status tam_pipeline_create(const char* config_path, tam_pipeline** out) {
  if (!config_path || !out) {
    g_thread_error = "config_path and out must not be NULL";
    return TAM_CONFIG_ERROR;
  }
  return guarded(nullptr, [&] {
    *out = new tam_pipeline(tam::Pipeline::from_file(config_path));
  });
}

void tam_pipeline_destroy(tam_pipeline* p) { delete p; }

tam_status tam_pipeline_set_seed(tam_pipeline* p, uint64_t seed) {
  if (!p) return TAM_RUNTIME_ERROR;
  return guarded(p, [&] { p->impl.set_seed(seed); });
}

tam_status tam_pipeline_set_output_dir(tam_pipeline* p, const char* dir) {
  if (!p || !dir) return TAM_RUNTIME_ERROR;
  return guarded(p, [&] { p->impl.set_output_dir(dir); });
}

tam_status tam_pipeline_set_stage(tam_pipeline* p, const char* stage) {
  if (!p || !stage) return TAM_RUNTIME_ERROR;
  return guarded(p, [&] {
    const std::string s = stage;
    if (s == "bootstrap") {
      p->impl.set_stage(tam::RunStage::Bootstrap);
    } else if (s == "full") {
      p->impl.set_stage(tam::RunStage::Full);
    } else {
      throw tam::ConfigError("stage must be 'bootstrap' or 'full', got '" + s + "'");
    }
  });
}

tam_status tam_run_match(tam_pipeline* p) {
  if (!p) return TAM_RUNTIME_ERROR;
  return guarded(p, [&] { p->impl.run_match(); });
}

tam_status tam_run_merge(tam_pipeline* p, const char* clusters_path) {
  if (!p || !clusters_path) return TAM_RUNTIME_ERROR;
  return guarded(p, [&] { p->impl.run_merge(clusters_path); });
}

tam_status tam_run_eval(tam_pipeline* p) {
  if (!p) return TAM_RUNTIME_ERROR;
  return guarded(p, [&] { p->impl.run_eval(); });
}

tam_status tam_run_ar_test(tam_pipeline* p) {
  if (!p) return TAM_RUNTIME_ERROR;
  return guarded(p, [&] { p->impl.run_ar_test(); });
}

const char* tam_last_error(const tam_pipeline* p) {
  return p ? p->last_error.c_str() : g_thread_error.c_str();
}

tam_status tam_string_similarity(const char* metric, const char* a, const char* b, double* out) {
  if (!metric || !a || !b || !out) return TAM_RUNTIME_ERROR;
  return guarded(nullptr, [&] {
    const tam::StringMetric m =
        tam::compile_metric(tam::MetricSpec::single(metric), nullptr);
    *out = m(a, b);
  });
}

tam_status tam_generate_benchmark(const char* dat_path, const char* gold_path,
                                  const char* corpus_path, uint64_t seed) {
  if (!dat_path || !gold_path || !corpus_path) return TAM_RUNTIME_ERROR;
  return guarded(nullptr, [&] {
    tam::BenchSpec spec;
    spec.seed = seed;
    tam::generate_citeseer_benchmark(spec, {dat_path, gold_path, corpus_path});
  });
}

tam_status tam_generate_alpha_fixture(const char* dat_path, const char* gold_path) {
  if (!dat_path || !gold_path) return TAM_RUNTIME_ERROR;
  return guarded(nullptr, [&] { tam::generate_alpha_fixture(dat_path, gold_path); });
}

}  // extern "C"
