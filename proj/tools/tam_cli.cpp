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

// Command-line frontend. Deliberately a thin client of the public C API.

#include <cstdint>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "tam/tam.h"

namespace {

struct CommonArgs {
  std::string config;
  std::string out_dir;
  std::string stage;
  std::uint64_t seed = 0;
  bool seed_set = false;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--config", args.config, "run configuration (JSON)")->required();
  cmd->add_option("--out", args.out_dir, "output directory override");
  cmd->add_option("--stage", args.stage, "pipeline stage: bootstrap|full")
      ->check(CLI::IsMember({"bootstrap", "full"}));
  auto* seed = cmd->add_option("--seed", args.seed, "seed override");
  cmd->callback([seed, &args] { args.seed_set = seed->count() > 0; });
}

using PipelinePtr = std::unique_ptr<tam_pipeline, decltype(&tam_pipeline_destroy)>;

int open_pipeline(const CommonArgs& args, PipelinePtr& out) {
  tam_pipeline* raw = nullptr;
  tam_status st = tam_pipeline_create(args.config.c_str(), &raw);
  if (st != TAM_OK) {
    std::cerr << "error: " << tam_last_error(nullptr) << "\n";
    return st;
  }
  out = PipelinePtr(raw, &tam_pipeline_destroy);
  if (args.seed_set) tam_pipeline_set_seed(out.get(), args.seed);
  if (!args.out_dir.empty()) tam_pipeline_set_output_dir(out.get(), args.out_dir.c_str());
  if (!args.stage.empty()) {
    st = tam_pipeline_set_stage(out.get(), args.stage.c_str());
    if (st != TAM_OK) {
      std::cerr << "error: " << tam_last_error(out.get()) << "\n";
      return st;
    }
  }
  return TAM_OK;
}

int finish(const PipelinePtr& p, tam_status st, const char* what) {
  if (st != TAM_OK) {
    std::cerr << "error: " << what << " failed: " << tam_last_error(p.get()) << "\n";
  }
  return st;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tam - trust-aware data matching and merging"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tam_version()));

  CommonArgs match_args, merge_args, eval_args, ar_args;
  std::string clusters_path, gen_dir;
  std::uint64_t gen_seed = 29;

  CLI::App* match = app.add_subcommand("match", "resolve entities into clusters");
  add_common(match, match_args);

  CLI::App* merge = app.add_subcommand("merge", "eliminate redundancy over resolved clusters");
  add_common(merge, merge_args);
  merge->add_option("--clusters", clusters_path, "cluster file from a match run")->required();

  CLI::App* eval = app.add_subcommand("eval", "parameter sweeps and noise experiments");
  add_common(eval, eval_args);

  CLI::App* ar = app.add_subcommand("ar-test", "attribute resolution report");
  add_common(ar, ar_args);

  CLI::App* gen = app.add_subcommand("bench-gen", "generate the benchmark corpus");
  gen->add_option("--out-dir", gen_dir, "directory for citeseer.dat/gold.tsv/names_corpus.txt")
      ->required();
  gen->add_option("--seed", gen_seed, "generator seed");

  CLI11_PARSE(app, argc, argv);

  PipelinePtr pipeline(nullptr, &tam_pipeline_destroy);
  if (match->parsed()) {
    if (int st = open_pipeline(match_args, pipeline)) return st;
    return finish(pipeline, tam_run_match(pipeline.get()), "match");
  }
  if (merge->parsed()) {
    if (int st = open_pipeline(merge_args, pipeline)) return st;
    return finish(pipeline, tam_run_merge(pipeline.get(), clusters_path.c_str()), "merge");
  }
  if (eval->parsed()) {
    if (int st = open_pipeline(eval_args, pipeline)) return st;
    return finish(pipeline, tam_run_eval(pipeline.get()), "eval");
  }
  if (ar->parsed()) {
    if (int st = open_pipeline(ar_args, pipeline)) return st;
    return finish(pipeline, tam_run_ar_test(pipeline.get()), "ar-test");
  }
  if (gen->parsed()) {
    const std::string dat = gen_dir + "/citeseer.dat";
    const std::string gold = gen_dir + "/gold.tsv";
    const std::string corpus = gen_dir + "/names_corpus.txt";
    tam_status st =
        tam_generate_benchmark(dat.c_str(), gold.c_str(), corpus.c_str(), gen_seed);
    if (st != TAM_OK) {
      std::cerr << "error: bench-gen failed: " << tam_last_error(nullptr) << "\n";
      return st;
    }
    std::cout << "wrote " << dat << ", " << gold << ", " << corpus << "\n";
    return 0;
  }
  return 0;
}
