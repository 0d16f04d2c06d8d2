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

#ifndef TAM_CONFIG_HPP_
#define TAM_CONFIG_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tam/attres.hpp"
#include "tam/er.hpp"
#include "tam/evalkit.hpp"
#include "tam/ingest.hpp"
#include "tam/redundancy.hpp"
#include "tam/similarity.hpp"
#include "tam/trust.hpp"

namespace tam {

// One declared context in the config. Compiled into a Context predicate
// against the trust model at pipeline start.
struct ContextSpec {
  std::string dimension = "user";           // user|data|trust
  std::string level = "data";               // abstract|semantic|data
  std::string kind;                         // allow_sources|deny_sources|allow_attributes|
                                            // deny_attributes|min_trust|always_false
  std::vector<std::string> names;           // sources or attributes
  double min_trust = 0.0;
};

struct TrustConfigRule {
  std::string attr_a;
  std::string attr_b;
  std::string check = "equal";
  double min_trust = 0.0;
  double tolerance = 0.0;
};

struct MergeConfig {
  std::string strategy = "bayes";
  std::string metric = "jarowinkler";     // naive_plus
  std::string corpus_path;                // trust: reference corpus file
  std::size_t probes_m = 5;
  std::size_t noise_letters = 4;
};

struct EvalConfig {
  std::optional<std::string> sweep_param;  // alpha|theta
  std::vector<double> sweep_grid;
  std::optional<NoiseExperimentConfig> noise;
};

// Everything one run needs. Paper defaults are baked in so a minimal config
// reproduces the reference setup.
struct RunConfig {
  std::vector<DatasetDescriptor> datasets;
  std::vector<ContextSpec> contexts;

  // attribute resolution
  std::vector<std::string> ladder = {"exact", "similarity", "similarity+", "domain", "ontology"};
  std::string synonym_path;
  double ar_similarity_threshold = 0.95;
  double ar_domain_cap = 0.25;
  std::map<std::string, std::string> ar_ontologies;  // source -> ontology file

  SimilarityConfig similarity;
  BlockingConfig blocking;

  // trust
  TrustModel trust;
  std::vector<TrustConfigRule> trust_rules;

  MergeConfig merge;
  EvalConfig eval;

  EngineOptions engine;
  std::string entity_name_attr = "name";
  std::string output_dir = "out";
  std::uint64_t seed = 1;

  std::string config_dir;    // directory of the config file; relative paths resolve here
  std::string fingerprint;   // content hash of the loaded file

  std::string resolve_path(const std::string& path) const;
  void validate() const;  // field-path errors; checks referenced files exist
};

RunConfig load_run_config(const std::string& path);
RunConfig parse_run_config(const std::string& json_text, const std::string& config_dir);

// Effective-config serialization used by the run manifest.
std::string run_config_summary_json(const RunConfig& cfg);

}  // namespace tam

#endif  // TAM_CONFIG_HPP_
