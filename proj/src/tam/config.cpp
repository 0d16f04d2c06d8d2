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

#include "tam/config.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tam/error.hpp"
#include "tam/rng.hpp"

namespace tam {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw ConfigError(path + ": " + msg);
}

const json* find(const json& j, const std::string& key) {
  auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

template <typename T>
T get_or(const json& j, const std::string& key, const std::string& path, T fallback) {
  const json* v = find(j, key);
  if (!v) return fallback;
  try {
    return v->get<T>();
  } catch (const json::exception&) {
    fail(path + "." + key, "has the wrong type");
  }
}

std::vector<std::string> get_string_list(const json& j, const std::string& key,
                                         const std::string& path,
                                         std::vector<std::string> fallback) {
  const json* v = find(j, key);
  if (!v) return fallback;
  if (!v->is_array()) fail(path + "." + key, "must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : *v) {
    if (!e.is_string()) fail(path + "." + key, "must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::vector<double> get_number_list(const json& j, const std::string& key,
                                    const std::string& path, std::vector<double> fallback) {
  const json* v = find(j, key);
  if (!v) return fallback;
  if (!v->is_array()) fail(path + "." + key, "must be an array of numbers");
  std::vector<double> out;
  for (const auto& e : *v) {
    if (!e.is_number()) fail(path + "." + key, "must be an array of numbers");
    out.push_back(e.get<double>());
  }
  return out;
}

MetricSpec parse_metric_spec(const json& v, const std::string& path) {
  MetricSpec spec;
  if (v.is_string()) {
    return MetricSpec::single(v.get<std::string>());
  }
  if (v.is_array()) {
    for (const auto& part : v) {
      if (!part.is_object() || !part.contains("name")) {
        fail(path, "metric blend parts need {name, weight}");
      }
      spec.parts.push_back(
          {part["name"].get<std::string>(), part.value("weight", 1.0)});
    }
    return spec;
  }
  fail(path, "must be a metric name or an array of {name, weight}");
}

DatasetDescriptor parse_dataset(const json& j, const std::string& path) {
  DatasetDescriptor d;
  d.name = get_or<std::string>(j, "name", path, "");
  if (d.name.empty()) fail(path + ".name", "is required");
  const std::string fmt = get_or<std::string>(j, "format", path, "delimited");
  if (fmt == "citeseer_dat") {
    d.format = DatasetDescriptor::Format::CiteseerDat;
  } else if (fmt == "delimited") {
    d.format = DatasetDescriptor::Format::Delimited;
  } else if (fmt == "network_file") {
    d.format = DatasetDescriptor::Format::NetworkFile;
  } else if (fmt == "ontology_file") {
    d.format = DatasetDescriptor::Format::OntologyFile;
  } else {
    fail(path + ".format", "unknown format '" + fmt + "'");
  }
  d.path = get_or<std::string>(j, "path", path, "");
  if (d.path.empty()) fail(path + ".path", "is required");
  d.source_id = get_or<std::string>(j, "source", path, d.name);
  d.id_column = get_or<std::string>(j, "id_column", path, "");
  const std::string delim = get_or<std::string>(j, "delimiter", path, "");
  if (!delim.empty()) {
    if (delim == "tab") {
      d.delimiter = '\t';
    } else if (delim.size() == 1) {
      d.delimiter = delim[0];
    } else {
      fail(path + ".delimiter", "must be a single character or 'tab'");
    }
  }
  if (const json* cols = find(j, "columns")) {
    if (!cols->is_object()) fail(path + ".columns", "must map column to attribute");
    for (auto it = cols->begin(); it != cols->end(); ++it) {
      d.column_map[it.key()] = it.value().get<std::string>();
    }
  }
  if (const json* rel = find(j, "relation")) {
    const std::string kind = get_or<std::string>(*rel, "kind", path + ".relation", "none");
    if (kind == "shared_column") {
      d.relation.kind = DatasetDescriptor::RelationSpec::Kind::SharedColumn;
      d.relation.column = get_or<std::string>(*rel, "column", path + ".relation", "");
      if (d.relation.column.empty()) fail(path + ".relation.column", "is required");
    } else if (kind != "none") {
      fail(path + ".relation.kind", "unknown kind '" + kind + "'");
    }
  }
  const std::string truth = get_or<std::string>(j, "truth", path, "");
  if (!truth.empty()) d.truth_path = truth;
  return d;
}

}  // namespace

std::string RunConfig::resolve_path(const std::string& path) const {
  if (path.empty() || config_dir.empty()) return path;
  std::filesystem::path p(path);
  if (p.is_absolute()) return path;
  return (std::filesystem::path(config_dir) / p).string();
}

void RunConfig::validate() const {
  if (datasets.empty()) throw ConfigError("datasets: at least one dataset is required");
  for (std::size_t i = 0; i < datasets.size(); ++i) {
    const auto& d = datasets[i];
    const std::string where = "datasets[" + std::to_string(i) + "]";
    if (!std::filesystem::exists(resolve_path(d.path))) {
      throw ConfigError(where + ".path: file not found: " + d.path);
    }
    if (d.truth_path && !std::filesystem::exists(resolve_path(*d.truth_path))) {
      throw ConfigError(where + ".truth: file not found: " + *d.truth_path);
    }
  }
  if (!synonym_path.empty() && !std::filesystem::exists(resolve_path(synonym_path))) {
    throw ConfigError("attribute_resolution.synonyms: file not found: " + synonym_path);
  }
  for (const auto& [src, p] : ar_ontologies) {
    if (!std::filesystem::exists(resolve_path(p))) {
      throw ConfigError("attribute_resolution.ontologies." + src + ": file not found: " + p);
    }
  }
  if (!merge.corpus_path.empty() && !std::filesystem::exists(resolve_path(merge.corpus_path))) {
    throw ConfigError("merge.corpus: file not found: " + merge.corpus_path);
  }
  if (merge.strategy == "trust" && merge.corpus_path.empty()) {
    throw ConfigError("merge.corpus: required by the trust strategy");
  }
  merge_kind_from_name(merge.strategy);
  similarity.validate();
  blocking.validate();
  trust.validate();
  for (const auto& ctx : contexts) {
    if (ctx.dimension != "user" && ctx.dimension != "data" && ctx.dimension != "trust") {
      throw ConfigError("contexts.dimension: unknown '" + ctx.dimension + "'");
    }
    if (ctx.level != "abstract" && ctx.level != "semantic" && ctx.level != "data") {
      throw ConfigError("contexts.level: unknown '" + ctx.level + "'");
    }
  }
  if (eval.sweep_param && *eval.sweep_param != "alpha" && *eval.sweep_param != "theta") {
    throw ConfigError("eval.sweep.param: must be 'alpha' or 'theta'");
  }
  if (output_dir.empty()) throw ConfigError("output_dir: must not be empty");
}

RunConfig parse_run_config(const std::string& text, const std::string& config_dir) {
  json root;
  try {
    root = json::parse(text, nullptr, true, /*ignore_comments=*/true);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError("config root must be a JSON object");

  RunConfig cfg;
  cfg.config_dir = config_dir;
  cfg.fingerprint = [&text] {
    std::ostringstream os;
    os << std::hex << fnv1a(text);
    return os.str();
  }();

  cfg.seed = get_or<std::uint64_t>(root, "seed", "", 1);
  cfg.output_dir = get_or<std::string>(root, "output_dir", "", "out");
  cfg.entity_name_attr = get_or<std::string>(root, "entity_name_attribute", "", "name");

  if (const json* ds = find(root, "datasets")) {
    if (!ds->is_array()) throw ConfigError("datasets: must be an array");
    for (std::size_t i = 0; i < ds->size(); ++i) {
      cfg.datasets.push_back(parse_dataset((*ds)[i], "datasets[" + std::to_string(i) + "]"));
    }
  }

  if (const json* ctxs = find(root, "contexts")) {
    if (!ctxs->is_array()) throw ConfigError("contexts: must be an array");
    for (const auto& c : *ctxs) {
      ContextSpec spec;
      spec.dimension = get_or<std::string>(c, "dimension", "contexts", "user");
      spec.level = get_or<std::string>(c, "level", "contexts", "data");
      spec.kind = get_or<std::string>(c, "kind", "contexts", "");
      if (spec.kind.empty()) throw ConfigError("contexts.kind: is required");
      spec.names = get_string_list(c, "sources", "contexts", {});
      if (spec.names.empty()) spec.names = get_string_list(c, "attributes", "contexts", {});
      spec.min_trust = get_or<double>(c, "min_trust", "contexts", 0.0);
      cfg.contexts.push_back(std::move(spec));
    }
  }

  if (const json* ar = find(root, "attribute_resolution")) {
    cfg.ladder = get_string_list(*ar, "ladder", "attribute_resolution", cfg.ladder);
    cfg.synonym_path = get_or<std::string>(*ar, "synonyms", "attribute_resolution", "");
    cfg.ar_similarity_threshold =
        get_or<double>(*ar, "similarity_threshold", "attribute_resolution", 0.95);
    cfg.ar_domain_cap = get_or<double>(*ar, "domain_cap", "attribute_resolution", 0.25);
    if (const json* onts = find(*ar, "ontologies")) {
      for (auto it = onts->begin(); it != onts->end(); ++it) {
        cfg.ar_ontologies[it.key()] = it.value().get<std::string>();
      }
    }
  }

  if (const json* sim = find(root, "similarity")) {
    cfg.similarity.alpha = get_or<double>(*sim, "alpha", "similarity", 0.85);
    cfg.similarity.delta_s = get_or<double>(*sim, "delta_s", "similarity", 4.0);
    if (find(*sim, "delta_a")) {
      cfg.similarity.delta_a_override = get_or<double>(*sim, "delta_a", "similarity", 0.0);
    }
    if (find(*sim, "delta_r")) {
      cfg.similarity.delta_r_override = get_or<double>(*sim, "delta_r", "similarity", 0.0);
    }
    cfg.similarity.theta = get_or<double>(*sim, "theta", "similarity", 0.95);
    cfg.similarity.align_relational = get_or<bool>(*sim, "align_relational", "similarity", true);
    if (const json* dm = find(*sim, "default_metric")) {
      cfg.similarity.default_metric = parse_metric_spec(*dm, "similarity.default_metric");
    }
    if (const json* am = find(*sim, "attribute_metrics")) {
      for (auto it = am->begin(); it != am->end(); ++it) {
        cfg.similarity.per_attribute_metric[it.key()] =
            parse_metric_spec(it.value(), "similarity.attribute_metrics." + it.key());
      }
    }
    if (const json* sm = find(*sim, "semantic_metrics")) {
      for (auto it = sm->begin(); it != sm->end(); ++it) {
        cfg.similarity.semantic_metric[it.key()] =
            SemanticMetricSpec{it.value().get<std::string>()};
      }
    }
    cfg.similarity.number_tolerance = get_or<double>(*sim, "number_tolerance", "similarity", 0.0);
    cfg.similarity.product_k = get_or<std::size_t>(*sim, "product_k", "similarity", 2);
    if (const json* rest = find(*sim, "restaurant")) {
      cfg.similarity.restaurant.name_attr =
          get_or<std::string>(*rest, "name", "similarity.restaurant", "name");
      cfg.similarity.restaurant.phone_attr =
          get_or<std::string>(*rest, "phone", "similarity.restaurant", "phone");
      cfg.similarity.restaurant.addr_attr =
          get_or<std::string>(*rest, "address", "similarity.restaurant", "addr");
      cfg.similarity.restaurant.threshold =
          get_or<double>(*rest, "threshold", "similarity.restaurant", 0.95);
    }
  }

  if (const json* blk = find(root, "blocking")) {
    const std::string strategy = get_or<std::string>(*blk, "strategy", "blocking", "standard");
    if (strategy == "standard") {
      cfg.blocking.strategy = BlockingConfig::Strategy::Standard;
    } else if (strategy == "similarity") {
      cfg.blocking.strategy = BlockingConfig::Strategy::Similarity;
    } else if (strategy == "ngram") {
      cfg.blocking.strategy = BlockingConfig::Strategy::Ngram;
    } else {
      throw ConfigError("blocking.strategy: unknown '" + strategy + "'");
    }
    cfg.blocking.attributes = get_string_list(*blk, "attributes", "blocking", {});
    if (const json* th = find(*blk, "similarity_thresholds")) {
      for (auto it = th->begin(); it != th->end(); ++it) {
        cfg.blocking.similarity_thresholds[it.key()] = it.value().get<double>();
      }
    }
    cfg.blocking.similarity_metric = get_or<std::string>(*blk, "metric", "blocking", "jarowinkler");
    cfg.blocking.ngram_n = get_or<std::size_t>(*blk, "ngram_n", "blocking", 6);
    cfg.blocking.ngram_min_matches = get_or<std::size_t>(*blk, "ngram_min_matches", "blocking", 4);
  }

  if (const json* tr = find(root, "trust")) {
    if (const json* srcs = find(*tr, "sources")) {
      for (auto it = srcs->begin(); it != srcs->end(); ++it) {
        cfg.trust.source_trust[it.key()] = it.value().get<double>();
      }
    }
    if (const json* attrs = find(*tr, "attributes")) {
      for (auto it = attrs->begin(); it != attrs->end(); ++it) {
        cfg.trust.attribute_trust[it.key()] = it.value().get<double>();
      }
    }
    if (const json* defs = find(*tr, "defaults")) {
      if (find(*defs, "source")) {
        cfg.trust.default_source_trust = get_or<double>(*defs, "source", "trust.defaults", 1.0);
      }
      if (find(*defs, "attribute")) {
        cfg.trust.default_attribute_trust =
            get_or<double>(*defs, "attribute", "trust.defaults", 1.0);
      }
    }
    const std::string concat = get_or<std::string>(*tr, "concat", "trust", "product");
    if (concat == "product") {
      cfg.trust.concat = TrustConcat::Product;
    } else if (concat == "min") {
      cfg.trust.concat = TrustConcat::Min;
    } else {
      throw ConfigError("trust.concat: must be 'product' or 'min'");
    }
    if (const json* rules = find(*tr, "rules")) {
      if (!rules->is_array()) throw ConfigError("trust.rules: must be an array");
      for (const auto& r : *rules) {
        TrustConfigRule rule;
        rule.attr_a = get_or<std::string>(r, "a", "trust.rules", "");
        rule.attr_b = get_or<std::string>(r, "b", "trust.rules", "");
        if (rule.attr_a.empty() || rule.attr_b.empty()) {
          throw ConfigError("trust.rules: 'a' and 'b' are required");
        }
        rule.check = get_or<std::string>(r, "check", "trust.rules", "equal");
        rule.min_trust = get_or<double>(r, "min_trust", "trust.rules", 0.0);
        rule.tolerance = get_or<double>(r, "tolerance", "trust.rules", 0.0);
        cfg.trust_rules.push_back(std::move(rule));
      }
    }
  }

  if (const json* mg = find(root, "merge")) {
    cfg.merge.strategy = get_or<std::string>(*mg, "strategy", "merge", "bayes");
    cfg.merge.metric = get_or<std::string>(*mg, "metric", "merge", "jarowinkler");
    cfg.merge.corpus_path = get_or<std::string>(*mg, "corpus", "merge", "");
    cfg.merge.probes_m = get_or<std::size_t>(*mg, "m", "merge", 5);
    cfg.merge.noise_letters = get_or<std::size_t>(*mg, "letters", "merge", 4);
  }

  if (const json* eng = find(root, "engine")) {
    cfg.engine.threads = get_or<int>(*eng, "threads", "engine", 1);
    const std::string refresh = get_or<std::string>(*eng, "refresh", "engine", "neighbor");
    if (refresh == "neighbor") {
      cfg.engine.neighbor_only_refresh = true;
    } else if (refresh == "full") {
      cfg.engine.neighbor_only_refresh = false;
    } else {
      throw ConfigError("engine.refresh: must be 'neighbor' or 'full'");
    }
  }

  if (const json* ev = find(root, "eval")) {
    if (const json* sw = find(*ev, "sweep")) {
      cfg.eval.sweep_param = get_or<std::string>(*sw, "param", "eval.sweep", "theta");
      cfg.eval.sweep_grid = get_number_list(*sw, "grid", "eval.sweep", {});
    }
    if (const json* ns = find(*ev, "noise")) {
      NoiseExperimentConfig n;
      n.attribute = get_or<std::string>(*ns, "attribute", "eval.noise", "name");
      n.n_clusters = get_or<std::size_t>(*ns, "clusters", "eval.noise", 34);
      n.min_values = get_or<std::size_t>(*ns, "min_values", "eval.noise", 11);
      n.grid = get_number_list(*ns, "grid", "eval.noise", n.grid);
      const auto names = get_string_list(*ns, "strategies", "eval.noise", {});
      if (!names.empty()) {
        n.strategies.clear();
        for (const auto& s : names) n.strategies.push_back(merge_kind_from_name(s));
      }
      n.repeats_cheap = get_or<std::size_t>(*ns, "repeats_cheap", "eval.noise", 100);
      n.repeats_trust = get_or<std::size_t>(*ns, "repeats_trust", "eval.noise", 10);
      n.probes_m = get_or<std::size_t>(*ns, "m", "eval.noise", 5);
      n.noise_letters = get_or<std::size_t>(*ns, "letters", "eval.noise", 4);
      cfg.eval.noise = std::move(n);
    }
  }

  return cfg;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string dir = std::filesystem::path(path).parent_path().string();
  RunConfig cfg = parse_run_config(buf.str(), dir);
  cfg.validate();
  return cfg;
}

std::string run_config_summary_json(const RunConfig& cfg) {
  json j;
  j["seed"] = cfg.seed;
  j["output_dir"] = cfg.output_dir;
  j["fingerprint"] = cfg.fingerprint;
  j["datasets"] = json::array();
  for (const auto& d : cfg.datasets) {
    j["datasets"].push_back({{"name", d.name}, {"path", d.path}, {"source", d.source()}});
  }
  j["similarity"] = {{"alpha", cfg.similarity.alpha},
                     {"delta_a", cfg.similarity.delta_a()},
                     {"delta_r", cfg.similarity.delta_r()},
                     {"delta_s", cfg.similarity.delta_s},
                     {"theta", cfg.similarity.theta},
                     {"align_relational", cfg.similarity.align_relational}};
  j["merge"] = {{"strategy", cfg.merge.strategy}};
  j["engine"] = {{"threads", cfg.engine.threads},
                 {"refresh", cfg.engine.neighbor_only_refresh ? "neighbor" : "full"}};
  return j.dump(2);
}

}  // namespace tam
