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

#include "tam/pipeline.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>

#include <json.hpp>

#include "tam/error.hpp"
#include "tam/model.hpp"
#include "tam/strutil.hpp"

namespace tam {
namespace {

namespace fs = std::filesystem;

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw RuntimeError("cannot write " + path);
  out << text;
}

void write_eval_table(const std::vector<EvalReport>& reports, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw RuntimeError("cannot write " + path);
  out << "stage\tprecision\trecall\tf_score\ttrue_pos\tfalse_pos\tfalse_neg\n";
  for (const auto& r : reports) {
    out << (r.stage == EvalStage::Bootstrap ? "bootstrap" : "clustered") << '\t' << r.precision
        << '\t' << r.recall << '\t' << r.f_score << '\t' << r.true_pos << '\t' << r.false_pos
        << '\t' << r.false_neg << '\n';
  }
}

}  // namespace

Pipeline::Pipeline(RunConfig cfg) : cfg_(std::move(cfg)) {}

Pipeline Pipeline::from_file(const std::string& config_path) {
  return Pipeline(load_run_config(config_path));
}

std::string Pipeline::out_path(const std::string& name) const {
  return (fs::path(cfg_.output_dir) / name).string();
}

JointContext Pipeline::compile_contexts() const {
  JointContext joint;
  for (const auto& spec : cfg_.contexts) {
    Context ctx;
    ctx.dimension = spec.dimension == "data"    ? ContextDimension::Data
                    : spec.dimension == "trust" ? ContextDimension::Trust
                                                : ContextDimension::User;
    ctx.level = spec.level == "abstract"   ? ContextLevel::Abstract
                : spec.level == "semantic" ? ContextLevel::Semantic
                                           : ContextLevel::Data;
    const std::set<std::string> names(spec.names.begin(), spec.names.end());
    if (spec.kind == "allow_sources") {
      ctx.predicate = [names](const KnowledgeChunk&, const AttrPair& p) {
        return names.count(p.source) > 0;
      };
    } else if (spec.kind == "deny_sources") {
      ctx.predicate = [names](const KnowledgeChunk&, const AttrPair& p) {
        return names.count(p.source) == 0;
      };
    } else if (spec.kind == "allow_attributes") {
      ctx.predicate = [names](const KnowledgeChunk&, const AttrPair& p) {
        return names.count(p.attr) > 0;
      };
    } else if (spec.kind == "deny_attributes") {
      ctx.predicate = [names](const KnowledgeChunk&, const AttrPair& p) {
        return names.count(p.attr) == 0;
      };
    } else if (spec.kind == "min_trust") {
      const TrustModel* trust = &trust_;
      const double threshold = spec.min_trust;
      ctx.predicate = [trust, threshold](const KnowledgeChunk& c, const AttrPair& p) {
        // Pair index lookup: predicate receives the pair by reference.
        for (std::size_t i = 0; i < c.pairs.size(); ++i) {
          if (&c.pairs[i] == &p) return trust->value_trust(c, i) >= threshold;
        }
        return trust->pair_trust(p.source, p.attr) >= threshold;
      };
    } else if (spec.kind == "always_false") {
      ctx.predicate = [](const KnowledgeChunk&, const AttrPair&) { return false; };
    } else {
      throw ConfigError("contexts.kind: unknown '" + spec.kind + "'");
    }
    joint.parts.push_back(std::move(ctx));
  }
  return joint;
}

void Pipeline::prepare() {
  if (prepared_) return;
  store_ = std::make_unique<ChunkStore>();
  gold_ = GoldPartition{};

  for (auto desc : cfg_.datasets) {
    desc.path = cfg_.resolve_path(desc.path);
    if (desc.truth_path) desc.truth_path = cfg_.resolve_path(*desc.truth_path);
    load_dataset(desc, *store_, &gold_);
  }

  trust_ = cfg_.trust;
  std::vector<InconsistencyRule> rules;
  for (const auto& r : cfg_.trust_rules) {
    rules.push_back(make_rule(r.check, r.attr_a, r.attr_b, r.min_trust, r.tolerance));
  }
  evaluate_chunks(trust_, *store_, rules);

  if (!cfg_.contexts.empty()) {
    *store_ = apply_context(compile_contexts(), *store_);
  }

  if (!cfg_.synonym_path.empty()) {
    synonyms_ = std::make_shared<SynonymDict>(
        SynonymDict::load(cfg_.resolve_path(cfg_.synonym_path)));
  }

  if (cfg_.datasets.size() >= 2 && !cfg_.ladder.empty()) {
    ResolveAttributesOptions options;
    options.ladder = cfg_.ladder;
    options.similarity_threshold = cfg_.ar_similarity_threshold;
    options.domain_distance_cap = cfg_.ar_domain_cap;
    options.synonyms = synonyms_.get();
    std::map<std::string, Ontology> onts;
    for (const auto& [src, path] : cfg_.ar_ontologies) {
      onts.emplace(src, read_ontology_file(cfg_.resolve_path(path)));
    }
    for (const auto& [src, ont] : onts) options.ontologies[src] = &ont;
    std::vector<std::string> sources;
    for (const auto& d : cfg_.datasets) sources.push_back(d.source());
    ar_mapping_ = resolve_attributes(*store_, sources, options).mapping;
  }

  // Entity names follow the configured name-like attribute.
  for (std::size_t i = 0; i < store_->size(); ++i) {
    KnowledgeChunk& c = store_->chunk_mut(i);
    if (!c.entity_name.empty()) continue;
    for (const auto& p : c.pairs) {
      if (p.attr == cfg_.entity_name_attr) {
        c.entity_name = p.value.text;
        break;
      }
    }
  }

  auto stats = std::make_shared<CorpusStats>(CorpusStats::build(*store_));
  stats_ = std::move(stats);
  SimilarityConfig& sim = cfg_.similarity;
  if (!sim.synonyms && synonyms_) sim.synonyms = synonyms_;
  prepared_ = true;
}

void Pipeline::write_clusters_file(const ClusterSet& clusters, const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw RuntimeError("cannot write " + path);
  out << "cluster_id\tchunk_id\n";
  for (ClusterId id : clusters.live_ids()) {
    for (auto m : clusters.cluster(id).members) {
      out << id << '\t' << store_->chunk(m).id << '\n';
    }
  }
}

ClusterSet Pipeline::read_clusters_file(const std::string& path) const {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open clusters file " + path);
  std::map<std::string, std::vector<std::uint32_t>> groups;
  std::string line;
  std::size_t lineno = 0;
  std::vector<bool> assigned(store_->size(), false);
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "cluster_id\tchunk_id" || line[0] == '#') continue;
    const auto tok = split(line, '\t');
    if (tok.size() != 2) {
      throw DataError(path + ":" + std::to_string(lineno) + ": expected 'cluster_id\tchunk_id'");
    }
    const auto idx = store_->index_of(tok[1]);
    if (!idx) {
      throw DataError(path + ":" + std::to_string(lineno) + ": unknown chunk " + tok[1]);
    }
    if (assigned[*idx]) {
      throw DataError(path + ":" + std::to_string(lineno) + ": chunk " + tok[1] +
                      " assigned twice");
    }
    assigned[*idx] = true;
    groups[tok[0]].push_back(static_cast<std::uint32_t>(*idx));
  }
  ClusterSet clusters(store_->size());
  for (const auto& [_, members] : groups) {
    for (std::size_t i = 1; i < members.size(); ++i) {
      clusters.merge(clusters.cluster_of(members[0]), clusters.cluster_of(members[i]));
    }
  }
  return clusters;  // unlisted chunks stay singletons
}

std::pair<ClusterSet, ClusterSet> Pipeline::run_clustering(const SimilarityScorer& scorer,
                                                           const CandidateSet& candidates,
                                                           ResolveStats* stats) const {
  ClusterSet boot = bootstrap(*store_, candidates, scorer, cfg_.engine);
  if (stage_ == RunStage::Bootstrap) return {boot, boot};
  ClusterSet final_set = resolve(*store_, candidates, scorer, boot, cfg_.engine, stats);
  return {std::move(boot), std::move(final_set)};
}

MatchOutcome Pipeline::run_match() {
  prepare();
  fs::create_directories(cfg_.output_dir);
  MatchOutcome outcome;
  outcome.chunks = store_->size();
  outcome.clusters_path = out_path("clusters.tsv");

  std::vector<std::string> outputs = {"clusters.tsv", "run_summary.json"};
  if (store_->empty()) {
    std::cerr << "warning: no chunks survive the configured contexts; writing empty outputs\n";
    outcome.empty_input = true;
    write_text(outcome.clusters_path, "cluster_id\tchunk_id\n");
    write_text(out_path("run_summary.json"), "{\"chunks\":0,\"clusters\":0}\n");
    write_manifest("match", outputs);
    return outcome;
  }

  const SimilarityScorer scorer(*store_, trust_, cfg_.similarity, stats_);
  const CandidateSet candidates = CandidateSet::build(*store_, cfg_.blocking);
  ResolveStats stats;
  auto [boot, final_set] = run_clustering(scorer, candidates, &stats);

  outcome.clusters = final_set.size();
  outcome.stats = stats;
  write_clusters_file(final_set, outcome.clusters_path);

  std::vector<EvalReport> reports;
  if (!gold_.empty()) {
    outcome.bootstrap_eval = pairwise_scores(boot, gold_, *store_, EvalStage::Bootstrap);
    reports.push_back(*outcome.bootstrap_eval);
    outcome.clustered_eval = pairwise_scores(final_set, gold_, *store_, EvalStage::Clustered);
    reports.push_back(*outcome.clustered_eval);
    write_eval_table(reports, out_path("eval.tsv"));
    outputs.push_back("eval.tsv");
  }

  nlohmann::json summary;
  summary["chunks"] = outcome.chunks;
  summary["clusters"] = outcome.clusters;
  summary["candidate_pairs"] = candidates.pair_count();
  summary["merges"] = stats.merges;
  summary["iterations"] = stats.iterations;
  summary["wall_seconds"] = stats.wall_seconds;
  if (outcome.clustered_eval) {
    summary["f_score"] = outcome.clustered_eval->f_score;
    summary["precision"] = outcome.clustered_eval->precision;
    summary["recall"] = outcome.clustered_eval->recall;
  }
  write_text(out_path("run_summary.json"), summary.dump(2) + "\n");
  write_manifest("match", outputs);
  return outcome;
}

void Pipeline::run_merge(const std::string& clusters_path) {
  prepare();
  fs::create_directories(cfg_.output_dir);
  const ClusterSet clusters = read_clusters_file(clusters_path);

  MergeStrategy strategy;
  strategy.kind = merge_kind_from_name(cfg_.merge.strategy);
  strategy.similarity = compile_metric(MetricSpec::single(cfg_.merge.metric), stats_);
  if (!cfg_.merge.corpus_path.empty()) {
    strategy.hits = CorpusHitCounter::from_file(cfg_.resolve_path(cfg_.merge.corpus_path));
  }
  strategy.noise_probes_m = cfg_.merge.probes_m;
  strategy.noise_letters = cfg_.merge.noise_letters;

  std::vector<MergeReportRow> report;
  const ChunkStore merged = merge_clusters(*store_, clusters, strategy, trust_, cfg_.seed,
                                           cfg_.entity_name_attr, &report);

  // Postprocessing: only originally provided data goes out. Inferred
  // vocabulary (reserved attributes) stays behind.
  Network net;
  Ontology ont;
  ont.relations = {"relatedTo"};
  for (const auto& c : merged.chunks()) {
    net.add_vertex(c.id);
    ont.individuals.push_back(c.id);
    for (const auto& p : c.pairs) {
      if (is_inferred_attribute(p.attr)) continue;
      net.vertex_attrs[c.id].emplace_back(p.attr, p.value);
      ont.axioms.push_back(Axiom::attribute_assertion(c.id, p.attr, p.value));
      if (std::find(ont.attributes.begin(), ont.attributes.end(), p.attr) ==
          ont.attributes.end()) {
        ont.attributes.push_back(p.attr);
      }
    }
  }
  for (const auto& l : merged.links()) {
    NetworkEdge e;
    e.id = l.id;
    e.u = l.a;
    e.v = l.b;
    net.add_edge(std::move(e));
    ont.axioms.push_back(Axiom::relation_assertion(l.a, "relatedTo", l.b));
  }
  write_network_file(net, out_path("merged.net"));
  write_ontology_file(ont, out_path("merged.onto"));

  std::ofstream rep(out_path("merge_report.tsv"));
  if (!rep) throw RuntimeError("cannot write merge report");
  rep << "cluster_id\tattribute\tchosen_value\tstrategy\tscore\n";
  for (const auto& row : report) {
    rep << row.cluster << '\t' << row.attr << '\t' << row.chosen << '\t' << row.strategy << '\t'
        << row.score << '\n';
  }
  write_manifest("merge", {"merged.net", "merged.onto", "merge_report.tsv"});
}

void Pipeline::run_eval() {
  prepare();
  fs::create_directories(cfg_.output_dir);
  std::vector<std::string> outputs;

  const CandidateSet candidates =
      store_->empty() ? CandidateSet::all_pairs(0) : CandidateSet::build(*store_, cfg_.blocking);

  if (cfg_.eval.sweep_param) {
    const std::string& param = *cfg_.eval.sweep_param;
    auto runner = [&](double value) -> std::pair<EvalReport, EvalReport> {
      SimilarityConfig sim = cfg_.similarity;
      if (param == "alpha") {
        sim.alpha = value;
      } else {
        sim.theta = value;
      }
      const SimilarityScorer scorer(*store_, trust_, sim, stats_);
      ClusterSet boot = bootstrap(*store_, candidates, scorer, cfg_.engine);
      EvalReport boot_report = pairwise_scores(boot, gold_, *store_, EvalStage::Bootstrap);
      ClusterSet final_set = resolve(*store_, candidates, scorer, std::move(boot), cfg_.engine);
      EvalReport clus_report = pairwise_scores(final_set, gold_, *store_, EvalStage::Clustered);
      return {boot_report, clus_report};
    };
    const auto rows = sweep(cfg_.eval.sweep_grid, runner, cfg_.engine.threads);
    write_sweep_table(rows, param, out_path("sweep.tsv"));
    outputs.push_back("sweep.tsv");
  }

  if (cfg_.eval.noise) {
    NoiseExperimentConfig ncfg = *cfg_.eval.noise;
    bool needs_corpus = false;
    for (MergeKind k : ncfg.strategies) needs_corpus |= (k == MergeKind::Trust);
    std::shared_ptr<HitCountProvider> provider;
    if (needs_corpus) {
      if (cfg_.merge.corpus_path.empty()) {
        throw ConfigError("merge.corpus: required by the noise experiment's trust strategy");
      }
      provider = CorpusHitCounter::from_file(cfg_.resolve_path(cfg_.merge.corpus_path));
    } else {
      provider = CorpusHitCounter::from_values({});
    }
    const SimilarityScorer scorer(*store_, trust_, cfg_.similarity, stats_);
    auto [boot, final_set] = run_clustering(scorer, candidates, nullptr);
    (void)boot;
    const auto rows = noise_experiment(*store_, final_set, *provider, ncfg, cfg_.seed);
    write_noise_table(rows, out_path("noise.tsv"));
    outputs.push_back("noise.tsv");
  }

  if (!cfg_.eval.sweep_param && !cfg_.eval.noise) {
    const SimilarityScorer scorer(*store_, trust_, cfg_.similarity, stats_);
    ResolveStats stats;
    auto [boot, final_set] = run_clustering(scorer, candidates, &stats);
    std::vector<EvalReport> reports = {
        pairwise_scores(boot, gold_, *store_, EvalStage::Bootstrap),
        pairwise_scores(final_set, gold_, *store_, EvalStage::Clustered)};
    write_eval_table(reports, out_path("eval.tsv"));
    outputs.push_back("eval.tsv");
  }
  write_manifest("eval", outputs);
}

AttributeMapping Pipeline::run_ar_test() {
  if (cfg_.datasets.size() < 2) {
    throw ConfigError("datasets: ar-test needs at least two datasets");
  }
  prepare();
  fs::create_directories(cfg_.output_dir);
  write_mapping_report(ar_mapping_, out_path("ar_mapping.tsv"));
  write_manifest("ar-test", {"ar_mapping.tsv"});
  return ar_mapping_;
}

void Pipeline::write_manifest(const std::string& command,
                              const std::vector<std::string>& outputs) const {
  nlohmann::json j;
  j["tool"] = "tam";
  j["version"] = kVersion;
  j["command"] = command;
  j["config_fingerprint"] = cfg_.fingerprint;
  j["seed"] = cfg_.seed;
  j["stage"] = stage_ == RunStage::Bootstrap ? "bootstrap" : "full";
  j["outputs"] = outputs;
  j["effective_config"] = nlohmann::json::parse(run_config_summary_json(cfg_));
  write_text(out_path("manifest.json"), j.dump(2) + "\n");
}

}  // namespace tam
