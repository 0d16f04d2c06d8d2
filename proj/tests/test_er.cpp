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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "support/fixtures.hpp"
#include "tam/er.hpp"
#include "tam/error.hpp"
#include "tam/ingest.hpp"

using namespace tam;
namespace ts = tam::testsupport;

namespace {

std::shared_ptr<const CorpusStats> stats_for(const ChunkStore& store) {
  return std::make_shared<CorpusStats>(CorpusStats::build(store));
}

// Canonical partition signature for equality checks across runs.
std::set<std::vector<std::uint32_t>> signature(const ClusterSet& cs) {
  std::set<std::vector<std::uint32_t>> out;
  for (ClusterId id : cs.live_ids()) out.insert(cs.cluster(id).members);
  return out;
}

}  // namespace

TEST_CASE("blocking strategies") {
  SUBCASE("standard blocking keys on shared tokens") {
    auto store = ts::store_of({ts::chunk("a", {{"name", "thomas mitchell"}}),
                               ts::chunk("b", {{"name", "t. mitchell"}}),
                               ts::chunk("c", {{"name", "ursula wegener"}})});
    BlockingConfig cfg;
    cfg.attributes = {"name"};
    const CandidateSet cands = CandidateSet::build(store, cfg);
    CHECK(cands.allows(0, 1));
    CHECK(!cands.allows(0, 2));
    CHECK(!cands.allows(1, 2));
  }

  SUBCASE("similarity blocking joins blocks through any qualifying attribute") {
    auto store = ts::store_of(
        {ts::chunk("a", {{"name", "zz plisk"}, {"phone", "6268793312"}}),
         ts::chunk("b", {{"name", "qq vortn"}, {"phone", "6268793"}}),
         ts::chunk("c", {{"name", "mmwoven"}, {"phone", "447"}})});
    BlockingConfig cfg;
    cfg.strategy = BlockingConfig::Strategy::Similarity;
    cfg.similarity_thresholds = {{"name", 0.3}, {"phone", 0.7}};
    const CandidateSet cands = CandidateSet::build(store, cfg);
    CHECK(cands.allows(0, 1));  // phone prefix keeps them together
    CHECK(!cands.allows(0, 2));
  }

  SUBCASE("ngram blocking needs the configured multiset overlap") {
    auto store = ts::store_of({ts::chunk("a", {{"affil", "arizona state university"}}),
                               ts::chunk("b", {{"affil", "arizona state univ."}}),
                               ts::chunk("c", {{"affil", "zzzzzzz unrelated name"}})});
    BlockingConfig cfg;
    cfg.strategy = BlockingConfig::Strategy::Ngram;
    cfg.ngram_n = 6;
    cfg.ngram_min_matches = 4;
    const CandidateSet cands = CandidateSet::build(store, cfg);
    CHECK(cands.allows(0, 1));
    CHECK(!cands.allows(0, 2));
    CHECK(ngram_overlap("arizona state university", "arizona state univ.", 6) >= 4);
  }

  SUBCASE("parameter validation") {
    BlockingConfig bad;
    bad.ngram_min_matches = 0;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    bad = BlockingConfig{};
    bad.similarity_thresholds["x"] = 1.5;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
  }
}

TEST_CASE("blocking over the excerpt fixtures") {
  const std::string fx = TAM_FIXTURE_DIR;

  SUBCASE("restaurants: similarity blocking on name or phone") {
    ChunkStore store;
    DatasetDescriptor d;
    d.name = "rest";
    d.path = fx + "/restaurants.csv";
    load_dataset(d, store, nullptr);
    BlockingConfig cfg;
    cfg.strategy = BlockingConfig::Strategy::Similarity;
    cfg.similarity_thresholds = {{"name", 0.3}, {"phone", 0.7}};
    const CandidateSet cands = CandidateSet::build(store, cfg);
    // the duplicate pairs of the excerpt must be candidates
    CHECK(cands.allows(*store.index_of("rest:r1"), *store.index_of("rest:r2")));
    CHECK(cands.allows(*store.index_of("rest:r3"), *store.index_of("rest:r4")));
    CHECK(cands.allows(*store.index_of("rest:r5"), *store.index_of("rest:r6")));
  }

  SUBCASE("affiliations: ngram blocking groups the name variants") {
    ChunkStore store;
    DatasetDescriptor d;
    d.name = "aff";
    d.path = fx + "/affiliations.csv";
    load_dataset(d, store, nullptr);
    BlockingConfig cfg;
    cfg.strategy = BlockingConfig::Strategy::Ngram;
    cfg.attributes = {"affil"};
    const CandidateSet cands = CandidateSet::build(store, cfg);
    CHECK(cands.allows(*store.index_of("aff:f1"), *store.index_of("aff:f2")));
    CHECK(cands.allows(*store.index_of("aff:f10"), *store.index_of("aff:f11")));
    CHECK(!cands.allows(*store.index_of("aff:f1"), *store.index_of("aff:f12")));
  }

  SUBCASE("abtbuy: the product metric pairs the code-bearing offers") {
    ChunkStore store;
    DatasetDescriptor d;
    d.name = "ab";
    d.path = fx + "/abtbuy.csv";
    load_dataset(d, store, nullptr);
    SimilarityConfig cfg;
    cfg.default_metric = MetricSpec::single("jarowinkler");
    cfg.semantic_metric["name"] = {"product"};
    SimilarityScorer scorer(store, TrustModel{}, cfg,
                            std::make_shared<CorpusStats>(CorpusStats::build(store)));
    ClusterSet cs(store.size());
    const auto sem = scorer.sim_sem(cs.cluster(*store.index_of("ab:a1")),
                                    cs.cluster(*store.index_of("ab:a2")));
    REQUIRE(sem.has_value());
    CHECK(*sem == doctest::Approx(1.0));  // shared serial code 40RV525U
    const auto other = scorer.sim_sem(cs.cluster(*store.index_of("ab:a1")),
                                      cs.cluster(*store.index_of("ab:a3")));
    REQUIRE(other.has_value());
    CHECK(*other == doctest::Approx(0.0));
  }
}

TEST_CASE("similarity queue invalidation") {
  SimilarityQueue q;
  ClusterSet cs(4);
  const auto alive = [&cs](ClusterId id) { return cs.alive(id); };

  q.update(0.99, 0, 1, 0.9);
  q.update(0.97, 0, 2, 0.9);
  q.update(0.96, 2, 3, 0.9);

  SUBCASE("pop order and retirement") {
    auto top = q.pop(alive);
    REQUIRE(top);
    CHECK(top->a == 0);
    CHECK(top->b == 1);
    cs.merge(0, 1);
    // The pending (0,2) entry references a retired cluster and must skip.
    auto next = q.pop(alive);
    REQUIRE(next);
    CHECK(next->a == 2);
    CHECK(next->b == 3);
    CHECK(!q.pop(alive));
  }

  SUBCASE("update supersedes the queued score") {
    q.update(0.5, 0, 1, 0.9);  // below threshold: pair must never surface
    auto top = q.pop(alive);
    REQUIRE(top);
    CHECK(top->a == 0);
    CHECK(top->b == 2);
  }

  SUBCASE("ties pop the smaller pair") {
    SimilarityQueue t;
    t.update(0.95, 2, 7, 0.9);
    t.update(0.95, 1, 9, 0.9);
    ClusterSet ten(10);
    auto e = t.pop([&ten](ClusterId id) { return ten.alive(id); });
    REQUIRE(e);
    CHECK(e->a == 1);
    CHECK(e->b == 9);
  }
}

TEST_CASE("bootstrap") {
  const TrustModel trust;
  SimilarityConfig cfg;
  cfg.default_metric = MetricSpec::single("levenshtein");
  cfg.delta_s = 0.0;
  BlockingConfig blocking;

  SUBCASE("nothing above threshold stays singleton") {
    auto store = ts::store_of({ts::chunk("a", {{"name", "aaaa bbbb"}}),
                               ts::chunk("b", {{"name", "aaaa cccc"}})});
    SimilarityScorer scorer(store, trust, cfg, stats_for(store));
    const auto cands = CandidateSet::build(store, blocking);
    CHECK(bootstrap(store, cands, scorer).size() == 2);
  }

  SUBCASE("exact duplicates merge") {
    auto store = ts::store_of({ts::chunk("a", {{"name", "same name"}}),
                               ts::chunk("b", {{"name", "same name"}}),
                               ts::chunk("c", {{"name", "same namx"}})});
    SimilarityScorer scorer(store, trust, cfg, stats_for(store));
    const auto cands = CandidateSet::build(store, blocking);
    const ClusterSet cs = bootstrap(store, cands, scorer);
    CHECK(cs.size() == 2);
    CHECK(cs.cluster_of(0) == cs.cluster_of(1));
    CHECK(cs.cluster_of(2) != cs.cluster_of(0));
  }

  SUBCASE("semantic name matching splits homonym variants correctly") {
    SimilarityConfig sem = cfg;
    sem.default_metric = MetricSpec::single("jarowinkler");
    sem.delta_s = 4.0;
    sem.semantic_metric["name"] = {"name"};
    auto store = ts::store_of({ts::chunk("a", {{"name", "w. cohen"}}),
                               ts::chunk("b", {{"name", "william cohen"}}),
                               ts::chunk("c", {{"name", "j. smith"}})});
    SimilarityScorer scorer(store, trust, sem, stats_for(store));
    const ClusterSet cs = bootstrap(store, CandidateSet::all_pairs(3), scorer);
    CHECK(cs.size() == 2);
    CHECK(cs.cluster_of(0) == cs.cluster_of(1));
  }
}

TEST_CASE("resolve") {
  const TrustModel trust;

  SUBCASE("theta of one admits only exact-score pairs") {
    SimilarityConfig cfg;
    cfg.default_metric = MetricSpec::single("levenshtein");
    cfg.delta_s = 0.0;
    cfg.alpha = 1.0;
    cfg.theta = 1.0;
    auto store = ts::store_of({ts::chunk("a", {{"name", "abcd"}}),
                               ts::chunk("b", {{"name", "abcd"}}),
                               ts::chunk("c", {{"name", "abce"}})});
    SimilarityScorer scorer(store, trust, cfg, stats_for(store));
    const auto cands = CandidateSet::all_pairs(3);
    ClusterSet cs = resolve(store, cands, scorer, bootstrap(store, cands, scorer));
    CHECK(cs.size() == 2);
    CHECK(cs.cluster_of(0) == cs.cluster_of(1));
  }

  SUBCASE("without relations and weight the result is the bootstrap fixpoint") {
    SimilarityConfig cfg;
    cfg.default_metric = MetricSpec::single("levenshtein");
    cfg.delta_s = 0.0;
    cfg.alpha = 1.0;  // delta_R = 0
    auto store = ts::store_of({ts::chunk("a", {{"name", "alpha beta"}}),
                               ts::chunk("b", {{"name", "alpha betb"}}),
                               ts::chunk("c", {{"name", "gamma delt"}})});
    SimilarityScorer scorer(store, trust, cfg, stats_for(store));
    const auto cands = CandidateSet::all_pairs(3);
    const ClusterSet boot = bootstrap(store, cands, scorer);
    ClusterSet cs = resolve(store, cands, scorer, ClusterSet(boot));
    CHECK(signature(cs) == signature(boot));
  }

  SUBCASE("relational term lifts the dependent pairs after the author merge") {
    // Six chunks: one author entity with two identical references; two pairs
    // of papers at attribute similarity 17/18, each linked to one author ref.
    const std::string p1 = "benedikta mccallum";
    std::string p2 = p1;
    p2.back() = 'x';
    const std::string q1 = "konstantin szalard";
    std::string q2 = q1;
    q2.back() = 'x';
    auto store = ts::store_of(
        {ts::chunk("a1", {{"name", "amelia hartwright"}}),
         ts::chunk("a2", {{"name", "amelia hartwright"}}), ts::chunk("p1", {{"name", p1}}),
         ts::chunk("p2", {{"name", p2}}), ts::chunk("q1", {{"name", q1}}),
         ts::chunk("q2", {{"name", q2}})},
        {{"p1", "a1"}, {"q1", "a1"}, {"p2", "a2"}, {"q2", "a2"}});
    SimilarityConfig cfg;
    cfg.default_metric = MetricSpec::single("levenshtein");
    cfg.delta_s = 0.0;  // alpha 0.85, aligned relational
    SimilarityScorer scorer(store, trust, cfg, stats_for(store));
    const auto cands = CandidateSet::all_pairs(6);

    const ClusterSet boot = bootstrap(store, cands, scorer);
    CHECK(boot.size() == 5);  // only the identical author refs merged

    // Before the author merge the papers share no resolved neighbor...
    ClusterSet singletons(6);
    CHECK(scorer.sim_rel(2, 3, singletons) == doctest::Approx(0.0));
    // ...afterwards they share the author cluster and the ratio saturates.
    CHECK(scorer.sim_rel(2, 3, boot) == doctest::Approx(1.0));
    CHECK(scorer.sim_joint(2, 3, boot) == doctest::Approx(0.85 * (17.0 / 18.0) + 0.15));

    ClusterSet cs = resolve(store, cands, scorer, ClusterSet(boot));
    CHECK(cs.size() == 3);
    CHECK(cs.cluster_of(2) == cs.cluster_of(3));
    CHECK(cs.cluster_of(4) == cs.cluster_of(5));
    CHECK(cs.cluster_of(2) != cs.cluster_of(4));
  }

  SUBCASE("partition invariants and determinism on random corpora") {
    Rng rng(808);
    for (int round = 0; round < 10; ++round) {
      ChunkStore store = ts::random_chunk_graph(rng, 18);
      SimilarityConfig cfg;
      cfg.default_metric = MetricSpec::single("jarowinkler");
      cfg.delta_s = 0.0;
      cfg.theta = 0.8;
      SimilarityScorer scorer(store, TrustModel{}, cfg, stats_for(store));
      BlockingConfig blocking;
      const auto cands = CandidateSet::build(store, blocking);
      ResolveStats stats;
      ClusterSet first = resolve(store, cands, scorer, bootstrap(store, cands, scorer), {}, &stats);
      first.validate(store);
      CHECK(stats.merges < store.size());
      ClusterSet second = resolve(store, cands, scorer, bootstrap(store, cands, scorer));
      CHECK(signature(first) == signature(second));
    }
  }
}

TEST_CASE("neighbor-only refresh matches full refresh") {
  Rng rng(4242);
  int done = 0;
  while (done < 50) {
    ChunkStore store = ts::random_chunk_graph(rng, 6 + rng.below(25));
    SimilarityConfig cfg;
    cfg.default_metric = MetricSpec::single("jarowinkler");
    cfg.delta_s = 0.0;
    cfg.theta = 0.82;
    SimilarityScorer scorer(store, TrustModel{}, cfg,
                            std::make_shared<CorpusStats>(CorpusStats::build(store)));
    const auto cands = CandidateSet::all_pairs(store.size());
    const ClusterSet boot = bootstrap(store, cands, scorer);

    EngineOptions neighbor_only;
    EngineOptions full;
    full.neighbor_only_refresh = false;
    const ClusterSet a = resolve(store, cands, scorer, ClusterSet(boot), neighbor_only);
    const ClusterSet b = resolve(store, cands, scorer, ClusterSet(boot), full);
    REQUIRE(signature(a) == signature(b));
    ++done;
  }
}
