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

#ifndef TAM_ATTRES_HPP_
#define TAM_ATTRES_HPP_

#include <map>
#include <string>
#include <vector>

#include "tam/chunk.hpp"
#include "tam/metrics.hpp"
#include "tam/model.hpp"
#include "tam/semantic.hpp"

namespace tam {

// Injective alignment between two attribute schemas. Scores are metric
// similarities except for the domain matcher, which records 1 - distance.
struct AttributeMapping {
  struct Pair {
    std::string attr_a;
    std::string attr_b;
    std::string matcher;
    double score = 0.0;
  };
  std::vector<Pair> pairs;
  std::vector<std::string> unmatched_a;
  std::vector<std::string> unmatched_b;

  bool has_a(const std::string& attr) const;
  bool has_b(const std::string& attr) const;
};

AttributeMapping exact_match(const std::vector<std::string>& attrs_a,
                             const std::vector<std::string>& attrs_b);

// Greedy best-score injective matching over name pairs at or above the
// threshold; descending score, ties by lexicographic name pair.
AttributeMapping similarity_match(const std::vector<std::string>& attrs_a,
                                  const std::vector<std::string>& attrs_b,
                                  const StringMetric& metric = {}, double threshold = 0.95);

// similarity_match preceded by a pass that pairs names sharing a synset.
AttributeMapping similarity_match_plus(const std::vector<std::string>& attrs_a,
                                       const std::vector<std::string>& attrs_b,
                                       const SynonymDict& synonyms,
                                       const StringMetric& metric = {}, double threshold = 0.95);

// Shape of an attribute's values, normalized feature-wise before distance
// computation.
struct DomainProfile {
  std::string attr;
  double avg_token_count = 0.0;
  double numeric_fraction = 0.0;
  double avg_length = 0.0;
  double distinct_ratio = 0.0;
  std::size_t values = 0;
};

DomainProfile profile_attribute(const ChunkStore& store, const std::string& source,
                                const std::string& attr);

// Minimal Euclidean distance over normalized profiles, greedy injective,
// capped.
AttributeMapping domain_match(const std::vector<DomainProfile>& profiles_a,
                              const std::vector<DomainProfile>& profiles_b,
                              double distance_cap = 0.25);

// sameAs/seeAlso assertions or a shared superclass ancestor (via subClassOf
// chains) in either ontology; falls back to similarity_match_plus when no
// such axiom applies.
AttributeMapping ontology_match(const Ontology& ont_a, const Ontology& ont_b,
                                const std::vector<std::string>& attrs_a,
                                const std::vector<std::string>& attrs_b,
                                const SynonymDict& synonyms, const StringMetric& metric = {},
                                double threshold = 0.95);

struct ResolveAttributesOptions {
  std::vector<std::string> ladder = {"exact", "similarity", "similarity+", "domain", "ontology"};
  double similarity_threshold = 0.95;
  double domain_distance_cap = 0.25;
  const SynonymDict* synonyms = nullptr;
  std::map<std::string, const Ontology*> ontologies;  // source -> ontology
};

struct ResolutionOutcome {
  AttributeMapping mapping;                              // pairs across all source pairs
  std::map<std::string, std::string> canonical;          // "source:attr" -> rewritten id
};

// Folds later sources onto the first source's schema: matchers run in ladder
// order, first pairing wins, matched attributes rewrite to the canonical
// name,unmatched ones stay namespaced "source:attr". Chunk pair counts and
// provenance are untouched.
ResolutionOutcome resolve_attributes(ChunkStore& store, const std::vector<std::string>& sources,
                                     const ResolveAttributesOptions& options);

void write_mapping_report(const AttributeMapping& mapping, const std::string& path);

}  // namespace tam

#endif  // TAM_ATTRES_HPP_
