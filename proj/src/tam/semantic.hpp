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

#ifndef TAM_SEMANTIC_HPP_
#define TAM_SEMANTIC_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tam/chunk.hpp"

namespace tam {

// Semantic metrics answer "do these values mean the same thing", not "do
// they look alike". Undefined means the question does not apply to the
// values at hand and the comparison must be excluded, not scored zero.
enum class SemanticOutcome { Match, NoMatch, Undefined };

// Word -> synset dictionary. Every line of the file format
// "word: syn1, syn2, ..." defines one synset over all listed words.
class SynonymDict {
 public:
  void add_synset(const std::vector<std::string>& words);
  bool are_synonyms(std::string_view a, std::string_view b) const;
  bool empty() const { return sets_.empty(); }

  static SynonymDict load(const std::string& path);

 private:
  std::unordered_map<std::string, std::vector<std::size_t>> sets_;
  std::size_t next_set_ = 0;
};

// Token-based matching of names and abbreviations: the value with fewer
// tokens drives; each of its tokens must match some token of the other value
// by equality or prefix (which covers one-letter abbreviations).
SemanticOutcome name_metric(std::string_view a, std::string_view b);

SemanticOutcome number_metric(std::string_view a, std::string_view b, double tolerance = 0.0);

// Serial/code detection (alphanumeric tokens mixing letters and digits,
// length >= 4); falls back to name-style matching with a k-token quorum.
SemanticOutcome product_metric(std::string_view a, std::string_view b, std::size_t k = 2);

// Name metric extended with synonym-aware token matching and "part N" tail
// stripping.
SemanticOutcome title_metric(std::string_view a, std::string_view b, const SynonymDict& synonyms);

struct RestaurantMetricConfig {
  std::string name_attr = "name";
  std::string phone_attr = "phone";
  std::string addr_attr = "addr";
  double threshold = 0.95;
};

// Cluster-level rule: name must agree and at least one of phone/address
// must agree, all by best-pair Jaro-Winkler.
SemanticOutcome restaurant_metric(const std::vector<const KnowledgeChunk*>& left,
                                  const std::vector<const KnowledgeChunk*>& right,
                                  const RestaurantMetricConfig& cfg);

// Running totals behind semantic similarity: trust mass of matched
// assumptions over assumptions that had a defined outcome.
struct AssumptionTally {
  double matched_trust = 0.0;
  std::size_t total = 0;
  std::size_t undefined = 0;

  void record(SemanticOutcome outcome, double trust);
  std::optional<double> ratio() const;  // absent when nothing was defined
};

}  // namespace tam

#endif  // TAM_SEMANTIC_HPP_
