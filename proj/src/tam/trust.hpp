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

#ifndef TAM_TRUST_HPP_
#define TAM_TRUST_HPP_

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tam/chunk.hpp"

namespace tam {

enum class TrustConcat { Product, Min };

// Three-level trust assignment. Source and attribute trust come from
// configuration; chunk trust is computed by evaluate_chunks. The trust of a
// concrete value concatenates all three levels.
class TrustModel {
 public:
  std::map<std::string, double> source_trust;
  std::map<std::string, double> attribute_trust;  // key "source.attr"
  std::unordered_map<std::string, double> chunk_trust;
  TrustConcat concat = TrustConcat::Product;
  std::optional<double> default_source_trust = 1.0;
  std::optional<double> default_attribute_trust = 1.0;

  double source(const std::string& source_id) const;
  double attribute(const std::string& source_id, const std::string& attr) const;
  double chunk(const std::string& chunk_id) const;  // 1.0 until evaluated

  // Trust of the value behind chunk.pairs[pair_index]: the concatenation of
  // source, attribute and chunk trust.
  double value_trust(const KnowledgeChunk& chunk, std::size_t pair_index) const;

  // Convenience: trust of the n-th occurrence of `attr` in the chunk.
  double value_trust(const KnowledgeChunk& chunk, const std::string& attr,
                     std::size_t occurrence) const;

  // Source+attribute trust only; used where chunk trust is still unknown.
  double pair_trust(const std::string& source_id, const std::string& attr) const;

  void validate() const;  // all stored trusts within [0,1]
};

// Consistency check over a pair of attributes within one chunk. `applicable`
// guards checks that are undefined for some value shapes (e.g. numeric
// comparison over free text). Rules below min_trust are skipped.
struct InconsistencyRule {
  std::string attr_a;
  std::string attr_b;
  std::function<bool(const Value&, const Value&)> applicable;
  std::function<bool(const Value&, const Value&)> consistent;
  double min_trust = 0.0;
};

InconsistencyRule make_rule(const std::string& check, const std::string& attr_a,
                            const std::string& attr_b, double min_trust,
                            double numeric_tolerance = 0.0);

// Chunk evaluation: T_K = (applicable - failing) / applicable per chunk;
// chunks with no applicable rule instance get full trust.
void evaluate_chunks(TrustModel& model, const ChunkStore& store,
                     const std::vector<InconsistencyRule>& rules);

}  // namespace tam

#endif  // TAM_TRUST_HPP_
