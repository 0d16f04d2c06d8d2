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

#include "tam/trust.hpp"

#include <algorithm>
#include <cmath>

#include "tam/error.hpp"

namespace tam {
namespace {

double checked(double t, const std::string& what) {
  if (t < 0.0 || t > 1.0) throw ConfigError("trust value out of [0,1] for " + what);
  return t;
}

}  // namespace

double TrustModel::source(const std::string& source_id) const {
  auto it = source_trust.find(source_id);
  if (it != source_trust.end()) return it->second;
  if (!default_source_trust) {
    throw ConfigError("no trust assigned to source '" + source_id + "' and no default set");
  }
  return *default_source_trust;
}

double TrustModel::attribute(const std::string& source_id, const std::string& attr) const {
  auto it = attribute_trust.find(source_id + "." + attr);
  if (it != attribute_trust.end()) return it->second;
  if (!default_attribute_trust) {
    throw ConfigError("no trust assigned to attribute '" + source_id + "." + attr +
                      "' and no default set");
  }
  return *default_attribute_trust;
}

double TrustModel::chunk(const std::string& chunk_id) const {
  auto it = chunk_trust.find(chunk_id);
  return it == chunk_trust.end() ? 1.0 : it->second;
}

double TrustModel::value_trust(const KnowledgeChunk& c, std::size_t pair_index) const {
  if (pair_index >= c.pairs.size()) {
    throw RuntimeError("pair index out of range for chunk " + c.id);
  }
  const AttrPair& p = c.pairs[pair_index];
  const double ts = source(p.source);
  const double ta = attribute(p.source, p.attr);
  const double tk = chunk(c.id);
  return concat == TrustConcat::Product ? ts * ta * tk : std::min({ts, ta, tk});
}

double TrustModel::value_trust(const KnowledgeChunk& c, const std::string& attr,
                               std::size_t occurrence) const {
  std::size_t seen = 0;
  for (std::size_t i = 0; i < c.pairs.size(); ++i) {
    if (c.pairs[i].attr != attr) continue;
    if (seen == occurrence) return value_trust(c, i);
    ++seen;
  }
  throw RuntimeError("chunk " + c.id + " has no occurrence " + std::to_string(occurrence) +
                     " of attribute " + attr);
}

double TrustModel::pair_trust(const std::string& source_id, const std::string& attr) const {
  const double ts = source(source_id);
  const double ta = attribute(source_id, attr);
  return concat == TrustConcat::Product ? ts * ta : std::min(ts, ta);
}

void TrustModel::validate() const {
  for (const auto& [k, v] : source_trust) checked(v, "source " + k);
  for (const auto& [k, v] : attribute_trust) checked(v, "attribute " + k);
  if (default_source_trust) checked(*default_source_trust, "source default");
  if (default_attribute_trust) checked(*default_attribute_trust, "attribute default");
}

InconsistencyRule make_rule(const std::string& check, const std::string& attr_a,
                            const std::string& attr_b, double min_trust,
                            double numeric_tolerance) {
  InconsistencyRule rule;
  rule.attr_a = attr_a;
  rule.attr_b = attr_b;
  rule.min_trust = min_trust;
  if (check == "equal") {
    rule.applicable = [](const Value&, const Value&) { return true; };
    rule.consistent = [](const Value& a, const Value& b) { return a.text == b.text; };
  } else if (check == "numeric_consistent") {
    rule.applicable = [](const Value& a, const Value& b) {
      return a.is_numeric() && b.is_numeric();
    };
    rule.consistent = [numeric_tolerance](const Value& a, const Value& b) {
      return std::abs(*a.number - *b.number) <= numeric_tolerance;
    };
  } else {
    throw ConfigError("unknown inconsistency check '" + check + "'");
  }
  return rule;
}

void evaluate_chunks(TrustModel& model, const ChunkStore& store,
                     const std::vector<InconsistencyRule>& rules) {
  model.validate();
  for (const KnowledgeChunk& c : store.chunks()) {
    std::size_t applicable = 0;
    std::size_t failing = 0;
    for (const auto& rule : rules) {
      for (const AttrPair& pa : c.pairs) {
        if (pa.attr != rule.attr_a) continue;
        if (model.pair_trust(pa.source, pa.attr) < rule.min_trust) continue;
        for (const AttrPair& pb : c.pairs) {
          if (pb.attr != rule.attr_b) continue;
          if (model.pair_trust(pb.source, pb.attr) < rule.min_trust) continue;
          if (rule.applicable && !rule.applicable(pa.value, pb.value)) continue;
          ++applicable;
          if (!rule.consistent(pa.value, pb.value)) ++failing;
        }
      }
    }
    // No applicable instance divides by zero in the density formula; full
    // trust is the neutral element for the product rule.
    model.chunk_trust[c.id] =
        applicable == 0
            ? 1.0
            : static_cast<double>(applicable - failing) / static_cast<double>(applicable);
  }
}

}  // namespace tam
