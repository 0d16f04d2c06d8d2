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

#include "tam/attres.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <set>

#include "tam/error.hpp"
#include "tam/strutil.hpp"

namespace tam {
namespace {

struct Candidate {
  double score;
  std::string a;
  std::string b;
};

// Greedy injective assignment: best score first, ties by name pair.
AttributeMapping greedy(const std::vector<std::string>& attrs_a,
                        const std::vector<std::string>& attrs_b, std::vector<Candidate> cands,
                        const std::string& matcher) {
  std::sort(cands.begin(), cands.end(), [](const Candidate& x, const Candidate& y) {
    if (x.score != y.score) return x.score > y.score;
    return std::tie(x.a, x.b) < std::tie(y.a, y.b);
  });
  AttributeMapping out;
  std::set<std::string> used_a, used_b;
  for (const auto& c : cands) {
    if (used_a.count(c.a) || used_b.count(c.b)) continue;
    used_a.insert(c.a);
    used_b.insert(c.b);
    out.pairs.push_back({c.a, c.b, matcher, c.score});
  }
  for (const auto& a : attrs_a) {
    if (!used_a.count(a)) out.unmatched_a.push_back(a);
  }
  for (const auto& b : attrs_b) {
    if (!used_b.count(b)) out.unmatched_b.push_back(b);
  }
  return out;
}

}  // namespace

bool AttributeMapping::has_a(const std::string& attr) const {
  return std::any_of(pairs.begin(), pairs.end(),
                     [&](const Pair& p) { return p.attr_a == attr; });
}

bool AttributeMapping::has_b(const std::string& attr) const {
  return std::any_of(pairs.begin(), pairs.end(),
                     [&](const Pair& p) { return p.attr_b == attr; });
}

AttributeMapping exact_match(const std::vector<std::string>& attrs_a,
                             const std::vector<std::string>& attrs_b) {
  std::vector<Candidate> cands;
  for (const auto& a : attrs_a) {
    for (const auto& b : attrs_b) {
      if (to_lower(a) == to_lower(b)) cands.push_back({1.0, a, b});
    }
  }
  return greedy(attrs_a, attrs_b, std::move(cands), "exact");
}

AttributeMapping similarity_match(const std::vector<std::string>& attrs_a,
                                  const std::vector<std::string>& attrs_b,
                                  const StringMetric& metric, double threshold) {
  const StringMetric m = metric ? metric : StringMetric(&jaro_winkler);
  std::vector<Candidate> cands;
  for (const auto& a : attrs_a) {
    for (const auto& b : attrs_b) {
      const double s = m(to_lower(a), to_lower(b));
      if (s >= threshold) cands.push_back({s, a, b});
    }
  }
  return greedy(attrs_a, attrs_b, std::move(cands), "similarity");
}

AttributeMapping similarity_match_plus(const std::vector<std::string>& attrs_a,
                                       const std::vector<std::string>& attrs_b,
                                       const SynonymDict& synonyms, const StringMetric& metric,
                                       double threshold) {
  std::vector<Candidate> syn_cands;
  for (const auto& a : attrs_a) {
    for (const auto& b : attrs_b) {
      if (synonyms.are_synonyms(a, b)) syn_cands.push_back({1.0, a, b});
    }
  }
  AttributeMapping out = greedy(attrs_a, attrs_b, std::move(syn_cands), "similarity+");
  AttributeMapping rest =
      similarity_match(out.unmatched_a, out.unmatched_b, metric, threshold);
  for (auto& p : rest.pairs) {
    p.matcher = "similarity+";
    out.pairs.push_back(p);
  }
  out.unmatched_a = rest.unmatched_a;
  out.unmatched_b = rest.unmatched_b;
  return out;
}

DomainProfile profile_attribute(const ChunkStore& store, const std::string& source,
                                const std::string& attr) {
  DomainProfile p;
  p.attr = attr;
  std::set<std::string> distinct;
  double tokens = 0.0, numeric = 0.0, length = 0.0;
  for (const auto& c : store.chunks()) {
    for (const auto& pair : c.pairs) {
      if (pair.attr != attr || pair.source != source) continue;
      ++p.values;
      tokens += static_cast<double>(tokenize(pair.value.text).size());
      numeric += pair.value.is_numeric() ? 1.0 : 0.0;
      length += static_cast<double>(pair.value.text.size());
      distinct.insert(pair.value.text);
    }
  }
  if (p.values > 0) {
    const double n = static_cast<double>(p.values);
    p.avg_token_count = tokens / n;
    p.numeric_fraction = numeric / n;
    p.avg_length = length / n;
    p.distinct_ratio = static_cast<double>(distinct.size()) / n;
  }
  return p;
}

AttributeMapping domain_match(const std::vector<DomainProfile>& profiles_a,
                              const std::vector<DomainProfile>& profiles_b,
                              double distance_cap) {
  // Feature-wise normalization by the maximum across both sides keeps the
  // unbounded features (token count, length) comparable with the ratios.
  double max_tokens = 0.0, max_length = 0.0;
  for (const auto* side : {&profiles_a, &profiles_b}) {
    for (const auto& p : *side) {
      max_tokens = std::max(max_tokens, p.avg_token_count);
      max_length = std::max(max_length, p.avg_length);
    }
  }
  auto features = [&](const DomainProfile& p) {
    return std::array<double, 4>{max_tokens > 0 ? p.avg_token_count / max_tokens : 0.0,
                                 p.numeric_fraction,
                                 max_length > 0 ? p.avg_length / max_length : 0.0,
                                 p.distinct_ratio};
  };
  std::vector<Candidate> cands;
  std::vector<std::string> names_a, names_b;
  for (const auto& pa : profiles_a) names_a.push_back(pa.attr);
  for (const auto& pb : profiles_b) names_b.push_back(pb.attr);
  for (const auto& pa : profiles_a) {
    if (pa.values == 0) continue;
    const auto fa = features(pa);
    for (const auto& pb : profiles_b) {
      if (pb.values == 0) continue;
      const auto fb = features(pb);
      double d2 = 0.0;
      for (std::size_t i = 0; i < fa.size(); ++i) d2 += (fa[i] - fb[i]) * (fa[i] - fb[i]);
      const double dist = std::sqrt(d2);
      if (dist <= distance_cap) cands.push_back({1.0 - std::min(1.0, dist), pa.attr, pb.attr});
    }
  }
  return greedy(names_a, names_b, std::move(cands), "domain");
}

namespace {

// Transitive subClassOf ancestors of `id` within one ontology.
std::set<std::string> ancestors(const Ontology& ont, const std::string& id) {
  std::set<std::string> out;
  std::vector<std::string> frontier = {id};
  while (!frontier.empty()) {
    const std::string cur = frontier.back();
    frontier.pop_back();
    for (const auto& a : ont.axioms) {
      if (a.kind == AxiomKind::RelationAssertion && a.relation == "subClassOf" &&
          a.subject == cur && out.insert(a.object).second) {
        frontier.push_back(a.object);
      }
    }
  }
  return out;
}

bool same_as_linked(const Ontology& ont, const std::string& a, const std::string& b) {
  for (const auto& ax : ont.axioms) {
    if (ax.kind != AxiomKind::RelationAssertion) continue;
    if (ax.relation != "sameAs" && ax.relation != "seeAlso") continue;
    if ((ax.subject == a && ax.object == b) || (ax.subject == b && ax.object == a)) return true;
  }
  return false;
}

}  // namespace

AttributeMapping ontology_match(const Ontology& ont_a, const Ontology& ont_b,
                                const std::vector<std::string>& attrs_a,
                                const std::vector<std::string>& attrs_b,
                                const SynonymDict& synonyms, const StringMetric& metric,
                                double threshold) {
  bool any_axiom = false;
  std::vector<Candidate> cands;
  for (const auto& a : attrs_a) {
    for (const auto& b : attrs_b) {
      if (same_as_linked(ont_a, a, b) || same_as_linked(ont_b, a, b)) {
        cands.push_back({1.0, a, b});
        any_axiom = true;
        continue;
      }
      for (const Ontology* ont : {&ont_a, &ont_b}) {
        const auto anc_a = ancestors(*ont, a);
        if (anc_a.empty()) continue;
        const auto anc_b = ancestors(*ont, b);
        std::vector<std::string> shared;
        std::set_intersection(anc_a.begin(), anc_a.end(), anc_b.begin(), anc_b.end(),
                              std::back_inserter(shared));
        if (!shared.empty()) {
          cands.push_back({0.9, a, b});
          any_axiom = true;
          break;
        }
      }
    }
  }
  if (!any_axiom) {
    AttributeMapping out = similarity_match_plus(attrs_a, attrs_b, synonyms, metric, threshold);
    for (auto& p : out.pairs) p.matcher = "ontology(" + p.matcher + ")";
    return out;
  }
  return greedy(attrs_a, attrs_b, std::move(cands), "ontology");
}

ResolutionOutcome resolve_attributes(ChunkStore& store, const std::vector<std::string>& sources,
                                     const ResolveAttributesOptions& options) {
  ResolutionOutcome outcome;
  if (sources.size() < 2) return outcome;

  // Per-source schema, attribute names in first-appearance order.
  std::map<std::string, std::vector<std::string>> schema;
  for (const auto& c : store.chunks()) {
    for (const auto& p : c.pairs) {
      auto& attrs = schema[p.source];
      if (std::find(attrs.begin(), attrs.end(), p.attr) == attrs.end()) attrs.push_back(p.attr);
    }
  }

  static const SynonymDict kEmptyDict;
  const SynonymDict& syn = options.synonyms ? *options.synonyms : kEmptyDict;
  const std::string& pivot = sources.front();
  std::vector<std::string> canonical_pool = schema[pivot];
  for (const auto& a : canonical_pool) outcome.canonical[pivot + ":" + a] = a;

  for (std::size_t s = 1; s < sources.size(); ++s) {
    const std::string& src = sources[s];
    std::vector<std::string> pending_a = canonical_pool;
    std::vector<std::string> pending_b = schema[src];

    for (const auto& rung : options.ladder) {
      if (pending_a.empty() || pending_b.empty()) break;
      AttributeMapping m;
      if (rung == "exact") {
        m = exact_match(pending_a, pending_b);
      } else if (rung == "similarity") {
        m = similarity_match(pending_a, pending_b, {}, options.similarity_threshold);
      } else if (rung == "similarity+") {
        m = similarity_match_plus(pending_a, pending_b, syn, {}, options.similarity_threshold);
      } else if (rung == "domain") {
        std::vector<DomainProfile> pa, pb;
        for (const auto& a : pending_a) pa.push_back(profile_attribute(store, pivot, a));
        for (const auto& b : pending_b) pb.push_back(profile_attribute(store, src, b));
        m = domain_match(pa, pb, options.domain_distance_cap);
      } else if (rung == "ontology") {
        auto ia = options.ontologies.find(pivot);
        auto ib = options.ontologies.find(src);
        if (ia == options.ontologies.end() || ib == options.ontologies.end()) continue;
        m = ontology_match(*ia->second, *ib->second, pending_a, pending_b, syn, {},
                           options.similarity_threshold);
      } else {
        throw ConfigError("unknown attribute resolution matcher '" + rung + "'");
      }
      for (const auto& p : m.pairs) {
        outcome.mapping.pairs.push_back(p);
        outcome.canonical[src + ":" + p.attr_b] = p.attr_a;  // first matcher wins
      }
      pending_a = m.unmatched_a;
      pending_b = m.unmatched_b;
    }
    for (const auto& b : pending_b) {
      outcome.mapping.unmatched_b.push_back(src + ":" + b);
      outcome.canonical[src + ":" + b] = src + ":" + b;  // stays namespaced
    }
  }

  // Rewrite chunks to canonical attribute ids.
  for (std::size_t i = 0; i < store.size(); ++i) {
    for (auto& p : store.chunk_mut(i).pairs) {
      auto it = outcome.canonical.find(p.source + ":" + p.attr);
      if (it != outcome.canonical.end()) p.attr = it->second;
    }
  }
  return outcome;
}

void write_mapping_report(const AttributeMapping& mapping, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw RuntimeError("cannot write " + path);
  out << "attr_a\tattr_b\tmatcher\tscore\n";
  for (const auto& p : mapping.pairs) {
    out << p.attr_a << '\t' << p.attr_b << '\t' << p.matcher << '\t' << p.score << '\n';
  }
  for (const auto& u : mapping.unmatched_a) out << u << "\t-\tunmatched\t0\n";
  for (const auto& u : mapping.unmatched_b) out << "-\t" << u << "\tunmatched\t0\n";
}

}  // namespace tam
