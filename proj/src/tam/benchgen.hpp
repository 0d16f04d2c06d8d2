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

#ifndef TAM_BENCHGEN_HPP_
#define TAM_BENCHGEN_HPP_

#include <cstdint>
#include <string>

namespace tam {

// Deterministic author-reference benchmark in the citeseer_dat layout.
// Entity sizes are Zipf-flavored: a head of prolific authors whose
// references repeat a dominant canonical spelling plus abbreviation,
// word-reordering, truncation and misspelling variants, and a long tail of
// one/two-reference entities. Same-surname families (some sharing the first
// initial, a few deliberately emitting the same abbreviated form) provide
// the disambiguation pressure; collaborations are drawn from small
// communities so co-author structure carries signal.
struct BenchSpec {
  std::size_t references = 2892;
  std::size_t entities = 1165;
  std::size_t papers = 1504;
  std::size_t head_entities = 34;
  std::size_t head_total_refs = 1650;
  std::size_t head_min = 42;
  std::size_t head_max = 56;
  double head_canonical = 0.78;  // remaining mass goes to variants
  double head_abbrev = 0.15;
  double head_reversed = 0.03;
  double head_truncated = 0.03;
  std::size_t same_initial_families = 12;
  std::size_t bridge_families = 6;  // both members emit the shared abbreviation
  std::uint64_t seed = 29;
};

struct BenchPaths {
  std::string dat;     // citeseer_dat file
  std::string gold;    // entity_id<TAB>record_id
  std::string corpus;  // one reference name per line (hit-count corpus)
};

void generate_citeseer_benchmark(const BenchSpec& spec, const BenchPaths& paths);

// Small fixture where the relational term decides: every entity has two
// identical references plus one 18-character variant at edit distance 1
// (attribute similarity 17/18), always sharing a resolved co-author hub,
// plus ten pairs of distinct entities carrying the same name string.
void generate_alpha_fixture(const std::string& dat_path, const std::string& gold_path);

}  // namespace tam

#endif  // TAM_BENCHGEN_HPP_
