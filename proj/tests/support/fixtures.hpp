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

// Shared fixture builders, random generators and independent oracles. The
// oracles intentionally re-derive results from first principles (exhaustive
// enumeration, direct formula evaluation) rather than reusing library code
// paths.

#ifndef TAM_TESTS_SUPPORT_FIXTURES_HPP_
#define TAM_TESTS_SUPPORT_FIXTURES_HPP_

#include <string>
#include <vector>

#include "tam/chunk.hpp"
#include "tam/cluster.hpp"
#include "tam/ingest.hpp"
#include "tam/model.hpp"
#include "tam/rng.hpp"
#include "tam/similarity.hpp"

namespace tam::testsupport {

KnowledgeChunk chunk(const std::string& id,
                     const std::vector<std::pair<std::string, std::string>>& pairs,
                     const std::string& source = "s");

// Store with links given as (a, b) or (a, b, trust) tuples; rebuilds
// neighbor sets.
struct LinkSpec {
  std::string a;
  std::string b;
  double trust = 1.0;
};
ChunkStore store_of(std::vector<KnowledgeChunk> chunks, const std::vector<LinkSpec>& links = {});

// Scratch directory under the system temp root, unique per call.
std::string scratch_dir(const std::string& tag);
void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

// ---- independent oracles ----

// Full-matrix edit distance (the implementation uses a rolling pair of rows).
std::size_t oracle_edit_distance(const std::string& a, const std::string& b);

// Pairwise precision/recall over explicit O(n^2) pair enumeration.
struct OraclePairScores {
  std::uint64_t tp = 0, fp = 0, fn = 0;
};
OraclePairScores oracle_pairwise(const ClusterSet& predicted, const GoldPartition& gold,
                                 const ChunkStore& store);

// Direct evaluation of the relational similarity definition: neighborhoods
// by exhaustive scan over all chunks and links, most trustworthy connecting
// link per neighbor, Jaccard denominator, optional alignment.
double oracle_sim_rel(const ChunkStore& store, const ClusterSet& clusters, ClusterId a,
                      ClusterId b, bool aligned);

// ---- random generators ----

Network random_network(Rng& rng, std::size_t max_vertices);

// Random chunk graph: names drawn from a small pool with perturbations so
// similarities spread across [0,1]; random links.
ChunkStore random_chunk_graph(Rng& rng, std::size_t n_chunks);

std::string random_string(Rng& rng, std::size_t max_len);

}  // namespace tam::testsupport

#endif  // TAM_TESTS_SUPPORT_FIXTURES_HPP_
