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

#ifndef TAM_MODEL_HPP_
#define TAM_MODEL_HPP_

#include <map>
#include <string>
#include <vector>

#include "tam/chunk.hpp"

namespace tam {

// Data-level representation: a labeled multigraph with optional directed
// edges. Undirected edges keep endpoints in canonical (sorted) order; loops
// and parallel edges are allowed.
struct NetworkEdge {
  std::string id;
  std::string u;
  std::string v;
  bool directed = false;
};

using AttrList = std::vector<std::pair<std::string, Value>>;

struct Network {
  std::vector<std::string> vertices;  // unique ids, insertion order
  std::vector<NetworkEdge> edges;     // unique ids
  std::map<std::string, AttrList> vertex_attrs;
  std::map<std::string, AttrList> edge_attrs;

  void add_vertex(const std::string& id);
  void add_edge(NetworkEdge e);  // canonicalizes undirected endpoint order
  void validate() const;         // throws DataError on invariant breaks
};

// Semantic-level representation: four entity kinds plus binary axioms.
enum class AxiomKind { ClassMembership, RelationAssertion, AttributeAssertion };

struct Axiom {
  AxiomKind kind = AxiomKind::ClassMembership;
  std::string subject;
  std::string relation;  // class id / relation id / attribute id
  std::string object;    // entity id; empty for attribute assertions
  Value literal;         // attribute assertions only

  static Axiom class_membership(std::string subject, std::string cls);
  static Axiom relation_assertion(std::string subject, std::string rel, std::string object);
  static Axiom attribute_assertion(std::string subject, std::string attr, Value literal);
};

struct Ontology {
  std::vector<std::string> classes;
  std::vector<std::string> individuals;
  std::vector<std::string> relations;
  std::vector<std::string> attributes;
  std::vector<Axiom> axioms;

  bool is_class(const std::string& id) const;
  bool is_individual(const std::string& id) const;
  void validate() const;  // entity sets disjoint, axiom refs known
};

// Vocabulary introduced by the network->ontology inference. Everything here
// is "artificial" data that postprocessing must strip again.
inline constexpr const char* kVertexClass = "vertex";
inline constexpr const char* kEdgeClass = "edge";
inline constexpr const char* kIsOf = "isOf";
inline constexpr const char* kIsIn = "isIn";
inline constexpr const char* kEdgeSourceAttr = "__from";  // directed-edge source

bool is_inferred_attribute(std::string_view attr);

// Lossless elevation of a network to the semantic level: classes
// {vertex,edge}, one individual per vertex and per edge, isOf/isIn axioms,
// attribute assertions per label. Vertex and edge id sets must be disjoint.
Ontology infer_ontology_from_network(const Network& net);

// Projection of an ontology to the data level. Recognizes ontologies shaped
// like infer_ontology_from_network output and inverts them exactly (the
// round-trip is the identity); otherwise individuals become vertices, binary
// individual-to-individual axioms become edges, class memberships and
// literals become vertex attributes, and purely class-level axioms are
// dropped (the lossy direction).
Network infer_network_from_ontology(const Ontology& ont);

// One chunk per individual; attribute assertions become pairs tagged with
// source_id, binary axioms become links (trust 1.0).
ChunkStore chunks_from_ontology(const Ontology& ont, const std::string& source_id);

// Serialized forms (tab-separated, '#network'/'#ontology' headers).
Network read_network_file(const std::string& path);
void write_network_file(const Network& net, const std::string& path);
Ontology read_ontology_file(const std::string& path);
void write_ontology_file(const Ontology& ont, const std::string& path);

}  // namespace tam

#endif  // TAM_MODEL_HPP_
