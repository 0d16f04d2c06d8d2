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

#include "tam/model.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "tam/error.hpp"
#include "tam/strutil.hpp"

namespace tam {
namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw DataError(msg);
}

template <typename T>
bool contains(const std::vector<T>& v, const T& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

void add_unique(std::vector<std::string>& v, const std::string& x) {
  if (!contains(v, x)) v.push_back(x);
}

}  // namespace

void Network::add_vertex(const std::string& id) {
  if (!contains(vertices, id)) vertices.push_back(id);
}

void Network::add_edge(NetworkEdge e) {
  if (!e.directed && e.v < e.u) std::swap(e.u, e.v);
  edges.push_back(std::move(e));
}

void Network::validate() const {
  std::unordered_set<std::string> vs(vertices.begin(), vertices.end());
  require(vs.size() == vertices.size(), "network has duplicate vertex ids");
  std::unordered_set<std::string> es;
  for (const auto& e : edges) {
    require(es.insert(e.id).second, "network has duplicate edge id " + e.id);
    require(vs.count(e.u) && vs.count(e.v), "edge " + e.id + " references unknown vertex");
    require(e.directed || e.u <= e.v, "undirected edge " + e.id + " not in canonical order");
  }
  for (const auto& [id, _] : vertex_attrs) {
    require(vs.count(id) > 0, "vertex attrs reference unknown vertex " + id);
  }
  for (const auto& [id, _] : edge_attrs) {
    require(es.count(id) > 0, "edge attrs reference unknown edge " + id);
  }
}

Axiom Axiom::class_membership(std::string subject, std::string cls) {
  Axiom a;
  a.kind = AxiomKind::ClassMembership;
  a.subject = std::move(subject);
  a.relation = kIsOf;
  a.object = std::move(cls);
  return a;
}

Axiom Axiom::relation_assertion(std::string subject, std::string rel, std::string object) {
  Axiom a;
  a.kind = AxiomKind::RelationAssertion;
  a.subject = std::move(subject);
  a.relation = std::move(rel);
  a.object = std::move(object);
  return a;
}

Axiom Axiom::attribute_assertion(std::string subject, std::string attr, Value literal) {
  Axiom a;
  a.kind = AxiomKind::AttributeAssertion;
  a.subject = std::move(subject);
  a.relation = std::move(attr);
  a.literal = std::move(literal);
  return a;
}

bool Ontology::is_class(const std::string& id) const { return contains(classes, id); }
bool Ontology::is_individual(const std::string& id) const { return contains(individuals, id); }

void Ontology::validate() const {
  std::unordered_set<std::string> all;
  auto insert_all = [&](const std::vector<std::string>& v, const char* what) {
    for (const auto& id : v) {
      require(all.insert(id).second,
              std::string("ontology entity ") + id + " appears in more than one set (" + what + ")");
    }
  };
  insert_all(classes, "classes");
  insert_all(individuals, "individuals");
  insert_all(relations, "relations");
  insert_all(attributes, "attributes");

  for (const auto& a : axioms) {
    require(all.count(a.subject) > 0, "axiom subject " + a.subject + " is not a known entity");
    switch (a.kind) {
      case AxiomKind::ClassMembership:
        require(contains(classes, a.object), "axiom class " + a.object + " is not declared");
        break;
      case AxiomKind::RelationAssertion:
        require(contains(relations, a.relation), "axiom relation " + a.relation + " is not declared");
        require(all.count(a.object) > 0, "axiom object " + a.object + " is not a known entity");
        break;
      case AxiomKind::AttributeAssertion:
        require(contains(attributes, a.relation), "axiom attribute " + a.relation + " is not declared");
        break;
    }
  }
}

bool is_inferred_attribute(std::string_view attr) { return attr.rfind("__", 0) == 0; }

Ontology infer_ontology_from_network(const Network& net) {
  net.validate();
  {
    std::unordered_set<std::string> vs(net.vertices.begin(), net.vertices.end());
    for (const auto& e : net.edges) {
      require(!vs.count(e.id), "vertex and edge id sets must be disjoint (" + e.id + ")");
    }
  }

  Ontology ont;
  ont.classes = {kVertexClass, kEdgeClass};
  ont.relations = {kIsOf, kIsIn};
  for (const auto& v : net.vertices) ont.individuals.push_back(v);
  for (const auto& e : net.edges) ont.individuals.push_back(e.id);

  for (const auto& v : net.vertices) {
    ont.axioms.push_back(Axiom::class_membership(v, kVertexClass));
  }
  for (const auto& e : net.edges) {
    ont.axioms.push_back(Axiom::class_membership(e.id, kEdgeClass));
  }
  for (const auto& e : net.edges) {
    ont.axioms.push_back(Axiom::relation_assertion(e.u, kIsIn, e.id));
    if (e.v != e.u) ont.axioms.push_back(Axiom::relation_assertion(e.v, kIsIn, e.id));
  }
  bool any_from = false;
  for (const auto& v : net.vertices) {
    auto it = net.vertex_attrs.find(v);
    if (it == net.vertex_attrs.end()) continue;
    for (const auto& [attr, value] : it->second) {
      ont.axioms.push_back(Axiom::attribute_assertion(v, attr, value));
      add_unique(ont.attributes, attr);
    }
  }
  for (const auto& e : net.edges) {
    auto it = net.edge_attrs.find(e.id);
    if (it != net.edge_attrs.end()) {
      for (const auto& [attr, value] : it->second) {
        ont.axioms.push_back(Axiom::attribute_assertion(e.id, attr, value));
        add_unique(ont.attributes, attr);
      }
    }
    if (e.directed) {
      ont.axioms.push_back(Axiom::attribute_assertion(e.id, kEdgeSourceAttr, Value(e.u)));
      any_from = true;
    }
  }
  if (any_from) add_unique(ont.attributes, kEdgeSourceAttr);
  std::sort(ont.attributes.begin(), ont.attributes.end());
  return ont;
}

namespace {

// True when the ontology is exactly the image of infer_ontology_from_network,
// in which case the inverse reconstruction applies.
bool network_shaped(const Ontology& ont, std::unordered_map<std::string, char>& role) {
  std::set<std::string> cls(ont.classes.begin(), ont.classes.end());
  std::set<std::string> rel(ont.relations.begin(), ont.relations.end());
  if (cls != std::set<std::string>{kVertexClass, kEdgeClass}) return false;
  if (rel != std::set<std::string>{kIsOf, kIsIn}) return false;

  for (const auto& a : ont.axioms) {
    if (a.kind == AxiomKind::ClassMembership) {
      if (!contains(ont.individuals, a.subject)) return false;
      const char r = a.object == kVertexClass ? 'v' : 'e';
      if (!role.emplace(a.subject, r).second) return false;  // two memberships
    }
  }
  if (role.size() != ont.individuals.size()) return false;

  for (const auto& a : ont.axioms) {
    switch (a.kind) {
      case AxiomKind::RelationAssertion:
        if (a.relation != kIsIn) return false;
        if (role[a.subject] != 'v' || role[a.object] != 'e') return false;
        break;
      case AxiomKind::AttributeAssertion:
        if (!role.count(a.subject)) return false;
        break;
      case AxiomKind::ClassMembership:
        break;
    }
  }
  return true;
}

Network invert_inferred_ontology(const Ontology& ont,
                                 const std::unordered_map<std::string, char>& role) {
  Network net;
  std::unordered_map<std::string, std::vector<std::string>> incidence;
  std::unordered_map<std::string, std::string> from_attr;
  for (const auto& a : ont.axioms) {
    if (a.kind == AxiomKind::RelationAssertion) incidence[a.object].push_back(a.subject);
    if (a.kind == AxiomKind::AttributeAssertion && a.relation == kEdgeSourceAttr) {
      from_attr[a.subject] = a.literal.text;
    }
  }
  for (const auto& id : ont.individuals) {
    if (role.at(id) == 'v') net.add_vertex(id);
  }
  for (const auto& id : ont.individuals) {
    if (role.at(id) != 'e') continue;
    const auto& inc = incidence[id];
    require(!inc.empty() && inc.size() <= 2, "edge individual " + id + " has bad incidence");
    NetworkEdge e;
    e.id = id;
    auto from = from_attr.find(id);
    if (from != from_attr.end()) {
      e.directed = true;
      e.u = from->second;
      e.v = inc.size() == 1 ? inc[0] : (inc[0] == e.u ? inc[1] : inc[0]);
      require(contains(inc, e.u), "edge " + id + " direction references non-endpoint");
    } else {
      e.u = inc[0];
      e.v = inc.size() == 1 ? inc[0] : inc[1];
    }
    net.add_edge(std::move(e));
  }
  for (const auto& a : ont.axioms) {
    if (a.kind != AxiomKind::AttributeAssertion || a.relation == kEdgeSourceAttr) continue;
    auto& target = role.at(a.subject) == 'v' ? net.vertex_attrs : net.edge_attrs;
    target[a.subject].emplace_back(a.relation, a.literal);
  }
  return net;
}

}  // namespace

Network infer_network_from_ontology(const Ontology& ont) {
  ont.validate();
  std::unordered_map<std::string, char> role;
  if (network_shaped(ont, role)) return invert_inferred_ontology(ont, role);

  Network net;
  for (const auto& id : ont.individuals) net.add_vertex(id);
  std::size_t edge_seq = 0;
  for (const auto& a : ont.axioms) {
    switch (a.kind) {
      case AxiomKind::ClassMembership:
        if (ont.is_individual(a.subject)) {
          net.vertex_attrs[a.subject].emplace_back("class", Value(a.object));
        }
        break;
      case AxiomKind::AttributeAssertion:
        if (ont.is_individual(a.subject)) {
          net.vertex_attrs[a.subject].emplace_back(a.relation, a.literal);
        }
        break;
      case AxiomKind::RelationAssertion:
        if (ont.is_individual(a.subject) && ont.is_individual(a.object)) {
          NetworkEdge e;
          e.id = "e" + std::to_string(edge_seq++);
          e.u = a.subject;
          e.v = a.object;
          net.edge_attrs[e.id].emplace_back("relation", Value(a.relation));
          net.add_edge(std::move(e));
        }
        break;  // class-level relations are dropped here
    }
  }
  return net;
}

ChunkStore chunks_from_ontology(const Ontology& ont, const std::string& source_id) {
  ont.validate();
  ChunkStore store;
  for (const auto& id : ont.individuals) {
    KnowledgeChunk c;
    c.id = id;
    store.add_chunk(std::move(c));
  }
  std::size_t link_seq = 0;
  for (const auto& a : ont.axioms) {
    if (a.kind == AxiomKind::AttributeAssertion && ont.is_individual(a.subject)) {
      auto idx = store.index_of(a.subject);
      store.chunk_mut(*idx).pairs.push_back(AttrPair{a.relation, a.literal, source_id});
    } else if (a.kind == AxiomKind::RelationAssertion && ont.is_individual(a.subject) &&
               ont.is_individual(a.object)) {
      ChunkLink l;
      l.id = a.relation + "#" + std::to_string(link_seq++);
      l.a = a.subject;
      l.b = a.object;
      store.add_link(std::move(l));
    }
  }
  store.rebuild_neighbors();
  return store;
}

namespace {

std::vector<std::string> read_lines(const std::string& path, const char* expected_header) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  if (lines.empty() || trim(lines[0]) != expected_header) {
    throw DataError(path + ": expected header " + expected_header);
  }
  return lines;
}

DataError line_error(const std::string& path, std::size_t lineno, const std::string& msg) {
  return DataError(path + ":" + std::to_string(lineno) + ": " + msg);
}

// attr=value token; value part is escape-decoded.
std::pair<std::string, Value> parse_attr_token(const std::string& tok, const std::string& path,
                                               std::size_t lineno) {
  const auto eq = tok.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw line_error(path, lineno, "expected attr=value, got '" + tok + "'");
  }
  return {tok.substr(0, eq), Value(unescape_field(tok.substr(eq + 1)))};
}

}  // namespace

Network read_network_file(const std::string& path) {
  const auto lines = read_lines(path, "#network");
  Network net;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (line.empty() || line[0] == '#') continue;
    const auto tok = split(line, '\t');
    const std::size_t lineno = i + 1;
    if (tok[0] == "V") {
      if (tok.size() < 2) throw line_error(path, lineno, "V line needs an id");
      const std::string id = unescape_field(tok[1]);
      if (contains(net.vertices, id)) throw line_error(path, lineno, "duplicate vertex " + id);
      net.add_vertex(id);
      for (std::size_t t = 2; t < tok.size(); ++t) {
        net.vertex_attrs[id].push_back(parse_attr_token(tok[t], path, lineno));
      }
    } else if (tok[0] == "E") {
      if (tok.size() < 4) throw line_error(path, lineno, "E line needs id and two endpoints");
      NetworkEdge e;
      e.id = unescape_field(tok[1]);
      e.u = unescape_field(tok[2]);
      e.v = unescape_field(tok[3]);
      std::size_t t = 4;
      if (t < tok.size() && tok[t] == "directed") {
        e.directed = true;
        ++t;
      }
      const std::string id = e.id;
      for (; t < tok.size(); ++t) {
        net.edge_attrs[id].push_back(parse_attr_token(tok[t], path, lineno));
      }
      net.add_edge(std::move(e));
    } else {
      throw line_error(path, lineno, "unknown record type '" + tok[0] + "'");
    }
  }
  net.validate();
  return net;
}

void write_network_file(const Network& net, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw RuntimeError("cannot write " + path);
  out << "#network\n";
  for (const auto& v : net.vertices) {
    out << "V\t" << escape_field(v);
    auto it = net.vertex_attrs.find(v);
    if (it != net.vertex_attrs.end()) {
      for (const auto& [attr, value] : it->second) {
        out << '\t' << attr << '=' << escape_field(value.text);
      }
    }
    out << '\n';
  }
  for (const auto& e : net.edges) {
    out << "E\t" << escape_field(e.id) << '\t' << escape_field(e.u) << '\t' << escape_field(e.v);
    if (e.directed) out << "\tdirected";
    auto it = net.edge_attrs.find(e.id);
    if (it != net.edge_attrs.end()) {
      for (const auto& [attr, value] : it->second) {
        out << '\t' << attr << '=' << escape_field(value.text);
      }
    }
    out << '\n';
  }
}

Ontology read_ontology_file(const std::string& path) {
  const auto lines = read_lines(path, "#ontology");
  Ontology ont;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (line.empty() || line[0] == '#') continue;
    const auto tok = split(line, '\t');
    const std::size_t lineno = i + 1;
    const std::string& kind = tok[0];
    if (kind == "C" || kind == "I" || kind == "R" || kind == "A") {
      if (tok.size() != 2) throw line_error(path, lineno, kind + " line needs exactly one id");
      const std::string id = unescape_field(tok[1]);
      auto& target = kind == "C"   ? ont.classes
                     : kind == "I" ? ont.individuals
                     : kind == "R" ? ont.relations
                                   : ont.attributes;
      if (contains(target, id)) throw line_error(path, lineno, "duplicate entity " + id);
      target.push_back(id);
    } else if (kind == "X") {
      if (tok.size() == 2) {
        // X subj.attr=literal
        const std::string& body = tok[1];
        const auto dot = body.find('.');
        const auto eq = body.find('=', dot == std::string::npos ? 0 : dot);
        if (dot == std::string::npos || eq == std::string::npos || dot > eq) {
          throw line_error(path, lineno, "malformed attribute axiom '" + body + "'");
        }
        ont.axioms.push_back(Axiom::attribute_assertion(
            unescape_field(body.substr(0, dot)), body.substr(dot + 1, eq - dot - 1),
            Value(unescape_field(body.substr(eq + 1)))));
      } else if (tok.size() == 4) {
        const std::string subj = unescape_field(tok[1]);
        const std::string rel = unescape_field(tok[2]);
        const std::string obj = unescape_field(tok[3]);
        if (rel == kIsOf) {
          ont.axioms.push_back(Axiom::class_membership(subj, obj));
        } else {
          ont.axioms.push_back(Axiom::relation_assertion(subj, rel, obj));
        }
      } else {
        throw line_error(path, lineno, "malformed axiom line");
      }
    } else {
      throw line_error(path, lineno, "unknown record type '" + kind + "'");
    }
  }
  ont.validate();
  return ont;
}

void write_ontology_file(const Ontology& ont, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw RuntimeError("cannot write " + path);
  out << "#ontology\n";
  for (const auto& id : ont.classes) out << "C\t" << escape_field(id) << '\n';
  for (const auto& id : ont.individuals) out << "I\t" << escape_field(id) << '\n';
  for (const auto& id : ont.relations) out << "R\t" << escape_field(id) << '\n';
  for (const auto& id : ont.attributes) out << "A\t" << escape_field(id) << '\n';
  for (const auto& a : ont.axioms) {
    switch (a.kind) {
      case AxiomKind::ClassMembership:
        out << "X\t" << escape_field(a.subject) << '\t' << kIsOf << '\t' << escape_field(a.object)
            << '\n';
        break;
      case AxiomKind::RelationAssertion:
        out << "X\t" << escape_field(a.subject) << '\t' << escape_field(a.relation) << '\t'
            << escape_field(a.object) << '\n';
        break;
      case AxiomKind::AttributeAssertion:
        out << "X\t" << escape_field(a.subject) << '.' << a.relation << '='
            << escape_field(a.literal.text) << '\n';
        break;
    }
  }
}

}  // namespace tam
