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

#include "tam/ingest.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <unordered_set>

#include "tam/error.hpp"
#include "tam/model.hpp"
#include "tam/strutil.hpp"

namespace tam {
namespace {

DataError line_error(const std::string& path, std::size_t lineno, const std::string& msg) {
  return DataError(path + ":" + std::to_string(lineno) + ": " + msg);
}

std::vector<std::string> read_all_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

// One CSV record; supports quoted fields with "" escapes. Records do not
// span lines.
std::vector<std::string> split_delimited(const std::string& line, char delim,
                                         const std::string& path, std::size_t lineno) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur.push_back(c);
      }
    } else if (c == '"' && cur.empty()) {
      quoted = true;
    } else if (c == delim) {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (quoted) throw line_error(path, lineno, "unterminated quoted field");
  fields.push_back(std::move(cur));
  return fields;
}

void link_shared_groups(ChunkStore& store,
                        const std::map<std::string, std::vector<std::string>>& groups,
                        const std::string& tag) {
  for (const auto& [key, members] : groups) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        ChunkLink l;
        l.id = tag + ":" + key + ":" + std::to_string(i) + "-" + std::to_string(j);
        l.a = members[i];
        l.b = members[j];
        store.add_link(std::move(l));
      }
    }
  }
}

void load_citeseer(const DatasetDescriptor& desc, ChunkStore& store) {
  const auto lines = read_all_lines(desc.path);
  if (lines.empty() || trim(lines[0]) != "#citeseer") {
    throw DataError(desc.path + ": expected header #citeseer");
  }
  const std::string& src = desc.source();

  std::unordered_set<std::string> papers;
  struct Ref {
    std::string id;
    std::string paper;
    std::string name;
    std::size_t lineno;
  };
  std::vector<Ref> refs;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (line.empty() || line[0] == '#') continue;
    const auto tok = split(line, '\t');
    const std::size_t lineno = i + 1;
    if (tok[0] == "D") {
      if (tok.size() != 3) throw line_error(desc.path, lineno, "D line needs id and title");
      if (!papers.insert(tok[1]).second) {
        throw line_error(desc.path, lineno, "duplicate paper id " + tok[1]);
      }
    } else if (tok[0] == "R") {
      if (tok.size() != 4) {
        throw line_error(desc.path, lineno, "R line needs id, paper id and author name");
      }
      refs.push_back({tok[1], tok[2], tok[3], lineno});
    } else {
      throw line_error(desc.path, lineno, "unknown record type '" + tok[0] + "'");
    }
  }

  std::map<std::string, std::vector<std::string>> by_paper;
  for (const auto& r : refs) {
    if (!papers.count(r.paper)) {
      throw line_error(desc.path, r.lineno, "reference to unknown paper " + r.paper);
    }
    KnowledgeChunk c;
    c.id = src + ":" + r.id;
    c.entity_name = r.name;
    c.pairs.push_back(AttrPair{"name", Value(r.name), src});
    store.add_chunk(std::move(c));
    by_paper[r.paper].push_back(src + ":" + r.id);
  }
  link_shared_groups(store, by_paper, "co");
}

void load_delimited(const DatasetDescriptor& desc, ChunkStore& store) {
  const auto lines = read_all_lines(desc.path);
  if (lines.empty()) throw DataError(desc.path + ": missing header row");
  char delim = desc.delimiter;
  if (delim == 0) delim = lines[0].find('\t') != std::string::npos ? '\t' : ',';

  const auto header = split_delimited(lines[0], delim, desc.path, 1);
  auto column_index = [&](const std::string& name) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (header[i] == name) return i;
    }
    return std::nullopt;
  };
  for (const auto& [col, _] : desc.column_map) {
    if (!column_index(col)) {
      throw DataError(desc.path + ": column '" + col + "' not present in header");
    }
  }

  std::optional<std::size_t> id_col;
  if (!desc.id_column.empty()) {
    id_col = column_index(desc.id_column);
    if (!id_col) throw DataError(desc.path + ": id column '" + desc.id_column + "' not found");
  } else {
    id_col = column_index("id");
  }
  std::optional<std::size_t> rel_col;
  if (desc.relation.kind == DatasetDescriptor::RelationSpec::Kind::SharedColumn) {
    rel_col = column_index(desc.relation.column);
    if (!rel_col) {
      throw DataError(desc.path + ": relation column '" + desc.relation.column + "' not found");
    }
  }

  const std::string& src = desc.source();
  std::map<std::string, std::vector<std::string>> groups;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const std::size_t lineno = i + 1;
    const auto fields = split_delimited(lines[i], delim, desc.path, lineno);
    if (fields.size() != header.size()) {
      throw line_error(desc.path, lineno,
                       "expected " + std::to_string(header.size()) + " fields, got " +
                           std::to_string(fields.size()));
    }
    KnowledgeChunk c;
    c.id = src + ":" + (id_col ? fields[*id_col] : "row" + std::to_string(i));
    for (std::size_t f = 0; f < fields.size(); ++f) {
      if (id_col && f == *id_col) continue;
      if (rel_col && f == *rel_col && !desc.column_map.count(header[f])) continue;
      std::string attr = header[f];
      if (!desc.column_map.empty()) {
        auto it = desc.column_map.find(header[f]);
        if (it == desc.column_map.end()) continue;
        attr = it->second;
      }
      const std::string value = trim(fields[f]);
      if (value.empty()) continue;  // missing data just means a smaller chunk
      c.pairs.push_back(AttrPair{attr, Value(value), src});
    }
    const std::string chunk_id = c.id;
    store.add_chunk(std::move(c));
    if (rel_col && !trim(fields[*rel_col]).empty()) {
      groups[trim(fields[*rel_col])].push_back(chunk_id);
    }
  }
  link_shared_groups(store, groups, "rel");
}

// Namespaces every chunk id in `sub` and appends it to `store`.
void append_namespaced(ChunkStore& store, const ChunkStore& sub, const std::string& src) {
  for (const auto& c : sub.chunks()) {
    KnowledgeChunk copy = c;
    copy.id = src + ":" + c.id;
    copy.neighbors.clear();
    store.add_chunk(std::move(copy));
  }
  for (const auto& l : sub.links()) {
    ChunkLink copy = l;
    copy.a = src + ":" + l.a;
    copy.b = src + ":" + l.b;
    store.add_link(std::move(copy));
  }
}

void load_network(const DatasetDescriptor& desc, ChunkStore& store) {
  const Network net = read_network_file(desc.path);
  const std::string& src = desc.source();
  ChunkStore sub;
  for (const auto& v : net.vertices) {
    KnowledgeChunk c;
    c.id = v;
    auto it = net.vertex_attrs.find(v);
    if (it != net.vertex_attrs.end()) {
      for (const auto& [attr, value] : it->second) {
        c.pairs.push_back(AttrPair{attr, value, src});
      }
    }
    sub.add_chunk(std::move(c));
  }
  for (const auto& e : net.edges) {
    ChunkLink l;
    l.id = e.id;
    l.a = e.u;
    l.b = e.v;
    sub.add_link(std::move(l));
  }
  append_namespaced(store, sub, src);
}

}  // namespace

std::size_t GoldPartition::entities() const {
  std::set<std::string> uniq;
  for (const auto& [_, e] : entity_of) uniq.insert(e);
  return uniq.size();
}

GoldPartition read_gold_file(const std::string& path, const std::string& source_prefix) {
  GoldPartition gold;
  const auto lines = read_all_lines(path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (line.empty() || line[0] == '#') continue;
    const auto tok = split(line, '\t');
    if (tok.size() != 2) {
      throw line_error(path, i + 1, "expected 'entity_id<TAB>record_id'");
    }
    const std::string chunk_id = source_prefix + ":" + tok[1];
    if (gold.entity_of.count(chunk_id)) {
      throw line_error(path, i + 1, "duplicate gold record " + tok[1]);
    }
    gold.entity_of[chunk_id] = tok[0];
  }
  return gold;
}

void load_dataset(const DatasetDescriptor& desc, ChunkStore& store, GoldPartition* gold) {
  const std::size_t before = store.size();
  switch (desc.format) {
    case DatasetDescriptor::Format::CiteseerDat:
      load_citeseer(desc, store);
      break;
    case DatasetDescriptor::Format::Delimited:
      load_delimited(desc, store);
      break;
    case DatasetDescriptor::Format::NetworkFile:
      load_network(desc, store);
      break;
    case DatasetDescriptor::Format::OntologyFile: {
      const Ontology ont = read_ontology_file(desc.path);
      append_namespaced(store, chunks_from_ontology(ont, desc.source()), desc.source());
      break;
    }
  }
  store.rebuild_neighbors();

  if (desc.truth_path && gold) {
    GoldPartition g = read_gold_file(*desc.truth_path, desc.source());
    // The gold partition must cover exactly this dataset's records.
    for (std::size_t i = before; i < store.size(); ++i) {
      if (!g.entity_of.count(store.chunk(i).id)) {
        throw DataError(*desc.truth_path + ": no gold entity for record " + store.chunk(i).id);
      }
    }
    std::unordered_set<std::string> loaded;
    for (std::size_t i = before; i < store.size(); ++i) loaded.insert(store.chunk(i).id);
    for (const auto& [chunk_id, entity] : g.entity_of) {
      if (!loaded.count(chunk_id)) {
        throw DataError(*desc.truth_path + ": gold references unknown record " + chunk_id);
      }
      gold->entity_of[chunk_id] = entity;
    }
  }
}

}  // namespace tam
