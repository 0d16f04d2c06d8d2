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

#include "tam/benchgen.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <vector>

#include "tam/error.hpp"
#include "tam/rng.hpp"

namespace tam {
namespace {

const char* kSurnames[] = {
    "smith", "johnson", "williams", "brown", "jones", "garcia", "miller", "davis", "rodriguez",
    "martinez", "hernandez", "lopez", "gonzalez", "wilson", "anderson", "thomas", "taylor",
    "moore", "jackson", "martin", "lee", "perez", "thompson", "white", "harris", "sanchez",
    "clark", "ramirez", "lewis", "robinson", "walker", "young", "allen", "king", "wright",
    "scott", "torres", "nguyen", "hill", "flores", "green", "adams", "nelson", "baker", "hall",
    "rivera", "campbell", "mitchell", "carter", "roberts", "gomez", "phillips", "evans",
    "turner", "diaz", "parker", "cruz", "edwards", "collins", "reyes", "stewart", "morris",
    "morales", "murphy", "cook", "rogers", "gutierrez", "ortiz", "morgan", "cooper", "peterson",
    "bailey", "reed", "kelly", "howard", "ramos", "kim", "cox", "ward", "richardson", "watson",
    "brooks", "chavez", "wood", "james", "bennett", "gray", "mendoza", "ruiz", "hughes",
    "price", "alvarez", "castillo", "sanders", "patel", "myers", "long", "ross", "foster",
    "jimenez", "powell", "jenkins", "perry", "russell", "sullivan", "bell", "coleman", "butler",
    "henderson", "barnes", "fisher", "vasquez", "simmons", "romero", "jordan", "patterson",
    "alexander", "hamilton", "graham", "reynolds", "griffin", "wallace", "moreno", "west",
    "cole", "hayes", "bryant", "herrera", "gibson", "ellis", "tran", "medina", "aguilar",
    "stevens", "murray", "ford", "castro", "marshall", "owens", "harrison", "fernandez",
    "mcdonald", "woods", "washington", "kennedy", "wells", "vargas", "henry", "chen", "freeman",
    "webb", "tucker", "guzman", "burns", "crawford", "olson", "simpson", "porter", "hunter",
    "gordon", "mendez", "silva", "shaw", "snyder", "mason", "dixon", "munoz", "hunt", "hicks",
    "holmes", "palmer", "wagner", "black", "robertson", "boyd", "rose", "stone", "salazar",
    "fox", "warren", "mills", "meyer", "rice", "schmidt", "zupan", "potocnik", "kowalski",
    "novak", "horvat", "kovac", "weber", "fischer", "becker", "hoffman", "schulz", "koch",
    "bauer", "richter", "klein", "wolf", "schroeder", "neumann", "schwarz", "zimmermann",
    "braun", "krueger", "hofmann", "lange", "werner", "krause", "lehmann", "koehler", "maier",
    "beck", "fuchs", "keller", "herrmann", "frank", "berger", "winkler", "roth", "lorenz",
    "baumann", "schuster", "kraus", "boehm", "pohl", "graf", "seidel", "heinrich", "brandt",
    "haas", "schreiber", "bergmann", "engel", "busch", "horn", "arnold", "kuehn"};

const char* kFirstNames[] = {
    "james",   "mary",    "robert",  "patricia", "john",    "jennifer", "michael", "linda",
    "david",   "barbara", "william", "susan",    "richard", "jessica",  "joseph",  "sarah",
    "thomas",  "karen",   "charles", "lisa",     "daniel",  "nancy",    "matthew", "betty",
    "anthony", "sandra",  "mark",    "margaret", "donald",  "ashley",   "steven",  "kimberly",
    "andrew",  "emily",   "paul",    "donna",    "joshua",  "michelle", "kenneth", "carol",
    "kevin",   "amanda",  "brian",   "melissa",  "george",  "deborah",  "timothy", "stephanie",
    "ronald",  "rebecca", "jason",   "sharon",   "edward",  "laura",    "jeffrey", "cynthia",
    "ryan",    "kathleen", "jacob",  "amy",      "gary",    "angela",   "nicholas", "shirley",
    "eric",    "anna",    "jonathan", "brenda",  "stephen", "pamela",   "larry",   "emma",
    "justin",  "nicole",  "scott",   "helen",    "brandon", "samantha", "benjamin", "katherine",
    "samuel",  "christine", "gregory", "debra",  "frank",   "rachel",   "alexander", "carolyn",
    "patrick", "janet",   "raymond", "catherine", "jack",   "maria",    "dennis",  "heather",
    "jerry",   "diane",   "tyler",   "ruth",     "aaron",   "julie",    "jose",    "olivia",
    "adam",    "joyce",   "nathan",  "virginia", "henry",   "victoria", "douglas", "kelly",
    "zachary", "lauren",  "peter",   "christina", "kyle",   "joan",     "walter",  "evelyn"};

const char* kTitleWords[] = {
    "learning", "models", "networks", "inference", "sparse", "kernel", "bayesian", "markov",
    "decision", "policy", "graph", "relational", "clustering", "classification", "regression",
    "boosting", "margin", "support", "vector", "feature", "selection", "reduction", "latent",
    "variable", "random", "fields", "temporal", "sequence", "structured", "prediction",
    "sampling", "variational", "approximate", "exact", "bounds", "generalization", "risk",
    "empirical", "convergence", "stochastic", "gradient", "optimization", "convex", "dual",
    "online", "active", "reinforcement", "transfer", "multitask", "semisupervised"};

struct Identity {
  std::string first;
  std::string last;
  bool abbrev_ok = false;
  bool bridge = false;
  std::size_t refs = 1;
  std::size_t community = 0;
};

std::string canonical_name(const Identity& id) { return id.first + " " + id.last; }
std::string abbreviated_name(const Identity& id) {
  return id.first.substr(0, 1) + ". " + id.last;
}
std::string reversed_name(const Identity& id) { return id.last + " " + id.first; }

std::string truncated_name(const Identity& id) {
  if (id.last.size() >= 6) return id.first + " " + id.last.substr(0, id.last.size() - 1);
  return reversed_name(id);
}

std::string misspelled_name(const Identity& id, Rng& rng) {
  std::string last = id.last;
  const std::size_t pos = 2 + rng.below(last.size() - 2);
  char repl;
  do {
    repl = static_cast<char>('a' + rng.below(26));
  } while (repl == last[pos]);
  last[pos] = repl;
  return id.first + " " + last;
}

std::string make_title(Rng& rng) {
  const std::size_t n = sizeof(kTitleWords) / sizeof(kTitleWords[0]);
  std::string t = kTitleWords[rng.below(n)];
  const std::size_t words = 2 + rng.below(4);
  for (std::size_t i = 0; i < words; ++i) {
    t += " ";
    t += kTitleWords[rng.below(n)];
  }
  return t;
}

}  // namespace

namespace {

void ensure_parent_dir(const std::string& path) {
  const auto parent = std::filesystem::path(path).parent_path();
  if (!parent.empty()) std::filesystem::create_directories(parent);
}

}  // namespace

void generate_citeseer_benchmark(const BenchSpec& spec, const BenchPaths& paths) {
  if (spec.head_entities * spec.head_min > spec.head_total_refs ||
      spec.head_entities * spec.head_max < spec.head_total_refs) {
    throw ConfigError("benchmark head size bounds cannot reach head_total_refs");
  }
  for (const auto& p : {paths.dat, paths.gold, paths.corpus}) ensure_parent_dir(p);
  if (spec.head_total_refs + (spec.entities - spec.head_entities) > spec.references) {
    throw ConfigError("benchmark reference budget too small");
  }
  Rng rng(derive_seed(spec.seed, "benchgen"));

  const std::size_t n_surnames = sizeof(kSurnames) / sizeof(kSurnames[0]);
  const std::size_t n_firsts = sizeof(kFirstNames) / sizeof(kFirstNames[0]);

  // Identities: unique (first, last) pairs; designed same-initial families
  // first so their membership is exact.
  std::vector<Identity> ids(spec.entities);
  std::set<std::pair<std::string, std::string>> used;
  std::size_t next = 0;
  auto claim = [&](const std::string& first, const std::string& last) -> std::size_t {
    used.insert({first, last});
    ids[next].first = first;
    ids[next].last = last;
    return next++;
  };

  std::vector<std::pair<std::size_t, std::size_t>> families;
  for (std::size_t f = 0; f < spec.same_initial_families; ++f) {
    const std::string last = kSurnames[rng.below(n_surnames)];
    std::string fa, fb;
    do {
      fa = kFirstNames[rng.below(n_firsts)];
      fb = kFirstNames[rng.below(n_firsts)];
    } while (fa == fb || fa[0] != fb[0] || used.count({fa, last}) || used.count({fb, last}));
    families.emplace_back(claim(fa, last), claim(fb, last));
  }
  while (next < spec.entities) {
    const std::string first = kFirstNames[rng.below(n_firsts)];
    const std::string last = kSurnames[rng.below(n_surnames)];
    if (used.count({first, last})) continue;
    claim(first, last);
  }

  // Abbreviation policy: only entities whose (surname, initial) is globally
  // unique may abbreviate; bridge families override it on purpose.
  std::map<std::pair<std::string, char>, std::size_t> initial_groups;
  for (const auto& id : ids) ++initial_groups[{id.last, id.first[0]}];
  for (auto& id : ids) id.abbrev_ok = initial_groups[{id.last, id.first[0]}] == 1;
  for (std::size_t f = 0; f < spec.bridge_families && f < families.size(); ++f) {
    ids[families[f].first].bridge = ids[families[f].second].bridge = true;
    ids[families[f].first].abbrev_ok = ids[families[f].second].abbrev_ok = true;
  }

  // Reference counts: head entities share head_total_refs exactly (jittered
  // around the mean by pairwise transfers), doubles soak up the remainder.
  std::vector<std::size_t> head_idx;
  {
    // Heads avoid family members so family entities stay small.
    std::set<std::size_t> family_members;
    for (const auto& [a, b] : families) {
      family_members.insert(a);
      family_members.insert(b);
    }
    for (std::size_t i = 0; head_idx.size() < spec.head_entities && i < spec.entities; ++i) {
      if (!family_members.count(i)) head_idx.push_back(i);
    }
  }
  {
    std::vector<std::size_t> sizes(spec.head_entities,
                                   spec.head_total_refs / spec.head_entities);
    std::size_t assigned = 0;
    for (auto s : sizes) assigned += s;
    for (std::size_t i = 0; assigned < spec.head_total_refs; ++i, ++assigned) ++sizes[i];
    for (std::size_t t = 0; t < spec.head_entities * 8; ++t) {
      const std::size_t i = rng.below(spec.head_entities);
      const std::size_t j = rng.below(spec.head_entities);
      if (sizes[i] < spec.head_max && sizes[j] > spec.head_min) {
        ++sizes[i];
        --sizes[j];
      }
    }
    for (std::size_t k = 0; k < spec.head_entities; ++k) ids[head_idx[k]].refs = sizes[k];
  }
  {
    std::size_t doubles = spec.references - spec.head_total_refs -
                          (spec.entities - spec.head_entities);
    std::set<std::size_t> heads(head_idx.begin(), head_idx.end());
    // Bridge/family members become doubles first so their abbreviated and
    // full forms both occur.
    for (const auto& [a, b] : families) {
      for (std::size_t e : {a, b}) {
        if (doubles > 0 && ids[e].refs == 1) {
          ids[e].refs = 2;
          --doubles;
        }
      }
    }
    for (std::size_t i = 0; doubles > 0 && i < spec.entities; ++i) {
      if (!heads.count(i) && ids[i].refs == 1) {
        ids[i].refs = 2;
        --doubles;
      }
    }
  }

  // Communities of ~8 entities; family members are forced apart.
  {
    std::vector<std::size_t> order(spec.entities);
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    rng.shuffle(order);
    for (std::size_t i = 0; i < order.size(); ++i) ids[order[i]].community = i / 8;
    for (const auto& [a, b] : families) {
      if (ids[a].community == ids[b].community) {
        ids[b].community = (ids[b].community + 1) % ((spec.entities + 7) / 8);
      }
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> community_members;
  for (std::size_t i = 0; i < spec.entities; ++i) {
    community_members[ids[i].community].push_back(i);
  }

  // Paper author sets: fixed size histogram, filled from a shuffled slot
  // list with same-community co-authors preferred.
  std::vector<std::size_t> paper_sizes;
  {
    const std::size_t extra = spec.references - spec.papers;  // beyond one author each
    const std::size_t four = std::min<std::size_t>(120, extra / 3);
    const std::size_t three = std::min<std::size_t>(260, (extra - 3 * four) / 2);
    const std::size_t two = extra - 3 * four - 2 * three;
    if (two + three + four > spec.papers) {
      throw ConfigError("benchmark paper budget too small for the reference count");
    }
    const std::size_t one = spec.papers - two - three - four;
    paper_sizes.insert(paper_sizes.end(), one, 1);
    paper_sizes.insert(paper_sizes.end(), two, 2);
    paper_sizes.insert(paper_sizes.end(), three, 3);
    paper_sizes.insert(paper_sizes.end(), four, 4);
    rng.shuffle(paper_sizes);
  }

  std::vector<std::size_t> remaining(spec.entities);
  std::vector<std::size_t> slots;
  for (std::size_t i = 0; i < spec.entities; ++i) {
    remaining[i] = ids[i].refs;
    slots.insert(slots.end(), ids[i].refs, i);
  }
  rng.shuffle(slots);
  std::size_t slot_cursor = 0;
  auto next_lead = [&]() -> std::size_t {
    while (slot_cursor < slots.size() && remaining[slots[slot_cursor]] == 0) ++slot_cursor;
    return slot_cursor < slots.size() ? slots[slot_cursor] : spec.entities;
  };

  std::vector<std::vector<std::size_t>> paper_authors(spec.papers);
  for (std::size_t p = 0; p < spec.papers; ++p) {
    const std::size_t lead = next_lead();
    if (lead == spec.entities) break;  // all slots consumed; leftovers pass fills papers
    auto& authors = paper_authors[p];
    authors.push_back(lead);
    --remaining[lead];
    const auto& peers = community_members[ids[lead].community];
    std::size_t peer_cursor = rng.below(peers.size());
    for (std::size_t want = 1; want < paper_sizes[p]; ++want) {
      std::size_t picked = spec.entities;
      for (std::size_t step = 0; step < peers.size(); ++step) {
        const std::size_t cand = peers[(peer_cursor + step) % peers.size()];
        if (remaining[cand] > 0 &&
            std::find(authors.begin(), authors.end(), cand) == authors.end()) {
          picked = cand;
          peer_cursor = (peer_cursor + step + 1) % peers.size();
          break;
        }
      }
      if (picked == spec.entities) break;  // community exhausted
      authors.push_back(picked);
      --remaining[picked];
    }
  }
  // Any unplaced appearances join papers that do not yet list the entity.
  {
    std::size_t p = 0;
    for (std::size_t e = 0; e < spec.entities; ++e) {
      while (remaining[e] > 0) {
        while (std::find(paper_authors[p].begin(), paper_authors[p].end(), e) !=
               paper_authors[p].end()) {
          p = (p + 1) % spec.papers;
        }
        paper_authors[p].push_back(e);
        --remaining[e];
        p = (p + 1) % spec.papers;
      }
    }
  }

  // Emit: one D line per paper, R lines per author appearance. The name of
  // each appearance is drawn from the entity's variant distribution.
  std::ofstream dat(paths.dat);
  if (!dat) throw RuntimeError("cannot write " + paths.dat);
  std::ofstream gold(paths.gold);
  if (!gold) throw RuntimeError("cannot write " + paths.gold);
  std::ofstream corpus(paths.corpus);
  if (!corpus) throw RuntimeError("cannot write " + paths.corpus);

  std::set<std::size_t> heads(head_idx.begin(), head_idx.end());
  std::vector<std::size_t> emitted(spec.entities, 0);
  auto draw_name = [&](std::size_t e) -> std::string {
    const Identity& id = ids[e];
    const std::size_t nth = emitted[e]++;
    if (heads.count(e)) {
      const double r = rng.unit();
      if (r < spec.head_canonical) return canonical_name(id);
      if (r < spec.head_canonical + spec.head_abbrev) {
        return id.abbrev_ok ? abbreviated_name(id) : canonical_name(id);
      }
      if (r < spec.head_canonical + spec.head_abbrev + spec.head_reversed) {
        return reversed_name(id);
      }
      if (r < spec.head_canonical + spec.head_abbrev + spec.head_reversed + spec.head_truncated) {
        return truncated_name(id);
      }
      return misspelled_name(id, rng);
    }
    if (id.refs >= 2 && nth > 0) {
      if (id.bridge) return abbreviated_name(id);
      const double r = rng.unit();
      if (r < 0.4) return id.abbrev_ok ? abbreviated_name(id) : reversed_name(id);
      if (r < 0.6) return reversed_name(id);
      if (r < 0.9) return truncated_name(id);
      return canonical_name(id);
    }
    return rng.unit() < 0.9 ? canonical_name(id) : truncated_name(id);
  };

  dat << "#citeseer\n";
  std::size_t ref_seq = 0;
  for (std::size_t p = 0; p < spec.papers; ++p) {
    dat << "D\tp" << p << '\t' << make_title(rng) << '\n';
    for (std::size_t e : paper_authors[p]) {
      const std::string name = draw_name(e);
      dat << "R\tr" << ref_seq << "\tp" << p << '\t' << name << '\n';
      gold << 'e' << e << "\tr" << ref_seq << '\n';
      corpus << name << '\n';
      ++ref_seq;
    }
  }
  if (ref_seq != spec.references) {
    throw RuntimeError("benchmark generation drifted: " + std::to_string(ref_seq) +
                       " references emitted");
  }
}

void generate_alpha_fixture(const std::string& dat_path, const std::string& gold_path) {
  ensure_parent_dir(dat_path);
  ensure_parent_dir(gold_path);
  // (first, last) pairs with |first| + 1 + |last| == 18, so one trailing
  // substitution in the surname puts attribute similarity at exactly 17/18:
  // below the merge threshold alone, above it with full relational support.
  static const std::pair<const char*, const char*> kPairs[] = {
      {"benedikta", "mccallum"}, {"konstantin", "szalard"}, {"maximilian", "ferrand"},
      {"aleksander", "bogdani"}, {"sebastiano", "carmine"}, {"wilhelmina", "durrant"},
      {"evangelina", "marquez"}, {"theodosius", "langley"}};

  std::ofstream dat(dat_path);
  if (!dat) throw RuntimeError("cannot write " + dat_path);
  std::ofstream gold(gold_path);
  if (!gold) throw RuntimeError("cannot write " + gold_path);
  dat << "#citeseer\n";

  std::size_t ref = 0, paper = 0;
  auto emit = [&](const std::string& entity, const std::string& name, bool fresh_paper,
                  const std::string& co_entity = "", const std::string& co_name = "") {
    if (fresh_paper) dat << "D\tp" << paper << "\tstudy " << paper << '\n';
    dat << "R\tr" << ref << "\tp" << paper << '\t' << name << '\n';
    gold << entity << "\tr" << ref << '\n';
    ++ref;
    if (!co_entity.empty()) {
      dat << "R\tr" << ref << "\tp" << paper << '\t' << co_name << '\n';
      gold << co_entity << "\tr" << ref << '\n';
      ++ref;
    }
    ++paper;
  };

  static const char* kHubNames[] = {"zelda brockhaus",  "yannick stemberg", "quirin mathiesen",
                                    "ophelia grantham", "percival dunmore", "ramona velasquez",
                                    "tobias ellington", "ursula fairchild"};
  for (std::size_t g = 0; g < sizeof(kPairs) / sizeof(kPairs[0]); ++g) {
    const std::string canonical = std::string(kPairs[g].first) + " " + kPairs[g].second;
    std::string variant = canonical;
    variant.back() = variant.back() == 'x' ? 'q' : 'x';
    const std::string entity = "E" + std::to_string(g);
    const std::string hub_entity = "H" + std::to_string(g);
    const std::string hub_name = kHubNames[g];
    emit(entity, canonical, true, hub_entity, hub_name);
    emit(entity, canonical, true, hub_entity, hub_name);
    emit(entity, variant, true, hub_entity, hub_name);
  }
  // Disambiguation chunks: ten pairs of distinct entities, identical names.
  static const char* kShared[] = {"arden whitlock", "bram ostrowski", "cleo fairbanks",
                                  "dara kuznetsov", "edin marchetti", "freya lindqvist",
                                  "gael petrossian", "hollis vanderberg", "iris castellano",
                                  "jules abernathy"};
  for (std::size_t s = 0; s < sizeof(kShared) / sizeof(kShared[0]); ++s) {
    emit("Fa" + std::to_string(s), kShared[s], true);
    emit("Fb" + std::to_string(s), kShared[s], true);
  }
}

}  // namespace tam
