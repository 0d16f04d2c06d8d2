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

#include "tam/semantic.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>

#include "tam/error.hpp"
#include "tam/metrics.hpp"
#include "tam/strutil.hpp"

namespace tam {
namespace {

bool token_pair_matches(const std::string& a, const std::string& b) {
  if (a == b) return true;
  // Prefix rule covers "W." vs "William" once punctuation is tokenized away.
  const std::string& shorter = a.size() <= b.size() ? a : b;
  const std::string& longer = a.size() <= b.size() ? b : a;
  return longer.compare(0, shorter.size(), shorter) == 0;
}

bool token_pair_matches_syn(const std::string& a, const std::string& b, const SynonymDict& syn) {
  return token_pair_matches(a, b) || syn.are_synonyms(a, b);
}

// Core of the name metric: every token of the smaller side must find a
// counterpart; order-insensitive, counterparts may be reused.
template <typename TokenMatch>
std::size_t matched_token_count(const std::vector<std::string>& fewer,
                                const std::vector<std::string>& more, TokenMatch match) {
  std::size_t matched = 0;
  for (const auto& t : fewer) {
    for (const auto& o : more) {
      if (match(t, o)) {
        ++matched;
        break;
      }
    }
  }
  return matched;
}

template <typename TokenMatch>
SemanticOutcome name_style_match(std::string_view a, std::string_view b, TokenMatch match) {
  const auto ta = tokenize(a);
  const auto tb = tokenize(b);
  if (ta.empty() || tb.empty()) return SemanticOutcome::Undefined;
  const auto& fewer = ta.size() <= tb.size() ? ta : tb;
  const auto& more = ta.size() <= tb.size() ? tb : ta;
  return matched_token_count(fewer, more, match) == fewer.size() ? SemanticOutcome::Match
                                                                 : SemanticOutcome::NoMatch;
}

std::string strip_part_marker(std::string_view title) {
  auto tokens = tokenize(title);
  if (tokens.size() >= 2 && tokens[tokens.size() - 2] == "part") {
    const std::string& tail = tokens.back();
    const bool roman = tail.find_first_not_of("ivx") == std::string::npos;
    const bool arabic = tail.find_first_not_of("0123456789") == std::string::npos;
    if (roman || arabic) tokens.resize(tokens.size() - 2);
  }
  return join(tokens, " ");
}

bool is_code_token(const std::string& t) {
  if (t.size() < 4) return false;
  bool has_alpha = false, has_digit = false;
  for (unsigned char c : t) {
    if (std::isalpha(c)) has_alpha = true;
    if (std::isdigit(c)) has_digit = true;
  }
  return has_alpha && has_digit;
}

double best_pair_jw(const std::vector<const KnowledgeChunk*>& left,
                    const std::vector<const KnowledgeChunk*>& right, const std::string& attr) {
  double best = -1.0;
  for (const auto* lc : left) {
    for (const auto* lp : lc->values_of(attr)) {
      for (const auto* rc : right) {
        for (const auto* rp : rc->values_of(attr)) {
          best = std::max(best, jaro_winkler(normalize(lp->value.text), normalize(rp->value.text)));
        }
      }
    }
  }
  return best;  // -1 when either side lacks the attribute
}

}  // namespace

void SynonymDict::add_synset(const std::vector<std::string>& words) {
  const std::size_t set_id = next_set_++;
  for (const auto& w : words) {
    const std::string key = normalize(w);
    if (!key.empty()) sets_[key].push_back(set_id);
  }
}

bool SynonymDict::are_synonyms(std::string_view a, std::string_view b) const {
  auto ia = sets_.find(normalize(a));
  auto ib = sets_.find(normalize(b));
  if (ia == sets_.end() || ib == sets_.end()) return false;
  for (std::size_t sa : ia->second) {
    for (std::size_t sb : ib->second) {
      if (sa == sb) return true;
    }
  }
  return false;
}

SynonymDict SynonymDict::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open synonym file " + path);
  SynonymDict dict;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto colon = t.find(':');
    if (colon == std::string::npos) {
      throw DataError(path + ":" + std::to_string(lineno) + ": expected 'word: syn1, syn2, ...'");
    }
    std::vector<std::string> words;
    words.push_back(trim(t.substr(0, colon)));
    for (const auto& s : split(t.substr(colon + 1), ',')) {
      const std::string w = trim(s);
      if (!w.empty()) words.push_back(w);
    }
    dict.add_synset(words);
  }
  return dict;
}

SemanticOutcome name_metric(std::string_view a, std::string_view b) {
  return name_style_match(a, b, token_pair_matches);
}

SemanticOutcome number_metric(std::string_view a, std::string_view b, double tolerance) {
  const auto na = parse_number(a);
  const auto nb = parse_number(b);
  if (!na || !nb) return SemanticOutcome::Undefined;
  return std::abs(*na - *nb) <= tolerance ? SemanticOutcome::Match : SemanticOutcome::NoMatch;
}

SemanticOutcome product_metric(std::string_view a, std::string_view b, std::size_t k) {
  const auto ta = tokenize(a);
  const auto tb = tokenize(b);
  if (ta.empty() || tb.empty()) return SemanticOutcome::Undefined;
  std::vector<std::string> codes_a, codes_b;
  for (const auto& t : ta) {
    if (is_code_token(t)) codes_a.push_back(t);
  }
  for (const auto& t : tb) {
    if (is_code_token(t)) codes_b.push_back(t);
  }
  for (const auto& ca : codes_a) {
    for (const auto& cb : codes_b) {
      if (ca == cb) return SemanticOutcome::Match;
    }
  }
  // No code agreement: require a k-token quorum of name-style matches.
  const auto& fewer = ta.size() <= tb.size() ? ta : tb;
  const auto& more = ta.size() <= tb.size() ? tb : ta;
  const std::size_t quorum = std::min(k, fewer.size());
  return matched_token_count(fewer, more, token_pair_matches) >= quorum ? SemanticOutcome::Match
                                                                        : SemanticOutcome::NoMatch;
}

SemanticOutcome title_metric(std::string_view a, std::string_view b, const SynonymDict& synonyms) {
  const std::string sa = strip_part_marker(a);
  const std::string sb = strip_part_marker(b);
  return name_style_match(sa, sb, [&synonyms](const std::string& x, const std::string& y) {
    return token_pair_matches_syn(x, y, synonyms);
  });
}

SemanticOutcome restaurant_metric(const std::vector<const KnowledgeChunk*>& left,
                                  const std::vector<const KnowledgeChunk*>& right,
                                  const RestaurantMetricConfig& cfg) {
  const double name = best_pair_jw(left, right, cfg.name_attr);
  if (name < 0) return SemanticOutcome::Undefined;
  const double phone = best_pair_jw(left, right, cfg.phone_attr);
  const double addr = best_pair_jw(left, right, cfg.addr_attr);
  const bool ok = name >= cfg.threshold && (phone >= cfg.threshold || addr >= cfg.threshold);
  return ok ? SemanticOutcome::Match : SemanticOutcome::NoMatch;
}

void AssumptionTally::record(SemanticOutcome outcome, double trust) {
  ++total;
  switch (outcome) {
    case SemanticOutcome::Undefined:
      ++undefined;
      break;
    case SemanticOutcome::Match:
      matched_trust += trust;
      break;
    case SemanticOutcome::NoMatch:
      break;
  }
}

std::optional<double> AssumptionTally::ratio() const {
  if (total == undefined) return std::nullopt;
  return matched_trust / static_cast<double>(total - undefined);
}

}  // namespace tam
