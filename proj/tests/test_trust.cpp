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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/fixtures.hpp"
#include "tam/error.hpp"
#include "tam/trust.hpp"

using namespace tam;
namespace ts = tam::testsupport;

TEST_CASE("trust value concatenation") {
  auto store = ts::store_of({ts::chunk("k", {{"birth", "1980"}}, "src")});
  TrustModel model;

  SUBCASE("all ones stay one under either rule") {
    for (auto rule : {TrustConcat::Product, TrustConcat::Min}) {
      model.concat = rule;
      CHECK(model.value_trust(store.chunk(0), 0) == doctest::Approx(1.0));
    }
  }

  SUBCASE("source trust alone scales the product") {
    model.source_trust["src"] = 0.5;
    CHECK(model.value_trust(store.chunk(0), 0) == doctest::Approx(0.5));
  }

  SUBCASE("product multiplies, min takes the minimum") {
    model.source_trust["src"] = 0.9;
    model.attribute_trust["src.birth"] = 0.8;
    model.chunk_trust["k"] = 0.5;
    model.concat = TrustConcat::Product;
    CHECK(model.value_trust(store.chunk(0), 0) == doctest::Approx(0.36));
    model.concat = TrustConcat::Min;
    CHECK(model.value_trust(store.chunk(0), 0) == doctest::Approx(0.5));
  }

  SUBCASE("missing entries without defaults are configuration errors") {
    model.default_source_trust.reset();
    CHECK_THROWS_AS(model.value_trust(store.chunk(0), 0), ConfigError);
  }

  SUBCASE("occurrence addressing") {
    auto multi = ts::store_of({ts::chunk("m", {{"name", "a"}, {"name", "b"}}, "src")});
    model.attribute_trust["src.name"] = 0.7;
    CHECK(model.value_trust(multi.chunk(0), "name", 1) == doctest::Approx(0.7));
    CHECK_THROWS_AS(model.value_trust(multi.chunk(0), "name", 2), RuntimeError);
  }
}

TEST_CASE("chunk evaluation density") {
  TrustModel model;

  SUBCASE("no applicable rules mean full trust") {
    auto store = ts::store_of({ts::chunk("k", {{"a", "1"}})});
    evaluate_chunks(model, store, {});
    CHECK(model.chunk("k") == doctest::Approx(1.0));
  }

  SUBCASE("passing instances keep full trust") {
    auto store = ts::store_of({ts::chunk("k", {{"a", "1"}, {"a", "1"}, {"b", "1"}})});
    // two a-values against one b-value: two applicable instances
    evaluate_chunks(model, store, {make_rule("equal", "a", "b", 0.0)});
    CHECK(model.chunk("k") == doctest::Approx(1.0));
  }

  SUBCASE("one failing instance out of four") {
    auto store = ts::store_of(
        {ts::chunk("k", {{"a", "1"}, {"a", "1"}, {"a", "1"}, {"a", "2"}, {"b", "1"}})});
    evaluate_chunks(model, store, {make_rule("equal", "a", "b", 0.0)});
    CHECK(model.chunk("k") == doctest::Approx(0.75));
  }

  SUBCASE("numeric consistency skips non-numeric values") {
    auto store = ts::store_of({ts::chunk("k", {{"age", "44"}, {"age", "none"}, {"born", "44"}})});
    evaluate_chunks(model, store, {make_rule("numeric_consistent", "age", "born", 0.0)});
    CHECK(model.chunk("k") == doctest::Approx(1.0));  // the text value is not applicable
  }

  SUBCASE("re-evaluation is idempotent") {
    auto store = ts::store_of({ts::chunk("k", {{"a", "1"}, {"a", "2"}, {"b", "1"}})});
    const auto rules = {make_rule("equal", "a", "b", 0.0)};
    evaluate_chunks(model, store, rules);
    const double first = model.chunk("k");
    evaluate_chunks(model, store, rules);
    CHECK(model.chunk("k") == doctest::Approx(first));
    CHECK(first == doctest::Approx(0.5));
  }
}

TEST_CASE("untrusted attributes do not count as inconsistencies") {
  // Dropping an attribute's trust below the rule gate can only raise T_K.
  auto store = ts::store_of({ts::chunk("k", {{"birth", "1980"}, {"age", "10"}}, "src")});
  const auto rules = {make_rule("equal", "birth", "age", 0.6)};

  TrustModel trusted;
  evaluate_chunks(trusted, store, rules);
  const double with_trust = trusted.chunk("k");
  CHECK(with_trust == doctest::Approx(0.0));  // one applicable, one failing

  TrustModel untrusted;
  untrusted.attribute_trust["src.age"] = 0.5;  // below the rule gate
  evaluate_chunks(untrusted, store, rules);
  CHECK(untrusted.chunk("k") == doctest::Approx(1.0));
  CHECK(untrusted.chunk("k") >= with_trust);
}

TEST_CASE("trust value is monotone in each level") {
  auto store = ts::store_of({ts::chunk("k", {{"a", "1"}}, "src")});
  const double grid[] = {0.0, 0.25, 0.5, 0.75, 1.0};
  for (auto rule : {TrustConcat::Product, TrustConcat::Min}) {
    double prev = -1.0;
    for (double t : grid) {  // vary one level, keep the others fixed
      TrustModel m;
      m.concat = rule;
      m.source_trust["src"] = t;
      m.attribute_trust["src.a"] = 0.8;
      m.chunk_trust["k"] = 0.6;
      const double v = m.value_trust(store.chunk(0), 0);
      CHECK(v >= prev);
      prev = v;
    }
  }
}

TEST_CASE("stored trusts outside [0,1] are rejected") {
  TrustModel m;
  m.source_trust["s"] = 1.5;
  CHECK_THROWS_AS(m.validate(), ConfigError);
}
