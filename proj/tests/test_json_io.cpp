// Copyright 2026 The wct Authors
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

#include "doctest.h"

#include "wct/json_io.hpp"
#include "wct/maps.hpp"
#include "wct/semidirect.hpp"

using nlohmann::json;
using wct::LatVec;
using wct::Sublattice;

TEST_SUITE_BEGIN("json_io");

TEST_CASE("lattice values round-trip") {
  LatVec const v{3, -4};
  CHECK(wct::io::latvec_from_json(wct::io::to_json(v)) == v);

  auto const L = Sublattice::span({LatVec{-2, 1}, LatVec{1, 1}});
  CHECK(wct::io::sublattice_from_json(wct::io::to_json(L)) == L);
  Sublattice const zero(2);
  CHECK(wct::io::sublattice_from_json(wct::io::to_json(zero), 2) == zero);

  wct::LatticeCoset const c(LatVec{-1, 1}, Sublattice::span({LatVec{0, 2}}));
  CHECK(wct::io::coset_from_json(wct::io::to_json(c)) == c);

  wct::IntMatrix const m{{0, -1}, {1, -1}};
  CHECK(wct::io::matrix_from_json(wct::io::to_json(m)) == m);
}

TEST_CASE("elements, classes and maps round-trip in every group") {
  for (auto id : wct::all_groups()) {
    auto const& G = wct::load_group(id);
    auto const& C = wct::conjugacy(id);
    INFO(G.name());
    for (auto const& g : wct::ball(G, 1)) {
      auto const j = wct::io::to_json(G, g);
      CHECK(wct::io::element_from_json(G, json::parse(j.dump())) == g);
      auto const cls = C.class_descriptor(g);
      CHECK(wct::io::class_from_json(G, json::parse(wct::io::to_json(G, cls).dump())) == cls);
    }
    for (auto const& n : wct::automorphism_names(id)) {
      auto const m = wct::generator(G, n);
      CHECK(wct::io::map_from_json(json::parse(wct::io::to_json(m).dump())) == m);
    }
    for (auto const& n : wct::nontrivial_names(id)) {
      auto const m = wct::generator(G, n);
      CHECK(wct::io::map_from_json(wct::io::to_json(m)) == m);
    }
  }
}

TEST_CASE("class descriptor shape") {
  auto const& p4mg = wct::load_group(wct::GroupId::p4mg);
  auto const  cls  = wct::conjugacy(wct::GroupId::p4mg).class_descriptor(wct::parse_word(p4mg, "gamma"));
  auto const  j    = wct::io::to_json(p4mg, cls);
  CHECK(j.at("kind") == "cosetUnion");
  REQUIRE(j.at("pieces").is_array());
  auto const& piece = j.at("pieces").at(0);
  CHECK(piece.contains("f"));
  CHECK(piece.contains("offset"));
  CHECK(piece.contains("lattice"));

  auto const& p1 = wct::load_group(wct::GroupId::p1);
  auto const  fj = wct::io::to_json(p1, wct::conjugacy(wct::GroupId::p1).class_descriptor(p1.identity()));
  CHECK(fj.at("kind") == "finiteSet");
}

TEST_CASE("malformed documents are rejected") {
  auto const& p4 = wct::load_group(wct::GroupId::p4);
  CHECK_THROWS(wct::io::element_from_json(p4, json{{"a", {1, 2}}, {"f", "gamma"}}));
  CHECK_THROWS(wct::io::element_from_json(p4, json{{"a", {1}}, {"f", "rho"}}));
  CHECK_THROWS(wct::io::map_from_json(json{{"group", "p99"}, {"pieces", json::array()}}));
  CHECK_THROWS(wct::io::latvec_from_json(json{"a", "b"}));
}

TEST_CASE("semidirect elements round-trip") {
  wct::SdElement const g{LatVec{1, -2}, 2};
  CHECK(wct::io::sd_element_from_json(wct::io::to_json(g)) == g);
  auto const G   = wct::SdGroup::build(wct::IntMatrix{{0, -1}, {1, -1}}, 3);
  auto const cls = wct::io::to_json(wct::class_sd(G, g));
  CHECK(cls.at("kind") == "cosetUnion");
  CHECK(cls.at("pieces").size() > 0);
  auto const orbit = wct::io::to_json(wct::class_sd(G, wct::SdElement{LatVec{1, 0}, 0}));
  CHECK(orbit.at("elements").size() == 3);
}

TEST_SUITE_END();
