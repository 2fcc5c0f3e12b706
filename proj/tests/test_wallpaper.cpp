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

#include <random>
#include <stdexcept>

#include "wct/wallpaper.hpp"

using wct::Element;
using wct::GroupId;
using wct::GroupTable;
using wct::LatVec;

TEST_SUITE_BEGIN("wallpaper");

namespace {

GroupTable const& group(char const* name) {
  return wct::load_group(*wct::parse_group(name));
}

Element w(GroupTable const& G, char const* word) {
  return wct::parse_word(G, word);
}

}  // namespace

TEST_CASE("every presentation holds") {
  CHECK(wct::all_groups().size() == wct::kGroupCount);
  for (auto id : wct::all_groups()) {
    auto const& G   = wct::load_group(id);
    auto const  rep = wct::check_presentation(G);
    INFO(G.name());
    CHECK(rep.violations() == 0);
    CHECK_FALSE(rep.relations.empty());
  }
}

TEST_CASE("group names round-trip") {
  for (auto id : wct::all_groups()) {
    CHECK(wct::parse_group(wct::group_name(id)) == id);
  }
  CHECK_FALSE(wct::parse_group("p7"));
  CHECK_FALSE(wct::parse_group(""));
}

TEST_CASE("point actions match the presentations") {
  auto const& p4 = group("p4");
  auto const  r4 = *p4.find_label("rho");
  // x^rho = y, y^rho = x^-1
  CHECK(p4.act(r4).apply(LatVec{1, 0}) == LatVec{0, 1});
  CHECK(p4.act(r4).apply(LatVec{0, 1}) == LatVec{-1, 0});
  CHECK(p4.act(r4).apply(LatVec{3, 5}) == LatVec{-5, 3});

  auto const& p6 = group("p6");
  auto const  r6 = *p6.find_label("rho");
  CHECK(p6.act(r6).apply(LatVec{1, 0}) == LatVec{0, 1});
  CHECK(p6.act(r6).apply(LatVec{0, 1}) == LatVec{-1, 1});

  auto const& pg = group("pg");
  auto const  g  = *pg.find_label("gamma");
  CHECK(pg.fprod(g, g).h == 0);
  CHECK(pg.fprod(g, g).cocycle == LatVec{1, 0});
}

TEST_CASE("products and inverses") {
  auto const& p4 = group("p4");
  CHECK(p4.mul(w(p4, "x rho"), w(p4, "y rho")) == w(p4, "x^2 rho2"));
  CHECK(p4.inv(w(p4, "x rho")) == w(p4, "y^-1 rho3"));

  auto const& p4mg = group("p4mg");
  auto const  rg   = w(p4mg, "rho gamma");
  CHECK(p4mg.mul(rg, rg) == p4mg.identity());

  auto const& pg = group("pg");
  CHECK(pg.inv(w(pg, "gamma")) == w(pg, "x^-1 gamma"));
  CHECK(pg.mul(w(pg, "gamma"), w(pg, "gamma")) == w(pg, "x"));

  auto const& p1 = group("p1");
  CHECK(w(p1, "(x,y)") == p1.identity());
}

TEST_CASE("identity, inverses and associativity on random elements") {
  std::mt19937_64                             rng(7);
  std::uniform_int_distribution<std::int64_t> coord(-6, 6);
  for (auto id : wct::all_groups()) {
    auto const& G = wct::load_group(id);
    INFO(G.name());
    std::uniform_int_distribution<std::size_t> point(0, G.order() - 1);
    auto random_element = [&] {
      return Element{LatVec{coord(rng), coord(rng)},
                     static_cast<std::uint8_t>(point(rng))};
    };
    for (int i = 0; i < 200; ++i) {
      auto const a = random_element();
      auto const b = random_element();
      auto const c = random_element();
      CHECK(G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c)));
      CHECK(G.mul(a, G.identity()) == a);
      CHECK(G.mul(G.identity(), a) == a);
      CHECK(G.mul(a, G.inv(a)) == G.identity());
      CHECK(G.conj(a, b) == G.mul(G.inv(b), G.mul(a, b)));
    }
  }
}

TEST_CASE("powers") {
  auto const& p6 = group("p6");
  auto const  r  = w(p6, "rho");
  CHECK(p6.pow(r, 6) == p6.identity());
  CHECK(p6.pow(r, -1) == w(p6, "rho5"));
  CHECK(p6.pow(w(p6, "x"), 0) == p6.identity());
}

TEST_CASE("ball sizes") {
  CHECK(wct::ball(group("p1"), 0).size() == 1);
  CHECK(wct::ball(group("p2"), 1).size() == 18);
  CHECK(wct::ball(group("p4mm"), 2).size() == 200);
  auto const b = wct::ball(group("p6m"), 1);
  CHECK(b.front() == group("p6m").identity());
}

TEST_CASE("word parser") {
  auto const& p4mg = group("p4mg");
  CHECK(w(p4mg, "rho^-1") == w(p4mg, "rho3"));
  CHECK(w(p4mg, "  x^2   y^-1  gamma ") == w(p4mg, "x x y^-1 gamma"));
  CHECK(w(p4mg, "x^rho") == w(p4mg, "y"));
  CHECK(w(p4mg, "(rho gamma)^2") == p4mg.identity());
  CHECK(w(p4mg, "1") == p4mg.identity());
  CHECK_THROWS_AS(w(p4mg, "sigma"), std::invalid_argument);
  CHECK_THROWS_AS(w(p4mg, "x^"), std::invalid_argument);
  CHECK_THROWS_AS(w(p4mg, "(x"), std::invalid_argument);
  CHECK_THROWS_AS(w(group("p1"), "rho"), std::invalid_argument);
}

TEST_CASE("formatting parses back") {
  for (auto id : wct::all_groups()) {
    auto const& G = wct::load_group(id);
    for (auto const& g : wct::ball(G, 2)) {
      CHECK(wct::parse_word(G, G.format(g)) == g);
    }
  }
}

TEST_SUITE_END();
