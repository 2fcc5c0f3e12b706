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

#include <algorithm>
#include <stdexcept>
#include <string>

#include "wct/semidirect.hpp"

using wct::IntMatrix;
using wct::LatVec;
using wct::SdElement;
using wct::SdGroup;
using wct::Sublattice;

TEST_SUITE_BEGIN("semidirect");

namespace {

struct Case {
  char const*  name;
  IntMatrix    theta;
  std::int64_t p;
  std::int64_t radius;  // for the brute-force comparisons
};

std::vector<Case> cases() {
  return {
      {"dihedral", IntMatrix{{-1}}, 2, 4},
      {"minus identity", IntMatrix{{-1, 0}, {0, -1}}, 2, 3},
      {"swap", IntMatrix{{0, 1}, {1, 0}}, 2, 3},
      {"order three", IntMatrix{{0, -1}, {1, -1}}, 3, 3},
      {"3x3 block", IntMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, -1}}, 2, 1},
  };
}

SdGroup order_three() {
  return SdGroup::build(IntMatrix{{0, -1}, {1, -1}}, 3);
}

}  // namespace

TEST_CASE("building groups") {
  auto const d = SdGroup::build(IntMatrix{{-1}}, 2);
  CHECK(d.dim() == 1);
  CHECK(d.p() == 2);
  // x^r = x^-1 in the infinite dihedral group
  auto const x = d.translation(LatVec(std::vector<std::int64_t>{1}));
  CHECK(d.conj(x, d.rotation(1)) == d.inv(x));

  auto const g3 = order_three();
  CHECK(g3.theta_power(3).is_identity());
  CHECK(g3.theta_power(-1) == g3.theta_power(2));

  CHECK_THROWS_AS(SdGroup::build(IntMatrix::identity(2), 2), std::invalid_argument);
  CHECK_THROWS_AS(SdGroup::build(IntMatrix{{0, -1}, {1, -1}}, 2), std::invalid_argument);
  CHECK_THROWS_AS(SdGroup::build(IntMatrix{{-1}}, 4), std::invalid_argument);
  CHECK_THROWS_AS(SdGroup::build(IntMatrix{{2, 0}, {0, 1}}, 2), std::invalid_argument);
  CHECK_THROWS_AS(SdGroup::build(IntMatrix{{1, 1}, {0, 1}}, 3), std::invalid_argument);
  CHECK_THROWS_AS(SdGroup::build(IntMatrix(2, 3), 2), std::invalid_argument);
}

TEST_CASE("group axioms on a ball") {
  for (auto const& c : cases()) {
    auto const G    = SdGroup::build(c.theta, c.p);
    auto const elems = G.ball(1);
    INFO(c.name);
    for (auto const& a : elems) {
      CHECK(G.mul(a, G.inv(a)) == G.identity());
      CHECK(G.mul(G.identity(), a) == a);
      for (std::size_t i = 0; i < elems.size(); i += 3) {
        auto const& b = elems[i];
        auto const& e = elems[(i * 7 + 1) % elems.size()];
        CHECK(G.mul(G.mul(a, b), e) == G.mul(a, G.mul(b, e)));
      }
    }
  }
}

TEST_CASE("theta parsing") {
  CHECK(wct::parse_theta("[[0,-1],[1,-1]]") == IntMatrix{{0, -1}, {1, -1}});
  CHECK(wct::parse_theta("-1") == IntMatrix{{-1}});
  CHECK_THROWS_AS(wct::parse_theta("[[0,1],[1]]"), std::invalid_argument);
  CHECK_THROWS_AS(wct::parse_theta("[[0,1"), std::invalid_argument);
  CHECK_THROWS_AS(wct::parse_theta("[[0.5]]"), std::invalid_argument);
}

TEST_CASE("derived lattice for p = 2") {
  auto lattice = [](IntMatrix theta) { return wct::derived_lattice(SdGroup::build(theta, 2)); };
  CHECK(lattice(IntMatrix{{-1, 0}, {0, -1}}) == Sublattice::span({LatVec{2, 0}, LatVec{0, 2}}));
  CHECK(lattice(IntMatrix{{0, 1}, {1, 0}}) == Sublattice::span({LatVec{-1, 1}}));
  CHECK(lattice(IntMatrix{{-1}}) == Sublattice::span(std::vector<LatVec>{LatVec(std::vector<std::int64_t>{2})}, 1));

  for (auto const& c : cases()) {
    if (c.p != 2) {
      continue;
    }
    auto const G = SdGroup::build(c.theta, c.p);
    INFO(c.name);
    CHECK(wct::derived_lattice(G) == wct::brute_derived_lattice(G, 2));
  }
  CHECK_THROWS_AS(wct::derived_lattice(order_three()), std::invalid_argument);
}

TEST_CASE("classes against brute force") {
  for (auto const& c : cases()) {
    auto const G = SdGroup::build(c.theta, c.p);
    INFO(c.name);
    for (auto const& g : G.ball(1)) {
      auto const cls = wct::class_sd(G, g);
      CHECK(cls.contains(g));
      for (auto const& h : wct::brute_sd_class(G, g, c.radius)) {
        CHECK(cls.contains(h));
      }
      for (auto const& h : G.ball(1)) {
        bool const closed = cls.contains(h);
        CHECK(closed == wct::sd_is_conjugate(G, g, h));
        if (closed) {
          CHECK(wct::brute_sd_conjugate(G, g, h, c.radius + 2));
        }
      }
    }
  }
}

TEST_CASE("dihedral classes") {
  auto const G = SdGroup::build(IntMatrix{{-1}}, 2);
  auto const three = wct::class_sd(G, G.translation(LatVec(std::vector<std::int64_t>{3})));
  CHECK(three.is_finite());
  CHECK(three.orbit.size() == 2);
  auto const r = wct::class_sd(G, G.rotation(1));
  CHECK_FALSE(r.is_finite());
  REQUIRE(r.cosets.size() == 1);
  CHECK(r.cosets[0].lattice() == Sublattice::span(std::vector<LatVec>{LatVec(std::vector<std::int64_t>{2})}, 1));
  auto const e = wct::class_sd(G, G.identity());
  CHECK(e.orbit.size() == 1);
}

TEST_CASE("the odd-order map") {
  auto const G   = order_three();
  auto const phi = wct::phi_map(G);
  CHECK(phi(G.identity()) == G.identity());
  CHECK(phi(G.translation(LatVec{1, 0})) == G.translation(LatVec{0, 1}));
  for (auto const& g : G.ball(2)) {
    if (g.k != 0) {
      CHECK(phi(g) == g);
    } else {
      CHECK(phi(g) == G.conj(g, G.rotation(1)));
    }
  }
  CHECK(wct::verify_sd(G, phi, 3).ok);
  CHECK(wct::verify_sd(G, wct::identity_map(G), 2).ok);
  CHECK(wct::check_sd_axioms(G, phi, 2).total() == 0);

  auto const cert = wct::sd_nontriviality(G, phi, 2);
  CHECK(cert.found());
  CHECK_FALSE(wct::sd_nontriviality(G, wct::identity_map(G), 2).found());
  CHECK_THROWS_AS(wct::phi_map(SdGroup::build(IntMatrix{{-1}}, 2)), std::invalid_argument);
}

TEST_CASE("the odd-order map in higher dimension") {
  // companion matrix of 1 + t + t^2 + t^3 + t^4
  IntMatrix const theta{{0, 0, 0, -1}, {1, 0, 0, -1}, {0, 1, 0, -1}, {0, 0, 1, -1}};
  auto const      G   = SdGroup::build(theta, 5);
  auto const      phi = wct::phi_map(G);
  CHECK(wct::verify_sd(G, phi, 1).ok);
  CHECK(wct::sd_nontriviality(G, phi, 1).found());
}

// For p = 2 the candidate a -> a, a r -> a^r r is inversion composed with
// the automorphism a -> -a, r -> r, so it passes rather than failing.
TEST_CASE("the p = 2 candidate is a trivial weak Cayley table map") {
  for (auto const& c : cases()) {
    if (c.p != 2) {
      continue;
    }
    auto const G    = SdGroup::build(c.theta, c.p);
    auto const cand = wct::p2_candidate(G);
    INFO(c.name);
    for (auto const& g : G.ball(2)) {
      CHECK(cand(g) == G.inv(SdElement{-g.v, g.k}));
    }
    CHECK(wct::verify_sd(G, cand, std::min<std::int64_t>(c.radius, 2)).ok);
  }
}

TEST_SUITE_END();
