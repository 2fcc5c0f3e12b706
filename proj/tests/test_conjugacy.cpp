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
#include <set>

#include "wct/conjugacy.hpp"

using wct::Element;
using wct::GroupTable;
using wct::LatVec;
using wct::Sublattice;

TEST_SUITE_BEGIN("conjugacy");

namespace {

GroupTable const& group(char const* name) {
  return wct::load_group(*wct::parse_group(name));
}

wct::Conjugacy const& engine(char const* name) {
  return wct::conjugacy(*wct::parse_group(name));
}

Element w(GroupTable const& G, char const* word) {
  return wct::parse_word(G, word);
}

std::size_t coset(GroupTable const& G, char const* label) {
  return *G.find_label(label);
}

std::set<LatVec> as_set(std::vector<LatVec> const& v) {
  return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("translation orbits") {
  CHECK(engine("p4").orbit_translation(LatVec{0, 0}) == std::vector<LatVec>{LatVec{0, 0}});
  CHECK(as_set(engine("p4mg").orbit_translation(LatVec{1, 0}))
        == std::set<LatVec>{{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
  CHECK(as_set(engine("p2").orbit_translation(LatVec{2, 1}))
        == std::set<LatVec>{{2, 1}, {-2, -1}});
}

TEST_CASE("K_f lattices") {
  for (auto id : wct::all_groups()) {
    auto const& C = wct::conjugacy(id);
    auto const& G = C.group();
    INFO(G.name());
    CHECK(C.kf(0).rank() == 0);
    for (std::size_t f = 1; f < G.order(); ++f) {
      auto const expected = G.act(f).determinant() == -1 ? 1u : 2u;
      CHECK(C.kf(f).rank() == expected);
    }
  }
  auto const& p6 = group("p6");
  CHECK(engine("p6").kf(coset(p6, "rho2")) == Sublattice::span({LatVec{-2, 1}, LatVec{1, 1}}));
  CHECK(engine("p6").kf(coset(p6, "rho3")) == Sublattice::span({LatVec{2, 0}, LatVec{0, 2}}));
}

TEST_CASE("reflection lines") {
  auto const& pm   = group("pm");
  auto const& cm   = group("cm");
  auto const& p4mg = group("p4mg");
  CHECK(engine("pm").line_L(coset(pm, "sigma")) == Sublattice::span({LatVec{1, 0}}));
  CHECK(engine("cm").line_L(coset(cm, "sigma")) == Sublattice::span({LatVec{1, 1}}));
  CHECK(engine("p4mg").line_L(coset(p4mg, "gamma")) == Sublattice::span({LatVec{1, 0}}));
  CHECK(engine("pm").line_Lperp(coset(pm, "sigma")) == Sublattice::span({LatVec{0, 1}}));
  CHECK(engine("cm").line_Lperp(coset(cm, "sigma")) == Sublattice::span({LatVec{1, -1}}));
  CHECK(engine("p4mg").line_Lperp(coset(p4mg, "gamma")) == Sublattice::span({LatVec{0, 1}}));
  CHECK_THROWS_AS(engine("p4").line_L(coset(group("p4"), "rho")), std::invalid_argument);

  CHECK(engine("p2").reflection_locus().empty());
  CHECK(engine("pm").reflection_locus() == std::vector<Sublattice>{Sublattice::span({LatVec{1, 0}})});
  auto const lines = engine("p4mm").reflection_locus();
  std::set<std::vector<LatVec>> bases;
  for (auto const& L : lines) {
    bases.insert(L.basis());
  }
  std::set<std::vector<LatVec>> expected;
  for (LatVec v : {LatVec{1, 0}, LatVec{0, 1}, LatVec{1, 1}, LatVec{1, -1}}) {
    expected.insert(Sublattice::span({v}).basis());
  }
  CHECK(bases == expected);
}

TEST_CASE("class descriptors") {
  auto const& p1 = group("p1");
  auto const  c1 = engine("p1").class_descriptor(w(p1, "x^3 y"));
  CHECK(c1.kind() == wct::ConjClass::Kind::FiniteSet);
  CHECK(c1.elements() == std::vector<Element>{w(p1, "x^3 y")});

  auto const& p4mg = group("p4mg");
  auto const  cg   = engine("p4mg").class_descriptor(w(p4mg, "gamma"));
  CHECK(cg.kind() == wct::ConjClass::Kind::CosetUnion);
  bool has_y_piece = false;
  for (auto const& piece : cg.pieces()) {
    if (piece.f == coset(p4mg, "gamma") && piece.coset.contains(LatVec{0, 0})
        && piece.coset.lattice().contains(LatVec{0, 2})) {
      has_y_piece = true;
    }
  }
  CHECK(has_y_piece);
  CHECK(cg.contains(w(p4mg, "gamma")));
  CHECK(cg.contains(w(p4mg, "y^2 gamma")));
}

TEST_CASE("conjugacy decisions") {
  auto const& p4 = group("p4");
  CHECK(engine("p4").is_conjugate(w(p4, "x rho"), w(p4, "x rho")));
  CHECK_FALSE(engine("p4").is_conjugate(w(p4, "y^2 rho2"), w(p4, "x y rho2")));
  CHECK_FALSE(wct::brute_is_conjugate(p4, w(p4, "y^2 rho2"), w(p4, "x y rho2"), 8));

  auto const& c2mm = group("c2mm");
  CHECK_FALSE(engine("c2mm").is_conjugate(w(c2mm, "x y rho"), w(c2mm, "y^2 rho")));

  auto const& p2 = group("p2");
  CHECK(wct::brute_is_conjugate(p2, w(p2, "x"), w(p2, "x^-1"), 1));
  CHECK(wct::brute_is_conjugate(p2, w(p2, "x rho"), w(p2, "x rho"), 0));
}

// The closed form against exhaustive conjugation, both directions, on every
// group.  A conjugator radius of 6 is ample for elements of norm <= 1.
TEST_CASE("closed form agrees with brute force") {
  for (auto id : wct::all_groups()) {
    auto const& G = wct::load_group(id);
    auto const& C = wct::conjugacy(id);
    INFO(G.name());
    wct::BruteConjugacy const brute(G, 6);
    auto const                elems = wct::ball(G, 1);
    std::size_t               disagreements = 0;
    for (auto const& g : elems) {
      auto const cls = C.class_descriptor(g);
      auto const seen = brute.conjugates(g);
      for (auto const& h : elems) {
        bool const closed = C.is_conjugate(g, h);
        if (closed != (seen.count(h) > 0) || closed != cls.contains(h)) {
          ++disagreements;
        }
      }
      // Every conjugate found by brute force is in the descriptor.
      for (auto const& h : seen) {
        if (!cls.contains(h)) {
          ++disagreements;
        }
      }
    }
    CHECK(disagreements == 0);
  }
}

TEST_CASE("coset squares") {
  auto const& p4mg = group("p4mg");
  for (auto const& e : wct::squares_in_coset(p4mg, coset(p4mg, "gamma"), 3)) {
    // (x^i y^j gamma)^2 = x^(2i+1)
    CHECK(e.square == Element{LatVec{2 * e.a[0] + 1, 0}, 0});
  }
  for (auto const& e : wct::squares_in_coset(p4mg, coset(p4mg, "rhogamma"), 3)) {
    CHECK(e.square == Element{LatVec{e.a[0] - e.a[1], e.a[1] - e.a[0]}, 0});
  }
  auto const& p2mg = group("p2mg");
  for (auto const& e : wct::squares_in_coset(p2mg, coset(p2mg, "rhosigma"), 3)) {
    CHECK(e.square == Element{LatVec{0, 2 * e.a[1] + 1}, 0});
  }
}

TEST_CASE("involution loci") {
  auto const& p4mg = group("p4mg");
  auto const& C    = engine("p4mg");
  auto const  rg   = C.involution_locus(coset(p4mg, "rhogamma"));
  REQUIRE(rg);
  CHECK(*rg == wct::LatticeCoset(LatVec{0, 0}, Sublattice::span({LatVec{1, 1}})));
  CHECK_FALSE(C.involution_locus(coset(p4mg, "gamma")));
  // In A itself only the identity squares to e.
  auto const a = C.involution_locus(0);
  REQUIRE(a);
  CHECK(*a == wct::LatticeCoset(LatVec{0, 0}, Sublattice(2)));

  auto const& p2 = group("p2");
  auto const  r  = engine("p2").involution_locus(coset(p2, "rho"));
  REQUIRE(r);
  CHECK(r->lattice() == Sublattice::full(2));

  // Every locus against direct squaring.
  for (auto id : wct::all_groups()) {
    auto const& G = wct::load_group(id);
    auto const& E = wct::conjugacy(id);
    INFO(G.name());
    for (std::size_t f = 1; f < G.order(); ++f) {
      auto const locus = E.involution_locus(f);
      for (auto const& e : wct::squares_in_coset(G, f, 3)) {
        bool const involution = e.square == G.identity();
        CHECK(involution == (locus && locus->contains(e.a)));
      }
    }
  }
}

TEST_SUITE_END();
