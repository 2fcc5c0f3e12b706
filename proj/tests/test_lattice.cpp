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
#include "wct/lattice.hpp"

#include <random>
#include <stdexcept>
#include <unordered_set>
#include <vector>

TEST_SUITE_BEGIN("lattice");

using wct::LatVec;
using wct::Sublattice;

namespace {

// Exhaustive membership: is v an integer combination of gens with every
// coefficient in [-bound, bound]?  Only used for rank <= 2 generator sets.
bool brute_in_span(std::vector<LatVec> const& gens, LatVec const& v, int bound) {
  if (gens.empty()) return v.is_zero();
  if (gens.size() == 1) {
    for (int c = -bound; c <= bound; ++c)
      if (c * gens[0] == v) return true;
    return false;
  }
  for (int c = -bound; c <= bound; ++c) {
    for (int d = -bound; d <= bound; ++d) {
      if (c * gens[0] + d * gens[1] == v) return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("empty span is the zero lattice") {
  auto L = wct::canonicalize(std::vector<LatVec>{});
  CHECK(L.rank() == 0);
  auto Z = Sublattice(2);
  CHECK(Z.contains(LatVec{0, 0}));
  CHECK_FALSE(Z.contains(LatVec{1, 0}));
}

TEST_CASE("hexagonal rotation lattices") {
  auto K2 = Sublattice::span({LatVec{-2, 1}, LatVec{1, 1}});
  auto K3 = Sublattice::span({LatVec{2, 0}, LatVec{0, 2}});
  CHECK(K2.rank() == 2);
  CHECK(K2.index() == 3);
  CHECK(K3.index() == 4);
  CHECK(K2.contains(LatVec{3, 0}));
  CHECK_FALSE(K3.contains(LatVec{1, 1}));
  CHECK(wct::intersect(K2, K3)
        == Sublattice::span({LatVec{2, 2}, LatVec{2, -4}}));
}

TEST_CASE("redundant generators are eliminated") {
  auto a = Sublattice::span({LatVec{2, 0}, LatVec{0, 2}, LatVec{2, 2}});
  auto b = Sublattice::span({LatVec{2, 0}, LatVec{0, 2}});
  CHECK(a == b);
  CHECK(a.rank() == 2);
  // idempotence
  CHECK(Sublattice::span(a.basis(), 2) == a);
}

TEST_CASE("coset membership") {
  wct::LatticeCoset c(LatVec{-1, 1}, Sublattice::span({LatVec{0, 2}}));
  CHECK(c.contains(LatVec{-1, 3}));
  CHECK(c.contains(LatVec{-1, -5}));
  CHECK_FALSE(c.contains(LatVec{0, 1}));
  wct::LatticeCoset odd(LatVec{1, 0}, Sublattice::span({LatVec{2, 0}}));
  CHECK_FALSE(wct::coset_contains(odd, LatVec{0, 0}));
  CHECK(odd == wct::LatticeCoset(LatVec{-3, 0}, Sublattice::span({LatVec{2, 0}})));
}

TEST_CASE("axis lines intersect trivially") {
  auto X = Sublattice::span({LatVec{1, 0}});
  auto Y = Sublattice::span({LatVec{0, 1}});
  auto I = wct::intersect(X, Y);
  CHECK(I.rank() == 0);
  for (auto const& v : wct::box(2, 10)) {
    if (X.contains(v) && Y.contains(v)) CHECK(v.is_zero());
  }
}

TEST_CASE("membership agrees with coefficient search on random lattices") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> entry(-3, 3);
  auto const ball = wct::box(2, 6);
  for (int trial = 0; trial < 100; ++trial) {
    int const ngens = 1 + trial % 2;
    std::vector<LatVec> gens;
    for (int k = 0; k < ngens; ++k) gens.push_back(LatVec{entry(rng), entry(rng)});
    auto L = Sublattice::span(gens, 2);
    for (auto const& v : ball) {
      INFO("trial " << trial << " v=" << v.to_string());
      // Cramer bounds every needed coefficient by 6*3 + 6*3 = 36.
      CHECK(L.contains(v) == brute_in_span(gens, v, 40));
    }
  }
}

TEST_CASE("intersection is the common part") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> entry(-4, 4);
  auto const ball = wct::box(2, 6);
  for (int trial = 0; trial < 50; ++trial) {
    auto A = Sublattice::span({LatVec{entry(rng), entry(rng)}, LatVec{entry(rng), entry(rng)}});
    auto B = Sublattice::span({LatVec{entry(rng), entry(rng)}});
    auto I = wct::intersect(A, B);
    for (auto const& g : I.basis()) {
      CHECK(A.contains(g));
      CHECK(B.contains(g));
    }
    for (auto const& v : ball) {
      if (A.contains(v) && B.contains(v)) CHECK(I.contains(v));
    }
  }
}

TEST_CASE("reduce gives canonical coset representatives") {
  auto L = Sublattice::span({LatVec{3, 1}, LatVec{0, 2}});
  std::unordered_set<LatVec> reps;
  for (auto const& v : wct::box(2, 5)) {
    auto r = L.reduce(v);
    CHECK(L.contains(v - r));
    CHECK(L.reduce(r) == r);
    reps.insert(r);
  }
  CHECK(reps.size() == 6);
}

TEST_CASE("solve and kernel") {
  wct::IntMatrix swap_minus_id{{-1, 1}, {1, -1}};
  auto ker = wct::kernel(swap_minus_id);
  CHECK(ker == Sublattice::span({LatVec{1, 1}}));
  auto sol = wct::solve(swap_minus_id, LatVec{2, -2});
  REQUIRE(sol);
  CHECK(swap_minus_id.apply(sol->offset()) == LatVec{2, -2});
  CHECK_FALSE(wct::solve(swap_minus_id, LatVec{1, 0}));
  wct::IntMatrix two{{2, 0}, {0, 2}};
  CHECK_FALSE(wct::solve(two, LatVec{1, 0}));
  CHECK(wct::kernel(two).rank() == 0);
  CHECK(wct::image(two) == Sublattice::span({LatVec{2, 0}, LatVec{0, 2}}));
}

TEST_CASE("matrix algebra") {
  wct::IntMatrix t{{0, -1}, {1, -1}};
  CHECK(t.power(3).is_identity());
  CHECK(t.determinant() == 1);
  CHECK(t * t.inverse() == wct::IntMatrix::identity(2));
  CHECK(t.power(-1) == t.power(2));
  wct::IntMatrix c5{{0, 0, 0, -1}, {1, 0, 0, -1}, {0, 1, 0, -1}, {0, 0, 1, -1}};
  CHECK(c5.power(5).is_identity());
  CHECK(c5.determinant() == 1);
  CHECK(c5 * c5.inverse() == wct::IntMatrix::identity(4));
  wct::IntMatrix sing{{2, 4}, {1, 2}};
  CHECK(sing.determinant() == 0);
  CHECK_THROWS_AS(sing.inverse(), std::domain_error);
}

TEST_CASE("overflow is detected") {
  LatVec big{INT64_MAX, 0};
  CHECK_THROWS_AS((big + LatVec{1, 0}), std::overflow_error);
  CHECK_THROWS_AS((LatVec{1, 0} + LatVec{1, 0, 0}), std::invalid_argument);
  LatVec ok{1LL << 40, -(1LL << 40)};
  CHECK((ok + ok)[0] == (1LL << 41));
}

TEST_CASE("box is ordered by shell") {
  auto b = wct::box(2, 2);
  CHECK(b.size() == 25);
  CHECK(b.front() == LatVec{0, 0});
  for (std::size_t i = 1; i < b.size(); ++i) CHECK(b[i - 1].max_norm() <= b[i].max_norm());
}

TEST_SUITE_END();
