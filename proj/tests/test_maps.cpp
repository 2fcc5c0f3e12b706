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

#include <stdexcept>

#include "wct/maps.hpp"

using wct::CosetwiseAffineMap;
using wct::Element;
using wct::GroupTable;

TEST_SUITE_BEGIN("maps");

namespace {

GroupTable const& group(char const* name) {
  return wct::load_group(*wct::parse_group(name));
}

Element w(GroupTable const& G, char const* word) {
  return wct::parse_word(G, word);
}

CosetwiseAffineMap map(GroupTable const& G, char const* expr) {
  return wct::parse_map(G, expr);
}

// Two maps agree pointwise on ball(R).  Used as an oracle independent of
// the affine representation.
bool agree_on_ball(GroupTable const& G, CosetwiseAffineMap const& a,
                   CosetwiseAffineMap const& b, std::int64_t R) {
  for (auto const& g : wct::ball(G, R)) {
    if (a(g) != b(g)) {
      return false;
    }
  }
  return true;
}

std::vector<std::string> concrete_names(wct::GroupId id) {
  std::vector<std::string> out;
  for (auto const& n : wct::catalog_names(id)) {
    if (n.find('<') == std::string::npos && n.find("(u,v)") == std::string::npos) {
      out.push_back(n);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("inversion and identity maps") {
  for (auto id : wct::all_groups()) {
    auto const& G    = wct::load_group(id);
    auto const  iota = map(G, "iota");
    auto const  e    = map(G, "id");
    INFO(G.name());
    CHECK(e.is_identity());
    CHECK(iota(G.identity()) == G.identity());
    CHECK((iota * iota).is_identity());
    CHECK(iota * e == iota);
    CHECK(e * iota == iota);
    for (auto const& g : wct::ball(G, 2)) {
      CHECK(iota(g) == G.inv(g));
    }
  }
}

TEST_CASE("p3 tau") {
  auto const& p3  = group("p3");
  auto const  tau = map(p3, "tau");
  CHECK(tau(w(p3, "x rho")) == w(p3, "x^-1 y rho"));
  CHECK((tau * tau * tau).is_identity());
  CHECK(wct::map_order(tau) == 3);
  CHECK(tau.pow(-1) == tau * tau);
}

TEST_CASE("partial conjugations act where they should") {
  auto const& p2mm = group("p2mm");
  auto const  tau  = map(p2mm, "tau");
  for (auto const& g : wct::ball(p2mm, 2)) {
    auto const label = p2mm.label(g.f);
    if (label == "1" || label == "rhosigma") {
      CHECK(tau(g) == g);
    }
  }

  auto const& p6  = group("p6");
  auto const  mu  = map(p6, "mu(x^2)");
  auto const  x2  = w(p6, "x^2");
  for (auto const& g : wct::ball(p6, 2)) {
    auto const label = p6.label(g.f);
    if (label == "1" || label == "rho3") {
      CHECK(mu(g) == p6.conj(g, x2));
    } else {
      CHECK(mu(g) == g);
    }
  }
}

TEST_CASE("composition and inversion") {
  for (auto id : wct::all_groups()) {
    auto const& G = wct::load_group(id);
    INFO(G.name());
    auto const names = concrete_names(id);
    for (auto const& n : names) {
      auto const m = wct::generator(G, n);
      INFO(n);
      CHECK(m.is_bijective());
      CHECK((m * m.inverse()).is_identity());
      CHECK((m.inverse() * m).is_identity());
      CHECK(wct::invert(m) == m.inverse());
      for (auto const& k : names) {
        auto const other = wct::generator(G, k);
        auto const both  = m * other;
        CHECK(wct::compose(m, other) == both);
        for (auto const& g : wct::ball(G, 1)) {
          CHECK(both(g) == m(other(g)));
        }
      }
    }
  }
  auto const& p4 = group("p4");
  auto const  mr = map(p4, "mu_rho");
  CHECK(agree_on_ball(p4, mr * map(p4, "inv(mu_rho)"), map(p4, "id"), 3));
  CHECK(map(p4, "mu_rho^-1") == mr.inverse());
}

TEST_CASE("fitting recovers affine maps") {
  auto const& p4mg = group("p4mg");
  for (auto const& n : concrete_names(wct::GroupId::p4mg)) {
    auto const m   = wct::generator(p4mg, n);
    auto const fit = CosetwiseAffineMap::fit(p4mg, [&](Element const& g) { return m(g); });
    CHECK(fit == m);
  }
  auto const& p1 = group("p1");
  CHECK_THROWS(CosetwiseAffineMap::fit(p1, [](Element const& g) {
    Element h = g;
    h.a[0]    = h.a[0] * h.a[0];
    return h;
  }));
}

TEST_CASE("map expressions") {
  auto const& p4 = group("p4");
  CHECK(map(p4, "tau_x*mu_rho") == map(p4, " tau_x  *  mu_rho "));
  CHECK(map(p4, "(tau_x * mu_rho)^2") == map(p4, "tau_x * mu_rho * tau_x * mu_rho"));
  CHECK(map(p4, "tau_x^psi_1") == map(p4, "inv(psi_1) * tau_x * psi_1"));
  CHECK(map(p4, "tau_x^{psi_1 * inner(rho)}")
        == map(p4, "inv(psi_1 * inner(rho)) * tau_x * psi_1 * inner(rho)"));
  CHECK(map(p4, "inner(x rho)") == map(p4, "inner(rho) * inner(x)"));
  CHECK(map(p4, "tau_x") == map(p4, "tau(x)"));
  CHECK_THROWS_AS(map(p4, "nosuchmap"), std::invalid_argument);
  CHECK_THROWS_AS(map(p4, "tau_x *"), std::invalid_argument);
  CHECK_THROWS_AS(map(p4, "inv(tau_x"), std::invalid_argument);
  CHECK_THROWS_AS(map(group("p3"), "tau_x"), std::invalid_argument);
  CHECK_THROWS_AS(map(group("c2mm"), "psi(1,0,1,0)"), std::invalid_argument);
  CHECK_THROWS_AS(map(group("c2mm"), "psi(1,0)"), std::invalid_argument);
}

TEST_CASE("inner maps conjugate") {
  auto const& p4mg = group("p4mg");
  auto const  h    = w(p4mg, "x y^-1 rho gamma");
  auto const  m    = map(p4mg, "inner(x y^-1 rho gamma)");
  for (auto const& g : wct::ball(p4mg, 2)) {
    CHECK(m(g) == p4mg.conj(g, h));
  }
}

TEST_CASE("automorphisms are homomorphisms") {
  for (auto id : wct::all_groups()) {
    auto const& G = wct::load_group(id);
    INFO(G.name());
    for (auto const& n : wct::automorphism_names(id)) {
      INFO(n);
      CHECK_FALSE(wct::hom_failure(G, wct::generator(G, n), 2));
    }
    CHECK_FALSE(wct::antihom_failure(G, map(G, "iota"), 2));
  }
  CHECK(wct::hom_failure(group("p2mm"), map(group("p2mm"), "psi_literal(1,0)"), 2));
}

TEST_CASE("weak Cayley table checks") {
  auto const& p3 = group("p3");
  CHECK(wct::is_wct_on_ball(p3, map(p3, "id"), 3).ok);
  auto const v = wct::is_wct_on_ball(p3, map(p3, "tau"), 3);
  CHECK(v.ok);
  CHECK_FALSE(v.witness);
  CHECK(v.pairs_checked > 0);

  auto const& p4  = group("p4");
  auto const  bad = wct::is_wct_on_ball(p4, map(p4, "conj_rho_on_rho2"), 2);
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.witness);
  REQUIRE(bad.images);
  auto const& C = wct::conjugacy(wct::GroupId::p4);
  CHECK_FALSE(C.is_conjugate(bad.images->first, bad.images->second));
  CHECK_FALSE(wct::brute_is_conjugate(p4, bad.images->first, bad.images->second, 8));
}

TEST_CASE("non-triviality certificates") {
  for (char const* name : {"p3", "p2mm"}) {
    auto const& G    = group(name);
    auto const  cert = wct::nontriviality_certificate(G, map(G, "tau"), 2);
    INFO(name);
    CHECK(cert.found());
    auto const [a, b] = *cert.hom_witness;
    auto const m      = map(G, "tau");
    CHECK(m(G.mul(a, b)) != G.mul(m(a), m(b)));
    auto const [c, d] = *cert.antihom_witness;
    CHECK(m(G.mul(c, d)) != G.mul(m(d), m(c)));
  }
  auto const& p6 = group("p6");
  CHECK_FALSE(wct::nontriviality_certificate(p6, map(p6, "id"), 2).hom_witness);
  CHECK_FALSE(wct::nontriviality_certificate(p6, map(p6, "iota"), 2).antihom_witness);
}

TEST_CASE("catalogued non-trivial maps") {
  for (auto id : wct::all_groups()) {
    auto const& G = wct::load_group(id);
    for (auto const& n : wct::nontrivial_names(id)) {
      auto const m = wct::generator(G, n);
      INFO(G.name() << " " << n);
      CHECK(wct::is_wct_on_ball(G, m, 2).ok);
      CHECK(wct::check_wct_axioms(G, m, 2).total() == 0);
      CHECK(wct::nontriviality_certificate(G, m, 3).found());
    }
  }
}

// The p6 definitions as first catalogued attach each h-set to the other
// family's cosets.  Those maps break the weak Cayley table property.
TEST_CASE("p6 maps under the catalogue pairing are not weak Cayley table maps") {
  auto const& p6 = group("p6");
  auto const  printed = wct::printed_nontrivial_names(wct::GroupId::p6);
  CHECK(printed.size() == 6);
  for (auto const& n : printed) {
    INFO(n);
    CHECK_FALSE(wct::is_wct_on_ball(p6, wct::generator(p6, n), 2).ok);
  }
  auto const t = map(p6, "tau_xy");
  auto const C = wct::conjugacy(wct::GroupId::p6);
  CHECK_FALSE(C.is_conjugate(p6.mul(t(w(p6, "rho")), t(w(p6, "rho2"))), t(w(p6, "rho3"))));
  CHECK(wct::printed_nontrivial_names(wct::GroupId::p4) == wct::nontrivial_names(wct::GroupId::p4));
}

TEST_CASE("axioms hold for inner maps and fail for a non-map") {
  auto const& p4mm = group("p4mm");
  CHECK(wct::check_wct_axioms(p4mm, map(p4mm, "inner(x rho sigma) * iota"), 2).total() == 0);
  auto const& p4  = group("p4");
  auto const  rep = wct::check_wct_axioms(p4, map(p4, "conj_rho_on_rho2"), 2);
  CHECK(rep.checked > 0);
}

TEST_CASE("W(G) relation suites") {
  auto const p3 = wct::verify_wgroup_relations(group("p3"));
  auto holds    = [](wct::WGroupReport const& r, std::string const& rel) {
    for (auto const& x : r.relations) {
      if (x.relation == rel) {
        return x.holds;
      }
    }
    FAIL("relation not in report: " << rel);
    return false;
  };
  CHECK(holds(p3, "tau^3 = id"));
  CHECK(holds(p3, "tau^psi_x = tau * psi_x * psi_y"));
  CHECK(holds(p3, "tau^psi_y = tau * psi_x^-1 * psi_y^2"));
  CHECK(holds(p3, "psi_x^inner(rho) = psi_y^-1"));

  // Relation statuses against a pointwise oracle.
  auto const& G3 = group("p3");
  for (auto const& r : p3.relations) {
    auto const eq = r.relation.find(" = ");
    REQUIRE(eq != std::string::npos);
    auto const lhs = wct::parse_map(G3, r.relation.substr(0, eq));
    auto const rhs = wct::parse_map(G3, r.relation.substr(eq + 3));
    INFO(r.relation);
    CHECK(r.holds == agree_on_ball(G3, lhs, rhs, 3));
  }
  // Conjugation is f^m = m^-1 f m throughout, and under it the printed
  // I_y^-1 form does not hold.
  CHECK_FALSE(holds(p3, "psi_x^inner(rho) = inner(y)^-1"));

  auto const p4 = wct::verify_wgroup_relations(group("p4"));
  CHECK(holds(p4, "tau(x)^inner(rho) = tau(y^-1)"));
  CHECK(holds(p4, "tau(rho2)^psi_1 = tau(rho2)"));
  CHECK(holds(p4, "tau_x * tau_y = tau_y * tau_x"));
  CHECK(holds(p4, "tau_x^tau_rho2 = tau_x^-1"));
  CHECK(holds(p4, "tau_rho2^psi_y = tau_rho2 * tau_x^-1 * tau_y^-1"));
  CHECK_FALSE(holds(p4, "tau_rho2^psi_y = tau_rho2 * tau_x * tau_y^-1"));

  auto const p6 = wct::verify_wgroup_relations(group("p6"));
  CHECK(p6.printed_all_hold());

  auto const p2mm = wct::verify_wgroup_relations(group("p2mm"));
  CHECK(holds(p2mm, "|<inner(rho), inner(sigma), psi>| = 8"));
  CHECK(holds(p2mm, "tau^2 = id"));
  CHECK_FALSE(holds(p2mm, "psi_literal(1,0) is an automorphism"));

  CHECK_THROWS_AS(wct::verify_wgroup_relations(group("p1")), std::invalid_argument);
}

TEST_CASE("normality of the non-trivial generators") {
  for (char const* name : {"p4", "p6"}) {
    auto const rep = wct::normality_check(group(name));
    INFO(name);
    CHECK(rep.all_inside());
    CHECK_FALSE(rep.entries.empty());
  }
  auto const& p4 = group("p4");
  // tau_x^{I_y} is tau_x itself, and tau_rho2^psi_1 is tau_rho2.
  CHECK(map(p4, "tau_x^inner(y)") == map(p4, "tau_x"));
  CHECK(map(p4, "tau_rho2^psi_1") == map(p4, "tau_rho2"));
  CHECK_THROWS_AS(wct::normality_check(group("p3")), std::invalid_argument);
}

TEST_CASE("map orders") {
  auto const& p4 = group("p4");
  CHECK(wct::map_order(map(p4, "mu_rho")) == 4);
  CHECK(wct::map_order(map(p4, "tau_rho2")) == 2);
  CHECK_FALSE(wct::map_order(map(p4, "tau_x")));
  CHECK(wct::map_order(map(p4, "id")) == 1);
}

TEST_SUITE_END();
