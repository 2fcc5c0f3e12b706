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

#pragma once

// Weak Cayley table maps of wallpaper groups.
//
// Every map we care about (automorphisms, inversion, inner maps and the
// partial conjugations tau/mu) sends each coset A f into a single coset
// A f' by an integer-affine rule, and such maps are closed under composition
// and inversion.  Holding them in that form gives exact equality with no
// reference to any finite ball.

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wct/conjugacy.hpp"
#include "wct/wallpaper.hpp"

namespace wct {

  class CosetwiseAffineMap {
   public:
    // a F[f] -> (M a + t) F[target]
    struct Piece {
      std::size_t target = 0;
      IntMatrix   M      = IntMatrix::identity(2);
      LatVec      t{0, 0};

      friend bool operator==(Piece const&, Piece const&) = default;
    };

    CosetwiseAffineMap() = default;
    CosetwiseAffineMap(GroupId group, std::vector<Piece> pieces);

    static CosetwiseAffineMap identity(GroupTable const& G);
    // Reads off the affine data of fn from three points per coset and then
    // confirms it on a window; throws std::logic_error if fn is not affine
    // per coset.
    static CosetwiseAffineMap fit(GroupTable const&                     G,
                                  std::function<Element(Element const&)> fn);

    GroupId group() const noexcept {
      return group_;
    }
    std::vector<Piece> const& pieces() const noexcept {
      return pieces_;
    }
    Element operator()(Element const& g) const;

    bool is_identity() const;
    bool is_bijective() const;

    // (m1 * m2)(g) = m1(m2(g))
    friend CosetwiseAffineMap operator*(CosetwiseAffineMap const& m1,
                                        CosetwiseAffineMap const& m2);
    CosetwiseAffineMap inverse() const;
    CosetwiseAffineMap pow(std::int64_t k) const;
    // this^mu = mu^-1 * this * mu
    CosetwiseAffineMap conjugated_by(CosetwiseAffineMap const& mu) const;

    friend bool operator==(CosetwiseAffineMap const&,
                           CosetwiseAffineMap const&) = default;
    std::size_t hash() const noexcept;

   private:
    GroupId            group_ = GroupId::p1;
    std::vector<Piece> pieces_;
  };

  struct MapHash {
    std::size_t operator()(CosetwiseAffineMap const& m) const noexcept {
      return m.hash();
    }
  };

  CosetwiseAffineMap compose(CosetwiseAffineMap const& m1,
                             CosetwiseAffineMap const& m2);
  CosetwiseAffineMap invert(CosetwiseAffineMap const& m);

  // Named maps.  Plain names ("iota", "tau_x", "psi_1", ...) plus the
  // parametrised families inner(<word>), tau(<word>), mu(<word>),
  // psi(u,v) and psi(u,v,i,j).  Throws std::invalid_argument for names the
  // group does not have.
  CosetwiseAffineMap generator(GroupTable const& G, std::string const& name);

  // Map expressions: names and calls composed with '*', grouped with
  // parentheses, inverted with inv(...), raised with ^k.  A map after '^'
  // (or any expression in ^{...}) conjugates: f^m = m^-1 * f * m.
  CosetwiseAffineMap parse_map(GroupTable const& G, std::string const& expr);

  // Catalogued names, for listings and sweeps.
  std::vector<std::string> automorphism_names(GroupId id);
  std::vector<std::string> nontrivial_names(GroupId id);
  // The non-trivial maps under their catalogue definitions.  Equal to
  // nontrivial_names except for p6, where the catalogue pairs the h-sets
  // {xy, xy^-2, rho2} and {x2, y2, rho3} with the wrong coset sets and the
  // maps it describes are not WCT maps.
  std::vector<std::string> printed_nontrivial_names(GroupId id);
  std::vector<std::string> catalog_names(GroupId id);

  // Automorphism determined by images of the presentation generators, in
  // the order x, y, then the point generators.
  CosetwiseAffineMap automorphism_from_images(GroupTable const&           G,
                                              std::vector<Element> const& images);

  // Conjugation by h on the cosets A f with on[f] set, identity elsewhere.
  CosetwiseAffineMap partial_conjugation(GroupTable const&        G,
                                         Element const&           h,
                                         std::vector<bool> const& on);

  ////////////////////////////////////////////////////////////////////////
  // Verification
  ////////////////////////////////////////////////////////////////////////

  struct WctVerdict {
    bool                                     ok     = true;
    std::int64_t                             radius = 0;
    std::optional<std::pair<Element, Element>> witness;
    // phi(g1 g2) and phi(g1) phi(g2) for the witness
    std::optional<std::pair<Element, Element>> images;
    std::size_t                              pairs_checked = 0;
  };

  // phi(g1 g2) ~ phi(g1) phi(g2) for all g1, g2 in ball(R).  The witness is
  // the first violation in ball order.
  WctVerdict is_wct_on_ball(GroupTable const& G, CosetwiseAffineMap const& m,
                            std::int64_t R);

  struct TrivialityCertificate {
    std::optional<std::pair<Element, Element>> hom_witness;
    std::optional<std::pair<Element, Element>> antihom_witness;

    bool found() const noexcept {
      return hom_witness && antihom_witness;
    }
  };

  TrivialityCertificate nontriviality_certificate(GroupTable const&         G,
                                                  CosetwiseAffineMap const& m,
                                                  std::int64_t              R);

  // Exact homomorphism / antihomomorphism checks on ball(R); return the
  // first failing pair.
  std::optional<std::pair<Element, Element>> hom_failure(
      GroupTable const& G, CosetwiseAffineMap const& m, std::int64_t R);
  std::optional<std::pair<Element, Element>> antihom_failure(
      GroupTable const& G, CosetwiseAffineMap const& m, std::int64_t R);

  // Consequences every weak Cayley table map must satisfy, checked on a
  // ball.  Each counter is the number of exceptions found.
  struct AxiomReport {
    std::size_t identity_moved     = 0;  // phi(e) != e
    std::size_t inverse_broken     = 0;  // phi(g^-1) != phi(g)^-1
    std::size_t involution_broken  = 0;  // g^2 = e but phi(g)^2 != e
    std::size_t class_broken       = 0;  // g ~ h but phi(g) !~ phi(h)
    std::size_t translation_broken = 0;  // g in A xor phi(g) in A
    std::size_t checked            = 0;

    std::size_t total() const noexcept {
      return identity_moved + inverse_broken + involution_broken + class_broken
             + translation_broken;
    }
  };

  AxiomReport check_wct_axioms(GroupTable const& G, CosetwiseAffineMap const& m,
                               std::int64_t R);

  // Multiplicative order up to a bound, or nullopt.
  std::optional<std::int64_t> map_order(CosetwiseAffineMap const& m,
                                        std::int64_t             bound = 24);

  struct RelationResult {
    std::string relation;
    bool        holds = false;
    // printed relations count towards acceptance; derived ones are the
    // corrected or supplementary statements checked alongside them
    bool        printed = true;
    std::string note;
  };

  struct WGroupReport {
    GroupId                                         group;
    std::vector<RelationResult>                     relations;
    std::vector<std::pair<std::string, std::string>> orders;  // name, order
    std::vector<std::string>                        notes;

    bool printed_all_hold() const;
  };

  // Supported for p3, p4, p6 and p2mm; throws std::invalid_argument
  // otherwise.
  WGroupReport verify_wgroup_relations(GroupTable const& G);

  struct NormalityEntry {
    std::string generator;
    std::string conjugator;
    bool        inside = false;
    std::string word;  // a word in the normal generators, when found
  };

  struct NormalityReport {
    GroupId                     group;
    std::vector<NormalityEntry> entries;
    std::size_t                 words_enumerated = 0;

    bool all_inside() const;
  };

  // p4 and p6: every conjugate of a non-trivial generator by a W0
  // generator lies in the subgroup the non-trivial generators span
  // (searched up to word length max_len).
  NormalityReport normality_check(GroupTable const& G, int max_len = 4);

}  // namespace wct
