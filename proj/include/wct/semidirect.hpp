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

// Semidirect products H = Z^n x|_theta C_p.  Elements are pairs (v, k)
// meaning v r^k, with r^-1 a r = theta(a).  The product is
//
//   (v, k)(w, m) = (v + theta^-k w, k + m mod p).

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wct/lattice.hpp"

namespace wct {

  struct SdElement {
    LatVec       v;
    std::int64_t k = 0;  // in [0, p)

    friend bool operator==(SdElement const&, SdElement const&) = default;
  };

  class SdGroup {
   public:
    // Throws std::invalid_argument unless theta is square, unimodular,
    // different from I, and satisfies theta^p = I for a prime p.
    static SdGroup build(IntMatrix theta, std::int64_t p);

    std::size_t dim() const noexcept {
      return n_;
    }
    std::int64_t p() const noexcept {
      return p_;
    }
    IntMatrix const& theta() const noexcept {
      return powers_[1 % p_];
    }
    // theta^k for any integer k
    IntMatrix const& theta_power(std::int64_t k) const;

    SdElement identity() const;
    SdElement translation(LatVec v) const;
    SdElement rotation(std::int64_t k) const;  // r^k

    SdElement mul(SdElement const& g, SdElement const& h) const;
    SdElement inv(SdElement const& g) const;
    // g^h = h^-1 g h
    SdElement conj(SdElement const& g, SdElement const& h) const;
    // (g, h) = g^-1 h^-1 g h
    SdElement commutator(SdElement const& g, SdElement const& h) const;

    // All (v, k) with max-norm(v) <= R, translations first.
    std::vector<SdElement> ball(std::int64_t R) const;

    // image(theta^-k - I): conjugating v r^k by translations moves v
    // through exactly this lattice.
    Sublattice const& shift_lattice(std::int64_t k) const;

    std::string format(SdElement const& g) const;

   private:
    std::size_t            n_ = 0;
    std::int64_t           p_ = 0;
    std::vector<IntMatrix>  powers_;  // theta^0 .. theta^(p-1)
    std::vector<Sublattice> shift_lattices_;
  };

  // p = 2 only: H' = image(theta - I).
  Sublattice derived_lattice(SdGroup const& G);
  // The lattice spanned by commutators of elements of ball(R).
  Sublattice brute_derived_lattice(SdGroup const& G, std::int64_t R);

  // A translation class is the finite orbit {theta^j a}.  Any other class
  // lies in one coset A r^k and is a finite union of lattice cosets there.
  struct SdClass {
    std::int64_t              k = 0;
    std::vector<LatVec>       orbit;
    std::vector<LatticeCoset> cosets;

    bool is_finite() const noexcept {
      return k == 0;
    }
    bool contains(SdElement const& g) const;
  };

  SdClass class_sd(SdGroup const& G, SdElement const& g);
  bool    sd_is_conjugate(SdGroup const& G, SdElement const& g, SdElement const& h);
  // Some conjugator of max-norm <= R sends g to h.
  bool brute_sd_conjugate(SdGroup const& G, SdElement const& g, SdElement const& h,
                          std::int64_t R);
  // Every conjugate of g by an element of max-norm <= R, with repeats.
  std::vector<SdElement> brute_sd_class(SdGroup const& G, SdElement const& g,
                                        std::int64_t R);

  // A bijection acting on each coset A r^k by v -> M v + t into A r^target.
  class SdMap {
   public:
    struct Piece {
      std::int64_t target = 0;
      IntMatrix    M;
      LatVec       t;
    };

    SdMap(std::string name, std::vector<Piece> pieces);

    std::string const& name() const noexcept {
      return name_;
    }
    std::vector<Piece> const& pieces() const noexcept {
      return pieces_;
    }
    SdElement operator()(SdElement const& g) const;

   private:
    std::string        name_;
    std::vector<Piece> pieces_;
  };

  SdMap identity_map(SdGroup const& G);
  // p odd: a -> a^r = theta(a) on A, identity off A.
  SdMap phi_map(SdGroup const& G);
  // p = 2: a -> a, a r -> a^r r.
  SdMap p2_candidate(SdGroup const& G);

  struct SdVerdict {
    bool                                           ok     = true;
    std::int64_t                                   radius = 0;
    std::optional<std::pair<SdElement, SdElement>> witness;
    std::optional<std::pair<SdElement, SdElement>> images;
    std::size_t                                    pairs_checked = 0;
  };

  SdVerdict verify_sd(SdGroup const& G, SdMap const& m, std::int64_t R);

  struct SdCertificate {
    std::optional<std::pair<SdElement, SdElement>> hom_witness;
    std::optional<std::pair<SdElement, SdElement>> antihom_witness;

    bool found() const noexcept {
      return hom_witness && antihom_witness;
    }
  };

  SdCertificate sd_nontriviality(SdGroup const& G, SdMap const& m, std::int64_t R);

  // Necessary conditions for a weak Cayley table map, checked on ball(R)
  // as for wallpaper maps.
  struct SdAxiomReport {
    std::size_t identity_moved     = 0;
    std::size_t inverse_broken     = 0;
    std::size_t involution_broken  = 0;
    std::size_t class_broken       = 0;
    std::size_t translation_broken = 0;
    std::size_t power_broken       = 0;  // phi(a^m) != phi(a)^m on A
    std::size_t checked            = 0;

    std::size_t total() const noexcept {
      return identity_moved + inverse_broken + involution_broken + class_broken
             + translation_broken + power_broken;
    }
  };

  SdAxiomReport check_sd_axioms(SdGroup const& G, SdMap const& m, std::int64_t R);

  // Parses "[[0,-1],[1,-1]]" or "-1" (the 1x1 matrix).
  IntMatrix parse_theta(std::string const& text);

}  // namespace wct
