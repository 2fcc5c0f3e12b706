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

// Conjugacy classes of wallpaper groups in closed form.
//
// For g = a f with f != 1, conjugating by translations sweeps out the coset
// a + K_f where K_f = {(b, f) : b in A} = image(act(f) - 1); conjugating by
// the transversal then carries that coset around the other point parts.  So
// every class is a finite union of lattice cosets, one lattice per point
// part.  Translation classes are the finite orbits act(F) a.

#include <optional>
#include <unordered_set>
#include <vector>

#include "wct/wallpaper.hpp"

namespace wct {

  struct CosetPiece {
    std::size_t  f = 0;
    LatticeCoset coset;

    friend bool operator==(CosetPiece const&, CosetPiece const&) = default;
  };

  class ConjClass {
   public:
    enum class Kind { FiniteSet, CosetUnion };

    static ConjClass finite(std::vector<Element> elements);
    static ConjClass cosets(std::vector<CosetPiece> pieces);

    Kind kind() const noexcept {
      return kind_;
    }
    std::vector<Element> const& elements() const noexcept {
      return elements_;
    }
    std::vector<CosetPiece> const& pieces() const noexcept {
      return pieces_;
    }
    bool contains(Element const& g) const;

    friend bool operator==(ConjClass const&, ConjClass const&) = default;

   private:
    Kind                    kind_ = Kind::FiniteSet;
    std::vector<Element>    elements_;
    std::vector<CosetPiece> pieces_;
  };

  class Conjugacy {
   public:
    explicit Conjugacy(GroupTable const& G);

    GroupTable const& group() const noexcept {
      return G_;
    }

    // K_f, generated by (x, f) and (y, f).
    Sublattice const& kf(std::size_t f) const {
      return kf_.at(f);
    }

    std::vector<LatVec> orbit_translation(LatVec const& a) const;

    // Fixed and negated lines of a reflection or glide reflection; throw
    // std::invalid_argument for rotations.
    Sublattice line_L(std::size_t r) const;
    Sublattice line_Lperp(std::size_t r) const;
    std::vector<Sublattice> reflection_locus() const;

    // f^{f'} = conj_shift(f, f') * F[conj_point(f, f')].
    LatVec const& conj_shift(std::size_t f, std::size_t fp) const {
      return cshift_[f * G_.order() + fp];
    }
    std::size_t conj_point(std::size_t f, std::size_t fp) const {
      return cpoint_[f * G_.order() + fp];
    }

    ConjClass class_descriptor(Element const& g) const;
    bool      is_conjugate(Element const& g, Element const& h) const;

    // {a : (a f)^2 = e}, or nullopt when the coset A f holds no involution.
    std::optional<LatticeCoset> involution_locus(std::size_t f) const;

   private:
    GroupTable const&       G_;
    std::vector<Sublattice> kf_;
    std::vector<LatVec>     cshift_;
    std::vector<std::size_t> cpoint_;
  };

  // Engines are built once per group and shared.
  Conjugacy const& conjugacy(GroupId id);

  // Independent oracle: all conjugates of g by elements of ball(R).
  class BruteConjugacy {
   public:
    BruteConjugacy(GroupTable const& G, std::int64_t radius);

    std::unordered_set<Element, ElementHash> conjugates(Element const& g) const;
    // True is definitive; false only means no conjugator within the radius.
    bool is_conjugate(Element const& g, Element const& h) const;

   private:
    GroupTable const&    G_;
    std::vector<Element> conjugators_;
    std::vector<Element> inverses_;
  };

  bool brute_is_conjugate(GroupTable const& G, Element const& g,
                          Element const& h, std::int64_t radius);

  struct SquareEntry {
    LatVec  a;
    Element square;  // (a f)^2
  };

  std::vector<SquareEntry> squares_in_coset(GroupTable const& G, std::size_t f,
                                            std::int64_t radius);

}  // namespace wct
