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

#include "wct/conjugacy.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace wct {

  ConjClass ConjClass::finite(std::vector<Element> elements) {
    ConjClass c;
    c.kind_     = Kind::FiniteSet;
    c.elements_ = std::move(elements);
    return c;
  }

  ConjClass ConjClass::cosets(std::vector<CosetPiece> pieces) {
    ConjClass c;
    c.kind_   = Kind::CosetUnion;
    c.pieces_ = std::move(pieces);
    return c;
  }

  bool ConjClass::contains(Element const& g) const {
    if (kind_ == Kind::FiniteSet) {
      return std::find(elements_.begin(), elements_.end(), g) != elements_.end();
    }
    for (auto const& p : pieces_) {
      if (p.f == g.f && p.coset.contains(g.a)) {
        return true;
      }
    }
    return false;
  }

  Conjugacy::Conjugacy(GroupTable const& G) : G_(G) {
    std::size_t const n = G.order();
    IntMatrix const   I = IntMatrix::identity(2);
    for (std::size_t f = 0; f < n; ++f) {
      kf_.push_back(image(G.act(f) - I));
    }
    cshift_.resize(n * n);
    cpoint_.resize(n * n);
    for (std::size_t f = 0; f < n; ++f) {
      for (std::size_t fp = 0; fp < n; ++fp) {
        Element const e = G.conj(Element{LatVec{0, 0}, static_cast<std::uint8_t>(f)},
                                 Element{LatVec{0, 0}, static_cast<std::uint8_t>(fp)});
        cshift_[f * n + fp] = e.a;
        cpoint_[f * n + fp] = e.f;
      }
    }
  }

  std::vector<LatVec> Conjugacy::orbit_translation(LatVec const& a) const {
    std::vector<LatVec> out;
    for (std::size_t f = 0; f < G_.order(); ++f) {
      LatVec b = G_.act(f).apply(a);
      if (std::find(out.begin(), out.end(), b) == out.end()) {
        out.push_back(b);
      }
    }
    return out;
  }

  Sublattice Conjugacy::line_L(std::size_t r) const {
    if (!G_.is_reflection(r)) {
      throw std::invalid_argument(G_.label(r) + " is not a reflection or glide");
    }
    return kernel(G_.act(r) - IntMatrix::identity(2));
  }

  Sublattice Conjugacy::line_Lperp(std::size_t r) const {
    if (!G_.is_reflection(r)) {
      throw std::invalid_argument(G_.label(r) + " is not a reflection or glide");
    }
    return kernel(G_.act(r) + IntMatrix::identity(2));
  }

  std::vector<Sublattice> Conjugacy::reflection_locus() const {
    std::vector<Sublattice> out;
    for (std::size_t f = 0; f < G_.order(); ++f) {
      if (!G_.is_reflection(f)) {
        continue;
      }
      Sublattice L = line_L(f);
      if (std::find(out.begin(), out.end(), L) == out.end()) {
        out.push_back(std::move(L));
      }
    }
    return out;
  }

  ConjClass Conjugacy::class_descriptor(Element const& g) const {
    if (g.f == 0) {
      std::vector<Element> elems;
      for (auto const& b : orbit_translation(g.a)) {
        elems.push_back(G_.translation(b));
      }
      return ConjClass::finite(std::move(elems));
    }
    std::vector<CosetPiece> pieces;
    for (std::size_t fp = 0; fp < G_.order(); ++fp) {
      std::size_t const h = conj_point(g.f, fp);
      LatVec const      off = G_.act(fp).apply(g.a) + conj_shift(g.f, fp);
      CosetPiece        piece{h, LatticeCoset(off, kf_[h])};
      if (std::find(pieces.begin(), pieces.end(), piece) == pieces.end()) {
        pieces.push_back(std::move(piece));
      }
    }
    std::sort(pieces.begin(), pieces.end(), [](auto const& p, auto const& q) {
      return p.f != q.f ? p.f < q.f : p.coset.offset() < q.coset.offset();
    });
    return ConjClass::cosets(std::move(pieces));
  }

  bool Conjugacy::is_conjugate(Element const& g, Element const& h) const {
    if ((g.f == 0) != (h.f == 0)) {
      return false;
    }
    if (g.f == 0) {
      for (std::size_t f = 0; f < G_.order(); ++f) {
        if (G_.act(f).apply(g.a) == h.a) {
          return true;
        }
      }
      return false;
    }
    Sublattice const& K = kf_[h.f];
    for (std::size_t fp = 0; fp < G_.order(); ++fp) {
      if (conj_point(g.f, fp) != h.f) {
        continue;
      }
      LatVec const off = G_.act(fp).apply(g.a) + conj_shift(g.f, fp);
      if (K.contains(h.a - off)) {
        return true;
      }
    }
    return false;
  }

  std::optional<LatticeCoset> Conjugacy::involution_locus(std::size_t f) const {
    GroupTable::Product const& sq = G_.fprod(f, f);
    if (sq.h != 0) {
      return std::nullopt;
    }
    // (a f)^2 = (a + L_f a + c(f, f)) f^2
    IntMatrix const M = IntMatrix::identity(2) + G_.linear(f);
    return solve(M, -sq.cocycle);
  }

  Conjugacy const& conjugacy(GroupId id) {
    static std::array<std::unique_ptr<Conjugacy>, kGroupCount> engines = [] {
      std::array<std::unique_ptr<Conjugacy>, kGroupCount> e;
      for (std::size_t i = 0; i < kGroupCount; ++i) {
        e[i] = std::make_unique<Conjugacy>(load_group(all_groups()[i]));
      }
      return e;
    }();
    return *engines[static_cast<std::size_t>(id)];
  }

  BruteConjugacy::BruteConjugacy(GroupTable const& G, std::int64_t radius)
      : G_(G), conjugators_(ball(G, radius)) {
    inverses_.reserve(conjugators_.size());
    for (auto const& c : conjugators_) {
      inverses_.push_back(G.inv(c));
    }
  }

  std::unordered_set<Element, ElementHash> BruteConjugacy::conjugates(
      Element const& g) const {
    std::unordered_set<Element, ElementHash> out;
    out.reserve(conjugators_.size());
    for (std::size_t i = 0; i < conjugators_.size(); ++i) {
      out.insert(G_.mul(G_.mul(inverses_[i], g), conjugators_[i]));
    }
    return out;
  }

  bool BruteConjugacy::is_conjugate(Element const& g, Element const& h) const {
    for (std::size_t i = 0; i < conjugators_.size(); ++i) {
      if (G_.mul(G_.mul(inverses_[i], g), conjugators_[i]) == h) {
        return true;
      }
    }
    return false;
  }

  bool brute_is_conjugate(GroupTable const& G, Element const& g,
                          Element const& h, std::int64_t radius) {
    for (auto const& c : ball(G, radius)) {
      if (G.conj(g, c) == h) {
        return true;
      }
    }
    return false;
  }

  std::vector<SquareEntry> squares_in_coset(GroupTable const& G, std::size_t f,
                                            std::int64_t radius) {
    std::vector<SquareEntry> out;
    for (auto const& a : box(2, radius)) {
      Element const g{a, static_cast<std::uint8_t>(f)};
      out.push_back({a, G.mul(g, g)});
    }
    return out;
  }

}  // namespace wct
