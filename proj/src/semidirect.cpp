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

#include "wct/semidirect.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "parallel.hpp"

namespace wct {

  namespace {

    bool is_prime(std::int64_t p) {
      if (p < 2) {
        return false;
      }
      for (std::int64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) {
          return false;
        }
      }
      return true;
    }

    std::int64_t mod(std::int64_t k, std::int64_t p) {
      std::int64_t r = k % p;
      return r < 0 ? r + p : r;
    }

  }  // namespace

  SdGroup SdGroup::build(IntMatrix theta, std::int64_t p) {
    std::size_t const n = theta.rows();
    if (n == 0 || theta.cols() != n || n > kMaxDim) {
      throw std::invalid_argument("theta must be a square matrix of size 1.."
                                  + std::to_string(kMaxDim));
    }
    if (!is_prime(p)) {
      throw std::invalid_argument("p must be prime");
    }
    std::int64_t const det = theta.determinant();
    if (det != 1 && det != -1) {
      throw std::invalid_argument("theta must have determinant +-1");
    }
    if (theta.is_identity()) {
      throw std::invalid_argument("theta = I gives an abelian group");
    }
    SdGroup G;
    G.n_ = n;
    G.p_ = p;
    G.powers_.push_back(IntMatrix::identity(n));
    for (std::int64_t k = 1; k <= p; ++k) {
      G.powers_.push_back(G.powers_.back() * theta);
    }
    if (!G.powers_.back().is_identity()) {
      throw std::invalid_argument("theta^p != I");
    }
    G.powers_.pop_back();
    for (std::int64_t k = 0; k < p; ++k) {
      G.shift_lattices_.push_back(
          image(G.theta_power(-k) - IntMatrix::identity(n)));
    }
    // The product must realise r^-1 a r = theta(a).
    SdElement const r = G.rotation(1);
    for (std::size_t i = 0; i < n; ++i) {
      LatVec const e = LatVec::unit(n, i);
      if (G.conj(G.translation(e), r) != G.translation(theta.apply(e))) {
        throw std::logic_error("semidirect product convention is inconsistent");
      }
    }
    return G;
  }

  IntMatrix const& SdGroup::theta_power(std::int64_t k) const {
    return powers_[mod(k, p_)];
  }

  Sublattice const& SdGroup::shift_lattice(std::int64_t k) const {
    return shift_lattices_[mod(k, p_)];
  }

  SdElement SdGroup::identity() const {
    return {LatVec(n_), 0};
  }

  SdElement SdGroup::translation(LatVec v) const {
    if (v.dim() != n_) {
      throw std::invalid_argument("translation has the wrong dimension");
    }
    return {std::move(v), 0};
  }

  SdElement SdGroup::rotation(std::int64_t k) const {
    return {LatVec(n_), mod(k, p_)};
  }

  SdElement SdGroup::mul(SdElement const& g, SdElement const& h) const {
    return {g.v + theta_power(-g.k).apply(h.v), mod(g.k + h.k, p_)};
  }

  SdElement SdGroup::inv(SdElement const& g) const {
    return {-theta_power(g.k).apply(g.v), mod(-g.k, p_)};
  }

  SdElement SdGroup::conj(SdElement const& g, SdElement const& h) const {
    return mul(mul(inv(h), g), h);
  }

  SdElement SdGroup::commutator(SdElement const& g, SdElement const& h) const {
    return mul(mul(inv(g), inv(h)), mul(g, h));
  }

  std::vector<SdElement> SdGroup::ball(std::int64_t R) const {
    std::vector<SdElement> out;
    auto const             vs = box(n_, R);
    out.reserve(vs.size() * static_cast<std::size_t>(p_));
    for (std::int64_t k = 0; k < p_; ++k) {
      for (auto const& v : vs) {
        out.push_back({v, k});
      }
    }
    return out;
  }

  std::string SdGroup::format(SdElement const& g) const {
    std::string s = g.v.to_string();
    if (g.k == 1) {
      s += " r";
    } else if (g.k != 0) {
      s += " r^" + std::to_string(g.k);
    }
    return s;
  }

  Sublattice derived_lattice(SdGroup const& G) {
    if (G.p() != 2) {
      throw std::invalid_argument("derived_lattice has a closed form only for p = 2");
    }
    return image(G.theta() - IntMatrix::identity(G.dim()));
  }

  Sublattice brute_derived_lattice(SdGroup const& G, std::int64_t R) {
    auto const          B = G.ball(R);
    std::vector<LatVec> gens;
    for (auto const& g : B) {
      for (auto const& h : B) {
        SdElement const c = G.commutator(g, h);
        if (c.k != 0) {
          throw std::logic_error("commutator outside A");
        }
        if (!c.v.is_zero()) {
          gens.push_back(c.v);
        }
      }
    }
    return Sublattice::span(gens, G.dim());
  }

  bool SdClass::contains(SdElement const& g) const {
    if (g.k != k) {
      return false;
    }
    if (k == 0) {
      return std::find(orbit.begin(), orbit.end(), g.v) != orbit.end();
    }
    return std::any_of(cosets.begin(), cosets.end(),
                       [&](LatticeCoset const& c) { return c.contains(g.v); });
  }

  SdClass class_sd(SdGroup const& G, SdElement const& g) {
    SdClass c;
    c.k = g.k;
    for (std::int64_t j = 0; j < G.p(); ++j) {
      LatVec const w = G.theta_power(j).apply(g.v);
      if (g.k == 0) {
        if (std::find(c.orbit.begin(), c.orbit.end(), w) == c.orbit.end()) {
          c.orbit.push_back(w);
        }
      } else {
        // b^-1 (a r^k) b = (a + (theta^-k - I) b) r^k and r^-j a r^j = theta^j a
        LatticeCoset piece(w, G.shift_lattice(g.k));
        if (std::find(c.cosets.begin(), c.cosets.end(), piece) == c.cosets.end()) {
          c.cosets.push_back(std::move(piece));
        }
      }
    }
    return c;
  }

  bool sd_is_conjugate(SdGroup const& G, SdElement const& g, SdElement const& h) {
    if (g.k != h.k) {
      return false;
    }
    if (g == h) {
      return true;
    }
    // Same test as class_sd(G, g).contains(h) without building the class.
    for (std::int64_t j = 0; j < G.p(); ++j) {
      LatVec const w = G.theta_power(j).apply(g.v);
      if (g.k == 0 ? w == h.v : G.shift_lattice(g.k).contains(h.v - w)) {
        return true;
      }
    }
    return false;
  }

  std::vector<SdElement> brute_sd_class(SdGroup const& G, SdElement const& g,
                                        std::int64_t R) {
    std::vector<SdElement> out;
    for (auto const& c : G.ball(R)) {
      out.push_back(G.conj(g, c));
    }
    return out;
  }

  bool brute_sd_conjugate(SdGroup const& G, SdElement const& g, SdElement const& h,
                          std::int64_t R) {
    for (auto const& c : G.ball(R)) {
      if (G.conj(g, c) == h) {
        return true;
      }
    }
    return false;
  }

  SdMap::SdMap(std::string name, std::vector<Piece> pieces)
      : name_(std::move(name)), pieces_(std::move(pieces)) {}

  SdElement SdMap::operator()(SdElement const& g) const {
    Piece const& p = pieces_[static_cast<std::size_t>(g.k)];
    return {p.M.apply(g.v) + p.t, p.target};
  }

  namespace {

    std::vector<SdMap::Piece> identity_pieces(SdGroup const& G) {
      std::vector<SdMap::Piece> pieces;
      for (std::int64_t k = 0; k < G.p(); ++k) {
        pieces.push_back({k, IntMatrix::identity(G.dim()), LatVec(G.dim())});
      }
      return pieces;
    }

  }  // namespace

  SdMap identity_map(SdGroup const& G) {
    return SdMap("identity", identity_pieces(G));
  }

  SdMap phi_map(SdGroup const& G) {
    if (G.p() == 2) {
      throw std::invalid_argument("phi needs p odd");
    }
    auto pieces   = identity_pieces(G);
    pieces[0].M   = G.theta();
    return SdMap("phi", std::move(pieces));
  }

  SdMap p2_candidate(SdGroup const& G) {
    if (G.p() != 2) {
      throw std::invalid_argument("the candidate map is defined for p = 2");
    }
    auto pieces = identity_pieces(G);
    pieces[1].M = G.theta();
    return SdMap("p2-candidate", std::move(pieces));
  }

  SdVerdict verify_sd(SdGroup const& G, SdMap const& m, std::int64_t R) {
    auto const             B = G.ball(R);
    std::vector<SdElement> P(B.size());
    for (std::size_t i = 0; i < B.size(); ++i) {
      P[i] = m(B[i]);
    }
    std::size_t const        n = B.size();
    std::vector<std::size_t> first(n, n);
    std::size_t const        hit = detail::parallel_find_first(n, [&](std::size_t i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!sd_is_conjugate(G, m(G.mul(B[i], B[j])), G.mul(P[i], P[j]))) {
          first[i] = j;
          return true;
        }
      }
      return false;
    });
    SdVerdict v;
    v.radius = R;
    if (hit == n) {
      v.pairs_checked = n * n;
      return v;
    }
    std::size_t const j = first[hit];
    v.ok                = false;
    v.witness           = {B[hit], B[j]};
    v.images            = {m(G.mul(B[hit], B[j])), G.mul(P[hit], P[j])};
    v.pairs_checked     = hit * n + j + 1;
    return v;
  }

  SdCertificate sd_nontriviality(SdGroup const& G, SdMap const& m, std::int64_t R) {
    auto const             B = G.ball(R);
    std::vector<SdElement> P(B.size());
    for (std::size_t i = 0; i < B.size(); ++i) {
      P[i] = m(B[i]);
    }
    SdCertificate c;
    for (std::size_t i = 0; i < B.size() && !c.found(); ++i) {
      for (std::size_t j = 0; j < B.size() && !c.found(); ++j) {
        SdElement const img = m(G.mul(B[i], B[j]));
        if (!c.hom_witness && img != G.mul(P[i], P[j])) {
          c.hom_witness = {B[i], B[j]};
        }
        if (!c.antihom_witness && img != G.mul(P[j], P[i])) {
          c.antihom_witness = {B[i], B[j]};
        }
      }
    }
    return c;
  }

  SdAxiomReport check_sd_axioms(SdGroup const& G, SdMap const& m, std::int64_t R) {
    SdAxiomReport rep;
    auto const    B = G.ball(R);
    rep.identity_moved = m(G.identity()) == G.identity() ? 0 : 1;
    std::vector<SdElement> P(B.size());
    for (std::size_t i = 0; i < B.size(); ++i) {
      SdElement const& g = B[i];
      P[i]               = m(g);
      if (m(G.inv(g)) != G.inv(P[i])) {
        ++rep.inverse_broken;
      }
      if (G.mul(g, g) == G.identity() && G.mul(P[i], P[i]) != G.identity()) {
        ++rep.involution_broken;
      }
      if ((g.k == 0) != (P[i].k == 0)) {
        ++rep.translation_broken;
      }
      if (g.k == 0) {
        for (std::int64_t e = -3; e <= 3; ++e) {
          if (m(G.translation(e * g.v)) != G.translation(e * P[i].v)) {
            ++rep.power_broken;
          }
        }
      }
    }
    std::atomic<std::size_t> broken{0};
    detail::parallel_for(B.size(), [&](std::size_t i) {
      std::size_t local = 0;
      for (std::size_t j = 0; j < B.size(); ++j) {
        if (sd_is_conjugate(G, B[i], B[j]) && !sd_is_conjugate(G, P[i], P[j])) {
          ++local;
        }
      }
      broken += local;
    });
    rep.class_broken = broken;
    rep.checked      = B.size() * B.size();
    return rep;
  }

  IntMatrix parse_theta(std::string const& text) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (nlohmann::json::exception const& e) {
      throw std::invalid_argument("theta is not valid JSON: " + std::string(e.what()));
    }
    if (j.is_number_integer()) {
      return IntMatrix{{j.get<std::int64_t>()}};
    }
    if (!j.is_array() || j.empty()) {
      throw std::invalid_argument("theta must be an integer or a list of rows");
    }
    std::size_t const n = j.size();
    IntMatrix         m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!j[i].is_array() || j[i].size() != n) {
        throw std::invalid_argument("theta must be square");
      }
      for (std::size_t k = 0; k < n; ++k) {
        if (!j[i][k].is_number_integer()) {
          throw std::invalid_argument("theta entries must be integers");
        }
        m(i, k) = j[i][k].get<std::int64_t>();
      }
    }
    return m;
  }

}  // namespace wct
