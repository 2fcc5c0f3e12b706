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

#include "wct/maps.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "parallel.hpp"

namespace wct {

  ////////////////////////////////////////////////////////////////////////
  // CosetwiseAffineMap
  ////////////////////////////////////////////////////////////////////////

  CosetwiseAffineMap::CosetwiseAffineMap(GroupId group, std::vector<Piece> pieces)
      : group_(group), pieces_(std::move(pieces)) {
    if (pieces_.size() != load_group(group_).order()) {
      throw std::invalid_argument("map needs one piece per coset");
    }
  }

  CosetwiseAffineMap CosetwiseAffineMap::identity(GroupTable const& G) {
    std::vector<Piece> p(G.order());
    for (std::size_t f = 0; f < p.size(); ++f) {
      p[f].target = f;
    }
    return CosetwiseAffineMap(G.id(), std::move(p));
  }

  CosetwiseAffineMap CosetwiseAffineMap::fit(
      GroupTable const& G, std::function<Element(Element const&)> fn) {
    std::vector<Piece> pieces(G.order());
    for (std::size_t f = 0; f < G.order(); ++f) {
      auto const    ff = static_cast<std::uint8_t>(f);
      Element const o  = fn(Element{LatVec{0, 0}, ff});
      Element const ex = fn(Element{LatVec{1, 0}, ff});
      Element const ey = fn(Element{LatVec{0, 1}, ff});
      if (ex.f != o.f || ey.f != o.f) {
        throw std::logic_error("map does not send cosets to cosets");
      }
      LatVec const c1 = ex.a - o.a, c2 = ey.a - o.a;
      pieces[f]       = Piece{o.f, IntMatrix{{c1[0], c2[0]}, {c1[1], c2[1]}}, o.a};
    }
    CosetwiseAffineMap m(G.id(), std::move(pieces));
    for (auto const& g : ball(G, 2)) {
      if (m(g) != fn(g)) {
        throw std::logic_error("map is not affine on the coset of "
                               + G.format(g));
      }
    }
    return m;
  }

  Element CosetwiseAffineMap::operator()(Element const& g) const {
    Piece const& p = pieces_[g.f];
    return Element{p.M.apply(g.a) + p.t, static_cast<std::uint8_t>(p.target)};
  }

  bool CosetwiseAffineMap::is_identity() const {
    for (std::size_t f = 0; f < pieces_.size(); ++f) {
      if (pieces_[f].target != f || !pieces_[f].M.is_identity()
          || !pieces_[f].t.is_zero()) {
        return false;
      }
    }
    return true;
  }

  bool CosetwiseAffineMap::is_bijective() const {
    std::vector<bool> hit(pieces_.size(), false);
    for (auto const& p : pieces_) {
      std::int64_t const d = p.M.determinant();
      if ((d != 1 && d != -1) || hit.at(p.target)) {
        return false;
      }
      hit[p.target] = true;
    }
    return true;
  }

  CosetwiseAffineMap operator*(CosetwiseAffineMap const& m1,
                               CosetwiseAffineMap const& m2) {
    if (m1.group_ != m2.group_) {
      throw std::invalid_argument("composing maps of different groups");
    }
    std::vector<CosetwiseAffineMap::Piece> out(m2.pieces_.size());
    for (std::size_t f = 0; f < out.size(); ++f) {
      auto const& p2 = m2.pieces_[f];
      auto const& p1 = m1.pieces_[p2.target];
      out[f]         = {p1.target, p1.M * p2.M, p1.M.apply(p2.t) + p1.t};
    }
    CosetwiseAffineMap r;
    r.group_  = m1.group_;
    r.pieces_ = std::move(out);
    return r;
  }

  CosetwiseAffineMap CosetwiseAffineMap::inverse() const {
    if (!is_bijective()) {
      throw std::domain_error("map is not a bijection");
    }
    std::vector<Piece> out(pieces_.size());
    for (std::size_t f = 0; f < pieces_.size(); ++f) {
      auto const& p   = pieces_[f];
      IntMatrix   Mi  = p.M.inverse();
      out[p.target]   = {f, Mi, -Mi.apply(p.t)};
    }
    CosetwiseAffineMap r;
    r.group_  = group_;
    r.pieces_ = std::move(out);
    return r;
  }

  CosetwiseAffineMap CosetwiseAffineMap::pow(std::int64_t k) const {
    CosetwiseAffineMap base = k < 0 ? inverse() : *this;
    auto e = k < 0 ? -static_cast<std::uint64_t>(k) : static_cast<std::uint64_t>(k);
    CosetwiseAffineMap r = identity(load_group(group_));
    while (e != 0) {
      if (e & 1) {
        r = r * base;
      }
      e >>= 1;
      if (e != 0) {
        base = base * base;
      }
    }
    return r;
  }

  CosetwiseAffineMap CosetwiseAffineMap::conjugated_by(
      CosetwiseAffineMap const& mu) const {
    return mu.inverse() * *this * mu;
  }

  std::size_t CosetwiseAffineMap::hash() const noexcept {
    std::size_t h = static_cast<std::size_t>(group_);
    for (auto const& p : pieces_) {
      h = h * 1000003 ^ p.target;
      h = h * 1000003 ^ p.M.hash();
      h = h * 1000003 ^ p.t.hash();
    }
    return h;
  }

  CosetwiseAffineMap compose(CosetwiseAffineMap const& m1,
                             CosetwiseAffineMap const& m2) {
    return m1 * m2;
  }

  CosetwiseAffineMap invert(CosetwiseAffineMap const& m) {
    return m.inverse();
  }

  ////////////////////////////////////////////////////////////////////////
  // Catalog
  ////////////////////////////////////////////////////////////////////////

  CosetwiseAffineMap automorphism_from_images(GroupTable const&           G,
                                              std::vector<Element> const& images) {
    if (images.size() != G.generator_names().size()) {
      throw std::invalid_argument("need one image per generator");
    }
    if (images[0].f != 0 || images[1].f != 0) {
      throw std::invalid_argument("translations must map to translations");
    }
    IntMatrix const P{{images[0].a[0], images[1].a[0]},
                      {images[0].a[1], images[1].a[1]}};
    std::vector<CosetwiseAffineMap::Piece> pieces(G.order());
    for (std::size_t f = 0; f < G.order(); ++f) {
      Element img = G.identity();
      for (std::size_t gi : G.transversal_word(f)) {
        img = G.mul(img, images[gi]);
      }
      // phi(a f) = phi(a) phi(f) = (P a + b) f'
      pieces[f] = {img.f, P, img.a};
    }
    return CosetwiseAffineMap(G.id(), std::move(pieces));
  }

  CosetwiseAffineMap partial_conjugation(GroupTable const&        G,
                                         Element const&           h,
                                         std::vector<bool> const& on) {
    return CosetwiseAffineMap::fit(G, [&](Element const& g) {
      return on.at(g.f) ? G.conj(g, h) : g;
    });
  }

  namespace {

    std::vector<bool> cosets_on(GroupTable const&               G,
                                std::vector<std::string> const& labels,
                                bool                            complement = false) {
      std::vector<bool> on(G.order(), complement);
      for (auto const& l : labels) {
        on.at(*G.find_label(l)) = !complement;
      }
      return on;
    }

    std::vector<bool> tau_cosets(GroupTable const& G) {
      switch (G.id()) {
        case GroupId::p2mm:
          return cosets_on(G, {"rho", "sigma"});
        case GroupId::p3:
          return cosets_on(G, {"rho", "rho2"});
        case GroupId::p4:
          return cosets_on(G, {"rho2"});
        case GroupId::p6:
          return cosets_on(G, {"rho", "rho3", "rho5"}, true);
        default:
          throw std::invalid_argument("no tau family in "
                                      + std::string(G.name()));
      }
    }

    std::vector<bool> mu_cosets(GroupTable const& G) {
      switch (G.id()) {
        case GroupId::p4:
          return cosets_on(G, {"1", "rho2"}, true);
        case GroupId::p6:
          return cosets_on(G, {"1", "rho3"});
        default:
          throw std::invalid_argument("no mu family in "
                                      + std::string(G.name()));
      }
    }

    struct AutSpec {
      std::string              name;
      std::vector<std::string> images;
    };

    std::vector<AutSpec> fixed_automorphisms(GroupId id) {
      switch (id) {
        case GroupId::p3:
          return {{"psi_x", {"x", "y", "x rho"}}, {"psi_y", {"x", "y", "y rho"}}};
        case GroupId::p4:
          return {{"psi_x", {"x", "y", "x rho"}},
                  {"psi_y", {"x", "y", "y rho"}},
                  {"psi_1", {"x", "y^-1", "rho^-1"}}};
        case GroupId::p6:
          return {{"psi_x", {"x", "y", "x rho"}},
                  {"psi_y", {"x", "y", "y rho"}},
                  {"psi", {"y", "x", "rho^-1"}}};
        case GroupId::cm:
        case GroupId::pm:
          return {{"psi", {"x^-1", "y^-1", "sigma"}}};
        case GroupId::pg:
          return {{"psi_y", {"x", "y", "y gamma"}},
                  {"psi", {"x^-1", "y^-1", "gamma^-1"}}};
        case GroupId::c2mm:
          return {{"psi", {"x^-1", "y^-1", "rho", "sigma"}}};
        case GroupId::p2mm:
          return {{"psi", {"y", "x", "rho", "rho sigma"}}};
        case GroupId::p2mg:
          return {{"psi_x", {"x", "y", "x rho", "sigma"}},
                  {"psi_y", {"x", "y", "y rho", "y sigma"}},
                  {"psi", {"x^-1", "y^-1", "y^-1 rho", "sigma"}}};
        case GroupId::p2gg:
          return {{"psi_x", {"x", "y", "x rho", "gamma"}},
                  {"psi_y", {"x", "y", "y rho", "y gamma"}},
                  {"psi", {"x^-1", "y^-1", "rho", "x^-1 y gamma"}}};
        case GroupId::p3m1:
          return {{"psi_1", {"x", "y", "y^-1 rho", "sigma"}}};
        case GroupId::p4mg:
          return {{"psi_1", {"x", "y", "x rho", "y^-1 gamma"}},
                  {"psi_2", {"x^-1", "y^-1", "y^-1 rho", "x^-1 gamma"}}};
        case GroupId::p4mm:
          return {{"phi_1", {"x", "y", "y rho", "y sigma"}}};
        default:
          return {};
      }
    }

    // Shorthand names for members of the tau/mu families.
    std::vector<std::pair<std::string, std::string>> family_aliases(GroupId id) {
      switch (id) {
        case GroupId::p4:
          return {{"tau_x", "tau(x)"},     {"tau_y", "tau(y)"},
                  {"tau_rho2", "tau(rho2)"}, {"mu_x", "mu(x)"},
                  {"mu_y", "mu(y)"},       {"mu_rho", "mu(rho)"},
                  {"conj_rho_on_rho2", "tau(rho)"}};
        case GroupId::p6:
          return {{"tau_x2", "tau(x2)"},      {"tau_y2", "tau(y2)"},
                  {"tau_rho3", "tau(rho3)"},  {"mu_xy", "mu(x y)"},
                  {"mu_xym2", "mu(x y^-2)"},  {"mu_rho2", "mu(rho2)"},
                  // catalogue pairing, kept for comparison; not WCT
                  {"tau_xy", "tau(x y)"},     {"tau_xym2", "tau(x y^-2)"},
                  {"tau_rho2", "tau(rho2)"},  {"mu_x2", "mu(x2)"},
                  {"mu_y2", "mu(y2)"},        {"mu_rho3", "mu(rho3)"}};
        default:
          return {};
      }
    }

    std::vector<std::int64_t> int_args(std::string const& args) {
      std::vector<std::int64_t> out;
      std::stringstream         ss(args);
      std::string               item;
      while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        try {
          out.push_back(std::stoll(item, &used));
        } catch (std::exception const&) {
          throw std::invalid_argument("expected an integer, got '" + item + "'");
        }
        while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) {
          ++used;
        }
        if (used != item.size()) {
          throw std::invalid_argument("expected an integer, got '" + item + "'");
        }
      }
      return out;
    }

    std::string strip(std::string const& s) {
      std::string out;
      for (char c : s) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
          out += c;
        }
      }
      return out;
    }

    CosetwiseAffineMap from_image_words(GroupTable const&               G,
                                        std::vector<std::string> const& words) {
      std::vector<Element> imgs;
      for (auto const& w : words) {
        imgs.push_back(parse_word(G, w));
      }
      return automorphism_from_images(G, imgs);
    }

  }  // namespace

  CosetwiseAffineMap generator(GroupTable const& G, std::string const& raw) {
    std::string name = raw;
    std::string args;
    bool        call = false;
    if (auto open = raw.find('('); open != std::string::npos) {
      if (raw.back() != ')') {
        throw std::invalid_argument("malformed map name '" + raw + "'");
      }
      name = strip(raw.substr(0, open));
      args = raw.substr(open + 1, raw.size() - open - 2);
      call = true;
    } else {
      name = strip(raw);
    }

    if (!call) {
      if (name == "id") {
        return CosetwiseAffineMap::identity(G);
      }
      if (name == "iota") {
        return CosetwiseAffineMap::fit(G, [&](Element const& g) { return G.inv(g); });
      }
      if (name == "tau" && (G.id() == GroupId::p2mm || G.id() == GroupId::p3)) {
        Element const h = *G.generator(G.id() == GroupId::p2mm ? "sigma" : "rho");
        return partial_conjugation(G, h, tau_cosets(G));
      }
      for (auto const& [alias, target] : family_aliases(G.id())) {
        if (alias == name) {
          return generator(G, target);
        }
      }
      for (auto const& a : fixed_automorphisms(G.id())) {
        if (a.name == name) {
          return from_image_words(G, a.images);
        }
      }
      throw std::invalid_argument("unknown map '" + raw + "' for "
                                  + std::string(G.name()));
    }

    if (name == "inner") {
      Element const h = parse_word(G, args);
      return CosetwiseAffineMap::fit(G, [&](Element const& g) { return G.conj(g, h); });
    }
    if (name == "tau" && (G.id() == GroupId::p4 || G.id() == GroupId::p6)) {
      return partial_conjugation(G, parse_word(G, args), tau_cosets(G));
    }
    if (name == "mu" && (G.id() == GroupId::p4 || G.id() == GroupId::p6)) {
      return partial_conjugation(G, parse_word(G, args), mu_cosets(G));
    }
    if (G.id() == GroupId::p2mm && (name == "psi" || name == "psi_literal")) {
      auto v = int_args(args);
      if (v.size() != 2) {
        throw std::invalid_argument(name + " takes (u,v)");
      }
      std::string const uv = "x^" + std::to_string(v[0]) + " y^" + std::to_string(v[1]);
      // With x^sigma = x the reflection image must drop the x part for
      // sigma^2 = 1 and (rho, sigma) = 1 to survive; psi_literal keeps it.
      std::string const sig = name == "psi" ? "y^" + std::to_string(v[1]) + " sigma"
                                            : uv + " sigma";
      return from_image_words(G, {"x", "y", uv + " rho", sig});
    }
    if (G.id() == GroupId::c2mm && name == "psi") {
      auto v = int_args(args);
      if (v.size() != 4) {
        throw std::invalid_argument("psi takes (u,v,i,j)");
      }
      // (rho sigma)^2 = 1 forces u + j = i + v and sigma^2 = 1 forces
      // i + j = 0, since (x^i y^j sigma)^2 = (xy)^(i+j).
      if (v[0] + v[3] != v[2] + v[1] || v[2] + v[3] != 0) {
        throw std::invalid_argument("psi(u,v,i,j) needs u + j = i + v and i + j = 0");
      }
      return from_image_words(
          G, {"x", "y",
              "x^" + std::to_string(v[0]) + " y^" + std::to_string(v[1]) + " rho",
              "x^" + std::to_string(v[2]) + " y^" + std::to_string(v[3]) + " sigma"});
    }
    throw std::invalid_argument("unknown map '" + raw + "' for "
                                + std::string(G.name()));
  }

  std::vector<std::string> automorphism_names(GroupId id) {
    std::vector<std::string> out;
    for (auto const& a : fixed_automorphisms(id)) {
      out.push_back(a.name);
    }
    if (id == GroupId::p2mm) {
      out.insert(out.begin(), {"psi(1,0)", "psi(0,1)"});
    }
    if (id == GroupId::c2mm) {
      out.insert(out.begin(), {"psi(1,1,0,0)", "psi(1,-1,1,-1)"});
    }
    return out;
  }

  std::vector<std::string> nontrivial_names(GroupId id) {
    switch (id) {
      case GroupId::p2mm:
      case GroupId::p3:
        return {"tau"};
      case GroupId::p4:
        return {"tau_x", "tau_y", "tau_rho2", "mu_x", "mu_y", "mu_rho"};
      case GroupId::p6:
        return {"tau_x2", "tau_y2", "tau_rho3", "mu_xy", "mu_xym2", "mu_rho2"};
      default:
        return {};
    }
  }

  std::vector<std::string> printed_nontrivial_names(GroupId id) {
    if (id == GroupId::p6) {
      return {"tau_xy", "tau_xym2", "tau_rho2", "mu_x2", "mu_y2", "mu_rho3"};
    }
    return nontrivial_names(id);
  }

  std::vector<std::string> catalog_names(GroupId id) {
    std::vector<std::string> out{"id", "iota", "inner(<word>)"};
    for (auto const& n : automorphism_names(id)) {
      out.push_back(n);
    }
    for (auto const& n : nontrivial_names(id)) {
      out.push_back(n);
    }
    if (id == GroupId::p4 || id == GroupId::p6) {
      out.push_back("tau(<word>)");
      out.push_back("mu(<word>)");
    }
    if (id == GroupId::p4) {
      out.push_back("conj_rho_on_rho2");
    }
    if (id == GroupId::p2mm) {
      out.push_back("psi_literal(u,v)");
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Expressions
  ////////////////////////////////////////////////////////////////////////

  namespace {

    class MapParser {
     public:
      MapParser(GroupTable const& G, std::string const& text) : G_(G), s_(text) {}

      CosetwiseAffineMap parse_all() {
        auto m = expr();
        skip();
        if (pos_ != s_.size()) {
          fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        }
        return m;
      }

     private:
      [[noreturn]] void fail(std::string const& what) const {
        throw std::invalid_argument("bad map expression \"" + s_ + "\": " + what);
      }

      void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
          ++pos_;
        }
      }

      bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
      }

      void expect(char c) {
        if (!peek(c)) {
          fail(std::string("expected '") + c + "'");
        }
        ++pos_;
      }

      CosetwiseAffineMap expr() {
        auto m = factor();
        while (peek('*')) {
          ++pos_;
          m = m * factor();
        }
        return m;
      }

      std::optional<std::int64_t> integer() {
        skip();
        std::size_t q = pos_;
        if (q < s_.size() && (s_[q] == '-' || s_[q] == '+')) {
          ++q;
        }
        std::size_t d = q;
        while (d < s_.size() && std::isdigit(static_cast<unsigned char>(s_[d]))) {
          ++d;
        }
        if (d == q) {
          return std::nullopt;
        }
        auto v = std::stoll(s_.substr(pos_, d - pos_));
        pos_   = d;
        return v;
      }

      CosetwiseAffineMap factor() {
        auto m = primary();
        while (peek('^')) {
          ++pos_;
          bool const braced = peek('{');
          if (braced) {
            ++pos_;
          }
          if (auto k = integer()) {
            m = m.pow(*k);
          } else {
            m = m.conjugated_by(braced ? expr() : primary());
          }
          if (braced) {
            expect('}');
          }
        }
        return m;
      }

      std::string balanced_args() {
        expect('(');
        std::size_t depth = 1, start = pos_;
        while (pos_ < s_.size() && depth > 0) {
          if (s_[pos_] == '(') {
            ++depth;
          } else if (s_[pos_] == ')') {
            --depth;
          }
          ++pos_;
        }
        if (depth != 0) {
          fail("unbalanced parentheses");
        }
        return s_.substr(start, pos_ - start - 1);
      }

      CosetwiseAffineMap primary() {
        skip();
        if (peek('(')) {
          ++pos_;
          auto m = expr();
          expect(')');
          return m;
        }
        std::size_t start = pos_;
        while (pos_ < s_.size()
               && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
          ++pos_;
        }
        if (start == pos_) {
          fail(pos_ < s_.size() ? "unexpected '" + std::string(1, s_[pos_]) + "'"
                                : "unexpected end");
        }
        std::string const name = s_.substr(start, pos_ - start);
        if (name == "inv") {
          expect('(');
          auto m = expr();
          expect(')');
          return m.inverse();
        }
        if (peek('(')) {
          return generator(G_, name + "(" + balanced_args() + ")");
        }
        return generator(G_, name);
      }

      GroupTable const& G_;
      std::string       s_;
      std::size_t       pos_ = 0;
    };

  }  // namespace

  CosetwiseAffineMap parse_map(GroupTable const& G, std::string const& expr) {
    return MapParser(G, expr).parse_all();
  }

  ////////////////////////////////////////////////////////////////////////
  // Verification
  ////////////////////////////////////////////////////////////////////////

  WctVerdict is_wct_on_ball(GroupTable const& G, CosetwiseAffineMap const& m,
                            std::int64_t R) {
    Conjugacy const&           C = conjugacy(G.id());
    std::vector<Element> const B = ball(G, R);
    std::vector<Element>       P(B.size());
    for (std::size_t i = 0; i < B.size(); ++i) {
      P[i] = m(B[i]);
    }
    std::size_t const        n = B.size();
    std::vector<std::size_t> first(n, n);
    std::size_t const        hit = detail::parallel_find_first(n, [&](std::size_t i) {
      for (std::size_t j = 0; j < n; ++j) {
        Element const lhs = m(G.mul(B[i], B[j]));
        Element const rhs = G.mul(P[i], P[j]);
        if (!C.is_conjugate(lhs, rhs)) {
          first[i] = j;
          return true;
        }
      }
      return false;
    });
    WctVerdict v;
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

  namespace {

    template <class Product>
    std::optional<std::pair<Element, Element>> first_mismatch(
        GroupTable const& G, CosetwiseAffineMap const& m, std::int64_t R,
        Product&& product) {
      std::vector<Element> const B = ball(G, R);
      std::vector<Element>       P(B.size());
      for (std::size_t i = 0; i < B.size(); ++i) {
        P[i] = m(B[i]);
      }
      for (std::size_t i = 0; i < B.size(); ++i) {
        for (std::size_t j = 0; j < B.size(); ++j) {
          if (m(G.mul(B[i], B[j])) != product(P[i], P[j])) {
            return std::make_pair(B[i], B[j]);
          }
        }
      }
      return std::nullopt;
    }

  }  // namespace

  std::optional<std::pair<Element, Element>> hom_failure(
      GroupTable const& G, CosetwiseAffineMap const& m, std::int64_t R) {
    return first_mismatch(G, m, R, [&](Element const& a, Element const& b) {
      return G.mul(a, b);
    });
  }

  std::optional<std::pair<Element, Element>> antihom_failure(
      GroupTable const& G, CosetwiseAffineMap const& m, std::int64_t R) {
    return first_mismatch(G, m, R, [&](Element const& a, Element const& b) {
      return G.mul(b, a);
    });
  }

  TrivialityCertificate nontriviality_certificate(GroupTable const&         G,
                                                  CosetwiseAffineMap const& m,
                                                  std::int64_t              R) {
    TrivialityCertificate c;
    c.hom_witness = hom_failure(G, m, R);
    if (c.hom_witness) {
      c.antihom_witness = antihom_failure(G, m, R);
    }
    return c;
  }

  AxiomReport check_wct_axioms(GroupTable const& G, CosetwiseAffineMap const& m,
                               std::int64_t R) {
    Conjugacy const&           C = conjugacy(G.id());
    AxiomReport                rep;
    std::vector<Element> const B = ball(G, R);
    std::vector<Element>       P(B.size());
    for (std::size_t i = 0; i < B.size(); ++i) {
      P[i] = m(B[i]);
    }
    rep.identity_moved = m(G.identity()) == G.identity() ? 0 : 1;
    for (std::size_t i = 0; i < B.size(); ++i) {
      Element const& g = B[i];
      if (m(G.inv(g)) != G.inv(P[i])) {
        ++rep.inverse_broken;
      }
      if (G.mul(g, g) == G.identity() && G.mul(P[i], P[i]) != G.identity()) {
        ++rep.involution_broken;
      }
      if ((g.f == 0) != (P[i].f == 0)) {
        ++rep.translation_broken;
      }
    }
    std::atomic<std::size_t> broken{0};
    detail::parallel_for(B.size(), [&](std::size_t i) {
      std::size_t local = 0;
      for (std::size_t j = 0; j < B.size(); ++j) {
        if (C.is_conjugate(B[i], B[j]) && !C.is_conjugate(P[i], P[j])) {
          ++local;
        }
      }
      broken += local;
    });
    rep.class_broken = broken;
    rep.checked      = B.size() * B.size();
    return rep;
  }

  std::optional<std::int64_t> map_order(CosetwiseAffineMap const& m,
                                        std::int64_t             bound) {
    CosetwiseAffineMap p = m;
    for (std::int64_t k = 1; k <= bound; ++k) {
      if (p.is_identity()) {
        return k;
      }
      p = p * m;
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Relations of the weak Cayley table group
  ////////////////////////////////////////////////////////////////////////

  bool WGroupReport::printed_all_hold() const {
    return std::all_of(relations.begin(), relations.end(), [](auto const& r) {
      return !r.printed || r.holds;
    });
  }

  bool NormalityReport::all_inside() const {
    return !entries.empty()
           && std::all_of(entries.begin(), entries.end(),
                          [](auto const& e) { return e.inside; });
  }

  namespace {

    struct RelSpec {
      RelSpec(std::string l, std::string r, bool p = true, std::string n = {})
          : lhs(std::move(l)), rhs(std::move(r)), printed(p), note(std::move(n)) {}
      std::string lhs, rhs;
      bool        printed;
      std::string note;
    };

    // Size of the subgroup generated by gens, or nullopt past cap.
    std::optional<std::size_t> generated_order(
        GroupTable const& G, std::vector<CosetwiseAffineMap> const& gens,
        std::size_t cap) {
      std::unordered_map<CosetwiseAffineMap, int, MapHash> seen;
      std::vector<CosetwiseAffineMap> frontier{CosetwiseAffineMap::identity(G)};
      seen.emplace(frontier.front(), 0);
      while (!frontier.empty()) {
        std::vector<CosetwiseAffineMap> next;
        for (auto const& m : frontier) {
          for (auto const& g : gens) {
            auto p = m * g;
            if (seen.emplace(p, 0).second) {
              if (seen.size() > cap) {
                return std::nullopt;
              }
              next.push_back(std::move(p));
            }
          }
        }
        frontier = std::move(next);
      }
      return seen.size();
    }

    // (phi_u)^mu = phi_{mu^-1(u)} for each automorphism mu and each u.
    void add_transport_relations(GroupTable const& G, std::vector<RelSpec>& out,
                                 std::string const&              family,
                                 std::vector<std::string> const& us,
                                 std::vector<std::string> const& mus) {
      for (auto const& mu_name : mus) {
        CosetwiseAffineMap const mu_inv = parse_map(G, mu_name).inverse();
        for (auto const& u : us) {
          Element const img = mu_inv(parse_word(G, u));
          out.push_back({family + "(" + u + ")^" + mu_name,
                         family + "(" + G.format(img) + ")"});
        }
      }
    }

    std::vector<RelSpec> relation_specs(GroupTable const& G) {
      std::vector<RelSpec> r;
      switch (G.id()) {
        case GroupId::p3:
          r = {
              {"psi_x^inner(rho)", "inner(y)^-1"},
              {"psi_y^inner(rho)", "psi_x * psi_y^-1"},
              {"tau^psi_x", "tau * psi_x * psi_y"},
              {"tau^psi_y", "tau * psi_x^-1 * psi_y^2"},
              {"inner(x)", "psi_x^-1 * psi_y^-1"},
              {"inner(y)", "psi_x * psi_y^-2"},
              {"psi_x^inner(rho)", "psi_y^-1", false,
               "the corrected form of the first relation"},
              {"psi_x * psi_y", "psi_y * psi_x", false, "Z^2 factor is abelian"},
              {"tau * inner(rho)", "inner(rho) * tau", false, "C3 x C3 factor"},
              {"tau^3", "id", false, ""},
              {"inner(rho)^3", "id", false, ""},
              {"iota * tau", "tau * iota", false, "iota is central"},
              {"iota * psi_x", "psi_x * iota", false, ""},
              {"iota * inner(rho)", "inner(rho) * iota", false, ""},
          };
          break;
        case GroupId::p4: {
          r = {
              {"tau_rho2^psi_x", "tau_rho2 * tau_x^-1 * tau_y"},
              {"tau_rho2^psi_y", "tau_rho2 * tau_x * tau_y^-1"},
              {"mu_x^mu_rho", "mu_y^-1"},
              {"mu_y^mu_rho", "mu_x"},
              {"tau_rho2^psi_y", "tau_rho2 * tau_x^-1 * tau_y^-1", false,
               "the form of the second relation that holds"},
          };
          std::vector<std::string> const mus{"inner(rho)", "psi_1", "psi_x",
                                             "psi_y",      "inner(x)", "inner(y)"};
          add_transport_relations(G, r, "tau", {"x", "y", "rho2"}, mus);
          add_transport_relations(G, r, "mu", {"x", "y", "rho"}, mus);
          std::vector<RelSpec> derived{
              {"tau_x * tau_y", "tau_y * tau_x", false, "Z^2 in Z^2 x| C2"},
              {"tau_x^tau_rho2", "tau_x^-1", false, "tau_rho2 inverts tau_x"},
              {"tau_y^tau_rho2", "tau_y^-1", false, ""},
              {"tau_rho2^2", "id", false, ""},
              {"mu_x * mu_y", "mu_y * mu_x", false, "Z^2 in Z^2 x| C4"},
              {"mu_rho^4", "id", false, ""},
              {"iota * tau_x", "tau_x * iota", false, "iota is central"},
              {"iota * mu_rho", "mu_rho * iota", false, ""},
          };
          for (std::string t : {"tau_x", "tau_y", "tau_rho2"}) {
            for (std::string m : {"mu_x", "mu_y", "mu_rho"}) {
              derived.push_back({t + " * " + m, m + " * " + t, false,
                                 "the two normal factors commute"});
            }
          }
          r.insert(r.end(), derived.begin(), derived.end());
          break;
        }
        case GroupId::p6: {
          std::vector<std::string> const mus{"inner(rho)", "psi", "psi_x",
                                             "psi_y", "inner(x)", "inner(y)"};
          add_transport_relations(G, r, "tau", {"x2", "y2", "rho3"}, mus);
          add_transport_relations(G, r, "mu", {"x y", "x y^-2", "rho2"}, mus);
          std::vector<RelSpec> derived{
              {"tau_x2 * tau_y2", "tau_y2 * tau_x2", false, "Z^2 in Z^2 x| C2"},
              {"tau_rho3^2", "id", false, ""},
              {"mu_xy * mu_xym2", "mu_xym2 * mu_xy", false, "Z^2 in Z^2 x| C3"},
              {"mu_rho2^3", "id", false, ""},
              {"iota * tau_x2", "tau_x2 * iota", false, "iota is central"},
              {"iota * mu_rho2", "mu_rho2 * iota", false, ""},
          };
          for (std::string t : {"tau_x2", "tau_y2", "tau_rho3"}) {
            for (std::string m : {"mu_xy", "mu_xym2", "mu_rho2"}) {
              derived.push_back({t + " * " + m, m + " * " + t, false,
                                 "the two normal factors commute"});
            }
          }
          r.insert(r.end(), derived.begin(), derived.end());
          break;
        }
        case GroupId::p2mm:
          r = {
              {"tau^2", "id"},
              {"psi^2", "id"},
              {"inner(rho) * inner(sigma)", "inner(sigma) * inner(rho)"},
              {"psi(1,0) * psi(0,1)", "psi(0,1) * psi(1,0)"},
              {"iota * tau", "tau * iota"},
              {"iota * psi", "psi * iota"},
              {"iota * psi(1,0)", "psi(1,0) * iota"},
              {"psi(0,2)", "inner(y^-1)", false,
               "psi(0,2) is inner, so <psi(1,0), psi(0,1)> meets Inn(G)"},
          };
          break;
        default:
          throw std::invalid_argument("no relation suite for "
                                      + std::string(G.name()));
      }
      return r;
    }

  }  // namespace

  WGroupReport verify_wgroup_relations(GroupTable const& G) {
    WGroupReport rep{G.id(), {}, {}, {}};
    for (auto const& spec : relation_specs(G)) {
      bool const holds = parse_map(G, spec.lhs) == parse_map(G, spec.rhs);
      rep.relations.push_back(
          {spec.lhs + " = " + spec.rhs, holds, spec.printed, spec.note});
    }
    std::vector<std::string> order_of;
    switch (G.id()) {
      case GroupId::p3:
        order_of = {"tau", "inner(rho)", "psi_x", "psi_y", "iota"};
        break;
      case GroupId::p4:
        order_of = {"tau_x", "tau_y", "tau_rho2", "mu_x", "mu_y", "mu_rho",
                    "inner(rho)", "psi_1", "iota"};
        break;
      case GroupId::p6:
        order_of = {"tau_x2", "tau_y2", "tau_rho3", "mu_xy", "mu_xym2",
                    "mu_rho2", "inner(rho)", "psi", "iota"};
        break;
      default:
        order_of = {"tau", "psi", "psi(1,0)", "psi(0,1)", "inner(rho)",
                    "inner(sigma)", "iota"};
        break;
    }
    for (auto const& name : order_of) {
      auto o = map_order(parse_map(G, name));
      rep.orders.emplace_back(name, o ? std::to_string(*o) : "infinite");
    }
    if (G.id() == GroupId::p2mm) {
      auto n = generated_order(G,
                               {parse_map(G, "inner(rho)"),
                                parse_map(G, "inner(sigma)"), parse_map(G, "psi")},
                               64);
      rep.relations.push_back({"|<inner(rho), inner(sigma), psi>| = 8",
                               n && *n == 8, true,
                               "computed order " + (n ? std::to_string(*n) : "> 64")});
      bool const literal_is_hom
          = !hom_failure(G, parse_map(G, "psi_literal(1,0)"), 2).has_value();
      rep.relations.push_back({"psi_literal(1,0) is an automorphism",
                               literal_is_hom, false,
                               "(x sigma)^2 = x^2, so sigma -> x^u y^v sigma "
                               "only works for u = 0; psi(u,v) uses y^v sigma"});
      rep.notes.push_back(
          "the generator written tau_s sigma_rs is not defined for this group and "
          "is not checked");
      rep.notes.push_back(
          "<psi(1,0), psi(0,1)> is free abelian of rank 2 as a group of maps; "
          "only generator orders and relations are reported");
    }
    if (G.id() == GroupId::p6) {
      rep.notes.push_back(
          "tau(u) for u in {x2, y2, rho3} fixes A rho, A rho3, A rho5; mu(u) for "
          "u in {x y, x y^-2, rho2} moves only A and A rho3; mu(u) is the family "
          "also written sigma_u");
    }
    if (G.id() == GroupId::p4) {
      rep.notes.push_back("mu(u) is the family also written sigma_u");
    }
    return rep;
  }

  NormalityReport normality_check(GroupTable const& G, int max_len) {
    std::vector<std::string> nn, ww;
    switch (G.id()) {
      case GroupId::p4:
        nn = nontrivial_names(G.id());
        ww = {"psi_x", "psi_y", "inner(rho)", "psi_1", "inner(x)", "inner(y)", "iota"};
        break;
      case GroupId::p6:
        nn = nontrivial_names(G.id());
        ww = {"psi_x", "psi_y", "inner(rho)", "psi", "inner(x)", "inner(y)", "iota"};
        break;
      default:
        throw std::invalid_argument("normality check is defined for p4 and p6");
    }
    // Breadth-first enumeration of words in the normal generators.
    std::vector<std::pair<CosetwiseAffineMap, std::string>> letters;
    for (auto const& n : nn) {
      auto m = parse_map(G, n);
      letters.emplace_back(m.inverse(), n + "^-1");
      letters.emplace_back(std::move(m), n);
    }
    std::unordered_map<CosetwiseAffineMap, std::string, MapHash> words;
    std::vector<CosetwiseAffineMap> frontier{CosetwiseAffineMap::identity(G)};
    words.emplace(frontier.front(), "id");
    for (int len = 1; len <= max_len; ++len) {
      std::vector<CosetwiseAffineMap> next;
      for (auto const& m : frontier) {
        std::string const& w = words.at(m);
        for (auto const& [l, lname] : letters) {
          auto p = m * l;
          if (!words.count(p)) {
            words.emplace(p, w == "id" ? lname : w + " * " + lname);
            next.push_back(std::move(p));
          }
        }
      }
      frontier = std::move(next);
    }
    NormalityReport rep{G.id(), {}, words.size()};
    for (auto const& n : nn) {
      auto const nm = parse_map(G, n);
      for (auto const& w : ww) {
        auto const conj = nm.conjugated_by(parse_map(G, w));
        auto       it   = words.find(conj);
        rep.entries.push_back({n, w, it != words.end(),
                               it != words.end() ? it->second : ""});
      }
    }
    return rep;
  }

}  // namespace wct
