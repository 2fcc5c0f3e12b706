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

#include "wct/wallpaper.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace wct {

  namespace {

    constexpr std::array<GroupId, kGroupCount> kAllGroups{
        GroupId::p1,   GroupId::p2,   GroupId::p3,   GroupId::p4,
        GroupId::p6,   GroupId::cm,   GroupId::pm,   GroupId::pg,
        GroupId::c2mm, GroupId::p2mm, GroupId::p2mg, GroupId::p2gg,
        GroupId::p3m1, GroupId::p31m, GroupId::p4mg, GroupId::p4mm,
        GroupId::p6m,
    };

    constexpr std::array<std::string_view, kGroupCount> kNames{
        "p1",   "p2",   "p3",   "p4",   "p6",   "cm",   "pm",   "pg",   "c2mm",
        "p2mm", "p2mg", "p2gg", "p3m1", "p31m", "p4mg", "p4mm", "p6m",
    };

    // A presentation generator realised as an affine map of the plane in
    // lattice coordinates.  `act` lists where x and y go under a -> a^g
    // (its columns); `t2` is twice the translation part of the map.
    struct GenSpec {
      std::string name;
      IntMatrix   act;
      LatVec      t2;
    };

    IntMatrix cols(std::int64_t a, std::int64_t b, std::int64_t c,
                   std::int64_t d) {
      // columns (a,b) and (c,d)
      return IntMatrix{{a, c}, {b, d}};
    }

    GenSpec gen(std::string name, IntMatrix act, LatVec t2 = {0, 0}) {
      return GenSpec{std::move(name), std::move(act), std::move(t2)};
    }

    IntMatrix const kRot2  = cols(-1, 0, 0, -1);
    IntMatrix const kRot3  = cols(-1, 1, -1, 0);
    IntMatrix const kRot4  = cols(0, 1, -1, 0);
    IntMatrix const kRot6  = cols(0, 1, -1, 1);
    IntMatrix const kSwap  = cols(0, 1, 1, 0);
    IntMatrix const kFlipY = cols(1, 0, 0, -1);
    IntMatrix const kHex   = cols(1, 0, 1, -1);  // x -> x, y -> x y^-1

    struct Spec {
      std::vector<GenSpec>                  gens;
      // F as words in generator indices, with their labels.
      std::vector<std::vector<std::size_t>> fwords;
      std::vector<std::string>              relations;
      LatVec                                beta1{0, 0}, beta2{0, 0};
      std::vector<std::string>              notes;
    };

    // rho^k for k < n, optionally followed by rho^k s for a second generator.
    void cyclic_words(Spec& s, std::size_t n, bool with_second) {
      for (int pass = 0; pass < (with_second ? 2 : 1); ++pass) {
        for (std::size_t k = 0; k < n; ++k) {
          std::vector<std::size_t> w(k, 0);
          if (pass == 1) {
            w.push_back(1);
          }
          s.fwords.push_back(std::move(w));
        }
      }
    }

    std::vector<std::string> with_lattice(std::vector<std::string> rest) {
      rest.insert(rest.begin(), "(x,y)");
      return rest;
    }

    Spec spec_for(GroupId id) {
      Spec s;
      switch (id) {
        case GroupId::p1:
          s.fwords    = {{}};
          s.relations = {"(x,y)"};
          break;
        case GroupId::p2:
          s.gens = {gen("rho", kRot2)};
          cyclic_words(s, 2, false);
          s.relations = with_lattice({"x^rho = x^-1", "y^rho = y^-1", "rho^2"});
          break;
        case GroupId::p3:
          s.gens = {gen("rho", kRot3)};
          cyclic_words(s, 3, false);
          s.relations = with_lattice({"x^rho = x^-1 y", "y^rho = x^-1", "rho^3"});
          break;
        case GroupId::p4:
          s.gens = {gen("rho", kRot4)};
          cyclic_words(s, 4, false);
          s.relations = with_lattice({"x^rho = y", "y^rho = x^-1", "rho^4"});
          break;
        case GroupId::p6:
          s.gens = {gen("rho", kRot6)};
          cyclic_words(s, 6, false);
          s.relations = with_lattice({"x^rho = y", "y^rho = x^-1 y", "rho^6"});
          break;
        case GroupId::cm:
          s.gens = {gen("sigma", kSwap)};
          cyclic_words(s, 2, false);
          s.relations = with_lattice({"x^sigma = y", "y^sigma = x", "sigma^2"});
          break;
        case GroupId::pm:
          s.gens = {gen("sigma", kFlipY)};
          cyclic_words(s, 2, false);
          s.relations = with_lattice({"x^sigma = x", "y^sigma = y^-1", "sigma^2"});
          break;
        case GroupId::pg:
          s.gens = {gen("gamma", kFlipY, {1, 0})};
          cyclic_words(s, 2, false);
          s.relations
              = with_lattice({"x^gamma = x", "y^gamma = y^-1", "gamma^2 = x"});
          break;
        case GroupId::c2mm:
          s.gens = {gen("rho", kRot2), gen("sigma", kSwap)};
          cyclic_words(s, 2, true);
          s.relations = with_lattice({"rho^2", "sigma^2", "x^rho = x^-1",
                                      "y^rho = y^-1", "x^sigma = y",
                                      "y^sigma = x", "(rho sigma)^2"});
          break;
        case GroupId::p2mm:
          s.gens = {gen("rho", kRot2), gen("sigma", kFlipY)};
          cyclic_words(s, 2, true);
          s.relations = with_lattice({"rho^2", "sigma^2", "(rho,sigma)",
                                      "x^rho = x^-1", "y^rho = y^-1",
                                      "x^sigma = x", "y^sigma = y^-1"});
          break;
        case GroupId::p2mg:
          s.gens = {gen("rho", kRot2), gen("sigma", kFlipY, {0, -1})};
          cyclic_words(s, 2, true);
          s.relations = with_lattice({"rho^2", "sigma^2", "x^rho = x^-1",
                                      "y^rho = y^-1", "x^sigma = x",
                                      "y^sigma = y^-1", "(rho sigma)^2 = y"});
          s.beta2 = {0, 1};
          break;
        case GroupId::p2gg:
          s.gens = {gen("rho", kRot2), gen("gamma", kFlipY, {1, -1})};
          cyclic_words(s, 2, true);
          s.relations = with_lattice({"rho^2", "gamma^2 = x", "x^rho = x^-1",
                                      "y^rho = y^-1", "x^gamma = x",
                                      "y^gamma = y^-1", "(rho gamma)^2 = y"});
          s.beta1 = {1, 0};
          s.beta2 = {0, 1};
          break;
        case GroupId::p3m1:
          s.gens = {gen("rho", kRot3), gen("sigma", kSwap)};
          cyclic_words(s, 3, true);
          s.relations = with_lattice({"rho^3", "sigma^2", "(rho sigma)^2",
                                      "x^rho = x^-1 y", "y^rho = x^-1",
                                      "x^sigma = y", "y^sigma = x"});
          break;
        case GroupId::p31m:
          s.gens = {gen("rho", kRot3), gen("sigma", kHex)};
          cyclic_words(s, 3, true);
          s.relations = with_lattice({"rho^3", "sigma^2", "(rho sigma)^2",
                                      "x^rho = x^-1 y", "y^rho = x^-1",
                                      "x^sigma = x", "y^sigma = x y^-1"});
          s.notes.push_back(
              "the published presentation writes the lattice relation as "
              "\"(xy)\"; it is read as the commutator (x,y), since xy = 1 "
              "would collapse the lattice");
          break;
        case GroupId::p4mg:
          s.gens = {gen("rho", kRot4), gen("gamma", kFlipY, {1, -1})};
          cyclic_words(s, 4, true);
          s.relations = with_lattice({"rho^4", "gamma^2 = x", "x^rho = y",
                                      "y^rho = x^-1", "x^gamma = x",
                                      "y^gamma = y^-1", "(rho gamma)^2"});
          s.beta1 = {1, 0};
          s.beta2 = {0, 1};
          s.notes.push_back("rho^-1 is labelled rho3");
          break;
        case GroupId::p4mm:
          s.gens = {gen("rho", kRot4), gen("sigma", kFlipY)};
          cyclic_words(s, 4, true);
          s.relations = with_lattice({"rho^4", "sigma^2", "x^rho = y",
                                      "y^rho = x^-1", "x^sigma = x",
                                      "y^sigma = y^-1", "(rho sigma)^2"});
          break;
        case GroupId::p6m:
          s.gens = {gen("rho", kRot6), gen("sigma", kHex)};
          cyclic_words(s, 6, true);
          s.relations = with_lattice({"rho^6", "sigma^2", "x^rho = y",
                                      "y^rho = x^-1 y", "x^sigma = x",
                                      "y^sigma = x y^-1", "(rho sigma)^2"});
          break;
      }
      return s;
    }

    std::string word_label(Spec const& s, std::vector<std::size_t> const& w) {
      if (w.empty()) {
        return "1";
      }
      std::string out;
      std::size_t i = 0;
      while (i < w.size()) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) {
          ++j;
        }
        out += s.gens[w[i]].name;
        if (j - i > 1) {
          out += std::to_string(j - i);
        }
        i = j;
      }
      return out;
    }

    LatVec halve(LatVec const& v) {
      LatVec h(v.dim());
      for (std::size_t i = 0; i < v.dim(); ++i) {
        if (v[i] % 2 != 0) {
          throw std::logic_error("non-integral cocycle in group table");
        }
        h[i] = v[i] / 2;
      }
      return h;
    }

  }  // namespace

  std::span<GroupId const> all_groups() {
    return kAllGroups;
  }

  std::string_view group_name(GroupId id) {
    return kNames.at(static_cast<std::size_t>(id));
  }

  std::optional<GroupId> parse_group(std::string_view name) {
    for (std::size_t i = 0; i < kGroupCount; ++i) {
      if (kNames[i] == name) {
        return kAllGroups[i];
      }
    }
    return std::nullopt;
  }

  std::size_t Element::hash() const noexcept {
    return a.hash() * 31 + f;
  }

  std::size_t PresentationReport::violations() const {
    return static_cast<std::size_t>(std::count_if(
        relations.begin(), relations.end(),
        [](RelationCheck const& r) { return !r.holds; }));
  }

  GroupTable build_table(GroupId id) {
    Spec       s = spec_for(id);
    GroupTable T;
    T.id_    = id;
    T.beta1_ = s.beta1;
    T.beta2_ = s.beta2;
    T.notes_ = s.notes;

    std::vector<IntMatrix> glin;
    for (auto const& g : s.gens) {
      glin.push_back(g.act.inverse());
    }
    // Compose each transversal word into one affine map.
    for (auto const& w : s.fwords) {
      IntMatrix L  = IntMatrix::identity(2);
      LatVec    t2{0, 0};
      for (std::size_t gi : w) {
        // (L, t) o (Lg, tg) = (L Lg, L tg + t)
        t2 = L.apply(s.gens[gi].t2) + t2;
        L  = L * glin[gi];
      }
      T.labels_.push_back(word_label(s, w));
      T.lin_.push_back(L);
      T.act_.push_back(L.inverse());
      T.t2_.push_back(t2);
      T.det_.push_back(static_cast<int>(L.determinant()));
    }

    std::size_t const n = T.labels_.size();
    auto find_linear = [&](IntMatrix const& L) {
      for (std::size_t h = 0; h < n; ++h) {
        if (T.lin_[h] == L) {
          return h;
        }
      }
      throw std::logic_error("transversal is not closed under products");
    };
    T.prod_.resize(n * n);
    T.finv_.resize(n);
    for (std::size_t f = 0; f < n; ++f) {
      for (std::size_t g = 0; g < n; ++g) {
        std::size_t const h  = find_linear(T.lin_[f] * T.lin_[g]);
        LatVec const      c2 = T.lin_[f].apply(T.t2_[g]) + T.t2_[f] - T.t2_[h];
        T.prod_[f * n + g]   = {halve(c2), h};
        if (h == 0) {
          T.finv_[f] = g;
        }
      }
    }

    T.gen_names_ = {"x", "y"};
    T.gen_index_ = {0, 0};
    for (std::size_t gi = 0; gi < s.gens.size(); ++gi) {
      T.gen_names_.push_back(s.gens[gi].name);
      T.gen_index_.push_back(find_linear(glin[gi]));
    }
    for (auto const& w : s.fwords) {
      std::vector<std::size_t> shifted;
      for (std::size_t gi : w) {
        shifted.push_back(gi + 2);
      }
      T.fwords_.push_back(std::move(shifted));
    }
    T.relations_ = s.relations;
    return T;
  }

  GroupTable const& load_group(GroupId id) {
    static std::array<GroupTable, kGroupCount> tables = [] {
      std::array<GroupTable, kGroupCount> t;
      for (std::size_t i = 0; i < kGroupCount; ++i) {
        t[i] = build_table(kAllGroups[i]);
      }
      return t;
    }();
    return tables[static_cast<std::size_t>(id)];
  }

  std::string const& GroupTable::label(std::size_t f) const {
    return labels_.at(f);
  }

  std::optional<std::size_t> GroupTable::find_label(std::string_view l) const {
    for (std::size_t f = 0; f < labels_.size(); ++f) {
      if (labels_[f] == l) {
        return f;
      }
    }
    return std::nullopt;
  }

  Element GroupTable::mul(Element const& g, Element const& h) const {
    Product const& p = fprod(g.f, h.f);
    LatVec         a = lin_[g.f].apply(h.a);
    a += g.a;
    a += p.cocycle;
    return Element{a, static_cast<std::uint8_t>(p.h)};
  }

  Element GroupTable::inv(Element const& g) const {
    std::size_t const fi = finv_[g.f];
    // (a f)(x f') = e  <=>  a + L_f x + c(f, f') = 0
    LatVec const s = g.a + fprod(g.f, fi).cocycle;
    return Element{-act_[g.f].apply(s), static_cast<std::uint8_t>(fi)};
  }

  Element GroupTable::conj(Element const& g, Element const& h) const {
    return mul(mul(inv(h), g), h);
  }

  Element GroupTable::commutator(Element const& g, Element const& h) const {
    return mul(mul(inv(g), inv(h)), mul(g, h));
  }

  Element GroupTable::pow(Element const& g, std::int64_t k) const {
    Element base = k < 0 ? inv(g) : g;
    auto    e    = k < 0 ? -static_cast<std::uint64_t>(k)
                         : static_cast<std::uint64_t>(k);
    Element r    = identity();
    while (e != 0) {
      if (e & 1) {
        r = mul(r, base);
      }
      e >>= 1;
      if (e != 0) {
        base = mul(base, base);
      }
    }
    return r;
  }

  std::optional<Element> GroupTable::generator(std::string_view name) const {
    for (std::size_t i = 0; i < gen_names_.size(); ++i) {
      if (gen_names_[i] == name) {
        if (i == 0) {
          return translation({1, 0});
        }
        if (i == 1) {
          return translation({0, 1});
        }
        return Element{LatVec{0, 0}, static_cast<std::uint8_t>(gen_index_[i])};
      }
    }
    return std::nullopt;
  }

  std::string GroupTable::format(Element const& g) const {
    std::ostringstream os;
    auto               term = [&](char c, std::int64_t e) {
      if (e == 0) {
        return;
      }
      os << c;
      if (e != 1) {
        os << '^' << e;
      }
    };
    term('x', g.a[0]);
    term('y', g.a[1]);
    if (g.f != 0) {
      os << (g.a.is_zero() ? "" : " ") << labels_[g.f];
    }
    std::string s = os.str();
    return s.empty() ? "e" : s;
  }

  ////////////////////////////////////////////////////////////////////////
  // Words
  ////////////////////////////////////////////////////////////////////////

  namespace {

    class WordParser {
     public:
      WordParser(GroupTable const& G, std::string_view text)
          : G_(G), s_(text) {}

      Element parse_all() {
        Element g = word();
        skip();
        if (pos_ != s_.size()) {
          fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        }
        return g;
      }

     private:
      [[noreturn]] void fail(std::string const& what) const {
        throw std::invalid_argument("bad word \"" + std::string(s_)
                                    + "\": " + what);
      }

      void skip() {
        while (pos_ < s_.size()
               && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
          ++pos_;
        }
      }

      bool at_atom_start() {
        skip();
        if (pos_ >= s_.size()) {
          return false;
        }
        char c = s_[pos_];
        return c == '(' || c == '1' || std::isalpha(static_cast<unsigned char>(c));
      }

      Element word() {
        Element g = G_.identity();
        while (at_atom_start()) {
          g = G_.mul(g, term());
        }
        return g;
      }

      std::optional<std::int64_t> integer() {
        skip();
        std::size_t p = pos_;
        if (p < s_.size() && (s_[p] == '-' || s_[p] == '+')) {
          ++p;
        }
        std::size_t q = p;
        while (q < s_.size() && std::isdigit(static_cast<unsigned char>(s_[q]))) {
          ++q;
        }
        if (q == p) {
          return std::nullopt;
        }
        std::int64_t v = std::stoll(std::string(s_.substr(pos_, q - pos_)));
        pos_           = q;
        return v;
      }

      Element term() {
        Element g = atom();
        while (true) {
          skip();
          if (pos_ >= s_.size() || s_[pos_] != '^') {
            return g;
          }
          ++pos_;
          skip();
          bool braced = pos_ < s_.size() && s_[pos_] == '{';
          if (braced) {
            ++pos_;
          }
          if (auto k = integer()) {
            g = G_.pow(g, *k);
          } else {
            Element h = braced ? word() : atom();
            g         = G_.conj(g, h);
          }
          if (braced) {
            skip();
            if (pos_ >= s_.size() || s_[pos_] != '}') {
              fail("missing '}'");
            }
            ++pos_;
          }
        }
      }

      Element atom() {
        skip();
        if (pos_ >= s_.size()) {
          fail("unexpected end");
        }
        if (s_[pos_] == '(') {
          ++pos_;
          Element u = word();
          skip();
          if (pos_ < s_.size() && s_[pos_] == ',') {
            ++pos_;
            Element v = word();
            skip();
            if (pos_ >= s_.size() || s_[pos_] != ')') {
              fail("missing ')'");
            }
            ++pos_;
            return G_.commutator(u, v);
          }
          if (pos_ >= s_.size() || s_[pos_] != ')') {
            fail("missing ')'");
          }
          ++pos_;
          return u;
        }
        if (s_[pos_] == '1') {
          ++pos_;
          return G_.identity();
        }
        // Longest generator name that matches here.
        static constexpr std::array<std::pair<std::string_view, std::string_view>, 8>
            kAliases{{{"sigma", "sigma"},
                      {"gamma", "gamma"},
                      {"rho", "rho"},
                      {"x", "x"},
                      {"y", "y"},
                      {"e", ""},
                      {"r", "rho"},
                      {"s", "sigma"}}};
        for (auto const& [spelling, name] : kAliases) {
          if (s_.substr(pos_, spelling.size()) != spelling) {
            continue;
          }
          pos_ += spelling.size();
          Element g = G_.identity();
          if (!name.empty()) {
            auto gg = G_.generator(name);
            if (!gg) {
              fail("generator '" + std::string(name) + "' not in "
                   + std::string(G_.name()));
            }
            g = *gg;
          }
          // Digits glued to a generator name are an exponent: rho2.
          std::size_t q = pos_;
          while (q < s_.size() && std::isdigit(static_cast<unsigned char>(s_[q]))) {
            ++q;
          }
          if (q > pos_) {
            g    = G_.pow(g, std::stoll(std::string(s_.substr(pos_, q - pos_))));
            pos_ = q;
          }
          return g;
        }
        fail("unknown symbol at '" + std::string(s_.substr(pos_)) + "'");
      }

      GroupTable const& G_;
      std::string_view  s_;
      std::size_t       pos_ = 0;
    };

  }  // namespace

  Element parse_word(GroupTable const& G, std::string_view word) {
    return WordParser(G, word).parse_all();
  }

  std::vector<Element> ball(GroupTable const& G, std::int64_t R) {
    std::vector<Element> out;
    auto const           pts = box(2, R);
    out.reserve(pts.size() * G.order());
    for (auto const& a : pts) {
      for (std::size_t f = 0; f < G.order(); ++f) {
        out.push_back(Element{a, static_cast<std::uint8_t>(f)});
      }
    }
    return out;
  }

  PresentationReport check_presentation(GroupTable const& G) {
    PresentationReport rep{G.id(), {}, G.notes()};
    for (auto const& rel : G.relations()) {
      auto const  eq  = rel.find('=');
      std::string lhs = rel.substr(0, eq);
      std::string rhs = eq == std::string::npos ? "1" : rel.substr(eq + 1);
      Element     res = G.mul(parse_word(G, lhs), G.inv(parse_word(G, rhs)));
      rep.relations.push_back({rel, res == G.identity(), res});
    }
    return rep;
  }

}  // namespace wct
