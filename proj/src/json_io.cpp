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

#include "wct/json_io.hpp"

#include <stdexcept>

namespace wct::io {

  namespace {

    std::size_t label_index(GroupTable const& G, json const& j) {
      auto const f = G.find_label(j.get<std::string>());
      if (!f) {
        throw std::invalid_argument("unknown point part '" + j.get<std::string>()
                                    + "' for " + std::string(G.name()));
      }
      return *f;
    }

    json pair_json(GroupTable const& G, std::pair<Element, Element> const& p) {
      return json::array({to_json(G, p.first), to_json(G, p.second)});
    }

    json sd_pair_json(std::pair<SdElement, SdElement> const& p) {
      return json::array({to_json(p.first), to_json(p.second)});
    }

  }  // namespace

  json to_json(LatVec const& v) {
    json j = json::array();
    for (auto c : v.coords()) {
      j.push_back(c);
    }
    return j;
  }

  LatVec latvec_from_json(json const& j) {
    if (!j.is_array() || j.size() > kMaxDim) {
      throw std::invalid_argument("a vector is a list of at most "
                                  + std::to_string(kMaxDim) + " integers");
    }
    std::vector<std::int64_t> c;
    for (auto const& x : j) {
      c.push_back(x.get<std::int64_t>());
    }
    return LatVec(std::span<std::int64_t const>(c));
  }

  json to_json(Sublattice const& L) {
    json j = json::array();
    for (auto const& b : L.basis()) {
      j.push_back(to_json(b));
    }
    return j;
  }

  Sublattice sublattice_from_json(json const& j, std::size_t dim) {
    std::vector<LatVec> gens;
    for (auto const& row : j) {
      gens.push_back(latvec_from_json(row));
      if (gens.back().dim() != dim) {
        throw std::invalid_argument("lattice row has the wrong dimension");
      }
    }
    return Sublattice::span(gens, dim);
  }

  json to_json(LatticeCoset const& c) {
    return {{"offset", to_json(c.offset())}, {"lattice", to_json(c.lattice())}};
  }

  LatticeCoset coset_from_json(json const& j, std::size_t dim) {
    return LatticeCoset(latvec_from_json(j.at("offset")),
                        sublattice_from_json(j.at("lattice"), dim));
  }

  json to_json(GroupTable const& G, Element const& g) {
    return {{"a", to_json(g.a)}, {"f", G.label(g.f)}};
  }

  Element element_from_json(GroupTable const& G, json const& j) {
    LatVec a = latvec_from_json(j.at("a"));
    if (a.dim() != 2) {
      throw std::invalid_argument("wallpaper elements have 2 coordinates");
    }
    return Element{a, static_cast<std::uint8_t>(label_index(G, j.at("f")))};
  }

  json to_json(GroupTable const& G, ConjClass const& c) {
    if (c.kind() == ConjClass::Kind::FiniteSet) {
      json els = json::array();
      for (auto const& e : c.elements()) {
        els.push_back(to_json(G, e));
      }
      return {{"kind", "finiteSet"}, {"elements", els}};
    }
    json pieces = json::array();
    for (auto const& p : c.pieces()) {
      pieces.push_back({{"f", G.label(p.f)},
                        {"offset", to_json(p.coset.offset())},
                        {"lattice", to_json(p.coset.lattice())}});
    }
    return {{"kind", "cosetUnion"}, {"pieces", pieces}};
  }

  ConjClass class_from_json(GroupTable const& G, json const& j) {
    std::string const kind = j.at("kind").get<std::string>();
    if (kind == "finiteSet") {
      std::vector<Element> els;
      for (auto const& e : j.at("elements")) {
        els.push_back(element_from_json(G, e));
      }
      return ConjClass::finite(std::move(els));
    }
    if (kind == "cosetUnion") {
      std::vector<CosetPiece> pieces;
      for (auto const& p : j.at("pieces")) {
        pieces.push_back({label_index(G, p.at("f")), coset_from_json(p)});
      }
      return ConjClass::cosets(std::move(pieces));
    }
    throw std::invalid_argument("unknown class kind '" + kind + "'");
  }

  json to_json(IntMatrix const& m) {
    return m.to_rows();
  }

  IntMatrix matrix_from_json(json const& j) {
    if (!j.is_array() || j.empty()) {
      throw std::invalid_argument("a matrix is a non-empty list of rows");
    }
    std::size_t const cols = j[0].size();
    IntMatrix         m(j.size(), cols);
    for (std::size_t r = 0; r < j.size(); ++r) {
      if (j[r].size() != cols) {
        throw std::invalid_argument("matrix rows differ in length");
      }
      for (std::size_t c = 0; c < cols; ++c) {
        m(r, c) = j[r][c].get<std::int64_t>();
      }
    }
    return m;
  }

  json to_json(CosetwiseAffineMap const& m) {
    GroupTable const& G      = load_group(m.group());
    json              pieces = json::array();
    for (std::size_t f = 0; f < m.pieces().size(); ++f) {
      auto const& p = m.pieces()[f];
      pieces.push_back({{"from", G.label(f)},
                        {"to", G.label(p.target)},
                        {"matrix", to_json(p.M)},
                        {"shift", to_json(p.t)}});
    }
    return {{"group", G.name()}, {"pieces", pieces}};
  }

  CosetwiseAffineMap map_from_json(json const& j) {
    auto const id = parse_group(j.at("group").get<std::string>());
    if (!id) {
      throw std::invalid_argument("unknown group in map");
    }
    GroupTable const&                      G = load_group(*id);
    std::vector<CosetwiseAffineMap::Piece> pieces(G.order());
    std::vector<bool>                      seen(G.order(), false);
    for (auto const& p : j.at("pieces")) {
      std::size_t const f = label_index(G, p.at("from"));
      if (seen[f]) {
        throw std::invalid_argument("map lists a coset twice");
      }
      seen[f]   = true;
      pieces[f] = {label_index(G, p.at("to")), matrix_from_json(p.at("matrix")),
                   latvec_from_json(p.at("shift"))};
    }
    return CosetwiseAffineMap(*id, std::move(pieces));
  }

  json to_json(GroupTable const& G, WctVerdict const& v) {
    json j{{"ok", v.ok}, {"radius", v.radius}, {"pairs_checked", v.pairs_checked}};
    if (v.witness) {
      j["witness"] = pair_json(G, *v.witness);
    }
    if (v.images) {
      j["images"] = pair_json(G, *v.images);
    }
    return j;
  }

  json to_json(GroupTable const& G, TrivialityCertificate const& c) {
    json j{{"found", c.found()}};
    j["hom_witness"]     = c.hom_witness ? pair_json(G, *c.hom_witness) : json();
    j["antihom_witness"] = c.antihom_witness ? pair_json(G, *c.antihom_witness) : json();
    return j;
  }

  json to_json(AxiomReport const& r) {
    return {{"identity_moved", r.identity_moved},
            {"inverse_broken", r.inverse_broken},
            {"involution_broken", r.involution_broken},
            {"class_broken", r.class_broken},
            {"translation_broken", r.translation_broken},
            {"pairs_checked", r.checked},
            {"exceptions", r.total()}};
  }

  json to_json(GroupTable const& G, PresentationReport const& r) {
    json violations = json::array();
    json checked    = json::array();
    for (auto const& rel : r.relations) {
      checked.push_back(rel.text);
      if (!rel.holds) {
        violations.push_back({{"relation", rel.text}, {"residue", to_json(G, rel.residue)}});
      }
    }
    return {{"group", G.name()},
            {"relations", checked},
            {"violations", violations},
            {"notes", r.notes}};
  }

  json to_json(WGroupReport const& r) {
    json rels = json::array();
    for (auto const& x : r.relations) {
      json e{{"relation", x.relation}, {"holds", x.holds}, {"printed", x.printed}};
      if (!x.note.empty()) {
        e["note"] = x.note;
      }
      rels.push_back(e);
    }
    json orders = json::object();
    for (auto const& [name, o] : r.orders) {
      orders[name] = o;
    }
    return {{"group", group_name(r.group)},
            {"relations", rels},
            {"orders", orders},
            {"notes", r.notes},
            {"printed_all_hold", r.printed_all_hold()}};
  }

  json to_json(NormalityReport const& r) {
    json entries = json::array();
    for (auto const& e : r.entries) {
      json x{{"generator", e.generator}, {"conjugator", e.conjugator}, {"inside", e.inside}};
      if (e.inside) {
        x["word"] = e.word;
      }
      entries.push_back(x);
    }
    return {{"group", group_name(r.group)},
            {"entries", entries},
            {"words_enumerated", r.words_enumerated},
            {"all_inside", r.all_inside()}};
  }

  json to_json(SdElement const& g) {
    return {{"v", to_json(g.v)}, {"k", g.k}};
  }

  SdElement sd_element_from_json(json const& j) {
    return {latvec_from_json(j.at("v")), j.at("k").get<std::int64_t>()};
  }

  json to_json(SdClass const& c) {
    if (c.is_finite()) {
      json orbit = json::array();
      for (auto const& v : c.orbit) {
        orbit.push_back(to_json(SdElement{v, 0}));
      }
      return {{"kind", "finiteSet"}, {"elements", orbit}};
    }
    json pieces = json::array();
    for (auto const& p : c.cosets) {
      pieces.push_back({{"k", c.k},
                        {"offset", to_json(p.offset())},
                        {"lattice", to_json(p.lattice())}});
    }
    return {{"kind", "cosetUnion"}, {"pieces", pieces}};
  }

  json to_json(SdVerdict const& v) {
    json j{{"ok", v.ok}, {"radius", v.radius}, {"pairs_checked", v.pairs_checked}};
    if (v.witness) {
      j["witness"] = sd_pair_json(*v.witness);
    }
    if (v.images) {
      j["images"] = sd_pair_json(*v.images);
    }
    return j;
  }

  json to_json(SdCertificate const& c) {
    json j{{"found", c.found()}};
    j["hom_witness"]     = c.hom_witness ? sd_pair_json(*c.hom_witness) : json();
    j["antihom_witness"] = c.antihom_witness ? sd_pair_json(*c.antihom_witness) : json();
    return j;
  }

  json to_json(SdAxiomReport const& r) {
    return {{"identity_moved", r.identity_moved},
            {"inverse_broken", r.inverse_broken},
            {"involution_broken", r.involution_broken},
            {"class_broken", r.class_broken},
            {"translation_broken", r.translation_broken},
            {"power_broken", r.power_broken},
            {"pairs_checked", r.checked},
            {"exceptions", r.total()}};
  }

}  // namespace wct::io
