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

// JSON forms of the library's values.  Every value type that the CLI prints
// has a reader as well, and reading what was written gives an equal value.

#include <string>

#include "json.hpp"
#include "wct/conjugacy.hpp"
#include "wct/maps.hpp"
#include "wct/semidirect.hpp"
#include "wct/wallpaper.hpp"

namespace wct::io {

  using nlohmann::json;

  inline constexpr char const* kSchema = "wct/1";

  json   to_json(LatVec const& v);
  LatVec latvec_from_json(json const& j);

  // A lattice is its list of basis rows; dim is needed for the zero lattice.
  json       to_json(Sublattice const& L);
  Sublattice sublattice_from_json(json const& j, std::size_t dim = 2);

  json         to_json(LatticeCoset const& c);
  LatticeCoset coset_from_json(json const& j, std::size_t dim = 2);

  json    to_json(GroupTable const& G, Element const& g);
  Element element_from_json(GroupTable const& G, json const& j);

  json      to_json(GroupTable const& G, ConjClass const& c);
  ConjClass class_from_json(GroupTable const& G, json const& j);

  json               to_json(CosetwiseAffineMap const& m);
  CosetwiseAffineMap map_from_json(json const& j);

  json to_json(GroupTable const& G, WctVerdict const& v);
  json to_json(GroupTable const& G, TrivialityCertificate const& c);
  json to_json(AxiomReport const& r);
  json to_json(GroupTable const& G, PresentationReport const& r);
  json to_json(WGroupReport const& r);
  json to_json(NormalityReport const& r);

  json      to_json(SdElement const& g);
  SdElement sd_element_from_json(json const& j);
  json      to_json(SdClass const& c);
  json      to_json(SdVerdict const& v);
  json      to_json(SdCertificate const& c);
  json      to_json(SdAxiomReport const& r);
  json      to_json(IntMatrix const& m);
  IntMatrix matrix_from_json(json const& j);

}  // namespace wct::io
