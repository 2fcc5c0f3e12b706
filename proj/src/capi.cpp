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

#include "wct/wct.h"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <set>
#include <stdexcept>
#include <string>

#include "wct/acceptance.hpp"
#include "wct/conjugacy.hpp"
#include "wct/json_io.hpp"
#include "wct/maps.hpp"
#include "wct/semidirect.hpp"
#include "wct/wallpaper.hpp"

struct wct_group {
  wct::GroupTable const* table;
};

struct wct_map {
  wct::CosetwiseAffineMap map;
  std::string             expr;
};

struct wct_sd_group {
  wct::SdGroup group;
};

namespace {

  using nlohmann::json;

  thread_local std::string last_error;
  thread_local int         json_indent = -1;

  struct NullPointer : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
  };

  char const* need(char const* p, char const* what) {
    if (p == nullptr) {
      throw NullPointer(std::string(what) + " is null");
    }
    return p;
  }

  template <class T>
  T& need(T* p, char const* what) {
    if (p == nullptr) {
      throw NullPointer(std::string(what) + " is null");
    }
    return *p;
  }

  // Runs body, mapping exceptions onto status codes.
  template <class Body>
  wct_status guarded(Body&& body) {
    try {
      last_error.clear();
      body();
      return WCT_OK;
    } catch (NullPointer const& e) {
      last_error = e.what();
      return WCT_ERR_NULL_POINTER;
    } catch (json::exception const& e) {
      last_error = e.what();
      return WCT_ERR_PARSE;
    } catch (std::invalid_argument const& e) {
      last_error = e.what();
      return WCT_ERR_INVALID_ARGUMENT;
    } catch (std::domain_error const& e) {
      last_error = e.what();
      return WCT_ERR_INVALID_ARGUMENT;
    } catch (std::exception const& e) {
      last_error = e.what();
      return WCT_ERR_INTERNAL;
    } catch (...) {
      last_error = "unknown error";
      return WCT_ERR_INTERNAL;
    }
  }

  void emit(json doc, char** out) {
    need(out, "output pointer");
    json full{{"schema", wct::io::kSchema}};
    full.update(doc);
    std::string const s = full.dump(json_indent);
    char*             p = static_cast<char*>(std::malloc(s.size() + 1));
    if (p == nullptr) {
      throw std::bad_alloc();
    }
    std::memcpy(p, s.c_str(), s.size() + 1);
    *out = p;
  }

  wct::Element element(wct::GroupTable const& G, char const* text) {
    std::string const s = need(text, "element");
    auto const        first = s.find_first_not_of(" \t\n");
    if (first != std::string::npos && s[first] == '{') {
      return wct::io::element_from_json(G, json::parse(s));
    }
    return wct::parse_word(G, s);
  }

  double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
  }

}  // namespace

extern "C" {

const char* wct_version(void) {
  return "1.0.0";
}

const char* wct_status_string(wct_status status) {
  switch (status) {
    case WCT_OK:
      return "ok";
    case WCT_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case WCT_ERR_PARSE:
      return "parse error";
    case WCT_ERR_NULL_POINTER:
      return "null pointer";
    case WCT_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* wct_last_error(void) {
  return last_error.c_str();
}

void wct_string_free(char* s) {
  std::free(s);
}

void wct_set_json_indent(int indent) {
  json_indent = indent;
}

wct_status wct_group_list(char** out_json) {
  return guarded([&] {
    json names = json::array();
    for (auto id : wct::all_groups()) {
      names.push_back(wct::group_name(id));
    }
    emit({{"groups", names}}, out_json);
  });
}

wct_status wct_group_open(const char* name, wct_group** out) {
  return guarded([&] {
    need(out, "output pointer");
    auto const id = wct::parse_group(need(name, "group name"));
    if (!id) {
      throw std::invalid_argument(std::string("unknown group '") + name + "'");
    }
    *out = new wct_group{&wct::load_group(*id)};
  });
}

void wct_group_close(wct_group* group) {
  delete group;
}

wct_status wct_check_presentation(const wct_group* group, char** out_json) {
  return guarded([&] {
    auto const& G = *need(group, "group").table;
    emit(wct::io::to_json(G, wct::check_presentation(G)), out_json);
  });
}

wct_status wct_class_descriptor(const wct_group* group, const char* element_text,
                                char** out_json) {
  return guarded([&] {
    auto const&        G = *need(group, "group").table;
    wct::Element const g = element(G, element_text);
    json               doc{{"group", G.name()},
                           {"element", wct::io::to_json(G, g)},
                           {"class", wct::io::to_json(G, wct::conjugacy(G.id()).class_descriptor(g))}};
    emit(doc, out_json);
  });
}

wct_status wct_classes_in_ball(const wct_group* group, int64_t radius, char** out_json) {
  return guarded([&] {
    auto const& G = *need(group, "group").table;
    if (radius < 0) {
      throw std::invalid_argument("radius must be >= 0");
    }
    auto const&                          C = wct::conjugacy(G.id());
    std::vector<wct::ConjClass>          seen;
    json                                 classes = json::array();
    for (auto const& g : wct::ball(G, radius)) {
      bool known = false;
      for (auto const& c : seen) {
        if (c.contains(g)) {
          known = true;
          break;
        }
      }
      if (known) {
        continue;
      }
      seen.push_back(C.class_descriptor(g));
      classes.push_back({{"representative", wct::io::to_json(G, g)},
                         {"class", wct::io::to_json(G, seen.back())}});
    }
    emit({{"group", G.name()}, {"radius", radius}, {"classes", classes}}, out_json);
  });
}

wct_status wct_is_conjugate(const wct_group* group, const char* g, const char* h, int* out) {
  return guarded([&] {
    auto const& G = *need(group, "group").table;
    need(out, "output pointer") = wct::conjugacy(G.id()).is_conjugate(element(G, g), element(G, h));
  });
}

wct_status wct_involutions(const wct_group* group, char** out_json) {
  return guarded([&] {
    auto const& G = *need(group, "group").table;
    auto const& C = wct::conjugacy(G.id());
    json        cosets = json::array();
    for (std::size_t f = 0; f < G.order(); ++f) {
      auto const locus = C.involution_locus(f);
      cosets.push_back({{"f", G.label(f)},
                        {"locus", locus ? wct::io::to_json(*locus) : json()}});
    }
    emit({{"group", G.name()}, {"cosets", cosets}}, out_json);
  });
}

wct_status wct_map_catalog(const wct_group* group, char** out_json) {
  return guarded([&] {
    auto const& G = *need(group, "group").table;
    emit({{"group", G.name()},
          {"maps", wct::catalog_names(G.id())},
          {"automorphisms", wct::automorphism_names(G.id())},
          {"nontrivial", wct::nontrivial_names(G.id())}},
         out_json);
  });
}

wct_status wct_map_parse(const wct_group* group, const char* expr, wct_map** out) {
  return guarded([&] {
    auto const& G = *need(group, "group").table;
    need(out, "output pointer");
    *out = new wct_map{wct::parse_map(G, need(expr, "map expression")), expr};
  });
}

wct_status wct_map_from_json(const char* text, wct_map** out) {
  return guarded([&] {
    need(out, "output pointer");
    json const j = json::parse(need(text, "map JSON"));
    *out         = new wct_map{wct::io::map_from_json(j.contains("map") ? j.at("map") : j), ""};
  });
}

void wct_map_free(wct_map* map) {
  delete map;
}

wct_status wct_map_to_json(const wct_map* map, char** out_json) {
  return guarded([&] {
    auto const& m = need(map, "map");
    json        doc{{"map", wct::io::to_json(m.map)}};
    if (!m.expr.empty()) {
      doc["expression"] = m.expr;
    }
    emit(doc, out_json);
  });
}

wct_status wct_map_apply(const wct_map* map, const char* element_text, char** out_json) {
  return guarded([&] {
    auto const&        m = need(map, "map");
    auto const&        G = wct::load_group(m.map.group());
    wct::Element const g = element(G, element_text);
    emit({{"element", wct::io::to_json(G, g)}, {"image", wct::io::to_json(G, m.map(g))}},
         out_json);
  });
}

wct_status wct_map_compose(const wct_map* m1, const wct_map* m2, wct_map** out) {
  return guarded([&] {
    need(out, "output pointer");
    auto const& a = need(m1, "first map");
    auto const& b = need(m2, "second map");
    std::string expr;
    if (!a.expr.empty() && !b.expr.empty()) {
      expr = "(" + a.expr + ") * (" + b.expr + ")";
    }
    *out = new wct_map{a.map * b.map, expr};
  });
}

wct_status wct_map_invert(const wct_map* map, wct_map** out) {
  return guarded([&] {
    need(out, "output pointer");
    auto const& m = need(map, "map");
    *out          = new wct_map{m.map.inverse(), m.expr.empty() ? "" : "inv(" + m.expr + ")"};
  });
}

wct_status wct_map_equal(const wct_map* m1, const wct_map* m2, int* out) {
  return guarded([&] {
    need(out, "output pointer") = need(m1, "first map").map == need(m2, "second map").map;
  });
}

wct_status wct_verify_map(const wct_map* map, int64_t radius, int* out_ok, char** out_json) {
  return guarded([&] {
    auto const& m = need(map, "map");
    need(out_ok, "output pointer");
    if (radius < 1) {
      throw std::invalid_argument("radius must be >= 1");
    }
    auto const& G  = wct::load_group(m.map.group());
    auto const  t0 = std::chrono::steady_clock::now();
    auto const  v  = wct::is_wct_on_ball(G, m.map, radius);
    wct::TrivialityCertificate cert;
    std::int64_t               cert_radius = 0;
    for (std::int64_t r = std::min<int64_t>(2, radius); r <= std::min<int64_t>(radius, 3); ++r) {
      cert        = wct::nontriviality_certificate(G, m.map, r);
      cert_radius = r;
      if (cert.found()) {
        break;
      }
    }
    json doc = wct::io::to_json(G, v);
    doc["group"]       = G.name();
    doc["nontrivial"]  = cert.found();
    doc["certificate"] = wct::io::to_json(G, cert);
    doc["certificate"]["radius"] = cert_radius;
    if (!m.expr.empty()) {
      doc["map"] = m.expr;
    }
    doc["elapsed_ms"] = ms_since(t0);
    *out_ok           = v.ok;
    emit(doc, out_json);
  });
}

wct_status wct_map_axioms(const wct_map* map, int64_t radius, char** out_json) {
  return guarded([&] {
    auto const& m = need(map, "map");
    if (radius < 0) {
      throw std::invalid_argument("radius must be >= 0");
    }
    auto const& G   = wct::load_group(m.map.group());
    json        doc = wct::io::to_json(wct::check_wct_axioms(G, m.map, radius));
    doc["group"]    = G.name();
    doc["radius"]   = radius;
    emit(doc, out_json);
  });
}

wct_status wct_wgroup_relations(const wct_group* group, int* out_ok, char** out_json) {
  return guarded([&] {
    auto const& G = *need(group, "group").table;
    need(out_ok, "output pointer");
    auto const rep = wct::verify_wgroup_relations(G);
    *out_ok        = rep.printed_all_hold();
    emit(wct::io::to_json(rep), out_json);
  });
}

wct_status wct_normality(const wct_group* group, int* out_ok, char** out_json) {
  return guarded([&] {
    auto const& G = *need(group, "group").table;
    need(out_ok, "output pointer");
    auto const rep = wct::normality_check(G);
    *out_ok        = rep.all_inside();
    emit(wct::io::to_json(rep), out_json);
  });
}

wct_status wct_sd_open(const char* theta, int64_t p, wct_sd_group** out) {
  return guarded([&] {
    need(out, "output pointer");
    *out = new wct_sd_group{wct::SdGroup::build(wct::parse_theta(need(theta, "theta")), p)};
  });
}

void wct_sd_close(wct_sd_group* group) {
  delete group;
}

wct_status wct_sd_check(const wct_sd_group* group, const char* check, int64_t radius,
                        int* out_ok, char** out_json) {
  return guarded([&] {
    auto const&       G    = need(group, "group").group;
    std::string const name = need(check, "check name");
    need(out_ok, "output pointer");
    if (radius < 1) {
      throw std::invalid_argument("radius must be >= 1");
    }
    auto const m = name == "phi"            ? wct::phi_map(G)
                   : name == "p2-candidate" ? wct::p2_candidate(G)
                   : name == "identity"     ? wct::identity_map(G)
                                            : throw std::invalid_argument(
                                                "check must be phi, p2-candidate or identity");
    auto const t0   = std::chrono::steady_clock::now();
    auto const v    = wct::verify_sd(G, m, radius);
    auto const cert = wct::sd_nontriviality(G, m, std::min<int64_t>(radius, 2));
    json       doc  = wct::io::to_json(v);
    doc["check"]       = name;
    doc["theta"]       = wct::io::to_json(G.theta());
    doc["p"]           = G.p();
    doc["nontrivial"]  = cert.found();
    doc["certificate"] = wct::io::to_json(cert);
    doc["elapsed_ms"]  = ms_since(t0);
    *out_ok            = v.ok;
    emit(doc, out_json);
  });
}

wct_status wct_sd_class(const wct_sd_group* group, const char* element_text, char** out_json) {
  return guarded([&] {
    auto const&          G = need(group, "group").group;
    wct::SdElement const g = wct::io::sd_element_from_json(json::parse(need(element_text, "element")));
    if (g.v.dim() != G.dim() || g.k < 0 || g.k >= G.p()) {
      throw std::invalid_argument("element does not belong to this group");
    }
    emit({{"element", wct::io::to_json(g)}, {"class", wct::io::to_json(wct::class_sd(G, g))}},
         out_json);
  });
}

wct_status wct_sd_derived_lattice(const wct_sd_group* group, char** out_json) {
  return guarded([&] {
    auto const& G = need(group, "group").group;
    emit({{"derived_lattice", wct::io::to_json(wct::derived_lattice(G))}}, out_json);
  });
}

wct_status wct_acceptance(const char* suite, uint64_t seed, int64_t candidates, int* out_ok,
                          char** out_json) {
  return guarded([&] {
    auto const s = wct::parse_suite(need(suite, "suite"));
    if (!s) {
      throw std::invalid_argument(std::string("unknown suite '") + suite + "'");
    }
    need(out_ok, "output pointer");
    wct::AcceptanceOptions opts;
    opts.suite = *s;
    opts.seed  = seed;
    if (candidates > 0) {
      opts.candidates = static_cast<std::size_t>(candidates);
    }
    auto const rep = wct::run_acceptance(opts);
    json       doc = wct::to_json(rep);
    doc["report"]  = wct::format_report(rep);
    *out_ok        = rep.all_pass();
    emit(doc, out_json);
  });
}

}  // extern "C"
