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

// wct command-line front end.  Talks to the library only through the C API
// in wct/wct.h, and prints exactly one JSON document on stdout per run.
//
// Exit codes: 0 when every check passed or a query was answered, 1 when a
// verification found a violation, 2 on usage errors (bad flags, unknown
// group, map, suite or element), 3 on internal errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "wct/wct.h"

namespace {

  using nlohmann::json;

  constexpr int kExitOk        = 0;
  constexpr int kExitViolation = 1;
  constexpr int kExitUsage     = 2;
  constexpr int kExitInternal  = 3;

  // Thrown on a failed C call; carries the exit code to use.
  struct CallFailed {
    int         exit_code;
    std::string message;
  };

  void check(wct_status s) {
    if (s == WCT_OK) {
      return;
    }
    int const code = (s == WCT_ERR_INTERNAL) ? kExitInternal : kExitUsage;
    throw CallFailed{code, std::string(wct_status_string(s)) + ": " + wct_last_error()};
  }

  // Takes ownership of a string returned by the library.
  json take(char* s) {
    std::unique_ptr<char, decltype(&wct_string_free)> guard(s, &wct_string_free);
    return json::parse(s);
  }

  struct GroupHandle {
    wct_group* g = nullptr;
    explicit GroupHandle(std::string const& name) {
      check(wct_group_open(name.c_str(), &g));
    }
    ~GroupHandle() {
      wct_group_close(g);
    }
    GroupHandle(GroupHandle const&)            = delete;
    GroupHandle& operator=(GroupHandle const&) = delete;
  };

  std::vector<std::string> group_names(std::string const& arg) {
    if (arg != "all") {
      return {arg};
    }
    char* out = nullptr;
    check(wct_group_list(&out));
    return take(out).at("groups").get<std::vector<std::string>>();
  }

  struct Options {
    std::string   group;
    std::string   map;
    std::string   element;
    std::string   other;
    std::string   theta;
    std::string   check = "phi";
    std::string   suite = "fast";
    std::int64_t  p     = 0;
    std::int64_t  radius = -1;
    std::uint64_t seed   = 0;
    std::int64_t  candidates = 0;
    bool          normality  = false;
    bool          report     = false;
    int           indent     = 2;
  };

  std::int64_t radius_or(Options const& o, std::int64_t fallback) {
    return o.radius >= 0 ? o.radius : fallback;
  }

  int cmd_check_presentation(Options const& o, json& out) {
    json groups = json::array();
    bool clean  = true;
    for (auto const& name : group_names(o.group)) {
      GroupHandle h(name);
      char*       s = nullptr;
      check(wct_check_presentation(h.g, &s));
      json doc = take(s);
      doc.erase("schema");
      clean = clean && doc.at("violations").empty();
      groups.push_back(std::move(doc));
    }
    out["groups"] = std::move(groups);
    out["ok"]     = clean;
    return clean ? kExitOk : kExitViolation;
  }

  int cmd_classes(Options const& o, json& out) {
    GroupHandle h(o.group);
    char*       s = nullptr;
    if (!o.element.empty() && !o.other.empty()) {
      int same = 0;
      check(wct_is_conjugate(h.g, o.element.c_str(), o.other.c_str(), &same));
      check(wct_class_descriptor(h.g, o.element.c_str(), &s));
      out.update(take(s));
      out["other"]     = o.other;
      out["conjugate"] = same != 0;
      return kExitOk;
    }
    if (!o.element.empty()) {
      check(wct_class_descriptor(h.g, o.element.c_str(), &s));
    } else {
      check(wct_classes_in_ball(h.g, radius_or(o, 2), &s));
    }
    out.update(take(s));
    return kExitOk;
  }

  int cmd_verify_map(Options const& o, json& out) {
    GroupHandle h(o.group);
    wct_map*    m = nullptr;
    check(wct_map_parse(h.g, o.map.c_str(), &m));
    std::unique_ptr<wct_map, decltype(&wct_map_free)> guard(m, &wct_map_free);
    int   ok = 0;
    char* s  = nullptr;
    check(wct_verify_map(m, radius_or(o, 4), &ok, &s));
    out.update(take(s));
    return ok ? kExitOk : kExitViolation;
  }

  int cmd_wgroup_relations(Options const& o, json& out) {
    GroupHandle h(o.group);
    int         ok = 0;
    char*       s  = nullptr;
    check(wct_wgroup_relations(h.g, &ok, &s));
    out.update(take(s));
    if (o.normality) {
      int inside = 0;
      check(wct_normality(h.g, &inside, &s));
      json n = take(s);
      n.erase("schema");
      out["normality"] = std::move(n);
      ok               = ok && inside;
    }
    return ok ? kExitOk : kExitViolation;
  }

  int cmd_involutions(Options const& o, json& out) {
    GroupHandle h(o.group);
    char*       s = nullptr;
    check(wct_involutions(h.g, &s));
    out.update(take(s));
    return kExitOk;
  }

  int cmd_semidirect(Options const& o, json& out) {
    wct_sd_group* g = nullptr;
    check(wct_sd_open(o.theta.c_str(), o.p, &g));
    std::unique_ptr<wct_sd_group, decltype(&wct_sd_close)> guard(g, &wct_sd_close);
    char* s = nullptr;
    if (!o.element.empty()) {
      check(wct_sd_class(g, o.element.c_str(), &s));
      out.update(take(s));
      return kExitOk;
    }
    int ok = 0;
    check(wct_sd_check(g, o.check.c_str(), radius_or(o, 4), &ok, &s));
    out.update(take(s));
    if (o.p == 2) {
      check(wct_sd_derived_lattice(g, &s));
      out["derived_lattice"] = take(s).at("derived_lattice");
    }
    return ok ? kExitOk : kExitViolation;
  }

  int cmd_acceptance(Options const& o, json& out) {
    int   ok = 0;
    char* s  = nullptr;
    check(wct_acceptance(o.suite.c_str(), o.seed, o.candidates, &ok, &s));
    json doc = take(s);
    std::string const text = doc.value("report", "");
    if (o.report) {
      std::cerr << text;
    }
    doc.erase("report");
    out.update(doc);
    return ok ? kExitOk : kExitViolation;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weak Cayley table maps of wallpaper groups and Z^n x| C_p"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(wct_version()));

  Options o;
  app.add_option("--json-indent", o.indent, "JSON indentation, -1 for one line")
      ->capture_default_str();

  auto* presentation = app.add_subcommand("check-presentation", "Check defining relations");
  presentation->add_option("--group", o.group, "Group name or 'all'")->required();

  auto* classes = app.add_subcommand("classes", "Conjugacy class descriptors");
  classes->add_option("--group", o.group)->required();
  classes->add_option("element", o.element, "Word such as 'x^2 y rho' or element JSON");
  classes->add_option("--conjugate-to", o.other, "Also decide conjugacy with this element")
      ->needs(classes->get_option("element"));
  classes->add_option("--radius", o.radius, "Sweep radius when no element is given (2)")
      ->check(CLI::NonNegativeNumber);

  auto* verify = app.add_subcommand("verify-map", "Check the weak Cayley table property");
  verify->add_option("--group", o.group)->required();
  verify->add_option("--map", o.map, "Map expression")->required();
  verify->add_option("--radius", o.radius, "Ball radius (4)")->check(CLI::PositiveNumber);

  auto* relations = app.add_subcommand("wgroup-relations", "Verify the W(G) relation suite");
  relations->add_option("--group", o.group)->required();
  relations->add_flag("--normality", o.normality, "Also check normality of the generators");

  auto* involutions = app.add_subcommand("involutions", "Involutions in each coset");
  involutions->add_option("--group", o.group)->required();

  auto* sd = app.add_subcommand("semidirect", "Z^n x| C_p checks");
  sd->add_option("--theta", o.theta, "Matrix rows as JSON, e.g. [[0,-1],[1,-1]]")->required();
  sd->add_option("--p", o.p, "Prime order of theta")->required();
  sd->add_option("--check", o.check, "Map to verify")
      ->check(CLI::IsMember({"phi", "p2-candidate", "identity"}))
      ->capture_default_str();
  sd->add_option("--radius", o.radius, "Ball radius (4)")->check(CLI::PositiveNumber);
  sd->add_option("--element", o.element, "Print the class of {\"v\":[...],\"k\":k} instead");

  auto* acceptance = app.add_subcommand("acceptance", "Run the acceptance battery");
  acceptance->add_option("--suite", o.suite, "fast or full")->capture_default_str();
  acceptance->add_option("--seed", o.seed, "Seed for randomized searches")->capture_default_str();
  acceptance->add_option("--candidates", o.candidates, "Random candidates (suite default)");
  acceptance->add_flag("--report", o.report, "Also print the text report on stderr");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForVersion const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return kExitUsage;
  }

  wct_set_json_indent(o.indent);
  json out{{"schema", "wct/1"}};
  int  code = kExitOk;
  try {
    if (*presentation) {
      code = cmd_check_presentation(o, out);
    } else if (*classes) {
      code = cmd_classes(o, out);
    } else if (*verify) {
      code = cmd_verify_map(o, out);
    } else if (*relations) {
      code = cmd_wgroup_relations(o, out);
    } else if (*involutions) {
      code = cmd_involutions(o, out);
    } else if (*sd) {
      code = cmd_semidirect(o, out);
    } else {
      code = cmd_acceptance(o, out);
    }
  } catch (CallFailed const& e) {
    json err{{"schema", "wct/1"}, {"error", e.message}, {"exit_code", e.exit_code}};
    std::cout << err.dump(o.indent) << '\n';
    std::cerr << "wct: " << e.message << '\n';
    return e.exit_code;
  } catch (std::exception const& e) {
    std::cerr << "wct: " << e.what() << '\n';
    return kExitInternal;
  }
  std::cout << out.dump(o.indent) << '\n';
  return code;
}
