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

// The acceptance battery: ten numbered criteria, each a self-contained
// computation that reports pass/fail, timing and human-readable detail.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace wct {

  enum class Suite { fast, full };

  std::optional<Suite> parse_suite(std::string_view name);
  char const*          suite_name(Suite s);

  struct AcceptanceOptions {
    Suite         suite = Suite::fast;
    std::uint64_t seed  = 0;
    // Random candidates per group for criterion 10; defaults to 1000 for
    // the fast suite and 10000 for the full one.
    std::optional<std::size_t> candidates;
  };

  struct CriterionResult {
    int                      id = 0;
    std::string              title;
    bool                     pass    = false;
    double                   seconds = 0;
    double                   budget  = 0;  // seconds; 0 means unbounded
    std::vector<std::string> details;
  };

  struct AcceptanceReport {
    Suite                        suite = Suite::fast;
    std::uint64_t                seed  = 0;
    std::vector<CriterionResult> criteria;
    double                       seconds = 0;

    bool all_pass() const;
  };

  inline constexpr int kCriteria = 10;

  CriterionResult  run_criterion(int id, AcceptanceOptions const& opts);
  AcceptanceReport run_acceptance(
      AcceptanceOptions const&                              opts,
      std::function<void(CriterionResult const&)> const& progress = {});

  nlohmann::json to_json(AcceptanceReport const& r);
  // One "criterion N: PASS|FAIL" line per criterion, details indented.
  std::string format_report(AcceptanceReport const& r, bool with_details = true);

}  // namespace wct
