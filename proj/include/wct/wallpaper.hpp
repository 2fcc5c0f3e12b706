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

// The seventeen plane crystallographic groups as exact multiplication
// engines.  Every element is kept in the normal form a*f with a in the
// translation lattice A = Z^2 and f drawn from a fixed transversal F of A.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wct/lattice.hpp"

namespace wct {

  enum class GroupId : std::uint8_t {
    p1,
    p2,
    p3,
    p4,
    p6,
    cm,
    pm,
    pg,
    c2mm,
    p2mm,
    p2mg,
    p2gg,
    p3m1,
    p31m,
    p4mg,
    p4mm,
    p6m,
  };

  inline constexpr std::size_t kGroupCount = 17;

  std::span<GroupId const>  all_groups();
  std::string_view          group_name(GroupId id);
  std::optional<GroupId>    parse_group(std::string_view name);

  // g = a * F[f].  The point part is an index into the owning table's F.
  struct Element {
    LatVec       a{0, 0};
    std::uint8_t f = 0;

    friend bool operator==(Element const&, Element const&) = default;
    std::size_t hash() const noexcept;
  };

  struct ElementHash {
    std::size_t operator()(Element const& g) const noexcept {
      return g.hash();
    }
  };

  struct RelationCheck {
    std::string text;
    bool        holds = false;
    Element     residue;  // lhs * rhs^-1, the identity when the relation holds
  };

  struct PresentationReport {
    GroupId                    group;
    std::vector<RelationCheck> relations;
    std::vector<std::string>   notes;

    std::size_t violations() const;
  };

  class GroupTable {
   public:
    struct Product {
      LatVec      cocycle;
      std::size_t h = 0;
    };

    GroupId          id() const noexcept {
      return id_;
    }
    std::string_view name() const noexcept {
      return group_name(id_);
    }

    std::size_t order() const noexcept {  // |F| = [G : A]
      return labels_.size();
    }
    std::string const&         label(std::size_t f) const;
    std::optional<std::size_t> find_label(std::string_view label) const;

    // a^f = act(f) * a, i.e. f^-1 a f in lattice coordinates.
    IntMatrix const& act(std::size_t f) const {
      return act_.at(f);
    }
    // The linear part of f as an affine map of the plane, act(f)^-1.
    IntMatrix const& linear(std::size_t f) const {
      return lin_.at(f);
    }
    // Translation part of f as an affine map, in half lattice units.
    LatVec const& doubled_shift(std::size_t f) const {
      return t2_.at(f);
    }
    Product const& fprod(std::size_t f, std::size_t g) const {
      return prod_[f * order() + g];
    }
    std::size_t point_inverse(std::size_t f) const {
      return finv_.at(f);
    }
    bool is_reflection(std::size_t f) const {
      return det_.at(f) < 0;
    }

    LatVec const& beta1() const noexcept {
      return beta1_;
    }
    LatVec const& beta2() const noexcept {
      return beta2_;
    }

    Element identity() const {
      return Element{};
    }
    Element translation(LatVec a) const {
      return Element{std::move(a), 0};
    }
    Element mul(Element const& g, Element const& h) const;
    Element inv(Element const& g) const;
    Element conj(Element const& g, Element const& h) const;  // h^-1 g h
    Element commutator(Element const& g, Element const& h) const;
    Element pow(Element const& g, std::int64_t k) const;

    // Named generators of the presentation ("x", "y", "rho", "sigma",
    // "gamma") available in this group.
    std::vector<std::string> const& generator_names() const noexcept {
      return gen_names_;
    }
    std::optional<Element> generator(std::string_view name) const;
    // F[f] as a word in generator_names() indices.
    std::vector<std::size_t> const& transversal_word(std::size_t f) const {
      return fwords_.at(f);
    }

    // The defining relations, one word equation per entry.
    std::vector<std::string> const& relations() const noexcept {
      return relations_;
    }
    std::vector<std::string> const& notes() const noexcept {
      return notes_;
    }

    std::string format(Element const& g) const;

   private:
    friend GroupTable build_table(GroupId);

    GroupId                  id_ = GroupId::p1;
    std::vector<std::string> labels_;
    std::vector<IntMatrix>   act_, lin_;
    std::vector<LatVec>      t2_;
    std::vector<int>         det_;
    std::vector<Product>     prod_;
    std::vector<std::size_t> finv_;
    LatVec                   beta1_{0, 0}, beta2_{0, 0};
    std::vector<std::string> gen_names_;
    std::vector<std::size_t> gen_index_;
    std::vector<std::vector<std::size_t>> fwords_;
    std::vector<std::string> relations_;
    std::vector<std::string> notes_;
  };

  // Tables are built once and live for the whole program.
  GroupTable const& load_group(GroupId id);

  // Evaluate a word such as "x^-1 y rho2 sigma", "(x,rho)", "x^rho" or
  // "(rho sigma)^2".  Throws std::invalid_argument on malformed input.
  Element parse_word(GroupTable const& G, std::string_view word);

  // Every a*f with max-norm(a) <= R, ordered by norm shell.
  std::vector<Element> ball(GroupTable const& G, std::int64_t R);

  PresentationReport check_presentation(GroupTable const& G);

}  // namespace wct

template <>
struct std::hash<wct::Element> {
  std::size_t operator()(wct::Element const& g) const noexcept {
    return g.hash();
  }
};
