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

// Exact integer lattices: vectors in Z^n, finitely generated subgroups of
// Z^n in Hermite normal form, and their cosets.  Everything is 64-bit with
// overflow checks; nothing here ever touches floating point.

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace wct {

  inline constexpr std::size_t kMaxDim = 8;

  namespace checked {
    std::int64_t add(std::int64_t a, std::int64_t b);
    std::int64_t sub(std::int64_t a, std::int64_t b);
    std::int64_t mul(std::int64_t a, std::int64_t b);
    // Floor division, b != 0.
    std::int64_t floor_div(std::int64_t a, std::int64_t b);
  }  // namespace checked

  // An element of Z^n, n <= kMaxDim.  Stored inline so that the hot loops of
  // the wallpaper engine never allocate.
  class LatVec {
   public:
    LatVec() = default;
    explicit LatVec(std::size_t dim);
    LatVec(std::initializer_list<std::int64_t> coords);
    explicit LatVec(std::span<std::int64_t const> coords);

    static LatVec unit(std::size_t dim, std::size_t i);

    std::size_t dim() const noexcept {
      return dim_;
    }
    std::int64_t operator[](std::size_t i) const noexcept {
      return c_[i];
    }
    std::int64_t& operator[](std::size_t i) noexcept {
      return c_[i];
    }
    std::span<std::int64_t const> coords() const noexcept {
      return {c_.data(), dim_};
    }

    bool is_zero() const noexcept;
    std::int64_t max_norm() const;

    LatVec& operator+=(LatVec const& other);
    LatVec& operator-=(LatVec const& other);
    LatVec operator-() const;
    friend LatVec operator+(LatVec lhs, LatVec const& rhs) {
      return lhs += rhs;
    }
    friend LatVec operator-(LatVec lhs, LatVec const& rhs) {
      return lhs -= rhs;
    }
    friend LatVec operator*(std::int64_t k, LatVec const& v);

    friend bool operator==(LatVec const& a, LatVec const& b) noexcept;
    friend bool operator<(LatVec const& a, LatVec const& b) noexcept;

    std::size_t hash() const noexcept;
    std::string to_string() const;

   private:
    std::array<std::int64_t, kMaxDim> c_{};
    std::size_t                       dim_ = 0;
  };

  // Dense integer matrix acting on column vectors.
  class IntMatrix {
   public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_columns(std::span<LatVec const> cols);

    std::size_t rows() const noexcept {
      return rows_;
    }
    std::size_t cols() const noexcept {
      return cols_;
    }
    std::int64_t operator()(std::size_t i, std::size_t j) const noexcept {
      return data_[i * cols_ + j];
    }
    std::int64_t& operator()(std::size_t i, std::size_t j) noexcept {
      return data_[i * cols_ + j];
    }

    LatVec    column(std::size_t j) const;
    LatVec    apply(LatVec const& v) const;
    IntMatrix operator*(IntMatrix const& other) const;
    IntMatrix operator-(IntMatrix const& other) const;
    IntMatrix operator+(IntMatrix const& other) const;
    IntMatrix transposed() const;
    IntMatrix power(std::int64_t k) const;  // k may be negative if unimodular

    std::int64_t determinant() const;
    // Exact inverse; throws std::domain_error unless det = +-1.
    IntMatrix inverse() const;

    bool is_identity() const noexcept;

    friend bool operator==(IntMatrix const&, IntMatrix const&) = default;

    std::size_t                           hash() const noexcept;
    std::vector<std::vector<std::int64_t>> to_rows() const;
    std::string                           to_string() const;

   private:
    std::size_t               rows_ = 0;
    std::size_t               cols_ = 0;
    std::vector<std::int64_t> data_;
  };

  // A subgroup of Z^n, kept as the row-style Hermite normal form of any
  // generating set: echelon rows, positive pivots, entries above each pivot
  // reduced into [0, pivot).  Two sublattices are equal iff their bases are.
  class Sublattice {
   public:
    Sublattice() = default;
    explicit Sublattice(std::size_t dim);  // the zero lattice

    static Sublattice span(std::span<LatVec const> generators, std::size_t dim);
    static Sublattice span(std::initializer_list<LatVec> generators);
    static Sublattice full(std::size_t dim);

    std::size_t dim() const noexcept {
      return dim_;
    }
    std::size_t rank() const noexcept {
      return basis_.size();
    }
    std::vector<LatVec> const& basis() const noexcept {
      return basis_;
    }

    bool contains(LatVec const& v) const;
    // Canonical representative of v + L.
    LatVec reduce(LatVec const& v) const;
    // [Z^n : L] for full-rank L, otherwise nullopt.
    std::optional<std::int64_t> index() const;

    friend bool operator==(Sublattice const&, Sublattice const&) = default;
    std::size_t hash() const noexcept;
    std::string to_string() const;

   private:
    std::size_t         dim_ = 0;
    std::vector<LatVec> basis_;
    std::vector<std::size_t> pivots_;
  };

  Sublattice canonicalize(std::span<LatVec const> generators);
  bool       contains(Sublattice const& lattice, LatVec const& v);
  Sublattice intersect(Sublattice const& a, Sublattice const& b);
  Sublattice operator+(Sublattice const& a, Sublattice const& b);
  Sublattice image(IntMatrix const& m);  // column span
  Sublattice kernel(IntMatrix const& m);

  // offset + lattice, with the offset stored reduced so that equality of
  // cosets is equality of fields.
  class LatticeCoset {
   public:
    LatticeCoset() = default;
    LatticeCoset(LatVec offset, Sublattice lattice);

    LatVec const& offset() const noexcept {
      return offset_;
    }
    Sublattice const& lattice() const noexcept {
      return lattice_;
    }
    bool contains(LatVec const& v) const;

    friend bool operator==(LatticeCoset const&, LatticeCoset const&) = default;
    std::size_t hash() const noexcept;
    std::string to_string() const;

   private:
    LatVec     offset_;
    Sublattice lattice_;
  };

  bool coset_contains(LatticeCoset const& coset, LatVec const& v);

  // All integer solutions of m * a = target, as a coset of ker(m), or nullopt
  // if there are none.
  std::optional<LatticeCoset> solve(IntMatrix const& m, LatVec const& target);

  // Every vector with max-norm <= radius, ordered by norm shell then
  // lexicographically.
  std::vector<LatVec> box(std::size_t dim, std::int64_t radius);

}  // namespace wct

template <>
struct std::hash<wct::LatVec> {
  std::size_t operator()(wct::LatVec const& v) const noexcept {
    return v.hash();
  }
};
