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

#include "wct/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace wct {

  namespace checked {
    std::int64_t add(std::int64_t a, std::int64_t b) {
      std::int64_t r;
      if (__builtin_add_overflow(a, b, &r)) {
        throw std::overflow_error("integer overflow in lattice arithmetic");
      }
      return r;
    }

    std::int64_t sub(std::int64_t a, std::int64_t b) {
      std::int64_t r;
      if (__builtin_sub_overflow(a, b, &r)) {
        throw std::overflow_error("integer overflow in lattice arithmetic");
      }
      return r;
    }

    std::int64_t mul(std::int64_t a, std::int64_t b) {
      std::int64_t r;
      if (__builtin_mul_overflow(a, b, &r)) {
        throw std::overflow_error("integer overflow in lattice arithmetic");
      }
      return r;
    }

    std::int64_t floor_div(std::int64_t a, std::int64_t b) {
      std::int64_t q = a / b;
      if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
      }
      return q;
    }
  }  // namespace checked

  namespace {
    void require_dim(std::size_t dim) {
      if (dim > kMaxDim) {
        throw std::invalid_argument("lattice dimension exceeds "
                                    + std::to_string(kMaxDim));
      }
    }

    void require_same_dim(std::size_t a, std::size_t b) {
      if (a != b) {
        throw std::invalid_argument("dimension mismatch: "
                                    + std::to_string(a) + " vs "
                                    + std::to_string(b));
      }
    }

    std::size_t hash_combine(std::size_t seed, std::size_t v) noexcept {
      return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
    }

    using Row  = std::vector<std::int64_t>;
    using Rows = std::vector<Row>;

    // In-place row-style HNF.  Returns the pivot column of each surviving
    // (nonzero) row; zero rows are dropped.
    std::vector<std::size_t> hermite(Rows& rows, std::size_t ncols) {
      std::vector<std::size_t> pivots;
      std::size_t              r = 0;
      for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        // Euclid on column c among rows r..end.
        while (true) {
          std::size_t best = rows.size();
          for (std::size_t i = r; i < rows.size(); ++i) {
            if (rows[i][c] != 0
                && (best == rows.size()
                    || std::abs(rows[i][c]) < std::abs(rows[best][c]))) {
              best = i;
            }
          }
          if (best == rows.size()) {
            break;
          }
          std::swap(rows[r], rows[best]);
          bool done = true;
          for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][c] == 0) {
              continue;
            }
            std::int64_t q = rows[i][c] / rows[r][c];
            for (std::size_t j = c; j < ncols; ++j) {
              rows[i][j] = checked::sub(rows[i][j], checked::mul(q, rows[r][j]));
            }
            if (rows[i][c] != 0) {
              done = false;
            }
          }
          if (done) {
            break;
          }
        }
        if (rows[r][c] == 0) {
          continue;
        }
        if (rows[r][c] < 0) {
          for (std::size_t j = c; j < ncols; ++j) {
            rows[r][j] = -rows[r][j];
          }
        }
        for (std::size_t i = 0; i < r; ++i) {
          std::int64_t q = checked::floor_div(rows[i][c], rows[r][c]);
          if (q != 0) {
            for (std::size_t j = c; j < ncols; ++j) {
              rows[i][j]
                  = checked::sub(rows[i][j], checked::mul(q, rows[r][j]));
            }
          }
        }
        pivots.push_back(c);
        ++r;
      }
      rows.resize(r);
      return pivots;
    }

    Row to_row(LatVec const& v) {
      return Row(v.coords().begin(), v.coords().end());
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // LatVec
  ////////////////////////////////////////////////////////////////////////

  LatVec::LatVec(std::size_t dim) : dim_(dim) {
    require_dim(dim);
  }

  LatVec::LatVec(std::initializer_list<std::int64_t> coords)
      : dim_(coords.size()) {
    require_dim(dim_);
    std::copy(coords.begin(), coords.end(), c_.begin());
  }

  LatVec::LatVec(std::span<std::int64_t const> coords) : dim_(coords.size()) {
    require_dim(dim_);
    std::copy(coords.begin(), coords.end(), c_.begin());
  }

  LatVec LatVec::unit(std::size_t dim, std::size_t i) {
    LatVec v(dim);
    v[i] = 1;
    return v;
  }

  bool LatVec::is_zero() const noexcept {
    for (std::size_t i = 0; i < dim_; ++i) {
      if (c_[i] != 0) {
        return false;
      }
    }
    return true;
  }

  std::int64_t LatVec::max_norm() const {
    std::int64_t m = 0;
    for (std::size_t i = 0; i < dim_; ++i) {
      if (c_[i] == INT64_MIN) {
        throw std::overflow_error("integer overflow in lattice arithmetic");
      }
      m = std::max(m, std::abs(c_[i]));
    }
    return m;
  }

  LatVec& LatVec::operator+=(LatVec const& other) {
    require_same_dim(dim_, other.dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      c_[i] = checked::add(c_[i], other.c_[i]);
    }
    return *this;
  }

  LatVec& LatVec::operator-=(LatVec const& other) {
    require_same_dim(dim_, other.dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      c_[i] = checked::sub(c_[i], other.c_[i]);
    }
    return *this;
  }

  LatVec LatVec::operator-() const {
    LatVec r(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      r.c_[i] = checked::sub(0, c_[i]);
    }
    return r;
  }

  LatVec operator*(std::int64_t k, LatVec const& v) {
    LatVec r(v.dim_);
    for (std::size_t i = 0; i < v.dim_; ++i) {
      r.c_[i] = checked::mul(k, v.c_[i]);
    }
    return r;
  }

  bool operator==(LatVec const& a, LatVec const& b) noexcept {
    if (a.dim_ != b.dim_) {
      return false;
    }
    for (std::size_t i = 0; i < a.dim_; ++i) {
      if (a.c_[i] != b.c_[i]) {
        return false;
      }
    }
    return true;
  }

  bool operator<(LatVec const& a, LatVec const& b) noexcept {
    if (a.dim_ != b.dim_) {
      return a.dim_ < b.dim_;
    }
    return std::lexicographical_compare(
        a.c_.begin(), a.c_.begin() + a.dim_, b.c_.begin(), b.c_.begin() + b.dim_);
  }

  std::size_t LatVec::hash() const noexcept {
    std::size_t h = dim_;
    for (std::size_t i = 0; i < dim_; ++i) {
      h = hash_combine(h, std::hash<std::int64_t>{}(c_[i]));
    }
    return h;
  }

  std::string LatVec::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < dim_; ++i) {
      os << (i ? "," : "") << c_[i];
    }
    os << ')';
    return os.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // IntMatrix
  ////////////////////////////////////////////////////////////////////////

  IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  IntMatrix::IntMatrix(
      std::initializer_list<std::initializer_list<std::int64_t>> rows)
      : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    data_.reserve(rows_ * cols_);
    for (auto const& row : rows) {
      if (row.size() != cols_) {
        throw std::invalid_argument("ragged matrix literal");
      }
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = 1;
    }
    return m;
  }

  IntMatrix IntMatrix::from_columns(std::span<LatVec const> cols) {
    if (cols.empty()) {
      return IntMatrix();
    }
    IntMatrix m(cols[0].dim(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      require_same_dim(cols[j].dim(), m.rows_);
      for (std::size_t i = 0; i < m.rows_; ++i) {
        m(i, j) = cols[j][i];
      }
    }
    return m;
  }

  LatVec IntMatrix::column(std::size_t j) const {
    LatVec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      v[i] = (*this)(i, j);
    }
    return v;
  }

  LatVec IntMatrix::apply(LatVec const& v) const {
    require_same_dim(cols_, v.dim());
    LatVec r(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      std::int64_t s = 0;
      for (std::size_t j = 0; j < cols_; ++j) {
        s = checked::add(s, checked::mul(data_[i * cols_ + j], v[j]));
      }
      r[i] = s;
    }
    return r;
  }

  IntMatrix IntMatrix::operator*(IntMatrix const& other) const {
    require_same_dim(cols_, other.rows_);
    IntMatrix r(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < other.cols_; ++j) {
        std::int64_t s = 0;
        for (std::size_t k = 0; k < cols_; ++k) {
          s = checked::add(s, checked::mul((*this)(i, k), other(k, j)));
        }
        r(i, j) = s;
      }
    }
    return r;
  }

  IntMatrix IntMatrix::operator-(IntMatrix const& other) const {
    require_same_dim(rows_, other.rows_);
    require_same_dim(cols_, other.cols_);
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) {
      r.data_[i] = checked::sub(data_[i], other.data_[i]);
    }
    return r;
  }

  IntMatrix IntMatrix::operator+(IntMatrix const& other) const {
    require_same_dim(rows_, other.rows_);
    require_same_dim(cols_, other.cols_);
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) {
      r.data_[i] = checked::add(data_[i], other.data_[i]);
    }
    return r;
  }

  IntMatrix IntMatrix::transposed() const {
    IntMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        r(j, i) = (*this)(i, j);
      }
    }
    return r;
  }

  IntMatrix IntMatrix::power(std::int64_t k) const {
    if (rows_ != cols_) {
      throw std::invalid_argument("power of a non-square matrix");
    }
    IntMatrix base = k < 0 ? inverse() : *this;
    // k = INT64_MIN is not a meaningful exponent here
    std::uint64_t e      = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1
                                 : static_cast<std::uint64_t>(k);
    IntMatrix     result = identity(rows_);
    while (e != 0) {
      if (e & 1) {
        result = result * base;
      }
      e >>= 1;
      if (e != 0) {
        base = base * base;
      }
    }
    return result;
  }

  std::int64_t IntMatrix::determinant() const {
    if (rows_ != cols_) {
      throw std::invalid_argument("determinant of a non-square matrix");
    }
    std::size_t const n = rows_;
    if (n == 0) {
      return 1;
    }
    // Bareiss fraction-free elimination; every division is exact.
    __extension__ using wide = __int128;
    std::vector<wide> a(data_.begin(), data_.end());
    auto      at   = [&](std::size_t i, std::size_t j) -> wide& {
      return a[i * n + j];
    };
    wide prev = 1;
    int      sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (at(k, k) == 0) {
        std::size_t p = k + 1;
        while (p < n && at(p, k) == 0) {
          ++p;
        }
        if (p == n) {
          return 0;
        }
        for (std::size_t j = 0; j < n; ++j) {
          std::swap(at(k, j), at(p, j));
        }
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
        }
      }
      prev = at(k, k);
    }
    wide d = sign * at(n - 1, n - 1);
    if (d > INT64_MAX || d < INT64_MIN) {
      throw std::overflow_error("determinant overflows 64 bits");
    }
    return static_cast<std::int64_t>(d);
  }

  IntMatrix IntMatrix::inverse() const {
    std::int64_t const det = determinant();
    if (det != 1 && det != -1) {
      throw std::domain_error("matrix is not unimodular (det = "
                              + std::to_string(det) + ")");
    }
    std::size_t const n = rows_;
    IntMatrix         inv(n, n);
    if (n == 1) {
      inv(0, 0) = det;
      return inv;
    }
    // Adjugate via cofactors; n is at most kMaxDim.
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t r = 0, mr = 0; r < n; ++r) {
          if (r == j) {
            continue;
          }
          for (std::size_t c = 0, mc = 0; c < n; ++c) {
            if (c == i) {
              continue;
            }
            minor(mr, mc++) = (*this)(r, c);
          }
          ++mr;
        }
        std::int64_t cof = minor.determinant();
        if ((i + j) % 2 == 1) {
          cof = -cof;
        }
        inv(i, j) = checked::mul(cof, det);
      }
    }
    return inv;
  }

  bool IntMatrix::is_identity() const noexcept {
    if (rows_ != cols_) {
      return false;
    }
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if ((*this)(i, j) != (i == j ? 1 : 0)) {
          return false;
        }
      }
    }
    return true;
  }

  std::size_t IntMatrix::hash() const noexcept {
    std::size_t h = hash_combine(rows_, cols_);
    for (auto x : data_) {
      h = hash_combine(h, std::hash<std::int64_t>{}(x));
    }
    return h;
  }

  std::vector<std::vector<std::int64_t>> IntMatrix::to_rows() const {
    std::vector<std::vector<std::int64_t>> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      out[i].assign(data_.begin() + i * cols_,
                    data_.begin() + (i + 1) * cols_);
    }
    return out;
  }

  std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
      os << (i ? "," : "") << '[';
      for (std::size_t j = 0; j < cols_; ++j) {
        os << (j ? "," : "") << (*this)(i, j);
      }
      os << ']';
    }
    os << ']';
    return os.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Sublattice
  ////////////////////////////////////////////////////////////////////////

  Sublattice::Sublattice(std::size_t dim) : dim_(dim) {
    require_dim(dim);
  }

  Sublattice Sublattice::span(std::span<LatVec const> generators,
                              std::size_t            dim) {
    Sublattice L(dim);
    Rows       rows;
    rows.reserve(generators.size());
    for (auto const& g : generators) {
      require_same_dim(g.dim(), dim);
      if (!g.is_zero()) {
        rows.push_back(to_row(g));
      }
    }
    L.pivots_ = hermite(rows, dim);
    for (auto const& row : rows) {
      L.basis_.emplace_back(std::span<std::int64_t const>(row));
    }
    return L;
  }

  Sublattice Sublattice::span(std::initializer_list<LatVec> generators) {
    if (generators.size() == 0) {
      throw std::invalid_argument(
          "cannot infer the dimension of an empty generator list");
    }
    std::vector<LatVec> gens(generators);
    return span(gens, gens.front().dim());
  }

  Sublattice Sublattice::full(std::size_t dim) {
    std::vector<LatVec> gens;
    for (std::size_t i = 0; i < dim; ++i) {
      gens.push_back(LatVec::unit(dim, i));
    }
    return span(gens, dim);
  }

  bool Sublattice::contains(LatVec const& v) const {
    require_same_dim(v.dim(), dim_);
    LatVec w = v;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      std::int64_t const p = basis_[k][pivots_[k]];
      if (w[pivots_[k]] % p != 0) {
        return false;
      }
      std::int64_t const q = w[pivots_[k]] / p;
      if (q != 0) {
        w -= q * basis_[k];
      }
    }
    return w.is_zero();
  }

  LatVec Sublattice::reduce(LatVec const& v) const {
    require_same_dim(v.dim(), dim_);
    LatVec w = v;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      std::int64_t const q
          = checked::floor_div(w[pivots_[k]], basis_[k][pivots_[k]]);
      if (q != 0) {
        w -= q * basis_[k];
      }
    }
    return w;
  }

  std::optional<std::int64_t> Sublattice::index() const {
    if (basis_.size() != dim_) {
      return std::nullopt;
    }
    std::int64_t idx = 1;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      idx = checked::mul(idx, basis_[k][pivots_[k]]);
    }
    return idx;
  }

  std::size_t Sublattice::hash() const noexcept {
    std::size_t h = dim_;
    for (auto const& b : basis_) {
      h = hash_combine(h, b.hash());
    }
    return h;
  }

  std::string Sublattice::to_string() const {
    std::ostringstream os;
    os << '<';
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      os << (k ? "," : "") << basis_[k].to_string();
    }
    os << '>';
    return os.str();
  }

  Sublattice canonicalize(std::span<LatVec const> generators) {
    if (generators.empty()) {
      return Sublattice(0);
    }
    return Sublattice::span(generators, generators.front().dim());
  }

  bool contains(Sublattice const& lattice, LatVec const& v) {
    return lattice.contains(v);
  }

  Sublattice intersect(Sublattice const& a, Sublattice const& b) {
    require_same_dim(a.dim(), b.dim());
    std::size_t const n = a.dim();
    // Rows (u | u) for u in a and (w | 0) for w in b.  The echelon rows
    // whose first half vanishes span {(0 | u) : u in a, u = -w in b}.
    Rows rows;
    for (auto const& u : a.basis()) {
      Row r(2 * n, 0);
      for (std::size_t i = 0; i < n; ++i) {
        r[i] = r[n + i] = u[i];
      }
      rows.push_back(std::move(r));
    }
    for (auto const& w : b.basis()) {
      Row r(2 * n, 0);
      for (std::size_t i = 0; i < n; ++i) {
        r[i] = w[i];
      }
      rows.push_back(std::move(r));
    }
    auto                pivots = hermite(rows, 2 * n);
    std::vector<LatVec> gens;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (pivots[k] >= n) {
        LatVec v(n);
        for (std::size_t i = 0; i < n; ++i) {
          v[i] = rows[k][n + i];
        }
        gens.push_back(v);
      }
    }
    return Sublattice::span(gens, n);
  }

  Sublattice operator+(Sublattice const& a, Sublattice const& b) {
    require_same_dim(a.dim(), b.dim());
    std::vector<LatVec> gens(a.basis());
    gens.insert(gens.end(), b.basis().begin(), b.basis().end());
    return Sublattice::span(gens, a.dim());
  }

  Sublattice image(IntMatrix const& m) {
    std::vector<LatVec> cols;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      cols.push_back(m.column(j));
    }
    return Sublattice::span(cols, m.rows());
  }

  std::optional<LatticeCoset> solve(IntMatrix const& m, LatVec const& target) {
    std::size_t const rows = m.rows(), cols = m.cols();
    require_same_dim(target.dim(), rows);
    // Rows (m e_i | e_i); the right half tracks the unimodular transform.
    Rows aug;
    for (std::size_t i = 0; i < cols; ++i) {
      Row r(rows + cols, 0);
      for (std::size_t k = 0; k < rows; ++k) {
        r[k] = m(k, i);
      }
      r[rows + i] = 1;
      aug.push_back(std::move(r));
    }
    auto   pivots = hermite(aug, rows + cols);
    LatVec rest   = target;
    LatVec sol(cols);
    std::vector<LatVec> ker;
    for (std::size_t k = 0; k < aug.size(); ++k) {
      if (pivots[k] >= rows) {
        LatVec v(cols);
        for (std::size_t i = 0; i < cols; ++i) {
          v[i] = aug[k][rows + i];
        }
        ker.push_back(v);
        continue;
      }
      std::int64_t const p = aug[k][pivots[k]];
      if (rest[pivots[k]] % p != 0) {
        return std::nullopt;
      }
      std::int64_t const q = rest[pivots[k]] / p;
      for (std::size_t i = 0; i < rows; ++i) {
        rest[i] = checked::sub(rest[i], checked::mul(q, aug[k][i]));
      }
      for (std::size_t i = 0; i < cols; ++i) {
        sol[i] = checked::add(sol[i], checked::mul(q, aug[k][rows + i]));
      }
    }
    if (!rest.is_zero()) {
      return std::nullopt;
    }
    return LatticeCoset(sol, Sublattice::span(ker, cols));
  }

  Sublattice kernel(IntMatrix const& m) {
    return solve(m, LatVec(m.rows()))->lattice();
  }

  ////////////////////////////////////////////////////////////////////////
  // LatticeCoset
  ////////////////////////////////////////////////////////////////////////

  LatticeCoset::LatticeCoset(LatVec offset, Sublattice lattice)
      : offset_(lattice.reduce(offset)), lattice_(std::move(lattice)) {}

  bool LatticeCoset::contains(LatVec const& v) const {
    return lattice_.contains(v - offset_);
  }

  std::size_t LatticeCoset::hash() const noexcept {
    return hash_combine(offset_.hash(), lattice_.hash());
  }

  std::string LatticeCoset::to_string() const {
    return offset_.to_string() + "+" + lattice_.to_string();
  }

  bool coset_contains(LatticeCoset const& coset, LatVec const& v) {
    return coset.contains(v);
  }

  std::vector<LatVec> box(std::size_t dim, std::int64_t radius) {
    require_dim(dim);
    if (radius < 0) {
      throw std::invalid_argument("negative radius");
    }
    std::vector<LatVec> out;
    LatVec              v(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      v[i] = -radius;
    }
    while (true) {
      out.push_back(v);
      std::size_t i = 0;
      while (i < dim && v[i] == radius) {
        v[i] = -radius;
        ++i;
      }
      if (i == dim) {
        break;
      }
      ++v[i];
    }
    std::stable_sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
      auto na = a.max_norm(), nb = b.max_norm();
      return na != nb ? na < nb : a < b;
    });
    return out;
  }

}  // namespace wct
