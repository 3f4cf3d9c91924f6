// Copyright 2026 The VTD Toolkit Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vtd/assignment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "vtd/errors.hpp"

namespace vtd {

namespace {

// Square Hungarian solver on a padded n x n matrix (1-based internally).
// Returns row -> col and leaves the dual potentials in u and v.
std::vector<std::size_t> hungarian(const std::vector<double>& a, std::size_t n,
                                   std::vector<double>& u, std::vector<double>& v) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  u.assign(n + 1, 0.0);
  v.assign(n + 1, 0.0);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<double> minv(n + 1, kInf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = p[j0];
      double delta = kInf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = a[(i0 - 1) * n + (j - 1)] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  std::vector<std::size_t> row_to_col(n);
  for (std::size_t j = 1; j <= n; ++j) row_to_col[p[j] - 1] = j - 1;
  return row_to_col;
}

// Rewrites an optimal perfect matching into the lexicographically smallest
// perfect matching of the equality graph (edges with zero reduced cost).
// Every perfect matching of that graph is optimal under the same duals.
class LexRefiner {
 public:
  LexRefiner(std::size_t n, std::vector<std::vector<std::size_t>> adj, std::vector<std::size_t> row_to_col)
      : n_(n), adj_(std::move(adj)), row_to_col_(std::move(row_to_col)), col_to_row_(n) {
    for (std::size_t r = 0; r < n_; ++r) col_to_row_[row_to_col_[r]] = r;
  }

  std::vector<std::size_t> run() {
    locked_.assign(n_, 0);
    for (std::size_t r = 0; r < n_; ++r) {
      for (std::size_t c : adj_[r]) {
        if (c == row_to_col_[r]) break;
        if (try_reassign(r, c)) break;
      }
      locked_[r] = 1;
    }
    return row_to_col_;
  }

 private:
  // Moves row r onto column c, re-seating the displaced row through an
  // alternating path over unlocked rows into r's old column.
  bool try_reassign(std::size_t r, std::size_t c) {
    const std::size_t displaced = col_to_row_[c];
    if (locked_[displaced]) return false;
    const std::size_t freed = row_to_col_[r];
    const auto saved_rc = row_to_col_;
    const auto saved_cr = col_to_row_;
    row_to_col_[r] = c;
    col_to_row_[c] = r;
    visited_.assign(n_, 0);
    visited_[c] = 1;
    target_ = freed;
    locked_[r] = 1;
    const bool ok = augment(displaced);
    locked_[r] = 0;
    if (!ok) {
      row_to_col_ = saved_rc;
      col_to_row_ = saved_cr;
    }
    return ok;
  }

  bool augment(std::size_t row) {
    for (std::size_t c : adj_[row]) {
      if (visited_[c]) continue;
      visited_[c] = 1;
      if (c == target_) {
        row_to_col_[row] = c;
        col_to_row_[c] = row;
        return true;
      }
      const std::size_t next = col_to_row_[c];
      if (locked_[next]) continue;
      if (augment(next)) {
        row_to_col_[row] = c;
        col_to_row_[c] = row;
        return true;
      }
    }
    return false;
  }

  std::size_t n_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> row_to_col_;
  std::vector<std::size_t> col_to_row_;
  std::vector<char> locked_;
  std::vector<char> visited_;
  std::size_t target_ = 0;
};

}  // namespace

Matching solve_assignment(const CostMatrix& costs) {
  const std::size_t rows = costs.rows(), cols = costs.cols();
  Matching out;
  if (rows == 0 || cols == 0) {
    for (std::size_t r = 0; r < rows; ++r) out.unmatched_rows.push_back(r);
    for (std::size_t c = 0; c < cols; ++c) out.unmatched_cols.push_back(c);
    return out;
  }
  const std::size_t n = std::max(rows, cols);
  std::vector<double> a(n * n, 0.0);
  double scale = 1.0;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const double x = costs(r, c);
      if (!std::isfinite(x)) throw ValidationError("cost matrix entries must be finite");
      a[r * n + c] = x;
      scale = std::max(scale, std::abs(x));
    }
  }
  std::vector<double> u, v;
  const std::vector<std::size_t> initial = hungarian(a, n, u, v);

  const double tol = 1e-9 * scale * static_cast<double>(n);
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (a[r * n + c] - u[r + 1] - v[c + 1] <= tol || initial[r] == c) adj[r].push_back(c);
    }
  }
  const std::vector<std::size_t> row_to_col = LexRefiner(n, std::move(adj), initial).run();

  std::vector<char> col_used(cols, 0);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::size_t c = row_to_col[r];
    if (c < cols) {
      out.pairs.emplace_back(r, c);
      col_used[c] = 1;
    } else {
      out.unmatched_rows.push_back(r);
    }
  }
  for (std::size_t c = 0; c < cols; ++c) {
    if (!col_used[c]) out.unmatched_cols.push_back(c);
  }
  return out;
}

}  // namespace vtd
