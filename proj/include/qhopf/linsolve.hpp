#pragma once

#include <map>
#include <optional>
#include <vector>

#include "qhopf/scalar.hpp"

namespace qhopf {

/// Exact sparse linear system over Q(i).  Rows are sparse maps column ->
/// coefficient.  Elimination is plain exact Gaussian elimination with a
/// deterministic pivot choice: columns in order, first row with a nonzero
/// entry.  Free variables are set to zero.
class SparseLinearSystem {
 public:
  explicit SparseLinearSystem(int ncols) : ncols_(ncols) {}

  int add_row() {
    rows_.emplace_back();
    rhs_.emplace_back(0);
    return static_cast<int>(rows_.size()) - 1;
  }

  void add_coeff(int row, int col, const Scalar& c) {
    if (c.is_zero()) return;
    auto& r = rows_[static_cast<std::size_t>(row)];
    auto [it, fresh] = r.emplace(col, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) r.erase(it);
    }
  }

  void add_rhs(int row, const Scalar& c) { rhs_[static_cast<std::size_t>(row)] += c; }

  std::size_t row_count() const { return rows_.size(); }

  /// Some exact solution if one exists, otherwise nullopt.
  std::optional<std::vector<Scalar>> solve() const {
    std::vector<std::map<int, Scalar>> rows = rows_;
    std::vector<Scalar> rhs = rhs_;
    std::size_t rank = 0;
    std::vector<int> pivot_col_of_row;

    for (int col = 0; col < ncols_ && rank < rows.size(); ++col) {
      std::size_t pivot = rows.size();
      for (std::size_t r = rank; r < rows.size(); ++r) {
        auto it = rows[r].find(col);
        if (it != rows[r].end()) {
          pivot = r;
          break;
        }
      }
      if (pivot == rows.size()) continue;
      std::swap(rows[rank], rows[pivot]);
      std::swap(rhs[rank], rhs[pivot]);

      Scalar inv = Scalar(1) / rows[rank].at(col);
      for (auto& [k, v] : rows[rank]) v *= inv;
      rhs[rank] *= inv;

      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r == rank) continue;
        auto it = rows[r].find(col);
        if (it == rows[r].end()) continue;
        Scalar f = it->second;
        for (const auto& [k, v] : rows[rank]) {
          auto [jt, fresh] = rows[r].emplace(k, -f * v);
          if (!fresh) {
            jt->second -= f * v;
            if (jt->second.is_zero()) rows[r].erase(jt);
          }
        }
        rhs[r] -= f * rhs[rank];
      }
      pivot_col_of_row.push_back(col);
      ++rank;
    }

    // Rows past the rank have every column eliminated; a nonzero right-hand
    // side there means the system is inconsistent.
    for (std::size_t r = rank; r < rows.size(); ++r)
      if (!rhs[r].is_zero()) return std::nullopt;

    std::vector<Scalar> x(static_cast<std::size_t>(ncols_), Scalar(0));
    for (std::size_t r = 0; r < rank; ++r) {
      int col = pivot_col_of_row[r];
      // After full elimination the pivot row is e_col = rhs, except for free
      // columns, which we set to zero.
      Scalar v = rhs[r];
      for (const auto& [k, c] : rows[r])
        if (k != col) v -= c * x[static_cast<std::size_t>(k)];
      x[static_cast<std::size_t>(col)] = v;
    }
    return x;
  }

 private:
  int ncols_;
  std::vector<std::map<int, Scalar>> rows_;
  std::vector<Scalar> rhs_;
};

}  // namespace qhopf
