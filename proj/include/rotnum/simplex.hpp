#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace rotnum {

/// Dense two-phase primal simplex over an exact ordered field, with Bland's
/// rule. Variables are nonnegative; the objective is minimized.
template <class Scalar>
class Simplex {
 public:
  enum class Status { optimal, infeasible, unbounded };

  struct Result {
    Status status = Status::infeasible;
    Scalar value{};
    std::vector<Scalar> x;
  };

  explicit Simplex(std::size_t variables) : n_(variables) {}

  void add_le(std::vector<Scalar> row, Scalar rhs) { add(std::move(row), std::move(rhs), Sense::le); }
  void add_ge(std::vector<Scalar> row, Scalar rhs) { add(std::move(row), std::move(rhs), Sense::ge); }
  void add_eq(std::vector<Scalar> row, Scalar rhs) { add(std::move(row), std::move(rhs), Sense::eq); }

  std::size_t variables() const { return n_; }
  std::size_t constraints() const { return rows_.size(); }

  Result minimize(const std::vector<Scalar>& cost) const {
    if (cost.size() != n_) throw std::invalid_argument("Simplex::minimize: cost size mismatch");
    Tableau t = build();
    Result out;
    if (t.artificial_begin < t.cols) {
      std::vector<Scalar> phase1(t.cols, Scalar(0));
      for (std::size_t j = t.artificial_begin; j < t.cols; ++j) phase1[j] = Scalar(1);
      run(t, phase1, t.cols);
      if (objective_value(t, phase1) > Scalar(0)) return out;
      expel_artificials(t);
    }
    std::vector<Scalar> phase2(t.cols, Scalar(0));
    for (std::size_t j = 0; j < n_; ++j) phase2[j] = cost[j];
    if (!run(t, phase2, t.artificial_begin)) {
      out.status = Status::unbounded;
      return out;
    }
    out.status = Status::optimal;
    out.x.assign(n_, Scalar(0));
    for (std::size_t i = 0; i < t.basis.size(); ++i)
      if (t.basis[i] < n_) out.x[t.basis[i]] = t.a[i][t.cols];
    out.value = objective_value(t, phase2);
    return out;
  }

 private:
  enum class Sense { le, ge, eq };

  struct Row {
    std::vector<Scalar> coef;
    Scalar rhs;
    Sense sense;
  };

  struct Tableau {
    std::vector<std::vector<Scalar>> a;  // rows x (cols + 1), last column is the rhs
    std::vector<std::size_t> basis;
    std::size_t cols = 0;
    std::size_t artificial_begin = 0;
  };

  void add(std::vector<Scalar> row, Scalar rhs, Sense sense) {
    if (row.size() != n_) throw std::invalid_argument("Simplex: row size mismatch");
    if (rhs < Scalar(0)) {
      for (auto& v : row) v = -v;
      rhs = -rhs;
      if (sense == Sense::le) sense = Sense::ge;
      else if (sense == Sense::ge) sense = Sense::le;
    }
    rows_.push_back({std::move(row), std::move(rhs), sense});
  }

  Tableau build() const {
    std::size_t slacks = 0;
    std::size_t artificials = 0;
    for (const auto& r : rows_) {
      if (r.sense != Sense::eq) ++slacks;
      if (r.sense != Sense::le) ++artificials;
    }
    Tableau t;
    t.cols = n_ + slacks + artificials;
    t.artificial_begin = n_ + slacks;
    std::size_t slack = n_;
    std::size_t artificial = t.artificial_begin;
    for (const auto& r : rows_) {
      std::vector<Scalar> row(t.cols + 1, Scalar(0));
      for (std::size_t j = 0; j < n_; ++j) row[j] = r.coef[j];
      row[t.cols] = r.rhs;
      if (r.sense == Sense::le) {
        row[slack] = Scalar(1);
        t.basis.push_back(slack++);
      } else {
        if (r.sense == Sense::ge) row[slack++] = Scalar(-1);
        row[artificial] = Scalar(1);
        t.basis.push_back(artificial++);
      }
      t.a.push_back(std::move(row));
    }
    return t;
  }

  static Scalar objective_value(const Tableau& t, const std::vector<Scalar>& cost) {
    Scalar v(0);
    for (std::size_t i = 0; i < t.basis.size(); ++i) v += cost[t.basis[i]] * t.a[i][t.cols];
    return v;
  }

  static void pivot(Tableau& t, std::size_t row, std::size_t col) {
    auto& pr = t.a[row];
    Scalar inv = Scalar(1) / pr[col];
    for (auto& v : pr) v *= inv;
    for (std::size_t i = 0; i < t.a.size(); ++i) {
      if (i == row || t.a[i][col] == Scalar(0)) continue;
      Scalar f = t.a[i][col];
      for (std::size_t j = 0; j <= t.cols; ++j)
        if (pr[j] != Scalar(0)) t.a[i][j] -= f * pr[j];
    }
    t.basis[row] = col;
  }

  // Optimizes over columns [0, limit); returns false when unbounded.
  static bool run(Tableau& t, const std::vector<Scalar>& cost, std::size_t limit) {
    for (;;) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < limit && !entering; ++j) {
        Scalar reduced = cost[j];
        for (std::size_t i = 0; i < t.basis.size(); ++i)
          if (t.a[i][j] != Scalar(0)) reduced -= cost[t.basis[i]] * t.a[i][j];
        if (reduced < Scalar(0)) entering = j;
      }
      if (!entering) return true;
      const std::size_t col = *entering;
      std::optional<std::size_t> leaving;
      Scalar best_ratio{};
      for (std::size_t i = 0; i < t.a.size(); ++i) {
        if (!(t.a[i][col] > Scalar(0))) continue;
        Scalar ratio = t.a[i][t.cols] / t.a[i][col];
        if (!leaving || ratio < best_ratio ||
            (ratio == best_ratio && t.basis[i] < t.basis[*leaving])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (!leaving) return false;
      pivot(t, *leaving, col);
    }
  }

  static void expel_artificials(Tableau& t) {
    for (std::size_t i = 0; i < t.a.size();) {
      if (t.basis[i] < t.artificial_begin) {
        ++i;
        continue;
      }
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < t.artificial_begin && !col; ++j)
        if (t.a[i][j] != Scalar(0)) col = j;
      if (col) {
        pivot(t, i, *col);
        ++i;
      } else {
        t.a.erase(t.a.begin() + static_cast<long>(i));
        t.basis.erase(t.basis.begin() + static_cast<long>(i));
      }
    }
  }

  std::size_t n_;
  std::vector<Row> rows_;
};

}  // namespace rotnum
