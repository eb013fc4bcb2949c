#include "cyclecone/lp.hpp"

#include <limits>
#include <optional>
#include <stdexcept>

namespace cyclecone {

namespace {

void validate(const LinearSystem& system) {
  if (!system.nonnegative.empty() && system.nonnegative.size() != system.variables) {
    throw std::invalid_argument("lp: sign vector length does not match variable count");
  }
  for (const auto& row : system.constraints) {
    if (row.coefficients.size() != system.variables) {
      throw std::invalid_argument("lp: constraint length does not match variable count");
    }
  }
}

// Dense tableau in equality form A x = b, x >= 0, b >= 0.
struct Tableau {
  std::vector<std::vector<ExactRational>> rows;  // each row: columns..., rhs
  std::vector<ExactRational> reduced_cost;       // phase I costs, last entry is -objective
  std::vector<std::size_t> basis;
  std::size_t columns = 0;

  void pivot(std::size_t r, std::size_t c) {
    auto& pr = rows[r];
    const ExactRational inv = 1 / pr[c];
    for (auto& v : pr) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const ExactRational f = rows[i][c];
      for (std::size_t j = 0; j <= columns; ++j) {
        if (pr[j] != 0) rows[i][j] -= f * pr[j];
      }
    }
    if (reduced_cost[c] != 0) {
      const ExactRational f = reduced_cost[c];
      for (std::size_t j = 0; j <= columns; ++j) {
        if (pr[j] != 0) reduced_cost[j] -= f * pr[j];
      }
    }
    basis[r] = c;
  }

  // Bland: lowest-index entering column, lowest-index leaving basic variable
  // among ratio ties.
  void run() {
    for (;;) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < columns; ++j) {
        if (reduced_cost[j] < 0) {
          entering = j;
          break;
        }
      }
      if (!entering) return;

      std::optional<std::size_t> leaving;
      ExactRational best_ratio;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& a = rows[i][*entering];
        if (a <= 0) continue;
        ExactRational ratio = rows[i][columns] / a;
        if (!leaving || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[*leaving])) {
          leaving = i;
          best_ratio = std::move(ratio);
        }
      }
      // Phase I is bounded below by zero, so an entering column always has a
      // positive entry.
      if (!leaving) throw std::logic_error("lp: unbounded phase I");
      pivot(*leaving, *entering);
    }
  }
};

}  // namespace

LpResult lp_feasible(const LinearSystem& system) {
  validate(system);
  const std::size_t n = system.variables;
  auto is_nonnegative = [&](std::size_t j) { return !system.nonnegative.empty() && system.nonnegative[j]; };

  // Column layout: one column per nonnegative variable, two (x+, x-) per free
  // variable, then one slack per inequality, then artificials.
  std::vector<std::size_t> positive_col(n);
  std::vector<std::optional<std::size_t>> negative_col(n);
  std::size_t col = 0;
  for (std::size_t j = 0; j < n; ++j) {
    positive_col[j] = col++;
    if (!is_nonnegative(j)) negative_col[j] = col++;
  }
  std::vector<std::optional<std::size_t>> slack_col(system.constraints.size());
  for (std::size_t i = 0; i < system.constraints.size(); ++i) {
    if (system.constraints[i].relation != Relation::equal) slack_col[i] = col++;
  }

  // Rows normalized to rhs >= 0; the slack sign follows the original relation.
  struct Row {
    std::vector<ExactRational> dense;
    ExactRational rhs;
    bool slack_is_basic = false;
  };
  std::vector<Row> normalized;
  for (std::size_t i = 0; i < system.constraints.size(); ++i) {
    const auto& c = system.constraints[i];
    Row row{std::vector<ExactRational>(col), c.rhs, false};
    for (std::size_t j = 0; j < n; ++j) {
      row.dense[positive_col[j]] = c.coefficients[j];
      if (negative_col[j]) row.dense[*negative_col[j]] = -c.coefficients[j];
    }
    if (slack_col[i]) row.dense[*slack_col[i]] = c.relation == Relation::less_equal ? 1 : -1;
    if (row.rhs < 0) {
      for (auto& v : row.dense) v = -v;
      row.rhs = -row.rhs;
    }
    row.slack_is_basic = slack_col[i] && row.dense[*slack_col[i]] == 1;
    normalized.push_back(std::move(row));
  }

  std::size_t artificial_count = 0;
  for (const auto& row : normalized) artificial_count += row.slack_is_basic ? 0 : 1;

  Tableau t;
  t.columns = col + artificial_count;
  t.reduced_cost.assign(t.columns + 1, 0);
  std::size_t next_artificial = col;
  for (std::size_t i = 0; i < normalized.size(); ++i) {
    auto& src = normalized[i];
    std::vector<ExactRational> dense(t.columns + 1);
    for (std::size_t j = 0; j < col; ++j) dense[j] = src.dense[j];
    dense[t.columns] = src.rhs;
    if (src.slack_is_basic) {
      t.basis.push_back(*slack_col[i]);
    } else {
      dense[next_artificial] = 1;
      t.basis.push_back(next_artificial++);
      // Phase I objective: minimize the sum of artificials.
      for (std::size_t j = 0; j < col; ++j) t.reduced_cost[j] -= dense[j];
      t.reduced_cost[t.columns] -= dense[t.columns];
    }
    t.rows.push_back(std::move(dense));
  }

  t.run();

  LpResult result;
  result.feasible = t.reduced_cost[t.columns] == 0;
  if (!result.feasible) return result;

  std::vector<ExactRational> values(t.columns);
  for (std::size_t i = 0; i < t.rows.size(); ++i) values[t.basis[i]] = t.rows[i][t.columns];
  result.witness.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    result.witness[j] = values[positive_col[j]];
    if (negative_col[j]) result.witness[j] -= values[*negative_col[j]];
  }
  return result;
}

bool satisfies(const LinearSystem& system, const std::vector<ExactRational>& point) {
  validate(system);
  if (point.size() != system.variables) return false;
  for (std::size_t j = 0; j < system.variables; ++j) {
    if (!system.nonnegative.empty() && system.nonnegative[j] && point[j] < 0) return false;
  }
  for (const auto& c : system.constraints) {
    ExactRational lhs = 0;
    for (std::size_t j = 0; j < system.variables; ++j) lhs += c.coefficients[j] * point[j];
    switch (c.relation) {
      case Relation::less_equal:
        if (lhs > c.rhs) return false;
        break;
      case Relation::greater_equal:
        if (lhs < c.rhs) return false;
        break;
      case Relation::equal:
        if (lhs != c.rhs) return false;
        break;
    }
  }
  return true;
}

}  // namespace cyclecone
