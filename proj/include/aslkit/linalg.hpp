#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace aslkit {

inline bool is_zero(const mpq_class& x) { return sgn(x) == 0; }

// Exact row reduction over any field type F providing + - * /, and an
// `is_zero` overload. Matrices are dense row vectors of equal length; a
// `zero` value is passed explicitly so modular types can carry their modulus.
template <class F>
struct RowEchelon {
  std::vector<std::vector<F>> rows;      // reduced rows, one per pivot
  std::vector<std::size_t> pivots;       // pivot column of each reduced row
  std::vector<std::vector<F>> combos;    // reduced row = sum combos[k][i] * input_i
  std::vector<std::size_t> dependent;    // inputs that reduced to zero
  std::vector<std::vector<F>> relations;  // for each dependent input, a vanishing combination
  std::size_t rank() const { return rows.size(); }
};

template <class F>
RowEchelon<F> row_echelon(const std::vector<std::vector<F>>& input, const F& zero, const F& one) {
  RowEchelon<F> out;
  const std::size_t n = input.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<F> row = input[i];
    std::vector<F> combo(n, zero);
    combo[i] = one;
    for (std::size_t k = 0; k < out.rows.size(); ++k) {
      const std::size_t c = out.pivots[k];
      if (is_zero(row[c])) continue;
      const F factor = row[c];  // pivot rows are normalized to 1
      for (std::size_t col = 0; col < row.size(); ++col) row[col] = row[col] - factor * out.rows[k][col];
      for (std::size_t t = 0; t < n; ++t) combo[t] = combo[t] - factor * out.combos[k][t];
    }
    std::size_t pivot = row.size();
    for (std::size_t col = 0; col < row.size(); ++col) {
      if (!is_zero(row[col])) {
        pivot = col;
        break;
      }
    }
    if (pivot == row.size()) {
      out.dependent.push_back(i);
      out.relations.push_back(std::move(combo));
      continue;
    }
    const F inv = one / row[pivot];
    for (auto& x : row) x = x * inv;
    for (auto& x : combo) x = x * inv;
    // Keep earlier rows reduced against the new pivot so later inputs see a
    // fully reduced basis.
    for (std::size_t k = 0; k < out.rows.size(); ++k) {
      const F factor = out.rows[k][pivot];
      if (is_zero(factor)) continue;
      for (std::size_t col = 0; col < row.size(); ++col) out.rows[k][col] = out.rows[k][col] - factor * row[col];
      for (std::size_t t = 0; t < n; ++t) out.combos[k][t] = out.combos[k][t] - factor * combo[t];
    }
    out.rows.push_back(std::move(row));
    out.pivots.push_back(pivot);
    out.combos.push_back(std::move(combo));
  }
  return out;
}

template <class F>
std::size_t matrix_rank(const std::vector<std::vector<F>>& rows, const F& zero, const F& one) {
  return row_echelon(rows, zero, one).rank();
}

// Coefficients c with sum c_i * rows_i == target, if target lies in the span.
template <class F>
std::optional<std::vector<F>> solve_in_span(const std::vector<std::vector<F>>& rows, const std::vector<F>& target,
                                            const F& zero, const F& one) {
  auto ech = row_echelon(rows, zero, one);
  std::vector<F> rest = target;
  std::vector<F> coeffs(rows.size(), zero);
  for (std::size_t k = 0; k < ech.rows.size(); ++k) {
    const F factor = rest[ech.pivots[k]];
    if (is_zero(factor)) continue;
    for (std::size_t col = 0; col < rest.size(); ++col) rest[col] = rest[col] - factor * ech.rows[k][col];
    for (std::size_t t = 0; t < rows.size(); ++t) coeffs[t] = coeffs[t] + factor * ech.combos[k][t];
  }
  for (const auto& x : rest) {
    if (!is_zero(x)) return std::nullopt;
  }
  return coeffs;
}

template <class F>
F determinant(std::vector<std::vector<F>> m, const F& zero, const F& one) {
  const std::size_t n = m.size();
  F det = one;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && is_zero(m[pivot][col])) ++pivot;
    if (pivot == n) return zero;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = zero - det;
    }
    det = det * m[col][col];
    const F inv = one / m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (is_zero(m[r][col])) continue;
      const F factor = m[r][col] * inv;
      for (std::size_t c = col; c < n; ++c) m[r][c] = m[r][c] - factor * m[col][c];
    }
  }
  return det;
}

}  // namespace aslkit
