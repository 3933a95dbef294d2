#include "flagphase/smith.hpp"

#include <cstddef>
#include <utility>

#include "flagphase/errors.hpp"

namespace flagphase {

namespace {

bool find_pivot(const IntegerMatrix& m, std::size_t t, std::size_t& pr, std::size_t& pc) {
  bool found = false;
  for (std::size_t i = t; i < m.size(); ++i) {
    for (std::size_t j = t; j < m[i].size(); ++j) {
      if (m[i][j] == 0) continue;
      if (!found || abs(m[i][j]) < abs(m[pr][pc])) {
        pr = i;
        pc = j;
        found = true;
      }
    }
  }
  return found;
}

// Quotient rounded so the remainder is at most |p|/2 in absolute value.
Integer nearest_quotient(const Integer& a, const Integer& p) {
  Integer q;
  Integer r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
  if (2 * abs(r) > abs(p)) ++q;
  return q;
}

}  // namespace

std::vector<Integer> invariant_factors(IntegerMatrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m.front().size();
  for (const auto& row : m)
    if (row.size() != cols) fail(ErrorCode::DimensionMismatch, "ragged integer matrix");

  std::vector<Integer> diag;
  for (std::size_t t = 0; t < rows && t < cols; ++t) {
    for (;;) {
      std::size_t pr = t;
      std::size_t pc = t;
      if (!find_pivot(m, t, pr, pc)) return diag;
      std::swap(m[t], m[pr]);
      for (auto& row : m) std::swap(row[t], row[pc]);
      const Integer p = m[t][t];

      for (std::size_t i = t + 1; i < rows; ++i) {
        const Integer q = nearest_quotient(m[i][t], p);
        if (q != 0)
          for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        const Integer q = nearest_quotient(m[t][j], p);
        if (q != 0)
          for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
      }

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) clean = clean && m[i][t] == 0;
      for (std::size_t j = t + 1; j < cols; ++j) clean = clean && m[t][j] == 0;
      if (!clean) continue;

      // Fold a row with an entry not divisible by the pivot into row t.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (m[i][j] % p != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      for (std::size_t k = t; k < cols; ++k) m[t][k] += m[bad][k];
    }
    diag.push_back(abs(m[t][t]));
  }
  return diag;
}

Integer determinantal_divisor(const IntegerMatrix& m) {
  const auto factors = invariant_factors(m);
  if (factors.empty()) return 0;
  Integer product = 1;
  for (const auto& d : factors) product *= d;
  return product;
}

}  // namespace flagphase
