#include "carnot/linalg.hpp"

#include <stdexcept>

namespace carnot {

QMat q_identity(int n) {
  QMat m(n, QVec(n, Rat(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

QMat q_mul(const QMat &a, const QMat &b) {
  if (a.empty() || b.empty()) return {};
  size_t n = a.size(), k = b.size(), p = b[0].size();
  QMat r(n, QVec(p, Rat(0)));
  for (size_t i = 0; i < n; ++i) {
    if (a[i].size() != k) throw std::invalid_argument("q_mul shape");
    for (size_t m = 0; m < k; ++m) {
      if (a[i][m] == 0) continue;
      for (size_t j = 0; j < p; ++j) r[i][j] += a[i][m] * b[m][j];
    }
  }
  return r;
}

QVec q_mul_vec(const QMat &a, const QVec &v) {
  QVec r(a.size(), Rat(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != v.size()) throw std::invalid_argument("q_mul_vec shape");
    for (size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
  }
  return r;
}

std::vector<int> q_rref(QMat &m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t sel = r;
    while (sel < rows && m[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[r]);
    Rat inv = m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] /= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

int q_rank(QMat m) { return static_cast<int>(q_rref(m).size()); }

QMat q_row_basis(QMat m) {
  auto pivots = q_rref(m);
  m.resize(pivots.size());
  return m;
}

bool q_in_row_space(const QMat &basis, const QVec &v) {
  // basis is assumed rref'd with no zero rows
  QVec w = v;
  for (const auto &row : basis) {
    size_t lead = 0;
    while (lead < row.size() && row[lead] == 0) ++lead;
    if (lead == row.size()) continue;
    if (w[lead] != 0) {
      Rat f = w[lead] / row[lead];
      for (size_t j = 0; j < w.size(); ++j) w[j] -= f * row[j];
    }
  }
  for (const auto &x : w)
    if (x != 0) return false;
  return true;
}

bool q_same_row_space(const QMat &a, const QMat &b) {
  QMat ra = q_row_basis(a), rb = q_row_basis(b);
  return ra == rb;
}

std::optional<QVec> q_solve(QMat a, QVec b) {
  if (a.empty()) return b.empty() ? std::optional<QVec>(QVec{}) : std::nullopt;
  size_t rows = a.size(), cols = a[0].size();
  for (size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
  auto pivots = q_rref(a);
  // Inconsistent if a pivot landed in the augmented column.
  if (!pivots.empty() && pivots.back() == static_cast<int>(cols))
    return std::nullopt;
  QVec x(cols, Rat(0));
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][cols];
  return x;
}

bool q_rref_try_add(QMat &m, QVec v) {
  for (const auto &row : m) {
    size_t lead = 0;
    while (lead < row.size() && row[lead] == 0) ++lead;
    if (lead < row.size() && v[lead] != 0) {
      Rat f = v[lead] / row[lead];
      for (size_t j = 0; j < v.size(); ++j) v[j] -= f * row[j];
    }
  }
  size_t lead = 0;
  while (lead < v.size() && v[lead] == 0) ++lead;
  if (lead == v.size()) return false;
  Rat inv = v[lead];
  for (auto &x : v) x /= inv;
  for (auto &row : m)
    if (row[lead] != 0) {
      Rat f = row[lead];
      for (size_t j = 0; j < v.size(); ++j) row[j] -= f * v[j];
    }
  m.push_back(std::move(v));
  return true;
}

std::optional<QMat> q_inverse(const QMat &a) {
  size_t n = a.size();
  QMat m = a;
  for (size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw std::invalid_argument("q_inverse shape");
    for (size_t j = 0; j < n; ++j) m[i].push_back(i == j ? Rat(1) : Rat(0));
  }
  q_rref(m);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (m[i][j] != Rat(i == j ? 1 : 0)) return std::nullopt;
  QMat inv(n, QVec(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  return inv;
}

} // namespace carnot
