#pragma once

#include "carnot/rational.hpp"

#include <optional>
#include <vector>

namespace carnot {

using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>; // row-major

QMat q_identity(int n);
QMat q_mul(const QMat &a, const QMat &b);
QVec q_mul_vec(const QMat &a, const QVec &v);

/// Reduced row echelon form (in place, exact). Returns pivot columns.
std::vector<int> q_rref(QMat &m);
int q_rank(QMat m);

/// Drops zero rows; rows end up as a canonical rref basis of the row space.
QMat q_row_basis(QMat m);
bool q_in_row_space(const QMat &rref_basis, const QVec &v);
bool q_same_row_space(const QMat &a, const QMat &b);

/// One solution of A x = b, if any.
std::optional<QVec> q_solve(QMat a, QVec b);
std::optional<QMat> q_inverse(const QMat &a);

/// Incrementally keeps `m` in rref; returns true (and extends the basis)
/// iff v is independent of the rows of m.
bool q_rref_try_add(QMat &m, QVec v);

} // namespace carnot
