#pragma once

#include "carnot/bch.hpp"

namespace carnot {

enum class Side { Left, Right };

/// Left-invariant frame: column j of `m` holds the coefficients of
/// X_j = sum_k m(k,j) d/dx_k. m(0) = I and m is unipotent for the catalog's
/// filtration-adapted bases.
struct Frame {
  PolyMatrix m;
};

/// Dual coframe: row i of `w` holds theta_i = sum_k w(i,k) dx_k, with
/// w * m = I.
struct Coframe {
  PolyMatrix w;
};

/// Differential at the identity of left (resp. right) translation:
/// left: (k,j) -> dz_k/dy_j at y=0; right: (k,j) -> dz_k(y,x)/dy_j at y=0.
/// The result lives over the x/parameter table.
PolyMatrix d_translation(const GroupLaw &g, Side side);

Frame left_frame(const GroupLaw &g);
Coframe left_coframe(const GroupLaw &g);

/// dtheta_k = -sum_{i<j} c_ij^k theta_i ^ theta_j, expanded symbolically.
CheckReport maurer_cartan_check(const LieAlgebra &alg, const Coframe &cf);

/// Commutators of the frame's vector fields realize the structure
/// constants: [X_i, X_j] = sum_k c_ij^k X_k as differential operators.
CheckReport bracket_realization_check(const LieAlgebra &alg, const Frame &fr);

/// x/parameter table of an algebra (x1..xn plus parameters).
VarTablePtr x_table(const LieAlgebra &alg);

} // namespace carnot
