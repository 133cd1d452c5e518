#pragma once

#include "carnot/frames.hpp"

namespace carnot {

/// Polynomial coordinate change; comps are written over `domain`.
struct PolyMap {
  VarTablePtr domain;
  std::vector<Polynomial> comps;
};

/// Factor order of the one-parameter product, leftmost factor first.
/// The default is descending basis order exp(al_n X_n) ... exp(al_1 X_1);
/// a handful of published tables use a different permutation.
std::vector<int> descending_order(int n);
std::vector<int> ascending_order(int n);

/// First-kind coordinates of the ordered product of one-parameter flows.
/// Domain variables are al1..aln.
PolyMap second_to_first(const GroupLaw &g,
                        const std::vector<int> &order = {});

/// Inverse map, by triangular back-substitution; domain variables a1..an.
PolyMap first_to_second(const GroupLaw &g, const std::vector<int> &order = {});

/// Second-kind left-invariant frame, written over x1..xn:
/// M_s(x) = J_Psi(Phi(x)) * M(Phi(x)).
Frame second_frame(const GroupLaw &g, const std::vector<int> &order = {});

/// Psi(Phi(al)) == al in both directions.
CheckReport roundtrip_check(const GroupLaw &g,
                            const std::vector<int> &order = {});

} // namespace carnot
