#pragma once

#include "carnot/lie.hpp"
#include "carnot/report.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace carnot {

/// Positive grading as a weight per basis vector (1-based index 0 unused).
using Grading = std::vector<int>;

int homogeneous_dimension(const Grading &weights);

/// Weight additivity over all nonzero constants; with `stratified` also
/// [V_1, V_d] = V_{d+1} and V_1 generating. Works symbolically in the
/// parameters for the additivity part.
CheckReport verify_grading(const LieAlgebra &alg, const Grading &weights,
                           bool stratified);

/// weights from the lower central series depth of each basis vector.
Grading natural_grading(const LieAlgebra &alg);

/// Exact test for the existence of a stratification: a derivation that
/// induces the identity on g/[g,g] exists iff g is stratifiable, and its
/// existence is a linear feasibility problem over Q.
bool stratification_exists(const LieAlgebra &alg);

struct ConeResult {
  std::vector<int> filtration_dims; // dim F_1, dim F_2, ...
  LieAlgebra cone;
  Grading weights; // grading of the cone (by adapted-basis stage)
  int hausdorff_dimension = 0;
  QMat adapted; // rows = adapted basis in the original coordinates
};

/// Complement of the derived subalgebra spanned by rows
/// e_a + sum_j u[{a,j}] e_j over the generator indices a.
QMat standard_polarization(const LieAlgebra &alg,
                           const std::map<std::pair<int, int>, Rat> &u);

/// Tangent cone of the polarization: associated graded of
/// F_1 = Delta, F_{k+1} = F_k + [Delta, F_k].
ConeResult polarization_cone(const LieAlgebra &alg, const QMat &delta);

/// Associated graded of the lower central series (the Carnot-ification).
ConeResult asymptotic_cone(const LieAlgebra &alg);

/// Generating set of the polynomial constraints for A to intertwine the
/// brackets for all parameter values; empty means automorphism everywhere.
/// Throws std::domain_error if det(A) is identically zero.
std::vector<Polynomial> automorphism_residual(const LieAlgebra &alg,
                                              const PolyMatrix &a);

/// Columns of `a` are the images of the source basis in target coordinates.
CheckReport verify_isomorphism(const QMat &a, const LieAlgebra &source,
                               const LieAlgebra &target);

struct Fingerprint {
  int dim = 0, step = 0, rank = 0, center_dim = 0;
  std::vector<int> lcs_dims;
  std::vector<int> derived_dims;
  std::vector<int> graded_dims; // lcs quotient dimensions
  bool operator==(const Fingerprint &) const = default;
  std::string text() const;
};

Fingerprint fingerprint(const LieAlgebra &alg);

} // namespace carnot
