#pragma once

#include "carnot/linalg.hpp"
#include "carnot/poly.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace carnot {

enum class StratFlag { Yes, No, Unknown };

struct AlgebraMeta {
  std::string id;
  std::string gong, degraaf, delbarco, magnin;
  int claimed_rank = -1;
  int claimed_step = -1;
  StratFlag stratifiable = StratFlag::Unknown;
  std::string asymptotic_cone; // catalog id of gr(L), when the source states it
  // (condition text, catalog id); condition empty = unconditional
  std::vector<std::pair<std::string, std::string>> tangent_cones;
  bool missing_source = false;
  std::string note;
};

/// Nilpotent Lie algebra given by structure constants. Coefficients are
/// polynomials in the parameter table (constant for non-parametric entries),
/// so one-parameter families are first-class values.
class LieAlgebra {
public:
  LieAlgebra() = default;
  LieAlgebra(int dim, VarTablePtr params);

  int dim() const { return dim_; }
  const VarTablePtr &params() const { return params_; }
  bool is_parametric() const;

  /// Declares [e_i, e_j] += coeff * e_k for i < j (1-based indices).
  void add_bracket(int i, int j, int k, Polynomial coeff);
  void add_bracket(int i, int j, int k, const Rat &coeff);

  /// Sparse coefficient list of [e_i, e_j] for i < j; empty when trivial.
  const std::vector<std::pair<int, Polynomial>> &pair_coeffs(int i,
                                                             int j) const;
  const std::map<std::pair<int, int>,
                 std::vector<std::pair<int, Polynomial>>> &
  constants() const {
    return constants_;
  }

  /// Substitutes rational values for all parameters.
  LieAlgebra specialize(const QVec &param_values) const;

  AlgebraMeta meta;

private:
  int dim_ = 0;
  VarTablePtr params_;
  std::map<std::pair<int, int>, std::vector<std::pair<int, Polynomial>>>
      constants_;
  static const std::vector<std::pair<int, Polynomial>> empty_;
};

/// Direct product with block structure constants; factors must be
/// non-parametric.
LieAlgebra direct_product(const LieAlgebra &a, const LieAlgebra &b);

/// Algebra element with polynomial coordinates.
struct Element {
  VarTablePtr table;
  std::vector<Polynomial> coords;

  static Element zero(VarTablePtr t, int dim);
  Element operator+(const Element &o) const;
  Element operator-(const Element &o) const;
  Element operator*(const Rat &c) const;
  bool is_zero() const;
};

/// Structure constants lifted once into a coordinate table, so that repeated
/// brackets (BCH evaluation) avoid per-call substitution.
class BoundAlgebra {
public:
  BoundAlgebra(const LieAlgebra &alg, VarTablePtr table);
  int dim() const { return dim_; }
  const VarTablePtr &table() const { return table_; }
  Element bracket(const Element &u, const Element &v) const;
  /// [e_i, e_j] as a sparse list, any i,j (antisymmetry applied).
  std::vector<std::pair<int, Polynomial>> basis_bracket(int i, int j) const;

private:
  int dim_;
  VarTablePtr table_;
  std::vector<std::vector<std::pair<int, Polynomial>>> lifted_; // i<j packed
  int pack(int i, int j) const; // 1-based, i<j
};

struct JacobiViolation {
  int i, j, k; // 1-based triple
  std::vector<Polynomial> residual;
};

/// All triples with nonzero Jacobi residual; polynomial in the parameters,
/// so parametric families are certified for every parameter value.
std::vector<JacobiViolation> jacobi_residual(const LieAlgebra &alg);

enum class SeriesKind { LowerCentral, Derived };

/// Exact row-reduced bases of the chosen series, starting at g itself and
/// ending with the zero subspace. Throws "not nilpotent" when the lower
/// central series fails to reach zero within dim+1 steps, and
/// std::invalid_argument for parametric algebras (specialize first).
std::vector<QMat> series(const LieAlgebra &alg, SeriesKind kind);

std::pair<int, int> rank_step(const LieAlgebra &alg);

/// depth(i) = largest k with e_i in g^k (1-based values, index 0 unused).
std::vector<int> depths(const LieAlgebra &alg);

/// Basis indices (1-based) outside the derived subalgebra.
std::vector<int> generator_indices(const LieAlgebra &alg);

/// Catalog bases must satisfy c_{ij}^k = 0 unless k > j > i; this is what
/// makes d(L_x)_0 unipotent lower-triangular.
bool is_triangular_basis(const LieAlgebra &alg);

/// Numeric bracket of coordinate vectors (non-parametric algebras).
QVec bracket_vec(const LieAlgebra &alg, const QVec &u, const QVec &v);

} // namespace carnot
