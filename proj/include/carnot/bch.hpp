#pragma once

#include "carnot/lie.hpp"
#include "carnot/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace carnot {

/// Polynomial group law z(x, y) in exponential coordinates of the first kind.
struct GroupLaw {
  LieAlgebra alg;
  VarTablePtr table;         // x1..xn, y1..yn, parameters
  std::vector<Polynomial> z; // n coordinates

  int dim() const { return alg.dim(); }
  Element x_point() const;
  Element y_point() const;
};

/// Truncated Dynkin series in the nilpotent algebra bound to `table`:
///   Z = sum_{m>=1} ((-1)^(m-1)/m) sum [X^r1 Y^s1 ... X^rm Y^sm]
///       / ((sum ri+si) * prod ri! si!)
/// with right-nested commutator words, truncated at total degree `step`.
/// `prune_structural_zeros` skips words whose innermost bracket is [X,X] or
/// [Y,Y]; the unpruned sum is kept reachable as a test oracle.
Element bch_truncated(const BoundAlgebra &bound, const Element &x,
                      const Element &y, int step,
                      bool prune_structural_zeros = true);

/// Group law of a nilpotent algebra of step <= 6 (throws
/// "unsupported truncation depth" beyond the catalog's range).
GroupLaw group_law(const LieAlgebra &alg);

struct SampleSpec {
  int count = 100;
  uint64_t seed = 1;
};

/// Identity, inverse, BCH antisymmetry, one-parameter-line property, and
/// associativity. `symbolic` proves polynomial identities; `sampled`
/// evaluates associativity at random rational triples (small denominators).
CheckReport law_checks_symbolic(const GroupLaw &g,
                                bool symbolic_associativity = true);
CheckReport law_checks_sampled(const GroupLaw &g, const SampleSpec &spec);

/// z_k(delta_r x, delta_r y) = r^(w_k) z_k(x, y) with a fresh parameter r.
CheckReport dilation_check(const GroupLaw &g, const std::vector<int> &weights);

/// Max over monomials of the weight-sum of coordinate variables
/// (parameters weigh zero).
int weighted_degree(const Polynomial &p, const std::vector<int> &var_weights);

} // namespace carnot
