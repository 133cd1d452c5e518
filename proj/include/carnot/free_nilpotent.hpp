#pragma once

#include "carnot/lie.hpp"
#include "carnot/report.hpp"

#include <string>
#include <vector>

namespace carnot {

/// Hall-type basis of the free nilpotent Lie algebra on `rank` generators,
/// truncated at `step`. Each element beyond the generators is a bracket of
/// two earlier basis elements, so the table doubles as a construction DAG.
struct HallBasis {
  int rank = 0, step = 0;
  struct Node {
    int degree = 1;
    int gen = 0;          // 1-based generator index for leaves, else 0
    int left = 0, right = 0; // 1-based basis indices for bracket nodes
  };
  std::vector<Node> elems; // elems[0] unused; basis indices are 1-based

  int dim() const { return static_cast<int>(elems.size()) - 1; }
  int degree_of(int i) const { return elems[i].degree; }
  std::string bracket_text(int i) const; // e.g. "[X1,[X2,X3]]"
};

/// Number of degree-d basis elements of the free Lie algebra on r letters:
/// (1/d) sum_{e|d} mu(e) r^(d/e).
Int witt_dimension(int r, int d);

struct FreeNilpotent {
  HallBasis basis;
  LieAlgebra alg; // structure constants over the Hall basis
};

/// Deterministic construction. Degree 3 keeps [X_g,[X_a,X_b]] unless
/// a < g < b; higher degrees select a maximal independent candidate set by
/// descending enumeration, verified exactly in the tensor algebra.
/// Requires r >= 1, 1 <= s <= 6, total dimension <= 23.
HallBasis hall_basis(int r, int s);

FreeNilpotent free_structure_constants(int r, int s);

/// Extends the generator-to-generator map to a homomorphism F_{r,s} -> L
/// along the Hall DAG and checks that it intertwines brackets and is
/// surjective. L must be non-parametric with rank r and step <= s.
CheckReport universal_property_check(const FreeNilpotent &free,
                                     const LieAlgebra &target);

/// Functoriality of exponential coordinates: the surjection h extends to the
/// groups, i.e. z_target(h x, h y) = h(z_free(x, y)) as polynomial identity.
CheckReport law_compatibility_check(const FreeNilpotent &free,
                                    const LieAlgebra &target);

} // namespace carnot
