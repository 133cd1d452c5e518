#include "carnot/gradings.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace carnot {

int homogeneous_dimension(const Grading &weights) {
  int q = 0;
  for (size_t i = 1; i < weights.size(); ++i) q += weights[i];
  return q;
}

CheckReport verify_grading(const LieAlgebra &alg, const Grading &weights,
                           bool stratified) {
  CheckReport rep;
  const int n = alg.dim();
  if (static_cast<int>(weights.size()) != n + 1) {
    rep.fail("grading: weight vector length mismatch");
    return rep;
  }
  for (const auto &[ij, vec] : alg.constants())
    for (const auto &[k, c] : vec)
      if (!c.is_zero() &&
          weights[k] != weights[ij.first] + weights[ij.second])
        rep.fail("grading: weight(" + std::to_string(k) +
                 ") != weight(" + std::to_string(ij.first) + ") + weight(" +
                 std::to_string(ij.second) + ")");
  if (!stratified || !rep.ok) return rep;
  if (alg.is_parametric()) {
    rep.fail("grading: stratification check needs specialized parameters");
    return rep;
  }
  int top = *std::max_element(weights.begin() + 1, weights.end());
  auto layer = [&](int d) {
    QMat rows;
    for (int i = 1; i <= n; ++i)
      if (weights[i] == d) {
        QVec e(n, Rat(0));
        e[i - 1] = 1;
        rows.push_back(std::move(e));
      }
    return rows;
  };
  QMat v1 = layer(1);
  QMat cur = v1;
  for (int d = 2; d <= top; ++d) {
    QMat want = layer(d);
    QMat got;
    for (const auto &a : v1)
      for (const auto &b : cur) got.push_back(bracket_vec(alg, a, b));
    if (!q_same_row_space(got, want)) {
      rep.fail("stratification: [V_1, V_" + std::to_string(d - 1) +
               "] != V_" + std::to_string(d));
      return rep;
    }
    cur = std::move(want);
  }
  return rep;
}

Grading natural_grading(const LieAlgebra &alg) {
  auto d = depths(alg);
  return Grading(d.begin(), d.end());
}

bool stratification_exists(const LieAlgebra &alg) {
  if (alg.is_parametric())
    throw std::invalid_argument("stratification_exists: specialize first");
  const int n = alg.dim();
  auto gens = generator_indices(alg);
  std::vector<bool> is_gen(n + 1, false);
  for (int g : gens) is_gen[g] = true;
  // unknown D_{a,b} (a,b 1-based) at column (a-1)*n + (b-1)
  auto col = [n](int a, int b) { return (a - 1) * n + (b - 1); };
  auto cval = [&](int i, int j, int k) -> Rat { // c_{ij}^k, any i,j
    if (i == j) return 0;
    int sign = 1;
    if (i > j) {
      std::swap(i, j);
      sign = -1;
    }
    for (const auto &[kk, c] : alg.pair_coeffs(i, j))
      if (kk == k) return Rat(sign) * c.constant_value();
    return 0;
  };
  QMat rows;
  QVec rhs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        QVec row(static_cast<size_t>(n) * n, Rat(0));
        bool nonzero = false;
        for (int m = 1; m <= n; ++m) {
          Rat c = cval(i, j, m);
          if (c != 0) {
            row[col(k, m)] += c;
            nonzero = true;
          }
        }
        for (int a = 1; a <= n; ++a) {
          Rat c = cval(a, j, k);
          if (c != 0) {
            row[col(a, i)] -= c;
            nonzero = true;
          }
          Rat c2 = cval(i, a, k);
          if (c2 != 0) {
            row[col(a, j)] -= c2;
            nonzero = true;
          }
        }
        if (nonzero) {
          rows.push_back(std::move(row));
          rhs.push_back(0);
        }
      }
  // D == id on the generator layer modulo the derived subalgebra
  for (int a : gens)
    for (int b = 1; b <= n; ++b)
      if (is_gen[b]) {
        QVec row(static_cast<size_t>(n) * n, Rat(0));
        row[col(b, a)] = 1;
        rows.push_back(std::move(row));
        rhs.push_back(a == b ? 1 : 0);
      }
  for (size_t i = 0; i < rows.size(); ++i) rows[i].push_back(rhs[i]);
  auto pivots = q_rref(rows);
  return pivots.empty() ||
         pivots.back() != static_cast<int>(static_cast<size_t>(n) * n);
}

QMat standard_polarization(const LieAlgebra &alg,
                           const std::map<std::pair<int, int>, Rat> &u) {
  const int n = alg.dim();
  auto gens = generator_indices(alg);
  std::vector<bool> is_gen(n + 1, false);
  for (int g : gens) is_gen[g] = true;
  for (const auto &[aj, val] : u) {
    if (!is_gen[aj.first])
      throw std::invalid_argument("polarization: row index " +
                                  std::to_string(aj.first) +
                                  " is not a generator");
    if (is_gen[aj.second])
      throw std::invalid_argument("polarization: correction index " +
                                  std::to_string(aj.second) +
                                  " is not in the derived subalgebra");
  }
  QMat rows;
  for (int a : gens) {
    QVec v(n, Rat(0));
    v[a - 1] = 1;
    for (const auto &[aj, val] : u)
      if (aj.first == a) v[aj.second - 1] = val;
    rows.push_back(std::move(v));
  }
  return rows;
}

namespace {

ConeResult graded_of_filtration(const LieAlgebra &alg,
                                const std::vector<QMat> &flt,
                                bool ascending) {
  // ascending: F_1 <= F_2 <= ... = g (polarization);
  // descending: flt[k] = g^{k+1} chain from the lcs.
  const int n = alg.dim();
  QMat acc;
  std::vector<QVec> adapted;
  Grading weights(1, 0);
  if (ascending) {
    for (size_t k = 0; k < flt.size(); ++k) {
      QMat basis = flt[k];
      for (auto &row : basis)
        if (q_rref_try_add(acc, row)) {
          adapted.push_back(row);
          weights.push_back(static_cast<int>(k) + 1);
        }
    }
  } else {
    // stage k complement of g^{k+1} inside g^k
    for (size_t k = 0; k + 1 < flt.size(); ++k) {
      QMat stage_acc = flt[k + 1];
      QMat basis = flt[k];
      for (auto &row : basis)
        if (q_rref_try_add(stage_acc, row)) {
          adapted.push_back(row);
          weights.push_back(static_cast<int>(k) + 1);
        }
    }
  }
  if (static_cast<int>(adapted.size()) != n)
    throw std::logic_error("adapted basis has wrong size");
  QMat t(adapted.begin(), adapted.end());
  QMat tt(n, QVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) tt[i][j] = t[j][i];
  auto ttinv = q_inverse(tt);
  if (!ttinv) throw std::logic_error("adapted basis not invertible");

  ConeResult out;
  out.adapted = t;
  out.weights = weights;
  out.cone = LieAlgebra(n, make_table({}));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      QVec w = bracket_vec(alg, t[i - 1], t[j - 1]);
      QVec d = q_mul_vec(*ttinv, w);
      int sum = weights[i] + weights[j];
      for (int k = 1; k <= n; ++k) {
        if (d[k - 1] == 0) continue;
        if (weights[k] == sum)
          out.cone.add_bracket(i, j, k, d[k - 1]);
        else if ((ascending && weights[k] > sum) ||
                 (!ascending && weights[k] < sum))
          throw std::logic_error("filtration not multiplicative");
        // remaining components die in the associated graded
      }
    }
  out.hausdorff_dimension = homogeneous_dimension(weights);
  return out;
}

} // namespace

ConeResult polarization_cone(const LieAlgebra &alg, const QMat &delta) {
  if (alg.is_parametric())
    throw std::invalid_argument("polarization_cone: specialize first");
  const int n = alg.dim();
  auto lcs = series(alg, SeriesKind::LowerCentral);
  const QMat &derived = lcs.size() > 1 ? lcs[1] : QMat{};
  QMat check = delta;
  for (const auto &r : derived) check.push_back(r);
  if (q_rank(delta) != n - static_cast<int>(derived.size()) ||
      q_rank(check) != n)
    throw std::domain_error("polarization not complementary to the derived "
                            "subalgebra");
  std::vector<QMat> flt;
  flt.push_back(q_row_basis(delta));
  while (true) {
    const QMat &cur = flt.back();
    QMat next = cur;
    for (const auto &a : flt.front())
      for (const auto &b : cur) next.push_back(bracket_vec(alg, a, b));
    next = q_row_basis(next);
    if (next.size() == cur.size()) {
      if (static_cast<int>(cur.size()) != n)
        throw std::domain_error("polarization does not generate");
      break;
    }
    flt.push_back(std::move(next));
  }
  ConeResult out = graded_of_filtration(alg, flt, true);
  for (const auto &f : flt)
    out.filtration_dims.push_back(static_cast<int>(f.size()));
  return out;
}

ConeResult asymptotic_cone(const LieAlgebra &alg) {
  if (alg.is_parametric())
    throw std::invalid_argument("asymptotic_cone: specialize first");
  auto lcs = series(alg, SeriesKind::LowerCentral);
  ConeResult out = graded_of_filtration(alg, lcs, false);
  for (size_t k = 0; k + 1 < lcs.size(); ++k)
    out.filtration_dims.push_back(static_cast<int>(lcs[k].size()));
  return out;
}

std::vector<Polynomial> automorphism_residual(const LieAlgebra &alg,
                                              const PolyMatrix &a) {
  const int n = alg.dim();
  if (a.rows() != n || a.cols() != n)
    throw std::invalid_argument("automorphism matrix shape mismatch");
  if (a.det().is_zero())
    throw std::domain_error("matrix singular for every parameter value");
  BoundAlgebra bound(alg, a.table());
  auto column = [&](int j) {
    Element e = Element::zero(a.table(), n);
    for (int i = 0; i < n; ++i) e.coords[i] = a.at(i, j);
    return e;
  };
  std::vector<Polynomial> residuals;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      Element rhs = bound.bracket(column(i - 1), column(j - 1));
      Element lhs = Element::zero(a.table(), n);
      for (const auto &[k, c] : bound.basis_bracket(i, j))
        for (int t = 0; t < n; ++t) lhs.coords[t] += c * a.at(t, k - 1);
      for (int t = 0; t < n; ++t) {
        Polynomial r = lhs.coords[t] - rhs.coords[t];
        if (!r.is_zero()) residuals.push_back(std::move(r));
      }
    }
  // normalize leading coefficient, drop duplicates
  std::vector<Polynomial> out;
  for (auto &r : residuals) {
    Rat lead = r.terms().begin()->second;
    Polynomial norm = r * (Rat(1) / lead);
    bool dup = false;
    for (const auto &o : out) dup = dup || o == norm;
    if (!dup) out.push_back(std::move(norm));
  }
  return out;
}

CheckReport verify_isomorphism(const QMat &a, const LieAlgebra &source,
                               const LieAlgebra &target) {
  CheckReport rep;
  if (source.dim() != target.dim()) {
    rep.fail("isomorphism: dimension mismatch");
    return rep;
  }
  const int n = source.dim();
  if (!q_inverse(a)) {
    rep.fail("isomorphism: matrix not invertible");
    return rep;
  }
  auto col = [&](int j) {
    QVec v(n);
    for (int i = 0; i < n; ++i) v[i] = a[i][j];
    return v;
  };
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      QVec rhs = bracket_vec(target, col(i - 1), col(j - 1));
      QVec e_i(n, Rat(0)), e_j(n, Rat(0));
      e_i[i - 1] = 1;
      e_j[j - 1] = 1;
      QVec w = bracket_vec(source, e_i, e_j);
      QVec lhs = q_mul_vec(a, w);
      if (lhs != rhs) {
        rep.fail("isomorphism: bracket (" + std::to_string(i) + "," +
                 std::to_string(j) + ") not intertwined");
        return rep;
      }
    }
  return rep;
}

std::string Fingerprint::text() const {
  std::ostringstream os;
  os << "dim=" << dim << " step=" << step << " rank=" << rank
     << " center=" << center_dim << " lcs=[";
  for (size_t i = 0; i < lcs_dims.size(); ++i)
    os << (i ? "," : "") << lcs_dims[i];
  os << "] derived=[";
  for (size_t i = 0; i < derived_dims.size(); ++i)
    os << (i ? "," : "") << derived_dims[i];
  os << "] graded=[";
  for (size_t i = 0; i < graded_dims.size(); ++i)
    os << (i ? "," : "") << graded_dims[i];
  os << "]";
  return os.str();
}

Fingerprint fingerprint(const LieAlgebra &alg) {
  Fingerprint fp;
  fp.dim = alg.dim();
  auto lcs = series(alg, SeriesKind::LowerCentral);
  auto der = series(alg, SeriesKind::Derived);
  for (const auto &m : lcs) fp.lcs_dims.push_back(static_cast<int>(m.size()));
  for (const auto &m : der)
    fp.derived_dims.push_back(static_cast<int>(m.size()));
  auto [rank, step] = rank_step(alg);
  fp.rank = rank;
  fp.step = step;
  for (size_t k = 0; k + 1 < lcs.size(); ++k)
    fp.graded_dims.push_back(static_cast<int>(lcs[k].size() - lcs[k + 1].size()));
  // center = kernel of x -> ([x, e_j])_j
  const int n = alg.dim();
  QMat m;
  for (int j = 1; j <= n; ++j) {
    QVec e_j(n, Rat(0));
    e_j[j - 1] = 1;
    for (int k = 0; k < n; ++k) {
      QVec row(n);
      for (int i = 1; i <= n; ++i) {
        QVec e_i(n, Rat(0));
        e_i[i - 1] = 1;
        row[i - 1] = bracket_vec(alg, e_i, e_j)[k];
      }
      m.push_back(std::move(row));
    }
  }
  // columns index x; rank of the stacked map
  QMat mt(n, QVec(m.size()));
  for (size_t r = 0; r < m.size(); ++r)
    for (int c = 0; c < n; ++c) mt[c][r] = m[r][c];
  fp.center_dim = n - q_rank(mt);
  return fp;
}

} // namespace carnot
