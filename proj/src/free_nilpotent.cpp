#include "carnot/free_nilpotent.hpp"

#include "carnot/bch.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace carnot {

std::string HallBasis::bracket_text(int i) const {
  const Node &n = elems[i];
  if (n.gen > 0) return "X" + std::to_string(n.gen);
  return "[" + bracket_text(n.left) + "," + bracket_text(n.right) + "]";
}

namespace {

std::vector<int> divisors(int d) {
  std::vector<int> out;
  for (int e = 1; e <= d; ++e)
    if (d % e == 0) out.push_back(e);
  return out;
}

int moebius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

Int ipow(int r, int e) {
  Int x = 1;
  for (int i = 0; i < e; ++i) x *= r;
  return x;
}

} // namespace

Int witt_dimension(int r, int d) {
  if (r < 1 || d < 1) throw std::domain_error("witt_dimension: bad arguments");
  Int sum = 0;
  for (int e : divisors(d)) sum += Int(moebius(e)) * ipow(r, d / e);
  return sum / d;
}

namespace {

// Dense tensor-algebra coordinates of degree-d words over r letters.
int word_space_dim(int r, int d) {
  int n = 1;
  for (int i = 0; i < d; ++i) n *= r;
  return n;
}

// tensor coords of each basis element, concatenation product
QVec tensor_bracket(const QVec &a, int da, const QVec &b, int db, int r) {
  int na = word_space_dim(r, da), nb = word_space_dim(r, db);
  QVec out(static_cast<size_t>(na) * nb, Rat(0));
  for (int i = 0; i < na; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < nb; ++j) {
      if (b[j] == 0) continue;
      out[static_cast<size_t>(i) * nb + j] += a[i] * b[j]; // a ss b
      out[static_cast<size_t>(j) * na + i] -= a[i] * b[j]; // -b ss a
    }
  }
  return out;
}

struct Builder {
  int r, s;
  HallBasis hb;
  std::vector<QVec> tensor;       // per basis element (1-based)
  std::vector<std::vector<int>> by_degree; // basis indices per degree

  void add(HallBasis::Node n, QVec t) {
    hb.elems.push_back(n);
    tensor.push_back(std::move(t));
    by_degree[n.degree].push_back(hb.dim());
  }

  void build() {
    hb.rank = r;
    hb.step = s;
    hb.elems.resize(1);
    tensor.resize(1);
    by_degree.assign(s + 1, {});
    for (int g = 1; g <= r; ++g) {
      QVec t(r, Rat(0));
      t[g - 1] = 1;
      add({1, g, 0, 0}, std::move(t));
    }
    for (int i = 1; i <= r; ++i)
      for (int j = i + 1; j <= r; ++j)
        if (s >= 2)
          add({2, 0, i, j},
              tensor_bracket(tensor[i], 1, tensor[j], 1, r));
    if (s >= 3) degree3();
    for (int d = 4; d <= s; ++d) degree_ge4(d);
    // dimension sanity against the Witt formula
    for (int d = 1; d <= s; ++d)
      if (Int(static_cast<long>(by_degree[d].size())) != witt_dimension(r, d))
        throw std::logic_error("hall basis degree " + std::to_string(d) +
                               " has wrong dimension");
  }

  void degree3() {
    // [X_g, [X_a, X_b]] kept unless a < g < b; one Jacobi relation binds the
    // three all-distinct trees per generator triple, and this choice matches
    // the catalog's published tables.
    for (int g = 1; g <= r; ++g)
      for (int p : by_degree[2]) {
        int a = hb.elems[p].left, b = hb.elems[p].right;
        if (a < g && g < b) continue;
        add({3, 0, g, p},
            tensor_bracket(tensor[g], 1, tensor[p], 2, r));
      }
  }

  void degree_ge4(int d) {
    // candidates (s,t), s < t as basis indices, enumerated descending;
    // a maximal independent subset is kept and then indexed ascending.
    std::vector<std::pair<int, int>> cands;
    for (int i = 1; i <= hb.dim(); ++i)
      for (int j = i + 1; j <= hb.dim(); ++j)
        if (hb.elems[i].degree + hb.elems[j].degree == d)
          cands.emplace_back(i, j);
    std::sort(cands.begin(), cands.end(), std::greater<>());
    QMat span;
    std::vector<std::pair<std::pair<int, int>, QVec>> kept;
    for (auto &[i, j] : cands) {
      QVec t = tensor_bracket(tensor[i], hb.elems[i].degree, tensor[j],
                              hb.elems[j].degree, r);
      if (q_rref_try_add(span, t)) kept.push_back({{i, j}, std::move(t)});
    }
    std::sort(kept.begin(), kept.end(),
              [](auto &a, auto &b) { return a.first < b.first; });
    for (auto &[ij, t] : kept)
      add({d, 0, ij.first, ij.second}, std::move(t));
  }
};

} // namespace

HallBasis hall_basis(int r, int s) {
  if (r < 1 || s < 1 || s > 6)
    throw std::domain_error("hall_basis: rank/step out of range");
  Int total = 0;
  for (int d = 1; d <= s; ++d) total += witt_dimension(r, d);
  if (total > 23)
    throw std::domain_error("hall_basis: dimension beyond supported range");
  Builder b{r, s};
  b.build();
  return b.hb;
}

FreeNilpotent free_structure_constants(int r, int s) {
  Builder b{r, s};
  if (r < 1 || s < 1 || s > 6)
    throw std::domain_error("free_structure_constants: rank/step out of range");
  Int total = 0;
  for (int d = 1; d <= s; ++d) total += witt_dimension(r, d);
  if (total > 23)
    throw std::domain_error(
        "free_structure_constants: dimension beyond supported range");
  b.build();
  const HallBasis &hb = b.hb;
  const int n = hb.dim();
  LieAlgebra alg(n, make_table({}));
  alg.meta.id = "F_" + std::to_string(r) + "_" + std::to_string(s);
  // per-degree solve: express commutators in the kept basis
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      int d = hb.elems[i].degree + hb.elems[j].degree;
      if (d > s) continue; // bracket is zero in the truncation
      QVec t = tensor_bracket(b.tensor[i], hb.elems[i].degree, b.tensor[j],
                              hb.elems[j].degree, r);
      const auto &idxs = b.by_degree[d];
      QMat a(t.size(), QVec(idxs.size(), Rat(0)));
      for (size_t col = 0; col < idxs.size(); ++col)
        for (size_t row = 0; row < t.size(); ++row)
          a[row][col] = b.tensor[idxs[col]][row];
      auto sol = q_solve(a, t);
      if (!sol)
        throw std::logic_error("free bracket not in basis span");
      for (size_t col = 0; col < idxs.size(); ++col)
        if ((*sol)[col] != 0) alg.add_bracket(i, j, idxs[col], (*sol)[col]);
    }
  return FreeNilpotent{hb, std::move(alg)};
}

namespace {

// images of the free basis under the generator-to-generator extension
std::vector<QVec> hom_images(const FreeNilpotent &free,
                             const LieAlgebra &target) {
  auto gens = generator_indices(target);
  const int nf = free.basis.dim();
  const int nt = target.dim();
  std::vector<QVec> image(nf + 1);
  for (int i = 1; i <= nf; ++i) {
    const auto &node = free.basis.elems[i];
    if (node.gen > 0) {
      QVec v(nt, Rat(0));
      v[gens[node.gen - 1] - 1] = 1;
      image[i] = std::move(v);
    } else {
      image[i] = bracket_vec(target, image[node.left], image[node.right]);
    }
  }
  return image;
}

} // namespace

CheckReport law_compatibility_check(const FreeNilpotent &free,
                                    const LieAlgebra &target) {
  CheckReport rep;
  if (target.is_parametric()) {
    rep.fail("law compatibility: parametric target (specialize first)");
    return rep;
  }
  auto gens = generator_indices(target);
  if (static_cast<int>(gens.size()) != free.basis.rank) {
    rep.fail("law compatibility: rank mismatch");
    return rep;
  }
  auto image = hom_images(free, target);
  const int nf = free.basis.dim();
  const int nt = target.dim();
  GroupLaw gf = group_law(free.alg);
  GroupLaw gt = group_law(target);
  // h x, h y written over the free law table
  std::map<int, Polynomial> images;
  for (int k = 0; k < nt; ++k) {
    Polynomial hx = Polynomial::zero(gf.table);
    Polynomial hy = Polynomial::zero(gf.table);
    for (int j = 0; j < nf; ++j) {
      if (image[j + 1][k] != 0) {
        hx += Polynomial::variable(gf.table, j) * image[j + 1][k];
        hy += Polynomial::variable(gf.table, nf + j) * image[j + 1][k];
      }
    }
    images[k] = std::move(hx);
    images[nt + k] = std::move(hy);
  }
  for (int k = 0; k < nt; ++k) {
    Polynomial lhs = gt.z[k].substitute(gf.table, images);
    Polynomial rhs = Polynomial::zero(gf.table);
    for (int j = 0; j < nf; ++j)
      if (image[j + 1][k] != 0) rhs += gf.z[j] * image[j + 1][k];
    if (!(lhs == rhs)) {
      rep.fail("law compatibility: coordinate " + std::to_string(k + 1));
      return rep;
    }
  }
  return rep;
}

CheckReport universal_property_check(const FreeNilpotent &free,
                                     const LieAlgebra &target) {
  CheckReport rep;
  if (target.is_parametric()) {
    rep.fail("universal property: parametric target (specialize first)");
    return rep;
  }
  auto gens = generator_indices(target);
  if (static_cast<int>(gens.size()) != free.basis.rank) {
    rep.fail("universal property: rank mismatch");
    return rep;
  }
  const int nf = free.basis.dim();
  const int nt = target.dim();
  auto image = hom_images(free, target);
  // intertwines: h([f_i, f_j]) = [h f_i, h f_j]
  for (int i = 1; i <= nf; ++i)
    for (int j = i + 1; j <= nf; ++j) {
      QVec rhs = bracket_vec(target, image[i], image[j]);
      QVec lhs(nt, Rat(0));
      for (const auto &[k, c] : free.alg.pair_coeffs(i, j))
        for (int t = 0; t < nt; ++t)
          lhs[t] += c.constant_value() * image[k][t];
      if (lhs != rhs) {
        rep.fail("universal property: bracket (" + std::to_string(i) + "," +
                 std::to_string(j) + ") not intertwined");
        return rep;
      }
    }
  QMat h(image.begin() + 1, image.end());
  if (q_rank(h) != nt) rep.fail("universal property: map not surjective");
  return rep;
}

} // namespace carnot
