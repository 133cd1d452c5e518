#include "carnot/lie.hpp"

#include <algorithm>
#include <stdexcept>

namespace carnot {

const std::vector<std::pair<int, Polynomial>> LieAlgebra::empty_{};

LieAlgebra::LieAlgebra(int dim, VarTablePtr params)
    : dim_(dim), params_(std::move(params)) {
  if (!params_) params_ = make_table({});
}

bool LieAlgebra::is_parametric() const { return params_->arity() > 0; }

void LieAlgebra::add_bracket(int i, int j, int k, Polynomial coeff) {
  if (i < 1 || j < 1 || k < 1 || i > dim_ || j > dim_ || k > dim_)
    throw std::out_of_range("bracket index out of range");
  if (i == j) throw std::invalid_argument("bracket needs i != j");
  if (coeff.is_zero()) return;
  if (i > j) {
    std::swap(i, j);
    coeff = -coeff;
  }
  auto &vec = constants_[{i, j}];
  for (auto &[kk, c] : vec)
    if (kk == k) {
      c += coeff;
      if (c.is_zero())
        vec.erase(std::remove_if(vec.begin(), vec.end(),
                                 [&](auto &p) { return p.first == k; }),
                  vec.end());
      return;
    }
  vec.emplace_back(k, std::move(coeff));
  std::sort(vec.begin(), vec.end(),
            [](auto &a, auto &b) { return a.first < b.first; });
}

void LieAlgebra::add_bracket(int i, int j, int k, const Rat &coeff) {
  add_bracket(i, j, k, Polynomial::constant(params_, coeff));
}

const std::vector<std::pair<int, Polynomial>> &
LieAlgebra::pair_coeffs(int i, int j) const {
  auto it = constants_.find({i, j});
  return it == constants_.end() ? empty_ : it->second;
}

LieAlgebra LieAlgebra::specialize(const QVec &values) const {
  if (static_cast<int>(values.size()) != params_->arity())
    throw std::invalid_argument("specialize: wrong number of parameters");
  LieAlgebra out(dim_, make_table({}));
  out.meta = meta;
  for (const auto &[ij, vec] : constants_)
    for (const auto &[k, c] : vec)
      out.add_bracket(ij.first, ij.second, k, c.eval(values));
  return out;
}

LieAlgebra direct_product(const LieAlgebra &a, const LieAlgebra &b) {
  if (a.is_parametric() || b.is_parametric())
    throw std::invalid_argument("direct_product: parametric factors");
  LieAlgebra out(a.dim() + b.dim(), make_table({}));
  for (const auto &[ij, vec] : a.constants())
    for (const auto &[k, c] : vec)
      out.add_bracket(ij.first, ij.second, k, c.constant_value());
  int off = a.dim();
  for (const auto &[ij, vec] : b.constants())
    for (const auto &[k, c] : vec)
      out.add_bracket(ij.first + off, ij.second + off, k + off,
                      c.constant_value());
  return out;
}

Element Element::zero(VarTablePtr t, int dim) {
  Element e;
  e.table = t;
  e.coords.assign(dim, Polynomial::zero(t));
  return e;
}

Element Element::operator+(const Element &o) const {
  Element r = *this;
  for (size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
  return r;
}

Element Element::operator-(const Element &o) const {
  Element r = *this;
  for (size_t i = 0; i < coords.size(); ++i) r.coords[i] -= o.coords[i];
  return r;
}

Element Element::operator*(const Rat &c) const {
  Element r = *this;
  for (auto &p : r.coords) p = p * c;
  return r;
}

bool Element::is_zero() const {
  for (const auto &p : coords)
    if (!p.is_zero()) return false;
  return true;
}

int BoundAlgebra::pack(int i, int j) const {
  // 1-based i<j -> linear index
  return (i - 1) * dim_ - (i * (i - 1)) / 2 + (j - i - 1);
}

BoundAlgebra::BoundAlgebra(const LieAlgebra &alg, VarTablePtr table)
    : dim_(alg.dim()), table_(std::move(table)) {
  lifted_.resize(static_cast<size_t>(dim_) * (dim_ - 1) / 2);
  for (const auto &[ij, vec] : alg.constants()) {
    auto &dst = lifted_[pack(ij.first, ij.second)];
    for (const auto &[k, c] : vec)
      dst.emplace_back(k, c.substitute(table_, {}));
  }
}

std::vector<std::pair<int, Polynomial>> BoundAlgebra::basis_bracket(int i,
                                                                    int j) const {
  if (i == j) return {};
  bool flip = i > j;
  if (flip) std::swap(i, j);
  auto vec = lifted_[pack(i, j)];
  if (flip)
    for (auto &[k, c] : vec) c = -c;
  return vec;
}

Element BoundAlgebra::bracket(const Element &u, const Element &v) const {
  Element r = Element::zero(table_, dim_);
  for (int i = 1; i <= dim_; ++i) {
    const Polynomial &ui = u.coords[i - 1];
    const Polynomial &vi = v.coords[i - 1];
    if (ui.is_zero() && vi.is_zero()) continue;
    for (int j = i + 1; j <= dim_; ++j) {
      const auto &cs = lifted_[pack(i, j)];
      if (cs.empty()) continue;
      Polynomial w = ui * v.coords[j - 1] - u.coords[j - 1] * vi;
      if (w.is_zero()) continue;
      for (const auto &[k, c] : cs) r.coords[k - 1] += c * w;
    }
  }
  return r;
}

std::vector<JacobiViolation> jacobi_residual(const LieAlgebra &alg) {
  const int n = alg.dim();
  BoundAlgebra bound(alg, alg.params());
  auto basis = [&](int i) {
    Element e = Element::zero(alg.params(), n);
    e.coords[i - 1] = Polynomial::constant(alg.params(), 1);
    return e;
  };
  std::vector<JacobiViolation> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        Element r = bound.bracket(bound.bracket(basis(i), basis(j)), basis(k)) +
                    bound.bracket(bound.bracket(basis(j), basis(k)), basis(i)) +
                    bound.bracket(bound.bracket(basis(k), basis(i)), basis(j));
        if (!r.is_zero()) {
          JacobiViolation v{i, j, k, {}};
          v.residual = r.coords;
          out.push_back(std::move(v));
        }
      }
  return out;
}

QVec bracket_vec(const LieAlgebra &alg, const QVec &u, const QVec &v) {
  if (alg.is_parametric())
    throw std::invalid_argument("bracket_vec: parametric algebra");
  const int n = alg.dim();
  QVec r(n, Rat(0));
  for (const auto &[ij, vec] : alg.constants()) {
    auto [i, j] = ij;
    Rat w = u[i - 1] * v[j - 1] - u[j - 1] * v[i - 1];
    if (w == 0) continue;
    for (const auto &[k, c] : vec) r[k - 1] += c.constant_value() * w;
  }
  return r;
}

std::vector<QMat> series(const LieAlgebra &alg, SeriesKind kind) {
  if (alg.is_parametric())
    throw std::invalid_argument("series: specialize parameters first");
  const int n = alg.dim();
  std::vector<QMat> chain;
  chain.push_back(q_identity(n));
  while (true) {
    const QMat &cur = chain.back();
    if (cur.empty()) break;
    const QMat &left = (kind == SeriesKind::LowerCentral) ? chain.front() : cur;
    QMat next;
    for (const auto &u : left)
      for (const auto &v : cur) {
        QVec w = bracket_vec(alg, u, v);
        bool nz = false;
        for (const auto &x : w) nz = nz || x != 0;
        if (nz) next.push_back(w);
      }
    next = q_row_basis(next);
    if (static_cast<int>(chain.size()) > n + 1)
      throw std::domain_error("not nilpotent");
    chain.push_back(next);
  }
  return chain;
}

std::pair<int, int> rank_step(const LieAlgebra &alg) {
  auto lcs = series(alg, SeriesKind::LowerCentral);
  int rank = alg.dim() - static_cast<int>(lcs.size() > 1 ? lcs[1].size() : 0);
  // chain is g, g^2, ..., 0: the step counts the nonzero terms
  int step = static_cast<int>(lcs.size()) - 1;
  if (step < 0) step = 0;
  return {rank, step};
}

std::vector<int> depths(const LieAlgebra &alg) {
  auto lcs = series(alg, SeriesKind::LowerCentral);
  const int n = alg.dim();
  std::vector<int> d(n + 1, 1);
  for (int i = 1; i <= n; ++i) {
    QVec e(n, Rat(0));
    e[i - 1] = 1;
    for (size_t k = 1; k + 1 < lcs.size(); ++k)
      if (q_in_row_space(lcs[k], e)) d[i] = static_cast<int>(k) + 1;
  }
  return d;
}

std::vector<int> generator_indices(const LieAlgebra &alg) {
  auto lcs = series(alg, SeriesKind::LowerCentral);
  const int n = alg.dim();
  std::vector<int> out;
  const QMat &derived = lcs.size() > 1 ? lcs[1] : QMat{};
  for (int i = 1; i <= n; ++i) {
    QVec e(n, Rat(0));
    e[i - 1] = 1;
    if (derived.empty() || !q_in_row_space(derived, e)) out.push_back(i);
  }
  return out;
}

bool is_triangular_basis(const LieAlgebra &alg) {
  for (const auto &[ij, vec] : alg.constants())
    for (const auto &[k, c] : vec)
      if (k <= ij.second) return false;
  return true;
}

} // namespace carnot
