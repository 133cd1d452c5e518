#include "carnot/coords2.hpp"

#include <algorithm>
#include <stdexcept>

namespace carnot {

namespace {

VarTablePtr named_table(const LieAlgebra &alg, const std::string &prefix) {
  std::vector<std::string> coords, params;
  for (int i = 1; i <= alg.dim(); ++i)
    coords.push_back(prefix + std::to_string(i));
  for (int i = 0; i < alg.params()->arity(); ++i)
    params.push_back(alg.params()->name(i));
  return make_table(coords, params);
}

// z(a, b) for elements written over an arbitrary table
std::vector<Polynomial> apply_law(const GroupLaw &g,
                                  const std::vector<Polynomial> &a,
                                  const std::vector<Polynomial> &b,
                                  const VarTablePtr &target) {
  const int n = g.dim();
  std::map<int, Polynomial> images;
  for (int i = 0; i < n; ++i) {
    images[i] = a[i];
    images[n + i] = b[i];
  }
  std::vector<Polynomial> out;
  out.reserve(n);
  for (int k = 0; k < n; ++k)
    out.push_back(g.z[k].substitute(target, images));
  return out;
}

std::vector<int> resolve_order(const std::vector<int> &order, int n) {
  if (order.empty()) return descending_order(n);
  if (static_cast<int>(order.size()) != n)
    throw std::invalid_argument("factor order has wrong length");
  std::vector<bool> seen(n + 1, false);
  for (int o : order) {
    if (o < 1 || o > n || seen[o])
      throw std::invalid_argument("factor order is not a permutation");
    seen[o] = true;
  }
  return order;
}

} // namespace

std::vector<int> descending_order(int n) {
  std::vector<int> o(n);
  for (int i = 0; i < n; ++i) o[i] = n - i;
  return o;
}

std::vector<int> ascending_order(int n) {
  std::vector<int> o(n);
  for (int i = 0; i < n; ++i) o[i] = i + 1;
  return o;
}

PolyMap second_to_first(const GroupLaw &g, const std::vector<int> &order_in) {
  const int n = g.dim();
  auto order = resolve_order(order_in, n);
  auto at = named_table(g.alg, "al");
  // rightmost factor first
  std::vector<Polynomial> acc(n, Polynomial::zero(at));
  acc[order.back() - 1] = Polynomial::variable(at, order.back() - 1);
  for (int i = static_cast<int>(order.size()) - 2; i >= 0; --i) {
    std::vector<Polynomial> factor(n, Polynomial::zero(at));
    factor[order[i] - 1] = Polynomial::variable(at, order[i] - 1);
    acc = apply_law(g, factor, acc, at);
  }
  return PolyMap{at, std::move(acc)};
}

PolyMap first_to_second(const GroupLaw &g, const std::vector<int> &order) {
  const int n = g.dim();
  PolyMap phi = second_to_first(g, order);
  auto at = phi.domain;
  auto ft = named_table(g.alg, "a");
  // phi_k(al) = al_k + f_k(al_1..al_{k-1}); solve upward
  std::vector<Polynomial> psi;
  psi.reserve(n);
  std::map<int, Polynomial> images; // al_j -> psi_j, grows as we solve
  for (int k = 0; k < n; ++k) {
    Polynomial f = phi.comps[k] - Polynomial::variable(at, k);
    Polynomial pk = Polynomial::variable(ft, k) - f.substitute(ft, images);
    images[k] = pk;
    psi.push_back(std::move(pk));
  }
  return PolyMap{ft, std::move(psi)};
}

Frame second_frame(const GroupLaw &g, const std::vector<int> &order) {
  const int n = g.dim();
  PolyMap phi = second_to_first(g, order);
  PolyMap psi = first_to_second(g, order);
  auto xt = x_table(g.alg);
  // Phi written over x (second-kind coordinates renamed to x)
  std::map<int, Polynomial> al_to_x;
  for (int i = 0; i < n; ++i) al_to_x[i] = Polynomial::variable(xt, i);
  std::vector<Polynomial> phi_x;
  for (int k = 0; k < n; ++k)
    phi_x.push_back(phi.comps[k].substitute(xt, al_to_x));
  std::map<int, Polynomial> a_to_phi; // a_j -> Phi_j(x)
  for (int i = 0; i < n; ++i) a_to_phi[i] = phi_x[i];

  PolyMatrix jpsi(n, n, xt); // J_Psi evaluated at Phi(x)
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      jpsi.at(i, j) = psi.comps[i].partial(j).substitute(xt, a_to_phi);

  PolyMatrix m = d_translation(g, Side::Left);
  PolyMatrix m_phi(n, n, xt);
  std::map<int, Polynomial> x_to_phi;
  for (int i = 0; i < n; ++i) x_to_phi[i] = phi_x[i];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m_phi.at(i, j) = m.at(i, j).substitute(xt, x_to_phi);

  return Frame{jpsi * m_phi};
}

CheckReport roundtrip_check(const GroupLaw &g, const std::vector<int> &order) {
  CheckReport rep;
  const int n = g.dim();
  PolyMap phi = second_to_first(g, order);
  PolyMap psi = first_to_second(g, order);
  std::map<int, Polynomial> a_to_phi;
  for (int i = 0; i < n; ++i) a_to_phi[i] = phi.comps[i];
  for (int k = 0; k < n; ++k) {
    Polynomial back = psi.comps[k].substitute(phi.domain, a_to_phi);
    if (!(back == Polynomial::variable(phi.domain, k)))
      rep.fail("coords2 roundtrip: component " + std::to_string(k + 1));
  }
  std::map<int, Polynomial> al_to_psi;
  for (int i = 0; i < n; ++i) al_to_psi[i] = psi.comps[i];
  for (int k = 0; k < n; ++k) {
    Polynomial fwd = phi.comps[k].substitute(psi.domain, al_to_psi);
    if (!(fwd == Polynomial::variable(psi.domain, k)))
      rep.fail("coords2 roundtrip (other direction): component " +
               std::to_string(k + 1));
  }
  return rep;
}

} // namespace carnot
