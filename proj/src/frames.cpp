#include "carnot/frames.hpp"

namespace carnot {

VarTablePtr x_table(const LieAlgebra &alg) {
  std::vector<std::string> coords, params;
  for (int i = 1; i <= alg.dim(); ++i) coords.push_back("x" + std::to_string(i));
  for (int i = 0; i < alg.params()->arity(); ++i)
    params.push_back(alg.params()->name(i));
  return make_table(coords, params);
}

PolyMatrix d_translation(const GroupLaw &g, Side side) {
  const int n = g.dim();
  auto xt = x_table(g.alg);
  PolyMatrix m(n, n, xt);
  // images collapsing the 2n-variable law onto the x table
  std::map<int, Polynomial> to_x;
  for (int i = 0; i < n; ++i) {
    if (side == Side::Left) {
      to_x[i] = Polynomial::variable(xt, i);      // x_i -> x_i
      to_x[n + i] = Polynomial::zero(xt);         // y_i -> 0
    } else {
      to_x[i] = Polynomial::zero(xt);             // first argument -> 0
      to_x[n + i] = Polynomial::variable(xt, i);  // second argument -> x
    }
  }
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) {
      int var = (side == Side::Left) ? n + j : j;
      m.at(k, j) = g.z[k].partial(var).substitute(xt, to_x);
    }
  return m;
}

Frame left_frame(const GroupLaw &g) { return Frame{d_translation(g, Side::Left)}; }

Coframe left_coframe(const GroupLaw &g) {
  return Coframe{unipotent_inverse(d_translation(g, Side::Left))};
}

CheckReport maurer_cartan_check(const LieAlgebra &alg, const Coframe &cf) {
  CheckReport rep;
  const int n = alg.dim();
  const PolyMatrix &w = cf.w;
  BoundAlgebra bound(alg, w.table());
  for (int k = 0; k < n; ++k) {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        // coefficient of dx_a ^ dx_b in dtheta_k
        Polynomial lhs = w.at(k, b).partial(a) - w.at(k, a).partial(b);
        Polynomial rhs = Polynomial::zero(w.table());
        for (int i = 1; i <= n; ++i)
          for (int j = i + 1; j <= n; ++j)
            for (const auto &[kk, c] : bound.basis_bracket(i, j))
              if (kk == k + 1)
                rhs -= c * (w.at(i - 1, a) * w.at(j - 1, b) -
                            w.at(i - 1, b) * w.at(j - 1, a));
        if (!(lhs == rhs)) {
          rep.fail("maurer-cartan: theta_" + std::to_string(k + 1) +
                   " fails at dx" + std::to_string(a + 1) + "^dx" +
                   std::to_string(b + 1));
          return rep;
        }
      }
  }
  return rep;
}

CheckReport bracket_realization_check(const LieAlgebra &alg, const Frame &fr) {
  CheckReport rep;
  const int n = alg.dim();
  const PolyMatrix &m = fr.m;
  BoundAlgebra bound(alg, m.table());
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      for (int k = 0; k < n; ++k) {
        Polynomial lhs = Polynomial::zero(m.table());
        for (int mm = 0; mm < n; ++mm) {
          if (!m.at(mm, i - 1).is_zero())
            lhs += m.at(mm, i - 1) * m.at(k, j - 1).partial(mm);
          if (!m.at(mm, j - 1).is_zero())
            lhs -= m.at(mm, j - 1) * m.at(k, i - 1).partial(mm);
        }
        Polynomial rhs = Polynomial::zero(m.table());
        for (const auto &[kk, c] : bound.basis_bracket(i, j))
          rhs += c * m.at(k, kk - 1);
        if (!(lhs == rhs)) {
          rep.fail("bracket realization: [X" + std::to_string(i) + ",X" +
                   std::to_string(j) + "] coordinate " + std::to_string(k + 1));
          return rep;
        }
      }
    }
  return rep;
}

} // namespace carnot
