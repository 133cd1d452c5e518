#include "carnot/bch.hpp"

#include <map>
#include <random>
#include <stdexcept>

namespace carnot {

Element GroupLaw::x_point() const {
  Element e = Element::zero(table, dim());
  for (int i = 0; i < dim(); ++i)
    e.coords[i] = Polynomial::variable(table, i);
  return e;
}

Element GroupLaw::y_point() const {
  Element e = Element::zero(table, dim());
  for (int i = 0; i < dim(); ++i)
    e.coords[i] = Polynomial::variable(table, dim() + i);
  return e;
}

namespace {

Rat factorial(int n) {
  Rat r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

struct DynkinSum {
  const BoundAlgebra &bound;
  const Element &x, &y;
  int step;
  bool prune;
  std::map<std::string, Element> word_cache;
  Element acc;

  DynkinSum(const BoundAlgebra &b, const Element &x_, const Element &y_,
            int step_, bool prune_)
      : bound(b), x(x_), y(y_), step(step_), prune(prune_),
        acc(Element::zero(b.table(), b.dim())) {}

  void run() {
    std::string word;
    descend(word, 0, 1, Rat(1));
  }

  // blocks: choose (r, s) for the next block; deg = letters so far,
  // m = blocks so far, denom = product of factorials so far.
  void descend(std::string &word, int deg, int m, Rat denom) {
    for (int r = 0; deg + r <= step; ++r) {
      for (int s = (r == 0 ? 1 : 0); deg + r + s <= step; ++s) {
        int nd = deg + r + s;
        word.append(r, 'x');
        word.append(s, 'y');
        Rat d2 = denom * factorial(r) * factorial(s);
        bool zero_tail = (s >= 2) || (s == 0 && r >= 2);
        if (!prune || !zero_tail) add_term(word, m, d2);
        if (nd < step) descend(word, nd, m + 1, d2);
        word.resize(word.size() - r - s);
      }
    }
  }

  void add_term(const std::string &word, int m, const Rat &denom) {
    Element v = eval_word(word);
    if (v.is_zero()) return;
    Rat coeff = Rat((m % 2) ? 1 : -1) / Rat(m) /
                (Rat(static_cast<int>(word.size())) * denom);
    acc = acc + v * coeff;
  }

  Element eval_word(const std::string &w) {
    auto it = word_cache.find(w);
    if (it != word_cache.end()) return it->second;
    size_t i = w.size() - 1;
    Element v = (w[i] == 'x') ? x : y;
    for (size_t j = 1; j < w.size(); ++j) { // longest cached suffix
      auto s = word_cache.find(w.substr(j));
      if (s != word_cache.end()) {
        i = j;
        v = s->second;
        break;
      }
    }
    while (i > 0) {
      --i;
      v = bound.bracket((w[i] == 'x') ? x : y, v);
      word_cache.emplace(w.substr(i), v);
    }
    return v;
  }
};

} // namespace

Element bch_truncated(const BoundAlgebra &bound, const Element &x,
                      const Element &y, int step,
                      bool prune_structural_zeros) {
  if (step < 1 || step > 6)
    throw std::domain_error("unsupported truncation depth");
  DynkinSum sum(bound, x, y, step, prune_structural_zeros);
  sum.run();
  return sum.acc;
}

GroupLaw group_law(const LieAlgebra &alg) {
  const int n = alg.dim();
  auto [rk, step] = [&] {
    if (alg.is_parametric()) {
      // step decided on a sample; the symbolic law is checked downstream
      QVec sample(alg.params()->arity(), Rat(2));
      return rank_step(alg.specialize(sample));
    }
    return rank_step(alg);
  }();
  (void)rk;
  if (step == 0) step = 1; // abelian
  std::vector<std::string> coords;
  for (int i = 1; i <= n; ++i) coords.push_back("x" + std::to_string(i));
  for (int i = 1; i <= n; ++i) coords.push_back("y" + std::to_string(i));
  std::vector<std::string> params;
  for (int i = 0; i < alg.params()->arity(); ++i)
    params.push_back(alg.params()->name(i));
  GroupLaw g;
  g.alg = alg;
  g.table = make_table(coords, params);
  Element x = Element::zero(g.table, n), y = Element::zero(g.table, n);
  for (int i = 0; i < n; ++i) {
    x.coords[i] = Polynomial::variable(g.table, i);
    y.coords[i] = Polynomial::variable(g.table, n + i);
  }
  BoundAlgebra bound(alg, g.table);
  g.z = bch_truncated(bound, x, y, step).coords;
  return g;
}

namespace {

// substitution maps for law manipulation
std::map<int, Polynomial> subst_zero_y(const GroupLaw &g) {
  std::map<int, Polynomial> m;
  for (int i = 0; i < g.dim(); ++i)
    m[g.dim() + i] = Polynomial::zero(g.table);
  return m;
}

} // namespace

CheckReport law_checks_symbolic(const GroupLaw &g, bool symbolic_assoc) {
  CheckReport rep;
  const int n = g.dim();
  // identity: z(x,0) = x and z(0,y) = y
  std::map<int, Polynomial> y0 = subst_zero_y(g), x0;
  for (int i = 0; i < n; ++i) x0[i] = Polynomial::zero(g.table);
  for (int k = 0; k < n; ++k) {
    if (!(g.z[k].substitute(y0) == Polynomial::variable(g.table, k)))
      rep.fail("identity: z" + std::to_string(k + 1) + "(x,0) != x");
    if (!(g.z[k].substitute(x0) == Polynomial::variable(g.table, n + k)))
      rep.fail("identity: z" + std::to_string(k + 1) + "(0,y) != y");
  }
  // inverse: z(x,-x) = 0
  std::map<int, Polynomial> minus_x;
  for (int i = 0; i < n; ++i)
    minus_x[n + i] = -Polynomial::variable(g.table, i);
  for (int k = 0; k < n; ++k)
    if (!g.z[k].substitute(minus_x).is_zero())
      rep.fail("inverse: z" + std::to_string(k + 1) + "(x,-x) != 0");
  // antisymmetry: z(x,y) = -z(-y,-x)
  std::map<int, Polynomial> swapneg;
  for (int i = 0; i < n; ++i) {
    swapneg[i] = -Polynomial::variable(g.table, n + i);
    swapneg[n + i] = -Polynomial::variable(g.table, i);
  }
  for (int k = 0; k < n; ++k)
    if (!(g.z[k] == -(g.z[k].substitute(swapneg))))
      rep.fail("antisymmetry: z" + std::to_string(k + 1) +
               "(x,y) != -z(-y,-x)");
  // one-parameter lines: z(s*x, t*x) = (s+t) x
  {
    std::vector<std::string> coords, params;
    for (int i = 0; i < g.table->arity(); ++i)
      (g.table->kind(i) == VarKind::Coordinate ? coords : params)
          .push_back(g.table->name(i));
    params.push_back("s_line");
    params.push_back("t_line");
    auto ext = make_table(coords, params);
    Polynomial s = Polynomial::variable(ext, ext->index_of("s_line"));
    Polynomial t = Polynomial::variable(ext, ext->index_of("t_line"));
    std::map<int, Polynomial> line;
    for (int i = 0; i < n; ++i) {
      Polynomial xi = Polynomial::variable(ext, i);
      line[i] = s * xi;
      line[n + i] = t * xi;
    }
    for (int k = 0; k < n; ++k) {
      Polynomial want = (s + t) * Polynomial::variable(ext, k);
      if (!(g.z[k].substitute(ext, line) == want))
        rep.fail("line: z" + std::to_string(k + 1) + "(sx,tx) != (s+t)x");
    }
  }
  if (symbolic_assoc) {
    // z(z(x,y),w) = z(x,z(y,w)) over an extended table
    std::vector<std::string> coords, params;
    for (int i = 1; i <= n; ++i) coords.push_back("x" + std::to_string(i));
    for (int i = 1; i <= n; ++i) coords.push_back("y" + std::to_string(i));
    for (int i = 1; i <= n; ++i) coords.push_back("w" + std::to_string(i));
    for (int i = 0; i < g.table->arity(); ++i)
      if (g.table->kind(i) == VarKind::Parameter)
        params.push_back(g.table->name(i));
    auto ext = make_table(coords, params);
    std::vector<Polynomial> zxy, zyw;
    {
      std::map<int, Polynomial> shift; // y := w for z(y,w)
      for (int i = 0; i < n; ++i) {
        shift[i] = Polynomial::variable(ext, n + i);
        shift[n + i] = Polynomial::variable(ext, 2 * n + i);
      }
      for (int k = 0; k < n; ++k) zyw.push_back(g.z[k].substitute(ext, shift));
      for (int k = 0; k < n; ++k) zxy.push_back(g.z[k].substitute(ext, {}));
    }
    std::map<int, Polynomial> left, right;
    for (int i = 0; i < n; ++i) {
      left[i] = zxy[i];
      left[n + i] = Polynomial::variable(ext, 2 * n + i);
      right[i] = Polynomial::variable(ext, i);
      right[n + i] = zyw[i];
    }
    for (int k = 0; k < n; ++k) {
      Polynomial lhs = g.z[k].substitute(ext, left);
      Polynomial rhs = g.z[k].substitute(ext, right);
      if (!(lhs == rhs))
        rep.fail("associativity: coordinate " + std::to_string(k + 1));
    }
  }
  return rep;
}

CheckReport law_checks_sampled(const GroupLaw &g, const SampleSpec &spec) {
  CheckReport rep;
  const int n = g.dim();
  std::mt19937_64 rng(spec.seed);
  std::uniform_int_distribution<int> num(-3, 3), den(1, 7);
  auto rand_rat = [&] { return Rat(num(rng), den(rng)); };
  const int npar = g.table->arity() - 2 * n;
  auto eval_law = [&](const QVec &a, const QVec &b, const QVec &pars) {
    QVec point;
    point.insert(point.end(), a.begin(), a.end());
    point.insert(point.end(), b.begin(), b.end());
    point.insert(point.end(), pars.begin(), pars.end());
    QVec out(n);
    for (int k = 0; k < n; ++k) out[k] = g.z[k].eval(point);
    return out;
  };
  for (int trial = 0; trial < spec.count; ++trial) {
    QVec a(n), b(n), c(n), pars(npar);
    for (auto &v : a) v = rand_rat();
    for (auto &v : b) v = rand_rat();
    for (auto &v : c) v = rand_rat();
    for (auto &v : pars) v = Rat(num(rng) + 5, 2); // parameters kept > 1
    QVec lhs = eval_law(eval_law(a, b, pars), c, pars);
    QVec rhs = eval_law(a, eval_law(b, c, pars), pars);
    if (lhs != rhs) {
      rep.fail("sampled associativity failed at trial " +
               std::to_string(trial));
      return rep;
    }
  }
  return rep;
}

CheckReport dilation_check(const GroupLaw &g, const std::vector<int> &weights) {
  CheckReport rep;
  const int n = g.dim();
  if (static_cast<int>(weights.size()) != n) {
    rep.fail("dilation: weight vector has wrong length");
    return rep;
  }
  std::vector<std::string> coords, params;
  for (int i = 0; i < g.table->arity(); ++i)
    (g.table->kind(i) == VarKind::Coordinate ? coords : params)
        .push_back(g.table->name(i));
  params.push_back("r_dil");
  auto ext = make_table(coords, params);
  Polynomial r = Polynomial::variable(ext, ext->index_of("r_dil"));
  auto rpow = [&](int w) {
    Polynomial p = Polynomial::constant(ext, 1);
    for (int i = 0; i < w; ++i) p = p * r;
    return p;
  };
  std::map<int, Polynomial> dil;
  for (int i = 0; i < n; ++i) {
    dil[i] = rpow(weights[i]) * Polynomial::variable(ext, i);
    dil[n + i] = rpow(weights[i]) * Polynomial::variable(ext, n + i);
  }
  for (int k = 0; k < n; ++k) {
    Polynomial lhs = g.z[k].substitute(ext, dil);
    Polynomial rhs = rpow(weights[k]) * g.z[k].substitute(ext, {});
    if (!(lhs == rhs))
      rep.fail("dilation: z" + std::to_string(k + 1) +
               " not homogeneous of weight " + std::to_string(weights[k]));
  }
  return rep;
}

int weighted_degree(const Polynomial &p, const std::vector<int> &var_weights) {
  int best = 0;
  for (const auto &[m, c] : p.terms()) {
    int d = 0;
    for (size_t v = 0; v < m.size(); ++v) d += m[v] * var_weights[v];
    best = std::max(best, d);
  }
  return best;
}

} // namespace carnot
