#include "carnot/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace carnot {

std::shared_ptr<const VarTable>
VarTable::make(std::vector<std::pair<std::string, VarKind>> vars) {
  auto t = std::make_shared<VarTable>();
  for (auto &[name, kind] : vars) {
    if (t->index_.count(name))
      throw std::invalid_argument("duplicate variable name: " + name);
    t->index_[name] = static_cast<int>(t->names_.size());
    t->names_.push_back(name);
    t->kinds_.push_back(kind);
  }
  return t;
}

int VarTable::index_of(std::string_view name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

bool VarTable::same_as(const VarTable &other) const {
  if (this == &other) return true;
  return names_ == other.names_ && kinds_ == other.kinds_;
}

VarTablePtr make_table(const std::vector<std::string> &coords,
                       const std::vector<std::string> &params) {
  std::vector<std::pair<std::string, VarKind>> vars;
  for (const auto &c : coords) vars.emplace_back(c, VarKind::Coordinate);
  for (const auto &p : params) vars.emplace_back(p, VarKind::Parameter);
  return VarTable::make(std::move(vars));
}

int monomial_degree(const Monomial &m) {
  int d = 0;
  for (auto e : m) d += e;
  return d;
}

bool MonomialBefore::operator()(const Monomial &a, const Monomial &b) const {
  int da = monomial_degree(a), db = monomial_degree(b);
  if (da != db) return da < db;
  // Equal degree: the term with the higher exponent on the earliest
  // differing variable is serialized first.
  for (size_t i = 0; i < a.size() && i < b.size(); ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return a.size() > b.size();
}

Polynomial Polynomial::constant(VarTablePtr table, const Rat &c) {
  Polynomial p(std::move(table));
  if (c != 0) p.terms_[Monomial(p.table_->arity(), 0)] = c;
  return p;
}

Polynomial Polynomial::variable(VarTablePtr table, int index) {
  Polynomial p(std::move(table));
  if (index < 0 || index >= p.table_->arity())
    throw std::out_of_range("variable index out of range");
  Monomial m(p.table_->arity(), 0);
  m[index] = 1;
  p.terms_[m] = 1;
  return p;
}

void Polynomial::require_same_table(const Polynomial &o) const {
  if (!table_ || !o.table_ || !table_->same_as(*o.table_))
    throw std::invalid_argument("polynomial variable tables differ");
}

void Polynomial::add_term(const Monomial &m, const Rat &c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int Polynomial::total_degree() const {
  int d = 0;
  for (const auto &[m, c] : terms_) d = std::max(d, monomial_degree(m));
  return d;
}

Rat Polynomial::constant_value() const {
  Monomial zero(table_->arity(), 0);
  auto it = terms_.find(zero);
  return it == terms_.end() ? Rat(0) : it->second;
}

bool Polynomial::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && monomial_degree(terms_.begin()->first) == 0);
}

Rat Polynomial::coeff(const Monomial &m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(table_);
  for (const auto &[m, c] : terms_) r.terms_[m] = -c;
  return r;
}

Polynomial Polynomial::operator+(const Polynomial &o) const {
  require_same_table(o);
  Polynomial r = *this;
  for (const auto &[m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Polynomial &Polynomial::operator+=(const Polynomial &o) {
  require_same_table(o);
  for (const auto &[m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &o) {
  require_same_table(o);
  for (const auto &[m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator-(const Polynomial &o) const {
  require_same_table(o);
  Polynomial r = *this;
  for (const auto &[m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial &o) const {
  require_same_table(o);
  Polynomial r(table_);
  const int n = table_->arity();
  Monomial prod(n, 0);
  for (const auto &[ma, ca] : terms_)
    for (const auto &[mb, cb] : o.terms_) {
      for (int i = 0; i < n; ++i)
        prod[i] = static_cast<uint16_t>(ma[i] + mb[i]);
      r.add_term(prod, ca * cb);
    }
  return r;
}

Polynomial Polynomial::operator*(const Rat &c) const {
  Polynomial r(table_);
  if (c == 0) return r;
  for (const auto &[m, k] : terms_) r.terms_[m] = k * c;
  return r;
}

Polynomial operator*(const Rat &c, const Polynomial &p) { return p * c; }

bool Polynomial::operator==(const Polynomial &o) const {
  return table_->same_as(*o.table_) && terms_ == o.terms_;
}

Polynomial Polynomial::partial(int var) const {
  if (var < 0 || var >= table_->arity())
    throw std::out_of_range("unknown variable in partial()");
  Polynomial r(table_);
  for (const auto &[m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial d = m;
    d[var] -= 1;
    r.add_term(d, c * Rat(m[var]));
  }
  return r;
}

Polynomial Polynomial::partial(std::string_view var) const {
  int i = table_->index_of(var);
  if (i < 0)
    throw std::out_of_range("unknown variable: " + std::string(var));
  return partial(i);
}

Polynomial
Polynomial::substitute(const VarTablePtr &target,
                       const std::map<int, Polynomial> &images) const {
  const int n = table_->arity();
  // images are resolved lazily: a variable without an explicit image only
  // needs to exist in the target table if it actually occurs
  std::vector<std::optional<Polynomial>> img(n);
  std::vector<std::vector<Polynomial>> pow_cache(n);
  auto image_of = [&](int v) -> const Polynomial & {
    if (!img[v]) {
      auto it = images.find(v);
      if (it != images.end()) {
        if (!it->second.table()->same_as(*target))
          throw std::invalid_argument("substitution image over wrong table");
        img[v] = it->second;
      } else {
        int tv = target->index_of(table_->name(v));
        if (tv < 0)
          throw std::invalid_argument("variable " + table_->name(v) +
                                      " has no image and is absent from the "
                                      "target table");
        img[v] = Polynomial::variable(target, tv);
      }
    }
    return *img[v];
  };
  auto power = [&](int v, int e) -> const Polynomial & {
    auto &cache = pow_cache[v];
    if (cache.empty()) {
      cache.push_back(Polynomial::constant(target, 1));
      cache.push_back(image_of(v));
    }
    while (static_cast<int>(cache.size()) <= e)
      cache.push_back(cache.back() * image_of(v));
    return cache[e];
  };
  Polynomial r(target);
  for (const auto &[m, c] : terms_) {
    Polynomial t = Polynomial::constant(target, c);
    for (int v = 0; v < n; ++v)
      if (m[v] > 0) t = t * power(v, m[v]);
    r += t;
  }
  return r;
}

Polynomial
Polynomial::substitute(const std::map<int, Polynomial> &images) const {
  return substitute(table_, images);
}

Rat Polynomial::eval(std::span<const Rat> point) const {
  if (static_cast<int>(point.size()) != table_->arity())
    throw std::invalid_argument("eval point arity mismatch");
  Rat r = 0;
  for (const auto &[m, c] : terms_) {
    Rat t = c;
    for (size_t v = 0; v < m.size(); ++v)
      for (int k = 0; k < m[v]; ++k) t *= point[v];
    r += t;
  }
  return r;
}

std::string Polynomial::text() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto &[m, c] : terms_) {
    bool neg = c < 0;
    Rat mag = neg ? Rat(-c) : c;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    bool has_vars = monomial_degree(m) > 0;
    bool wrote_coef = false;
    if (!has_vars || mag != 1) {
      out += rat_text(mag);
      wrote_coef = true;
    }
    for (size_t v = 0; v < m.size(); ++v) {
      if (m[v] == 0) continue;
      if (wrote_coef) out += "*";
      wrote_coef = true;
      out += table_->name(v);
      if (m[v] > 1) {
        out += "^";
        out += std::to_string(m[v]);
      }
    }
  }
  return out;
}

namespace {

std::string latex_var(const std::string &name) {
  // x12 -> x_{12}; lam -> \lambda; al3 -> \alpha_3; u1_3 -> u_1^3;
  // dx4 -> dx_4; d4 -> \partial_{x_4}
  if (name == "lam") return "\\lambda";
  auto split = [&](const std::string &s) {
    size_t i = s.size();
    while (i > 0 && std::isdigit(static_cast<unsigned char>(s[i - 1]))) --i;
    return std::pair(s.substr(0, i), s.substr(i));
  };
  auto us = name.find('_');
  if (us != std::string::npos) {
    // u-parameters: u1_3 renders as u_1^3
    auto base = name.substr(0, us);
    auto sup = name.substr(us + 1);
    auto [b, sub] = split(base);
    return b + "_{" + sub + "}^{" + sup + "}";
  }
  auto [base, digits] = split(name);
  if (digits.empty()) return name;
  if (base == "d") return "\\partial_{x_{" + digits + "}}";
  if (base == "al") return "\\alpha_{" + digits + "}";
  return base + "_{" + digits + "}";
}

} // namespace

std::string Polynomial::text_latex() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto &[m, c] : terms_) {
    bool neg = c < 0;
    Rat mag = neg ? Rat(-c) : c;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? "-" : "+";
    }
    bool has_vars = monomial_degree(m) > 0;
    if (!has_vars || mag != 1) {
      Int num = numerator(mag), den = denominator(mag);
      if (den == 1)
        out += num.str();
      else
        out += "\\frac{" + num.str() + "}{" + den.str() + "}";
    }
    for (size_t v = 0; v < m.size(); ++v) {
      if (m[v] == 0) continue;
      out += latex_var(table_->name(v));
      if (m[v] > 1) out += "^{" + std::to_string(m[v]) + "}";
    }
  }
  return out;
}

std::string Polynomial::text_json() const {
  std::ostringstream os;
  os << "{\"terms\":[";
  bool first = true;
  for (const auto &[m, c] : terms_) {
    if (!first) os << ",";
    first = false;
    os << "{\"coef\":\"" << rat_text(c) << "\",\"exps\":[";
    for (size_t v = 0; v < m.size(); ++v)
      os << (v ? "," : "") << m[v];
    os << "]}";
  }
  os << "]}";
  return os.str();
}

// --- parser -----------------------------------------------------------
// Grammar (superset of the canonical serialization; parentheses accepted so
// transcribed display expressions can be read back):
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (('*' factor) | ('/' nat))*
//   factor := nat | var ['^' nat] | '(' expr ')'
namespace {

struct Parser {
  VarTablePtr table;
  std::string_view s;
  size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skip();
    return pos < s.size() ? s[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string &msg) {
    throw std::invalid_argument("parse error at offset " +
                                std::to_string(pos) + ": " + msg);
  }

  Int nat() {
    skip();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start) fail("expected integer");
    return Int(std::string(s.substr(start, pos - start)));
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (eat('^')) {
      Int e = nat();
      Polynomial p = Polynomial::constant(table, 1);
      for (Int i = 0; i < e; ++i) p = p * base;
      return p;
    }
    return base;
  }

  Polynomial primary() {
    skip();
    if (pos >= s.size()) fail("unexpected end of input");
    char c = s[pos];
    if (c == '(') {
      ++pos;
      Polynomial e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return Polynomial::constant(table, Rat(nat()));
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) ||
              s[pos] == '_'))
        ++pos;
      std::string name(s.substr(start, pos - start));
      int idx = table->index_of(name);
      if (idx < 0) fail("unknown variable '" + name + "'");
      return Polynomial::variable(table, idx);
    }
    fail("unexpected character");
  }

  Polynomial term() {
    Polynomial r = factor();
    for (;;) {
      if (eat('*')) {
        r = r * factor();
      } else if (peek() == '/') {
        ++pos;
        Int d = nat();
        if (d == 0) fail("division by zero");
        r = r * Rat(Int(1), d);
      } else {
        return r;
      }
    }
  }

  Polynomial expr() {
    Polynomial r = Polynomial::zero(table);
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    for (;;) {
      Polynomial t = term();
      r += neg ? -t : t;
      skip();
      if (eat('-'))
        neg = true;
      else if (eat('+'))
        neg = false;
      else
        return r;
    }
  }
};

} // namespace

Polynomial Polynomial::parse(VarTablePtr table, std::string_view text) {
  Parser p{table, text};
  Polynomial r = p.expr();
  p.skip();
  if (p.pos != text.size()) p.fail("trailing input");
  return r;
}

// --- PolyMatrix -------------------------------------------------------

PolyMatrix::PolyMatrix(int rows, int cols, VarTablePtr table)
    : rows_(rows), cols_(cols), table_(std::move(table)),
      entries_(static_cast<size_t>(rows) * cols, Polynomial::zero(table_)) {}

PolyMatrix PolyMatrix::identity(int n, VarTablePtr table) {
  PolyMatrix m(n, n, table);
  for (int i = 0; i < n; ++i)
    m.at(i, i) = Polynomial::constant(m.table_, 1);
  return m;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix &o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix shape mismatch");
  PolyMatrix r(rows_, cols_, table_);
  for (size_t i = 0; i < entries_.size(); ++i)
    r.entries_[i] = entries_[i] + o.entries_[i];
  return r;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix &o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix shape mismatch");
  PolyMatrix r(rows_, cols_, table_);
  for (size_t i = 0; i < entries_.size(); ++i)
    r.entries_[i] = entries_[i] - o.entries_[i];
  return r;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix &o) const {
  if (cols_ != o.rows_)
    throw std::invalid_argument("matrix shape mismatch in product");
  PolyMatrix r(rows_, o.cols_, table_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Polynomial &a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Polynomial &b = o.at(k, j);
        if (!b.is_zero()) r.at(i, j) += a * b;
      }
    }
  return r;
}

bool PolyMatrix::operator==(const PolyMatrix &o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t i = 0; i < entries_.size(); ++i)
    if (!(entries_[i] == o.entries_[i])) return false;
  return true;
}

bool PolyMatrix::is_zero() const {
  for (const auto &e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

Polynomial PolyMatrix::det() const {
  if (rows_ != cols_) throw std::invalid_argument("det of non-square matrix");
  const int n = rows_;
  // Minor expansion with memoization on the column mask; fine for the small
  // matrices this is used on (automorphism fixtures, n <= 8).
  std::unordered_map<uint32_t, Polynomial> memo;
  auto rec = [&](auto &&self, uint32_t colmask, int row) -> Polynomial {
    if (row == n) return Polynomial::constant(table_, 1);
    auto it = memo.find(colmask);
    if (it != memo.end()) return it->second;
    Polynomial acc = Polynomial::zero(table_);
    int sign = 1;
    for (int c = 0; c < n; ++c) {
      if (colmask & (1u << c)) continue;
      const Polynomial &e = at(row, c);
      if (!e.is_zero()) {
        Polynomial sub = self(self, colmask | (1u << c), row + 1);
        acc += (sign > 0) ? e * sub : -(e * sub);
      }
      sign = -sign;
    }
    memo.emplace(colmask, acc);
    return acc;
  };
  return rec(rec, 0, 0);
}

std::string PolyMatrix::text() const {
  std::string out;
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      if (j) out += " ; ";
      out += at(i, j).text();
    }
    out += "\n";
  }
  return out;
}

PolyMatrix PolyMatrix::parse(VarTablePtr table, std::string_view text) {
  std::vector<std::vector<Polynomial>> rows;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    std::vector<Polynomial> row;
    size_t p = 0;
    while (p <= line.size()) {
      size_t sep = line.find(" ; ", p);
      std::string_view cell = line.substr(
          p, sep == std::string_view::npos ? line.size() - p : sep - p);
      row.push_back(Polynomial::parse(table, cell));
      if (sep == std::string_view::npos) break;
      p = sep + 3;
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::invalid_argument("empty matrix text");
  PolyMatrix m(static_cast<int>(rows.size()),
               static_cast<int>(rows[0].size()), table);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size())
      throw std::invalid_argument("ragged matrix text");
    for (size_t j = 0; j < rows[i].size(); ++j)
      m.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
  }
  return m;
}

PolyMatrix unipotent_inverse(const PolyMatrix &m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("unipotent_inverse of non-square matrix");
  const int n = m.rows();
  PolyMatrix id = PolyMatrix::identity(n, m.table());
  PolyMatrix nil = id - m; // N = I - M, nilpotent iff M unipotent
  PolyMatrix inv = id;
  PolyMatrix pw = nil;
  for (int k = 1; k < n; ++k) {
    if (pw.is_zero()) break;
    inv = inv + pw;
    pw = pw * nil;
  }
  if (!pw.is_zero())
    throw std::domain_error("matrix not unipotent; basis not "
                            "filtration-adapted");
  return inv;
}

} // namespace carnot
