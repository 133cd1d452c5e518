#pragma once

#include "carnot/rational.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace carnot {

enum class VarKind { Coordinate, Parameter };

/// Ordered set of variable names. The order is fixed for the lifetime of a
/// computation: the canonical monomial order, and hence every serialized
/// artifact, depends on it.
class VarTable {
public:
  static std::shared_ptr<const VarTable>
  make(std::vector<std::pair<std::string, VarKind>> vars);

  int arity() const { return static_cast<int>(names_.size()); }
  const std::string &name(int i) const { return names_[i]; }
  VarKind kind(int i) const { return kinds_[i]; }
  // -1 if absent
  int index_of(std::string_view name) const;
  bool same_as(const VarTable &other) const;

private:
  std::vector<std::string> names_;
  std::vector<VarKind> kinds_;
  std::map<std::string, int, std::less<>> index_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

/// Convenience builders: coordinates get one entry per name.
VarTablePtr make_table(const std::vector<std::string> &coords,
                       const std::vector<std::string> &params = {});

using Monomial = std::vector<uint16_t>; // dense exponent vector, table arity

int monomial_degree(const Monomial &m);

// Canonical term order used everywhere: lower total degree first, ties broken
// lexicographically with the higher exponent on the earlier variable first.
// This matches the catalog's display convention (x3 + y3 + 1/2*x1*y2 - ...).
struct MonomialBefore {
  bool operator()(const Monomial &a, const Monomial &b) const;
};

class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(VarTablePtr table) : table_(std::move(table)) {}

  static Polynomial zero(VarTablePtr table) { return Polynomial(table); }
  static Polynomial constant(VarTablePtr table, const Rat &c);
  static Polynomial variable(VarTablePtr table, int index);
  /// Parses the canonical serialization; also accepts parenthesized
  /// products, which is how transcribed display expressions are written.
  static Polynomial parse(VarTablePtr table, std::string_view text);

  const VarTablePtr &table() const { return table_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const; // 0 for the zero polynomial
  int term_count() const { return static_cast<int>(terms_.size()); }
  const std::map<Monomial, Rat, MonomialBefore> &terms() const {
    return terms_;
  }
  /// The coefficient of the constant monomial.
  Rat constant_value() const;
  bool is_constant() const;
  Rat coeff(const Monomial &m) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial &o) const;
  Polynomial operator-(const Polynomial &o) const;
  Polynomial operator*(const Polynomial &o) const;
  Polynomial &operator+=(const Polynomial &o);
  Polynomial &operator-=(const Polynomial &o);
  Polynomial operator*(const Rat &c) const;
  bool operator==(const Polynomial &o) const;

  Polynomial partial(int var) const;
  Polynomial partial(std::string_view var) const;

  /// Simultaneous substitution into `target` table. Variables without an
  /// explicit image must exist in `target` under the same name.
  Polynomial substitute(const VarTablePtr &target,
                        const std::map<int, Polynomial> &images) const;
  /// Substitution within the same table.
  Polynomial substitute(const std::map<int, Polynomial> &images) const;

  Rat eval(std::span<const Rat> point) const;

  std::string text() const;     // canonical, bit-exact serialization
  std::string text_latex() const;
  std::string text_json() const;

  void add_term(const Monomial &m, const Rat &c); // canonicalizing

private:
  VarTablePtr table_;
  std::map<Monomial, Rat, MonomialBefore> terms_;
  void require_same_table(const Polynomial &o) const;
};

Polynomial operator*(const Rat &c, const Polynomial &p);

class PolyMatrix {
public:
  PolyMatrix() = default;
  PolyMatrix(int rows, int cols, VarTablePtr table);
  static PolyMatrix identity(int n, VarTablePtr table);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const VarTablePtr &table() const { return table_; }
  Polynomial &at(int r, int c) { return entries_[r * cols_ + c]; }
  const Polynomial &at(int r, int c) const { return entries_[r * cols_ + c]; }

  PolyMatrix operator+(const PolyMatrix &o) const;
  PolyMatrix operator-(const PolyMatrix &o) const;
  PolyMatrix operator*(const PolyMatrix &o) const;
  bool operator==(const PolyMatrix &o) const;
  bool is_zero() const;

  Polynomial det() const;

  std::string text() const; // one row per line, entries joined by " ; "
  static PolyMatrix parse(VarTablePtr table, std::string_view text);

private:
  int rows_ = 0, cols_ = 0;
  VarTablePtr table_;
  std::vector<Polynomial> entries_;
};

/// Inverse of a unipotent matrix: requires (M - I)^n = 0 and returns
/// sum_{k<n} (I - M)^k. Throws std::domain_error when M is not unipotent
/// ("matrix not unipotent; basis not filtration-adapted").
PolyMatrix unipotent_inverse(const PolyMatrix &m);

} // namespace carnot
