#pragma once

#include "carnot/gradings.hpp"
#include "carnot/report.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace carnot {

struct CatalogEntry {
  LieAlgebra alg; // dim 0 for missing_source stubs
  Grading displayed_grading; // empty when the source shows none
  // factor order of the published second-kind product, when it deviates
  // from plain descending (leftmost factor first)
  std::vector<int> second_order;
  int dim = 0;
  std::string source_file;
  bool is_product = false;
  std::vector<std::string> product_of;
};

struct ListFilter {
  std::optional<int> dim;
  std::optional<int> step;
  std::optional<StratFlag> stratifiable;
};

class Catalog {
public:
  /// CARNOT_CATALOG env var, else the bundled data directory.
  static std::string default_data_dir();
  static Catalog load(const std::string &data_dir);

  const std::string &data_dir() const { return data_dir_; }
  const CatalogEntry *find(const std::string &id) const;
  std::vector<std::string> ids(const ListFilter &filter = {}) const;
  const std::map<std::string, CatalogEntry> &entries() const {
    return entries_;
  }

private:
  std::string data_dir_;
  std::map<std::string, CatalogEntry> entries_;
};

/// Parses one .alg file (no product resolution).
CatalogEntry parse_alg_text(const std::string &text,
                            const std::string &what = "<memory>");

/// Jacobi, basis ordering, rank/step and stratifiability claims, displayed
/// grading. Parametric entries are checked at sample parameter values where
/// exact rank decisions are needed; identities stay symbolic.
CheckReport validate_entry(const CatalogEntry &entry);

/// Sample parameter points used when a rank decision is needed for a
/// parametric family (the catalog's lambda families live on lambda > 1).
std::vector<QVec> parameter_samples(const LieAlgebra &alg);

} // namespace carnot
