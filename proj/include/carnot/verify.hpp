#pragma once

#include "carnot/catalog.hpp"
#include "carnot/frames.hpp"

#include <string>
#include <vector>

namespace carnot {

struct VerifyOptions {
  bool deep = false;
  int jobs = 0; // 0 = hardware concurrency
  SampleSpec samples{100, 20240601};
};

struct VerifyItem {
  std::string id;
  std::string check;
  std::string status; // "pass" | "fail" | "skip"
  std::string witness;
};

struct VerifyOutcome {
  bool ok = true;
  std::vector<VerifyItem> items;
  void add(const std::string &id, const std::string &check, bool pass,
           const std::string &witness = "");
  void skip(const std::string &id, const std::string &check,
            const std::string &why);
};

/// Full verification of one entry. Base checks: load-time validation plus
/// byte-exact golden comparison. Deep adds symbolic associativity,
/// Maurer-Cartan, bracket realization, second-kind round trips, dilation
/// homogeneity, cone fixtures, and the free-algebra universal property.
VerifyOutcome verify_entry(const Catalog &cat, const CatalogEntry &entry,
                           const VerifyOptions &opts);

VerifyOutcome verify_many(const Catalog &cat,
                          const std::vector<std::string> &ids,
                          const VerifyOptions &opts);

std::string verify_report_json(const VerifyOutcome &out);

/// Regenerates every golden artifact under data_dir/golden (maintenance
/// entry point behind `carnot golden-emit`).
void emit_golden(const Catalog &cat, const std::string &data_dir);

/// Derives the law and all first-kind artifacts once per entry.
struct DerivedArtifacts {
  GroupLaw law;
  PolyMatrix dl, dr;
  Frame frame;
  Coframe cofr;
};
DerivedArtifacts derive_artifacts(const LieAlgebra &alg);

/// Entries whose displayed data includes second-kind artifacts.
bool has_second_kind_golden(const std::string &id);

} // namespace carnot
