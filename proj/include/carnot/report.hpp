#pragma once

#include <string>
#include <vector>

namespace carnot {

struct CheckReport {
  bool ok = true;
  std::vector<std::string> failures;
  void fail(std::string what) {
    ok = false;
    failures.push_back(std::move(what));
  }
  void merge(const CheckReport &o) {
    ok = ok && o.ok;
    failures.insert(failures.end(), o.failures.begin(), o.failures.end());
  }
};

} // namespace carnot
