#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace qtwist {

/// Result of an exhaustive identity check: how many instances were tried,
/// how many failed, and the first failure in canonical order.
struct CheckOutcome {
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::vector<std::string> witness;  // e.g. the offending variables
  std::string residual;              // rendered difference, "" when passing

  bool ok() const noexcept { return failures == 0; }

  void record_failure(std::vector<std::string> w, std::string r) {
    if (failures++ == 0) {
      witness = std::move(w);
      residual = std::move(r);
    }
  }

  void merge(const CheckOutcome& o) {
    checked += o.checked;
    if (o.failures && failures == 0) {
      witness = o.witness;
      residual = o.residual;
    }
    failures += o.failures;
  }
};

}  // namespace qtwist
