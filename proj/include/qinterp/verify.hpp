#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qinterp/generate.hpp"

namespace qinterp {

struct VerifyOptions {
  long trials = 100;
  std::uint64_t seed = 1;
  GenOptions gen;
};

struct VerifyReport {
  std::string lemma;
  long trials = 0;
  long failures = 0;
  std::string first_failure;         // empty when clean
  std::vector<std::string> lines;    // deterministic structured records
};

// Known suite ids, in paper order.
const std::vector<std::string>& lemma_ids();

// Runs the named property suite with seeded generators; deterministic for a
// fixed id/options pair.
VerifyReport run_lemma(const std::string& id, const VerifyOptions& opt);

}  // namespace qinterp
