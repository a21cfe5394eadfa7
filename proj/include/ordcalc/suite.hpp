#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ordcalc/term.hpp"
#include "ordcalc/universe.hpp"

namespace ord {

struct Counterexample {
  std::vector<std::string> inputs;
  std::string expected;
  std::string actual;
};

struct PropertyReport {
  std::string id;
  std::string universe;
  std::uint64_t instances = 0;
  std::vector<Counterexample> counterexamples;
  double seconds = 0.0;
  bool expects_counterexamples = false;

  bool passed() const {
    return expects_counterexamples ? !counterexamples.empty()
                                   : counterexamples.empty();
  }
};

struct SuiteOptions {
  unsigned max_norm = 8;
  int max_level = 2;
  unsigned n_cap = 3;
  unsigned threads = 0;  // 0: one per hardware thread
  std::size_t max_counterexamples = 8;
};

// Registered property ids, in execution order.
std::vector<std::string> all_property_ids();

// Run one property; throws DomainError for unknown ids.
PropertyReport run_property(const std::string& id, const SuiteOptions& opt);

std::vector<PropertyReport> run_suite(const std::vector<std::string>& ids,
                                      const SuiteOptions& opt);

// One JSON object per report, no trailing newline.
std::string report_json(const PropertyReport& r);

}  // namespace ord
