#pragma once

// Named verification suites shared by the command-line tool and the
// acceptance runner.

#include "jordanc/morphisms.hpp"
#include "jordanc/report.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace jordanc {

struct SuiteConfig {
  std::uint64_t seed = 0;
  double tol = 1e-8;
  /// Largest matrix size used by the table suite.
  int max_n = 3;
  /// Spin factor for the no-go suite.
  std::string factor = "V4";
  /// Random draws per object in the property suite.
  int draws = 100;
};

/// Composite type predicted for two simple factors given as mini-spec terms,
/// or nullopt when no verdict is asserted.
std::optional<std::vector<SummandClass>> expected_product(const std::string& left, const std::string& right);

VerificationReport run_product(const std::string& left, const std::string& right, const SuiteConfig& cfg);
VerificationReport run_catalog(const SuiteConfig& cfg);
VerificationReport run_table(const SuiteConfig& cfg);
VerificationReport run_compact(const SuiteConfig& cfg);
VerificationReport run_dagger(const SuiteConfig& cfg);
VerificationReport run_nogo(const SuiteConfig& cfg);
VerificationReport run_tomography(const SuiteConfig& cfg);
VerificationReport run_distinguishability(const SuiteConfig& cfg);
VerificationReport run_marginals(const SuiteConfig& cfg);
VerificationReport run_associativity(const SuiteConfig& cfg);
/// Relative-CJP separation of functionals with densities inside and outside A.
VerificationReport run_witness(const SuiteConfig& cfg);
/// Jordan identity, form associativity, spectral reconstruction, rank
/// constancy, cone self-duality and dagger involutivity on random draws.
VerificationReport run_properties(const SuiteConfig& cfg);

/// Names accepted by run_suite.
const std::vector<std::string>& suite_names();
VerificationReport run_suite(const std::string& name, const SuiteConfig& cfg);

}  // namespace jordanc
