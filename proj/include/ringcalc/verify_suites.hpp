#pragma once

// Invariant bundles for the verify command: each suite reruns the named
// module's property checks and reports one line per check.

#include <string>
#include <vector>

namespace ringcalc {

struct SuiteCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

std::vector<SuiteCheck> suite_identities();
std::vector<SuiteCheck> suite_kernels();
std::vector<SuiteCheck> suite_halffree();
std::vector<SuiteCheck> suite_spectral(double tol = 1e-8);

// name: identities | kernels | halffree | spectral | all
std::vector<SuiteCheck> run_suite(const std::string& name, double tol = 1e-8);

}  // namespace ringcalc
