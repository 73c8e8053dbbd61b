#pragma once

#include "qha/report.hpp"

namespace qha {

/// Machine-verification suites behind `verify --suite <name>`; one per
/// acceptance family.  All randomized parts are seeded; `jobs` bounds the
/// worker fan-out where a suite parallelizes (output is identical for any
/// job count).
SuiteReport suite_subset(int n_max = 8);
SuiteReport suite_weyl(int n_max = 5);
SuiteReport suite_nilhecke(unsigned seed = 0);
SuiteReport suite_klr(unsigned seed = 0, int jobs = 1);
SuiteReport suite_cyclotomic();
SuiteReport suite_orbits();

SuiteReport run_suite(const std::string& name, int n, unsigned seed, int jobs);

}  // namespace qha
