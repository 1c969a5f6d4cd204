#pragma once

#include "sphalg/verify.hpp"

namespace sphalg::verify::checks {

// Acceptance criteria, in order.
SuiteResult magic(const Options& o);
SuiteResult commutators(const Options& o);
SuiteResult dimension(const Options& o);
SuiteResult worked_mean(const Options& o);
SuiteResult mean_oracles(const Options& o);
SuiteResult multinomial(const Options& o);
SuiteResult decomposition(const Options& o);
SuiteResult mean_value(const Options& o);
SuiteResult rotation(const Options& o);
SuiteResult zonal(const Options& o);
SuiteResult eigen(const Options& o);
SuiteResult lc(const Options& o);

// Module invariants.
SuiteResult arith_props(const Options& o);
SuiteResult poly_props(const Options& o);
SuiteResult operator_props(const Options& o);
SuiteResult harmonic_props(const Options& o);
SuiteResult mean_props(const Options& o);
SuiteResult zonal_props(const Options& o);

}  // namespace sphalg::verify::checks
