#pragma once

#include "lcklab/config.hpp"
#include "lcklab/report.hpp"

namespace lck {

/// Run the suites selected by `cfg` (all of them when the list is empty)
/// against the classical Hopf model it describes.  Suites are independent:
/// a defect or exception in one is recorded in its result and the rest
/// still run.
VerificationReport run_suites(const RunConfig& cfg);

}  // namespace lck
