#pragma once

#include "coquartic/harness/report.hpp"

namespace coq {

/// Runs every check for the configured seed: tensor generation, quartics
/// and adjugate identity, divisibility certificates, inverse pairings, loop
/// orbit, Beauville round trips and the lattice numbers (hard), plus the
/// orbit non-return, fixed-point scan and composition experiments. Checks
/// run concurrently; results are kept in a fixed order. Module errors are
/// recorded in the failing check, never thrown.
VerificationReport run_full_suite(const RunConfig& config);

/// Hard check ids followed by experiment ids, in report order.
const std::vector<std::string>& suite_check_ids();

}  // namespace coq
