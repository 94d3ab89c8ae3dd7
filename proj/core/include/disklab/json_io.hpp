#pragma once

#include <string>

#include "disklab/blaschke.hpp"
#include "disklab/constructions.hpp"
#include "disklab/harmonic_measure.hpp"
#include "disklab/majorant.hpp"

namespace disklab {

// Sequence files: {"schema":1,"points":[[re,im],...]}, with anchored points
// carried in an "anchored" array and multiplicities in "multiplicities" when
// not all 1. Emitted JSON is deterministic (sorted keys, shortest-roundtrip
// doubles).
std::string sequence_to_json(const ZeroSequence& seq);
ZeroSequence sequence_from_json(const std::string& text);

// Measure files: {"schema":1,"nodes":[...],"weights":[...]}.
std::string measure_to_json(const BoundaryMeasure& mu);
BoundaryMeasure measure_from_json(const std::string& text);

std::string fit_to_json(const MajorantFit& fit);
std::string estimate_to_json(const Estimate& est);
std::string condition_d_to_json(const ConditionDReport& report);
std::string counterexample_to_json(const CounterexampleRun& run);

// Plot-ready CSV: n, lambda_n, log(1-mu_n), q_n, parity.
std::string counterexample_to_csv(const CounterexampleRun& run);

}  // namespace disklab
