// Copyright 2026 the specgap developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <json.hpp>

#include "specgap/chebyshev.hpp"
#include "specgap/constructor.hpp"
#include "specgap/contfrac.hpp"
#include "specgap/pell.hpp"
#include "specgap/primesel.hpp"
#include "specgap/spectrum.hpp"
#include "specgap/stats.hpp"

namespace specgap {

using Json = nlohmann::ordered_json;

// Exact integers are always decimal strings (they can run to 10^5+ digits);
// empirical doubles stay JSON numbers; exact reals carry a 30-digit decimal
// plus their surd components for downstream exact rechecks.

Json json_int(const Int& v);
Json json_surd(const QuadSurd& s, int sig_digits = 30);
Json json_quality(const Quality& q, int sig_digits = 30);

Json to_json(const Alpha& alpha);
Json to_json(const CFExpansion& cf);
Json to_json(const Approximant& ap);
Json to_json(const DivisorWitness& w);
Json to_json(const PellSolution& s);
Json to_json(const PrimeSelection& sel);
Json spectrum_json(const Alpha& alpha, std::span<const Eigenvalue> levels);
Json to_json(const Alpha& alpha, const GapRecord& g);
Json sweep_json(const Alpha& alpha, std::span<const SweepRow> rows);
Json to_json(const GapCertificate& c);
Json to_json(const GeneralConstruction& g);
Json to_json(const PoissonSummary& s, const PoissonExperiment& exp);
Json to_json(std::span<const FordRow> rows);
Json to_json(const QuadrupleResult& r, const QuadrupleWindow& w);
Json report_json(const Alpha& alpha, std::span<const ReportRow> rows);
Json to_json(std::span<const SelftestSuite> suites);

/// CSV convenience view: arrays of flat objects become header + rows,
/// everything else becomes key,value lines. Lossy by design.
std::string json_to_csv(const Json& data);

/// FNV-1a 64-bit checksum of the serialized payload, as "fnv1a64:<hex>".
std::string payload_checksum(const std::string& payload);

}  // namespace specgap
