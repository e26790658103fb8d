#pragma once

#include <json.hpp>

#include "gridzero/cartesian.hpp"
#include "gridzero/constructions.hpp"
#include "gridzero/incidence.hpp"
#include "gridzero/values.hpp"

namespace gridzero {

/// Deterministic report payloads; field order is fixed so identical inputs
/// produce byte-identical reports.
using Json = nlohmann::ordered_json;

Json to_json(const IncidenceReport& report);
Json to_json(const CartesianWitness& witness);
Json to_json(const FailureCertificate& cert);
Json to_json(const CartesianOutcome& outcome);
Json to_json(const KstWitness& witness);
Json to_json(const IncidenceGraph& graph);
Json to_json(const RichPartition& partition);
Json to_json(const DistinctValuesResult& result);
Json to_json(const MapDistinctResult& result);
Json to_json(const FiberProbeResult& result);
Json to_json(const GridWitnessResult& result);
Json to_json(const ConstructionInstance& inst);

/// {"value": ..., "approx": bool}; exact values render as integer or
/// rational strings, inexact ones as 30-digit decimals.
Json decimal_json(const Fixed30& value, bool exact);
Json rational_json(const mpq_class& value);

}  // namespace gridzero
