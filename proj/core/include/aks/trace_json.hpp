#pragma once

// JSON form of AksTrace (schema version "1"). Every number is written as a
// decimal string so that no consumer truncates it to 64 bits; steps the run
// never reached are null.

#include <string>

#include "aks/aks.hpp"

namespace aks {

std::string trace_to_json(const AksTrace& trace, int indent = 2);

/// Throws PreconditionError on malformed documents or an unknown schema.
AksTrace trace_from_json(const std::string& text);

}  // namespace aks
