#pragma once

#include <string>

#include "nfold/trace.hpp"

namespace nfold {

/// Versioned JSON document ("version": 1).  Numbers round-trip losslessly.
std::string emit_json(const FoldTrace& trace);
std::string emit_json(const ConstructionReport& report);

/// Parse a trace document; schema_error on malformed input, unknown version,
/// or wrong document type.
FoldTrace load_json(const std::string& bytes);

}  // namespace nfold
