#pragma once

#include <string>

#include "nfold/trace.hpp"

namespace nfold {

/// Deterministic SVG 1.1 rendering of a trace: fold lines styled by step
/// kind, given and derived construction lines, labeled point markers.  The
/// viewBox is fitted to the bounding box of all named points with a 5%
/// margin.  Throws invalid_input on an empty trace.
std::string emit_svg(const FoldTrace& trace, double viewport_px = 640.0);

}  // namespace nfold
