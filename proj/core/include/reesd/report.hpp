#pragma once

#include <string>

#include "reesd/analyze.hpp"

namespace reesd {

// Serializes an analysis. `format` is "json" (stable key order, rationals as
// strings) or "text" (aligned dimension table; b-function lines printed
// verbatim, one per p).
std::string emit_report(const ReesAnalysis& r, const std::string& format);

}  // namespace reesd
