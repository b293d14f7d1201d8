#pragma once

#include <string>

#include "skeletal/category.hpp"

namespace tqft {

// JSON rendering of verification reports used by the CLI and by the
// datum/report file formats.
std::string report_to_json(const VerificationReport &rep);

} // namespace tqft
