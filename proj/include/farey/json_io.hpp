#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "farey/verifier.hpp"

namespace farey {

/// Key order is fixed at construction, so serialized output is stable.
using ordered_json = nlohmann::ordered_json;

/// Array of {"u": .., "v": .., "w": ..} objects in family order.
ordered_json lines_to_json(const std::vector<PrimitiveLine>& lines);

/// Complete subdivision: window bounds, vertex coordinates as exact "p/q"
/// strings, edges as index pairs, cells as vertex index loops with exact
/// areas and incident family lines.
ordered_json subdivision_to_json(const Subdivision& s);

ordered_json report_to_json(const VerificationReport& report);

/// Two-space indentation with a trailing newline; the only dump style used.
std::string dump_json(const ordered_json& j);

}  // namespace farey
