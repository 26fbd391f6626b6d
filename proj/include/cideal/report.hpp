#pragma once

#include <nlohmann/json_fwd.hpp>

#include "cideal/criteria.hpp"
#include "cideal/reductions.hpp"

namespace cideal {

using nlohmann::json;

/// Integers go out as JSON numbers while they fit in 53 bits, as decimal
/// strings beyond that, so the output stays loss-free for any JSON reader.
json jint(const Int& v);

json to_json(const Monomial& m, const std::vector<std::string>& vars);
json to_json(const MonomialIdeal& I, const std::vector<std::string>& vars);
json to_json(const ConstellationNode& n, const std::vector<std::string>& vars);
json to_json(const Constellation& c, const std::vector<std::string>& vars);
json to_json(const HDReport& r);
json to_json(const HilbertTable& t);
json to_json(const MultReport& r);
json to_json(const CriteriaReport& r);
json to_json(const ReductionReport& r);

/// Top-level report envelope: command, echoed canonical inputs, payload,
/// status, version, timestamp (unless suppressed).
json make_report(const std::string& command, const json& inputs,
                 const json& result, bool with_timestamp);

extern const char* kVersion;

} // namespace cideal
