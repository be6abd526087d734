#pragma once

// JSON forms used by the command-line tool. Ideal and vertex indices are
// written 1-based; schemas live under docs/schemas/.

#include <string>

#include <json.hpp>

#include "toricres/blowup.hpp"
#include "toricres/resolve.hpp"

namespace toricres {

using Json = nlohmann::ordered_json;

inline constexpr const char* kBlowupSchema = "toricres/blowup-result/v1";
inline constexpr const char* kTraceSchema = "toricres/resolution-trace/v1";

Json to_json(LatticeVec v);
Json to_json(const std::vector<LatticeVec>& vs);
Json to_json(const AffineSemigroup& s);
Json to_json(const MonomialIdeal& ideal);
Json to_json(const Fan2& fan);
Json to_json(const MonomialIdeal& ideal, const BlowupResult& result);
Json to_json(const ResolutionTrace& trace);

/// [[a,b], ...]; throws Parse on malformed input.
std::vector<LatticeVec> lattice_vecs_from_json(const Json& j);
AffineSemigroup semigroup_from_json(const Json& j);
/// {"base": [[a,b]...], "exps": [[a,b]...]}
MonomialIdeal ideal_from_json(const Json& j);

/// Compact, deterministic text form.
std::string dump(const Json& j);

}  // namespace toricres
