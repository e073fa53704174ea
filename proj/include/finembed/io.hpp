#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "finembed/carrier.hpp"
#include "finembed/density.hpp"
#include "finembed/embed.hpp"
#include "finembed/families.hpp"
#include "finembed/prsearch.hpp"
#include "finembed/rich.hpp"

namespace finembed::io {

using nlohmann::json;

/// Errors name the offending field with a dotted path such as
/// "set.window.bound".
json read_json_file(const std::string& path);

/// {"kind", "bound", "alphabet"?, "table"?}
WindowPtr parse_window(const json& j, const std::string& where = "window");

/// {"window": {...}, "set": {"explicit": [...]} | {"predicate": "..."}}.
/// `fallback` supplies the window when the object has none.
GroundSet parse_set(const json& j, const std::string& where = "set", WindowPtr fallback = nullptr);

/// {"builtin": name, "args": {...}, "enum"?: {...}} or {"pair": {...}}.
FamilySpec parse_family(const json& j, WindowPtr window, const std::string& where = "family");

ParamEnumeration parse_enumeration(const json& j, const std::string& where);

json element_json(const Window& w, Element e);
json elements_json(const Window& w, std::span<const Element> elements);
json params_json(const FamilySpec& family, const ParamTuple& params);

json to_json(const EmbedVerdict& verdict, const FamilySpec& family);
json to_json(const std::vector<ProbeResult>& probes, const FamilySpec& family);
json to_json(const ProgressionCertificate& certificate);
json to_json(const ThickReport& report, const Window& w);
json to_json(const SyndeticReport& report);
json to_json(const DensityReport& report, const Window& w);
json to_json(const MonotonicityReport& report);
json to_json(const ColoringCertificate& certificate);
json to_json(const ThresholdResult& result);
json to_json(const HomogeneousReport& report);

/// 64-bit FNV-1a, as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view data);

}  // namespace finembed::io
