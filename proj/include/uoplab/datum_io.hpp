#pragma once

#include <string>

#include <json.hpp>

#include "uoplab/root_datum.hpp"
#include "uoplab/uops.hpp"

namespace uop {

/// Custom group schema:
/// {name, rank, simple_roots:[[..]], positive_roots:[[..]],
///  positive_coroots:[[..]]}. 2rho is always recomputed from the roots.
RootDatum root_datum_from_json(const nlohmann::json& j);
RootDatum load_root_datum(const std::string& path);
nlohmann::json root_datum_to_json(const RootDatum& d);

/// Resolves a preset name, or a path to a datum file when the argument
/// names no preset.
RootDatum resolve_group(const std::string& name_or_path);

nlohmann::json certificate_to_json(const IntegralityCertificate& cert);
void write_certificate(const IntegralityCertificate& cert, const std::string& path);

}  // namespace uop
