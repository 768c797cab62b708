#pragma once

#include <string>

#include <json.hpp>

#include "molsim/config.hpp"
#include "molsim/designfile.hpp"

namespace molsim {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

enum class EnergyUnits { Beta, Ev };

/// Runs the full pipeline for a design and assembles the report object:
/// design echo, validation, inventory, per-half orbital sets, energy profile,
/// diode model, and (for gates) the truth table.
nlohmann::json build_report(const DesignFile& design, const ToolConfig& cfg,
                            EnergyUnits units);

/// json: stable schema, sorted keys, deterministic bytes.
/// text: human-readable tables.
std::string render_report(const nlohmann::json& report, const std::string& format);

nlohmann::json catalog_json(bool include_defaults, const ToolConfig& cfg);

}  // namespace molsim
