#pragma once

#include <string>

#include "molsim/device.hpp"
#include "molsim/huckel.hpp"

namespace molsim {

struct ToolConfig {
    HuckelParameters params = HuckelParameters::defaults();
    DeviceConfig device;
};

/// Applies `[params]` / `[levels]` / `[model]` overrides on top of the
/// built-in defaults. Unknown keys are hard errors.
void apply_config_text(ToolConfig& cfg, const std::string& text, const std::string& filename);
ToolConfig load_config(const std::string& path);

}  // namespace molsim
