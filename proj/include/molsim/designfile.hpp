#pragma once

#include <string>

#include "molsim/builder.hpp"

namespace molsim {

struct DesignFile {
    enum class Kind { Diode, AndGate, OrGate };
    Kind kind = Kind::Diode;
    DiodeSpec diode;  // Kind::Diode
    GateSpec gate;    // gate kinds

    bool is_gate() const { return kind != Kind::Diode; }
    const char* kind_name() const;
};

DesignFile parse_design_text(const std::string& text, const std::string& filename);
DesignFile load_design(const std::string& path);

}  // namespace molsim
