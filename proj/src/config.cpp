#include "molsim/config.hpp"

#include <fstream>
#include <sstream>

#include "molsim/keyfile.hpp"

namespace molsim {

namespace {

// group.<NAME>.<field> keys in [params]
bool apply_group_key(HuckelParameters& p, const KeyValue& kv, const std::string& file) {
    if (kv.key.rfind("group.", 0) != 0) return false;
    std::string rest = kv.key.substr(6);
    size_t dot = rest.rfind('.');
    if (dot == std::string::npos)
        throw KeyFileError(file, kv.line, "expected group.<NAME>.<h|k|n_pi|h_ring>");
    std::string name = rest.substr(0, dot);
    std::string field = rest.substr(dot + 1);
    HeteroatomParams& entry = p.heteroatom_table[name];
    if (field == "h") entry.h = parse_double(kv, file);
    else if (field == "k") entry.k = parse_double(kv, file);
    else if (field == "n_pi") entry.n_pi = parse_int(kv, file);
    else if (field == "h_ring") entry.h_ring = parse_double(kv, file);
    else throw KeyFileError(file, kv.line, "unknown group field '" + field + "'");
    return true;
}

}  // namespace

void apply_config_text(ToolConfig& cfg, const std::string& text, const std::string& file) {
    for (const KeyValue& kv : parse_keyfile(text, file)) {
        if (kv.section == "params") {
            if (kv.key == "alpha") cfg.params.alpha = parse_double(kv, file);
            else if (kv.key == "beta") cfg.params.beta = parse_double(kv, file);
            else if (kv.key == "beta_ev") cfg.params.beta_ev = parse_double(kv, file);
            else if (kv.key == "degeneracy_tol") cfg.params.degeneracy_tol = parse_double(kv, file);
            else if (kv.key == "jacobi_tol") cfg.params.jacobi_tol = parse_double(kv, file);
            else if (kv.key == "jacobi_max_sweeps")
                cfg.params.jacobi_max_sweeps = parse_int(kv, file);
            else if (!apply_group_key(cfg.params, kv, file))
                throw KeyFileError(file, kv.line, "unknown key '" + kv.key + "' in [params]");
        } else if (kv.section == "levels") {
            if (kv.key == "v_low") cfg.device.v_low = parse_double(kv, file);
            else if (kv.key == "v_high") cfg.device.v_high = parse_double(kv, file);
            else if (kv.key == "v_low_max") cfg.device.v_low_max = parse_double(kv, file);
            else if (kv.key == "v_high_min") cfg.device.v_high_min = parse_double(kv, file);
            else throw KeyFileError(file, kv.line, "unknown key '" + kv.key + "' in [levels]");
        } else if (kv.section == "model") {
            if (kv.key == "base_threshold_volts")
                cfg.device.base_threshold_volts = parse_double(kv, file);
            else if (kv.key == "on_conductance_siemens")
                cfg.device.on_conductance_siemens = parse_double(kv, file);
            else if (kv.key == "bridge_barrier_ev")
                cfg.device.bridge_barrier_ev = parse_double(kv, file);
            else if (kv.key.rfind("fermi.", 0) == 0)
                cfg.device.fermi_ev[kv.key.substr(6)] = parse_double(kv, file);
            else throw KeyFileError(file, kv.line, "unknown key '" + kv.key + "' in [model]");
        } else {
            throw KeyFileError(file, kv.line,
                               "unknown section '[" + kv.section +
                                   "]' (expected [params], [levels] or [model])");
        }
    }
    if (cfg.params.beta >= 0)
        throw KeyFileError(file, 0, "beta must be negative");
}

ToolConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    ToolConfig cfg;
    apply_config_text(cfg, buf.str(), path);
    return cfg;
}

}  // namespace molsim
