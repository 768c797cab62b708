#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "molsim/cli.hpp"
#include "molsim/config.hpp"
#include "molsim/designfile.hpp"
#include "molsim/keyfile.hpp"
#include "molsim/report.hpp"

using namespace molsim;
using nlohmann::json;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = std::string("/tmp/molsim_test_") + name;
    std::ofstream out(path);
    out << content;
    return path;
}

const char* kDiodeText =
    "# single rectifier\n"
    "[design]\n"
    "kind = diode\n"
    "donor = NH2\n"
    "acceptor = NO2\n"
    "bridge = CH2\n";

const char* kGateText =
    "[design]\n"
    "kind = and_gate\n"
    "load_ohms = 100000\n"
    "supply_volts = 5.0\n"
    "[diode.a]\n"
    "donor = NH2\n"
    "acceptor = NO2\n"
    "bridge = CH2\n"
    "[diode.b]\n"
    "donor = OH\n"
    "acceptor = CN\n"
    "bridge = CH2CH2\n";

int run(std::vector<std::string> args, std::string* out_text = nullptr,
        std::string* err_text = nullptr) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    if (out_text) *out_text = out.str();
    if (err_text) *err_text = err.str();
    return code;
}

}  // namespace

TEST_CASE("design files parse with defaults and comments") {
    DesignFile df = parse_design_text(kDiodeText, "mem");
    CHECK(df.kind == DesignFile::Kind::Diode);
    CHECK(df.diode.donor_group == "NH2");
    CHECK(df.diode.rings_donor == 1);
    CHECK(df.diode.contact_metal == ContactMetal::Au);

    DesignFile gate = parse_design_text(kGateText, "mem");
    REQUIRE(gate.is_gate());
    CHECK(gate.gate.kind == GateKind::AND);
    CHECK(gate.gate.load_resistance == doctest::Approx(1e5));
    CHECK(gate.gate.diode_b.bridge == "CH2CH2");
}

TEST_CASE("design file errors carry file and line") {
    try {
        parse_design_text("[design]\nkind = diode\ndonr = NH2\n", "f.design");
        FAIL("expected KeyFileError");
    } catch (const KeyFileError& e) {
        CHECK(e.line == 3);
        CHECK(std::string(e.what()).find("f.design:3") != std::string::npos);
        CHECK(std::string(e.what()).find("donr") != std::string::npos);
    }
    try {
        parse_design_text(
            "[design]\nkind = diode\ndonor = XYZ\nacceptor = NO2\nbridge = CH2\n", "f");
        FAIL("expected KeyFileError");
    } catch (const KeyFileError& e) {
        CHECK(e.line == 3);
        // the diagnostic lists the known donors
        CHECK(std::string(e.what()).find("NH2") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_design_text("[design]\ndonor = NH2\n", "f"), KeyFileError);
    CHECK_THROWS_AS(parse_design_text("donor = NH2\n", "f"), KeyFileError);
    CHECK_THROWS_AS(parse_design_text("[wat]\nx = 1\n", "f"), KeyFileError);
}

TEST_CASE("inverting gate kinds are rejected with an explanation") {
    try {
        parse_design_text("[design]\nkind = not_gate\n", "f");
        FAIL("expected KeyFileError");
    } catch (const KeyFileError& e) {
        CHECK(std::string(e.what()).find("diode logic") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_design_text("[design]\nkind = xor_gate\n", "f"), KeyFileError);
    CHECK_THROWS_AS(parse_design_text("[design]\nkind = nand\n", "f"), KeyFileError);
}

TEST_CASE("config overrides defaults and rejects unknown keys") {
    ToolConfig cfg;
    apply_config_text(cfg,
                      "[params]\nbeta_ev = 3.0\ngroup.NH2.h = 1.9\n"
                      "[levels]\nv_high_min = 4.0\n"
                      "[model]\nbase_threshold_volts = 0.5\nfermi.Au = 5.2\n",
                      "cfg");
    CHECK(cfg.params.beta_ev == doctest::Approx(3.0));
    CHECK(cfg.params.heteroatom_table.at("NH2").h == doctest::Approx(1.9));
    CHECK(cfg.device.v_high_min == doctest::Approx(4.0));
    CHECK(cfg.device.base_threshold_volts == doctest::Approx(0.5));
    CHECK(cfg.device.fermi_ev.at("Au") == doctest::Approx(5.2));

    ToolConfig fresh;
    CHECK_THROWS_AS(apply_config_text(fresh, "[params]\nbogus = 1\n", "cfg"), KeyFileError);
    CHECK_THROWS_AS(apply_config_text(fresh, "[params]\nbeta = 1.0\n", "cfg"), KeyFileError);
    CHECK_THROWS_AS(apply_config_text(fresh, "[params]\nalpha = zz\n", "cfg"), KeyFileError);
}

TEST_CASE("reports carry the schema header and are byte-deterministic") {
    DesignFile df = parse_design_text(kDiodeText, "mem");
    ToolConfig cfg;
    json a = build_report(df, cfg, EnergyUnits::Beta);
    json b = build_report(df, cfg, EnergyUnits::Beta);
    CHECK(render_report(a, "json") == render_report(b, "json"));
    CHECK(a.at("schema_version").get<int>() == 1);
    for (const char* key : {"version", "design", "validation", "inventory", "molecule",
                            "orbitals", "profile", "diode", "config", "units"})
        CHECK(a.contains(key));
    CHECK(a.at("units").get<std::string>() == "beta");

    json gate = build_report(parse_design_text(kGateText, "mem"), cfg, EnergyUnits::Ev);
    CHECK(gate.contains("truth_table"));
    CHECK(gate.at("truth_table").at("rows").size() == 4);
}

TEST_CASE("unit selection rescales report energies") {
    DesignFile df = parse_design_text(kDiodeText, "mem");
    ToolConfig cfg;
    json beta = build_report(df, cfg, EnergyUnits::Beta);
    json ev = build_report(df, cfg, EnergyUnits::Ev);
    auto e_beta = beta["orbitals"]["donor"]["energies"][0].get<double>();
    auto e_ev = ev["orbitals"]["donor"]["energies"][0].get<double>();
    CHECK(e_ev == doctest::Approx(e_beta * cfg.params.beta_ev));
}

TEST_CASE("cli: validate, build, analyze, simulate succeed on a good design") {
    std::string path = write_temp("ok.design", kDiodeText);
    for (const char* sub : {"validate", "build", "analyze", "simulate"}) {
        std::string out, err;
        CHECK(run({sub, path}, &out, &err) == 0);
        CHECK(err.empty());
        CHECK(!out.empty());
    }
    std::string out;
    CHECK(run({"analyze", path, "--format", "json", "--units", "ev"}, &out) == 0);
    json j = json::parse(out);
    CHECK(j["units"] == "ev");
}

TEST_CASE("cli: gate simulation prints the truth table") {
    std::string path = write_temp("gate.design", kGateText);
    std::string out;
    CHECK(run({"simulate", path}, &out) == 0);
    CHECK(out.find("A=0V B=0V") != std::string::npos);
    CHECK(out.find("logic 1") != std::string::npos);
}

TEST_CASE("cli: every error prints exactly one diagnostic line") {
    std::string bad = write_temp("bad.design", "[design]\nkind = diode\ndonr = x\n");
    struct Case {
        std::vector<std::string> args;
        int code;
        const char* prefix;
    };
    std::vector<Case> cases = {
        {{"analyze", "/nonexistent/x.design"}, 1, "error: "},
        {{"analyze", bad}, 1, "error: "},
        {{"frobnicate"}, 2, "usage error: "},
        {{}, 2, "usage error: "},
        {{"analyze", bad, "--format", "yaml"}, 2, "usage error: "},
        {{"sweep", "--fix", "metal=Au"}, 1, "error: "},
    };
    for (const Case& c : cases) {
        std::string out, err;
        CHECK(run(c.args, &out, &err) == c.code);
        CHECK(std::count(err.begin(), err.end(), '\n') == 1);
        CHECK(err.rfind(c.prefix, 0) == 0);
    }
}

TEST_CASE("cli: sweep row count equals the enumeration count") {
    std::string out;
    REQUIRE(run({"sweep", "--format", "json"}, &out) == 0);
    CHECK(json::parse(out)["rows"].size() == 32);
    REQUIRE(run({"sweep", "--fix", "donor=NH2", "--format", "json"}, &out) == 0);
    CHECK(json::parse(out)["rows"].size() == 8);
    REQUIRE(run({"sweep", "--fix", "donor=NH2", "--fix", "acceptor=NO2", "--fix",
                 "bridge=CH2", "--format", "json"}, &out) == 0);
    CHECK(json::parse(out)["rows"].size() == 1);
}

TEST_CASE("cli: catalog lists groups and optionally the defaults") {
    std::string out;
    CHECK(run({"catalog"}, &out) == 0);
    CHECK(out.find("NH2") != std::string::npos);
    CHECK(out.find("NO2") != std::string::npos);
    std::string with_defaults;
    CHECK(run({"catalog", "--defaults", "--format", "json"}, &with_defaults) == 0);
    json j = json::parse(with_defaults);
    CHECK(j.contains("defaults"));
    CHECK(j["defaults"]["model"]["base_threshold_volts"].get<double>() ==
          doctest::Approx(0.3));
}

TEST_CASE("cli: config flag changes the computed thresholds") {
    std::string design = write_temp("cfg.design", kDiodeText);
    std::string cfg = write_temp("cfg.conf", "[model]\nbase_threshold_volts = 0.6\n");
    std::string plain, tuned;
    REQUIRE(run({"analyze", design, "--format", "json"}, &plain) == 0);
    REQUIRE(run({"analyze", design, "--config", cfg, "--format", "json"}, &tuned) == 0);
    CHECK(json::parse(plain)["diode"]["forward_threshold_volts"].get<double>() ==
          doctest::Approx(0.3));
    CHECK(json::parse(tuned)["diode"]["forward_threshold_volts"].get<double>() ==
          doctest::Approx(0.6));
}

TEST_CASE("cli: validate reports violations with nonzero exit") {
    // a config error in a gate design: zero load resistance
    std::string bad = write_temp(
        "zero_load.design",
        "[design]\nkind = or_gate\nload_ohms = 0\nsupply_volts = 5\n"
        "[diode.a]\ndonor = NH2\nacceptor = NO2\nbridge = CH2\n"
        "[diode.b]\ndonor = NH2\nacceptor = NO2\nbridge = CH2\n");
    std::string out, err;
    CHECK(run({"validate", bad}, &out, &err) == 1);
    CHECK(std::count(err.begin(), err.end(), '\n') == 1);
}
