#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "axstring/config.hpp"
#include "axstring/io.hpp"

using namespace axstring;

namespace {

constexpr double kPi = std::numbers::pi;
const std::filesystem::path kConfigs = AXSTRING_CONFIG_DIR;

std::string error_of(const std::string& text) {
    try {
        parse_config(text);
    } catch (const ConfigError& e) {
        return e.what();
    }
    return {};
}

TEST(Config, ParsesSinePreset) {
    const auto cfg = load_config(kConfigs / "sine_v03.json");
    EXPECT_DOUBLE_EQ(cfg.length, kPi);
    EXPECT_DOUBLE_EQ(cfg.speed, 0.3);
    EXPECT_EQ(cfg.n_max, 40);
    EXPECT_EQ(cfg.quadrature.panels_per_unit, 256);
    EXPECT_EQ(cfg.initial.kind(), "sine_mode");
    EXPECT_NEAR(cfg.initial.phi0(kPi / 2), 0.1, 1e-15);
}

TEST(Config, ParsesZeroAndBumpPresets) {
    EXPECT_TRUE(load_config(kConfigs / "zero.json").initial.is_zero());
    const auto bump = load_config(kConfigs / "bump_v03.json");
    EXPECT_EQ(bump.initial.kind(), "bump");
    EXPECT_EQ(bump.n_max, 60);
}

TEST(Config, TableResolvedRelativeToConfig) {
    const auto cfg = load_config(kConfigs / "table_v03.json");
    EXPECT_EQ(cfg.initial.kind(), "table");
    EXPECT_DOUBLE_EQ(cfg.initial.length(), 2.0);
    EXPECT_NEAR(cfg.initial.phi0(1.0), 0.1, 1e-12);
    EXPECT_NEAR(cfg.initial.phi0_x(0.5), 0.1, 1e-3);
}

TEST(Config, DefaultsForOptionalKeys) {
    const auto cfg = parse_config(R"({"L": 1, "v": 0, "initial": {"preset": {"name": "sine_mode"}}})");
    EXPECT_EQ(cfg.n_max, 40);
    EXPECT_EQ(cfg.quadrature.panels_per_unit, 256);
    EXPECT_NEAR(cfg.initial.phi0(0.5), 0.1, 1e-15);
}

TEST(Config, SyntaxErrorReportsLine) {
    const std::string msg = error_of("{\n  \"L\": 1,\n  \"v\": ,\n}");
    EXPECT_NE(msg.find(":3:"), std::string::npos) << msg;
}

TEST(Config, SemanticErrorsNameTheKey) {
    EXPECT_NE(error_of(R"({"v": 0.3, "initial": {"preset": {"name": "zero"}}})").find("'L'"), std::string::npos);
    EXPECT_NE(error_of(R"({"L": 1, "v": "fast", "initial": {"preset": {"name": "zero"}}})").find("'v'"),
              std::string::npos);
    EXPECT_NE(error_of(R"({"L": 1, "v": 0.3, "n_max": 2.5, "initial": {"preset": {"name": "zero"}}})").find("'n_max'"),
              std::string::npos);
    EXPECT_NE(error_of(R"({"L": 1, "v": 0.3})").find("'initial'"), std::string::npos);
    EXPECT_NE(error_of(R"({"L": 1, "v": 0.3, "initial": {}})").find("'initial'"), std::string::npos);
    EXPECT_NE(error_of(R"({"L": 1, "v": 0.3, "initial": {"preset": {"name": "square"}}})").find("unknown preset"),
              std::string::npos);
    EXPECT_NE(error_of(R"({"L": 1, "v": 0.3, "initial": {"preset": {"name": "sine_mode", "params": {"velocity": "up"}}}})")
                  .find("initial.preset.params.velocity"),
              std::string::npos);
    EXPECT_NE(error_of(R"({"L": 1, "v": 0.3, "initial": {"preset": {"name": "bump", "params": {"center": 0.01}}}})")
                  .find("initial.preset"),
              std::string::npos);
}

TEST(Config, IllPosedSpeedIsConfigError) {
    try {
        load_config(kConfigs / "illposed.json");
        FAIL() << "v = 1.2 accepted";
    } catch (const ConfigError& e) {
        const std::string msg = e.what();
        EXPECT_NE(msg.find("'v'"), std::string::npos) << msg;
        EXPECT_NE(msg.find("0 <= v < 1"), std::string::npos) << msg;
    }
}

TEST(Config, RangeChecksAfterParsing) {
    EXPECT_NE(error_of(R"({"L": 1, "v": 0.3, "n_max": 0, "initial": {"preset": {"name": "zero"}}})").find("n_max"),
              std::string::npos);
    EXPECT_NE(error_of(R"({"L": 1, "v": 0.3, "quadrature": {"panels_per_unit": 4}, "initial": {"preset": {"name": "zero"}}})")
                  .find("panels_per_unit"),
              std::string::npos);
}

TEST(TableCsv, ParsesAndValidates) {
    std::istringstream ok("x,phi0,phi1\n0,0,0\n0.5,0.25,1\n1,0,0\n");
    EXPECT_NEAR(read_table_csv(ok, "t").phi1(0.5), 1.0, 1e-15);

    auto error_for = [](const std::string& text) {
        std::istringstream in(text);
        try {
            read_table_csv(in, "t.csv");
        } catch (const ConfigError& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    EXPECT_NE(error_for("x,phi,phi1\n0,0,0\n").find("t.csv:1"), std::string::npos);
    EXPECT_NE(error_for("x,phi0,phi1\n0,0,0\n0.5,abc,0\n1,0,0\n").find("t.csv:3"), std::string::npos);
    EXPECT_NE(error_for("x,phi0,phi1\n0,0,0\n0.5,0.1\n1,0,0\n").find("3 columns"), std::string::npos);
    EXPECT_NE(error_for("x,phi0,phi1\n0,0,0\n0.5,0.1,0\n0.5,0.1,0\n1,0,0\n").find("strictly increasing"),
              std::string::npos);
    EXPECT_NE(error_for("x,phi0,phi1\n0,0,0\n0.5,0.1,0\n1,0.2,0\n").find("vanish"), std::string::npos);
    EXPECT_FALSE(error_for("").empty());
}

TEST(TableCsv, MissingFileIsKeyError) {
    const auto dir = std::filesystem::temp_directory_path() / "axstring_config_test";
    std::filesystem::create_directories(dir);
    std::ofstream(dir / "cfg.json") << R"({"L": 1, "v": 0.3, "initial": {"table": "nope.csv"}})";
    try {
        load_config(dir / "cfg.json");
        FAIL();
    } catch (const ConfigError& e) {
        EXPECT_NE(std::string(e.what()).find("initial.table"), std::string::npos);
    }
    std::filesystem::remove_all(dir);
}

TEST(Io, NumbersRoundTrip) {
    for (double x : {0.1, kPi, -1e-300, 6.02214076e23, 1.0 / 3.0}) {
        const auto s = io::format_number(x);
        EXPECT_EQ(std::stod(s), x) << s;
    }
    EXPECT_EQ(io::format_number(0.0), "0");
    EXPECT_EQ(io::format_number(2.5), "2.5");
}

TEST(Io, CsvRejectsNonFiniteAndBadWidth) {
    io::CsvBuilder csv({"a", "b"});
    csv.row({1.0, 2.0});
    csv.row(7, {0.5});
    EXPECT_EQ(csv.str(), "a,b\n1,2\n7,0.5\n");
    EXPECT_THROW(csv.row({1.0}), EvaluationError);
    EXPECT_THROW(csv.row({1.0, std::nan("")}), EvaluationError);
}

}  // namespace
