#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "rbcom/errors.hpp"
#include "rbcom/system_config.hpp"

using namespace rbcom;

TEST_CASE("default configuration validates and hashes stably")
{
    const SystemConfig cfg = default_config();
    validate(cfg);
    const std::string h = config_hash(cfg);
    CHECK(h.size() == 16);
    CHECK(h == config_hash(cfg));

    SystemConfig other = cfg;
    other.run.seed = 999;
    CHECK(h != config_hash(other));
}

TEST_CASE("serialization round-trips through text")
{
    SystemConfig cfg = default_config();
    cfg.description = "round trip probe";
    cfg.sys.network.L = 10e-9;
    cfg.sys.ac_cell.tau = 1.25e-5;
    cfg.run.seed = 77;
    cfg.run.monte_carlo.zero_noise = true;

    const std::string text = write_config(cfg);
    const SystemConfig back = parse_config(text);
    CHECK(back.description == cfg.description);
    CHECK(back.sys.network.L == cfg.sys.network.L);
    REQUIRE(back.sys.ac_cell.tau.has_value());
    CHECK(*back.sys.ac_cell.tau == 1.25e-5);
    CHECK(back.run.seed == 77);
    CHECK(back.run.monte_carlo.zero_noise);
    CHECK(config_hash(back) == config_hash(cfg));
}

TEST_CASE("nullable fields clear on explicit null")
{
    SystemConfig cfg = default_config();
    REQUIRE(cfg.sys.cavity.eta_d_override.has_value());
    std::string text = write_config(cfg);
    const auto pos = text.find("\"eta_d_override\"");
    REQUIRE(pos != std::string::npos);
    const auto colon = text.find(':', pos);
    const auto comma = text.find_first_of(",\n", colon);
    text = text.substr(0, colon + 1) + " null" + text.substr(comma);
    const SystemConfig back = parse_config(text);
    CHECK_FALSE(back.sys.cavity.eta_d_override.has_value());
}

TEST_CASE("unknown keys are rejected with their section named")
{
    SystemConfig cfg = default_config();
    std::string text = write_config(cfg);
    text.insert(text.find("\"I_0\""), "\"banana\": 1.0, ");
    try {
        parse_config(text);
        FAIL("expected a config error");
    } catch (const ConfigError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("banana") != std::string::npos);
        CHECK(msg.find("pv") != std::string::npos);
    }
}

TEST_CASE("malformed json reports a parse position")
{
    CHECK_THROWS_AS(parse_config("{ not json"), ConfigError);
    CHECK_THROWS_AS(parse_config(""), ConfigError);
}

TEST_CASE("invalid enum strings are rejected")
{
    SystemConfig cfg = default_config();
    std::string text = write_config(cfg);
    const auto pos = text.find("\"calibration\"");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 13, "\"freestyle\"");
    CHECK_THROWS_AS(parse_config(text), ConfigError);
}

TEST_CASE("named element sets switch the network and plan")
{
    SystemConfig cfg = default_config();
    apply_case(cfg, "L10");
    CHECK(cfg.sys.network.L == 10e-9);
    CHECK(cfg.sys.network.R_C == 140.0);
    CHECK(cfg.sys.ofdm.N == 200);

    apply_case(cfg, "L120");
    CHECK(cfg.sys.network.L == 120e-9);
    CHECK(cfg.sys.network.R_C == 300.0);
    CHECK(cfg.sys.ofdm.N == 120);

    CHECK_THROWS_AS(apply_case(cfg, "L77"), ConfigError);
}

TEST_CASE("file round-trip")
{
    const std::string path = "/tmp/rbcom_test_config.json";
    SystemConfig cfg = default_config();
    cfg.run.P_laser = 0.31;
    {
        std::ofstream f(path);
        f << write_config(cfg);
    }
    const SystemConfig back = load_config(path);
    CHECK(back.run.P_laser == 0.31);
    std::filesystem::remove(path);

    CHECK_THROWS_AS(load_config("/tmp/definitely_missing_rbcom.json"), ConfigError);
}

TEST_CASE("semantic validation catches bad grids")
{
    SystemConfig cfg = default_config();
    cfg.run.frequency_grid.points = 1;
    CHECK_THROWS_AS(validate(cfg), ConfigError);

    cfg = default_config();
    cfg.run.monte_carlo.oversample = 1.0;
    CHECK_THROWS_AS(validate(cfg), ConfigError);

    cfg = default_config();
    cfg.sys.ofdm.N = -3;
    CHECK_THROWS_AS(validate(cfg), DomainError);
}
