#include "rbcom/system_config.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

#include "rbcom/errors.hpp"

namespace rbcom {

namespace {

using json = nlohmann::json;

// Reads one JSON section with defaults already in place; every accessor
// registers its key so unknown keys can be rejected afterwards.
class SectionReader {
public:
    SectionReader(const json& j, std::string name)
        : j_(j), name_(std::move(name))
    {
        if (!j_.is_object())
            throw ConfigError("config: section '" + name_ + "' must be an object");
    }

    void number(const char* key, double& out)
    {
        allowed_.insert(key);
        if (!j_.contains(key))
            return;
        const json& v = j_.at(key);
        if (!v.is_number())
            throw ConfigError(field(key) + " must be a number");
        out = v.get<double>();
    }

    void integer(const char* key, int& out)
    {
        allowed_.insert(key);
        if (!j_.contains(key))
            return;
        const json& v = j_.at(key);
        if (!v.is_number_integer())
            throw ConfigError(field(key) + " must be an integer");
        out = v.get<int>();
    }

    void unsigned64(const char* key, std::uint64_t& out)
    {
        allowed_.insert(key);
        if (!j_.contains(key))
            return;
        const json& v = j_.at(key);
        if (!v.is_number_integer() || (v.is_number_integer() && v.get<long long>() < 0))
            throw ConfigError(field(key) + " must be a non-negative integer");
        out = v.get<std::uint64_t>();
    }

    void size(const char* key, std::size_t& out)
    {
        std::uint64_t v = out;
        unsigned64(key, v);
        out = static_cast<std::size_t>(v);
    }

    void boolean(const char* key, bool& out)
    {
        allowed_.insert(key);
        if (!j_.contains(key))
            return;
        const json& v = j_.at(key);
        if (!v.is_boolean())
            throw ConfigError(field(key) + " must be a boolean");
        out = v.get<bool>();
    }

    void text(const char* key, std::string& out)
    {
        allowed_.insert(key);
        if (!j_.contains(key))
            return;
        const json& v = j_.at(key);
        if (!v.is_string())
            throw ConfigError(field(key) + " must be a string");
        out = v.get<std::string>();
    }

    // number or null; null clears the optional
    void optional_number(const char* key, std::optional<double>& out)
    {
        allowed_.insert(key);
        if (!j_.contains(key))
            return;
        const json& v = j_.at(key);
        if (v.is_null()) {
            out.reset();
            return;
        }
        if (!v.is_number())
            throw ConfigError(field(key) + " must be a number or null");
        out = v.get<double>();
    }

    bool has(const char* key)
    {
        allowed_.insert(key);
        return j_.contains(key);
    }

    const json& child(const char* key) { return j_.at(key); }

    void finish() const
    {
        for (const auto& item : j_.items())
            if (!allowed_.count(item.key()))
                throw ConfigError("config: unknown key '" + item.key() +
                                  "' in section '" + name_ + "'");
    }

private:
    std::string field(const char* key) const
    {
        return "config: " + name_ + "." + key;
    }

    const json& j_;
    std::string name_;
    std::set<std::string> allowed_;
};

void read_grid(const json& j, const std::string& name, const char* lo_key,
               const char* hi_key, GridSpec& out)
{
    SectionReader r(j, name);
    r.number(lo_key, out.lo);
    r.number(hi_key, out.hi);
    r.integer("points", out.points);
    r.finish();
}

json grid_json(const GridSpec& g, const char* lo_key, const char* hi_key)
{
    return json{{lo_key, g.lo}, {hi_key, g.hi}, {"points", g.points}};
}

std::string mode_name(ACCellMode m)
{
    return m == ACCellMode::calibration ? "calibration" : "physical";
}

std::string convention_name(ThermalConvention c)
{
    return c == ThermalConvention::norton ? "norton" : "legacy_4ktr";
}

}  // namespace

SystemConfig default_config()
{
    return SystemConfig{};
}

SystemConfig parse_config(const std::string& json_text)
{
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config: JSON parse error at byte ") +
                          std::to_string(e.byte) + ": " + e.what());
    }

    SystemConfig cfg = default_config();
    SectionReader top(root, "top-level");
    top.text("description", cfg.description);

    if (top.has("pump")) {
        SectionReader r(top.child("pump"), "pump");
        r.number("lambda_pump", cfg.sys.pump.lambda_pump);
        r.number("eta_e", cfg.sys.pump.eta_e);
        r.number("I_th", cfg.sys.pump.I_th);
        r.number("I_bias", cfg.I_bias);
        r.finish();
    }
    if (top.has("cavity")) {
        SectionReader r(top.child("cavity"), "cavity");
        r.number("eta_s", cfg.sys.cavity.eta_s);
        r.number("R", cfg.sys.cavity.R);
        r.number("p", cfg.sys.cavity.p);
        r.number("a", cfg.sys.cavity.a);
        r.number("lambda_beam", cfg.sys.cavity.lambda_beam);
        r.number("C_offset", cfg.sys.cavity.C_offset);
        r.optional_number("eta_d_override", cfg.sys.cavity.eta_d_override);
        r.finish();
    }
    if (top.has("pv")) {
        SectionReader r(top.child("pv"), "pv");
        r.number("I_0", cfg.sys.pv.I_0);
        r.number("n", cfg.sys.pv.n);
        r.number("n_s", cfg.sys.pv.n_s);
        r.number("T", cfg.sys.pv.T);
        r.number("R_s", cfg.sys.pv.R_s);
        r.number("R_sh", cfg.sys.pv.R_sh);
        r.number("rho", cfg.sys.pv.rho);
        r.number("A_pv", cfg.sys.pv.A_pv);
        r.finish();
    }
    if (top.has("ac_cell")) {
        SectionReader r(top.child("ac_cell"), "ac_cell");
        std::string mode = mode_name(cfg.sys.ac_cell.mode);
        r.text("mode", mode);
        if (mode == "calibration")
            cfg.sys.ac_cell.mode = ACCellMode::calibration;
        else if (mode == "physical")
            cfg.sys.ac_cell.mode = ACCellMode::physical;
        else
            throw ConfigError("config: ac_cell.mode must be 'calibration' or 'physical'");
        r.number("epsilon", cfg.sys.ac_cell.epsilon);
        r.number("N_B", cfg.sys.ac_cell.N_B);
        r.number("V_0", cfg.sys.ac_cell.V_0);
        r.optional_number("tau", cfg.sys.ac_cell.tau);
        r.number("calibration_r", cfg.sys.ac_cell.calibration_r);
        r.number("calibration_C", cfg.sys.ac_cell.calibration_C);
        r.finish();
    }
    if (top.has("network")) {
        SectionReader r(top.child("network"), "network");
        r.number("L", cfg.sys.network.L);
        r.number("L_0", cfg.sys.network.L_0);
        r.number("C_0", cfg.sys.network.C_0);
        r.number("R_C", cfg.sys.network.R_C);
        r.number("R_L", cfg.sys.network.R_L);
        r.finish();
    }
    if (top.has("background")) {
        SectionReader r(top.child("background"), "background");
        r.number("eta_rx", cfg.sys.background.eta_rx);
        r.number("H_bkg", cfg.sys.background.H_bkg);
        r.number("B_if_nm", cfg.sys.background.B_if_nm);
        r.number("A_rx", cfg.sys.background.A_rx);
        r.number("Phi_rx", cfg.sys.background.Phi_rx);
        r.number("Gamma", cfg.sys.background.Gamma);
        r.finish();
    }
    if (top.has("ofdm")) {
        SectionReader r(top.child("ofdm"), "ofdm");
        r.integer("N", cfg.sys.ofdm.N);
        r.number("w", cfg.sys.ofdm.w);
        r.number("sigma_s2", cfg.sys.ofdm.sigma_s2);
        r.number("band_start", cfg.sys.ofdm.band_start);
        r.finish();
    }
    if (top.has("run")) {
        SectionReader r(top.child("run"), "run");
        r.number("P_laser", cfg.run.P_laser);
        r.number("distance", cfg.run.distance);
        std::string conv = convention_name(cfg.sys.thermal);
        r.text("thermal_convention", conv);
        if (conv == "norton")
            cfg.sys.thermal = ThermalConvention::norton;
        else if (conv == "legacy_4ktr")
            cfg.sys.thermal = ThermalConvention::legacy_4ktr;
        else
            throw ConfigError(
                "config: run.thermal_convention must be 'norton' or 'legacy_4ktr'");
        r.unsigned64("seed", cfg.run.seed);
        if (r.has("frequency_grid"))
            read_grid(r.child("frequency_grid"), "run.frequency_grid", "f_min",
                      "f_max", cfg.run.frequency_grid);
        if (r.has("power_grid"))
            read_grid(r.child("power_grid"), "run.power_grid", "p_min", "p_max",
                      cfg.run.power_grid);
        if (r.has("distance_grid"))
            read_grid(r.child("distance_grid"), "run.distance_grid", "d_min",
                      "d_max", cfg.run.distance_grid);
        r.integer("iv_points", cfg.run.iv_points);
        if (r.has("monte_carlo")) {
            SectionReader mc(r.child("monte_carlo"), "run.monte_carlo");
            mc.size("samples", cfg.run.monte_carlo.samples);
            mc.number("oversample", cfg.run.monte_carlo.oversample);
            mc.integer("segments", cfg.run.monte_carlo.segments);
            mc.boolean("zero_noise", cfg.run.monte_carlo.zero_noise);
            mc.finish();
        }
        r.finish();
    }
    top.finish();

    cfg.sys.distance = cfg.run.distance;
    validate(cfg);
    return cfg;
}

SystemConfig load_config(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError("config: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

namespace {

json to_json(const SystemConfig& cfg)
{
    json j;
    j["description"] = cfg.description;
    j["pump"] = {{"lambda_pump", cfg.sys.pump.lambda_pump},
                 {"eta_e", cfg.sys.pump.eta_e},
                 {"I_th", cfg.sys.pump.I_th},
                 {"I_bias", cfg.I_bias}};
    j["cavity"] = {{"eta_s", cfg.sys.cavity.eta_s},
                   {"R", cfg.sys.cavity.R},
                   {"p", cfg.sys.cavity.p},
                   {"a", cfg.sys.cavity.a},
                   {"lambda_beam", cfg.sys.cavity.lambda_beam},
                   {"C_offset", cfg.sys.cavity.C_offset},
                   {"eta_d_override", cfg.sys.cavity.eta_d_override
                                          ? json(*cfg.sys.cavity.eta_d_override)
                                          : json(nullptr)}};
    j["pv"] = {{"I_0", cfg.sys.pv.I_0},   {"n", cfg.sys.pv.n},
               {"n_s", cfg.sys.pv.n_s},   {"T", cfg.sys.pv.T},
               {"R_s", cfg.sys.pv.R_s},   {"R_sh", cfg.sys.pv.R_sh},
               {"rho", cfg.sys.pv.rho},   {"A_pv", cfg.sys.pv.A_pv}};
    j["ac_cell"] = {{"mode", mode_name(cfg.sys.ac_cell.mode)},
                    {"epsilon", cfg.sys.ac_cell.epsilon},
                    {"N_B", cfg.sys.ac_cell.N_B},
                    {"V_0", cfg.sys.ac_cell.V_0},
                    {"tau", cfg.sys.ac_cell.tau ? json(*cfg.sys.ac_cell.tau)
                                                : json(nullptr)},
                    {"calibration_r", cfg.sys.ac_cell.calibration_r},
                    {"calibration_C", cfg.sys.ac_cell.calibration_C}};
    j["network"] = {{"L", cfg.sys.network.L},
                    {"L_0", cfg.sys.network.L_0},
                    {"C_0", cfg.sys.network.C_0},
                    {"R_C", cfg.sys.network.R_C},
                    {"R_L", cfg.sys.network.R_L}};
    j["background"] = {{"eta_rx", cfg.sys.background.eta_rx},
                       {"H_bkg", cfg.sys.background.H_bkg},
                       {"B_if_nm", cfg.sys.background.B_if_nm},
                       {"A_rx", cfg.sys.background.A_rx},
                       {"Phi_rx", cfg.sys.background.Phi_rx},
                       {"Gamma", cfg.sys.background.Gamma}};
    j["ofdm"] = {{"N", cfg.sys.ofdm.N},
                 {"w", cfg.sys.ofdm.w},
                 {"sigma_s2", cfg.sys.ofdm.sigma_s2},
                 {"band_start", cfg.sys.ofdm.band_start}};
    j["run"] = {
        {"P_laser", cfg.run.P_laser},
        {"distance", cfg.run.distance},
        {"thermal_convention", convention_name(cfg.sys.thermal)},
        {"seed", cfg.run.seed},
        {"frequency_grid", grid_json(cfg.run.frequency_grid, "f_min", "f_max")},
        {"power_grid", grid_json(cfg.run.power_grid, "p_min", "p_max")},
        {"distance_grid", grid_json(cfg.run.distance_grid, "d_min", "d_max")},
        {"iv_points", cfg.run.iv_points},
        {"monte_carlo",
         {{"samples", cfg.run.monte_carlo.samples},
          {"oversample", cfg.run.monte_carlo.oversample},
          {"segments", cfg.run.monte_carlo.segments},
          {"zero_noise", cfg.run.monte_carlo.zero_noise}}},
    };
    return j;
}

}  // namespace

std::string write_config(const SystemConfig& cfg)
{
    return to_json(cfg).dump(2) + "\n";
}

void apply_case(SystemConfig& cfg, const std::string& name)
{
    if (name == "L120") {
        cfg.sys.network.L = 120e-9;
        cfg.sys.network.R_C = 300.0;
        cfg.sys.ofdm.N = 120;
    } else if (name == "L10") {
        cfg.sys.network.L = 10e-9;
        cfg.sys.network.R_C = 140.0;
        cfg.sys.ofdm.N = 200;
    } else {
        throw ConfigError("config: unknown case '" + name + "' (expected L120 or L10)");
    }
}

std::string config_hash(const SystemConfig& cfg)
{
    const std::string canonical = to_json(cfg).dump();
    std::uint64_t h = 1469598103934665603ull;
    for (const unsigned char c : canonical) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

void validate(const SystemConfig& cfg)
{
    validate(cfg.sys.pump);
    validate(cfg.sys.cavity);
    validate(cfg.sys.pv);
    validate(cfg.sys.ac_cell);
    validate(cfg.sys.background);
    validate(cfg.sys.ofdm);

    const NetworkElements& net = cfg.sys.network;
    const double elems[] = {net.L, net.L_0, net.C_0, net.R_C, net.R_L};
    for (const double v : elems)
        if (!(v > 0.0))
            throw ConfigError("config: network elements must be positive");

    if (cfg.I_bias < 0.0)
        throw ConfigError("config: pump.I_bias must be non-negative");
    if (cfg.run.P_laser < 0.0)
        throw ConfigError("config: run.P_laser must be non-negative");
    if (!(cfg.run.distance > 0.0))
        throw ConfigError("config: run.distance must be positive");

    const auto check_log_grid = [](const GridSpec& g, const char* name) {
        if (!(g.lo > 0.0) || !(g.hi > g.lo) || g.points < 2)
            throw ConfigError(std::string("config: ") + name +
                              " requires 0 < lo < hi and points >= 2");
    };
    check_log_grid(cfg.run.frequency_grid, "run.frequency_grid");
    check_log_grid(cfg.run.distance_grid, "run.distance_grid");
    if (cfg.run.power_grid.lo < 0.0 || !(cfg.run.power_grid.hi > cfg.run.power_grid.lo) ||
        cfg.run.power_grid.points < 2)
        throw ConfigError("config: run.power_grid requires 0 <= lo < hi and points >= 2");
    if (cfg.run.iv_points < 2)
        throw ConfigError("config: run.iv_points must be at least 2");

    const MonteCarloParams& mc = cfg.run.monte_carlo;
    if (!(mc.oversample > 2.0))
        throw ConfigError("config: run.monte_carlo.oversample must exceed 2");
    if (mc.segments < 1 || mc.samples == 0 ||
        mc.samples % static_cast<std::size_t>(mc.segments) != 0)
        throw ConfigError("config: run.monte_carlo.samples must divide into segments");
}

}  // namespace rbcom
