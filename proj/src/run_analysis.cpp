#include "rbcom/run_analysis.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>

#include "rbcom/ac_network.hpp"
#include "rbcom/constants.hpp"
#include "rbcom/csv.hpp"
#include "rbcom/errors.hpp"

namespace rbcom {

namespace {

using json = nlohmann::json;

std::vector<double> linear_grid(double lo, double hi, int n)
{
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i)
        g[i] = lo + (hi - lo) * static_cast<double>(i) / (n - 1);
    return g;
}

double db10(double power_ratio)
{
    return 10.0 * std::log10(power_ratio);
}

// Collects CSV outputs and summary fields for one analysis run.
struct Collector {
    std::string out_dir;
    std::vector<std::string> files;
    json summary = json::object();
    std::vector<std::string> warnings;

    void csv(const std::string& name, const std::vector<std::string>& header,
             const std::vector<std::vector<double>>& rows)
    {
        const std::string path = out_dir + "/" + name;
        write_csv(path, header, rows);
        files.push_back(path);
    }
};

DriveSignal drive_from_config(const SystemConfig& cfg)
{
    DriveSignal s;
    s.I_bias = cfg.I_bias;
    const auto centers = subchannel_centers(cfg.sys.ofdm);
    const double amp = std::sqrt(2.0 * cfg.sys.ofdm.sigma_s2 / cfg.sys.ofdm.N);
    s.tones.reserve(centers.size());
    for (const double f : centers)
        s.tones.push_back({amp, f, 0.0});
    return s;
}

void check_drive(const SystemConfig& cfg, Collector& out)
{
    const DriveSignal drive = drive_from_config(cfg);
    if (!drive_stays_above_threshold(drive, cfg.sys.pump))
        out.warnings.push_back(
            "drive current can swing below the pump threshold for worst-case "
            "tone alignment; the linear pump model is then optimistic");
}

json op_json(const LinkOperatingState& st)
{
    return json{{"P_laser_W", st.P_laser},
                {"I_ph_A", st.op.I_ph},
                {"I_pv_o_A", st.op.I_pv_o},
                {"V_pv_o_V", st.op.V_pv_o},
                {"V_d_V", st.op.V_d},
                {"I_d_A", st.op.I_d},
                {"P_chg_W", st.P_chg},
                {"iterations", st.op.iterations},
                {"gamma", st.gamma},
                {"beta_A", st.beta},
                {"r_ohm", st.cell.r},
                {"C_F", st.cell.C},
                {"shot_psd_A2Hz", st.shot_in}};
}

void run_iv_curve(const SystemConfig& cfg, Collector& out)
{
    const PVParams& pv = cfg.sys.pv;
    const double i_ph = photocurrent(cfg.run.P_laser, pv.rho);
    const double v_oc = open_circuit_voltage(i_ph, pv);

    const auto v_grid = linear_grid(0.0, v_oc, cfg.run.iv_points);
    std::vector<std::vector<double>> rows;
    for (const auto& pt : iv_curve(i_ph, pv, v_grid))
        rows.push_back({pt.V_pv_o, pt.I_pv_o});
    out.csv("iv_curve.csv", {"V_pv_o", "I_pv_o"}, rows);

    const auto iph_grid = linear_grid(0.0, 0.5, cfg.run.iv_points);
    rows.clear();
    for (const auto& pt : output_vs_photocurrent(iph_grid, cfg.sys.network.R_L, pv))
        rows.push_back({pt.I_ph, pt.I_pv_o});
    out.csv("output_vs_photocurrent.csv", {"I_ph", "I_pv_o"}, rows);

    out.summary = {{"I_ph_A", i_ph}, {"V_oc_V", v_oc}, {"R_L_ohm", cfg.sys.network.R_L}};
}

void run_operating_point(const SystemConfig& cfg, Collector& out)
{
    const LinkOperatingState st = assemble_at_power(cfg.sys, cfg.run.P_laser);
    out.summary = op_json(st);
    check_drive(cfg, out);
}

void run_small_signal(const SystemConfig& cfg, Collector& out)
{
    const PVParams& pv = cfg.sys.pv;
    const LinkOperatingState st = assemble_at_power(cfg.sys, cfg.run.P_laser);
    const double tau = resolved_tau(pv, cfg.sys.ac_cell);

    // Bias-resolved curves come from the physical formulas regardless of
    // mode; the summary reports the values the link actually uses.
    const double i_ph = st.op.I_ph;
    const double v_oc = open_circuit_voltage(i_ph, pv);
    const auto v_grid = linear_grid(0.0, v_oc, cfg.run.iv_points);
    std::vector<std::vector<double>> rows;
    for (const double v : v_grid) {
        const double i = output_current_at_voltage(i_ph, v, pv);
        const double v_d = v + i * pv.R_s;
        const double c = transition_capacitance(v_d, pv, cfg.sys.ac_cell) +
                         diffusion_capacitance(v_d, pv, tau);
        rows.push_back({v, dynamic_resistance(v_d, pv), c});
    }
    out.csv("small_signal.csv", {"V_pv_o", "r_ohm", "C_farad"}, rows);

    const double omega_top = 2.0 * constants::pi * cfg.run.frequency_grid.hi;
    if (!diffusion_model_valid(omega_top, tau))
        out.warnings.push_back(
            "omega*tau exceeds 0.1 at the top of the analysis band; the "
            "quasi-static diffusion capacitance is not valid there");

    out.summary = {{"mode", cfg.sys.ac_cell.mode == ACCellMode::calibration
                                ? "calibration"
                                : "physical"},
                   {"r_used_ohm", st.cell.r},
                   {"C_used_F", st.cell.C},
                   {"r_physical_ohm", dynamic_resistance(st.op.V_d, pv)},
                   {"C_T_F", transition_capacitance(st.op.V_d, pv, cfg.sys.ac_cell)},
                   {"C_d_F", diffusion_capacitance(st.op.V_d, pv, tau)},
                   {"tau_s", tau},
                   {"V_d_V", st.op.V_d}};
}

void run_freq_response(const SystemConfig& cfg, Collector& out)
{
    const LinkOperatingState st = assemble_at_power(cfg.sys, cfg.run.P_laser);
    const auto f_grid = log_frequency_grid(cfg.run.frequency_grid.lo,
                                           cfg.run.frequency_grid.hi,
                                           cfg.run.frequency_grid.points);

    std::vector<std::vector<double>> rows(f_grid.size());
    std::vector<double> mag2(f_grid.size());
    double max_rel_err = 0.0;
    for (std::size_t i = 0; i < f_grid.size(); ++i) {
        const double omega = 2.0 * constants::pi * f_grid[i];
        const auto h = signal_response(omega, st.model);
        const auto t = mna_transfers(omega, st.model);
        mag2[i] = std::norm(h);
        rows[i] = {f_grid[i],          db10(std::norm(h)),    db10(std::norm(t.R_C)),
                   db10(std::norm(t.R_sh)), db10(std::norm(t.R_L)), db10(std::norm(t.r)),
                   db10(std::norm(t.R_s))};
        const double rel = std::abs(h - t.photocurrent) / std::abs(t.photocurrent);
        max_rel_err = std::max(max_rel_err, rel);
    }
    out.csv("freq_response.csv",
            {"f_Hz", "H2_signal_dB", "H2_RC_dB", "H2_Rsh_dB", "H2_RL_dB",
             "H2_r_dB", "H2_Rs_dB"},
            rows);

    out.summary = {{"bandwidth_3db_Hz", bandwidth_3db(f_grid, mag2)},
                   {"closed_form_vs_nodal_max_rel_err", max_rel_err},
                   {"r_ohm", st.cell.r},
                   {"C_F", st.cell.C}};
}

void run_noise(const SystemConfig& cfg, Collector& out)
{
    const LinkOperatingState st = assemble_at_power(cfg.sys, cfg.run.P_laser);
    const auto f_grid = log_frequency_grid(cfg.run.frequency_grid.lo,
                                           cfg.run.frequency_grid.hi,
                                           cfg.run.frequency_grid.points);
    const LinkSpectra sp = link_spectra(st, cfg.sys, f_grid);

    std::vector<std::vector<double>> rows(f_grid.size());
    for (std::size_t i = 0; i < f_grid.size(); ++i)
        rows[i] = {f_grid[i],         sp.shot_v2hz[i],   sp.thermal_v2hz[i],
                   sp.thermal_R_C[i], sp.thermal_R_sh[i], sp.thermal_R_L[i],
                   sp.thermal_r[i],   sp.thermal_R_s[i]};
    out.csv("noise.csv",
            {"f_Hz", "shot_V2Hz", "thermal_total_V2Hz", "thermal_RC_V2Hz",
             "thermal_Rsh_V2Hz", "thermal_RL_V2Hz", "thermal_r_V2Hz",
             "thermal_Rs_V2Hz"},
            rows);

    out.summary = {{"P_bkg_W", background_power(cfg.sys.background)},
                   {"I_ph_bkg_A",
                    background_photocurrent(cfg.sys.background, cfg.sys.pv.rho)},
                   {"shot_psd_A2Hz", st.shot_in},
                   {"thermal_convention",
                    cfg.sys.thermal == ThermalConvention::norton ? "norton"
                                                                 : "legacy_4ktr"}};
}

void run_snr_capacity(const SystemConfig& cfg, Collector& out)
{
    const LinkOperatingState st = assemble_at_power(cfg.sys, cfg.run.P_laser);
    const auto f_grid = log_frequency_grid(cfg.run.frequency_grid.lo,
                                           cfg.run.frequency_grid.hi,
                                           cfg.run.frequency_grid.points);
    const LinkSpectra sp = link_spectra(st, cfg.sys, f_grid);
    const auto snr = subchannel_snr(sp, cfg.sys.ofdm, st.gamma);
    const auto centers = subchannel_centers(cfg.sys.ofdm);

    std::vector<std::vector<double>> rows(snr.size());
    for (std::size_t i = 0; i < snr.size(); ++i)
        rows[i] = {centers[i] / 1e6, db10(snr[i]),
                   cfg.sys.ofdm.w * std::log2(1.0 + snr[i]) / 1e6};
    out.csv("snr_capacity.csv", {"f_MHz", "SNR_dB", "capacity_Mbps"}, rows);

    out.summary = {{"total_capacity_bps", total_capacity(snr, cfg.sys.ofdm.w)},
                   {"bandwidth_3db_Hz", bandwidth_3db(f_grid, sp.mag2)},
                   {"P_chg_W", st.P_chg},
                   {"gamma", st.gamma},
                   {"sigma_ph_ac2_A2", st.gamma * st.gamma * cfg.sys.ofdm.sigma_s2},
                   {"operating_point", op_json(st)}};
    check_drive(cfg, out);
}

void run_power_sweep(const SystemConfig& cfg, Collector& out)
{
    const auto p_grid = linear_grid(cfg.run.power_grid.lo, cfg.run.power_grid.hi,
                                    cfg.run.power_grid.points);
    const auto f_grid = log_frequency_grid(cfg.run.frequency_grid.lo,
                                           cfg.run.frequency_grid.hi,
                                           cfg.run.frequency_grid.points);
    const auto points = power_capacity_sweep(cfg.sys, p_grid, f_grid);

    std::vector<std::vector<double>> rows(points.size());
    bool chg_up = true;
    bool cap_down = true;
    for (std::size_t i = 0; i < points.size(); ++i) {
        rows[i] = {points[i].P_laser, points[i].P_chg, points[i].capacity_bps / 1e9};
        if (i > 0) {
            chg_up = chg_up && points[i].P_chg > points[i - 1].P_chg;
            cap_down = cap_down && points[i].capacity_bps < points[i - 1].capacity_bps;
        }
    }
    out.csv("power_sweep.csv", {"P_laser_W", "P_chg_W", "capacity_Gbps"}, rows);

    out.summary = {{"P_chg_monotone_increasing", chg_up},
                   {"capacity_monotone_decreasing", cap_down},
                   {"max_P_chg_W", points.empty() ? 0.0 : points.back().P_chg}};
}

void run_distance_sweep(const SystemConfig& cfg, Collector& out)
{
    // The sweep exercises the distance-resolved gain, so the fixed override
    // used by the calibrated run path is ignored here.
    CavityParams cav = cfg.sys.cavity;
    cav.eta_d_override.reset();

    const PumpPower pump = pump_power(cfg.I_bias, cfg.sys.pump);
    if (pump.below_threshold)
        out.warnings.push_back("pump bias is at or below threshold; no emission");

    const auto d_grid = log_frequency_grid(cfg.run.distance_grid.lo,
                                           cfg.run.distance_grid.hi,
                                           cfg.run.distance_grid.points);
    std::vector<std::vector<double>> rows(d_grid.size());
    for (std::size_t i = 0; i < d_grid.size(); ++i) {
        const double f_d = distance_gain(d_grid[i], cav);
        rows[i] = {d_grid[i], f_d, laser_power(pump.watts, d_grid[i], cav)};
    }
    out.csv("distance_sweep.csv", {"d_m", "f_d", "P_laser_W"}, rows);

    out.summary = {{"P_pump_W", pump.watts},
                   {"I_bias_A", cfg.I_bias},
                   {"below_threshold", pump.below_threshold}};
}

void run_monte_carlo(const SystemConfig& cfg, Collector& out)
{
    const LinkOperatingState st = assemble_at_power(cfg.sys, cfg.run.P_laser);
    const auto f_grid = log_frequency_grid(cfg.run.frequency_grid.lo,
                                           cfg.run.frequency_grid.hi,
                                           cfg.run.frequency_grid.points);
    const LinkSpectra sp = link_spectra(st, cfg.sys, f_grid);
    const auto snr_analytic = subchannel_snr(sp, cfg.sys.ofdm, st.gamma);

    MonteCarloParams mc = cfg.run.monte_carlo;
    mc.seed = cfg.run.seed;
    const MonteCarloResult res = monte_carlo_snr(st, cfg.sys, mc);

    const auto centers = subchannel_centers(cfg.sys.ofdm);
    std::vector<std::vector<double>> rows(centers.size());
    int within = 0;
    for (std::size_t i = 0; i < centers.size(); ++i) {
        const double a_db = db10(snr_analytic[i]);
        const double m_db = db10(res.snr[i]);
        rows[i] = {centers[i] / 1e6, a_db, m_db};
        if (std::abs(a_db - m_db) <= 1.0)
            ++within;
    }
    out.csv("monte_carlo.csv", {"f_MHz", "SNR_analytic_dB", "SNR_mc_dB"}, rows);

    out.summary = {{"samples", mc.samples},
                   {"seed", mc.seed},
                   {"sample_rate_Hz", res.fs},
                   {"segments", mc.segments},
                   {"zero_noise", mc.zero_noise},
                   {"fraction_within_1dB",
                    centers.empty() ? 0.0
                                    : static_cast<double>(within) /
                                          static_cast<double>(centers.size())}};
    check_drive(cfg, out);
}

}  // namespace

RunResult run_analysis(const SystemConfig& cfg, const std::string& analysis,
                       const std::string& out_dir)
{
    validate(cfg);
    if (std::find(kAnalyses.begin(), kAnalyses.end(), analysis) == kAnalyses.end()) {
        std::string names;
        for (const auto& a : kAnalyses)
            names += (names.empty() ? "" : ", ") + a;
        throw ConfigError("unknown analysis '" + analysis + "' (expected one of: " +
                          names + ")");
    }

    std::filesystem::create_directories(out_dir);
    Collector out;
    out.out_dir = out_dir;

    if (analysis == "iv-curve")
        run_iv_curve(cfg, out);
    else if (analysis == "operating-point")
        run_operating_point(cfg, out);
    else if (analysis == "small-signal")
        run_small_signal(cfg, out);
    else if (analysis == "freq-response")
        run_freq_response(cfg, out);
    else if (analysis == "noise")
        run_noise(cfg, out);
    else if (analysis == "snr-capacity")
        run_snr_capacity(cfg, out);
    else if (analysis == "power-sweep")
        run_power_sweep(cfg, out);
    else if (analysis == "distance-sweep")
        run_distance_sweep(cfg, out);
    else
        run_monte_carlo(cfg, out);

    json doc;
    doc["analysis"] = analysis;
    doc["config_hash"] = config_hash(cfg);
    json names = json::array();
    for (const auto& f : out.files)
        names.push_back(std::filesystem::path(f).filename().string());
    std::sort(names.begin(), names.end());
    doc["files"] = names;
    doc["summary"] = out.summary;
    doc["warnings"] = out.warnings;

    RunResult result;
    result.analysis = analysis;
    result.summary_json = doc.dump(2) + "\n";
    const std::string summary_path = out_dir + "/summary.json";
    {
        std::ofstream f(summary_path, std::ios::binary);
        if (!f)
            throw ConfigError("cannot open '" + summary_path + "' for writing");
        f << result.summary_json;
    }
    result.files = out.files;
    result.files.push_back(summary_path);
    return result;
}

}  // namespace rbcom
