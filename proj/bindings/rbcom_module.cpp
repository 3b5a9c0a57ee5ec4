// Python bindings: parameter structs, the DC/AC solver chain, noise and
// capacity analysis, and the configuration-driven analysis runner.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/complex.h>

#include "rbcom/constants.hpp"
#include "rbcom/link.hpp"
#include "rbcom/run_analysis.hpp"
#include "rbcom/system_config.hpp"

namespace py = pybind11;
using namespace rbcom;

PYBIND11_MODULE(_rbcom, m)
{
    m.doc() = "resonant-beam SWIPT link simulator";

    m.attr("ANALYSES") = kAnalyses;

    // pump
    py::class_<PumpParams>(m, "PumpParams")
        .def(py::init<>())
        .def_readwrite("lambda_pump", &PumpParams::lambda_pump)
        .def_readwrite("eta_e", &PumpParams::eta_e)
        .def_readwrite("I_th", &PumpParams::I_th);
    py::class_<PumpPower>(m, "PumpPower")
        .def_readonly("watts", &PumpPower::watts)
        .def_readonly("below_threshold", &PumpPower::below_threshold);
    m.def("photon_volts", &constants::photon_volts, py::arg("lambda_m"),
          "photon energy per unit charge [V]");
    m.def("pump_power", &pump_power, py::arg("I_in"), py::arg("params"),
          "optical pump power emitted at a drive current [W]");

    // cavity
    py::class_<CavityParams>(m, "CavityParams")
        .def(py::init<>())
        .def_readwrite("eta_s", &CavityParams::eta_s)
        .def_readwrite("R", &CavityParams::R)
        .def_readwrite("p", &CavityParams::p)
        .def_readwrite("a", &CavityParams::a)
        .def_readwrite("lambda_beam", &CavityParams::lambda_beam)
        .def_readwrite("C_offset", &CavityParams::C_offset)
        .def_readwrite("eta_d_override", &CavityParams::eta_d_override);
    py::class_<LinearGain>(m, "LinearGain")
        .def_readonly("gamma", &LinearGain::gamma)
        .def_readonly("beta", &LinearGain::beta);
    m.def("distance_gain", &distance_gain, py::arg("d"), py::arg("params"),
          "distance-resolved cavity transfer factor");
    m.def("laser_power", &laser_power, py::arg("P_pump"), py::arg("d"),
          py::arg("params"), "received laser power [W]");
    m.def("end_to_end_gain", &end_to_end_gain, py::arg("pump"), py::arg("cavity"),
          py::arg("rho"), py::arg("d"),
          "drive-current to photocurrent gain and offset");

    // PV DC
    py::class_<PVParams>(m, "PVParams")
        .def(py::init<>())
        .def_readwrite("I_0", &PVParams::I_0)
        .def_readwrite("n", &PVParams::n)
        .def_readwrite("n_s", &PVParams::n_s)
        .def_readwrite("T", &PVParams::T)
        .def_readwrite("R_s", &PVParams::R_s)
        .def_readwrite("R_sh", &PVParams::R_sh)
        .def_readwrite("rho", &PVParams::rho)
        .def_readwrite("A_pv", &PVParams::A_pv);
    py::class_<OperatingPoint>(m, "OperatingPoint")
        .def_readonly("I_ph", &OperatingPoint::I_ph)
        .def_readonly("I_pv_o", &OperatingPoint::I_pv_o)
        .def_readonly("V_pv_o", &OperatingPoint::V_pv_o)
        .def_readonly("V_d", &OperatingPoint::V_d)
        .def_readonly("I_d", &OperatingPoint::I_d)
        .def_readonly("iterations", &OperatingPoint::iterations);
    m.def("thermal_voltage", &thermal_voltage, py::arg("T"));
    m.def("photocurrent", &photocurrent, py::arg("P_optical"), py::arg("rho"));
    m.def("solve_operating_point", &solve_operating_point, py::arg("I_ph"),
          py::arg("R_L"), py::arg("params"),
          "DC bias where the cell curve meets the load line");
    m.def("open_circuit_voltage", &open_circuit_voltage, py::arg("I_ph"),
          py::arg("params"));
    m.def("output_current_at_voltage", &output_current_at_voltage, py::arg("I_ph"),
          py::arg("V_pv_o"), py::arg("params"));

    // PV AC
    py::enum_<ACCellMode>(m, "ACCellMode")
        .value("calibration", ACCellMode::calibration)
        .value("physical", ACCellMode::physical);
    py::class_<ACCellParams>(m, "ACCellParams")
        .def(py::init<>())
        .def_readwrite("mode", &ACCellParams::mode)
        .def_readwrite("epsilon", &ACCellParams::epsilon)
        .def_readwrite("N_B", &ACCellParams::N_B)
        .def_readwrite("V_0", &ACCellParams::V_0)
        .def_readwrite("tau", &ACCellParams::tau)
        .def_readwrite("calibration_r", &ACCellParams::calibration_r)
        .def_readwrite("calibration_C", &ACCellParams::calibration_C);
    py::class_<SmallSignalCell>(m, "SmallSignalCell")
        .def_readonly("r", &SmallSignalCell::r)
        .def_readonly("C", &SmallSignalCell::C);
    m.def("dynamic_resistance", &dynamic_resistance, py::arg("V_d"), py::arg("params"));
    m.def("transition_capacitance", &transition_capacitance, py::arg("V_d"),
          py::arg("pv"), py::arg("ac"));
    m.def("diffusion_capacitance", &diffusion_capacitance, py::arg("V_d"),
          py::arg("pv"), py::arg("tau"));
    m.def("fit_tau", &fit_tau, py::arg("C_target"), py::arg("V_d_anchor"),
          py::arg("pv"), py::arg("ac"));
    m.def("resolved_tau", &resolved_tau, py::arg("pv"), py::arg("ac"),
          py::arg("V_d_anchor") = 0.2833);
    m.def("small_signal_at", &small_signal_at, py::arg("op"), py::arg("pv"),
          py::arg("ac"));

    // AC network
    py::class_<SmallSignalModel>(m, "SmallSignalModel")
        .def(py::init<>())
        .def_readwrite("r", &SmallSignalModel::r)
        .def_readwrite("C", &SmallSignalModel::C)
        .def_readwrite("R_sh", &SmallSignalModel::R_sh)
        .def_readwrite("R_s", &SmallSignalModel::R_s)
        .def_readwrite("L", &SmallSignalModel::L)
        .def_readwrite("L_0", &SmallSignalModel::L_0)
        .def_readwrite("C_0", &SmallSignalModel::C_0)
        .def_readwrite("R_C", &SmallSignalModel::R_C)
        .def_readwrite("R_L", &SmallSignalModel::R_L);
    py::enum_<NoiseSource>(m, "NoiseSource")
        .value("photocurrent", NoiseSource::photocurrent)
        .value("r", NoiseSource::r)
        .value("R_sh", NoiseSource::R_sh)
        .value("R_s", NoiseSource::R_s)
        .value("R_L", NoiseSource::R_L)
        .value("R_C", NoiseSource::R_C);
    m.def("signal_response", &signal_response, py::arg("omega"), py::arg("model"),
          "closed-form photocurrent to output-voltage transfer [V/A]");
    m.def("mna_transfer", &mna_transfer, py::arg("omega"), py::arg("model"),
          py::arg("source"), "nodal-analysis transfer of one injection site");
    m.def("log_frequency_grid", &log_frequency_grid, py::arg("f_min"),
          py::arg("f_max"), py::arg("points"));
    m.def("default_frequency_grid", &default_frequency_grid);
    m.def("bandwidth_3db", &bandwidth_3db, py::arg("f_hz"), py::arg("mag2"),
          "width of the contiguous half-power region [Hz]");

    // noise
    py::class_<BackgroundParams>(m, "BackgroundParams")
        .def(py::init<>())
        .def_readwrite("eta_rx", &BackgroundParams::eta_rx)
        .def_readwrite("H_bkg", &BackgroundParams::H_bkg)
        .def_readwrite("B_if_nm", &BackgroundParams::B_if_nm)
        .def_readwrite("A_rx", &BackgroundParams::A_rx)
        .def_readwrite("Phi_rx", &BackgroundParams::Phi_rx)
        .def_readwrite("Gamma", &BackgroundParams::Gamma);
    py::enum_<ThermalConvention>(m, "ThermalConvention")
        .value("norton", ThermalConvention::norton)
        .value("legacy_4ktr", ThermalConvention::legacy_4ktr);
    py::class_<ThermalBreakdown>(m, "ThermalBreakdown")
        .def_readonly("total", &ThermalBreakdown::total)
        .def_readonly("R_C", &ThermalBreakdown::R_C)
        .def_readonly("R_sh", &ThermalBreakdown::R_sh)
        .def_readonly("R_L", &ThermalBreakdown::R_L)
        .def_readonly("r", &ThermalBreakdown::r)
        .def_readonly("R_s", &ThermalBreakdown::R_s);
    m.def("background_power", &background_power, py::arg("params"));
    m.def("background_photocurrent", &background_photocurrent, py::arg("params"),
          py::arg("rho"));
    m.def("shot_psd_input", &shot_psd_input, py::arg("P_laser"), py::arg("P_bkg"),
          py::arg("rho"));
    m.def("shot_psd_output", &shot_psd_output, py::arg("omega"), py::arg("model"),
          py::arg("psd_in"));
    m.def("thermal_psd_output", &thermal_psd_output, py::arg("omega"),
          py::arg("model"), py::arg("T"),
          py::arg("convention") = ThermalConvention::norton);

    // link
    py::class_<OFDMConfig>(m, "OFDMConfig")
        .def(py::init<>())
        .def_readwrite("N", &OFDMConfig::N)
        .def_readwrite("w", &OFDMConfig::w)
        .def_readwrite("sigma_s2", &OFDMConfig::sigma_s2)
        .def_readwrite("band_start", &OFDMConfig::band_start);
    py::class_<NetworkElements>(m, "NetworkElements")
        .def(py::init<>())
        .def_readwrite("L", &NetworkElements::L)
        .def_readwrite("L_0", &NetworkElements::L_0)
        .def_readwrite("C_0", &NetworkElements::C_0)
        .def_readwrite("R_C", &NetworkElements::R_C)
        .def_readwrite("R_L", &NetworkElements::R_L);
    py::class_<LinkSystem>(m, "LinkSystem")
        .def(py::init<>())
        .def_readwrite("pump", &LinkSystem::pump)
        .def_readwrite("cavity", &LinkSystem::cavity)
        .def_readwrite("pv", &LinkSystem::pv)
        .def_readwrite("ac_cell", &LinkSystem::ac_cell)
        .def_readwrite("network", &LinkSystem::network)
        .def_readwrite("background", &LinkSystem::background)
        .def_readwrite("ofdm", &LinkSystem::ofdm)
        .def_readwrite("thermal", &LinkSystem::thermal)
        .def_readwrite("distance", &LinkSystem::distance);
    py::class_<LinkOperatingState>(m, "LinkOperatingState")
        .def_readonly("P_laser", &LinkOperatingState::P_laser)
        .def_readonly("op", &LinkOperatingState::op)
        .def_readonly("cell", &LinkOperatingState::cell)
        .def_readonly("model", &LinkOperatingState::model)
        .def_readonly("gamma", &LinkOperatingState::gamma)
        .def_readonly("beta", &LinkOperatingState::beta)
        .def_readonly("P_chg", &LinkOperatingState::P_chg)
        .def_readonly("shot_in", &LinkOperatingState::shot_in);
    py::class_<LinkSpectra>(m, "LinkSpectra")
        .def_readonly("f_hz", &LinkSpectra::f_hz)
        .def_readonly("H", &LinkSpectra::H)
        .def_readonly("mag2", &LinkSpectra::mag2)
        .def_readonly("shot_v2hz", &LinkSpectra::shot_v2hz)
        .def_readonly("thermal_v2hz", &LinkSpectra::thermal_v2hz);
    py::class_<PowerSweepPoint>(m, "PowerSweepPoint")
        .def_readonly("P_laser", &PowerSweepPoint::P_laser)
        .def_readonly("P_chg", &PowerSweepPoint::P_chg)
        .def_readonly("capacity_bps", &PowerSweepPoint::capacity_bps);
    py::class_<MonteCarloParams>(m, "MonteCarloParams")
        .def(py::init<>())
        .def_readwrite("seed", &MonteCarloParams::seed)
        .def_readwrite("samples", &MonteCarloParams::samples)
        .def_readwrite("oversample", &MonteCarloParams::oversample)
        .def_readwrite("segments", &MonteCarloParams::segments)
        .def_readwrite("zero_noise", &MonteCarloParams::zero_noise);
    py::class_<MonteCarloResult>(m, "MonteCarloResult")
        .def_readonly("fs", &MonteCarloResult::fs)
        .def_readonly("snr", &MonteCarloResult::snr)
        .def_readonly("signal_power", &MonteCarloResult::signal_power)
        .def_readonly("noise_power", &MonteCarloResult::noise_power);
    m.def("subchannel_centers", &subchannel_centers, py::arg("ofdm"));
    m.def("assemble_at_power", &assemble_at_power, py::arg("system"),
          py::arg("P_laser"), "solve the DC bias and build the AC network");
    m.def("link_spectra", &link_spectra, py::arg("state"), py::arg("system"),
          py::arg("f_grid"));
    m.def("subchannel_snr", &subchannel_snr, py::arg("spectra"), py::arg("ofdm"),
          py::arg("gamma"));
    m.def("total_capacity", &total_capacity, py::arg("snr"), py::arg("w"));
    m.def("power_capacity_sweep", &power_capacity_sweep, py::arg("system"),
          py::arg("p_grid"), py::arg("f_grid"));
    m.def("monte_carlo_snr", &monte_carlo_snr, py::arg("state"), py::arg("system"),
          py::arg("params"),
          "time-domain SNR estimate; deterministic per seed");

    // configuration and analysis runner
    py::class_<GridSpec>(m, "GridSpec")
        .def(py::init<>())
        .def_readwrite("lo", &GridSpec::lo)
        .def_readwrite("hi", &GridSpec::hi)
        .def_readwrite("points", &GridSpec::points);
    py::class_<RunConfig>(m, "RunConfig")
        .def(py::init<>())
        .def_readwrite("P_laser", &RunConfig::P_laser)
        .def_readwrite("distance", &RunConfig::distance)
        .def_readwrite("seed", &RunConfig::seed)
        .def_readwrite("frequency_grid", &RunConfig::frequency_grid)
        .def_readwrite("power_grid", &RunConfig::power_grid)
        .def_readwrite("distance_grid", &RunConfig::distance_grid)
        .def_readwrite("iv_points", &RunConfig::iv_points)
        .def_readwrite("monte_carlo", &RunConfig::monte_carlo);
    py::class_<SystemConfig>(m, "SystemConfig")
        .def(py::init<>())
        .def_readwrite("description", &SystemConfig::description)
        .def_readwrite("I_bias", &SystemConfig::I_bias)
        .def_readwrite("sys", &SystemConfig::sys)
        .def_readwrite("run", &SystemConfig::run);
    py::class_<RunResult>(m, "RunResult")
        .def_readonly("analysis", &RunResult::analysis)
        .def_readonly("summary_json", &RunResult::summary_json)
        .def_readonly("files", &RunResult::files);
    m.def("default_config", &default_config);
    m.def("parse_config", &parse_config, py::arg("json_text"));
    m.def("load_config", &load_config, py::arg("path"));
    m.def("write_config", &write_config, py::arg("config"));
    m.def("apply_case", &apply_case, py::arg("config"), py::arg("name"),
          "switch to a named element set (L120 or L10)");
    m.def("config_hash", &config_hash, py::arg("config"));
    m.def("run_analysis", &run_analysis, py::arg("config"), py::arg("analysis"),
          py::arg("out_dir"), "run one analysis and write its outputs");
}
