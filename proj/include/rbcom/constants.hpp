#pragma once

// Physical constants (CODATA 2018 exact/recommended values).
namespace rbcom::constants {

inline constexpr double h = 6.62607015e-34;        // Planck constant [J s]
inline constexpr double c = 299792458.0;           // speed of light [m/s]
inline constexpr double q = 1.602176634e-19;       // elementary charge [C]
inline constexpr double k_B = 1.380649e-23;        // Boltzmann constant [J/K]
inline constexpr double eps0 = 8.8541878128e-12;   // vacuum permittivity [F/m]
inline constexpr double pi = 3.141592653589793238462643383279502884;

// Photon energy per unit charge at wavelength lambda [V]; hc/(q*lambda).
constexpr double photon_volts(double lambda_m)
{
    return h * c / (q * lambda_m);
}

}  // namespace rbcom::constants
