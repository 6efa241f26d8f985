#pragma once

namespace vat::constants {

// SI values (2018 CODATA / exact SI definitions)
inline constexpr double hbar = 1.054571817e-34;          // J s
inline constexpr double k_boltzmann = 1.380649e-23;      // J/K (exact)
inline constexpr double electron_volt = 1.602176634e-19; // J (exact)
inline constexpr double atomic_mass_unit = 1.66054e-27;  // kg

inline constexpr double milli_electron_volt = 1e-3 * electron_volt; // J
inline constexpr double angstrom = 1e-10;                           // m

inline constexpr double euler_gamma = 0.5772156649015329;

} // namespace vat::constants
