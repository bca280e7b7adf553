#pragma once

namespace xducer {

// Fixed CODATA values. All internal quantities are SI with angular
// frequencies in rad/s; the I/O layer converts from/to ordinary Hz.
struct PhysicalConstants {
  static constexpr double hbar = 1.054571817e-34;  // J s
  static constexpr double k_boltzmann = 1.380649e-23;  // J/K
  static constexpr double c_light = 299792458.0;  // m/s
};

inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr double two_pi = 2.0 * pi;

// Default optical carrier: vacuum wavelength 1550 nm.
inline constexpr double default_wavelength = 1.55e-6;  // m

inline constexpr double omega_from_wavelength(double wavelength) {
  return two_pi * PhysicalConstants::c_light / wavelength;
}

}  // namespace xducer
