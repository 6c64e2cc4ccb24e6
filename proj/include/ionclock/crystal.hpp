#pragma once

#include <array>
#include <optional>
#include <string>

#include "ionclock/species.hpp"

namespace ionclock {

// Mechanics of a two-ion crystal in a linear RF trap: equilibrium
// separation, the six normal modes, zero-point amplitudes and the
// time-dilation shift per motional quantum of the clock ion.

enum class Axis { X = 0, Y = 1, Z = 2 };

const char* axis_name(Axis axis);

struct TrapConfig {
  double rf_drive_freq_hz = 59e6;  // nu_RF
  double rf_power_w = 0.0;         // P, feeds the AC Zeeman calibration

  // Axial DC curvature, J/m^2. Common to both ions (equal charges).
  double axial_curvature = 0.0;

  // Pure-pseudopotential radial frequency of an ion of ref_mass_kg; scales
  // as 1/mass for other species.
  double pseudo_radial_freq_ref_hz = 0.0;
  double ref_mass_kg = 0.0;

  // Static x/y curvature split, expressed in Hz^2 at ref_mass_kg and scaled
  // by m_ref/m per ion. Positive values stiffen y and soften x.
  double radial_asymmetry_hz2 = 0.0;

  // Scale frequency of the motional Stark correction 1 + (f/f_scale)^2.
  double stark_scale_freq_hz = 400e6;

  // Optional clock-ion pseudopotential frequency used only inside the
  // time-dilation factor, calibrated independently of the secular-frequency
  // fit. 0 means "derive from pseudo_radial_freq_ref_hz by mass scaling".
  double td_pseudo_clock_hz = 0.0;
};

// Single-ion secular frequencies implied by a TrapConfig.
double axial_freq_hz(const TrapConfig& trap, const IonSpecies& ion);
double pseudo_radial_freq_hz(const TrapConfig& trap, const IonSpecies& ion);
double radial_freq_sq_hz2(const TrapConfig& trap, const IonSpecies& ion, Axis axis);

struct Mode {
  double frequency_hz = 0.0;
  Axis axis = Axis::Z;
  std::array<double, 2> eigenvector{};  // mass-weighted, unit norm (logic, clock)
  std::array<double, 2> zpa_m{};        // signed zero-point amplitude per ion
  double td_per_quantum = 0.0;          // magnitude; the shift itself is red
};

struct ModeSpectrum {
  std::array<Mode, 6> modes{};  // sorted by frequency, descending
  IonSpecies logic;
  IonSpecies clock;
};

// Axial ion-ion distance minimizing harmonic + Coulomb potential. Depends
// only on charge and curvature, not on the masses.
double equilibrium_separation(const TrapConfig& trap, const IonSpecies& a,
                              const IonSpecies& b);

ModeSpectrum normal_modes(const TrapConfig& trap, const IonSpecies& logic,
                          const IonSpecies& clock);

// Fractional clock shift per motional quantum (returned as a magnitude).
double td_per_quantum(const Mode& mode, const TrapConfig& trap,
                      const IonSpecies& clock);

// Target spectrum for recovering trap parameters: two frequencies per axis
// plus, optionally, the published TD-per-quantum column used to calibrate
// td_pseudo_clock_hz.
struct ModeTargets {
  // (high, low) frequency per axis, Hz
  std::array<double, 2> x_hz{};
  std::array<double, 2> y_hz{};
  std::array<double, 2> z_hz{};
  // optional, aligned with the frequency-descending mode order, 1e-18 units
  std::array<double, 6> td_per_quantum_1e18{};
  bool has_td_targets = false;
};

struct TrapFit {
  TrapConfig trap;
  bool converged = false;
  double max_rel_residual = 0.0;
  double residual_norm = 0.0;
  int iterations = 0;
  std::string message;
};

TrapFit fit_trap_params(const ModeTargets& targets, const IonSpecies& logic,
                        const IonSpecies& clock, const TrapConfig& base);

// One-parameter fit of the clock-ion pseudopotential frequency to the four
// radial TD-per-quantum targets.
double fit_pseudo_from_td(const ModeSpectrum& spectrum, const TrapConfig& trap,
                          const std::array<double, 6>& td_targets_1e18);

}  // namespace ionclock
