#pragma once

// Physical constants, CODATA 2018. All values SI.
// Everything in this project that touches a physical constant goes through
// this file so that unit audits have a single place to look.

namespace ionclock::constants {

inline constexpr char kConstantsVersion[] = "codata2018-r1";

inline constexpr double kSpeedOfLight = 299792458.0;           // m/s (exact)
inline constexpr double kPlanckReduced = 1.054571817e-34;      // J s
inline constexpr double kElementaryCharge = 1.602176634e-19;   // C (exact)
inline constexpr double kVacuumPermittivity = 8.8541878128e-12;  // F/m
inline constexpr double kAtomicMassUnit = 1.66053906660e-27;   // kg
inline constexpr double kPi = 3.14159265358979323846;

// e^2 / (4 pi eps0), J m
inline constexpr double kCoulombConstantE2 =
    kElementaryCharge * kElementaryCharge /
    (4.0 * kPi * kVacuumPermittivity);

// Atomic masses (AME2020), atomic mass units.
inline constexpr double kMassMg25U = 24.98583696;
inline constexpr double kMassAl27U = 26.98153853;

// Al+ 1S0 <-> 3P0 clock transition frequency, Hz.
inline constexpr double kAlClockFrequencyHz = 1.121e15;

}  // namespace ionclock::constants
