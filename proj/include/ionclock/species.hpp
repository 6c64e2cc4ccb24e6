#pragma once

#include <string>

#include "ionclock/constants.hpp"

namespace ionclock {

struct IonSpecies {
  std::string name;
  double mass_kg = 0.0;
  int charge_e = 1;                 // elementary charges
  double clock_frequency_hz = 0.0;  // nonzero only for the clock species
};

inline IonSpecies magnesium25() {
  return {"Mg25", constants::kMassMg25U * constants::kAtomicMassUnit, 1, 0.0};
}

inline IonSpecies aluminium27() {
  return {"Al27", constants::kMassAl27U * constants::kAtomicMassUnit, 1,
          constants::kAlClockFrequencyHz};
}

}  // namespace ionclock
