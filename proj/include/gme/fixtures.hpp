#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gme/state.hpp"

namespace gme::fixtures {

/// Four-qubit example states and the five-qubit biseparable state with the
/// reference values they are compared against.
struct ReferenceState {
    std::string id;
    PureState state;
    std::optional<double> volume;  // reference V
    std::optional<double> c_gme;   // reference C_GME
    std::string note;
};

PureState ghz4();
PureState w4();
PureState psi_a();
PureState psi_b();
PureState psi_c();
PureState psi_d();
PureState phi_12345();

/// Coefficient of |0000>,|0101>,|1010>,|1111> in psi_D before normalization.
double psi_d_coefficient();

std::vector<ReferenceState> reference_states();

} // namespace gme::fixtures
