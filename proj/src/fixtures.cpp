#include "gme/fixtures.hpp"

#include <cmath>
#include <utility>

namespace gme::fixtures {

namespace {

PureState from_terms(std::vector<int> dims, std::initializer_list<std::pair<const char*, complex_t>> terms) {
    std::vector<complex_t> amps(total_dimension(dims));
    std::vector<int> digits(dims.size());
    for (const auto& [bits, coeff] : terms) {
        for (std::size_t f = 0; f < dims.size(); ++f) digits[f] = bits[f] - '0';
        amps[flat_index(dims, digits)] += coeff;
    }
    return PureState(std::move(dims), std::move(amps), Normalization::rescale);
}

const std::vector<int> four_qubits{2, 2, 2, 2};

} // namespace

PureState ghz4() { return from_terms(four_qubits, {{"0000", 1.0}, {"1111", 1.0}}); }

PureState w4() {
    return from_terms(four_qubits, {{"1000", 1.0}, {"0100", 1.0}, {"0010", 1.0}, {"0001", 1.0}});
}

PureState psi_a() {
    return from_terms(four_qubits, {{"0000", 1.0}, {"1011", 1.0}, {"1101", 1.0}, {"1110", 1.0}});
}

PureState psi_b() {
    return from_terms(four_qubits, {{"0000", 1.0}, {"0101", 1.0}, {"1000", 1.0}, {"1110", 1.0}});
}

PureState psi_c() {
    return from_terms(four_qubits,
                      {{"0000", 1.0}, {"1111", 1.0}, {"0011", 1.0}, {"0101", 1.0}, {"0110", 1.0}});
}

// sqrt(5 sqrt(113)/32 + 51/32): the value for which the stated
// normalization 1/sqrt(4 (5 sqrt(113)/32 + 51/32) + 3) yields a unit vector.
double psi_d_coefficient() { return std::sqrt(5.0 * std::sqrt(113.0) / 32.0 + 51.0 / 32.0); }

PureState psi_d() {
    const double c = psi_d_coefficient();
    const complex_t i{0.0, 1.0};
    return from_terms(four_qubits, {{"0000", c}, {"0101", c}, {"1010", c}, {"1111", c},
                                    {"0001", i}, {"0110", 1.0}, {"1011", -i}});
}

PureState phi_12345() {
    return from_terms({2, 2, 2, 2, 2},
                      {{"00000", 1.0}, {"01010", 1.0}, {"10100", 1.0}, {"11110", 1.0}});
}

std::vector<ReferenceState> reference_states() {
    std::vector<ReferenceState> out;
    out.push_back({"GHZ4", ghz4(), 0.3333, std::nullopt, ""});
    out.push_back({"W4", w4(), 0.1875, std::nullopt,
                   "reference value corresponds to squared singleton concurrences; direct evaluation gives 1/4"});
    out.push_back({"psi_A", psi_a(), 0.3468, 0.8660, ""});
    out.push_back({"psi_B", psi_b(), 0.2788, 0.8660, ""});
    out.push_back({"psi_C", psi_c(), 0.1487, 0.8000,
                   "reference volume not reproducible from the listed amplitudes"});
    out.push_back({"psi_D", psi_d(), 0.3407, 0.8000,
                   "coefficient sqrt(5 sqrt(113)/32 + 51/32), consistent with the stated normalization"});
    out.push_back({"phi_12345", phi_12345(), 0.0, std::nullopt, "factorizes as (13)(245)"});
    return out;
}

} // namespace gme::fixtures
