#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gme {

using complex_t = std::complex<double>;

/// Largest total Hilbert dimension accepted by PureState (2^26 amplitudes).
inline constexpr std::size_t max_total_dimension = std::size_t{1} << 26;

/// Largest accepted deviation of the input norm from 1 before construction fails.
inline constexpr double norm_tolerance = 1e-9;

class state_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Parse failure carrying the 1-based line of the offending input (0 when not line-specific).
class parse_error : public state_error {
  public:
    parse_error(std::size_t line, const std::string& what);
    [[nodiscard]] std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

enum class Normalization { verify, rescale };

class PureState;
PureState permute_subsystems(const PureState& state, std::span<const int> perm);

/// Multipartite pure state over C^{d_1} x ... x C^{d_N}.
///
/// Amplitudes are stored row-major with subsystem 1 slowest-varying, i.e.
/// flat index = sum_f b_f * prod_{g>f} d_g. Parties are labelled 1..N in every
/// public interface. Instances are immutable.
class PureState {
  public:
    PureState(std::vector<int> dims, std::vector<complex_t> amplitudes,
              Normalization mode = Normalization::verify);

    [[nodiscard]] const std::vector<int>& dims() const noexcept { return dims_; }
    [[nodiscard]] std::span<const complex_t> amplitudes() const noexcept { return amps_; }
    [[nodiscard]] int parties() const noexcept { return static_cast<int>(dims_.size()); }
    [[nodiscard]] std::size_t size() const noexcept { return amps_.size(); }

    [[nodiscard]] complex_t amplitude(std::span<const int> digits) const;

    /// Row-major strides, stride[f] = prod_{g>f} d_g (0-based f).
    [[nodiscard]] std::vector<std::size_t> strides() const;

  private:
    struct unchecked_tag {};
    // Skips the norm check; used where amplitudes are a relabeling of a valid state.
    PureState(unchecked_tag, std::vector<int> dims, std::vector<complex_t> amplitudes)
        : dims_(std::move(dims)), amps_(std::move(amplitudes)) {}

    friend PureState permute_subsystems(const PureState& state, std::span<const int> perm);

    std::vector<int> dims_;
    std::vector<complex_t> amps_;
};

/// Product of dims; throws state_error if invalid or over max_total_dimension.
std::size_t total_dimension(std::span<const int> dims);

/// Flat index of a basis tuple under the row-major convention.
std::size_t flat_index(std::span<const int> dims, std::span<const int> digits);

/// Basis tuple of a flat index.
std::vector<int> basis_digits(std::span<const int> dims, std::size_t index);

PureState parse_state(std::string_view text, Normalization mode = Normalization::verify);
PureState read_state_file(const std::string& path, Normalization mode = Normalization::verify);

/// Writes the line-based state format; only nonzero amplitudes are listed.
std::string serialize_state(const PureState& state);

/// Applies a d_site x d_site unitary (row-major, u[r * d + c]) on party `site` (1-based).
PureState apply_local_unitary(const PureState& state, int site, std::span<const complex_t> u);

/// Relabels parties: new party i is old party perm[i-1] (perm is 1-based).
PureState permute_subsystems(const PureState& state, std::span<const int> perm);

/// Inverse of a 1-based permutation.
std::vector<int> inverse_permutation(std::span<const int> perm);

/// Tensor product |a> (x) |b>, parties of `a` first.
PureState tensor_product(const PureState& a, const PureState& b);

PureState product_zero_state(std::span<const int> dims);
PureState ghz_state(int parties, int local_dim = 2);
PureState w_state(int parties);

} // namespace gme
