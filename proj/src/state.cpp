#include "gme/state.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include <fmt/format.h>

namespace gme {

namespace {

// Unitarity defect accepted by apply_local_unitary.
constexpr double unitary_tolerance = 1e-10;

double squared_norm(std::span<const complex_t> v) {
    double s = 0.0;
    for (const auto& z : v) s += std::norm(z);
    return s;
}

void check_dims(std::span<const int> dims) {
    if (dims.size() < 2) throw state_error("a multipartite state needs at least 2 parties");
    for (int d : dims)
        if (d < 2) throw state_error(fmt::format("local dimension {} is below 2", d));
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

template <typename T>
T parse_number(std::string_view tok, std::size_t line, const char* what) {
    T value{};
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw parse_error(line, fmt::format("invalid {} '{}'", what, tok));
    return value;
}

} // namespace

parse_error::parse_error(std::size_t line, const std::string& what)
    : state_error(line > 0 ? fmt::format("line {}: {}", line, what) : what), line_(line) {}

std::size_t total_dimension(std::span<const int> dims) {
    std::size_t total = 1;
    for (int d : dims) {
        if (d < 1) throw state_error(fmt::format("local dimension {} is not positive", d));
        total *= static_cast<std::size_t>(d);
        if (total > max_total_dimension)
            throw state_error(fmt::format("total dimension exceeds the cap of {} amplitudes",
                                          max_total_dimension));
    }
    return total;
}

std::size_t flat_index(std::span<const int> dims, std::span<const int> digits) {
    if (digits.size() != dims.size()) throw state_error("basis tuple length differs from party count");
    std::size_t idx = 0;
    for (std::size_t f = 0; f < dims.size(); ++f) {
        if (digits[f] < 0 || digits[f] >= dims[f])
            throw state_error(fmt::format("basis digit {} of party {} outside [0, {})", digits[f],
                                          f + 1, dims[f]));
        idx = idx * static_cast<std::size_t>(dims[f]) + static_cast<std::size_t>(digits[f]);
    }
    return idx;
}

std::vector<int> basis_digits(std::span<const int> dims, std::size_t index) {
    std::vector<int> digits(dims.size());
    for (std::size_t f = dims.size(); f-- > 0;) {
        digits[f] = static_cast<int>(index % static_cast<std::size_t>(dims[f]));
        index /= static_cast<std::size_t>(dims[f]);
    }
    return digits;
}

PureState::PureState(std::vector<int> dims, std::vector<complex_t> amplitudes, Normalization mode)
    : dims_(std::move(dims)), amps_(std::move(amplitudes)) {
    check_dims(dims_);
    const auto total = total_dimension(dims_);
    if (amps_.size() != total)
        throw state_error(fmt::format("expected {} amplitudes, got {}", total, amps_.size()));
    for (const auto& z : amps_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw state_error("amplitudes must be finite");

    const double norm = std::sqrt(squared_norm(amps_));
    if (mode == Normalization::verify && std::abs(norm - 1.0) > norm_tolerance)
        throw state_error(fmt::format("state norm {:.12g} deviates from 1 by more than {:g}", norm,
                                      norm_tolerance));
    if (norm == 0.0) throw state_error("cannot normalize the zero vector");
    if (norm != 1.0)
        for (auto& z : amps_) z /= norm;
}

complex_t PureState::amplitude(std::span<const int> digits) const {
    return amps_[flat_index(dims_, digits)];
}

std::vector<std::size_t> PureState::strides() const {
    std::vector<std::size_t> s(dims_.size());
    std::size_t acc = 1;
    for (std::size_t f = dims_.size(); f-- > 0;) {
        s[f] = acc;
        acc *= static_cast<std::size_t>(dims_[f]);
    }
    return s;
}

PureState parse_state(std::string_view text, Normalization mode) {
    std::vector<int> dims;
    std::map<std::size_t, complex_t> entries;
    std::size_t line_no = 0;
    std::size_t dims_line = 0;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        auto tokens = split_ws(line);
        if (tokens.empty() || tokens.front().starts_with('#')) continue;

        if (dims.empty()) {
            if (tokens.front() != "dims")
                throw parse_error(line_no, "expected 'dims d_1 ... d_N' as the first entry");
            for (std::size_t i = 1; i < tokens.size(); ++i) {
                int d = parse_number<int>(tokens[i], line_no, "dimension");
                if (d < 2) throw parse_error(line_no, fmt::format("dimension {} is below 2", d));
                dims.push_back(d);
            }
            if (dims.size() < 2) throw parse_error(line_no, "'dims' needs at least 2 entries");
            try {
                total_dimension(dims);
            } catch (const state_error& e) {
                throw parse_error(line_no, e.what());
            }
            dims_line = line_no;
            continue;
        }

        if (tokens.front() != "amp")
            throw parse_error(line_no, fmt::format("unknown directive '{}'", tokens.front()));
        if (tokens.size() != dims.size() + 3)
            throw parse_error(line_no, fmt::format("'amp' needs {} basis digits and re im",
                                                   dims.size()));
        std::vector<int> digits(dims.size());
        for (std::size_t f = 0; f < dims.size(); ++f) {
            digits[f] = parse_number<int>(tokens[f + 1], line_no, "basis digit");
            if (digits[f] < 0 || digits[f] >= dims[f])
                throw parse_error(line_no, fmt::format("basis digit {} of party {} outside [0, {})",
                                                       digits[f], f + 1, dims[f]));
        }
        const double re = parse_number<double>(tokens[dims.size() + 1], line_no, "real part");
        const double im = parse_number<double>(tokens[dims.size() + 2], line_no, "imaginary part");
        auto [it, inserted] = entries.emplace(flat_index(dims, digits), complex_t{re, im});
        if (!inserted) throw parse_error(line_no, "duplicate basis entry");
    }
    if (dims.empty()) throw parse_error(0, "missing 'dims' line");

    std::vector<complex_t> amps(total_dimension(dims));
    for (const auto& [idx, z] : entries) amps[idx] = z;
    try {
        return PureState(std::move(dims), std::move(amps), mode);
    } catch (const parse_error&) {
        throw;
    } catch (const state_error& e) {
        throw parse_error(dims_line, e.what());
    }
}

PureState read_state_file(const std::string& path, Normalization mode) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw state_error(fmt::format("cannot open '{}'", path));
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_state(buf.str(), mode);
}

std::string serialize_state(const PureState& state) {
    std::string out = "dims";
    for (int d : state.dims()) out += fmt::format(" {}", d);
    out += '\n';
    const auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (amps[i] == complex_t{}) continue;
        out += "amp";
        for (int b : basis_digits(state.dims(), i)) out += fmt::format(" {}", b);
        out += fmt::format(" {} {}\n", amps[i].real(), amps[i].imag());
    }
    return out;
}

PureState apply_local_unitary(const PureState& state, int site, std::span<const complex_t> u) {
    const auto& dims = state.dims();
    if (site < 1 || site > state.parties())
        throw state_error(fmt::format("site {} outside 1..{}", site, state.parties()));
    const auto d = static_cast<std::size_t>(dims[site - 1]);
    if (u.size() != d * d)
        throw state_error(fmt::format("unitary has {} entries, party {} needs {}x{}", u.size(), site,
                                      d, d));
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) {
            complex_t acc{};
            for (std::size_t k = 0; k < d; ++k) acc += u[r * d + k] * std::conj(u[c * d + k]);
            if (std::abs(acc - (r == c ? 1.0 : 0.0)) > unitary_tolerance)
                throw state_error("matrix is not unitary within 1e-10");
        }

    const auto stride = state.strides()[static_cast<std::size_t>(site - 1)];
    const auto block = d * stride;
    const auto amps = state.amplitudes();
    std::vector<complex_t> out(amps.size());
    std::vector<complex_t> column(d);
    for (std::size_t base = 0; base < amps.size(); base += block)
        for (std::size_t inner = 0; inner < stride; ++inner) {
            for (std::size_t k = 0; k < d; ++k) column[k] = amps[base + k * stride + inner];
            for (std::size_t r = 0; r < d; ++r) {
                complex_t acc{};
                for (std::size_t k = 0; k < d; ++k) acc += u[r * d + k] * column[k];
                out[base + r * stride + inner] = acc;
            }
        }
    return PureState(dims, std::move(out), Normalization::rescale);
}

std::vector<int> inverse_permutation(std::span<const int> perm) {
    const auto n = perm.size();
    std::vector<int> inv(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const int p = perm[i];
        if (p < 1 || static_cast<std::size_t>(p) > n || inv[static_cast<std::size_t>(p - 1)] != 0)
            throw state_error("permutation is not a bijection on 1..N");
        inv[static_cast<std::size_t>(p - 1)] = static_cast<int>(i + 1);
    }
    return inv;
}

PureState permute_subsystems(const PureState& state, std::span<const int> perm) {
    const auto n = static_cast<std::size_t>(state.parties());
    if (perm.size() != n) throw state_error("permutation length differs from party count");
    const auto inv = inverse_permutation(perm);

    const auto& dims = state.dims();
    std::vector<int> new_dims(n);
    for (std::size_t i = 0; i < n; ++i) new_dims[i] = dims[static_cast<std::size_t>(perm[i] - 1)];

    std::vector<std::size_t> new_strides(n);
    for (std::size_t acc = 1, i = n; i-- > 0;) {
        new_strides[i] = acc;
        acc *= static_cast<std::size_t>(new_dims[i]);
    }
    // Stride in the new layout of each old party.
    std::vector<std::size_t> target(n);
    for (std::size_t j = 0; j < n; ++j) target[j] = new_strides[static_cast<std::size_t>(inv[j] - 1)];

    const auto amps = state.amplitudes();
    std::vector<complex_t> out(amps.size());
    std::vector<int> digits(n, 0);
    std::size_t dest = 0;
    for (std::size_t src = 0; src < amps.size(); ++src) {
        out[dest] = amps[src];
        for (std::size_t f = n; f-- > 0;) {
            if (++digits[f] < dims[f]) {
                dest += target[f];
                break;
            }
            dest -= target[f] * static_cast<std::size_t>(dims[f] - 1);
            digits[f] = 0;
        }
    }
    return PureState(PureState::unchecked_tag{}, std::move(new_dims), std::move(out));
}

PureState tensor_product(const PureState& a, const PureState& b) {
    std::vector<int> dims = a.dims();
    dims.insert(dims.end(), b.dims().begin(), b.dims().end());
    total_dimension(dims);
    std::vector<complex_t> amps;
    amps.reserve(a.size() * b.size());
    for (const auto& x : a.amplitudes())
        for (const auto& y : b.amplitudes()) amps.push_back(x * y);
    return PureState(std::move(dims), std::move(amps), Normalization::rescale);
}

PureState product_zero_state(std::span<const int> dims) {
    std::vector<complex_t> amps(total_dimension(dims));
    if (!amps.empty()) amps[0] = 1.0;
    return PureState(std::vector<int>(dims.begin(), dims.end()), std::move(amps));
}

PureState ghz_state(int parties, int local_dim) {
    std::vector<int> dims(static_cast<std::size_t>(std::max(parties, 0)), local_dim);
    std::vector<complex_t> amps(total_dimension(dims));
    const double c = 1.0 / std::sqrt(static_cast<double>(local_dim));
    std::vector<int> digits(dims.size());
    for (int j = 0; j < local_dim; ++j) {
        std::fill(digits.begin(), digits.end(), j);
        amps[flat_index(dims, digits)] = c;
    }
    return PureState(std::move(dims), std::move(amps));
}

PureState w_state(int parties) {
    std::vector<int> dims(static_cast<std::size_t>(std::max(parties, 0)), 2);
    std::vector<complex_t> amps(total_dimension(dims));
    const double c = 1.0 / std::sqrt(static_cast<double>(parties));
    for (int k = 0; k < parties; ++k) amps[std::size_t{1} << k] = c;
    return PureState(std::move(dims), std::move(amps));
}

} // namespace gme
