#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "gme/concurrence.hpp"
#include "gme/fixtures.hpp"
#include "gme/verify.hpp"
#include "test_support.hpp"

using namespace gme;

TEST_CASE("reduced purity examples") {
    const auto ghz = ghz_state(4);
    CHECK(reduced_purity(ghz, Bipartition({1}, 4)) == doctest::Approx(0.5).epsilon(1e-14));
    const auto zero = product_zero_state(std::vector{2, 2, 2, 2});
    for (const auto& cut : canonical_bipartition_list(4)) CHECK(reduced_purity(zero, cut) == 1.0);
    // rho_1 = diag(3/4, 1/4)
    CHECK(reduced_purity(w_state(4), Bipartition({1}, 4)) == doctest::Approx(0.625).epsilon(1e-14));
}

TEST_CASE("concurrence examples") {
    const auto ghz = ghz_state(4);
    for (const auto& cut : canonical_bipartition_list(4)) CHECK(std::abs(concurrence(ghz, cut) - 1.0) <= 1e-12);

    const auto factor = tensor_product(PureState({2, 2}, std::vector<complex_t>{1, 0, 0, 0}), ghz_state(2));
    CHECK(concurrence(factor, Bipartition({1}, 4)) == 0.0);

    CHECK(std::abs(concurrence(w_state(4), Bipartition({1}, 4)) - std::sqrt(3.0) / 2.0) <= 1e-12);
}

TEST_CASE("dense oracle examples") {
    CHECK(dense_oracle_purity(ghz_state(4), Bipartition({1, 2}, 4)) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(dense_oracle_purity(product_zero_state(std::vector{2, 2, 2, 2}), std::vector{2, 3}) == 1.0);
}

TEST_CASE("dense oracle rejects reduced dimensions over the cap") {
    const auto s = product_zero_state(std::vector<int>(14, 2));
    std::vector<int> big(13);
    std::iota(big.begin(), big.end(), 1);
    CHECK_THROWS_AS(dense_oracle_purity(s, big), std::invalid_argument);
    std::vector<int> ok(10);
    std::iota(ok.begin(), ok.end(), 1);
    CHECK(dense_oracle_purity(s, ok) == 1.0);
}

TEST_CASE("full spectrum of the reference example states") {
    // Frozen from an independent numpy evaluation (reshape + partial trace).
    SUBCASE("GHZ4") {
        const auto sp = full_spectrum(ghz_state(4));
        CHECK(sp.entries().size() == 7);
        for (double v : sp.values()) CHECK(std::abs(v - 1.0) <= 1e-12);
    }
    SUBCASE("psi_A") {
        const auto sp = full_spectrum(fixtures::psi_a());
        const auto singles = sp.singleton_values();
        CHECK(std::abs(singles[0] - std::sqrt(3.0) / 2.0) <= 1e-12);
        for (int i = 1; i < 4; ++i) CHECK(std::abs(singles[static_cast<std::size_t>(i)] - 1.0) <= 1e-12);
        for (double v : sp.multi_party_values()) CHECK(std::abs(v - std::sqrt(5.0) / 2.0) <= 1e-12);
    }
    SUBCASE("psi_B") {
        const auto sp = full_spectrum(fixtures::psi_b());
        const double r3 = std::sqrt(3.0) / 2.0;
        CHECK(std::abs(sp.at(std::vector{1}) - r3) <= 1e-12);
        CHECK(std::abs(sp.at(std::vector{2}) - 1.0) <= 1e-12);
        CHECK(std::abs(sp.at(std::vector{3}) - r3) <= 1e-12);
        CHECK(std::abs(sp.at(std::vector{4}) - r3) <= 1e-12);
        CHECK(std::abs(sp.at(std::vector{1, 2}) - std::sqrt(5.0) / 2.0) <= 1e-12);
        CHECK(std::abs(sp.at(std::vector{1, 3}) - 1.0) <= 1e-12);
        CHECK(std::abs(sp.at(std::vector{2, 3}) - 1.0) <= 1e-12);  // same cut as {1,4}
    }
    SUBCASE("psi_C") {
        const auto sp = full_spectrum(fixtures::psi_c());
        const auto singles = sp.singleton_values();
        CHECK(std::abs(singles[0] - 0.8) <= 1e-12);
        for (int i = 1; i < 4; ++i) CHECK(std::abs(singles[static_cast<std::size_t>(i)] - std::sqrt(24.0 / 25.0)) <= 1e-12);
        for (double v : sp.multi_party_values()) CHECK(std::abs(v - std::sqrt(28.0 / 25.0)) <= 1e-12);
    }
    SUBCASE("phi_12345 factorizes across {1,3}") {
        const auto sp = full_spectrum(fixtures::phi_12345());
        CHECK(sp.entries().size() == 15);
        CHECK(sp.at(std::vector{1, 3}) == 0.0);
        CHECK(sp.at(std::vector{2, 4, 5}) == 0.0);
        CHECK(sp.at(std::vector{5}) == 0.0);  // party 5 is |0>
    }
}

TEST_CASE("spectrum lookup") {
    const auto sp = full_spectrum(fixtures::psi_b());
    CHECK(sp.at(Bipartition({1, 4}, 4)) == sp.at(std::vector{3, 2}));
    CHECK_THROWS((void)sp.at(std::vector{1, 2, 3, 4}));
    CHECK(sp.singleton_values().size() == 4);
    CHECK(sp.multi_party_values().size() == 3);
}

TEST_CASE("threaded sweep matches the serial one") {
    const auto s = verify::haar_random_state(std::vector{2, 3, 2, 2, 3}, 31);
    const auto serial = full_spectrum(s, 1);
    const auto threaded = full_spectrum(s, 4);
    CHECK(serial.values() == threaded.values());
}

TEST_CASE("property: Gram path, dense oracle and eigenvalue oracle agree") {
    std::mt19937_64 rng(11);
    const std::vector<std::vector<int>> profiles{{2, 2}, {3, 2, 2}, {2, 2, 2, 2}, {3, 3, 2, 2}, {2, 3, 2, 2, 2}};
    for (const auto& dims : profiles)
        for (int trial = 0; trial < 5; ++trial) {
            const auto s = verify::haar_random_state(dims, rng());
            for (const auto& cut : canonical_bipartition_list(s.parties())) {
                const double gram = reduced_purity(s, cut);
                CHECK(std::abs(gram - dense_oracle_purity(s, cut)) <= 1e-12);
                CHECK(std::abs(gram - eigen_purity(s, cut.subset())) <= 1e-12);
            }
        }
}

TEST_CASE("property: cut symmetry on non-canonical sides") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        const std::vector<int> dims{2, 3, 2, 2, 2};
        const auto s = verify::haar_random_state(dims, rng());
        for (const auto& cut : canonical_bipartition_list(5))
            CHECK(std::abs(concurrence(s, cut) - concurrence(s, complement(cut))) <= 1e-12);
    }
}

TEST_CASE("property: concurrence bound sqrt(2(m-1)/m)") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        const std::vector<int> dims{2 + trial % 3, 2, 3, 2};
        const auto s = verify::haar_random_state(dims, rng());
        for (const auto& cut : canonical_bipartition_list(4)) {
            std::size_t in = 1, out = 1;
            const auto mask = cut.mask();
            for (int f = 0; f < 4; ++f) ((mask >> f) & 1 ? in : out) *= static_cast<std::size_t>(dims[static_cast<std::size_t>(f)]);
            const double c = concurrence(s, cut);
            CHECK(c >= 0.0);
            CHECK(c <= max_concurrence(std::min(in, out)) + 1e-10);
        }
    }
}

TEST_CASE("property: local unitary invariance of every cut") {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 100; ++trial) {
        const std::vector<int> dims{2 + trial % 2, 3, 2 + (trial / 2) % 2};
        auto s = verify::haar_random_state(dims, rng());
        const auto before = full_spectrum(s).values();
        for (int site = 1; site <= 3; ++site)
            s = apply_local_unitary(s, site, verify::random_local_unitary(dims[static_cast<std::size_t>(site - 1)], rng()));
        const auto after = full_spectrum(s).values();
        for (std::size_t i = 0; i < before.size(); ++i) CHECK(std::abs(after[i] - before[i]) <= 1e-10);
    }
}

TEST_CASE("invalid subsets") {
    const auto s = ghz_state(3);
    CHECK_THROWS(reduced_purity(s, std::vector<int>{}));
    CHECK_THROWS(reduced_purity(s, std::vector{1, 2, 3}));
    CHECK_THROWS(reduced_purity(s, std::vector{0}));
    CHECK_THROWS(reduced_purity(s, std::vector{4}));
    CHECK_THROWS(reduced_purity(s, std::vector{1, 1}));
    CHECK_THROWS(reduced_purity(s, Bipartition({1}, 4)));
}
