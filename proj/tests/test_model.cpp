#include <doctest.h>

#include <cmath>
#include <sstream>
#include <vector>

#include "bouncer/model.hpp"
#include "bouncer/species.hpp"

using bouncer::BouncerState;
using bouncer::PhysicalParams;
using bouncer::classical_density_value;
using bouncer::gravitational_length;
using bouncer::make_state;
using bouncer::moment_p_even_quantum;
using bouncer::moment_z_classical;
using bouncer::moment_z_quantum;
using bouncer::quantum_density_value;
using bouncer::regime_estimate;
using bouncer::tail_probability;
using bouncer::wavefunction;

namespace {
constexpr double kHbar = 1.054571817e-34;
}

TEST_CASE("gravitational length for standard masses") {
    // l_g = (hbar^2 / (2 m^2 g))^{1/3}
    const PhysicalParams neutron{1.67492749804e-27, 9.81, kHbar};
    CHECK(gravitational_length(neutron) == doctest::Approx(5.87e-6).epsilon(2e-3));
    const PhysicalParams caesium{2.20694650e-25, 9.81, kHbar};
    CHECK(gravitational_length(caesium) == doctest::Approx(0.226e-6).epsilon(5e-3));
    const PhysicalParams sodium{3.81754035e-26, 9.81, kHbar};
    CHECK(gravitational_length(sodium) == doctest::Approx(0.727e-6).epsilon(5e-3));
}

TEST_CASE("gravitational length scales as m^{-2/3}") {
    const PhysicalParams base{1e-26, 9.81, kHbar};
    const PhysicalParams heavy{8e-26, 9.81, kHbar};
    CHECK(gravitational_length(base) / gravitational_length(heavy) ==
          doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("invalid physical parameters are rejected") {
    CHECK_THROWS_AS(gravitational_length({-1.0, 9.81, kHbar}), std::domain_error);
    CHECK_THROWS_AS(gravitational_length({1e-26, 0.0, kHbar}), std::domain_error);
    CHECK_THROWS_AS(gravitational_length({1e-26, 9.81, std::nan("")}),
                    std::domain_error);
}

TEST_CASE("state invariants") {
    for (int n : {1, 2, 5, 30}) {
        const BouncerState state = make_state(n);
        CHECK(state.n == n);
        CHECK(state.turning_point == -state.zero.value);
        CHECK(state.energy == state.turning_point);
        CHECK(state.turning_point > 0.0);
    }
    CHECK(make_state(1).turning_point == doctest::Approx(2.33810741).epsilon(1e-8));
}

TEST_CASE("wavefunction boundary condition and normalization") {
    for (int n : {1, 5, 10, 50, 200}) {
        const BouncerState state = make_state(n);
        CHECK(std::abs(wavefunction(state, 0.0)) < 1e-12);
        CHECK_THROWS_AS(wavefunction(state, -0.1), std::domain_error);

        auto density = [&](double zeta) { return quantum_density_value(state, zeta); };
        const double cutoff = bouncer::density_support_cutoff(state, 1e-13);
        auto norm = bouncer::integrate_adaptive<double>(density, 0.0, cutoff, 1e-10);
        CHECK(norm.value == doctest::Approx(1.0).epsilon(1e-8));
    }
}

TEST_CASE("node and maxima structure of the density") {
    // state n has n-1 interior wavefunction zeros and n density maxima
    const int n = 3;
    const BouncerState state = make_state(n);
    const double cutoff = state.turning_point + 2.0;
    const int m = 4000;
    int sign_changes = 0;
    int maxima = 0;
    double prev = wavefunction(state, 1e-6);
    double d0 = quantum_density_value(state, 1e-6);
    double d1 = quantum_density_value(state, 2e-6);
    for (int i = 2; i <= m; ++i) {
        const double zeta = cutoff * static_cast<double>(i) / m;
        const double psi = wavefunction(state, zeta);
        if (psi * prev < 0.0) ++sign_changes;
        prev = psi;
        const double d2 = quantum_density_value(state, zeta);
        if (d1 > d0 && d1 > d2 && d1 > 1e-6) ++maxima;
        d0 = d1;
        d1 = d2;
    }
    CHECK(sign_changes == n - 1);
    CHECK(maxima == n);
}

TEST_CASE("classical density: values, support, singular point") {
    const double h = 2.0;
    CHECK(classical_density_value(h, 0.0) == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(classical_density_value(h, 1.0) ==
          doctest::Approx(0.5 / std::sqrt(2.0)).epsilon(1e-14));
    CHECK(classical_density_value(h, 3.0) == 0.0);
    CHECK(classical_density_value(h, -0.5) == 0.0);
    CHECK_THROWS_AS(classical_density_value(h, h), std::domain_error);
    CHECK_THROWS_AS(classical_density_value(0.0, 0.5), std::domain_error);
}

TEST_CASE("classical density normalizes to one") {
    // substitute zeta = h(1 - u^2) to avoid the endpoint singularity
    const double h = 7.7;
    auto r = bouncer::integrate_adaptive<double>([](double) { return 1.0; }, 0.0,
                                                 1.0, 1e-12);
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-12));
    auto raw = bouncer::integrate_adaptive<double>(
        [h](double zeta) { return classical_density_value(h, zeta); }, 0.0,
        h * (1.0 - 1e-12), 1e-9, 30'000'000);
    CHECK(raw.value == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("density grid validation") {
    const BouncerState state = make_state(2);
    std::vector<double> bad_order = {0.0, 0.5, 0.4};
    CHECK_THROWS_AS(bouncer::quantum_density(state, bad_order), std::domain_error);
    std::vector<double> negative = {-0.1, 0.5};
    CHECK_THROWS_AS(bouncer::classical_density(1.0, negative), std::domain_error);
    std::vector<double> good = {0.0, 0.5, 1.0};
    auto grid = bouncer::quantum_density(state, good);
    CHECK(grid.values.size() == 3);
    CHECK(grid.values[0] == doctest::Approx(0.0).epsilon(1e-20));
}

TEST_CASE("tail probability: closed form vs quadrature") {
    CHECK(tail_probability(make_state(1)).closed_form ==
          doctest::Approx(0.13623).epsilon(1e-4));
    for (int n : {1, 2, 10, 30}) {
        const auto tail = tail_probability(make_state(n));
        CHECK(tail.closed_form == doctest::Approx(tail.quadrature).epsilon(1e-7));
        CHECK(tail.closed_form > 0.0);
        CHECK(tail.closed_form < 0.5);
    }
    // decreasing in n (|Ai'(a_n)| grows)
    CHECK(tail_probability(make_state(2)).closed_form <
          tail_probability(make_state(1)).closed_form);
    CHECK(tail_probability(make_state(30)).closed_form <
          tail_probability(make_state(10)).closed_form);
}

TEST_CASE("classical position moments") {
    const double h = 3.25;
    CHECK(moment_z_classical(h, 0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(moment_z_classical(h, 1) == doctest::Approx(2.0 * h / 3.0).epsilon(1e-14));
    CHECK(moment_z_classical(h, 2) ==
          doctest::Approx(8.0 * h * h / 15.0).epsilon(1e-14));
    CHECK_THROWS_AS(moment_z_classical(-1.0, 1), std::domain_error);
    CHECK_THROWS_AS(moment_z_classical(1.0, -1), std::domain_error);
}

TEST_CASE("quantum position moments approach the classical ones") {
    const BouncerState state = make_state(200);
    const double h = state.turning_point;
    for (int k : {1, 2, 3}) {
        const double q = moment_z_quantum(state, k);
        const double c = moment_z_classical(h, k);
        CHECK(std::abs(q / c - 1.0) < 0.01);
    }
    CHECK(moment_z_quantum(state, 0) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK_THROWS_AS(moment_z_quantum(state, 13), std::domain_error);
}

TEST_CASE("first moment matches the integration-by-parts value") {
    // <zeta> = (2/3) |a_n| exactly, from I_1 = a Ai'^2 / 3 shifted by -a
    for (int n : {1, 4, 25}) {
        const BouncerState state = make_state(n);
        CHECK(moment_z_quantum(state, 1) ==
              doctest::Approx(2.0 / 3.0 * state.turning_point).epsilon(1e-9));
    }
}

TEST_CASE("even momentum moments") {
    for (int n : {1, 5, 40}) {
        const BouncerState state = make_state(n);
        CHECK(moment_p_even_quantum(state, 0) == doctest::Approx(1.0).epsilon(1e-8));
        // virial: <p^2> = 2<E - zeta> = 2(E - 2E/3) = (2/3) E
        CHECK(moment_p_even_quantum(state, 1) ==
              doctest::Approx(2.0 / 3.0 * state.energy).epsilon(1e-8));
    }
    CHECK_THROWS_AS(moment_p_even_quantum(make_state(1), 7), std::domain_error);
}

TEST_CASE("regime estimates for the benchmark species") {
    // caesium at l_g = 0.226 um dropped from 1 mm
    const auto cs = regime_estimate(0.226e-6, 1e-3, "caesium");
    CHECK(cs.n_estimate == doctest::Approx(62470.0).epsilon(0.02));
    CHECK(cs.suppression < 1e-10);
    CHECK(cs.suppression > 1e-12);

    const auto na = regime_estimate(0.727e-6, 1e-3, "sodium");
    CHECK(na.n_estimate == doctest::Approx(10826.0).epsilon(0.02));

    const auto neutron = regime_estimate(5.87e-6, 1e-3, "neutron");
    CHECK(neutron.n_estimate == doctest::Approx(472.0).epsilon(0.02));

    CHECK_THROWS_AS(regime_estimate(-1.0, 1e-3, "x"), std::domain_error);
    CHECK_THROWS_AS(regime_estimate(1e-6, 0.0, "x"), std::domain_error);
}

TEST_CASE("species config parsing") {
    std::istringstream cfg(
        "# test table\n"
        "[neutron]\n"
        "mass_kg = 1.675e-27\n"
        "\n"
        "[custom]  # inline comment\n"
        "mass_kg = 2e-26\n"
        "gravity = 3.7\n");
    const auto table = bouncer::parse_species_config(cfg);
    REQUIRE(table.size() == 2);
    CHECK(table[0].label == "neutron");
    CHECK(table[0].gravity == doctest::Approx(9.81));
    CHECK(table[1].mass_kg == doctest::Approx(2e-26));
    CHECK(table[1].gravity == doctest::Approx(3.7));

    const auto builtin = bouncer::builtin_species();
    CHECK(bouncer::find_species(builtin, "Cs") != nullptr);
    CHECK(bouncer::find_species(builtin, "cesium") != nullptr);
    CHECK(bouncer::find_species(builtin, "NA") != nullptr);
    CHECK(bouncer::find_species(builtin, "muon") == nullptr);

    std::istringstream missing("[x]\ngravity = 1.0\n");
    CHECK_THROWS_AS(bouncer::parse_species_config(missing), std::runtime_error);
    std::istringstream stray("mass_kg = 1.0\n");
    CHECK_THROWS_AS(bouncer::parse_species_config(stray), std::runtime_error);
}
