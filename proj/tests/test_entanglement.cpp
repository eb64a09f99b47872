/**
 * Copyright 2026 The qosc authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include <qosc/entanglement.hpp>

using namespace qosc;
namespace ent = qosc::entanglement;

namespace {

dynamics::SchmidtSpectrum spectrum(std::initializer_list<double> v) {
    dynamics::SchmidtSpectrum s;
    s.lambda = v;
    return s;
}

}  // namespace

TEST_CASE("entropy basics") {
    CHECK(ent::von_neumann(spectrum({1.0})) == 0.0);
    CHECK(ent::von_neumann(spectrum({0.5, 0.0, 0.5})) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-15));
    CHECK(ent::von_neumann(spectrum({0.25, 0.5, 0.25})) ==
          doctest::Approx(1.5 * std::log(2.0)).epsilon(1e-15));
}

TEST_CASE("schmidt number basics") {
    CHECK(ent::schmidt_number(spectrum({1.0})) == doctest::Approx(1.0));
    CHECK(ent::schmidt_number(spectrum({1.0 / 3, 1.0 / 3, 1.0 / 3})) ==
          doctest::Approx(3.0).epsilon(1e-14));
    // the twin single-quantum state at its optimum is uniform over 3 modes
    const double r = 0.5 * (1.0 + 1.0 / std::sqrt(3.0));
    const double side = 2 * r * (1 - r), mid = (1 - 2 * r) * (1 - 2 * r);
    CHECK(ent::schmidt_number(spectrum({side, mid, side})) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("schmidt number never exceeds the mode count") {
    std::mt19937 rng(67);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + trial % 15;
        dynamics::SchmidtSpectrum s;
        s.lambda.resize(static_cast<size_t>(n));
        double sum = 0.0;
        for (double& v : s.lambda) sum += (v = dist(rng) + 1e-6);
        for (double& v : s.lambda) v /= sum;
        double k = ent::schmidt_number(s);
        CHECK(k >= 1.0 - 1e-12);
        CHECK(k <= n + 1e-9);
        // S_N = 0 iff K = 1 (both detect a pure product state)
        double entropy = ent::von_neumann(s);
        if (entropy < 1e-12) CHECK(k == doctest::Approx(1.0).epsilon(1e-9));
        if (std::fabs(k - 1.0) < 1e-12) CHECK(entropy < 1e-9);
    }
}

TEST_CASE("closed forms at their printed maxima") {
    const double r11 = 0.5 * (1.0 + 1.0 / std::sqrt(3.0));
    ent::EntanglementReport rep = ent::closed_form(1, 1, r11);
    CHECK(rep.schmidt_number == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(rep.entropy == doctest::Approx(std::log(3.0)).epsilon(1e-12));

    rep = ent::closed_form(0, 2, 0.5);
    CHECK(rep.schmidt_number == doctest::Approx(8.0 / 3.0).epsilon(1e-12));
    CHECK(rep.entropy == doctest::Approx(1.5 * std::log(2.0)).epsilon(1e-12));
    ent::EntanglementReport mirrored = ent::closed_form(2, 0, 0.5);
    CHECK(mirrored.schmidt_number == doctest::Approx(rep.schmidt_number));

    rep = ent::closed_form(2, 2, 0.5 * (1.0 + 0.3898));
    CHECK(rep.schmidt_number == doctest::Approx(4.4312).epsilon(1e-3));
    rep = ent::closed_form(2, 2, 0.5 * (1.0 - 0.3675));
    CHECK(rep.entropy == doctest::Approx(1.5381).epsilon(1e-3));

    CHECK_THROWS_AS(ent::closed_form(1, 2, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(ent::closed_form(1, 1, 1.5), std::invalid_argument);
}

TEST_CASE("closed forms agree with the general pipeline") {
    const std::pair<int, int> pairs[] = {{1, 1}, {0, 2}, {2, 0}, {2, 2}};
    for (auto [s1, s2] : pairs) {
        dynamics::SpectrumEvaluator ev(dynamics::InitialState(s1, s2), 0.0);
        double worst_s = 0.0, worst_k = 0.0;
        for (int i = 0; i <= 200; ++i) {
            const double r = i / 200.0;
            dynamics::SchmidtSpectrum s = ev.spectrum_at_r(r);
            ent::EntanglementReport rep = ent::closed_form(s1, s2, r);
            worst_s = std::max(worst_s, std::fabs(ent::von_neumann(s) - rep.entropy));
            worst_k = std::max(worst_k, std::fabs(ent::schmidt_number(s) - rep.schmidt_number));
        }
        CHECK(worst_s < 1e-10);
        CHECK(worst_k < 1e-10);
    }
}

TEST_CASE("single-oscillator K from the terminating Gauss sum") {
    CHECK(ent::k_s_zero(0, 0.3) == 1.0);
    CHECK(ent::k_s_zero(1, 0.5) == doctest::Approx(2.0).epsilon(1e-13));
    // 2^8 (4!)^2 / 8!
    CHECK(ent::k_s_zero(4, 0.5) == doctest::Approx(128.0 / 35.0).epsilon(1e-13));
    CHECK(ent::k_s_zero(3, 1.0) == 1.0);
    CHECK(ent::k_s_zero(3, 0.0) == 1.0);
}

TEST_CASE("single-oscillator K equals the binomial-spectrum value") {
    for (int s = 1; s <= 20; ++s) {
        for (double r : {0.05, 0.3, 0.5, 0.7, 0.99}) {
            dynamics::SchmidtSpectrum lam;
            lam.lambda.resize(static_cast<size_t>(s) + 1);
            double binom = 1.0;
            for (int n = 0; n <= s; ++n) {
                lam.lambda[static_cast<size_t>(n)] =
                    binom * std::pow(1.0 - r, n) * std::pow(r, s - n);
                binom = binom * (s - n) / (n + 1);
            }
            const double want = ent::schmidt_number(lam);
            CHECK(std::fabs(ent::k_s_zero(s, r) - want) / want < 1e-10);
        }
    }
}

TEST_CASE("single-oscillator K maxima") {
    CHECK(ent::k_s_zero_max(1) == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(ent::k_s_zero_max(2) == doctest::Approx(8.0 / 3.0).epsilon(1e-13));
    // unbounded growth ~ sqrt(pi s), approached from above with the
    // Stirling correction +1/(8s)
    const double ratio = ent::k_s_zero_max(1000) / std::sqrt(M_PI * 1000.0);
    CHECK(std::fabs(ratio - 1.0) < 2e-3);
    CHECK(8000.0 * (ratio - 1.0) == doctest::Approx(1.0).epsilon(0.2));
}

TEST_CASE("twin-state K at the balanced point") {
    CHECK(ent::k_holland_burnett(0) == doctest::Approx(1.0));
    // s = 1 must reproduce the (1,1) spectrum (1/2, 0, 1/2)
    CHECK(ent::k_holland_burnett(1) == doctest::Approx(2.0).epsilon(1e-12));
    // s = 2 in exact rationals: pi (2!)^2 / ((9 pi/16)(22/9)) = 32/11
    CHECK(ent::k_holland_burnett(2) == doctest::Approx(32.0 / 11.0).epsilon(1e-12));
    // and against the general pipeline
    for (int s : {1, 2, 3, 5, 8}) {
        dynamics::SpectrumEvaluator ev(dynamics::InitialState(s, s), 0.0);
        const double want = ent::schmidt_number(ev.spectrum_at_r(0.5));
        CHECK(std::fabs(ent::k_holland_burnett(s) - want) / want < 1e-10);
    }
}

TEST_CASE("twin-state K grows as a near-linear power") {
    const double exponent = ent::hb_power_fit(10, 30);
    CHECK(exponent > 0.85);
    CHECK(exponent < 0.95);
}

TEST_CASE("maximize finds both symmetric maximizers of the twin state") {
    ent::MaximizeResult res = ent::maximize(1, 1);
    REQUIRE(res.schmidt_number.size() == 2);
    const double lo = 0.5 * (1.0 - 1.0 / std::sqrt(3.0));
    const double hi = 0.5 * (1.0 + 1.0 / std::sqrt(3.0));
    CHECK(res.schmidt_number[0].r == doctest::Approx(lo).epsilon(1e-6));
    CHECK(res.schmidt_number[1].r == doctest::Approx(hi).epsilon(1e-6));
    CHECK(res.schmidt_number[0].value == doctest::Approx(3.0).epsilon(1e-9));
    REQUIRE(res.entropy.size() == 2);
    CHECK(res.entropy[0].value == doctest::Approx(std::log(3.0)).epsilon(1e-9));
}

TEST_CASE("maximize on single-oscillator states peaks at the balanced point") {
    for (int s = 1; s <= 10; ++s) {
        ent::MaximizeResult res = ent::maximize(0, s);
        REQUIRE(res.schmidt_number.size() == 1);
        CHECK(std::fabs(res.schmidt_number[0].r - 0.5) < 1e-6);
        CHECK(res.schmidt_number[0].value ==
              doctest::Approx(ent::k_s_zero_max(s)).epsilon(1e-9));
    }
}

TEST_CASE("maximize reproduces the printed twin-pair maxima") {
    ent::MaximizeResult res = ent::maximize(2, 2);
    REQUIRE(res.entropy.size() == 2);
    REQUIRE(res.schmidt_number.size() == 2);
    CHECK(res.entropy[1].value == doctest::Approx(1.5381).epsilon(1e-3));
    CHECK(res.entropy[1].r == doctest::Approx(0.5 * (1.0 + 0.3675)).epsilon(5e-4));
    CHECK(res.schmidt_number[1].value == doctest::Approx(4.4312).epsilon(1e-3));
    CHECK(res.schmidt_number[1].r == doctest::Approx(0.5 * (1.0 + 0.3898)).epsilon(5e-4));
}

TEST_CASE("maximize respects the admissible range under detuning") {
    const double eps[] = {2.0};
    ent::MaximizeResult res = ent::maximize(1, 1, std::span<const double>(eps, 1));
    REQUIRE(!res.schmidt_number.empty());
    // R is capped at 1/5, below the optimum, so the maximum sits at the cap
    CHECK(res.schmidt_number.back().r <= 0.2 + 1e-9);
}
