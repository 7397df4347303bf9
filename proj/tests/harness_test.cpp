// Copyright 2026 The qecc1wqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qecc1wqc/harness.hpp"

using namespace qecc1wqc;

TEST_CASE("failure oracle agrees with the code distance") {
    const FailureOracle &o = failure_oracle();
    REQUIRE(o.fails.size() == 1024);
    CHECK(o.failure_fraction(0) == 0);
    CHECK(o.failure_fraction(1) == 0);
    CHECK(o.failure_fraction(2) > 0);
    CHECK(o.failure_probability(0) == 0);
    CHECK(FailureOracle::pattern(0).is_identity());
    CHECK(FailureOracle::weight(0b11'00'01'00'10) == 3);
    CHECK(FailureOracle::pattern(0b01'00'00'00'11).str() == "+XIIIZ");
    // Small-p expansion: the weight-two term dominates.
    double p = 1e-4;
    CHECK(o.failure_probability(p) == doctest::Approx(o.weight2_estimate(p)).epsilon(1e-2));
}

TEST_CASE("oracle entries do not depend on the input state") {
    const FailureOracle &o = failure_oracle();
    std::mt19937_64 rng(21);
    for (std::size_t i = 0; i < 1024; i += 37) {
        QubitState psi = random_qubit_state(rng);
        double xi = std::uniform_real_distribution<double>(0, 6)(rng);
        std::optional<InjectedError> err;
        if (i) {
            err = InjectedError{FailureOracle::pattern(i), InjectionStage::PreDecode};
        }
        TeleportReport r = encoded_teleport(psi, xi, err, std::nullopt, &rng);
        CHECK_MESSAGE((r.fidelity < SUCCESS_FIDELITY) == static_cast<bool>(o.fails[i]), FailureOracle::pattern(i).str());
    }
}

TEST_CASE("exhaustive single-error sweep") {
    RunReport rep = run_exhaustive_correction_sweep(1, 4);
    CHECK(rep.passed);
    CHECK(rep.details["rows"].size() == 16);
    CHECK(rep.details["rows"][0]["syndrome"] == "0000");
    for (const auto &row : rep.details["rows"]) {
        CHECK(row["syndrome_matches"] == true);
        CHECK(row["outcome_matches"] == true);
    }
    CHECK(rep.details["weight2"]["failure_observed"] == true);
    CHECK(rep.trials == 17 * 4);
    CHECK(rep.successes == 16 * 4);
    CHECK(rep.details["hop_two_qubit_gates"] == 23);
}

TEST_CASE("depolarizing runs") {
    RunReport zero = run_depolarizing(0, 200, 3);
    CHECK(zero.successes == 200);
    CHECK(zero.passed);

    RunReport rep = run_depolarizing(0.05, 1500, 4);
    CHECK(rep.passed);
    CHECK(rep.details["weight_le1_all_corrected"] == true);
    CHECK(rep.details["within_5_sigma"] == true);

    RunReport all = run_depolarizing(1, 400, 5);
    double rate = all.details["failure_rate"];
    double f5 = failure_oracle().failure_fraction(5);
    CHECK(std::abs(rate - f5) < 5 * std::sqrt(f5 * (1 - f5) / 400));
    CHECK(all.passed);

    CHECK_THROWS_AS(run_depolarizing(1.5, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(run_depolarizing(0.1, 0, 1), std::invalid_argument);
}

TEST_CASE("reports are deterministic and independent of the thread count") {
    std::string a = run_depolarizing(0.1, 300, 9, 1).to_json().dump();
    std::string b = run_depolarizing(0.1, 300, 9, 4).to_json().dump();
    std::string c = run_depolarizing(0.1, 300, 9, 3).to_json().dump();
    CHECK(a == b);
    CHECK(a == c);
    CHECK(run_depolarizing(0.1, 300, 10, 2).to_json().dump() != a);
    CHECK(run_exhaustive_correction_sweep(2, 2).to_json().dump() == run_exhaustive_correction_sweep(2, 2).to_json().dump());
    CHECK(run_depolarizing(0.1, 10, 9).to_json()["schema"] == "1");
}

TEST_CASE("targeted and noiseless error models") {
    RunReport clean = run_error_model(ErrorModel{}, 5, 1);
    CHECK(clean.successes == 5);
    RunReport single = run_error_model(ErrorModel::targeted(named_error("XZ3")), 5, 1);
    CHECK(single.successes == 5);
    PauliString two = named_error("Z1");
    two *= named_error("Z4");
    RunReport pair = run_error_model(ErrorModel::targeted(two), 5, 1);
    CHECK(pair.successes < 5);
    CHECK_THROWS_AS(ErrorModel::targeted(PauliString(3)), std::invalid_argument);
    CHECK_THROWS_AS(ErrorModel::depolarizing(-0.1), std::invalid_argument);
}

TEST_CASE("logical frame feed-forward rule") {
    LogicalFrame f;
    CHECK(f.adapt(0.3) == 0.3);
    f = f.after_hop(1);
    CHECK((f.x == 1 && f.z == 0));
    CHECK(f.adapt(0.3) == -0.3);
    f = f.after_hop(0);
    CHECK((f.x == 0 && f.z == 1));
    f = f.after_hop(0);
    CHECK((f.x == 1 && f.z == 0));
}

TEST_CASE("single hop with zero angle applies a Hadamard") {
    QubitState psi{amp_t{0.8, 0}, amp_t{0, 0.6}};
    RunReport rep = run_two_column_computation({0}, psi, 1, {0});
    CHECK(rep.passed);
    QubitState h = computation_oracle({0}, psi);
    CHECK(std::abs(h.alpha - amp_t(0.8, 0.6) / std::sqrt(2.0)) < 1e-12);
    CHECK(std::abs(h.beta - amp_t(0.8, -0.6) / std::sqrt(2.0)) < 1e-12);
}

TEST_CASE("three hops match the one-qubit product for every outcome pattern") {
    std::vector<double> xis{0.4, -1.3, 2.2};
    std::mt19937_64 rng(8);
    for (int pattern = 0; pattern < 8; pattern++) {
        std::vector<uint8_t> m{static_cast<uint8_t>(pattern & 1), static_cast<uint8_t>((pattern >> 1) & 1),
                               static_cast<uint8_t>((pattern >> 2) & 1)};
        RunReport rep = run_two_column_computation(xis, random_qubit_state(rng), 1, m);
        INFO("pattern " << pattern);
        CHECK(rep.passed);
        CHECK(rep.details["final_fidelity"].get<double>() >= 1 - 1e-9);
        for (std::size_t k = 0; k < 3; k++) {
            CHECK(rep.details["hops"][k]["m"] == m[k]);
        }
    }
}

TEST_CASE("two hops with random outcomes") {
    std::mt19937_64 rng(12);
    for (uint64_t seed = 1; seed <= 20; seed++) {
        double a = std::uniform_real_distribution<double>(-3, 3)(rng);
        double b = std::uniform_real_distribution<double>(-3, 3)(rng);
        RunReport rep = run_two_column_computation({a, b}, random_qubit_state(rng), seed);
        CHECK(rep.passed);
    }
    CHECK_THROWS_AS(run_two_column_computation({}, QubitState{}, 1), std::invalid_argument);
    CHECK_THROWS_AS(run_two_column_computation({0.1, 0.2}, QubitState{}, 1, {0}), std::invalid_argument);
}

TEST_CASE("without the angle adaptation the computation fails") {
    // Reference check that the sign rule matters: with m = 1 on hop one, using xi unchanged on
    // hop two gives a different state for a generic angle.
    std::vector<double> xis{0.0, 0.7};
    QubitState psi{amp_t{0.6, 0}, amp_t{0.8, 0}};
    QubitState adapted = computation_oracle(xis, psi);
    QubitState wrong = computation_oracle({0.0, -0.7}, psi);
    double overlap = std::norm(std::conj(adapted.alpha) * wrong.alpha + std::conj(adapted.beta) * wrong.beta);
    CHECK(overlap < 0.99);
    CHECK(run_two_column_computation(xis, psi, 1, {1, 0}).passed);
}
