#include <cmath>

#include "../frozen_values.hpp"
#include "helpers.hpp"
#include "sigmaevo/errors.hpp"
#include "sigmaevo/spectral.hpp"

using namespace sigmaevo;

namespace {

ModelParams mp(double a, double b, double sigma, double mu) {
    ModelParams p;
    p.alpha = a;
    p.beta = b;
    p.sigma = sigma;
    p.mu = mu;
    return p;
}

}  // namespace

TEST_SUITE("spectral") {

TEST_CASE("roots satisfy product and sum") {
    for (int i = 1; i <= 60; ++i) {
        double mu = 0.07 * i;
        auto r = roots(mu);
        CHECK(std::abs(r.lambda_plus * r.lambda_minus - 1.0) < 1e-14);
        CHECK(std::abs(r.lambda_plus + r.lambda_minus - mu) < 1e-14 * (1 + mu));
        CHECK(r.branch == (mu < 2 ? DampingBranch::underdamped : mu == 2 ? DampingBranch::critical
                                                                         : DampingBranch::overdamped));
    }
    auto big = roots(1e8);
    CHECK_REL(big.lambda_minus.real(), 1e-8, 1e-12);
    CHECK(roots(2.0).lambda_plus == cplx(1.0));
    CHECK_THROWS_AS(roots(0.0), DomainError);
}

TEST_CASE("Laplace symbols against direct arithmetic") {
    CHECK_REL(laplace_symbol_M(2.0, 1.0, mp(0.5, 1.0, 1.0, 2.0)).real(), frozen::symM_s2_xi1, 1e-15);
    CHECK_REL(laplace_symbol_U0(1.0, 1.0, mp(0.5, 1.0, 2.0, 3.0)).real(), frozen::symU0_s1_xi1, 1e-15);
}

TEST_CASE("U1 relation") {
    // s U0 + v^2 s^{2-2a} U1 = 1 over the common denominator
    ModelParams p = mp(0.7, 1.5, 1.5, 1.2);
    for (cplx s : {cplx(0.5, 0.2), cplx(2.0, -1.0), cplx(7.0, 3.0)}) {
        double v = std::pow(0.9, p.sigma);
        cplx lhs = s * laplace_symbol_U0(s, 0.9, p) + v * v * std::pow(s, 2 - 2 * p.alpha) * laplace_symbol_U1(s, 0.9, p);
        CHECK(std::abs(lhs - 1.0) < 1e-13);
    }
}

TEST_CASE("time-domain symbols against mpmath inversion") {
    CHECK_REL(symbol_N_hat(1.0, 1.0, mp(0.5, 1.0, 2.0, 3.0)).real(), frozen::N_hat_t1_xi1, 1e-11);
    CHECK_REL(symbol_M_hat(0.7, 2.0, mp(0.4, 0.9, 1.0, 1.0)).real(), frozen::M_hat_t07_xi2, 1e-11);
    CHECK_REL(symbol_J_hat(1.0, 1.0, mp(0.8, 2.0, 2.0, 0.5)).real(), frozen::J_hat_t1_xi1, 1e-11);
    CHECK_REL(symbol_N_hat(0.8, 1.3, mp(0.5, 1.0, 2.0, 2.0)).real(), frozen::N_hat_crit_t08_xi13, 1e-11);
}

TEST_CASE("closed forms agree with Talbot inversion") {
    for (auto p : {mp(0.3, 0.8, 1.0, 0.6), mp(0.6, 1.5, 2.0, 2.0), mp(0.9, 2.5, 0.5, 5.0)}) {
        for (double xi : {0.3, 1.2}) {
            auto poles = symbol_poles(xi, p);
            for (double t : {0.2, 1.5}) {
                auto opt = talbot_options_for(poles, t);
                cplx n = talbot_invert([&](cplx s) { return laplace_symbol_U0(s, xi, p); }, t, opt);
                cplx m = talbot_invert([&](cplx s) { return laplace_symbol_M(s, xi, p); }, t, opt);
                cplx j = talbot_invert([&](cplx s) { return laplace_symbol_U1(s, xi, p); }, t, opt);
                CHECK(std::abs(symbol_N_hat(t, xi, p) - n) < 1e-9);
                CHECK(std::abs(symbol_M_hat(t, xi, p) - m) < 1e-9);
                CHECK(std::abs(symbol_J_hat(t, xi, p) - j) < 1e-9);
            }
        }
    }
}

TEST_CASE("near-critical band is continuous") {
    ModelParams a = mp(0.5, 1.2, 2.0, 2.0), b = a;
    b.mu = 2.0 + 0.5 * kNearCritical;
    ModelParams c = a;
    c.mu = 2.0 + 1e-4;
    for (double t : {0.3, 2.0}) {
        CHECK(std::abs(symbol_N_hat(t, 1.1, a) - symbol_N_hat(t, 1.1, b)) < 1e-7);
        CHECK(std::abs(symbol_N_hat(t, 1.1, a) - symbol_N_hat(t, 1.1, c)) < 1e-3);
        CHECK(std::abs(symbol_J_hat(t, 1.1, a) - symbol_J_hat(t, 1.1, c)) < 1e-3);
    }
}

TEST_CASE("initial and zero-mode values") {
    ModelParams p = mp(0.6, 1.4, 2.0, 1.0);
    CHECK(symbol_N_hat(0.0, 2.0, p) == cplx(1.0));
    CHECK(symbol_J_hat(0.0, 2.0, p) == cplx(0.0));
    CHECK_REL(symbol_M_reduced(0.0, 2.0, p).real(), 1.0 / std::tgamma(1.4), 1e-15);
    CHECK(symbol_J_hat(2.5, 0.0, p) == cplx(2.5));
    CHECK_REL(symbol_M_hat(2.0, 0.0, p).real(), std::pow(2.0, 0.4) / std::tgamma(1.4), 1e-14);
    // small t approaches the initial values
    CHECK(std::abs(symbol_N_hat(1e-8, 1.0, p) - 1.0) < 1e-4);
    CHECK_REL(symbol_M_reduced(1e-9, 1.0, p).real(), 1.0 / std::tgamma(1.4), 1e-4);
}

TEST_CASE("symbols are real for real data") {
    for (double mu : {0.5, 2.0, 4.0}) {
        ModelParams p = mp(0.7, 1.6, 1.0, mu);
        for (double t : {0.1, 1.0, 10.0}) {
            CHECK(std::abs(symbol_N_hat(t, 0.8, p).imag()) < 1e-14);
            CHECK(std::abs(symbol_M_hat(t, 0.8, p).imag()) < 1e-14);
            CHECK(std::abs(symbol_J_hat(t, 0.8, p).imag()) < 1e-14);
        }
    }
}

TEST_CASE("parameter validation") {
    CHECK_NOTHROW(validate(mp(0.5, 1.0, 2.0, 3.0)));
    CHECK_THROWS_AS(validate(mp(0.5, 0.9, 2.0, 3.0)), ConfigError);
    CHECK_THROWS_AS(validate(mp(0.5, 2.0, 2.0, 3.0)), ConfigError);
    CHECK_THROWS_AS(validate(mp(1.2, 2.5, 2.0, 3.0)), ConfigError);
    CHECK_THROWS_AS(validate(mp(0.5, 1.0, 0.0, 3.0)), ConfigError);
    ModelParams p = mp(0.5, 1.0, 2.0, 3.0);
    p.n = 4;
    CHECK_THROWS_AS(validate(p), ConfigError);
    CHECK_THROWS_AS(talbot_invert([](cplx s) { return 1.0 / s; }, 0.0), DomainError);
}

TEST_CASE("Talbot on a known pair") {
    for (double t : {0.1, 1.0, 5.0})
        CHECK(std::abs(talbot_invert([](cplx s) { return 1.0 / (s + 1.0); }, t, 48) - std::exp(-t)) < 1e-12);
}

}
