#include <cmath>
#include <vector>

#include "../frozen_values.hpp"
#include "helpers.hpp"
#include "sigmaevo/errors.hpp"
#include "sigmaevo/kernels.hpp"

using namespace sigmaevo;

namespace {

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> r(n);
    for (int i = 0; i < n; ++i) r[i] = a + (b - a) * i / (n - 1);
    return r;
}

}  // namespace

TEST_SUITE("kernels") {

TEST_CASE("Bessel values") {
    CHECK_REL(bessel_j(0, 1), frozen::J0_1, 1e-14);
    CHECK_REL(bessel_j(0, 50), frozen::J0_50, 1e-12);
    CHECK_REL(bessel_j(1, 500), frozen::J1_500, 1e-11);
    CHECK_REL(bessel_j(-0.5, 3), frozen::Jm05_3, 1e-14);
    CHECK_REL(bessel_j(0.25, 7), frozen::J025_7, 1e-13);
    CHECK_REL(bessel_j(1.5, 0.2), frozen::J15_02, 1e-13);
    CHECK_REL(bessel_j(-0.7, 2), frozen::Jm07_2, 1e-13);
    CHECK_REL(bessel_j(0, 499.5), frozen::J0_499, 1e-11);
    CHECK(bessel_j(1.0, 0.0) == 0.0);
    CHECK(bessel_j(0.0, 0.0) == 1.0);
    CHECK_THROWS_AS(bessel_j(-1.0, 1.0), DomainError);
    CHECK_THROWS_AS(bessel_j(0.0, -1.0), DomainError);
}

TEST_CASE("Bessel zeros") {
    CHECK_REL(bessel_zero(0, 1), frozen::J0_zero1, 1e-14);
    CHECK_REL(bessel_zero(0, 200), frozen::J0_zero200, 1e-14);
    CHECK_REL(bessel_zero(0.5, 3), frozen::J05_zero3, 1e-14);
    CHECK_REL(bessel_zero(-0.5, 2), frozen::Jm05_zero2, 1e-14);
    CHECK_REL(bessel_zero(1, 10), frozen::J1_zero10, 1e-14);
    for (int k = 1; k < 30; ++k) {
        CHECK(bessel_zero(0.3, k + 1) > bessel_zero(0.3, k));
        CHECK(std::abs(bessel_j(0.3, bessel_zero(0.3, k))) < 1e-13);
    }
    CHECK_THROWS_AS(bessel_zero(0, 0), DomainError);
}

TEST_CASE("Hankel transform values") {
    auto v = hankel_eval([](double r) { return cplx(r * r * std::exp(-r * r)); }, 1.0, 1.5);
    CHECK_REL(v.value.real(), frozen::hankel_r2gauss_nu1_t15, 1e-10);
    // Gaussian is self-reciprocal for every order
    for (double nu : {-0.5, 0.0, 0.5, 1.0})
        for (double tau : {0.0, 0.7, 3.0}) {
            auto g = hankel_eval([](double r) { return cplx(std::exp(-r * r / 2)); }, nu, tau);
            CHECK(std::abs(g.value.real() - std::exp(-tau * tau / 2)) < 1e-10);
        }
    CHECK_THROWS_AS(hankel_eval([](double) { return cplx(0); }, -1.5, 1.0), DomainError);
}

TEST_CASE("heat kernel from K with alpha = beta = 1") {
    auto radii = linspace(0.05, 3.0, 20);
    for (int n : {1, 2, 3}) {
        double t = 0.6;
        auto k = kernel_K(t, radii, 0.0, 1.0, 1.0, 2.0, 1.0, n);
        for (std::size_t i = 0; i < radii.size(); ++i) {
            double r = radii[i];
            double want = std::pow(4 * M_PI * t, -n / 2.0) * std::exp(-r * r / (4 * t));
            CHECK(std::abs(k.values[i] - want) < 1e-9);
            CHECK(std::abs(k.imag[i]) < 1e-12);
        }
    }
}

TEST_CASE("self-similar scaling in t") {
    double a = 0.6, b = 1.0, sigma = 1.5;
    int n = 2;
    std::vector<double> radii{0.3, 0.8, 1.7};
    auto k1 = kernel_K(1.0, radii, 0.0, a, b, sigma, 1.0, n);
    double t = 3.0, c = std::pow(t, a / sigma);
    std::vector<double> scaled;
    for (double r : radii) scaled.push_back(r * c);
    auto kt = kernel_K(t, scaled, 0.0, a, b, sigma, 1.0, n);
    for (std::size_t i = 0; i < radii.size(); ++i)
        CHECK_REL(kt.values[i] * std::pow(c, n), k1.values[i], 1e-8);
}

TEST_CASE("N kernel carries unit mass") {
    ModelParams p;
    p.alpha = 1.0;
    p.beta = 2.0;
    p.sigma = 2.0;
    p.mu = 3.0;
    p.n = 1;
    auto radii = linspace(0.005, 12.0, 1200);
    auto k = kernel_N(0.5, radii, p);
    // the trapezoid starts at the first radius; add the missing sliver
    double mass = radial_mass(k) + 2.0 * radii[0] * k.values[0];
    CHECK(std::abs(mass - 1.0) < 2e-3);
    CHECK(radial_lq_norm(k, INFINITY) >= std::abs(k.values[0]));
}

TEST_CASE("J kernel vanishes at t = 0") {
    ModelParams p;
    p.alpha = 0.8;
    p.beta = 2.0;
    p.sigma = 2.0;
    auto k = kernel_J(0.0, {0.5, 1.0}, p);
    for (double v : k.values) CHECK(v == 0.0);
}

TEST_CASE("regime errors") {
    std::vector<double> r{0.5, 1.0};
    CHECK_THROWS_AS(kernel_K(0.0, r, 0.0, 0.5, 1.0, 2.0, 1.0, 1), DomainError);
    CHECK_THROWS_AS(kernel_K(1.0, r, -1.5, 0.5, 1.0, 2.0, 1.0, 1), RangeError);
    CHECK_THROWS_AS(kernel_K(1.0, r, 0.0, 0.5, 1.0, 2.0, 0.0, 1), RangeError);
    CHECK_THROWS_AS(kernel_K(1.0, {1.0, 0.5}, 0.0, 0.5, 1.0, 2.0, 1.0, 1), DomainError);
    CHECK_THROWS_AS(kernel_K(1.0, {0.0, 0.5}, 0.0, 0.5, 1.0, 2.0, 1.0, 1), DomainError);
    ModelParams p;
    CHECK_THROWS_AS(kernel_N(0.0, r, p), DomainError);
}

}
