#include <cmath>
#include <filesystem>
#include <fstream>

#include "../frozen_values.hpp"
#include "helpers.hpp"
#include "sigmaevo/errors.hpp"
#include "sigmaevo/solver.hpp"

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

SpectralField plane(const Grid& g, int k, cplx amp = 1.0) {
    return SpectralField::from_function(g, [=](const Point& x) { return amp * std::exp(cplx(0, k * x[0])); });
}

SpectralField gauss(const Grid& g, double w = 1.0) {
    return SpectralField::from_function(g, [=](const Point& x) {
        double r2 = 0;
        for (int d = 0; d < g.n; ++d) r2 += x[d] * x[d];
        return cplx(std::exp(-r2 / (w * w)));
    });
}

}  // namespace

TEST_SUITE("solver") {

TEST_CASE("grid validation and indexing") {
    CHECK_THROWS_AS((Grid{4, 8, 1.0}.validate()), ConfigError);
    CHECK_THROWS_AS((Grid{1, 12, 1.0}.validate()), ConfigError);
    CHECK_THROWS_AS((Grid{1, 8, 0.0}.validate()), ConfigError);
    Grid g{2, 8, 2 * M_PI};
    CHECK(g.size() == 64);
    CHECK(g.wave_index(5) == -3);
    CHECK(g.key(1 * 8 + 7) == 1 + 1);
    CHECK_REL(g.xi_abs(2 * 8 + 0), 2.0, 1e-15);
}

TEST_CASE("spectral round trip and plane-wave coefficient") {
    Grid g{2, 16, 3.0};
    auto f = gauss(g, 0.4);
    auto back = SpectralField::from_spectral(g, f.spectral());
    for (std::size_t i = 0; i < g.size(); ++i) CHECK(std::abs(back.physical()[i] - f.physical()[i]) < 1e-14);
    Grid g1{1, 32, 2 * M_PI};
    auto pw = plane(g1, 3);
    CHECK(std::abs(pw.spectral()[3] - 1.0) < 1e-14);
    CHECK_THROWS_AS(SpectralField::from_physical(g1, std::vector<cplx>(5)), LengthError);
}

TEST_CASE("plane wave evolves by the N multiplier") {
    Grid g{1, 32, 2 * M_PI};
    ModelParams p = mp(0.4, 1.0, 1.5, 3.0);
    auto tr = solve_cp1(plane(g, 2), {}, p, {0.0, 0.5, 2.0});
    for (std::size_t i = 0; i < tr.times.size(); ++i) {
        cplx want = symbol_N_hat(tr.times[i], 2.0, p);
        CHECK(std::abs(tr.states[i].spectral()[2] - want) < 1e-13);
        CHECK(std::abs(tr.states[i].spectral()[5]) < 1e-13);
    }
}

TEST_CASE("zero mode is preserved without a source") {
    Grid g{2, 16, 6.0};
    auto tr = solve_cp1(gauss(g), {}, mp(0.3, 0.9, 2.0, 1.0), uniform_times(3.0, 6));
    cplx m0 = tr.states[0].spectral()[0];
    for (auto& s : tr.states) CHECK(std::abs(s.spectral()[0] - m0) < 1e-14);
}

TEST_CASE("linearity") {
    Grid g{1, 64, 10.0};
    ModelParams p = mp(0.75, 1.8, 2.0, 0.7);
    auto a = gauss(g, 1.0), b = gauss(g, 0.5);
    std::vector<cplx> sum(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) sum[i] = 2.0 * a.physical()[i] - b.physical()[i];
    auto S = SpectralField::from_physical(g, sum);
    auto times = uniform_times(1.0, 4);
    // u(S, S) = 2 u(a, a) - u(b, b) for S = 2a - b
    auto ts = solve_cp2(S, S, {}, p, times);
    auto taa = solve_cp2(a, a, {}, p, times), tbb = solve_cp2(b, b, {}, p, times);
    for (std::size_t k = 0; k < times.size(); ++k)
        for (std::size_t i = 0; i < g.size(); ++i)
            CHECK(std::abs(ts.states[k].physical()[i] - (2.0 * taa.states[k].physical()[i] - tbb.states[k].physical()[i])) <
                  1e-12);
}

TEST_CASE("alpha = 1 reduces to the damped mode ODE") {
    Grid g{1, 16, 2 * M_PI};
    struct Case {
        double mu, sigma;
        int k;
        double u0, u1, t, want;
    };
    for (Case c : {Case{1e-3, 2.0, 1, 1.0, 0.0, 2.0, frozen::ode_mu1e3_v1_t2},
                   Case{2.0, 2.0, 2, 1.0, 0.5, 0.5, frozen::ode_mu2_v4_t05},
                   Case{3.0, 1.0, 2, 0.3, 1.0, 1.0, frozen::ode_mu3_v2_t1}}) {
        ModelParams p = mp(1.0, 2.0, c.sigma, c.mu);
        auto tr = solve_cp2(plane(g, c.k, c.u0), plane(g, c.k, c.u1), {}, p, {0.0, c.t});
        CHECK_REL(tr.states[1].spectral()[c.k].real(), c.want, 1e-11);
    }
}

TEST_CASE("source term matches the inverse Laplace transform of M(s)/s") {
    Grid g{1, 16, 2 * M_PI};
    ModelParams p = mp(0.4, 1.1, 1.0, 1.5);
    auto times = uniform_times(1.0, 400);
    auto src = sample_source(g, times, [](double, const Point& x) { return std::exp(cplx(0, x[0])); });
    auto zero = SpectralField::from_spectral(g, std::vector<cplx>(g.size()));
    auto tr = solve_cp1(zero, src, p, times);
    cplx want = talbot_invert([&](cplx s) { return laplace_symbol_M(s, 1.0, p) / s; }, 1.0,
                              talbot_options_for(symbol_poles(1.0, p), 1.0));
    CHECK(std::abs(tr.states.back().spectral()[1] - want) < 2e-4);
    CHECK(residual_cp(tr, src) < 1e-2);
}

TEST_CASE("residual detects a wrong solution") {
    Grid g{1, 32, 12.0};
    ModelParams p = mp(0.4, 1.0, 2.0, 3.0);
    auto times = uniform_times(1.0, 128);
    auto src = sample_source(g, times, [](double t, const Point& x) { return cplx(std::cos(t) * std::exp(-x[0] * x[0])); });
    auto tr = solve_cp1(gauss(g), src, p, times);
    double good = residual_cp(tr, src);
    // frozen initial data is not a solution
    auto bad = tr;
    for (auto& s : bad.states) s = tr.states[0];
    double wrong = residual_cp(bad, src);
    CHECK(good < 0.02);
    CHECK(wrong > 0.1);
    CHECK(wrong > 10 * good);
}

TEST_CASE("problem constraints") {
    Grid g{1, 16, 6.0};
    auto u = gauss(g);
    auto times = uniform_times(1.0, 4);
    CHECK_THROWS_WITH_AS(solve_cp1(u, {}, mp(0.75, 1.6, 2.0, 1.0), times),
                         doctest::Contains("cp1 requires 0 < alpha <= 1/2"), ConfigError);
    CHECK_THROWS_WITH_AS(solve_cp2(u, u, {}, mp(0.4, 1.0, 2.0, 1.0), times),
                         doctest::Contains("cp2 requires 1/2 < alpha <= 1"), ConfigError);
    CHECK_THROWS_AS(solve_cp1(u, {}, mp(0.4, 1.0, 2.0, 1.0), {0.0, 1.0, 0.5}), ConfigError);
    auto src = sample_source(g, {0.0, 0.5, 2.0}, [](double, const Point&) { return cplx(1); });
    CHECK_THROWS_AS(solve_cp1(u, src, mp(0.4, 1.0, 2.0, 1.0), {0.0, 0.5, 2.0}), ConfigError);
    auto tr = solve_cp2(u, u, {}, mp(0.75, 1.6, 2.0, 1.0), uniform_times(1.0, 32));
    tr.velocity = SpectralField();
    CHECK_THROWS_AS(residual_cp(tr, {}), ConfigError);
}

TEST_CASE("norms") {
    Grid g{1, 64, 2 * M_PI};
    auto one = SpectralField::from_function(g, [](const Point&) { return cplx(1.0); });
    CHECK_REL(lq_norm(one, 1.0), 2 * M_PI, 1e-14);
    CHECK_REL(lq_norm(one, 2.0), std::sqrt(2 * M_PI), 1e-14);
    CHECK(lq_norm(one, INFINITY) == 1.0);
    auto s = plane(g, 3);
    CHECK_REL(sobolev_seminorm(s, 2.0, INFINITY), 9.0, 1e-12);
    CHECK_THROWS_AS(lq_norm(one, 0.5), DomainError);
    std::vector<double> t{0, 1, 2}, v{1, 1, 1};
    CHECK_REL(mixed_norm(t, v, 2.0), std::sqrt(2.0), 1e-15);
    CHECK(mixed_norm(t, {1, 3, 2}, INFINITY) == 3.0);
}

TEST_CASE("trajectory output") {
    Grid g{2, 4, 1.0};
    auto tr = solve_cp1(gauss(g), {}, mp(0.3, 0.8, 1.0, 1.0), {0.0, 1.0});
    auto dir = std::filesystem::temp_directory_path() / "sigmaevo_unit_traj";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    write_trajectory(tr, dir.string());
    CHECK(std::filesystem::exists(dir / "manifest.json"));
    std::ifstream in(dir / "state_00001.csv");
    std::string header;
    std::getline(in, header);
    CHECK(header == "x,y,re,im");
    std::filesystem::remove_all(dir);
}

}
