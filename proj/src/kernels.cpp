#include "sigmaevo/kernels.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "sigmaevo/errors.hpp"
#include "sigmaevo/gamma.hpp"
#include "sigmaevo/io.hpp"
#include "sigmaevo/ml.hpp"

namespace sigmaevo {

namespace {

void check_radii(const std::vector<double>& radii) {
    if (radii.empty()) throw DomainError("kernel: empty radius list");
    if (!(radii[0] > 0.0)) throw DomainError("kernel: radii must be positive (no value is produced at r = 0)");
    for (std::size_t i = 1; i < radii.size(); ++i)
        if (!(radii[i] > radii[i - 1])) throw DomainError("kernel: radii must be strictly increasing");
}

// Algebraic decay order d of E_{a,b}(-x) ~ x^{-d}/Gamma(b - a d); 0 means faster
// than any power.
int ml_decay_order(double a, double b) {
    for (int k = 1; k <= 64; ++k)
        if (rgamma(b - a * k) != 0.0) return k;
    return 0;
}

RadialProfile kernel_from_symbol(const std::function<cplx(double)>& symbol, const std::vector<double>& radii, int n,
                                 const HankelOptions& opt) {
    RadialProfile k = hankel_transform(symbol, 0.5 * n - 1.0, radii, opt);
    const double c = std::pow(2.0 * std::numbers::pi, -0.5 * n);
    for (std::size_t i = 0; i < radii.size(); ++i) {
        k.values[i] *= c;
        k.imag[i] *= c;
        k.error_est[i] *= c;
    }
    k.dim = n;
    return k;
}

// Symbols of N, M, J decay at least like |xi|^{-sigma}; the oscillatory Hankel
// integral converges when that beats the Bessel growth rho^{(n-1)/2}.
void check_model_regime(const ModelParams& p, const char* name) {
    validate(p);
    if (!(p.sigma > 0.5 * (p.n - 1)))
        throw RangeError(std::string("kernel ") + name + ": symbol decay |xi|^{-sigma} too slow for n=" +
                         std::to_string(p.n) + " (need sigma > (n-1)/2)");
}

KernelMeta model_meta(const char* kind, double t, const ModelParams& p) {
    KernelMeta m;
    m.kind = kind;
    m.t = t;
    m.alpha = p.alpha;
    m.beta = p.beta;
    m.sigma = p.sigma;
    m.mu = p.mu;
    return m;
}

}  // namespace

RadialProfile kernel_K(double t, const std::vector<double>& radii, double eta, double alpha, double beta, double sigma,
                       cplx lambda, int n, const HankelOptions& opt) {
    if (!(t > 0.0)) throw DomainError("kernel K: t must be positive");
    if (n < 1 || n > 3) throw DomainError("kernel K: dimension must be 1, 2 or 3");
    if (!(alpha > 0.0 && alpha <= 1.0) || !(beta > 0.0) || !(sigma > 0.0))
        throw DomainError("kernel K: need 0 < alpha <= 1, beta > 0, sigma > 0");
    check_radii(radii);
    if (!(eta + n > 0.0))
        throw RangeError("kernel K: rho^{eta+n-1} is not integrable at the origin (need eta > -n, got eta=" +
                         std::to_string(eta) + ")");
    if (lambda == 0.0) throw RangeError("kernel K: lambda = 0 gives a non-decaying symbol");
    const double pi = std::numbers::pi;
    if (std::abs(std::arg(lambda)) > pi * (1.0 - alpha / 2.0) + 1e-15)
        throw RangeError("kernel K: -lambda rho^sigma leaves the sector where E_{alpha,beta} decays");
    const int d = ml_decay_order(alpha, beta);
    if (d > 0 && !(eta - sigma * d + 0.5 * (n - 1) < 0.0))
        throw RangeError("kernel K: symbol rho^eta E(-lambda rho^sigma t^alpha) decays like rho^" +
                         std::to_string(eta - sigma * d) + ", too slow for a convergent transform in n=" +
                         std::to_string(n));
    const double ta = std::pow(t, alpha);
    auto phi = [=](double rho) {
        return std::pow(rho, eta) * ml_eval({alpha, beta, 1.0}, -lambda * std::pow(rho, sigma) * ta);
    };
    RadialProfile k = kernel_from_symbol(phi, radii, n, opt);
    k.meta.kind = "K";
    k.meta.t = t;
    k.meta.alpha = alpha;
    k.meta.beta = beta;
    k.meta.sigma = sigma;
    k.meta.eta = eta;
    k.meta.lambda = lambda;
    return k;
}

RadialProfile kernel_N(double t, const std::vector<double>& radii, const ModelParams& p, const HankelOptions& opt) {
    if (!(t > 0.0)) throw DomainError("kernel N: t must be positive (N(0) is a point mass)");
    check_radii(radii);
    check_model_regime(p, "N");
    RadialProfile k = kernel_from_symbol([&](double rho) { return symbol_N_hat(t, rho, p); }, radii, p.n, opt);
    k.meta = model_meta("N", t, p);
    return k;
}

RadialProfile kernel_M(double t, const std::vector<double>& radii, const ModelParams& p, const HankelOptions& opt) {
    if (!(t > 0.0)) throw DomainError("kernel M: t must be positive");
    check_radii(radii);
    check_model_regime(p, "M");
    RadialProfile k = kernel_from_symbol([&](double rho) { return symbol_M_hat(t, rho, p); }, radii, p.n, opt);
    k.meta = model_meta("M", t, p);
    return k;
}

RadialProfile kernel_J(double t, const std::vector<double>& radii, const ModelParams& p, const HankelOptions& opt) {
    if (!(t >= 0.0)) throw DomainError("kernel J: t must be non-negative");
    check_radii(radii);
    check_model_regime(p, "J");
    RadialProfile k;
    if (t == 0.0) {
        k.radii = radii;
        k.values.assign(radii.size(), 0.0);
        k.imag.assign(radii.size(), 0.0);
        k.error_est.assign(radii.size(), 0.0);
        k.dim = p.n;
    } else {
        k = kernel_from_symbol([&](double rho) { return symbol_J_hat(t, rho, p); }, radii, p.n, opt);
    }
    k.meta = model_meta("J", t, p);
    return k;
}

double radial_mass(const RadialProfile& k) {
    const double omega = 2.0 * std::pow(std::numbers::pi, 0.5 * k.dim) / std::tgamma(0.5 * k.dim);
    double s = 0.0;
    for (std::size_t i = 1; i < k.radii.size(); ++i) {
        const double a = k.values[i - 1] * std::pow(k.radii[i - 1], k.dim - 1);
        const double b = k.values[i] * std::pow(k.radii[i], k.dim - 1);
        s += 0.5 * (a + b) * (k.radii[i] - k.radii[i - 1]);
    }
    return omega * s;
}

double radial_lq_norm(const RadialProfile& k, double q) {
    if (!(q >= 1.0)) throw DomainError("radial_lq_norm: q must be >= 1");
    if (std::isinf(q)) {
        double m = 0.0;
        for (std::size_t i = 0; i < k.values.size(); ++i) m = std::max(m, std::hypot(k.values[i], k.imag[i]));
        return m;
    }
    const double omega = 2.0 * std::pow(std::numbers::pi, 0.5 * k.dim) / std::tgamma(0.5 * k.dim);
    auto g = [&](std::size_t i) { return std::pow(std::hypot(k.values[i], k.imag[i]), q) * std::pow(k.radii[i], k.dim - 1); };
    double s = 0.0;
    for (std::size_t i = 1; i < k.radii.size(); ++i) s += 0.5 * (g(i - 1) + g(i)) * (k.radii[i] - k.radii[i - 1]);
    return std::pow(omega * s, 1.0 / q);
}

void write_profile_csv(const RadialProfile& k, const std::string& path) {
    std::vector<std::vector<double>> rows;
    rows.reserve(k.radii.size());
    for (std::size_t i = 0; i < k.radii.size(); ++i) rows.push_back({k.radii[i], k.values[i], k.imag[i], k.error_est[i]});
    write_csv(path, {"r", "value", "imag", "error_est"}, rows);
}

void write_profile_meta(const RadialProfile& k, const std::string& path) {
    nlohmann::json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = k.meta.kind;
    j["dim"] = k.dim;
    j["t"] = k.meta.t;
    j["alpha"] = k.meta.alpha;
    j["beta"] = k.meta.beta;
    j["sigma"] = k.meta.sigma;
    if (k.meta.kind == "K") {
        j["eta"] = k.meta.eta;
        j["lambda"] = {k.meta.lambda.real(), k.meta.lambda.imag()};
    } else {
        j["mu"] = k.meta.mu;
    }
    double worst = 0.0;
    for (double e : k.error_est) worst = std::max(worst, e);
    j["max_error_est"] = worst;
    j["n_radii"] = k.radii.size();
    write_json(path, j);
}

}  // namespace sigmaevo
