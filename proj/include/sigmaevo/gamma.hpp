#pragma once

namespace sigmaevo {

bool is_gamma_pole(double x);

// Gamma function; reflection for negative arguments, DomainError at poles.
double gamma_fn(double x);

// 1/Gamma(x), entire: zero at the poles of Gamma, no overflow for large x.
double rgamma(double x);

}  // namespace sigmaevo
