#pragma once

#include <utility>
#include <vector>

namespace schwarz {

// The standard ternary Cantor function c : [0,1] -> [0,1], evaluated by digit
// expansion until the remaining interval is below 1e-16 or 64 digits are
// consumed. Values below 0 / above 1 clamp to 0 / 1. Middle-third plateaus
// are returned exactly (c(0.4) == 0.5).
double cantor_function(double t);

// Moments m_k = \int_0^1 c(t)^k dt, k = 0..max_k. m_0 = 1, m_1 = 1/2,
// m_2 = 3/10, m_3 = 1/5. Computed from the self-similarity of c.
std::vector<double> cantor_moments(int max_k);

// Prefix moments M_k(T) = \int_0^T c(t)^k dt for k = 0..max_k, T in [0,1].
std::vector<double> cantor_prefix_moments(int max_k, double T);

// \int_{t0}^{t1} q(c(t)) dt for a polynomial q given by coefficients
// (q(u) = sum_j coeffs[j] u^j). When `reversed`, integrates q(c(1-t)) instead.
double cantor_poly_integral(const std::vector<double>& coeffs, double t0, double t1,
                            bool reversed = false);

// Preimage interval c^{-1}({u}) in [0,1]: a plateau [lo,hi] when u is a dyadic
// rational in (0,1), otherwise a single point (lo == hi). u outside [0,1] maps
// to an empty result signalled by lo > hi.
std::pair<double, double> cantor_preimage(double u);

} // namespace schwarz
