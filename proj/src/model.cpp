#include "mixlab/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mixlab {

ModelSpec ModelSpec::cwp(int q, double beta) {
    if (q < 2) throw std::domain_error("CWP: q >= 2 required");
    if (beta <= 0) throw std::domain_error("CWP: beta > 0 required");
    ModelSpec m;
    m.family = Family::CurieWeissPotts;
    m.q = q;
    m.r = 2.0;
    m.beta = beta;
    return m;
}

ModelSpec ModelSpec::gcwp(int q, double r, double beta) {
    if (q < 2) throw std::domain_error("GCWP: q >= 2 required");
    if (r < 2) throw std::domain_error("GCWP: r >= 2 required");
    if (beta <= 0) throw std::domain_error("GCWP: beta > 0 required");
    ModelSpec m;
    m.family = Family::GeneralizedCWP;
    m.q = q;
    m.r = r;
    m.beta = beta;
    return m;
}

ModelSpec ModelSpec::blume_capel(double K, double beta) {
    if (K <= 0) throw std::domain_error("BC: K > 0 required");
    if (beta <= 0) throw std::domain_error("BC: beta > 0 required");
    ModelSpec m;
    m.family = Family::BlumeCapel;
    m.q = 3;
    m.beta = beta;
    m.K = K;
    return m;
}

std::string ModelSpec::name() const {
    switch (family) {
        case Family::CurieWeissPotts: return "cwp(q=" + std::to_string(q) + ")";
        case Family::GeneralizedCWP:  return "gcwp(q=" + std::to_string(q) + ",r=" + std::to_string(r) + ")";
        case Family::BlumeCapel:      return "bc(K=" + std::to_string(K) + ")";
    }
    return "?";
}

bool is_simplex_point(const Vec& v, double tol) {
    double s = 0;
    for (double x : v) {
        if (x < -tol || x > 1 + tol) return false;
        s += x;
    }
    return std::fabs(s - 1.0) <= tol;
}

SimplexPoint::SimplexPoint(Vec coords) : v(std::move(coords)) {
    if (v.size() < 2 || !is_simplex_point(v))
        throw std::domain_error("SimplexPoint: coordinates must be >= 0 and sum to 1");
}

CountsVector::CountsVector(std::vector<long> c) : counts(std::move(c)) {
    n = 0;
    for (long x : counts) {
        if (x < 0) throw std::domain_error("CountsVector: negative count");
        n += x;
    }
    if (n == 0) throw std::domain_error("CountsVector: empty system");
}

SimplexPoint CountsVector::proportions() const {
    Vec z(counts.size());
    for (size_t k = 0; k < counts.size(); ++k) z[k] = (double)counts[k] / (double)n;
    return SimplexPoint(z);
}

Configuration::Configuration(std::vector<int> s, int q_) : spins(std::move(s)), q(q_) {
    if (q < 2) throw std::domain_error("Configuration: q >= 2");
    for (int x : spins)
        if (x < 1 || x > q) throw std::domain_error("Configuration: spin label out of range");
}

CountsVector Configuration::counts() const {
    std::vector<long> c((size_t)q, 0);
    for (int x : spins) c[(size_t)(x - 1)]++;
    return CountsVector(c);
}

Configuration Configuration::constant(int n, int q, int label) {
    return Configuration(std::vector<int>((size_t)n, label), q);
}

long bc_total_spin(const Configuration& c) {
    long s = 0;
    for (int x : c.spins) s += bc_spin_value(x);
    return s;
}

namespace detail {

double h_density(const ModelSpec& m, const Vec& z) {
    switch (m.family) {
        case Family::CurieWeissPotts: {
            double s = 0;
            for (double x : z) s += x * x;
            return -0.5 * s;
        }
        case Family::GeneralizedCWP: {
            double s = 0;
            for (double x : z) s += std::pow(x, m.r);
            return -s / m.r;
        }
        case Family::BlumeCapel: {
            // z = (rho_-1, rho_0, rho_+1); density of sum w_j^2 - (K/n) S^2
            double mag = z[2] - z[0];
            return (z[0] + z[2]) - m.K * mag * mag;
        }
    }
    return 0;
}

void grad_h(const ModelSpec& m, const Vec& z, Vec& out) {
    out.resize(z.size());
    switch (m.family) {
        case Family::CurieWeissPotts:
            for (size_t k = 0; k < z.size(); ++k) out[k] = -z[k];
            break;
        case Family::GeneralizedCWP:
            for (size_t k = 0; k < z.size(); ++k) out[k] = -std::pow(z[k], m.r - 1);
            break;
        case Family::BlumeCapel: {
            double mag = z[2] - z[0];
            out[0] = 1 + 2 * m.K * mag;
            out[1] = 0;
            out[2] = 1 - 2 * m.K * mag;
            break;
        }
    }
}

void q_diag(const ModelSpec& m, const Vec& z, Vec& out) {
    out.resize(z.size());
    switch (m.family) {
        case Family::CurieWeissPotts:
            for (size_t k = 0; k < z.size(); ++k) out[k] = -1.0;
            break;
        case Family::GeneralizedCWP:
            if (m.r == 2.0) {
                for (size_t k = 0; k < z.size(); ++k) out[k] = -1.0;
            } else {
                for (size_t k = 0; k < z.size(); ++k) out[k] = -(m.r - 1) * std::pow(z[k], m.r - 2);
            }
            break;
        case Family::BlumeCapel:
            out[0] = -2 * m.K;
            out[1] = 0;
            out[2] = -2 * m.K;
            break;
    }
}

}  // namespace detail

double hamiltonian_density(const ModelSpec& m, const SimplexPoint& z) {
    if (z.q() != m.q) throw std::domain_error("hamiltonian_density: dimension mismatch");
    return detail::h_density(m, z.v);
}

Vec grad_H(const ModelSpec& m, const SimplexPoint& z) {
    if (z.q() != m.q) throw std::domain_error("grad_H: dimension mismatch");
    Vec out;
    detail::grad_h(m, z.v, out);
    return out;
}

Vec q_operator(const ModelSpec& m, const SimplexPoint& z) {
    if (z.q() != m.q) throw std::domain_error("q_operator: dimension mismatch");
    Vec out;
    detail::q_diag(m, z.v, out);
    return out;
}

double log_mgf_gamma(const Vec& z) {
    if (z.empty()) throw std::domain_error("log_mgf_gamma: empty vector");
    return logsumexp(z) - std::log((double)z.size());
}

double clgf_bc(double beta, double t, int order) {
    // c_beta(t) = log[(1 + e^-b (e^t + e^-t)) / (1 + 2 e^-b)]
    double eb = std::exp(-beta);
    double D = 1 + 2 * eb * std::cosh(t);
    switch (order) {
        case 0: return std::log(D) - std::log(1 + 2 * eb);
        case 1: return 2 * eb * std::sinh(t) / D;
        case 2: {
            double s = 2 * eb * std::sinh(t) / D;
            return 2 * eb * std::cosh(t) / D - s * s;
        }
        default: throw std::domain_error("clgf_bc: order must be 0, 1 or 2");
    }
}

LegendreResult legendre_transform(const std::function<double(double)>& f,
                                  double a, double b, double y,
                                  int grid, int refinements) {
    if (!(a < b)) throw std::domain_error("legendre_transform: empty interval");
    // feasibility: y must lie in the closure of the slope range of f
    double h = (b - a) * 1e-7;
    double slope_lo = (f(a + h) - f(a)) / h;
    double slope_hi = (f(b) - f(b - h)) / h;
    if (y < slope_lo - 1e-9 || y > slope_hi + 1e-9) return {0.0, false};

    auto obj = [&](double t) { return t * y - f(t); };
    double lo = a, hi = b;
    double best_t = a, best = obj(a);
    for (int round = 0; round <= refinements; ++round) {
        double step = (hi - lo) / grid;
        for (int i = 0; i <= grid; ++i) {
            double t = lo + i * step;
            double v = obj(t);
            if (v > best) { best = v; best_t = t; }
        }
        lo = std::max(a, best_t - step);
        hi = std::min(b, best_t + step);
    }
    double t = golden_min([&](double x) { return -obj(x); }, lo, hi);
    double v = obj(t);
    if (v > best) best = v;
    return {best, true};
}

}  // namespace mixlab
