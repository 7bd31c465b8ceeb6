#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

// Small numeric helpers shared across modules: overflow-safe exponential
// sums, 1D root finding / minimization, simplex grids, seed derivation,
// regression and a chi-square tail.

namespace mixlab {

using Vec = std::vector<double>;

inline double logsumexp(const Vec& x) {
    double m = -std::numeric_limits<double>::infinity();
    for (double v : x) m = std::max(m, v);
    if (!std::isfinite(m)) return m;
    double s = 0;
    for (double v : x) s += std::exp(v - m);
    return m + std::log(s);
}

// softmax with max-subtraction; writes a probability vector
inline Vec softmax(const Vec& x) {
    double m = -std::numeric_limits<double>::infinity();
    for (double v : x) m = std::max(m, v);
    Vec p(x.size());
    double s = 0;
    for (size_t i = 0; i < x.size(); ++i) { p[i] = std::exp(x[i] - m); s += p[i]; }
    for (double& v : p) v /= s;
    return p;
}

// bisection for f(lo) and f(hi) of opposite signs
inline double bisect(const std::function<double(double)>& f, double lo, double hi,
                     int iters = 200, double xtol = 0.0) {
    double flo = f(lo), fhi = f(hi);
    if (flo == 0) return lo;
    if (fhi == 0) return hi;
    if ((flo > 0) == (fhi > 0))
        throw std::runtime_error("bisect: no sign change in bracket");
    for (int i = 0; i < iters && hi - lo > xtol; ++i) {
        double mid = 0.5 * (lo + hi);
        double fm = f(mid);
        if (fm == 0) return mid;
        if ((fm > 0) == (flo > 0)) { lo = mid; flo = fm; }
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}

// bisection on a boolean predicate: pred(lo)=true, pred(hi)=false; returns
// the crossing point and final bracket width
struct PredicateRoot { double x; double bracket; };
inline PredicateRoot bisect_predicate(const std::function<bool(double)>& pred,
                                      double lo, double hi, int iters = 40) {
    if (!pred(lo)) throw std::runtime_error("bisect_predicate: pred(lo) must hold");
    if (pred(hi)) throw std::runtime_error("bisect_predicate: pred(hi) must fail");
    for (int i = 0; i < iters; ++i) {
        double mid = 0.5 * (lo + hi);
        if (pred(mid)) lo = mid;
        else hi = mid;
    }
    return {0.5 * (lo + hi), hi - lo};
}

// golden-section minimization of a 1D function on [a,b]
inline double golden_min(const std::function<double(double)>& f, double a, double b,
                         int iters = 120) {
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double fc = f(c), fd = f(d);
    for (int i = 0; i < iters; ++i) {
        if (fc < fd) { b = d; d = c; fd = fc; c = b - gr * (b - a); fc = f(c); }
        else { a = c; c = d; fc = fd; d = a + gr * (b - a); fd = f(d); }
    }
    return fc < fd ? c : d;
}

// enumerate the q-simplex grid with the given mesh; calls cb(z)
inline void for_each_simplex_grid(int q, double mesh, const std::function<void(const Vec&)>& cb) {
    int steps = (int)std::llround(1.0 / mesh);
    Vec z(q);
    std::function<void(int, int)> rec = [&](int k, int left) {
        if (k == q - 1) { z[k] = (double)left / steps; cb(z); return; }
        for (int c = 0; c <= left; ++c) { z[k] = (double)c / steps; rec(k + 1, left - c); }
    };
    rec(0, steps);
}

// splitmix64: derives independent stream seeds from a base seed
inline uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97f4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

struct LinearFit { double slope, intercept, r2; };
inline LinearFit linear_fit(const Vec& x, const Vec& y) {
    if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("linear_fit: need >=2 points");
    size_t n = x.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (size_t i = 0; i < n; ++i) { sx += x[i]; sy += y[i]; sxx += x[i]*x[i]; sxy += x[i]*y[i]; syy += y[i]*y[i]; }
    double den = n * sxx - sx * sx;
    double slope = (n * sxy - sx * sy) / den;
    double intercept = (sy - slope * sx) / n;
    double ssr = 0, sst = 0, ym = sy / n;
    for (size_t i = 0; i < n; ++i) {
        double e = y[i] - (slope * x[i] + intercept);
        ssr += e * e;
        sst += (y[i] - ym) * (y[i] - ym);
    }
    return {slope, intercept, sst > 0 ? 1.0 - ssr / sst : 1.0};
}

// regularized upper incomplete gamma Q(a,x), series + continued fraction
inline double gamma_q(double a, double x) {
    if (x < 0 || a <= 0) throw std::domain_error("gamma_q: bad arguments");
    if (x == 0) return 1.0;
    auto gln = std::lgamma(a);
    if (x < a + 1.0) {            // P by series, Q = 1-P
        double ap = a, sum = 1.0 / a, del = sum;
        for (int i = 0; i < 500; ++i) {
            ap += 1.0; del *= x / ap; sum += del;
            if (std::fabs(del) < std::fabs(sum) * 1e-16) break;
        }
        return 1.0 - sum * std::exp(-x + a * std::log(x) - gln);
    }
    // Lentz continued fraction for Q
    const double tiny = 1e-300;
    double b = x + 1.0 - a, c = 1.0 / tiny, d = 1.0 / b, h = d;
    for (int i = 1; i < 500; ++i) {
        double an = -i * (i - a);
        b += 2.0;
        d = an * d + b; if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c; if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-16) break;
    }
    return std::exp(-x + a * std::log(x) - gln) * h;
}

// chi-square survival function P(X > x) with k degrees of freedom
inline double chi_square_sf(double x, double k) { return gamma_q(0.5 * k, 0.5 * x); }

}  // namespace mixlab
