#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mixlab/numerics.hpp"

// Model family definitions and the generating functions every other module
// consumes: the interaction representation function H with its first and
// second (diagonal) derivatives, the log moment generating function Gamma
// of a uniform spin, and the Blume-Capel cumulant generating function c_beta.

namespace mixlab {

enum class Family { CurieWeissPotts, GeneralizedCWP, BlumeCapel };

struct ModelSpec {
    Family family = Family::CurieWeissPotts;
    int q = 3;           // spin values; fixed to 3 for Blume-Capel
    double r = 2.0;      // GCWP exponent, real >= 2
    double beta = 1.0;   // inverse temperature
    double K = 1.0;      // Blume-Capel interaction strength

    static ModelSpec cwp(int q, double beta);
    static ModelSpec gcwp(int q, double r, double beta);
    static ModelSpec blume_capel(double K, double beta);

    std::string name() const;
};

/// Proportion vector in the continuous simplex (entries >= 0, sum 1).
struct SimplexPoint {
    Vec v;
    explicit SimplexPoint(Vec coords);
    int q() const { return (int)v.size(); }
    double operator[](int k) const { return v[(size_t)k]; }
};

bool is_simplex_point(const Vec& v, double tol = 1e-12);

/// Integer lattice point n*z with z in P_n.
struct CountsVector {
    std::vector<long> counts;
    long n = 0;
    explicit CountsVector(std::vector<long> c);
    SimplexPoint proportions() const;
};

/// Spin assignment; labels 1..q. Blume-Capel maps (1,2,3) -> (-1,0,+1).
struct Configuration {
    std::vector<int> spins;
    int q = 3;
    Configuration(std::vector<int> s, int q_);
    int n() const { return (int)spins.size(); }
    CountsVector counts() const;
    static Configuration constant(int n, int q, int label);
};

inline int bc_spin_value(int label) { return label - 2; }  // 1,2,3 -> -1,0,+1
long bc_total_spin(const Configuration& c);

// --- generating functions -------------------------------------------------

double hamiltonian_density(const ModelSpec& m, const SimplexPoint& z);
Vec grad_H(const ModelSpec& m, const SimplexPoint& z);
Vec q_operator(const ModelSpec& m, const SimplexPoint& z);

/// Gamma(z) = log((1/q) sum_k exp z_k), overflow-safe.
double log_mgf_gamma(const Vec& z);

/// c_beta(t) and its first two derivatives (order in {0,1,2}).
double clgf_bc(double beta, double t, int order);

// unchecked fast paths used by inner loops
namespace detail {
double h_density(const ModelSpec& m, const Vec& z);
void grad_h(const ModelSpec& m, const Vec& z, Vec& out);
void q_diag(const ModelSpec& m, const Vec& z, Vec& out);
}  // namespace detail

// --- numeric Legendre transform -------------------------------------------

struct LegendreResult {
    double value = 0;
    bool finite = true;
};

/// sup_{t in [a,b]} { t*y - f(t) } on an adaptive grid (initial `grid`
/// points, `refinements` refinement rounds, golden-section polish).
LegendreResult legendre_transform(const std::function<double(double)>& f,
                                  double a, double b, double y,
                                  int grid = 4096, int refinements = 2);

}  // namespace mixlab
