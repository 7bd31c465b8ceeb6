#pragma once

#include <vector>

#include "mixlab/model.hpp"

// Free-energy functionals, LDP rate functions, equilibrium macrostates and
// the critical values of the phase diagrams: K_c^(2), K_1, K_c^(1), w_c for
// Blume-Capel; beta_c, beta_s and the local contraction limit for (G)CWP.

namespace mixlab {

// --- Blume-Capel scalar theory ---------------------------------------------

/// G_{beta,K}(z) = beta K z^2 - c_beta(2 beta K z)
double free_energy_bc(double beta, double K, double z);

/// Cramer rate function J_beta(z) = sup_t { t z - c_beta(t) }, z in [-1,1].
double bc_rate_J(double beta, double z);

/// inf_y { J_beta(y) - beta K y^2 } by grid + refinement over [-1,1].
double bc_rate_infimum(double beta, double K);

/// I_{beta,K}(z) = J_beta(z) - beta K z^2 - inf_y { J_beta(y) - beta K y^2 }
double rate_function_bc(double beta, double K, double z);
double rate_function_bc(double beta, double K, double z, double inf_value);

struct Kc2Result {
    double value = 0;
    bool in_regime = true;   // false when beta > log 4
};
/// Second-order curve K_c^(2)(beta) = (e^beta + 2)/(4 beta).
Kc2Result kc2(double beta);

/// w_c(beta) = acosh(e^beta/2 - 4 e^-beta), beta >= log 4.
double wc(double beta);

struct MetastableK {
    double K = 0, z = 0;            // tangency point of z = c'(2 beta K z)
    double resid_g1 = 0, resid_g2 = 0;
};
/// Metastable critical value K_1(beta), beta > log 4: G' = G'' = 0 at z > 0.
MetastableK k1_bc(double beta);

struct FirstOrderK {
    double K = 0, z = 0;            // positive minimizer with G = 0
    double resid = 0;               // |min_{z>0} G| at the returned K
};
/// First-order curve K_c^(1)(beta), beta > log 4: positive well reaches 0.
FirstOrderK kc1_bc(double beta);

struct ScalarPhasePoint {
    double beta = 0, K = 0;
    std::vector<double> minimizers;  // global minimizers of G_{beta,K} in [-1,1]
    double min_value = 0;
    double mesh = 0;
};
ScalarPhasePoint equilibrium_macrostates_bc(double beta, double K);

/// Local minimizers (z, value) of a scalar function on [-1,1]; used for the
/// metastable-state comparisons between G and I.
std::vector<std::pair<double,double>> scalar_local_minima(
    const std::function<double(double)>& f, double lo, double hi, double mesh = 1e-3);

// --- general (G)CWP theory --------------------------------------------------

/// R(z | uniform) with the 0 log 0 = 0 convention.
double relative_entropy_uniform(const Vec& z);

/// G_beta(z) = beta (-H)^*(-grad H(z)) - Gamma(-beta grad H(z)).
double free_energy_general(const ModelSpec& m, const Vec& z);

/// I_beta(z) = R(z|rho) + beta H(z) - inf over the simplex.
double rate_function_general(const ModelSpec& m, const SimplexPoint& z);
double rate_function_general(const ModelSpec& m, const SimplexPoint& z, double inf_value);

/// inf over the simplex of R + beta H (grid + polish).
double min_rate_numerator(const ModelSpec& m);

struct SimplexPhasePoint {
    double beta = 0;
    std::vector<Vec> minimizers;
    double min_value = 0;
    double mesh = 0;
};
SimplexPhasePoint equilibrium_macrostates(const ModelSpec& m);

struct CriticalBeta {
    double beta = 0;
    double bracket = 0;   // final bisection bracket width
};
/// beta where the global minimum of G_beta migrates off the uniform point.
CriticalBeta beta_c_gcwp(int q, double r);

/// sup{beta : g_k(z) < z_k whenever z_k > 1/q}; grid scan + bisection.
CriticalBeta beta_s_gcwp(int q, double r, double mesh = 0.005);

/// Right side of the GCWP mean-field equation minus u (root at equilibria).
double gcwp_mean_field_residual(int q, double r, double beta, double u);

/// beta (r-1) q^(1-r): the near-equilibrium contraction rate of g.
double local_contraction_limit(int q, double r, double beta);

// grid + coordinate-descent minimization of a function on the simplex;
// returns all global minimizers within `value_tol` after polish
struct SimplexMinResult {
    std::vector<Vec> argmins;
    double min_value;
};
SimplexMinResult minimize_on_simplex(int q, const std::function<double(const Vec&)>& f,
                                     double mesh, double dedup_tol = 1e-6,
                                     double value_tol = 1e-7);

}  // namespace mixlab
