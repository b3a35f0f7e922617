#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lozi/core_map.hpp"
#include "lozi/roots.hpp"

namespace lozi {

struct SolveOptions {
    RootOptions root;
    int scan_points = 64;
    double a_lo = 1.4142135623730951;  // sqrt(2)
    double a_hi = 4.0;
};

struct LRoot {
    double a = 0.0;
    double residual = 0.0;  // p - q at a
    double dgda = 0.0;      // d(p-q)/da at a
    int sign_changes = 0;
    bool monotone = true;   // p - q increasing across the pre-scan
    std::vector<std::string> warnings;
};

// p - q at (a, b)
double pq_gap(double a, double b, int m, int n);

LRoot solve_l_detail(double b, int m, int n, const SolveOptions& opt = {});
double solve_l(double b, int m, int n);

// -d_b(p-q) / d_a(p-q) at a point of l_{m,n}
double implicit_slope(int m, int n, double b, double a);

struct BifCurve {
    int m = 0;
    int n = 0;
    std::vector<double> b, a, dadb;
    std::vector<double> residual;
    bool regime_ok = true;  // every sample had one sign change and a monotone pre-scan
    bool continuous = true;
    std::vector<std::string> warnings;
};

std::vector<double> uniform_grid(double lo, double hi, int points);

BifCurve trace_curve(int m, int n, const std::vector<double>& b_grid, int workers = 1,
                     const SolveOptions& opt = {});

struct TangencyCurve {
    std::vector<double> b, a;
};

// root of u_inf - r_inf near a = 2
double tangency(double b);
TangencyCurve tangency_curve(const std::vector<double>& b_grid);

struct MChoice {
    int m = 0;
    double b_bar = 0.0;
    double a_t = 0.0;
    double log_gap = 0.0;    // T(u_3^L) - T(r_m), measured
    double proof_gap = 0.0;  // left minus right side of the small-b condition with proof constants
};

// Throws ConditionFailed when the sandwich or u_3^L > r_m fails.
MChoice choose_m(double b_bar);

struct Intersection {
    int m = 0;
    double b_star = 0.0;
    double a_star = 0.0;
    double slope2 = 0.0;
    double slope3 = 0.0;
};

struct Reversal {
    Intersection x;
    double b_bar = 0.0;
    std::optional<MChoice> choice;
    BifCurve l2, l3;
    int sign_changes = 0;
    bool slopes_ordered = true;  // dadb2 > dadb3 at every grid sample
};

Reversal find_reversal(double b_bar, std::optional<int> m = std::nullopt, int grid_points = 51,
                       int workers = 1);

struct ReversalScan {
    std::optional<Reversal> result;
    std::vector<std::string> log;
};

ReversalScan scan_reversal(double b_start = 0.05, double step = 0.005, int grid_points = 51,
                           int workers = 1);

struct FamilyReport {
    std::vector<BifCurve> curves;
    std::vector<Intersection> intersections;
    std::vector<int> crossings_per_m;
    bool non_crossing = true;  // l_{m,n} < l_{m+1,n} on the whole grid for each n
    std::vector<std::string> warnings;
};

FamilyReport figure1_family(int m_min, int m_max, const std::vector<int>& ns, double b_max,
                            int grid_points, int workers = 1, const SolveOptions& opt = {});

}  // namespace lozi
