#pragma once

#include <limits>
#include <vector>

#include "lozi/core_map.hpp"
#include "lozi/symbolic.hpp"

namespace lozi {

// m = kInf selects the limiting quantity (r_inf, u_inf).
inline constexpr int kInf = std::numeric_limits<int>::max();

// y = slope * (x - anchor.x) + anchor.y
struct FwdLine {
    double slope = 0.0;
    Point anchor;

    double y_at(double x) const { return slope * (x - anchor.x) + anchor.y; }
};

// x = vslope * (y - anchor.y) + anchor.x
struct BwdLine {
    double vslope = 0.0;
    Point anchor;

    double x_at(double y) const { return vslope * (y - anchor.y) + anchor.x; }
    double trace() const { return x_at(0.0); }
};

enum class Side { L, R };

enum class BwdPath {
    Auto,           // branch inverse when b > 0, closed form at b = 0
    BranchInverse,  // throws GeometryError at b = 0
    ClosedForm,
};

double slope_fwd(const Params& p, Sign s, double slope);
double slope_bwd(const Params& p, Sign s, double vslope);

// The returned line is anchored where it crosses the critical locus x = 0.
FwdLine iterate_line_fwd(const Params& p, const Itinerary& seq, FwdLine L);
// seq is a forward word; preimages are taken right to left. The returned
// line is anchored at its x-axis trace.
BwdLine iterate_line_bwd(const Params& p, const Itinerary& seq, BwdLine L,
                         BwdPath path = BwdPath::Auto);

// k with (0,k) on L
double critical_crossing(const FwdLine& L);
double turning_point(const Params& p, const FwdLine& L);

BwdLine beta_1(const Params& p);    // W^S(z_+)
BwdLine beta_inf(const Params& p);  // W^S(z_-)
BwdLine beta(const Params& p, int m);
BwdLine gamma(const Params& p, int m);  // m = kInf gives gamma_inf

double r_value(const Params& p, int m);
double u_base(const Params& p, Side side);  // u^L = a-2b-1, u^R = a-1
double u_value(const Params& p, int m, Side side);
// u_inf - u_m, tracked as a deviation from W^U(Lambda_-, z_-) so it stays
// accurate after the difference drops below double resolution.
double u_gap(const Params& p, int m, Side side);

// + -^(m-2) + + -^(n-2)
Itinerary pq_word(int m, int n);
double p_value(const Params& p, int m, int n);
double q_value(const Params& p, int m, int n);

struct CriticalData {
    double uL = 0, uR = 0, u_inf = 0, r_inf = 0;
    std::vector<double> u_m_L, u_m_R;  // index m, valid from 2
    std::vector<double> r_m;           // index m, valid from 1
};

CriticalData critical_data(const Params& p, int m_max);

namespace closed_form {
double r_inf(const Params& p);
double v_minus(const Params& p);
double v_plus(const Params& p);
double w_plus(const Params& p);
double r_tent(double a, int m);
}  // namespace closed_form

}  // namespace lozi
