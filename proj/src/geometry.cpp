#include "lozi/geometry.hpp"

#include <cmath>

#include "lozi/error.hpp"

namespace lozi {

namespace {

bool near_zero(double den, const Params& p)
{
    return !(std::fabs(den) >= 1e-14 * std::max(1.0, p.a));
}

}  // namespace

double slope_fwd(const Params& p, Sign s, double slope)
{
    double den = p.b * slope + val(s) * p.a;
    if (near_zero(den, p))
        throw GeometryError("slope_fwd: image of the line is vertical");
    return -1.0 / den;
}

double slope_bwd(const Params& p, Sign s, double vslope)
{
    double den = vslope + val(s) * p.a;
    if (near_zero(den, p))
        throw GeometryError("slope_bwd: excluded vertical slope");
    return -p.b / den;
}

double critical_crossing(const FwdLine& L)
{
    if (!std::isfinite(L.slope))
        throw GeometryError("line does not cross the critical locus");
    return L.y_at(0.0);
}

FwdLine iterate_line_fwd(const Params& p, const Itinerary& seq, FwdLine L)
{
    for (Sign s : seq.symbols()) {
        Point q = eval_branch(p, s, L.anchor);
        double s2 = slope_fwd(p, s, L.slope);
        L = {s2, Point{0.0, s2 * (0.0 - q.x) + q.y}};
    }
    return L;
}

BwdLine iterate_line_bwd(const Params& p, const Itinerary& seq, BwdLine L, BwdPath path)
{
    if (path == BwdPath::Auto)
        path = p.b > 0.0 ? BwdPath::BranchInverse : BwdPath::ClosedForm;
    if (path == BwdPath::BranchInverse && p.b == 0.0)
        throw GeometryError("iterate_line_bwd: branch inverse requested at b=0");

    L = {L.vslope, Point{L.trace(), 0.0}};
    const auto& w = seq.symbols();
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        Sign s = *it;
        double vs2 = slope_bwd(p, s, L.vslope);
        double t2;
        if (path == BwdPath::ClosedForm) {
            t2 = (p.c() - L.anchor.x) / (val(s) * p.a + L.vslope);
        } else {
            Point q = eval_branch_inverse(p, s, L.anchor);
            t2 = vs2 * (0.0 - q.y) + q.x;
        }
        L = {vs2, Point{t2, 0.0}};
    }
    return L;
}

double turning_point(const Params& p, const FwdLine& L)
{
    return p.c() - p.b * critical_crossing(L);
}

BwdLine beta_1(const Params& p)
{
    double mu = multipliers(p).mu;
    double zp = zeta(p, Sign::Plus);
    return {-mu, Point{zp, zp}};
}

BwdLine beta_inf(const Params& p)
{
    double mu = multipliers(p).mu;
    return {mu, Point{-1.0, -1.0}};
}

BwdLine beta(const Params& p, int m)
{
    if (m < 1)
        throw DomainError("beta: m must be >= 1");
    if (m == kInf)
        return beta_inf(p);
    return iterate_line_bwd(p, Itinerary::repeat(Sign::Minus, m - 1), beta_1(p));
}

BwdLine gamma(const Params& p, int m)
{
    if (m < 1)
        throw DomainError("gamma: m must be >= 1");
    Itinerary plus = Itinerary::repeat(Sign::Plus, 1);
    if (m == kInf)
        return iterate_line_bwd(p, plus, beta_inf(p));
    return iterate_line_bwd(p, plus + Itinerary::repeat(Sign::Minus, m - 1), beta_1(p));
}

double r_value(const Params& p, int m)
{
    require_P_mod(p, "r_value");
    return gamma(p, m).trace();
}

double u_base(const Params& p, Side side)
{
    double k = side == Side::L ? 1.0 : -1.0;
    return turning_point(p, FwdLine{0.0, Point{0.0, k}});
}

namespace {

FwdLine L_m(const Params& p, int m, Side side)
{
    double y = side == Side::L ? -1.0 : 1.0;
    return iterate_line_fwd(p, Itinerary::repeat(Sign::Plus, 1) + Itinerary::repeat(Sign::Minus, m - 2),
                            FwdLine{0.0, Point{0.0, y}});
}

}  // namespace

double u_value(const Params& p, int m, Side side)
{
    require_P_mod(p, "u_value");
    if (m == kInf)
        return multipliers(p).lambda - 1.0;
    if (m < 2)
        throw DomainError("u_value: m must be >= 2");
    return turning_point(p, L_m(p, m, side));
}

double u_gap(const Params& p, int m, Side side)
{
    require_P_mod(p, "u_gap");
    if (m == kInf)
        return 0.0;
    if (m < 2)
        throw DomainError("u_gap: m must be >= 2");
    double c = p.c();
    double lambda = multipliers(p).lambda;
    double s_inf = 1.0 / lambda;
    double k_inf = -1.0 + 1.0 / lambda;
    // L_2 = Lambda_+({y = sigma}) crosses x = 0 at (c - b sigma)/a
    double sigma = side == Side::L ? -1.0 : 1.0;
    double s = -1.0 / p.a;
    double k = (c - p.b * sigma) / p.a;
    double ds = s - s_inf, dk = k - k_inf;
    for (int i = 2; i < m; ++i) {
        double s2 = 1.0 / (p.a - p.b * s);
        double ds2 = p.b * ds * s2 * s_inf;
        double dk2 = -ds2 * (c - p.b * k) + (p.b / lambda) * dk;
        s = s2;
        ds = ds2;
        dk = dk2;
        k = k_inf + dk;
    }
    return p.b * dk;
}

Itinerary pq_word(int m, int n)
{
    if (m < 2 || n < 2)
        throw DomainError("pq_word: need m >= 2 and n >= 2");
    return Itinerary::repeat(Sign::Plus, 1) + Itinerary::repeat(Sign::Minus, m - 2) +
           Itinerary::repeat(Sign::Plus, 2) + Itinerary::repeat(Sign::Minus, n - 2);
}

double p_value(const Params& p, int m, int n)
{
    require_P_mod(p, "p_value");
    return turning_point(p, iterate_line_fwd(p, pq_word(m, n), FwdLine{0.0, Point{0.0, 0.0}}));
}

double q_value(const Params& p, int m, int n)
{
    require_P_mod(p, "q_value");
    return iterate_line_bwd(p, pq_word(m, n), BwdLine{0.0, Point{0.0, 0.0}}).trace();
}

CriticalData critical_data(const Params& p, int m_max)
{
    require_P_mod(p, "critical_data");
    CriticalData d;
    d.uL = u_base(p, Side::L);
    d.uR = u_base(p, Side::R);
    d.u_inf = u_value(p, kInf, Side::L);
    d.r_inf = r_value(p, kInf);
    std::size_t n = static_cast<std::size_t>(std::max(m_max, 1)) + 1;
    d.u_m_L.assign(n, std::nan(""));
    d.u_m_R.assign(n, std::nan(""));
    d.r_m.assign(n, std::nan(""));
    for (int m = 1; m <= m_max; ++m) {
        d.r_m[m] = r_value(p, m);
        if (m >= 2) {
            d.u_m_L[m] = u_value(p, m, Side::L);
            d.u_m_R[m] = u_value(p, m, Side::R);
        }
    }
    return d;
}

namespace closed_form {

double r_inf(const Params& p)
{
    double l = multipliers(p).lambda;
    return 1.0 - (l + 2.0) / (p.a * l + p.b) * p.b;
}

double v_minus(const Params& p)
{
    return -1.0 + 2.0 * p.b / multipliers(p).lambda;
}

double v_plus(const Params& p)
{
    double l = multipliers(p).lambda;
    return 1.0 - (2.0 * l + 2.0) / (p.a * l + p.b) * p.b;
}

double w_plus(const Params& p)
{
    double l = multipliers(p).lambda;
    return 1.0 - 2.0 * p.b / (p.a * l + p.b);
}

double r_tent(double a, int m)
{
    if (m == kInf)
        return 1.0;
    return 1.0 - 2.0 / (std::pow(a, m - 1) * (a + 1.0));
}

}  // namespace closed_form

}  // namespace lozi
