#include "lozi/renorm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

#include "lozi/error.hpp"
#include "lozi/io.hpp"

namespace lozi {

std::string StripLabel::str() const
{
    switch (kind) {
    case Kind::B: return "B";
    case Kind::D: return "D";
    case Kind::C: return "C_" + std::to_string(m);
    case Kind::CmnL: return "C_" + std::to_string(m) + "," + std::to_string(n) + "^L";
    case Kind::CmnR: return "C_" + std::to_string(m) + "," + std::to_string(n) + "^R";
    }
    return "?";
}

bool Strip::contains(Point v, double tol) const
{
    return left.x_at(v.y) - tol <= v.x && v.x <= right.x_at(v.y) + tol && std::fabs(v.y) <= 1.0 + tol;
}

const char* to_string(Regime r)
{
    switch (r) {
    case Regime::Small: return "Small";
    case Regime::Intermediate: return "Intermediate";
    case Regime::Large: return "Large";
    }
    return "?";
}

std::vector<Strip> build_partition(const Params& p, int m_max)
{
    require_P_mod(p, "build_partition");
    if (m_max < 2)
        throw DomainError("build_partition: m_max must be >= 2");
    std::vector<Strip> out;
    out.push_back({beta(p, 2), beta_1(p), {StripLabel::Kind::B, 0, 0}});
    BwdLine prev = gamma(p, 1);
    for (int m = 2; m <= m_max; ++m) {
        BwdLine g = gamma(p, m);
        out.push_back({prev, g, {StripLabel::Kind::C, m, 0}});
        prev = g;
    }
    out.push_back({beta_inf(p), gamma(p, kInf), {StripLabel::Kind::D, 0, 0}});
    return out;
}

void write_partition_csv(std::ostream& os, const std::vector<Strip>& strips)
{
    os << "label,left_trace,right_trace\n";
    for (const Strip& s : strips)
        os << s.label.str() << ',' << fmt_real(s.left.trace()) << ',' << fmt_real(s.right.trace()) << '\n';
}

bool exists_Cmn(const Params& p, int m, int n)
{
    if (m < 2 || n < 2)
        throw DomainError("exists_Cmn: need m, n >= 2");
    return r_value(p, n) <= u_value(p, m, Side::L) + kStripTieTol;
}

std::optional<std::pair<Strip, Strip>> subpartition(const Params& p, int m, int n)
{
    if (!exists_Cmn(p, m, n))
        return std::nullopt;
    Itinerary head = Itinerary::repeat(Sign::Plus, 1) + Itinerary::repeat(Sign::Minus, m - 2);
    auto make = [&](Sign last, StripLabel::Kind kind) {
        Itinerary w = head + last;
        BwdLine g1 = iterate_line_bwd(p, w, gamma(p, n - 1));
        BwdLine g2 = iterate_line_bwd(p, w, gamma(p, n));
        if (g1.trace() > g2.trace())
            std::swap(g1, g2);
        return Strip{g1, g2, {kind, m, n}};
    };
    return std::make_pair(make(Sign::Plus, StripLabel::Kind::CmnL), make(Sign::Minus, StripLabel::Kind::CmnR));
}

Regime classify_regime(const Params& p, int m, int n)
{
    if (!(m > n && n >= 2))
        throw DomainError("classify_regime: need m > n >= 2");
    if (u_value(p, n, Side::R) < r_value(p, m - 1))
        return Regime::Small;
    if (r_value(p, m) <= u_value(p, n, Side::L))
        return Regime::Large;
    return Regime::Intermediate;
}

double log_coord(const Params& p, double x)
{
    double r_inf = r_value(p, kInf);
    if (!(x < r_inf))
        throw DomainError("log_coord: x must be below r_inf");
    return -std::log(r_inf - x) / std::log(multipliers(p).lambda);
}

LogBounds log_bounds(const Params& p)
{
    double l = multipliers(p).lambda;
    // slope contraction constant c = (64/7) ln 2 from the unstable-cone estimate
    double c = 64.0 / 7.0 * std::numbers::ln2;
    double C2 = 2.0 * (1.0 + 0.625 * (c + 1.5));
    LogBounds lb;
    lb.c3 = 1.0 / C2;
    lb.c4 = 1.0 / (0.25 * std::min(1.0 - 1.0 / l, (1.0 - 1.0 / (l * l)) / l));
    return lb;
}

}  // namespace lozi
