#include "lozi/symbolic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lozi/error.hpp"

namespace lozi {

Itinerary Itinerary::parse(std::string_view text)
{
    std::vector<Sign> s;
    s.reserve(text.size());
    for (char ch : text) {
        if (ch == '+')
            s.push_back(Sign::Plus);
        else if (ch == '-')
            s.push_back(Sign::Minus);
        else
            throw ParseError("bad itinerary symbol '" + std::string(1, ch) + "' in \"" +
                             std::string(text) + "\"");
    }
    return Itinerary(std::move(s));
}

Itinerary Itinerary::repeat(Sign s, int k)
{
    return Itinerary(std::vector<Sign>(static_cast<std::size_t>(std::max(k, 0)), s));
}

std::string Itinerary::str() const
{
    std::string out;
    for (Sign s : s_)
        out.push_back(to_char(s));
    return out;
}

Itinerary Itinerary::operator+(const Itinerary& o) const
{
    std::vector<Sign> s = s_;
    s.insert(s.end(), o.s_.begin(), o.s_.end());
    return Itinerary(std::move(s));
}

Itinerary Itinerary::operator+(Sign x) const
{
    std::vector<Sign> s = s_;
    s.push_back(x);
    return Itinerary(std::move(s));
}

double Mat2::norm_inf() const
{
    return std::max(std::fabs(a11) + std::fabs(a12), std::fabs(a21) + std::fabs(a22));
}

Mat2 Mat2::operator*(const Mat2& o) const
{
    return {a11 * o.a11 + a12 * o.a21, a11 * o.a12 + a12 * o.a22,
            a21 * o.a11 + a22 * o.a21, a21 * o.a12 + a22 * o.a22};
}

std::pair<double, double> eigen_moduli(const Mat2& A)
{
    double h = 0.5 * A.trace();
    double disc = h * h - A.det();
    if (disc < 0.0) {
        double r = std::sqrt(A.det());
        return {r, r};
    }
    double sq = std::sqrt(disc);
    // avoid cancellation in the small root
    double big = h >= 0 ? h + sq : h - sq;
    double small = big != 0.0 ? A.det() / big : 0.0;
    double m1 = std::fabs(big), m2 = std::fabs(small);
    return {std::max(m1, m2), std::min(m1, m2)};
}

AffineMap2 branch_map(const Params& p, Sign s)
{
    return {Mat2{-val(s) * p.a, -p.b, 1.0, 0.0}, Point{-p.c(), 0.0}};
}

AffineMap2 compose_formal(const Params& p, const Itinerary& I)
{
    AffineMap2 acc{Mat2{}, Point{}};
    for (Sign s : I.symbols()) {
        AffineMap2 f = branch_map(p, s);
        // f(acc(v)) = fA (accA v - accw) - fw
        acc = {f.A * acc.A, f.A * acc.w + f.w};
    }
    return acc;
}

double admissibility_value(const Params& p, const Itinerary& I, Point v)
{
    double h = std::numeric_limits<double>::infinity();
    for (Sign s : I.symbols()) {
        h = std::min(h, val(s) * v.x);
        v = eval_branch(p, s, v);
    }
    return h;
}

FormalPeriodicPoint formal_periodic_point(const Params& p, const Itinerary& I)
{
    if (I.empty())
        throw DomainError("formal_periodic_point: empty itinerary");
    AffineMap2 F = compose_formal(p, I);
    Mat2 M{F.A.a11 - 1.0, F.A.a12, F.A.a21, F.A.a22 - 1.0};
    double d = M.det();
    if (!(std::fabs(d) >= 1e-10 * F.A.norm_inf()))
        throw SingularSystem("formal_periodic_point: det(A-Id) is numerically zero for " +
                             I.str());
    auto solve = [&](Point r) {
        return Point{(r.x * M.a22 - M.a12 * r.y) / d, (M.a11 * r.y - M.a21 * r.x) / d};
    };
    auto push = [&](Point v) {
        for (Sign s : I.symbols())
            v = eval_branch(p, s, v);
        return v;
    };
    Point th = solve(F.w);
    // refine against the sequential orbit; Cramer alone loses
    // digits once |A| ~ lambda^N is large
    for (int it = 0; it < 2; ++it)
        th = th - solve(push(th) - th);

    FormalPeriodicPoint out;
    out.point = th;
    out.itinerary = I;
    out.admissibility = admissibility_value(p, I, th);
    out.hyperbolic = out.admissibility > 0.0;
    out.residual = dist(push(th), th);
    return out;
}

Itinerary iota(Sign sigma, int m, int n)
{
    if (m < 2 || n < 2)
        throw DomainError("iota: need m >= 2 and n >= 2");
    return Itinerary::repeat(Sign::Plus, 1) + Itinerary::repeat(Sign::Minus, m - 2) +
           Itinerary::repeat(Sign::Plus, 2) + Itinerary::repeat(Sign::Minus, n - 2) + sigma;
}

bool spectral_lower_bound_check(const Params& p, const Itinerary& I)
{
    double lambda = multipliers(p).lambda;
    double rho = eigen_moduli(compose_formal(p, I).A).first;
    return rho >= std::pow(lambda, static_cast<double>(I.size())) - 1e-9;
}

}  // namespace lozi
