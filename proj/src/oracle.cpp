#include "lozi/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "lozi/error.hpp"

namespace lozi {

namespace {

struct Jac {
    double a11 = 1, a12 = 0, a21 = 0, a22 = 1;
};

Jac mul(const Jac& L, const Jac& R)
{
    return {L.a11 * R.a11 + L.a12 * R.a21, L.a11 * R.a12 + L.a12 * R.a22,
            L.a21 * R.a11 + L.a22 * R.a21, L.a21 * R.a12 + L.a22 * R.a22};
}

// Lambda^period(v) and its Jacobian along the genuine orbit
Point iterate(const Params& p, Point v, int period, Jac* J)
{
    Jac acc;
    for (int i = 0; i < period; ++i) {
        double sx = v.x >= 0 ? 1.0 : -1.0;
        acc = mul(Jac{-p.a * sx, -p.b, 1.0, 0.0}, acc);
        v = eval(p, v);
    }
    if (J)
        *J = acc;
    return v;
}

}  // namespace

namespace {

bool newton_periodic(const Params& p, int period, Point& v)
{
    for (int it = 0; it < 40; ++it) {
        Jac J;
        Point F = iterate(p, v, period, &J) - v;
        if (std::hypot(F.x, F.y) < 1e-13)
            return true;
        double m11 = J.a11 - 1, m22 = J.a22 - 1;
        double det = m11 * m22 - J.a12 * J.a21;
        if (std::fabs(det) < 1e-300)
            return false;
        v = v + Point{(-F.x * m22 + J.a12 * F.y) / det, (-m11 * F.y + J.a21 * F.x) / det};
        if (!(std::fabs(v.x) < 1e6 && std::fabs(v.y) < 1e6))
            return false;
    }
    Point F = iterate(p, v, period, nullptr) - v;
    return std::hypot(F.x, F.y) < 1e-10;
}

// Points of one bounded orbit. Cylinders of periodic points close to x = 0
// are much thinner than the grid spacing; orbit points land in them.
std::vector<Point> orbit_seeds(const Params& p, int count)
{
    std::vector<Point> out;
    for (Point start : {Point{0.0, 0.0}, Point{0.1, 0.1}, Point{-0.3, 0.2}}) {
        Point v = start;
        for (int i = 0; i < 200; ++i)
            v = eval(p, v);
        if (!(std::fabs(v.x) < 10 && std::fabs(v.y) < 10))
            continue;
        for (int i = 0; i < count; ++i) {
            v = eval(p, v);
            if (!(std::fabs(v.x) < 10))
                break;
            out.push_back(v);
        }
        if (!out.empty())
            break;
    }
    return out;
}

}  // namespace

std::vector<BrutePoint> brute_periodic(const Params& p, int period, int grid_n)
{
    require_P_full(p, "brute_periodic");
    if (period < 1 || period > 10)
        throw DomainError("brute_periodic: period must be in 1..10");
    std::vector<Point> seeds;
    for (int i = 0; i < grid_n; ++i)
        for (int j = 0; j < grid_n; ++j)
            seeds.push_back({-2.0 + 4.0 * (i + 0.5) / grid_n, -2.0 + 4.0 * (j + 0.5) / grid_n});
    for (int d = 1; d < period; ++d)
        if (period % d == 0)
            for (const BrutePoint& q : brute_periodic(p, d, grid_n))
                seeds.push_back(q.point);
    for (Point v : orbit_seeds(p, 20000))
        seeds.push_back(v);

    std::vector<BrutePoint> found;
    for (Point v : seeds) {
        if (!newton_periodic(p, period, v))
            continue;
        bool dup = false;
        for (const BrutePoint& q : found)
            if (dist(q.point, v) < 1e-7) {
                dup = true;
                break;
            }
        if (dup)
            continue;
        BrutePoint bp;
        bp.point = v;
        std::vector<Sign> code;
        Point w = v;
        for (int k = 0; k < period; ++k) {
            if (std::fabs(w.x) < 1e-9)
                bp.near_critical = true;
            code.push_back(w.x >= 0 ? Sign::Plus : Sign::Minus);
            w = eval(p, w);
        }
        bp.coding = Itinerary(std::move(code));
        found.push_back(std::move(bp));
    }
    std::sort(found.begin(), found.end(), [](const BrutePoint& l, const BrutePoint& r) {
        return l.point.x != r.point.x ? l.point.x < r.point.x : l.point.y < r.point.y;
    });
    return found;
}

ConeReport cone_check(const Params& p, int samples, std::mt19937_64& rng)
{
    require_P_full(p, "cone_check");
    Multipliers mm = multipliers(p);
    double l = mm.lambda, mu = mm.mu;
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    ConeReport rep;
    const double tol = 1e-12;
    auto norms = [](Point v) {
        return std::array<double, 3>{std::fabs(v.x) + std::fabs(v.y), std::hypot(v.x, v.y),
                                     std::max(std::fabs(v.x), std::fabs(v.y))};
    };
    auto note = [&](double margin) {
        rep.worst_slack = std::min(rep.worst_slack, margin);
        if (margin < -tol)
            rep.ok = false;
    };
    bool stable = p.b > 0.0;
    if (!stable)
        rep.note = "b=0: stable cone is the y-axis and branch inverses do not exist; stable check skipped (mu=0)";

    for (int i = 0; i < samples; ++i) {
        Sign s = (rng() & 1u) ? Sign::Plus : Sign::Minus;
        double sv = val(s);
        // unstable cone; every 16th sample sits on a boundary ray
        double x = U(rng);
        if (x == 0.0)
            x = 1.0;
        double t = (i % 16 == 0) ? (U(rng) < 0 ? -1.0 : 1.0) : U(rng);
        Point v{x, t * std::fabs(x) / l};
        Point w{-sv * p.a * v.x - p.b * v.y, v.x};
        note((std::fabs(w.x) / l - std::fabs(w.y)) / std::fabs(w.x));
        auto nv = norms(v), nw = norms(w);
        for (int k = 0; k < 3; ++k)
            note(nw[k] / (l * nv[k]) - 1.0);
        ++rep.checked;

        if (!stable)
            continue;
        double y = U(rng);
        if (y == 0.0)
            y = 1.0;
        double t2 = (i % 16 == 0) ? (U(rng) < 0 ? -1.0 : 1.0) : U(rng);
        Point v2{t2 * mu * std::fabs(y), y};
        // inverse of [[-s a, -b], [1, 0]]
        Point w2{v2.y, (-v2.x - sv * p.a * v2.y) / p.b};
        note((mu * std::fabs(w2.y) - std::fabs(w2.x)) / (mu * std::fabs(w2.y)));
        auto n2 = norms(v2), m2 = norms(w2);
        for (int k = 0; k < 3; ++k)
            note(mu * m2[k] / n2[k] - 1.0);
        ++rep.checked;
    }
    return rep;
}

ConeReport cone_check(const Params& p, int samples, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    return cone_check(p, samples, rng);
}

namespace {

double cross(Point o, Point a, Point b)
{
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

}  // namespace

bool TrappingRegion::contains(Point v, double tol) const
{
    double d1 = cross(z_minus, u_inf, v);
    double d2 = cross(u_inf, apex, v);
    double d3 = cross(apex, z_minus, v);
    double orient = cross(z_minus, u_inf, apex) > 0 ? 1.0 : -1.0;
    return orient * d1 >= -tol && orient * d2 >= -tol && orient * d3 >= -tol;
}

TrappingRegion trapping_region(const Params& p)
{
    require_P_full(p, "trapping_region");
    Multipliers mm = multipliers(p);
    double l = mm.lambda, mu = mm.mu;
    double u = l - 1.0;
    double s2 = -1.0 / (p.b / l + p.a);  // slope of phi_2 = Lambda_+(phi_1)
    double y = s2 * (mu - 1.0 - u) / (1.0 - s2 * mu);
    return {Point{-1.0, -1.0}, Point{u, 0.0}, Point{-1.0 + mu * (y + 1.0), y}};
}

bool in_escape_set(const Params& p, Point v)
{
    double mu = multipliers(p).mu;
    return v.x < -1.0 + mu * (v.y + 1.0) && v.x < 0.0;
}

const char* to_string(OrbitKind k)
{
    switch (k) {
    case OrbitKind::EscapesMinusInfinity: return "EscapesMinusInfinity";
    case OrbitKind::TrappedInT: return "TrappedInT";
    case OrbitKind::Unclassified: return "Unclassified";
    }
    return "?";
}

OrbitClass classify_orbit(const Params& p, Point v, long max_iter)
{
    TrappingRegion T = trapping_region(p);
    long run = -1;
    for (long it = 0; it <= max_iter; ++it) {
        if (v.x < -1e10 || in_escape_set(p, v))
            return {OrbitKind::EscapesMinusInfinity, it, v};
        if (T.contains(v)) {
            if (run < 0)
                run = it;
            if (it - run >= 100)
                return {OrbitKind::TrappedInT, run, v};
        } else {
            run = -1;
        }
        if (it < max_iter)
            v = eval(p, v);
    }
    return {OrbitKind::Unclassified, max_iter, v};
}

}  // namespace lozi
