#include "lozi/core_map.hpp"

#include <string>

#include "lozi/error.hpp"

namespace lozi {

namespace {

std::string describe(const Params& p)
{
    return "(a,b)=(" + std::to_string(p.a) + "," + std::to_string(p.b) + ")";
}

}  // namespace

Point eval(const Params& p, Point v)
{
    return {-p.a * std::fabs(v.x) - p.b * v.y + p.c(), v.x};
}

Point eval_branch(const Params& p, Sign s, Point v)
{
    return {-val(s) * p.a * v.x - p.b * v.y + p.c(), v.x};
}

Point eval_branch_inverse(const Params& p, Sign s, Point v)
{
    if (p.b == 0.0)
        throw GeometryError("branch inverse does not exist at b=0");
    return {v.y, (p.c() - val(s) * p.a * v.y - v.x) / p.b};
}

double zeta(const Params& p, Sign s)
{
    if (s == Sign::Minus)
        return -1.0;
    return 1.0 - 2.0 * (p.b + 1.0) / (p.a + p.b + 1.0);
}

std::pair<Point, Point> fixed_points(const Params& p)
{
    require_P_full(p, "fixed_points");
    double zp = zeta(p, Sign::Plus);
    return {Point{-1.0, -1.0}, Point{zp, zp}};
}

Multipliers multipliers(const Params& p)
{
    double disc = p.a * p.a - 4.0 * p.b;
    if (disc < 0.0)
        throw DomainError("complex spectrum at " + describe(p));
    double lambda = 0.5 * (p.a + std::sqrt(disc));
    return {lambda, p.b / lambda};
}

void require_P_full(const Params& p, const char* op)
{
    if (!p.in_P_full())
        throw DomainError(std::string(op) + ": " + describe(p) + " is outside P_full");
}

void require_P_mod(const Params& p, const char* op)
{
    if (!p.in_P_mod())
        throw DomainError(std::string(op) + ": " + describe(p) + " is outside P_mod");
}

}  // namespace lozi
