#include <cmath>

#include "doctest.h"
#include "lozi/error.hpp"
#include "lozi/geometry.hpp"
#include "lozi/oracle.hpp"

using namespace lozi;

namespace {

bool has_point(const std::vector<BrutePoint>& v, Point q, double tol = 1e-7)
{
    for (const auto& b : v)
        if (dist(b.point, q) < tol)
            return true;
    return false;
}

}  // namespace

TEST_CASE("fixed points by brute force at (2,0)")
{
    auto pts = brute_periodic({2, 0}, 1, 40);
    CHECK(pts.size() == 2);
    CHECK(has_point(pts, {-1, -1}));
    CHECK(has_point(pts, {1.0 / 3, 1.0 / 3}));
}

TEST_CASE("period two at (1.8, 0.2)")
{
    Params p{1.8, 0.2};
    auto pts = brute_periodic(p, 2, 60);
    FormalPeriodicPoint f = formal_periodic_point(p, Itinerary::parse("-+"));
    bool found = false;
    for (const auto& b : pts)
        if (b.coding == Itinerary::parse("-+") && dist(b.point, f.point) < 1e-7)
            found = true;
    CHECK(found == f.admissible());
    // fixed points show up among period-two points
    for (const auto& z : {fixed_points(p).first, fixed_points(p).second})
        CHECK(has_point(pts, z));
    for (const auto& b : pts) {
        Point v = eval(p, eval(p, b.point));
        CHECK(dist(v, b.point) < 1e-10);
    }
}

TEST_CASE("brute force matches admissible formal points")
{
    for (Params p : {Params{1.8, 0.2}, Params{2.6, 0.3}, Params{1.5, 0.05}}) {
        for (int period = 1; period <= 4; ++period) {
            auto pts = brute_periodic(p, period, 50);
            for (int mask = 0; mask < (1 << period); ++mask) {
                std::vector<Sign> s;
                for (int k = 0; k < period; ++k)
                    s.push_back((mask >> k) & 1 ? Sign::Plus : Sign::Minus);
                Itinerary I(s);
                FormalPeriodicPoint f = formal_periodic_point(p, I);
                if (f.hyperbolic)
                    CHECK(has_point(pts, f.point));
                for (const auto& b : pts)
                    if (b.coding == I && !b.near_critical)
                        CHECK(dist(b.point, f.point) < 1e-7);
            }
        }
    }
}

TEST_CASE("cone examples")
{
    // D Lambda_- = [[a, -b], [1, 0]] at (2,0): (1,0) -> (2,1)
    double l = multipliers({2, 0}).lambda;
    double y = 1.0, x = 2.0;
    CHECK(std::fabs(y) <= std::fabs(x) / l);
    CHECK(std::hypot(x, y) >= l);

    ConeReport r = cone_check({2, 0}, 500, 1);
    CHECK(r.ok);
    CHECK(r.checked > 0);
    CHECK(r.note.find("mu") != std::string::npos);

    for (Params p : {Params{1.8, 0.2}, Params{3.5, 0.9}, Params{1.2, 0.1}}) {
        ConeReport c = cone_check(p, 2000, 7);
        CHECK(c.ok);
        CHECK(c.worst_slack >= -1e-12);
    }
    std::mt19937_64 a(5), b(5);
    CHECK(cone_check({1.8, 0.2}, 100, a).worst_slack == cone_check({1.8, 0.2}, 100, b).worst_slack);
}

TEST_CASE("trapping region geometry")
{
    Params p{1.8, 0.2};
    TrappingRegion T = trapping_region(p);
    double l = multipliers(p).lambda;
    CHECK(dist(T.z_minus, {-1, -1}) < 1e-14);
    CHECK(dist(T.u_inf, {l - 1, 0}) < 1e-12);
    CHECK(T.apex.x < 0);
    CHECK(T.apex.y > 0);
    CHECK(T.contains({-1, -1}));
    CHECK(T.contains({0, 0}));
    CHECK_FALSE(T.contains({2, 2}));
    CHECK(in_escape_set(p, {-10, -10}));
    CHECK_FALSE(in_escape_set(p, {0.1, 0}));
}

TEST_CASE("orbit classification")
{
    Params p{1.8, 0.2};
    OrbitClass z = classify_orbit(p, {-1, -1});
    CHECK(z.kind == OrbitKind::TrappedInT);
    CHECK(z.witness == 0);

    OrbitClass e = classify_orbit(p, {-10, -10});
    CHECK(e.kind == OrbitKind::EscapesMinusInfinity);
    // once in E, x keeps decreasing
    Point v{-10, -10};
    for (int i = 0; i < 20; ++i) {
        Point w = eval(p, v);
        CHECK(w.x < v.x);
        CHECK(in_escape_set(p, w));
        v = w;
    }

    CHECK(std::string(to_string(OrbitKind::TrappedInT)) == "TrappedInT");
}

TEST_CASE("periodic orbits lie in D and T")
{
    for (Params p : {Params{1.8, 0.2}, Params{1.505, 0.05}, Params{2.9, 0.3}, Params{2.2, 0.01}}) {
        REQUIRE(p.in_P_mod());
        TrappingRegion T = trapping_region(p);
        BwdLine bi = beta_inf(p), gi = gamma(p, kInf);
        for (int period = 1; period <= 5; ++period) {
            for (const auto& b : brute_periodic(p, period, 40)) {
                Point v = b.point;
                for (int k = 0; k < period; ++k) {
                    CHECK(T.contains(v, 1e-9));
                    CHECK(std::fabs(v.y) <= 1 + 1e-9);
                    CHECK(bi.x_at(v.y) <= v.x + 1e-9);
                    CHECK(v.x <= gi.x_at(v.y) + 1e-9);
                    v = eval(p, v);
                }
            }
        }
    }
    OrbitClass c = classify_orbit({1.8, 0.2}, {0.3, 0.1});
    CHECK(c.kind == OrbitKind::TrappedInT);
    CHECK(c.witness >= 0);
}

TEST_CASE("sampled orbits all classify")
{
    for (Params p : {Params{1.8, 0.2}, Params{1.9, 0.05}, Params{2.5, 0.3}}) {
        for (int i = -6; i <= 6; ++i)
            for (int j = -6; j <= 6; ++j) {
                OrbitClass c = classify_orbit(p, {0.5 * i, 0.5 * j}, 100000);
                CHECK(c.kind != OrbitKind::Unclassified);
            }
    }
}
