// One line per acceptance criterion; exit status is nonzero if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "lozi/bifurcation.hpp"
#include "lozi/error.hpp"
#include "lozi/geometry.hpp"
#include "lozi/kneading.hpp"
#include "lozi/oracle.hpp"
#include "lozi/renorm.hpp"
#include "lozi/roots.hpp"
#include "lozi/symbolic.hpp"

using namespace lozi;

namespace {

// pinned tolerances
constexpr double kClosedTol = 1e-12;
constexpr double kSqrt2Tol = 1e-10;
constexpr double kResidualTol = 1e-10;
constexpr double kMatchTol = 1e-7;
constexpr double kConeSlack = 1e-12;
constexpr double kPqTol = 1e-11;
constexpr double kMergeTol = 1e-8;
constexpr double kDelta = 1e-3;

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why)
    {
        if (ok)
            detail = why;
        ok = false;
    }
};

std::string num(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

std::vector<Itinerary> words(int len)
{
    std::vector<Itinerary> out;
    for (int mask = 0; mask < (1 << len); ++mask) {
        std::vector<Sign> s;
        for (int k = 0; k < len; ++k)
            s.push_back((mask >> k) & 1 ? Sign::Plus : Sign::Minus);
        out.emplace_back(std::move(s));
    }
    return out;
}

Outcome closed_forms()
{
    Outcome o;
    Params p{2, 0};
    Multipliers m = multipliers(p);
    if (std::fabs(m.lambda - 2) > kClosedTol || std::fabs(m.mu) > kClosedTol)
        o.fail("multipliers " + num(m.lambda) + ", " + num(m.mu));
    if (std::fabs(zeta(p, Sign::Plus) - 1.0 / 3) > kClosedTol)
        o.fail("zeta_+");
    if (std::fabs(u_base(p, Side::L) - 1) > kClosedTol || std::fabs(r_value(p, kInf) - 1) > kClosedTol)
        o.fail("u^L / r_inf");
    for (int k = 1; k <= 10; ++k) {
        double want = 1 - 2 / (std::pow(2.0, k - 1) * 3);
        if (std::fabs(r_value(p, k) - want) > kClosedTol)
            o.fail("r_" + std::to_string(k));
    }
    o.detail = o.ok ? "lambda=2 mu=0 zeta_+=1/3 u^L=r_inf=1 r_1..r_10 exact" : o.detail;
    return o;
}

Outcome tent_geometry()
{
    Outcome o;
    std::vector<double> am;
    for (int m = 2; m <= 15; ++m) {
        auto f = [m](double a) {
            Params p{a, 0};
            return u_value(p, m, Side::L) - r_value(p, m);
        };
        RootResult r = bisect_newton(f, 1.0 + 1e-6, 2.0, {1e-13, 1e-15, 1e-8, 400});
        am.push_back(r.x);
    }
    if (std::fabs(am[0] - std::sqrt(2.0)) > kSqrt2Tol)
        o.fail("a_2=" + num(am[0]));
    for (std::size_t i = 1; i < am.size(); ++i) {
        if (!(am[i] > am[i - 1]) || !(am[i] < 2))
            o.fail("not increasing below 2 at m=" + std::to_string(i + 2));
        double ratio = (2 - am[i]) / (2 - am[i - 1]);
        if (!(ratio > 0.35 && ratio < 0.5))
            o.fail("gap ratio " + num(ratio) + " at m=" + std::to_string(i + 2));
        // gap shrinks like 1/a once a is near 2
        if (i + 1 >= 8 && std::fabs(ratio * am[i] - 1) > 0.02)
            o.fail("ratio*a " + num(ratio * am[i]) + " at m=" + std::to_string(i + 2));
    }
    if (o.ok)
        o.detail = "a_2=" + num(am[0]) + " a_15=" + num(am.back()) + " gap ratio -> 1/a";
    return o;
}

Outcome oracle_equivalence()
{
    Outcome o;
    long formal = 0, brute = 0;
    double worst_res = 0;
    for (double b : {0.05, 0.2, 0.35, 0.5, 0.65}) {
        for (double da : {0.137, 0.419, 0.733, 1.071, 1.297}) {
            Params p{b + 1 + da, b};
            std::string tag = "(a,b)=(" + num(p.a) + "," + num(p.b) + ")";
            for (int len = 1; len <= 6; ++len) {
                std::vector<BrutePoint> bp = brute_periodic(p, len, 200);
                for (const Itinerary& I : words(len)) {
                    ++formal;
                    FormalPeriodicPoint f = formal_periodic_point(p, I);
                    worst_res = std::max(worst_res, f.residual);
                    if (!(f.residual < kResidualTol))
                        o.fail(tag + " residual " + I.str());
                    if (!f.admissible())
                        continue;
                    bool hit = std::any_of(bp.begin(), bp.end(), [&](const BrutePoint& q) {
                        return dist(q.point, f.point) < kMatchTol;
                    });
                    if (!hit)
                        o.fail(tag + " admissible " + I.str() + " not found by brute force");
                }
                for (const BrutePoint& q : bp) {
                    ++brute;
                    FormalPeriodicPoint f = formal_periodic_point(p, q.coding);
                    bool same = dist(f.point, q.point) < kMatchTol;
                    if (!same || !(f.admissible() || q.near_critical))
                        o.fail(tag + " brute point coded " + q.coding.str() + " has no admissible formal twin");
                }
            }
        }
    }
    if (o.ok)
        o.detail = std::to_string(formal) + " formal solves, " + std::to_string(brute) +
                   " brute points, max residual " + num(worst_res);
    return o;
}

Outcome cones()
{
    Outcome o;
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> B(0.0, 1.0), A(0.0, 1.0);
    long n = 0;
    double worst = 0;
    for (int i = 0; i < 100; ++i) {
        double b = B(rng);
        Params p{b + 1 + 1e-3 + (3.0 - b) * A(rng), b};
        ConeReport c = cone_check(p, 100, rng);
        n += c.checked;
        worst = std::min(worst, c.worst_slack);
        if (!c.ok || c.worst_slack < -kConeSlack)
            o.fail("(a,b)=(" + num(p.a) + "," + num(p.b) + ") slack " + num(c.worst_slack));
    }
    if (n < 10000)
        o.fail("only " + std::to_string(n) + " samples");
    if (o.ok)
        o.detail = std::to_string(n) + " samples, worst slack " + num(worst);
    return o;
}

Outcome convergence()
{
    Outcome o;
    double lo_r = 1e9, hi_r = 0, lo_u = 1e9, hi_u = 0;
    for (int j = 1; j <= 10; ++j) {
        double b = 0.03 * j;
        for (int i = 1; i <= 20; ++i) {
            Params p{3 * b + 1 + (3 - 3 * b) * i / 20.0, b};
            double l = multipliers(p).lambda;
            double r_inf = r_value(p, kInf);
            for (int m = 2; m <= 12; ++m) {
                double d = (r_inf - r_value(p, m)) * std::pow(l, m);
                lo_r = std::min(lo_r, d);
                hi_r = std::max(hi_r, d);
                if (!(d > 0.2 && d < 2.25))
                    o.fail("r ratio " + num(d) + " at a=" + num(p.a) + " b=" + num(b) + " m=" + std::to_string(m));
                double scale = (1 - std::pow(l, -(m - 1))) * l * std::pow(b / l, m - 1);
                for (Side s : {Side::L, Side::R}) {
                    double g = u_gap(p, m, s) / scale;
                    lo_u = std::min(lo_u, g);
                    hi_u = std::max(hi_u, g);
                    if (!(g >= 0.25))
                        o.fail("u ratio " + num(g) + " at a=" + num(p.a) + " b=" + num(b) + " m=" + std::to_string(m));
                }
            }
        }
    }
    if (o.ok)
        o.detail = "r scaled gap in [" + num(lo_r) + ", " + num(hi_r) + "], u scaled gap in [" + num(lo_u) + ", " +
                   num(hi_u) + "]";
    return o;
}

Outcome certificate()
{
    Outcome o;
    int points = 0;
    for (int m : {5, 8, 12}) {
        for (int n : {2, 3}) {
            for (double b : {0.0, 0.01, 0.03}) {
                ++points;
                std::string tag = "m=" + std::to_string(m) + " n=" + std::to_string(n) + " b=" + num(b);
                LRoot r = solve_l_detail(b, m, n);
                if (!(std::fabs(r.residual) < kPqTol))
                    o.fail(tag + " |p-q|=" + num(r.residual));
                Params p{r.a, b};
                FormalPeriodicPoint fm = formal_periodic_point(p, iota(Sign::Minus, m, n));
                FormalPeriodicPoint fp = formal_periodic_point(p, iota(Sign::Plus, m, n));
                if (!(dist(fm.point, fp.point) < kMergeTol))
                    o.fail(tag + " formal points apart by " + num(dist(fm.point, fp.point)));
                if (!(std::fabs(fm.admissibility) < kMergeTol && std::fabs(fp.admissibility) < kMergeTol))
                    o.fail(tag + " h not zero");
                for (Sign s : {Sign::Minus, Sign::Plus}) {
                    if (!(formal_periodic_point({r.a + kDelta, b}, iota(s, m, n)).admissibility > 0))
                        o.fail(tag + " not hyperbolic above the curve");
                    if (!(formal_periodic_point({r.a - kDelta, b}, iota(s, m, n)).admissibility < 0))
                        o.fail(tag + " admissible below the curve");
                }
            }
        }
    }
    if (o.ok)
        o.detail = std::to_string(points) + " curve points certified";
    return o;
}

Outcome reversal()
{
    Outcome o;
    ReversalScan s = scan_reversal(0.05, 0.005, 51, 4);
    if (!s.result) {
        o.fail("downward scan found no b_bar");
        return o;
    }
    const Reversal& r = *s.result;
    if (!(r.l2.a.front() < r.l3.a.front()))
        o.fail("order at b=0");
    if (!(r.l2.a.back() > r.l3.a.back()))
        o.fail("order at b_bar");
    if (r.sign_changes != 1)
        o.fail(std::to_string(r.sign_changes) + " sign changes");
    if (!r.slopes_ordered)
        o.fail("slopes not ordered");

    FamilyReport f = figure1_family(4, 14, {2, 3}, 0.07, 71, 4);
    for (std::size_t i = 0; i < f.crossings_per_m.size(); ++i)
        if (f.crossings_per_m[i] != 1)
            o.fail("m=" + std::to_string(4 + i) + " has " + std::to_string(f.crossings_per_m[i]) + " crossings");
    if (!f.non_crossing)
        o.fail("curves cross within a family");
    if (f.intersections.size() != 11)
        o.fail(std::to_string(f.intersections.size()) + " intersections in the family");
    if (o.ok)
        o.detail = "b_bar=" + num(r.b_bar) + " m=" + std::to_string(r.x.m) + " b*=" + num(r.x.b_star) +
                   " a*=" + num(r.x.a_star) + "; family m=4..14 one crossing each";
    return o;
}

UItinerary random_u(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> pre(0, 4), per(1, 6), sym(0, 15);
    auto draw = [&] {
        int k = sym(rng);
        return k == 0 ? USym::Zero : k % 2 ? USym::Plus : USym::Minus;
    };
    std::vector<USym> a(pre(rng)), b(per(rng));
    for (auto& x : a)
        x = draw();
    for (auto& x : b)
        x = draw();
    return UItinerary(std::move(a), std::move(b));
}

Outcome kneading()
{
    Outcome o;
    long tuples = 0;
    for (int i = 1; i <= 200; ++i) {
        double a = std::sqrt(2.0) + (2 - std::sqrt(2.0)) * i / 200.0;
        for (int m = 4; m <= 8; ++m)
            for (int n1 = 3; n1 < m; ++n1)
                for (int n2 = 2; n2 < n1; ++n2) {
                    ++tuples;
                    if (!forcing_check_tent(a, m, n1, n2))
                        o.fail("forcing fails at a=" + num(a) + " m=" + std::to_string(m));
                }
    }
    std::mt19937_64 rng(77);
    std::vector<UItinerary> c;
    for (int i = 0; i < 1000; ++i)
        c.push_back(random_u(rng));
    auto opp = [](Order x) {
        return x == Order::Less ? Order::Greater : x == Order::Greater ? Order::Less : Order::Equivalent;
    };
    for (int i = 0; i < 500; ++i) {
        const UItinerary &I = c[2 * i], &J = c[2 * i + 1];
        if (order_compare(J, I) != opp(order_compare(I, J)))
            o.fail("antisymmetry " + I.str() + " " + J.str());
    }
    for (std::size_t i = 0; i < 80; ++i)
        for (std::size_t j = 0; j < 80; ++j)
            for (std::size_t k = 0; k < 80; ++k)
                if (order_compare(c[i], c[j]) == Order::Less && order_compare(c[j], c[k]) == Order::Less &&
                    order_compare(c[i], c[k]) != Order::Less)
                    o.fail("transitivity " + c[i].str() + " " + c[j].str() + " " + c[k].str());
    if (o.ok)
        o.detail = std::to_string(tuples) + " forcing tuples, 500 pairs, 80^3 triples";
    return o;
}

}  // namespace

int main()
{
    struct Item {
        int id;
        const char* name;
        double budget_s;
        std::function<Outcome()> run;
    };
    std::vector<Item> items{
        {1, "closed forms at (2,0)", 1, closed_forms},
        {2, "tent geometry a_m", 1, tent_geometry},
        {3, "formal vs brute-force periodic points", 120, oracle_equivalence},
        {4, "universal cones", 10, cones},
        {5, "exponential convergence of r and u", 30, convergence},
        {6, "bifurcation point certificate", 30 * 18, certificate},
        {7, "order reversal and curve family", 300, reversal},
        {8, "kneading forcing and order", 60, kneading},
    };
    int failed = 0;
    for (const Item& it : items) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = it.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (dt > it.budget_s)
            o.fail("took " + num(dt) + " s, budget " + num(it.budget_s) + " s");
        if (!o.ok)
            ++failed;
        std::printf("[%s] %d %s (%.2f s): %s\n", o.ok ? "PASS" : "FAIL", it.id, it.name, dt, o.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(items.size()) - failed, items.size());
    return failed ? 1 : 0;
}
