#include <cmath>
#include <sstream>

#include "doctest.h"
#include "lozi/bifurcation.hpp"
#include "lozi/error.hpp"
#include "lozi/renorm.hpp"
#include "lozi/roots.hpp"

using namespace lozi;

namespace {

std::vector<Params> mod_grid()
{
    std::vector<Params> g;
    for (int j = 0; j < 6; ++j) {
        double b = 0.05 * j;
        for (int i = 1; i <= 6; ++i)
            g.push_back({3 * b + 1 + (3.9 - 3 * b) * i / 7.0, b});
    }
    return g;
}

bool in_strip(const BwdLine& l, const BwdLine& r, Point v, double tol)
{
    return l.x_at(v.y) - tol <= v.x && v.x <= r.x_at(v.y) + tol;
}

}  // namespace

TEST_CASE("partition layout at (1.8, 0.2)")
{
    Params p{1.8, 0.2};
    std::vector<Strip> st = build_partition(p);
    REQUIRE(st.size() == static_cast<std::size_t>(kDefaultMMax + 1));
    CHECK(st.front().label.str() == "B");
    CHECK(st[1].label.str() == "C_2");
    CHECK(st.back().label.str() == "D");
    CHECK(beta_inf(p).trace() < 0);
    CHECK(gamma(p, 1).trace() > 0);
    for (std::size_t i = 1; i + 1 < st.size(); ++i) {
        CHECK(st[i].left.trace() < st[i].right.trace());
        if (i > 1)
            CHECK(st[i].left.trace() == st[i - 1].right.trace());
    }

    std::ostringstream os;
    write_partition_csv(os, st);
    std::string s = os.str();
    CHECK(s.rfind("label,left_trace,right_trace\n", 0) == 0);
    CHECK(s.find("\nC_16,") != std::string::npos);
    CHECK(s.find("\nD,") != std::string::npos);
}

TEST_CASE("partition traces at (2,0)")
{
    std::vector<Strip> st = build_partition({2, 0}, 10);
    for (int m = 2; m <= 10; ++m)
        CHECK(std::fabs(st[m - 1].right.trace() - (1 - 2 / (std::pow(2.0, m - 1) * 3))) < 1e-12);
}

TEST_CASE("gamma traces increase on a grid")
{
    for (const Params& p : mod_grid()) {
        std::vector<Strip> st = build_partition(p, 14);
        for (std::size_t i = 1; i + 1 < st.size(); ++i)
            CHECK(st[i].left.trace() < st[i].right.trace());
    }
    CHECK_THROWS_AS(build_partition({1.5, 0.2}), DomainError);
    CHECK_THROWS_AS(build_partition({1.8, 0.2}, 1), DomainError);
}

TEST_CASE("strip labels")
{
    CHECK(StripLabel{StripLabel::Kind::CmnL, 5, 2}.str() == "C_5,2^L");
    CHECK(StripLabel{StripLabel::Kind::CmnR, 7, 3}.str() == "C_7,3^R");
    CHECK(StripLabel{StripLabel::Kind::C, 3, 0}.str() == "C_3");
}

TEST_CASE("existence of the subpartition")
{
    for (int m = 3; m <= 10; ++m)
        for (int n = 2; n < m; ++n)
            CHECK(exists_Cmn({2, 0}, m, n));
    CHECK(exists_Cmn({1.71, 0.2}, 3, 2));
    // a below sqrt(2)(1-3b): U_n misses C_m
    Params small{1.3, 0.02};
    REQUIRE(small.a < std::sqrt(2.0) * (1 - 3 * small.b));
    for (int m = 3; m <= 8; ++m)
        CHECK_FALSE(exists_Cmn(small, m, 2));
    CHECK_FALSE(subpartition(small, 4, 2).has_value());
    CHECK_THROWS_AS(exists_Cmn({1.8, 0.2}, 1, 3), DomainError);
}

TEST_CASE("subpartition strips sit inside C_m")
{
    Params p{1.71, 0.2};
    auto sub = subpartition(p, 3, 2);
    REQUIRE(sub.has_value());
    auto [L, R] = *sub;
    CHECK(L.label.str() == "C_3,2^L");
    CHECK(R.label.str() == "C_3,2^R");
    CHECK(L.left.trace() < L.right.trace());
    CHECK(R.left.trace() < R.right.trace());
    CHECK(L.right.trace() <= R.left.trace());
    BwdLine g2 = gamma(p, 2), g3 = gamma(p, 3);
    for (double y : {-1.0, 0.0, 1.0}) {
        for (const Strip* s : {&L, &R}) {
            CHECK(in_strip(g2, g3, {s->left.x_at(y), y}, 1e-12));
            CHECK(in_strip(g2, g3, {s->right.x_at(y), y}, 1e-12));
        }
    }
}

TEST_CASE("admissible periodic points lie in the expected strips")
{
    long checked = 0;
    for (const Params& p : mod_grid()) {
        if (p.b == 0.0)
            continue;
        std::vector<Strip> st = build_partition(p, 12);
        for (int m = 3; m <= 8; ++m) {
            for (int n = 2; n < m; ++n) {
                if (!exists_Cmn(p, m, n))
                    continue;
                auto sub = subpartition(p, m, n);
                for (Sign s : {Sign::Minus, Sign::Plus}) {
                    FormalPeriodicPoint f = formal_periodic_point(p, iota(s, m, n));
                    if (!f.admissible())
                        continue;
                    ++checked;
                    CHECK(sub->first.contains(f.point, 1e-10));
                    CHECK(st[m - 1].contains(f.point, 1e-10));
                    Point v = f.point;
                    for (int k = 0; k < m; ++k)
                        v = eval(p, v);
                    CHECK(st[n - 1].contains(v, 1e-10));
                }
            }
        }
    }
    CHECK(checked > 0);
}

TEST_CASE("pullback of vertical segments in D")
{
    for (Params p : {Params{1.8, 0.2}, Params{1.9, 0.05}, Params{2.0, 0.1}, Params{1.7, 0.15}}) {
        double mu = multipliers(p).mu;
        BwdLine bi = beta_inf(p), gi = gamma(p, kInf);
        double uL = u_base(p, Side::L);
        long checked = 0;
        for (int i = 0; i <= 10; ++i) {
            double s = mu * (-1 + i / 5.0);
            for (int j = 0; j <= 20; ++j) {
                double t = bi.trace() + (std::min(uL, gi.trace()) - bi.trace()) * j / 20.0;
                BwdLine w{s, {t, 0}};
                if (!(in_strip(bi, gi, {w.x_at(-1), -1}, 0) && in_strip(bi, gi, {w.x_at(1), 1}, 0)))
                    continue;
                for (Sign sg : {Sign::Minus, Sign::Plus}) {
                    BwdLine pb = iterate_line_bwd(p, Itinerary(std::vector<Sign>{sg}), w);
                    ++checked;
                    for (int k = 0; k <= 10; ++k) {
                        double y = -1 + k / 5.0;
                        Point v{pb.x_at(y), y};
                        if (val(sg) * v.x < 0)
                            continue;  // outside R_sigma x I^V
                        CHECK(in_strip(bi, gi, v, 1e-12));
                    }
                }
            }
        }
        CHECK(checked > 0);
    }
}

TEST_CASE("regime classification")
{
    CHECK(classify_regime({3.9, 0.01}, 6, 3) == Regime::Large);
    CHECK(classify_regime({1.3, 0.02}, 6, 3) == Regime::Small);
    for (auto [m, n] : {std::pair{6, 2}, {6, 3}, {9, 2}}) {
        double b = 0.02;
        double a = solve_l(b, m, n);
        CHECK(classify_regime({a, b}, m, n) == Regime::Intermediate);
    }
    CHECK(std::string(to_string(Regime::Large)) == "Large");
    CHECK_THROWS_AS(classify_regime({1.8, 0.2}, 3, 3), DomainError);
}

TEST_CASE("large regime gives admissible pairs, small regime none")
{
    Params big{3.9, 0.01}, small{1.3, 0.02};
    for (int m = 3; m <= 8; ++m) {
        for (int n = 2; n < m; ++n) {
            for (Sign s : {Sign::Minus, Sign::Plus}) {
                if (classify_regime(big, m, n) == Regime::Large)
                    CHECK(formal_periodic_point(big, iota(s, m, n)).admissible());
                if (classify_regime(small, m, n) == Regime::Small)
                    CHECK_FALSE(formal_periodic_point(small, iota(s, m, n)).admissible());
            }
        }
    }
}

TEST_CASE("log coordinate")
{
    Params p{1.8, 0.2};
    double r = r_value(p, kInf);
    CHECK(std::fabs(log_coord(p, r - 1)) < 1e-14);
    double l = multipliers(p).lambda;
    CHECK(log_coord(p, r - 1 / l) == doctest::Approx(1.0));
    CHECK_THROWS_AS(log_coord(p, r), DomainError);
    CHECK_THROWS_AS(log_coord(p, r + 0.1), DomainError);
}

TEST_CASE("T(r_m) stays within the log bounds")
{
    for (const Params& p : mod_grid()) {
        if (p.b > 0.3)
            continue;
        LogBounds lb = log_bounds(p);
        double l = multipliers(p).lambda;
        for (int m = 2; m <= 12; ++m) {
            double T = log_coord(p, r_value(p, m));
            CHECK(T > m + std::log(lb.c1) / std::log(l));
            CHECK(T < m + std::log(lb.c2) / std::log(l));
        }
    }
}

TEST_CASE("T(u_n) bounds on the tangency curve")
{
    // there u_inf = r_inf, so T(u_n) = -log_lambda(u_inf - u_n)
    for (double b : {0.005, 0.01, 0.03, 0.05}) {
        Params p{tangency(b), b};
        LogBounds lb = log_bounds(p);
        double ll = std::log(multipliers(p).lambda);
        CHECK(lb.c3 < lb.c4);
        for (int n : {2, 3}) {
            for (Side s : {Side::L, Side::R}) {
                double T = -std::log(u_gap(p, n, s)) / ll;
                double base = (n - 1) * std::log(1 / b) / ll;
                CHECK(T >= base + std::log(lb.c3) / ll);
                CHECK(T <= base + std::log(lb.c4) / ll);
            }
        }
    }
}

TEST_CASE("tent geometry: u = r_m defines a_m increasing to 2")
{
    std::vector<double> am;
    for (int m = 2; m <= 14; ++m) {
        auto f = [m](double a) { return (a - 1) - closed_form::r_tent(a, m); };
        RootResult rr = bisect_newton(f, 1.0 + 1e-9, 2.0, {1e-12, 1e-15, 1e-8, 400});
        am.push_back(rr.x);
        // same root from the geometry module
        Params p{rr.x, 0};
        if (p.in_P_mod())
            CHECK(std::fabs(u_value(p, m, Side::L) - r_value(p, m)) < 1e-10);
    }
    CHECK(std::fabs(am[0] - std::sqrt(2.0)) < 1e-10);
    for (std::size_t i = 1; i < am.size(); ++i) {
        CHECK(am[i] > am[i - 1]);
        CHECK(am[i] < 2.0);
    }
    CHECK(2.0 - am.back() < 1e-4);
}
