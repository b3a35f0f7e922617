#include "lozi/bifurcation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "lozi/error.hpp"
#include "lozi/geometry.hpp"
#include "lozi/io.hpp"
#include "lozi/renorm.hpp"

namespace lozi {

namespace {

template <class F>
void parallel_for(std::size_t n, int workers, F fn)
{
    if (workers <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex mu;
    auto run = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lk(mu);
                if (!err)
                    err = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    int k = std::min<int>(workers, static_cast<int>(n));
    for (int i = 0; i < k; ++i)
        pool.emplace_back(run);
    for (auto& t : pool)
        t.join();
    if (err)
        std::rethrow_exception(err);
}

std::string mn(int m, int n)
{
    return "(m,n)=(" + std::to_string(m) + "," + std::to_string(n) + ")";
}

int count_sign_changes(const std::vector<double>& d)
{
    int k = 0;
    for (std::size_t i = 1; i < d.size(); ++i)
        if ((d[i - 1] < 0) != (d[i] < 0))
            ++k;
    return k;
}

std::vector<double> grid_slopes(const std::vector<double>& b, const std::vector<double>& a)
{
    std::size_t n = b.size();
    std::vector<double> s(n, 0.0);
    if (n < 2)
        return s;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t lo = i == 0 ? 0 : i - 1;
        std::size_t hi = i + 1 == n ? n - 1 : i + 1;
        s[i] = (a[hi] - a[lo]) / (b[hi] - b[lo]);
    }
    return s;
}

// Root of l_{m,2} - l_{m,3} inside [b_lo, b_hi].
Intersection refine_crossing(int m, double b_lo, double b_hi)
{
    auto D = [m](double b) { return solve_l(b, m, 2) - solve_l(b, m, 3); };
    RootOptions opt;
    opt.bracket_tol = 1e-7;
    opt.f_tol = 1e-10;
    opt.max_iter = 80;
    RootResult r = bisect_newton(D, b_lo, b_hi, opt);
    Intersection x;
    x.m = m;
    x.b_star = r.x;
    x.a_star = solve_l(r.x, m, 2);
    x.slope2 = implicit_slope(m, 2, r.x, x.a_star);
    x.slope3 = implicit_slope(m, 3, r.x, solve_l(r.x, m, 3));
    return x;
}

}  // namespace

double pq_gap(double a, double b, int m, int n)
{
    Params p{a, b};
    return p_value(p, m, n) - q_value(p, m, n);
}

LRoot solve_l_detail(double b, int m, int n, const SolveOptions& opt)
{
    double lo = std::max(opt.a_lo, 3.0 * b + 1.0 + 1e-9);
    double hi = opt.a_hi;
    if (!(lo < hi))
        throw NoSignChange("solve_l: empty a-bracket at b=" + fmt_real(b));
    auto g = [&](double a) { return pq_gap(a, b, m, n); };

    int K = std::max(opt.scan_points, 2);
    std::vector<double> as(K + 1), gs(K + 1);
    for (int i = 0; i <= K; ++i) {
        as[i] = lo + (hi - lo) * i / K;
        gs[i] = g(as[i]);
    }
    LRoot out;
    out.sign_changes = count_sign_changes(gs);
    for (int i = 1; i <= K; ++i)
        if (!(gs[i] > gs[i - 1]))
            out.monotone = false;
    if (out.sign_changes == 0)
        throw NoSignChange("solve_l: p-q has no sign change on (" + fmt_real(lo) + ", " + fmt_real(hi) +
                           ") for " + mn(m, n) + " at b=" + fmt_real(b));
    // the admissibility boundary is the crossing from p<q to p>q with largest a
    int k = -1;
    for (int i = K; i >= 1; --i)
        if (gs[i - 1] < 0 && gs[i] >= 0) {
            k = i;
            break;
        }
    if (k < 0)
        throw NoSignChange("solve_l: no increasing crossing of p-q for " + mn(m, n) + " at b=" + fmt_real(b));
    if (out.sign_changes > 1)
        out.warnings.push_back("multiple sign changes of p-q for " + mn(m, n) + " at b=" + fmt_real(b));
    if (!out.monotone)
        out.warnings.push_back("p-q not monotone in a for " + mn(m, n) + " at b=" + fmt_real(b));

    RootResult r = bisect_newton(g, as[k - 1], as[k], opt.root);
    out.a = r.x;
    out.residual = r.fx;
    double h = opt.root.fd_step;
    out.dgda = (g(r.x + h) - g(r.x - h)) / (2 * h);
    if (!r.converged)
        out.warnings.push_back("root tolerance not reached for " + mn(m, n) + " at b=" + fmt_real(b));
    return out;
}

double solve_l(double b, int m, int n)
{
    return solve_l_detail(b, m, n).a;
}

double implicit_slope(int m, int n, double b, double a)
{
    const double h = 1e-7;
    double ga = (pq_gap(a + h, b, m, n) - pq_gap(a - h, b, m, n)) / (2 * h);
    double gb;
    if (b >= h)
        gb = (pq_gap(a, b + h, m, n) - pq_gap(a, b - h, m, n)) / (2 * h);
    else
        gb = (-3 * pq_gap(a, b, m, n) + 4 * pq_gap(a, b + h, m, n) - pq_gap(a, b + 2 * h, m, n)) / (2 * h);
    return -gb / ga;
}

std::vector<double> uniform_grid(double lo, double hi, int points)
{
    if (points < 1)
        throw DomainError("uniform_grid: need at least one point");
    std::vector<double> g(points);
    for (int i = 0; i < points; ++i)
        g[i] = points == 1 ? lo : lo + (hi - lo) * i / (points - 1);
    return g;
}

BifCurve trace_curve(int m, int n, const std::vector<double>& b_grid, int workers, const SolveOptions& opt)
{
    if (b_grid.empty())
        throw DomainError("trace_curve: empty grid");
    BifCurve c;
    c.m = m;
    c.n = n;
    c.b = b_grid;
    std::vector<LRoot> roots(b_grid.size());
    parallel_for(b_grid.size(), workers, [&](std::size_t i) {
        try {
            roots[i] = solve_l_detail(b_grid[i], m, n, opt);
        } catch (const NoSignChange& e) {
            throw NoSignChange(std::string(e.what()) + " [trace_curve b=" + fmt_real(b_grid[i]) + "]");
        }
    });
    for (const LRoot& r : roots) {
        c.a.push_back(r.a);
        c.residual.push_back(r.residual);
        if (r.sign_changes != 1 || !r.monotone)
            c.regime_ok = false;
        c.warnings.insert(c.warnings.end(), r.warnings.begin(), r.warnings.end());
    }
    c.dadb = grid_slopes(c.b, c.a);
    for (std::size_t i = 1; i < c.b.size(); ++i) {
        double db = std::fabs(c.b[i] - c.b[i - 1]);
        double bound = 1.5 * std::max(std::fabs(c.dadb[i]), std::fabs(c.dadb[i - 1])) * db + 1e-12;
        if (std::fabs(c.a[i] - c.a[i - 1]) > bound) {
            c.continuous = false;
            c.warnings.push_back("jump in l" + mn(m, n) + " between b=" + fmt_real(c.b[i - 1]) + " and b=" +
                                 fmt_real(c.b[i]));
        }
    }
    return c;
}

double tangency(double b)
{
    auto f = [b](double a) {
        Params p{a, b};
        return multipliers(p).lambda - 1.0 - r_value(p, kInf);
    };
    double lo = std::max(1.8, 3.0 * b + 1.0 + 1e-9), hi = 2.2;
    if (!(lo < hi))
        throw NoSignChange("tangency: empty bracket at b=" + fmt_real(b));
    RootResult r = bisect_newton(f, lo, hi);
    return r.x;
}

TangencyCurve tangency_curve(const std::vector<double>& b_grid)
{
    TangencyCurve t;
    for (double b : b_grid) {
        t.b.push_back(b);
        t.a.push_back(tangency(b));
    }
    return t;
}

MChoice choose_m(double b_bar)
{
    if (!(b_bar > 0.0))
        throw DomainError("choose_m: b_bar must be positive");
    MChoice c;
    c.b_bar = b_bar;
    c.a_t = tangency(b_bar);
    Params p{c.a_t, b_bar};
    double l = multipliers(p).lambda;
    LogBounds lb = log_bounds(p);
    c.proof_gap = std::log(1.0 / b_bar) / std::log(l) + std::log(lb.c3 / lb.c4) / std::log(l) - 2.0 -
                  std::log(lb.c2 / lb.c1) / std::log(l);

    double u2R = u_value(p, 2, Side::R);
    if (u2R < r_value(p, 1))
        throw ConditionFailed("choose_m: u_2^R < r_1 at b_bar=" + fmt_real(b_bar), c.proof_gap);
    const int m_cap = 60;
    int m = 0;
    for (int k = 3; k <= m_cap; ++k) {
        if (r_value(p, k - 2) <= u2R && u2R < r_value(p, k - 1)) {
            m = k;
            break;
        }
    }
    if (m == 0)
        throw ConditionFailed("choose_m: no m <= " + std::to_string(m_cap) + " brackets u_2^R at b_bar=" +
                                  fmt_real(b_bar),
                              c.proof_gap);
    c.m = m;
    double u3L = u_value(p, 3, Side::L);
    double rm = r_value(p, m);
    double r_inf = r_value(p, kInf);
    if (u3L < r_inf && rm < r_inf)
        c.log_gap = log_coord(p, u3L) - log_coord(p, rm);
    else
        c.log_gap = u3L > rm ? HUGE_VAL : -HUGE_VAL;
    if (!(u3L > rm))
        throw ConditionFailed("choose_m: u_3^L <= r_m at b_bar=" + fmt_real(b_bar) + " (m=" + std::to_string(m) +
                                  ", log gap " + fmt_real(c.log_gap) + ")",
                              c.log_gap);
    return c;
}

Reversal find_reversal(double b_bar, std::optional<int> m, int grid_points, int workers)
{
    Reversal rv;
    rv.b_bar = b_bar;
    if (!m) {
        rv.choice = choose_m(b_bar);
        m = rv.choice->m;
    }
    std::vector<double> grid = uniform_grid(0.0, b_bar, std::max(grid_points, 3));
    rv.l2 = trace_curve(*m, 2, grid, workers);
    rv.l3 = trace_curve(*m, 3, grid, workers);

    std::vector<double> d(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        d[i] = rv.l2.a[i] - rv.l3.a[i];
    std::string tag = " for m=" + std::to_string(*m) + ", b_bar=" + fmt_real(b_bar);
    if (!(d.front() < 0.0))
        throw EndpointOrder("l_{m,2}(0) >= l_{m,3}(0)" + tag);
    if (!(d.back() > 0.0))
        throw EndpointOrder("l_{m,2}(b_bar) <= l_{m,3}(b_bar)" + tag);
    rv.sign_changes = count_sign_changes(d);
    if (rv.sign_changes != 1)
        throw MultipleCrossing(std::to_string(rv.sign_changes) + " sign changes of l_{m,2}-l_{m,3}" + tag);

    std::size_t k = 1;
    while ((d[k - 1] < 0) == (d[k] < 0))
        ++k;
    rv.x = refine_crossing(*m, grid[k - 1], grid[k]);
    for (std::size_t i = 0; i < grid.size(); ++i)
        if (!(rv.l2.dadb[i] > rv.l3.dadb[i]))
            rv.slopes_ordered = false;
    return rv;
}

ReversalScan scan_reversal(double b_start, double step, int grid_points, int workers)
{
    ReversalScan scan;
    for (int i = 0;; ++i) {
        double b_bar = b_start - step * i;
        if (b_bar <= step * 0.5)
            break;
        try {
            scan.result = find_reversal(b_bar, std::nullopt, grid_points, workers);
            scan.log.push_back("b_bar=" + fmt_real(b_bar) + ": m=" + std::to_string(scan.result->x.m) + " ok");
            break;
        } catch (const Error& e) {
            scan.log.push_back("b_bar=" + fmt_real(b_bar) + ": " + e.what());
        }
    }
    return scan;
}

FamilyReport figure1_family(int m_min, int m_max, const std::vector<int>& ns, double b_max, int grid_points,
                            int workers, const SolveOptions& opt)
{
    FamilyReport rep;
    std::vector<double> grid = uniform_grid(0.0, b_max, grid_points);
    for (int m = m_min; m <= m_max; ++m) {
        for (int n : ns) {
            try {
                BifCurve c = trace_curve(m, n, grid, workers, opt);
                if (!c.regime_ok) {
                    rep.warnings.push_back("skipped " + mn(m, n) + ": regime pre-scan failed");
                    continue;
                }
                rep.curves.push_back(std::move(c));
            } catch (const Error& e) {
                rep.warnings.push_back("skipped " + mn(m, n) + ": " + e.what());
            }
        }
    }
    auto find = [&](int m, int n) -> const BifCurve* {
        for (const BifCurve& c : rep.curves)
            if (c.m == m && c.n == n)
                return &c;
        return nullptr;
    };

    for (int m = m_min; m <= m_max; ++m) {
        const BifCurve* c2 = find(m, 2);
        const BifCurve* c3 = find(m, 3);
        if (!c2 || !c3)
            continue;
        std::vector<double> d(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i)
            d[i] = c2->a[i] - c3->a[i];
        int k = count_sign_changes(d);
        rep.crossings_per_m.push_back(k);
        if (k != 1) {
            rep.warnings.push_back("m=" + std::to_string(m) + ": " + std::to_string(k) + " crossings of l_{m,2}, l_{m,3}");
            continue;
        }
        std::size_t j = 1;
        while ((d[j - 1] < 0) == (d[j] < 0))
            ++j;
        rep.intersections.push_back(refine_crossing(m, grid[j - 1], grid[j]));
    }

    for (int n : ns) {
        for (int m = m_min; m < m_max; ++m) {
            const BifCurve* lo = find(m, n);
            const BifCurve* hi = find(m + 1, n);
            if (!lo || !hi)
                continue;
            for (std::size_t i = 0; i < grid.size(); ++i) {
                if (!(lo->a[i] < hi->a[i])) {
                    rep.non_crossing = false;
                    rep.warnings.push_back("l" + mn(m, n) + " meets l" + mn(m + 1, n) + " at b=" + fmt_real(grid[i]));
                    break;
                }
            }
        }
    }
    return rep;
}

}  // namespace lozi
