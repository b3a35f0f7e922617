#include "lozi/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "lozi/error.hpp"
#include "lozi/geometry.hpp"
#include "lozi/io.hpp"
#include "lozi/kneading.hpp"
#include "lozi/oracle.hpp"
#include "lozi/renorm.hpp"
#include "lozi/symbolic.hpp"

namespace lozi {

bool SuiteResult::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

namespace {

// Accumulates the worst case of a sweep into one Check.
struct Tally {
    explicit Tally(std::string name) : id(std::move(name)) {}

    std::string id;
    long n = 0;
    long bad = 0;
    std::string first_bad;

    void add(bool ok, const std::string& where)
    {
        ++n;
        if (!ok && bad++ == 0)
            first_bad = where;
    }
    Check done() const
    {
        std::string d = std::to_string(n - bad) + "/" + std::to_string(n) + " ok";
        if (bad)
            d += "; first failure: " + first_bad;
        return {id, bad == 0 && n > 0, d};
    }
};

std::string at(const Params& p)
{
    return "(a,b)=(" + fmt_real(p.a) + "," + fmt_real(p.b) + ")";
}

std::vector<Params> mod_grid(int na, int nb, double b_max)
{
    std::vector<Params> g;
    for (int j = 1; j <= nb; ++j) {
        double b = b_max * j / nb;
        for (int i = 1; i <= na; ++i)
            g.push_back({3 * b + 1 + (4 - (3 * b + 1)) * i / na, b});
    }
    return g;
}

std::vector<Params> full_grid(int na, int nb)
{
    std::vector<Params> g;
    for (int j = 0; j < nb; ++j) {
        double b = 0.05 + 0.6 * j / std::max(nb - 1, 1);
        for (int i = 1; i <= na; ++i)
            g.push_back({b + 1 + (2 - b) * (i - 0.3) / na, b});
    }
    return g;
}

std::vector<Itinerary> all_words(int len)
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

SuiteResult suite_cones(std::uint64_t seed)
{
    SuiteResult r{"cones", seed, {}};
    std::mt19937_64 rng(seed);
    Tally t{"cones.invariance_expansion"};
    for (const Params& p : full_grid(8, 6)) {
        ConeReport c = cone_check(p, 500, rng);
        t.add(c.ok, at(p) + " slack " + fmt_real(c.worst_slack));
    }
    ConeReport c0 = cone_check(Params{2.0, 0.0}, 500, rng);
    t.add(c0.ok, "(2,0)");
    r.checks.push_back(t.done());
    r.checks.push_back({"cones.b0_stable_skipped", !c0.note.empty(), c0.note});
    return r;
}

SuiteResult suite_orbits(std::uint64_t seed)
{
    SuiteResult r{"orbits", seed, {}};
    Tally res{"orbits.residual"}, sad{"orbits.saddle"}, spec{"orbits.spectral_bound"},
        gen{"orbits.admissible_is_periodic"}, eq{"orbits.brute_equivalence"}, trap{"orbits.periodic_in_T"};
    std::vector<Params> grid = full_grid(3, 3);
    for (const Params& p : grid) {
        Multipliers mm = multipliers(p);
        for (int len = 1; len <= 6; ++len) {
            for (const Itinerary& I : all_words(len)) {
                FormalPeriodicPoint f = formal_periodic_point(p, I);
                std::string w = at(p) + " I=" + I.str();
                res.add(f.residual < 1e-10, w);
                double big = eigen_moduli(compose_formal(p, I).A).first;
                // the small root is b^N / big; the entrywise det cancels badly
                sad.add(big >= std::pow(mm.lambda, len) * (1 - 1e-9) &&
                            std::pow(p.b, len) / big <= std::pow(mm.mu, len) * (1 + 1e-9),
                        w);
                spec.add(spectral_lower_bound_check(p, I), w);
                if (f.admissible()) {
                    Point v = f.point;
                    for (int k = 0; k < len; ++k)
                        v = eval(p, v);
                    gen.add(dist(v, f.point) < 1e-9, w);
                }
            }
            if (len > 5)
                continue;
            // brute force against the formal set
            std::vector<BrutePoint> bp = brute_periodic(p, len, 40);
            for (const BrutePoint& b : bp) {
                FormalPeriodicPoint f = formal_periodic_point(p, b.coding);
                eq.add(dist(f.point, b.point) < 1e-7 && (f.admissible() || b.near_critical),
                       at(p) + " brute " + b.coding.str());
                // the whole cycle lies in T; following a saddle orbit numerically
                // for long is meaningless since errors grow like lambda^k
                TrappingRegion T = trapping_region(p);
                bool inside = true;
                Point v = b.point;
                for (int k = 0; k < len; ++k) {
                    inside = inside && T.contains(v, 1e-9);
                    v = eval(p, v);
                }
                trap.add(inside, at(p) + " " + b.coding.str());
            }
            for (const Itinerary& I : all_words(len)) {
                FormalPeriodicPoint f = formal_periodic_point(p, I);
                if (!f.hyperbolic)
                    continue;
                bool hit = std::any_of(bp.begin(), bp.end(),
                                       [&](const BrutePoint& b) { return dist(b.point, f.point) < 1e-7; });
                eq.add(hit, at(p) + " formal " + I.str());
            }
        }
    }
    for (Tally* t : {&res, &sad, &spec, &gen, &eq, &trap})
        r.checks.push_back(t->done());
    return r;
}

SuiteResult suite_convergence(std::uint64_t seed)
{
    SuiteResult r{"convergence", seed, {}};
    Tally rb{"convergence.r_exponential"}, ub{"convergence.u_exponential"}, lam{"convergence.lambda_bounds"},
        bl{"convergence.b_over_lambda"}, cone{"convergence.cone_contraction"},
        fh{"convergence.full_horseshoe"}, pd{"convergence.period_doubling"};
    double c = 64.0 / 7.0 * std::log(2.0);
    double C2 = 2.0 * (1.0 + 0.625 * (c + 1.5));
    for (const Params& p : mod_grid(20, 10, 0.3)) {
        Multipliers mm = multipliers(p);
        double l = mm.lambda;
        double r_inf = r_value(p, kInf);
        for (int m = 2; m <= 12; ++m) {
            double d = (r_inf - r_value(p, m)) * std::pow(l, m);
            rb.add(d > 0.2 && d < 2.25, at(p) + " m=" + std::to_string(m) + " ratio " + fmt_real(d));
            double scale = (1 - std::pow(l, -(m - 1))) * l * std::pow(p.b / l, m - 1);
            for (Side s : {Side::L, Side::R}) {
                double g = u_gap(p, m, s) / scale;
                ub.add(g >= 0.25 && g <= C2, at(p) + " m=" + std::to_string(m) + " ratio " + fmt_real(g));
            }
        }
        lam.add(2 * p.b + 1 < l && l <= p.a, at(p));
        bl.add(p.b / (l * l) < 0.125 && p.b / l < 1.0 / 3.0, at(p));
        for (Sign s : {Sign::Minus, Sign::Plus}) {
            for (int k = 0; k <= 20; ++k) {
                double x = (-1.0 + 2.0 * k / 20);
                double sf = x / l, sg = x * mm.mu;
                double fp = p.b / std::pow(p.b * sf + val(s) * p.a, 2);
                double gp = p.b / std::pow(sg + val(s) * p.a, 2);
                double cap = p.b / (l * l) * (1 + 1e-12);
                cone.add(fp <= cap && gp <= cap && (p.b == 0 || (fp > 0 && gp > 0)), at(p));
            }
        }
        double uL = u_base(p, Side::L);
        if (p.a >= 2 * p.b + 2)
            fh.add(r_inf <= uL + 1e-12, at(p));
        if (p.a < std::sqrt(2.0) * (1 - 3 * p.b))
            pd.add(l - 1 < r_value(p, 2), at(p));
    }
    // the period-doubling hypothesis needs small a; sample it directly
    for (int j = 0; j <= 5; ++j) {
        double b = 0.01 * j;
        for (int i = 1; i <= 5; ++i) {
            Params p{3 * b + 1 + (std::sqrt(2.0) * (1 - 3 * b) - 3 * b - 1) * i / 6.0, b};
            if (p.in_P_mod() && p.a < std::sqrt(2.0) * (1 - 3 * p.b))
                pd.add(multipliers(p).lambda - 1 < r_value(p, 2), at(p));
        }
    }
    fh.add(std::fabs(r_value(Params{2, 0}, kInf) - u_base(Params{2, 0}, Side::L)) < 1e-12, "equality at (2,0)");
    for (Tally* t : {&rb, &ub, &lam, &bl, &cone, &fh, &pd})
        r.checks.push_back(t->done());
    return r;
}

SuiteResult suite_partition(std::uint64_t seed)
{
    SuiteResult r{"partition", seed, {}};
    Tally ord{"partition.trace_order"}, lad{"partition.turning_ladder"}, cf{"partition.closed_forms"},
        tent{"partition.tent_traces"}, mem{"partition.cmn_membership"};
    for (const Params& p : mod_grid(10, 6, 0.3)) {
        std::vector<Strip> st = build_partition(p);
        bool inc = true;
        for (std::size_t i = 1; i + 1 < st.size(); ++i)
            inc = inc && st[i].left.trace() < st[i].right.trace();
        inc = inc && st.front().left.trace() < st.front().right.trace() && st.back().left.trace() < 0.0 &&
              st[st.size() - 2].right.trace() < st.back().right.trace();
        ord.add(inc, at(p));

        CriticalData cd = critical_data(p, 10);
        bool ok = true;
        for (int m = 2; m < 10; ++m) {
            ok = ok && cd.uL <= cd.u_m_L[m] + 1e-12 && cd.u_m_L[m] <= cd.u_m_R[m] + 1e-12 &&
                 cd.u_m_R[m] <= cd.u_m_L[m + 1] + 1e-12;
        }
        ok = ok && cd.u_m_R[10] <= cd.u_inf + 1e-12 && cd.u_inf <= cd.uR + 1e-12;
        lad.add(ok, at(p));

        BwdLine bi = beta_inf(p), gi = gamma(p, kInf);
        cf.add(std::fabs(bi.x_at(1.0) - closed_form::v_minus(p)) < 1e-10 &&
                   std::fabs(gi.x_at(1.0) - closed_form::v_plus(p)) < 1e-10 &&
                   std::fabs(gi.x_at(-1.0) - closed_form::w_plus(p)) < 1e-10 &&
                   std::fabs(gi.trace() - closed_form::r_inf(p)) < 1e-10,
               at(p));

        for (int m = 3; m <= 6; ++m) {
            for (int n = 2; n < m; ++n) {
                if (!exists_Cmn(p, m, n))
                    continue;
                auto sub = subpartition(p, m, n);
                for (Sign s : {Sign::Minus, Sign::Plus}) {
                    FormalPeriodicPoint f = formal_periodic_point(p, iota(s, m, n));
                    if (f.admissible())
                        mem.add(sub->first.contains(f.point, 1e-10),
                                at(p) + " iota" + std::string(1, to_char(s)) + std::to_string(m) + "," +
                                    std::to_string(n));
                }
            }
        }
    }
    for (double a : {1.5, 1.8, 2.0}) {
        for (int m = 1; m <= 10; ++m)
            tent.add(std::fabs(r_value(Params{a, 0}, m) - closed_form::r_tent(a, m)) < 1e-12,
                     "a=" + fmt_real(a) + " m=" + std::to_string(m));
    }
    for (Tally* t : {&ord, &lad, &cf, &tent, &mem})
        r.checks.push_back(t->done());
    return r;
}

UItinerary random_uitinerary(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> pre(0, 4), per(1, 6), sym(0, 19);
    auto draw = [&] {
        int k = sym(rng);
        return k == 0 ? USym::Zero : k % 2 ? USym::Plus : USym::Minus;
    };
    std::vector<USym> a(pre(rng)), b(per(rng));
    for (auto& s : a)
        s = draw();
    for (auto& s : b)
        s = draw();
    return UItinerary(std::move(a), std::move(b));
}

SuiteResult suite_kneading(std::uint64_t seed)
{
    SuiteResult r{"kneading", seed, {}};
    std::mt19937_64 rng(seed);
    std::vector<UItinerary> corpus;
    for (int i = 0; i < 200; ++i)
        corpus.push_back(random_uitinerary(rng));
    Tally tot{"kneading.antisymmetry"}, tr{"kneading.transitivity"};
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        for (std::size_t j = 0; j < corpus.size(); ++j) {
            Order o = order_compare(corpus[i], corpus[j]), q = order_compare(corpus[j], corpus[i]);
            bool ok = (o == Order::Less && q == Order::Greater) || (o == Order::Greater && q == Order::Less) ||
                      (o == Order::Equivalent && q == Order::Equivalent);
            tot.add(ok, corpus[i].str() + " vs " + corpus[j].str());
        }
    }
    std::size_t K = 60;
    for (std::size_t i = 0; i < K; ++i)
        for (std::size_t j = 0; j < K; ++j)
            for (std::size_t k = 0; k < K; ++k) {
                if (order_compare(corpus[i], corpus[j]) == Order::Less &&
                    order_compare(corpus[j], corpus[k]) == Order::Less)
                    tr.add(order_compare(corpus[i], corpus[k]) == Order::Less,
                           corpus[i].str() + " < " + corpus[j].str() + " < " + corpus[k].str());
            }
    r.checks.push_back(tot.done());
    r.checks.push_back(tr.done());

    Tally mx{"kneading.maximum_examples"};
    mx.add(is_maximum(UItinerary::parse("(+-)")), "(+-)");
    mx.add(!is_maximum(UItinerary::parse("(-+)")), "(-+)");
    mx.add(is_maximum(UItinerary::parse("(+)")), "(+)");
    r.checks.push_back(mx.done());

    Tally fc{"kneading.forcing_tent"};
    for (int i = 1; i <= 50; ++i) {
        double a = std::sqrt(2.0) + (2.0 - std::sqrt(2.0)) * i / 50;
        for (int m = 4; m <= 8; ++m)
            for (int n1 = 3; n1 < m; ++n1)
                for (int n2 = 2; n2 < n1; ++n2)
                    fc.add(forcing_check_tent(a, m, n1, n2), "a=" + fmt_real(a) + " m=" + std::to_string(m) +
                                                                 " n1=" + std::to_string(n1) +
                                                                 " n2=" + std::to_string(n2));
    }
    r.checks.push_back(fc.done());

    Tally mono{"kneading.tent_coding_monotone"};
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    for (int i = 0; i < 300; ++i) {
        double a = 1.5 + 0.5 * (U(rng) + 1) / 2;
        double x = U(rng), y = U(rng);
        if (x > y)
            std::swap(x, y);
        if (y - x < 1e-9)
            continue;
        auto cx = tent_code(a, x, 60), cy = tent_code(a, y, 60);
        mono.add(order_compare_prefix(cx, cy) != Order::Greater, "a=" + fmt_real(a) + " x=" + fmt_real(x));
    }
    r.checks.push_back(mono.done());
    return r;
}

}  // namespace

const std::vector<std::string>& verify_suites()
{
    static const std::vector<std::string> s{"cones", "orbits", "convergence", "partition", "kneading"};
    return s;
}

std::vector<SuiteResult> run_verify(const std::string& suite, std::uint64_t seed)
{
    std::vector<std::string> which;
    if (suite == "all")
        which = verify_suites();
    else if (std::find(verify_suites().begin(), verify_suites().end(), suite) != verify_suites().end())
        which = {suite};
    else
        throw DomainError("unknown verify suite '" + suite + "'");
    std::vector<SuiteResult> out;
    for (const std::string& s : which) {
        if (s == "cones")
            out.push_back(suite_cones(seed));
        else if (s == "orbits")
            out.push_back(suite_orbits(seed));
        else if (s == "convergence")
            out.push_back(suite_convergence(seed));
        else if (s == "partition")
            out.push_back(suite_partition(seed));
        else
            out.push_back(suite_kneading(seed));
    }
    return out;
}

}  // namespace lozi
