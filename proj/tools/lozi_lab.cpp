// lozi_lab: formal orbits, bifurcation curves and verification suites for
// orientation-preserving Lozi maps.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "lozi/bifurcation.hpp"
#include "lozi/error.hpp"
#include "lozi/geometry.hpp"
#include "lozi/io.hpp"
#include "lozi/renorm.hpp"
#include "lozi/symbolic.hpp"
#include "lozi/verify.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

// flag combinations that parse but make no sense together
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum Exit { kOk = 0, kVerifyFail = 1, kUsage = 2, kDomain = 3 };

std::string out_dir(const std::string& flag, const std::string& fallback)
{
    if (!flag.empty())
        return flag;
    if (const char* env = std::getenv("LOZI_LAB_OUT"); env && *env)
        return env;
    return fallback;
}

void write_file(const fs::path& path, const std::string& text)
{
    if (path.has_parent_path())
        fs::create_directories(path.parent_path());
    std::ofstream os(path, std::ios::binary);
    if (!os)
        throw lozi::Error("cannot write " + path.string());
    os << text;
}

json intersection_json(const lozi::Intersection& x)
{
    return json{{"m", x.m}, {"b_star", x.b_star}, {"a_star", x.a_star}, {"slope2", x.slope2}, {"slope3", x.slope3}};
}

std::string curve_csv(const lozi::BifCurve& c)
{
    std::string s = "m,n,b,a,dadb\n";
    for (std::size_t i = 0; i < c.b.size(); ++i)
        s += std::to_string(c.m) + "," + std::to_string(c.n) + "," + lozi::fmt_real(c.b[i]) + "," +
             lozi::fmt_real(c.a[i]) + "," + lozi::fmt_real(c.dadb[i]) + "\n";
    return s;
}

struct Opts {
    double a = 0, b = 0;
    std::string itinerary;
    int m_min = 4, m_max = 14;
    std::vector<int> ns{2, 3};
    double b_max = 0.07;
    int grid = 71;
    std::string out;
    std::uint64_t seed = 42;
    int workers = 1;
    double tol = 1e-10;
    bool tol_set = false;
    std::string suite = "all";
};

int cmd_orbit(const Opts& o)
{
    lozi::Params p{o.a, o.b};
    lozi::Itinerary I = lozi::Itinerary::parse(o.itinerary);
    if (I.empty())
        throw lozi::ParseError("empty itinerary");
    if (!p.in_P_full())
        throw lozi::DomainError("(a,b) is outside P_full");
    lozi::FormalPeriodicPoint f = lozi::formal_periodic_point(p, I);
    json j{{"a", o.a},
           {"b", o.b},
           {"itinerary", I.str()},
           {"point", {f.point.x, f.point.y}},
           {"admissibility", f.admissibility},
           {"admissible", f.admissible()},
           {"hyperbolic", f.hyperbolic},
           {"residual", f.residual},
           {"residual_ok", f.residual < o.tol}};
    std::cout << j.dump(2) << "\n";
    return kOk;
}

int cmd_partition(const Opts& o)
{
    lozi::Params p{o.a, o.b};
    if (!p.in_P_mod())
        throw lozi::DomainError("(a,b) is outside P_mod");
    std::ostringstream os;
    lozi::write_partition_csv(os, lozi::build_partition(p, o.m_max));
    std::string dir = out_dir(o.out, "");
    if (dir.empty()) {
        std::cout << os.str();
    } else {
        write_file(fs::path(dir) / "partition.csv", os.str());
        std::cerr << "wrote " << (fs::path(dir) / "partition.csv").string() << "\n";
    }
    return kOk;
}

int cmd_figure1(const Opts& o)
{
    if (o.grid < 2 || o.m_min < 2 || o.m_max < o.m_min || !(o.b_max > 0))
        throw UsageError("figure1: need grid >= 2, 2 <= m-min <= m-max and b-max > 0");
    fs::path dir = out_dir(o.out, "figure1");
    lozi::SolveOptions so;
    if (o.tol_set)
        so.root.f_tol = o.tol;
    lozi::FamilyReport rep = lozi::figure1_family(o.m_min, o.m_max, o.ns, o.b_max, o.grid, o.workers, so);
    for (const lozi::BifCurve& c : rep.curves)
        write_file(dir / ("curve_m" + std::to_string(c.m) + "_n" + std::to_string(c.n) + ".csv"), curve_csv(c));

    json xs = json::array();
    for (const lozi::Intersection& x : rep.intersections)
        xs.push_back(intersection_json(x));
    write_file(dir / "intersections.json", xs.dump(2) + "\n");

    lozi::TangencyCurve t = lozi::tangency_curve(lozi::uniform_grid(0.0, o.b_max, o.grid));
    std::string ts = "b,a\n";
    for (std::size_t i = 0; i < t.b.size(); ++i)
        ts += lozi::fmt_real(t.b[i]) + "," + lozi::fmt_real(t.a[i]) + "\n";
    write_file(dir / "tangency.csv", ts);

    json summary{{"curves", rep.curves.size()},
                 {"intersections", rep.intersections.size()},
                 {"crossings_per_m", rep.crossings_per_m},
                 {"non_crossing", rep.non_crossing},
                 {"warnings", rep.warnings}};
    write_file(dir / "summary.json", summary.dump(2) + "\n");
    for (const std::string& w : rep.warnings)
        std::cerr << "warning: " << w << "\n";
    std::cout << summary.dump(2) << "\n";
    return kOk;
}

int cmd_reversal(const Opts& o)
{
    lozi::ReversalScan scan = lozi::scan_reversal(o.b_max, 0.005, o.grid, o.workers);
    for (const std::string& line : scan.log)
        std::cerr << line << "\n";
    if (!scan.result) {
        std::cerr << "no reversal found in the downward scan\n";
        return kVerifyFail;
    }
    const lozi::Reversal& r = *scan.result;
    json x = intersection_json(r.x);
    json report{{"intersection", x},
                {"b_bar", r.b_bar},
                {"a_t", r.choice ? r.choice->a_t : 0.0},
                {"log_gap", r.choice ? r.choice->log_gap : 0.0},
                {"proof_gap", r.choice ? r.choice->proof_gap : 0.0},
                {"l2_0", r.l2.a.front()},
                {"l3_0", r.l3.a.front()},
                {"l2_b_bar", r.l2.a.back()},
                {"l3_b_bar", r.l3.a.back()},
                {"sign_changes", r.sign_changes},
                {"slopes_ordered", r.slopes_ordered}};
    std::string dir = out_dir(o.out, "");
    if (!dir.empty()) {
        write_file(fs::path(dir) / "reversal.json", x.dump(2) + "\n");
        write_file(fs::path(dir) / ("curve_m" + std::to_string(r.x.m) + "_n2.csv"), curve_csv(r.l2));
        write_file(fs::path(dir) / ("curve_m" + std::to_string(r.x.m) + "_n3.csv"), curve_csv(r.l3));
    }
    std::cout << report.dump(2) << "\n";
    return r.slopes_ordered ? kOk : kVerifyFail;
}

int cmd_verify(const Opts& o)
{
    std::vector<lozi::SuiteResult> res = lozi::run_verify(o.suite, o.seed);
    bool ok = true;
    json suites = json::array();
    for (const lozi::SuiteResult& s : res) {
        json checks = json::array();
        for (const lozi::Check& c : s.checks) {
            checks.push_back(json{{"id", c.id}, {"passed", c.passed}, {"detail", c.detail}});
            if (!c.passed)
                std::cerr << "FAILED " << c.id << ": " << c.detail << "\n";
        }
        ok = ok && s.passed();
        suites.push_back(json{{"suite", s.suite}, {"passed", s.passed()}, {"checks", checks}});
    }
    json j{{"suite", o.suite}, {"seed", o.seed}, {"passed", ok}, {"suites", suites}};
    std::string dir = out_dir(o.out, "");
    if (!dir.empty())
        write_file(fs::path(dir) / ("verify_" + o.suite + ".json"), j.dump(2) + "\n");
    std::cout << j.dump(2) << "\n";
    return ok ? kOk : kVerifyFail;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Formal periodic orbits, bifurcation curves and checks for Lozi maps"};
    app.require_subcommand(1);
    Opts o;

    auto* orbit = app.add_subcommand("orbit", "formal periodic point of an itinerary");
    orbit->add_option("-a", o.a, "parameter a")->required();
    orbit->add_option("-b", o.b, "parameter b")->required();
    orbit->add_option("-I", o.itinerary, "itinerary over {-,+}, e.g. +-++-")->required();
    orbit->add_option("--tol", o.tol, "residual tolerance")->check(CLI::PositiveNumber);

    auto* part = app.add_subcommand("partition", "strip traces of the renormalization partition as CSV");
    part->add_option("-a", o.a, "parameter a")->required();
    part->add_option("-b", o.b, "parameter b")->required();
    part->add_option("--m-max", o.m_max, "last C_m strip")->check(CLI::Range(2, 200));
    part->add_option("--out", o.out, "output directory (default: stdout, or $LOZI_LAB_OUT)");

    auto* fig = app.add_subcommand("figure1", "l_{m,2} and l_{m,3} families with their intersections");
    fig->add_option("--m-min", o.m_min, "smallest m")->check(CLI::Range(2, 200));
    fig->add_option("--m-max", o.m_max, "largest m")->check(CLI::Range(2, 200));
    fig->add_option("--n", o.ns, "values of n")->delimiter(',')->check(CLI::Range(2, 200));
    fig->add_option("--b-max", o.b_max, "right end of the b grid");
    fig->add_option("--grid", o.grid, "number of b samples");
    fig->add_option("--out", o.out, "output directory (default: $LOZI_LAB_OUT or ./figure1)");
    fig->add_option("--workers", o.workers, "worker threads")->check(CLI::PositiveNumber);
    fig->add_option("--tol", o.tol, "root tolerance on |p-q|")->check(CLI::PositiveNumber);

    auto* rev = app.add_subcommand("reversal", "downward scan for b_bar, then the l_{m,2}/l_{m,3} crossing");
    rev->add_option("--b-max", o.b_max, "starting b_bar of the scan (default 0.05)");
    rev->add_option("--grid", o.grid, "number of b samples on [0, b_bar]");
    rev->add_option("--out", o.out, "output directory (default: $LOZI_LAB_OUT, none if unset)");
    rev->add_option("--workers", o.workers, "worker threads")->check(CLI::PositiveNumber);

    auto* ver = app.add_subcommand("verify", "run invariant suites");
    ver->add_option("suite", o.suite, "cones, orbits, convergence, partition, kneading or all")
        ->check(CLI::IsMember({"cones", "orbits", "convergence", "partition", "kneading", "all"}));
    ver->add_option("--seed", o.seed, "random seed");
    ver->add_option("--out", o.out, "also write the JSON summary here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    o.tol_set = fig->count("--tol") > 0;
    if (rev->parsed()) {
        if (rev->count("--b-max") == 0)
            o.b_max = 0.05;
        if (rev->count("--grid") == 0)
            o.grid = 51;
    }

    try {
        if (orbit->parsed())
            return cmd_orbit(o);
        if (part->parsed())
            return cmd_partition(o);
        if (fig->parsed())
            return cmd_figure1(o);
        if (rev->parsed())
            return cmd_reversal(o);
        return cmd_verify(o);
    } catch (const lozi::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const lozi::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kVerifyFail;
    }
}
