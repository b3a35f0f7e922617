#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lozi/bifurcation.hpp"
#include "lozi/error.hpp"
#include "lozi/geometry.hpp"
#include "lozi/kneading.hpp"
#include "lozi/oracle.hpp"
#include "lozi/renorm.hpp"
#include "lozi/symbolic.hpp"
#include "lozi/verify.hpp"

namespace py = pybind11;
using namespace lozi;

namespace {

using XY = std::pair<double, double>;

XY xy(Point p) { return {p.x, p.y}; }

int m_or_inf(std::optional<int> m) { return m ? *m : kInf; }

Side side_of(const std::string& s)
{
    if (s == "L")
        return Side::L;
    if (s == "R")
        return Side::R;
    throw DomainError("side must be 'L' or 'R'");
}

py::dict curve_dict(const BifCurve& c)
{
    py::dict d;
    d["m"] = c.m;
    d["n"] = c.n;
    d["b"] = c.b;
    d["a"] = c.a;
    d["dadb"] = c.dadb;
    d["residual"] = c.residual;
    d["regime_ok"] = c.regime_ok;
    d["continuous"] = c.continuous;
    d["warnings"] = c.warnings;
    return d;
}

py::dict intersection_dict(const Intersection& x)
{
    py::dict d;
    d["m"] = x.m;
    d["b_star"] = x.b_star;
    d["a_star"] = x.a_star;
    d["slope2"] = x.slope2;
    d["slope3"] = x.slope3;
    return d;
}

}  // namespace

PYBIND11_MODULE(_lozi, m)
{
    m.doc() = "Lozi map periodic orbits, renormalization geometry and bifurcation curves";

    static py::exception<Error> base(m, "LoziError", PyExc_RuntimeError);
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<SingularSystem>(m, "SingularSystem", base.ptr());
    py::register_exception<GeometryError>(m, "GeometryError", base.ptr());
    py::register_exception<NoSignChange>(m, "NoSignChange", base.ptr());
    py::register_exception<ConditionFailed>(m, "ConditionFailed", base.ptr());
    py::register_exception<EndpointOrder>(m, "EndpointOrder", base.ptr());
    py::register_exception<MultipleCrossing>(m, "MultipleCrossing", base.ptr());

    m.def("eval", [](double a, double b, double x, double y) { return xy(eval({a, b}, {x, y})); },
          py::arg("a"), py::arg("b"), py::arg("x"), py::arg("y"));
    m.def("fixed_points", [](double a, double b) {
        auto [zm, zp] = fixed_points({a, b});
        return std::make_pair(xy(zm), xy(zp));
    });
    m.def("multipliers", [](double a, double b) {
        Multipliers mm = multipliers({a, b});
        return std::make_pair(mm.lambda, mm.mu);
    });

    m.def(
        "formal_periodic_point",
        [](double a, double b, const std::string& itinerary) {
            FormalPeriodicPoint f = formal_periodic_point({a, b}, Itinerary::parse(itinerary));
            py::dict d;
            d["point"] = xy(f.point);
            d["itinerary"] = f.itinerary.str();
            d["admissibility"] = f.admissibility;
            d["admissible"] = f.admissible();
            d["hyperbolic"] = f.hyperbolic;
            d["residual"] = f.residual;
            return d;
        },
        py::arg("a"), py::arg("b"), py::arg("itinerary"));
    m.def("iota", [](const std::string& sigma, int mm, int n) {
        if (sigma != "+" && sigma != "-")
            throw DomainError("sigma must be '+' or '-'");
        return iota(sigma == "+" ? Sign::Plus : Sign::Minus, mm, n).str();
    });

    m.def("r_value", [](double a, double b, std::optional<int> k) { return r_value({a, b}, m_or_inf(k)); },
          py::arg("a"), py::arg("b"), py::arg("m") = py::none());
    m.def(
        "u_value",
        [](double a, double b, std::optional<int> k, const std::string& side) {
            return u_value({a, b}, m_or_inf(k), side_of(side));
        },
        py::arg("a"), py::arg("b"), py::arg("m") = py::none(), py::arg("side") = "L");
    m.def(
        "u_gap",
        [](double a, double b, int k, const std::string& side) { return u_gap({a, b}, k, side_of(side)); },
        py::arg("a"), py::arg("b"), py::arg("m"), py::arg("side") = "L");
    m.def("p_value", [](double a, double b, int mm, int n) { return p_value({a, b}, mm, n); });
    m.def("q_value", [](double a, double b, int mm, int n) { return q_value({a, b}, mm, n); });

    m.def(
        "build_partition",
        [](double a, double b, int m_max) {
            std::vector<std::tuple<std::string, double, double>> out;
            for (const Strip& s : build_partition({a, b}, m_max))
                out.emplace_back(s.label.str(), s.left.trace(), s.right.trace());
            return out;
        },
        py::arg("a"), py::arg("b"), py::arg("m_max") = kDefaultMMax);
    m.def("exists_Cmn", [](double a, double b, int mm, int n) { return exists_Cmn({a, b}, mm, n); });
    m.def("classify_regime",
          [](double a, double b, int mm, int n) { return std::string(to_string(classify_regime({a, b}, mm, n))); });

    m.def("solve_l", &solve_l, py::arg("b"), py::arg("m"), py::arg("n"));
    m.def(
        "trace_curve",
        [](int mm, int n, const std::vector<double>& grid, int workers) {
            return curve_dict(trace_curve(mm, n, grid, workers));
        },
        py::arg("m"), py::arg("n"), py::arg("b_grid"), py::arg("workers") = 1);
    m.def("tangency", &tangency, py::arg("b"));
    m.def("choose_m", [](double b_bar) {
        MChoice c = choose_m(b_bar);
        py::dict d;
        d["m"] = c.m;
        d["b_bar"] = c.b_bar;
        d["a_t"] = c.a_t;
        d["log_gap"] = c.log_gap;
        d["proof_gap"] = c.proof_gap;
        return d;
    });
    m.def(
        "find_reversal",
        [](double b_bar, std::optional<int> mm, int grid, int workers) {
            Reversal r = find_reversal(b_bar, mm, grid, workers);
            py::dict d = intersection_dict(r.x);
            d["b_bar"] = r.b_bar;
            d["sign_changes"] = r.sign_changes;
            d["slopes_ordered"] = r.slopes_ordered;
            d["l2"] = curve_dict(r.l2);
            d["l3"] = curve_dict(r.l3);
            return d;
        },
        py::arg("b_bar"), py::arg("m") = py::none(), py::arg("grid_points") = 51, py::arg("workers") = 1);

    m.def("order_compare", [](const std::string& i, const std::string& j) {
        return std::string(to_string(order_compare(UItinerary::parse(i), UItinerary::parse(j))));
    });
    m.def("is_maximum", [](const std::string& i) { return is_maximum(UItinerary::parse(i)); });
    m.def("forcing_check_tent", &forcing_check_tent, py::arg("a"), py::arg("m"), py::arg("n1"), py::arg("n2"));

    m.def(
        "brute_periodic",
        [](double a, double b, int period, int grid_n) {
            std::vector<std::tuple<XY, std::string, bool>> out;
            for (const BrutePoint& q : brute_periodic({a, b}, period, grid_n))
                out.emplace_back(xy(q.point), q.coding.str(), q.near_critical);
            return out;
        },
        py::arg("a"), py::arg("b"), py::arg("period"), py::arg("grid_n") = 60);
    m.def(
        "cone_check",
        [](double a, double b, int samples, std::uint64_t seed) {
            ConeReport r = cone_check({a, b}, samples, seed);
            py::dict d;
            d["ok"] = r.ok;
            d["checked"] = r.checked;
            d["worst_slack"] = r.worst_slack;
            d["note"] = r.note;
            return d;
        },
        py::arg("a"), py::arg("b"), py::arg("samples") = 1000, py::arg("seed") = 0);
    m.def(
        "classify_orbit",
        [](double a, double b, double x, double y, long max_iter) {
            OrbitClass c = classify_orbit({a, b}, {x, y}, max_iter);
            return std::make_pair(std::string(to_string(c.kind)), c.witness);
        },
        py::arg("a"), py::arg("b"), py::arg("x"), py::arg("y"), py::arg("max_iter") = 100000);

    m.def(
        "run_verify",
        [](const std::string& suite, std::uint64_t seed) {
            py::list out;
            for (const SuiteResult& s : run_verify(suite, seed)) {
                py::dict d;
                d["suite"] = s.suite;
                d["passed"] = s.passed();
                py::list checks;
                for (const Check& c : s.checks)
                    checks.append(py::make_tuple(c.id, c.passed, c.detail));
                d["checks"] = checks;
                out.append(d);
            }
            return out;
        },
        py::arg("suite") = "all", py::arg("seed") = 42);
}
