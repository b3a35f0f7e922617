#include "lozi/roots.hpp"

#include <cmath>

#include "lozi/error.hpp"

namespace lozi {

RootResult bisect_newton(const std::function<double(double)>& f, double lo, double hi,
                         const RootOptions& opt)
{
    double flo = f(lo), fhi = f(hi);
    if (flo == 0.0)
        return {lo, 0.0, 0, true};
    if (fhi == 0.0)
        return {hi, 0.0, 0, true};
    if ((flo < 0) == (fhi < 0))
        throw NoSignChange("bisect_newton: no sign change on the bracket");

    RootResult r;
    while (hi - lo > opt.bracket_tol && r.iterations < opt.max_iter) {
        double mid = 0.5 * (lo + hi);
        double fm = f(mid);
        ++r.iterations;
        if (fm == 0.0)
            return {mid, 0.0, r.iterations, true};
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }

    double x = 0.5 * (lo + hi);
    double fx = f(x);
    while (std::fabs(fx) >= opt.f_tol && r.iterations < opt.max_iter) {
        ++r.iterations;
        double h = opt.fd_step;
        double d = (f(x + h) - f(x - h)) / (2 * h);
        double x2 = d != 0.0 ? x - fx / d : x;
        if (!(x2 > lo && x2 < hi)) {
            x2 = 0.5 * (lo + hi);  // Newton left the bracket
        }
        double f2 = f(x2);
        if ((f2 < 0) == (flo < 0)) {
            lo = x2;
            flo = f2;
        } else {
            hi = x2;
        }
        if (std::fabs(f2) >= std::fabs(fx) && hi - lo < 1e-15 * std::max(1.0, std::fabs(x2))) {
            x = x2;
            fx = f2;
            break;
        }
        x = x2;
        fx = f2;
    }
    r.x = x;
    r.fx = fx;
    r.converged = std::fabs(fx) < opt.f_tol;
    return r;
}

}  // namespace lozi
