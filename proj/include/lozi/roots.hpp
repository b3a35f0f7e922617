#pragma once

#include <functional>

namespace lozi {

struct RootOptions {
    double bracket_tol = 1e-6;  // bisection phase stops at this width
    double f_tol = 1e-11;       // Newton phase stops at |f| below this
    double fd_step = 1e-7;      // central difference step for f'
    int max_iter = 200;
};

struct RootResult {
    double x = 0.0;
    double fx = 0.0;
    int iterations = 0;
    bool converged = false;
};

// f(lo) and f(hi) must have opposite signs (or one of them is zero).
RootResult bisect_newton(const std::function<double(double)>& f, double lo, double hi,
                         const RootOptions& opt = {});

}  // namespace lozi
