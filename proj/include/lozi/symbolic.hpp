#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lozi/core_map.hpp"

namespace lozi {

// A finite word over {-,+}. Words used for line iteration may be empty;
// periodic-point routines reject the empty word.
class Itinerary {
public:
    Itinerary() = default;
    explicit Itinerary(std::vector<Sign> symbols) : s_(std::move(symbols)) {}

    static Itinerary parse(std::string_view text);
    static Itinerary repeat(Sign s, int k);

    std::string str() const;
    std::size_t size() const { return s_.size(); }
    bool empty() const { return s_.empty(); }
    Sign operator[](std::size_t i) const { return s_[i]; }
    const std::vector<Sign>& symbols() const { return s_; }

    Itinerary operator+(const Itinerary& o) const;
    Itinerary operator+(Sign s) const;
    bool operator==(const Itinerary& o) const = default;

private:
    std::vector<Sign> s_;
};

struct Mat2 {
    double a11 = 1, a12 = 0, a21 = 0, a22 = 1;

    double det() const { return a11 * a22 - a12 * a21; }
    double trace() const { return a11 + a22; }
    double norm_inf() const;
    Point operator*(Point v) const { return {a11 * v.x + a12 * v.y, a21 * v.x + a22 * v.y}; }
    Mat2 operator*(const Mat2& o) const;
};

// Moduli of the two eigenvalues, larger first.
std::pair<double, double> eigen_moduli(const Mat2& A);

// v -> A v - w
struct AffineMap2 {
    Mat2 A;
    Point w;

    Point operator()(Point v) const { return A * v - w; }
};

struct FormalPeriodicPoint {
    Point point;
    Itinerary itinerary;
    double admissibility = 0.0;
    bool hyperbolic = false;
    double residual = 0.0;

    bool admissible() const { return admissibility >= 0.0; }
};

AffineMap2 branch_map(const Params& p, Sign s);
// Lambda_{I_N} o ... o Lambda_{I_1}
AffineMap2 compose_formal(const Params& p, const Itinerary& I);
FormalPeriodicPoint formal_periodic_point(const Params& p, const Itinerary& I);
double admissibility_value(const Params& p, const Itinerary& I, Point v);
Itinerary iota(Sign sigma, int m, int n);
bool spectral_lower_bound_check(const Params& p, const Itinerary& I);

}  // namespace lozi
