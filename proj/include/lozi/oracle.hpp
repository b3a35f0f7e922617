#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lozi/core_map.hpp"
#include "lozi/symbolic.hpp"

namespace lozi {

struct BrutePoint {
    Point point;
    Itinerary coding;          // signs of the genuine orbit, x >= 0 coded +
    bool near_critical = false;  // some orbit point has |x| < 1e-9
};

// Newton on Lambda^period(v) - v with the genuine Jacobian. Seeds: a
// grid_n x grid_n grid on [-2,2]^2, the points found for each divisor of
// period, and 20000 points of a bounded orbit if one exists.
// Duplicates within 1e-7 are merged.
std::vector<BrutePoint> brute_periodic(const Params& p, int period, int grid_n = 60);

struct ConeReport {
    bool ok = true;
    long checked = 0;
    double worst_slack = 0.0;  // most negative margin seen (relative)
    std::string note;
};

ConeReport cone_check(const Params& p, int samples, std::mt19937_64& rng);
ConeReport cone_check(const Params& p, int samples, std::uint64_t seed = 0);

struct TrappingRegion {
    Point z_minus;  // chi meets phi_1
    Point u_inf;    // phi_1 meets phi_2, equals (lambda-1, 0)
    Point apex;     // chi meets phi_2, second quadrant
    bool contains(Point v, double tol = 1e-9) const;
};

TrappingRegion trapping_region(const Params& p);
bool in_escape_set(const Params& p, Point v);

enum class OrbitKind { EscapesMinusInfinity, TrappedInT, Unclassified };
const char* to_string(OrbitKind k);

struct OrbitClass {
    OrbitKind kind = OrbitKind::Unclassified;
    long witness = -1;
    Point last;
};

OrbitClass classify_orbit(const Params& p, Point v, long max_iter = 100000);

}  // namespace lozi
