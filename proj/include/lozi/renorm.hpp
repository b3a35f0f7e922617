#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lozi/geometry.hpp"

namespace lozi {

struct StripLabel {
    enum class Kind { B, C, CmnL, CmnR, D };
    Kind kind = Kind::B;
    int m = 0;
    int n = 0;

    std::string str() const;
};

struct Strip {
    BwdLine left;
    BwdLine right;
    StripLabel label;

    bool contains(Point v, double tol = 1e-12) const;
};

enum class Regime { Small, Intermediate, Large };
const char* to_string(Regime r);

inline constexpr int kDefaultMMax = 16;
inline constexpr double kStripTieTol = 1e-12;

// B, C_2 .. C_{m_max}, D in that order.
std::vector<Strip> build_partition(const Params& p, int m_max = kDefaultMMax);
void write_partition_csv(std::ostream& os, const std::vector<Strip>& strips);

bool exists_Cmn(const Params& p, int m, int n);
// The two components of C_{m,n}; empty when exists_Cmn is false.
std::optional<std::pair<Strip, Strip>> subpartition(const Params& p, int m, int n);

Regime classify_regime(const Params& p, int m, int n);
double log_coord(const Params& p, double x);

// Constants bounding r_inf - r_m and u_inf - u_m (log coordinate bounds).
struct LogBounds {
    double c1 = 0.2, c2 = 2.25;
    double c3 = 0, c4 = 0;
};
LogBounds log_bounds(const Params& p);

}  // namespace lozi
