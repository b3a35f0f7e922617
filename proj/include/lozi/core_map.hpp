#pragma once

#include <cmath>
#include <utility>

namespace lozi {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline Point operator+(Point p, Point q) { return {p.x + q.x, p.y + q.y}; }
inline Point operator-(Point p, Point q) { return {p.x - q.x, p.y - q.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
inline double dist(Point p, Point q) { return std::hypot(p.x - q.x, p.y - q.y); }

// Minus is the left branch (x <= 0), Plus the right one.
enum class Sign : int { Minus = -1, Plus = 1 };

inline double val(Sign s) { return s == Sign::Plus ? 1.0 : -1.0; }
inline Sign operator-(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
inline char to_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

struct Params {
    double a = 0.0;
    double b = 0.0;

    double c() const { return a - b - 1.0; }
    bool in_P_full() const { return a > b + 1.0 && b >= 0.0 && b <= 1.0; }
    bool in_P_mod() const { return a > 3.0 * b + 1.0 && b >= 0.0 && b <= 1.0; }
    bool in_P_nbd(double b_bar) const { return in_P_mod() && b <= b_bar; }
};

struct Multipliers {
    double lambda = 0.0;
    double mu = 0.0;
};

Point eval(const Params& p, Point v);
Point eval_branch(const Params& p, Sign s, Point v);
// Throws GeometryError at b == 0.
Point eval_branch_inverse(const Params& p, Sign s, Point v);

// (z_-, z_+); throws DomainError outside P_full.
std::pair<Point, Point> fixed_points(const Params& p);
double zeta(const Params& p, Sign s);

// Throws DomainError when a^2 < 4b.
Multipliers multipliers(const Params& p);

void require_P_full(const Params& p, const char* op);
void require_P_mod(const Params& p, const char* op);

}  // namespace lozi
