#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lozi/symbolic.hpp"

namespace lozi {

enum class USym : int { Minus = -1, Zero = 0, Plus = 1 };

// Eventually periodic sequence: preperiod followed by period repeated forever.
class UItinerary {
public:
    UItinerary(std::vector<USym> pre, std::vector<USym> period);

    // "pre(period)", e.g. "+(-)" or "(+-)"
    static UItinerary parse(std::string_view text);
    static UItinerary periodic(const Itinerary& I);

    std::string str() const;
    USym at(std::size_t i) const;
    UItinerary shift(std::size_t k = 1) const;
    std::size_t preperiod() const { return pre_.size(); }
    std::size_t period() const { return per_.size(); }

private:
    std::vector<USym> pre_;
    std::vector<USym> per_;
};

enum class Order { Less, Equivalent, Greater };
const char* to_string(Order o);

int epsilon(std::span<const USym> K);
int epsilon(const Itinerary& K);

Order order_compare(const UItinerary& I, const UItinerary& J);
// Finite words; Equivalent also when no difference shows up within the shorter length.
Order order_compare_prefix(std::span<const USym> I, std::span<const USym> J);
bool is_maximum(const UItinerary& I);

// Signs of the first `length` points of the orbit of x under x -> -a|x| + a - 1.
std::vector<USym> tent_code(double a, double x, int length);

bool forcing_check_tent(double a, int m, int n1, int n2);

}  // namespace lozi
