#include "lozi/kneading.hpp"

#include <cmath>
#include <algorithm>
#include <numeric>

#include "lozi/error.hpp"

namespace lozi {

namespace {

USym sym_of(char ch)
{
    switch (ch) {
    case '+': return USym::Plus;
    case '-': return USym::Minus;
    case '0': return USym::Zero;
    }
    throw ParseError("bad U-itinerary symbol '" + std::string(1, ch) + "'");
}

char char_of(USym s)
{
    return s == USym::Plus ? '+' : s == USym::Minus ? '-' : '0';
}

}  // namespace

UItinerary::UItinerary(std::vector<USym> pre, std::vector<USym> period)
    : pre_(std::move(pre)), per_(std::move(period))
{
    if (per_.empty())
        throw DomainError("UItinerary: empty period");
}

UItinerary UItinerary::parse(std::string_view text)
{
    auto open = text.find('(');
    if (open == std::string_view::npos || text.back() != ')')
        throw ParseError("U-itinerary must look like pre(period): \"" + std::string(text) + "\"");
    std::vector<USym> pre, per;
    for (char ch : text.substr(0, open))
        pre.push_back(sym_of(ch));
    for (char ch : text.substr(open + 1, text.size() - open - 2))
        per.push_back(sym_of(ch));
    if (per.empty())
        throw ParseError("U-itinerary has an empty period: \"" + std::string(text) + "\"");
    return UItinerary(std::move(pre), std::move(per));
}

UItinerary UItinerary::periodic(const Itinerary& I)
{
    std::vector<USym> per;
    for (Sign s : I.symbols())
        per.push_back(s == Sign::Plus ? USym::Plus : USym::Minus);
    return UItinerary({}, std::move(per));
}

std::string UItinerary::str() const
{
    std::string s;
    for (USym x : pre_)
        s.push_back(char_of(x));
    s.push_back('(');
    for (USym x : per_)
        s.push_back(char_of(x));
    s.push_back(')');
    return s;
}

USym UItinerary::at(std::size_t i) const
{
    if (i < pre_.size())
        return pre_[i];
    return per_[(i - pre_.size()) % per_.size()];
}

UItinerary UItinerary::shift(std::size_t k) const
{
    std::vector<USym> pre = pre_, per = per_;
    for (std::size_t i = 0; i < k; ++i) {
        if (!pre.empty())
            pre.erase(pre.begin());
        else
            std::rotate(per.begin(), per.begin() + 1, per.end());
    }
    return UItinerary(std::move(pre), std::move(per));
}

const char* to_string(Order o)
{
    switch (o) {
    case Order::Less: return "Less";
    case Order::Equivalent: return "Equivalent";
    case Order::Greater: return "Greater";
    }
    return "?";
}

int epsilon(std::span<const USym> K)
{
    int e = 1;
    for (USym s : K) {
        if (s == USym::Zero)
            throw DomainError("epsilon: K contains 0");
        if (s == USym::Plus)
            e = -e;
    }
    return e;
}

int epsilon(const Itinerary& K)
{
    int e = 1;
    for (Sign s : K.symbols())
        if (s == Sign::Plus)
            e = -e;
    return e;
}

namespace {

template <class AtI, class AtJ>
Order compare_upto(std::size_t horizon, AtI I, AtJ J)
{
    int e = 1;  // epsilon of the common prefix
    for (std::size_t k = 0; k < horizon; ++k) {
        int P = static_cast<int>(I(k)), Q = static_cast<int>(J(k));
        if (P == 0 && Q == 0)
            return Order::Equivalent;
        if (P != Q)
            return e * P < e * Q ? Order::Less : Order::Greater;
        if (P > 0)
            e = -e;
    }
    return Order::Equivalent;
}

}  // namespace

Order order_compare(const UItinerary& I, const UItinerary& J)
{
    std::size_t horizon = I.preperiod() + J.preperiod() + std::lcm(I.period(), J.period()) + 1;
    return compare_upto(horizon, [&](std::size_t k) { return I.at(k); }, [&](std::size_t k) { return J.at(k); });
}

Order order_compare_prefix(std::span<const USym> I, std::span<const USym> J)
{
    return compare_upto(std::min(I.size(), J.size()), [&](std::size_t k) { return I[k]; },
                        [&](std::size_t k) { return J[k]; });
}

bool is_maximum(const UItinerary& I)
{
    std::size_t n = I.preperiod() + I.period();
    UItinerary s = I;
    for (std::size_t m = 1; m < n; ++m) {
        s = s.shift();
        if (order_compare(s, I) == Order::Greater)
            return false;
    }
    return true;
}

std::vector<USym> tent_code(double a, double x, int length)
{
    std::vector<USym> code;
    code.reserve(length);
    for (int i = 0; i < length; ++i) {
        code.push_back(x > 0 ? USym::Plus : x < 0 ? USym::Minus : USym::Zero);
        x = -a * std::fabs(x) + a - 1.0;
    }
    return code;
}

bool forcing_check_tent(double a, int m, int n1, int n2)
{
    if (!(2 <= n2 && n2 < n1 && n1 < m))
        throw DomainError("forcing_check_tent: need 2 <= n2 < n1 < m");
    if (!(a > 1.0 && a <= 2.0))
        throw DomainError("forcing_check_tent: a must lie in (1, 2]");
    Params p{a, 0.0};
    if (!formal_periodic_point(p, iota(Sign::Plus, m, n1)).admissible())
        return true;
    return formal_periodic_point(p, iota(Sign::Minus, m, n2)).admissible() &&
           formal_periodic_point(p, iota(Sign::Plus, m, n2)).admissible();
}

}  // namespace lozi
