#include "lozi/io.hpp"

#include <charconv>

namespace lozi {

std::string fmt_real(double x)
{
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

}  // namespace lozi
