#pragma once

#include <string>

namespace lozi {

// Shortest representation that round-trips; stable across runs.
std::string fmt_real(double x);

}  // namespace lozi
