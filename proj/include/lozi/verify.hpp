#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lozi {

struct Check {
    std::string id;
    bool passed = false;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<Check> checks;

    bool passed() const;
};

const std::vector<std::string>& verify_suites();  // cones, orbits, convergence, partition, kneading

// suite is one of verify_suites() or "all"; throws DomainError otherwise
std::vector<SuiteResult> run_verify(const std::string& suite, std::uint64_t seed = 42);

}  // namespace lozi
