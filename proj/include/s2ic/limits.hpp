// ─────────────────────────────────────────────────────────────────────────────
//  limits.hpp — resource budgets shared by the decision procedures
//
//  Every potentially long-running entry point accepts a Limits value.  The
//  deadline clock starts when the Limits object is constructed (the CLI makes
//  one per invocation); expensive loops call check() at their heads and bail
//  out with ResourceLimitError, which callers turn into "ran out of budget"
//  reports carrying whatever partial statistics were gathered.
// ─────────────────────────────────────────────────────────────────────────────
#pragma once

#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace s2ic {

struct ResourceLimitError : std::runtime_error {
    std::string where;
    ResourceLimitError(const std::string& where_, const std::string& detail)
        : std::runtime_error("resource limit exceeded [" + where_ + "]: " + detail),
          where(where_) {}
};

struct Limits {
    int max_atoms = 512;                 // formula atoms a single problem may use
    int max_vars = 24;                   // term variables per satisfiability query
    uint64_t max_pair_types = 1u << 20;  // deduplicated pair types per elimination
    uint64_t max_classes = 1u << 16;     // realizable classes per elimination
    uint64_t max_families = 1u << 16;    // frontier width of the choice-family search
    double timeout_s = 3600.0;           // wall-clock budget
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    double elapsed_s() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    bool expired() const { return elapsed_s() > timeout_s; }
    void check(const char* where) const {
        if (expired())
            throw ResourceLimitError(where, "wall-clock budget of " +
                                                std::to_string(timeout_s) + "s exhausted");
    }
    void check_atoms(const char* where, size_t atoms) const {
        if (atoms > static_cast<size_t>(max_atoms))
            throw ResourceLimitError(where, "formula uses " + std::to_string(atoms) +
                                                " atoms; limit is " + std::to_string(max_atoms));
    }
};

}  // namespace s2ic
