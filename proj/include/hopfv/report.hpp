#pragma once

#include <string>
#include <vector>

namespace hopfv {

// One verified identity. `id` is a stable anchor naming the identity in domain
// terms ("coassoc:K3", "qybe", "frt:x+.x1"); residual fields describe what was
// left when a check failed (term count and the highest order seen).
struct CheckResult {
    std::string id;
    bool pass = false;
    std::size_t residual_terms = 0;
    int residual_order = -1;
    double wall_ms = 0.0;
    std::string note;
};

struct Report {
    std::string suite;
    std::vector<CheckResult> checks;
    double wall_ms = 0.0;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    void add(CheckResult c) { checks.push_back(std::move(c)); }
    std::size_t failed_count() const {
        std::size_t n = 0;
        for (const auto& c : checks)
            if (!c.pass) ++n;
        return n;
    }
};

} // namespace hopfv
