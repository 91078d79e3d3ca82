#ifndef FEWNOMIAL_CONFIG_HPP
#define FEWNOMIAL_CONFIG_HPP

#include <stdexcept>
#include <string>

namespace fewnomial {

enum class PrecisionPolicy {
    DoubleWithEscalation,  // double, one escalation to 113-bit on stagnation
    DoubleOnly,
    Extended,              // 113-bit everywhere
};

struct IsolationConfig {
    double min_width = 1e-12;          // in canonical (0,1) coordinates
    long long max_subdivisions = 1000000;
    PrecisionPolicy precision = PrecisionPolicy::DoubleWithEscalation;
    double tau_rank = 1e-9;            // relative singular-value threshold
    int threads = 1;
    int backmap_refine_iters = 40;     // extra bisections to separate mapped boxes

    void validate() const {
        if (!(min_width > 0)) throw std::invalid_argument("config: min_width must be > 0");
        if (max_subdivisions <= 0) throw std::invalid_argument("config: max_subdivisions must be > 0");
        if (!(tau_rank > 0)) throw std::invalid_argument("config: tau_rank must be > 0");
        if (threads < 1) throw std::invalid_argument("config: threads must be >= 1");
        if (backmap_refine_iters < 0) throw std::invalid_argument("config: backmap_refine_iters < 0");
    }
};

} // namespace fewnomial

#endif
