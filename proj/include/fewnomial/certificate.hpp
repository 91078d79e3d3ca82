#ifndef FEWNOMIAL_CERTIFICATE_HPP
#define FEWNOMIAL_CERTIFICATE_HPP

#include <optional>
#include <string>
#include <vector>

#include "interval.hpp"

namespace fewnomial {

enum class CertStatus {
    UniqueNondegenerate,  // sign change at the faces + interval derivative/Jacobian excludes 0
    SignChangeOnly,       // at least one root certified, uniqueness not
    PossiblyDegenerate,   // unique-root evidence failed the Jacobian test
    Unresolved,           // shrunk to min_width without a verdict
};

inline const char* to_string(CertStatus s) {
    switch (s) {
        case CertStatus::UniqueNondegenerate: return "UNIQUE_NONDEGENERATE";
        case CertStatus::SignChangeOnly: return "SIGN_CHANGE_ONLY";
        case CertStatus::PossiblyDegenerate: return "POSSIBLY_DEGENERATE";
        case CertStatus::Unresolved: return "UNRESOLVED";
    }
    return "?";
}

// midpoint evaluation record kept with certified boxes
struct EvalWitness {
    std::vector<double> point;
    std::vector<double> residuals;
};

struct RootCertificate {
    Box box;
    CertStatus status = CertStatus::Unresolved;
    std::optional<EvalWitness> witness;
};

inline bool counts_as_unique(CertStatus s) { return s == CertStatus::UniqueNondegenerate; }

} // namespace fewnomial

#endif
