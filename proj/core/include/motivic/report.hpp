#pragma once

#include <optional>
#include <string>
#include <vector>

#include "motivic/series.hpp"

namespace motivic {

/// First place where the two sides of an identity disagree.
struct Mismatch {
    std::string location; // e.g. "t^3" or "z^(1,0)"
    std::string lhs;
    std::string rhs;
};

/// Outcome of checking one identity.
struct IdentityReport {
    std::string identity;
    bool passed = true;
    std::size_t checks = 0;
    std::optional<Mismatch> first_mismatch;
    std::string detail;

    /// Merges another report's checks into this one (first mismatch wins).
    void absorb(const IdentityReport& other);
};

std::string monomial_label(const Exponents& e);

/// Compares two series coefficientwise up to their common order.
template <class C>
IdentityReport compare_series(const std::string& identity, const TruncatedSeries<C>& lhs,
                              const TruncatedSeries<C>& rhs)
{
    IdentityReport report;
    report.identity = identity;
    report.checks = static_cast<std::size_t>(std::min(lhs.order(), rhs.order())) + 1;
    if (auto diff = first_difference(lhs, rhs)) {
        report.passed = false;
        report.first_mismatch = Mismatch{monomial_label(*diff),
                                         CoefficientTraits<C>::to_string(lhs.coefficient(*diff)),
                                         CoefficientTraits<C>::to_string(rhs.coefficient(*diff))};
    }
    return report;
}

} // namespace motivic
