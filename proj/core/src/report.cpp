#include "motivic/report.hpp"

namespace motivic {

void IdentityReport::absorb(const IdentityReport& other)
{
    checks += other.checks;
    if (!other.passed) {
        if (passed) {
            first_mismatch = other.first_mismatch;
        }
        passed = false;
    }
}

std::string monomial_label(const Exponents& e)
{
    if (e.size() == 1) {
        return "t^" + std::to_string(e[0]);
    }
    std::string out = "z^(";
    for (std::size_t i = 0; i < e.size(); ++i) {
        out += (i ? "," : "") + std::to_string(e[i]);
    }
    return out + ")";
}

} // namespace motivic
