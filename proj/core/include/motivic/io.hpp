#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "motivic/laurent.hpp"
#include "motivic/quiver.hpp"
#include "motivic/rational_fn.hpp"
#include "motivic/report.hpp"
#include "motivic/series.hpp"

namespace motivic {

inline constexpr int kFormatVersion = 1;

/// {"terms": [[exponent, "coefficient"], ...]} sorted by exponent.
nlohmann::json to_json(const LaurentPoly& f);
LaurentPoly laurent_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Rational& c);

/// {"numerator": [...], "denominator": [...]} as dense decimal-string lists.
nlohmann::json to_json(const RationalFn& f);

/// Quiver input: {"vertices": k, "arrows": [[s, t], ...]}.
Quiver quiver_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Quiver& quiver);

nlohmann::json to_json(const IdentityReport& report);

/// {"version": 1, "coefficient_ring": ..., "arity": k, "order": N,
///  "terms": [[[e_0, ..], coefficient], ...]} in graded order.
template <class C>
nlohmann::json to_json(const TruncatedSeries<C>& s)
{
    nlohmann::json terms = nlohmann::json::array();
    s.for_each_term([&](const Exponents& e, const C& c) { terms.push_back({e, to_json(c)}); });
    return {{"version", kFormatVersion},
            {"coefficient_ring", CoefficientTraits<C>::name},
            {"arity", s.arity()},
            {"order", s.order()},
            {"terms", std::move(terms)}};
}

/// Reads a LaurentPoly-coefficient series written by to_json.
TruncatedSeries<LaurentPoly> motive_series_from_json(const nlohmann::json& j);

} // namespace motivic
