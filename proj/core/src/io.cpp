#include "motivic/io.hpp"

namespace motivic {

using nlohmann::json;

json to_json(const LaurentPoly& f)
{
    json terms = json::array();
    for (const auto& [e, c] : f.terms()) {
        terms.push_back({e, c.get_str()});
    }
    return {{"terms", std::move(terms)}};
}

LaurentPoly laurent_from_json(const json& j)
{
    require(j.is_object() && j.contains("terms") && j["terms"].is_array(),
            "LaurentPoly JSON must be an object with a \"terms\" array");
    LaurentPoly out;
    for (const auto& term : j["terms"]) {
        require(term.is_array() && term.size() == 2 && term[0].is_number_integer() && term[1].is_string(),
                "LaurentPoly term must be [exponent, \"coefficient\"]");
        Integer c;
        require(c.set_str(term[1].get<std::string>(), 10) == 0, "bad coefficient " + term[1].dump());
        out += LaurentPoly::monomial(c, term[0].get<LaurentPoly::Exponent>());
    }
    return out;
}

json to_json(const Rational& c)
{
    return c.get_str();
}

json to_json(const RationalFn& f)
{
    json num = json::array();
    for (const auto& c : f.numerator()) {
        num.push_back(c.get_str());
    }
    json den = json::array();
    for (const auto& c : f.denominator()) {
        den.push_back(c.get_str());
    }
    return {{"numerator", std::move(num)}, {"denominator", std::move(den)}};
}

Quiver quiver_from_json(const json& j)
{
    require(j.is_object() && j.contains("vertices") && j["vertices"].is_number_integer(),
            "quiver JSON must contain an integer \"vertices\"");
    const auto k = j["vertices"].get<long>();
    require(k >= 1, "quiver must have at least one vertex");
    std::vector<Quiver::Arrow> arrows;
    if (j.contains("arrows")) {
        require(j["arrows"].is_array(), "\"arrows\" must be an array");
        for (const auto& a : j["arrows"]) {
            require(a.is_array() && a.size() == 2 && a[0].is_number_integer() && a[1].is_number_integer(),
                    "arrow must be [source, target]");
            const auto s = a[0].get<long>();
            const auto t = a[1].get<long>();
            require(s >= 0 && t >= 0, "arrow endpoints must be non-negative");
            arrows.emplace_back(static_cast<std::size_t>(s), static_cast<std::size_t>(t));
        }
    }
    return Quiver(static_cast<std::size_t>(k), std::move(arrows));
}

json to_json(const Quiver& quiver)
{
    json arrows = json::array();
    for (const auto& [s, t] : quiver.arrows()) {
        arrows.push_back({s, t});
    }
    return {{"vertices", quiver.vertex_count()}, {"arrows", std::move(arrows)}};
}

json to_json(const IdentityReport& report)
{
    json out = {{"version", kFormatVersion},
                {"identity", report.identity},
                {"passed", report.passed},
                {"checks", report.checks},
                {"detail", report.detail}};
    if (report.first_mismatch) {
        out["first_mismatch"] = {{"location", report.first_mismatch->location},
                                 {"lhs", report.first_mismatch->lhs},
                                 {"rhs", report.first_mismatch->rhs}};
    }
    return out;
}

TruncatedSeries<LaurentPoly> motive_series_from_json(const json& j)
{
    require(j.is_object() && j.contains("arity") && j.contains("order") && j.contains("terms"),
            "series JSON must contain arity, order and terms");
    require(j.value("coefficient_ring", std::string()) == CoefficientTraits<LaurentPoly>::name,
            "series JSON does not hold LaurentPoly coefficients");
    TruncatedSeries<LaurentPoly> out(j["arity"].get<std::size_t>(), j["order"].get<int>());
    for (const auto& term : j["terms"]) {
        require(term.is_array() && term.size() == 2, "series term must be [exponents, coefficient]");
        out.add_term(term[0].get<Exponents>(), laurent_from_json(term[1]));
    }
    return out;
}

} // namespace motivic
