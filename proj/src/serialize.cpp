#include "virfusion/serialize.hpp"

namespace virfusion {

Json rational_to_json(const Rational& r)
{
    return r.to_string();
}

Rational rational_from_json(const Json& j)
{
    if (!j.is_string())
        throw SchemaError("expected a rational string, got " + j.dump());
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw SchemaError(e.what());
    }
}

Json to_json(const VermaVector& v)
{
    Json terms = Json::array();
    for (const auto& [word, coeff] : v.terms())
        terms.push_back({{"partition", word.parts()}, {"coeff", rational_to_json(coeff)}});
    return {{"c", rational_to_json(v.params().c)}, {"h", rational_to_json(v.params().h)}, {"terms", terms}};
}

VermaVector verma_vector_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("c") || !j.contains("h") || !j.contains("terms") || !j["terms"].is_array())
        throw SchemaError("VermaVector: expected {\"c\",\"h\",\"terms\"}");
    VermaVector v(HighestWeightParams{rational_from_json(j["c"]), rational_from_json(j["h"])});
    for (const auto& term : j["terms"]) {
        if (!term.is_object() || !term.contains("partition") || !term["partition"].is_array())
            throw SchemaError("VermaVector: malformed term " + term.dump());
        std::vector<int> parts;
        for (const auto& p : term["partition"]) {
            if (!p.is_number_integer())
                throw SchemaError("VermaVector: non-integer part in " + term.dump());
            parts.push_back(p.get<int>());
        }
        try {
            v.add(Partition(parts), rational_from_json(term.value("coeff", Json())));
        } catch (const std::invalid_argument& e) {
            throw SchemaError(std::string("VermaVector: ") + e.what());
        }
    }
    return v;
}

Json to_json(const ZhuClass& z)
{
    Json poly = Json::array();
    for (const auto& [e, coeff] : z.poly.terms())
        poly.push_back({{"i", e.first}, {"j", e.second}, {"coeff", rational_to_json(coeff)}});
    return {{"c", rational_to_json(z.source_params.c)}, {"h", rational_to_json(z.source_params.h)}, {"poly", poly}};
}

Json to_json(const FusionAnswer& a)
{
    Json out;
    out["N"] = a.value;
    if (a.witness)
        out["witness"] = {a.witness->first, a.witness->second};
    else
        out["witness"] = nullptr;
    return out;
}

Json to_json(const LimitRow& row)
{
    Json h = Json::array();
    for (const auto& w : row.h_k)
        h.push_back(rational_to_json(w));
    return {{"k", row.k},
            {"c", rational_to_json(row.c_k)},
            {"h", h},
            {"fusion_allowed", row.fusion_allowed},
            {"slot1_null_coeff", rational_to_json(row.slot1_null_coeff)}};
}

} // namespace virfusion
