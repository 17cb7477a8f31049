#pragma once

#include "virfusion/fusion.hpp"
#include "virfusion/limit.hpp"
#include "virfusion/virasoro.hpp"
#include "virfusion/zhu.hpp"

#include <json.hpp>

#include <stdexcept>

namespace virfusion {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

// {"c":"p/q","h":"p/q","terms":[{"partition":[...],"coeff":"p/q"}]}
Json to_json(const VermaVector& v);
VermaVector verma_vector_from_json(const Json& j);

// {"c":..,"h":..,"poly":[{"i":int,"j":int,"coeff":"p/q"}]}
Json to_json(const ZhuClass& z);

// {"N":0|1,"witness":[i,s]|null}
Json to_json(const FusionAnswer& a);

Json to_json(const LimitRow& row);

} // namespace virfusion
