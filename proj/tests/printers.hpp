#pragma once

#include "virfusion/rational.hpp"
#include "virfusion/virasoro.hpp"

#include <doctest.h>

namespace doctest {
template <> struct StringMaker<virfusion::Rational> {
    static String convert(const virfusion::Rational& r) { return r.to_string().c_str(); }
};
template <> struct StringMaker<virfusion::VermaVector> {
    static String convert(const virfusion::VermaVector& v) { return v.to_string().c_str(); }
};
template <> struct StringMaker<std::optional<virfusion::VermaVector>> {
    static String convert(const std::optional<virfusion::VermaVector>& v)
    {
        return v ? v->to_string().c_str() : "nullopt";
    }
};
} // namespace doctest
