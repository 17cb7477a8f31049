#pragma once

#include "virfusion/rational.hpp"

#include <vector>

namespace virfusion {

enum class SolveStatus { Unique, Inconsistent, Underdetermined };

struct SolveResult {
    SolveStatus status;
    std::vector<Rational> solution;  // populated only when status == Unique
    int rank = 0;
};

// Solves A x = b exactly by Gauss-Jordan elimination. A is row-major with
// `columns` entries per row; rows may outnumber columns.
SolveResult solve_linear(std::vector<std::vector<Rational>> a, std::vector<Rational> b, int columns);

} // namespace virfusion
