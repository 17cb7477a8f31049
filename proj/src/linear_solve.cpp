#include "virfusion/linear_solve.hpp"

#include <stdexcept>
#include <utility>

namespace virfusion {

SolveResult solve_linear(std::vector<std::vector<Rational>> a, std::vector<Rational> b, int columns)
{
    if (a.size() != b.size())
        throw std::invalid_argument("solve_linear: row count mismatch");
    const size_t rows = a.size();
    std::vector<int> pivot_col;
    size_t r = 0;
    for (int col = 0; col < columns && r < rows; ++col) {
        size_t pr = r;
        while (pr < rows && a[pr][col].is_zero())
            ++pr;
        if (pr == rows)
            continue;
        std::swap(a[r], a[pr]);
        std::swap(b[r], b[pr]);
        Rational inv = Rational(1) / a[r][col];
        for (int j = col; j < columns; ++j)
            a[r][j] *= inv;
        b[r] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][col].is_zero())
                continue;
            Rational f = a[i][col];
            for (int j = col; j < columns; ++j)
                if (!a[r][j].is_zero())
                    a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        pivot_col.push_back(col);
        ++r;
    }
    SolveResult res{SolveStatus::Unique, {}, static_cast<int>(r)};
    for (size_t i = r; i < rows; ++i)
        if (!b[i].is_zero()) {
            res.status = SolveStatus::Inconsistent;
            return res;
        }
    if (static_cast<int>(r) < columns) {
        res.status = SolveStatus::Underdetermined;
        return res;
    }
    res.solution.assign(static_cast<size_t>(columns), Rational(0));
    for (size_t i = 0; i < r; ++i)
        res.solution[static_cast<size_t>(pivot_col[i])] = b[i];
    return res;
}

} // namespace virfusion
