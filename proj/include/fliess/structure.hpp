#pragma once

#include <optional>

#include "fliess/series.hpp"

namespace fliess {

/// Class of a series: largest r with supp(c_F) contained in x0^{r-1} X^+.
/// r is absent when the forced part vanishes ("infinity at truncation N");
/// trunc_degree records the degree at which that statement was made.
struct ClassResult {
    std::optional<size_t> r;
    int trunc_degree;

    bool is_infinite() const { return !r.has_value(); }
};

struct RelativeDegreeResult {
    std::optional<size_t> r;  // absent when relative degree is undefined
    int trunc_degree;
};

ClassResult class_of(const Series& c);

/// Relative degree r: class is r and x0^{r-1} x1 lies in the forced support.
RelativeDegreeResult relative_degree(const Series& c);

}  // namespace fliess
