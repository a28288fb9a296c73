#include "fliess/structure.hpp"

namespace fliess {

ClassResult class_of(const Series& c) {
    Series forced = c - natural_part(c);
    if (forced.is_zero()) return {std::nullopt, c.trunc()};
    size_t min_prefix = SIZE_MAX;
    for (const auto& [w, coeff] : forced.terms()) {
        size_t p = w.x0_prefix();
        if (p < min_prefix) min_prefix = p;
    }
    return {min_prefix + 1, c.trunc()};
}

RelativeDegreeResult relative_degree(const Series& c) {
    ClassResult cls = class_of(c);
    if (cls.is_infinite()) return {std::nullopt, c.trunc()};
    size_t r = *cls.r;
    Word probe = Word::power(0, static_cast<int>(r) - 1).cat(Word::letter(1));
    Series forced = c - natural_part(c);
    if (forced.coeff(probe) != 0) return {r, c.trunc()};
    return {std::nullopt, c.trunc()};
}

}  // namespace fliess
