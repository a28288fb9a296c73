#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "fliess/rational.hpp"
#include "fliess/word.hpp"

namespace fliess {

/// Polynomial in the free monoid: sparse map Word -> rational, no stored zeros.
using WordPoly = std::map<Word, Rat>;

/// Shuffle product of two words. The coefficients are nonnegative integers
/// summing to binomial(|u|+|v|, |u|).
WordPoly shuffle_words(const Word& u, const Word& v);

/// Unshuffle coproduct of a word: all splittings (a, b) with multiplicity,
/// dual to shuffle_words. Multiplicities sum to 2^|w|.
std::vector<std::pair<std::pair<Word, Word>, std::int64_t>> unshuffle(const Word& w);

}  // namespace fliess
