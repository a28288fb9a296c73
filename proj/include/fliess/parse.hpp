#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "fliess/series.hpp"

namespace fliess {

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

/// Grammar:
///   series    := component (';' component)*
///   component := term (('+'|'-') term)*
///   term      := coeff? word? (at least one present)
///   coeff     := integer | integer '/' integer | decimal
///   word      := ('x' index ('^' power)?)+
/// Decimals are converted exactly to rationals. Whitespace is free.
VectorSeries parse_series(const std::string& text, int num_inputs, int trunc_degree);

/// Canonical text form: graded-lex word order, runs folded as x1^3,
/// coefficient 1 omitted on nonempty words, empty series prints "0",
/// components joined by "; ".
std::string format_series(const Series& s);
std::string format_series(const VectorSeries& s);

/// JSON schema:
/// { "alphabet_inputs": m, "trunc_degree": N,
///   "components": [ [ {"word": [i,...], "coeff": "p/q"}, ... ], ... ] }
VectorSeries read_series_json(std::istream& in);
void write_series_json(std::ostream& out, const VectorSeries& s);

}  // namespace fliess
