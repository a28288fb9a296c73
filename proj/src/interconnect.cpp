#include "fliess/interconnect.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace fliess {

namespace {

Word suffix_from(const Word& w, size_t pos) {
    return Word(std::vector<int>(w.letters().begin() + static_cast<long>(pos), w.letters().end()));
}

// x0 . s for a series s (catenate a single letter in front).
Series prepend_letter(int letter, const Series& s) {
    Series out(s.inputs(), s.trunc());
    for (const auto& [w, c] : s.terms()) out.add_term(w.prepend(letter), c);
    return out;
}

// psi_d(eta)(1), memoized over suffixes of eta. eta lives over X', the
// result over d's alphabet.
const Series& psi_eval(const Word& eta, size_t pos, const VectorSeries& d,
                       std::map<Word, Series>& memo) {
    Word suffix = suffix_from(eta, pos);
    if (auto it = memo.find(suffix); it != memo.end()) return it->second;
    Series value = [&] {
        if (pos == eta.length()) return Series::one(d.inputs(), d.trunc());
        const Series& rest = psi_eval(eta, pos + 1, d, memo);
        int letter = eta[pos];
        if (letter == 0) return prepend_letter(0, rest);
        return prepend_letter(0, shuffle(d[letter - 1], rest));
    }();
    return memo.emplace(std::move(suffix), std::move(value)).first->second;
}

// eta <- d, memoized over suffixes of eta; everything over d's alphabet.
const Series& mixed_eval(const Word& eta, size_t pos, const VectorSeries& d,
                         std::map<Word, Series>& memo) {
    Word suffix = suffix_from(eta, pos);
    if (auto it = memo.find(suffix); it != memo.end()) return it->second;
    Series value = [&] {
        if (pos == eta.length()) return Series::one(d.inputs(), d.trunc());
        const Series& rest = mixed_eval(eta, pos + 1, d, memo);
        int letter = eta[pos];
        if (letter == 0) return prepend_letter(0, rest);
        return prepend_letter(letter, shuffle(d[letter - 1], rest));
    }();
    return memo.emplace(std::move(suffix), std::move(value)).first->second;
}

}  // namespace

VectorSeries compose(const VectorSeries& c, const VectorSeries& d) {
    if (c.inputs() != d.dim())
        throw std::invalid_argument("compose: left factor needs one input letter per component of the right factor");
    if (c.trunc() != d.trunc()) throw std::invalid_argument("truncation degree mismatch");
    std::map<Word, Series> memo;
    VectorSeries out(d.inputs(), d.trunc(), c.dim());
    for (int j = 0; j < c.dim(); ++j)
        for (const auto& [eta, coeff] : c[j].terms())
            out[j] += psi_eval(eta, 0, d, memo) * coeff;
    return out;
}

VectorSeries mixed_compose(const VectorSeries& c, const VectorSeries& d) {
    if (c.inputs() != d.dim())
        throw std::invalid_argument("mixed compose: alphabet of the left factor must have one input per component of the right factor");
    if (c.inputs() != d.inputs() || c.trunc() != d.trunc())
        throw std::invalid_argument("mixed compose: alphabet or truncation mismatch");
    std::map<Word, Series> memo;
    VectorSeries out(d.inputs(), d.trunc(), c.dim());
    for (int j = 0; j < c.dim(); ++j)
        for (const auto& [eta, coeff] : c[j].terms())
            out[j] += mixed_eval(eta, 0, d, memo) * coeff;
    return out;
}

VectorSeries star(const VectorSeries& c, const VectorSeries& d) {
    return shuffle(d, mixed_compose(c, d));
}

VectorSeries star_inverse(const VectorSeries& d) {
    for (int i = 0; i < d.dim(); ++i)
        if (d[i].constant_term() == 0)
            throw std::domain_error("component " + std::to_string(i + 1) +
                                    " has zero constant term");
    VectorSeries dinv = shuffle_inverse(d);
    VectorSeries e = VectorSeries::ones(d.inputs(), d.trunc(), d.dim());
    for (int k = 0; k <= d.trunc(); ++k) {
        VectorSeries next = mixed_compose(dinv, e);
        if (next == e) break;
        e = std::move(next);
    }
    return e;
}

VectorSeries feedback(const VectorSeries& c, const VectorSeries& d) {
    for (int i = 0; i < d.dim(); ++i)
        if (d[i].constant_term() == 0)
            throw std::domain_error("feedback: component " + std::to_string(i + 1) +
                                    " of the feedback series has zero constant term");
    if (d.dim() != c.inputs() || d.inputs() != c.dim())
        throw std::invalid_argument("feedback: dimension/alphabet mismatch between plant and feedback series");
    VectorSeries e = star_inverse(compose(shuffle_inverse(d), c));
    return mixed_compose(c, e);
}

}  // namespace fliess
