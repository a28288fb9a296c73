#include "fliess/series.hpp"

#include <stdexcept>

namespace fliess {

namespace {

void require_compatible(const Series& a, const Series& b) {
    if (a.inputs() != b.inputs()) throw std::invalid_argument("alphabet mismatch");
    if (a.trunc() != b.trunc()) throw std::invalid_argument("truncation degree mismatch");
}

}  // namespace

Series::Series(int num_inputs, int trunc_degree) : num_inputs_(num_inputs), trunc_(trunc_degree) {
    if (num_inputs < 0) throw std::invalid_argument("negative number of inputs");
    if (trunc_degree < 0) throw std::invalid_argument("negative truncation degree");
}

Series Series::constant(int m, int n, Rat value) {
    Series s(m, n);
    s.add_term(Word::empty(), value);
    return s;
}

Series Series::monomial(int m, int n, const Word& w, Rat coeff) {
    Series s(m, n);
    if (!w.fits(s.alphabet())) throw std::invalid_argument("word uses letters outside alphabet");
    s.add_term(w, coeff);
    return s;
}

Rat Series::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rat{0} : it->second;
}

void Series::add_term(const Word& w, const Rat& c) {
    if (c == 0 || w.length() > static_cast<size_t>(trunc_)) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

void Series::add_poly(const WordPoly& p, const Rat& scale) {
    if (scale == 0) return;
    for (const auto& [w, c] : p) add_term(w, c * scale);
}

Series& Series::operator+=(const Series& other) {
    require_compatible(*this, other);
    for (const auto& [w, c] : other.terms_) add_term(w, c);
    return *this;
}

Series& Series::operator-=(const Series& other) {
    require_compatible(*this, other);
    for (const auto& [w, c] : other.terms_) add_term(w, -c);
    return *this;
}

Series Series::operator+(const Series& other) const {
    Series out = *this;
    out += other;
    return out;
}

Series Series::operator-(const Series& other) const {
    Series out = *this;
    out -= other;
    return out;
}

Series Series::operator-() const {
    Series out(num_inputs_, trunc_);
    for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
    return out;
}

Series Series::operator*(const Rat& scalar) const {
    Series out(num_inputs_, trunc_);
    if (scalar == 0) return out;
    for (const auto& [w, c] : terms_) out.terms_.emplace(w, c * scalar);
    return out;
}

Series operator*(const Rat& scalar, const Series& s) { return s * scalar; }

Series shuffle(const Series& a, const Series& b) {
    require_compatible(a, b);
    Series out(a.inputs(), a.trunc());
    size_t n = static_cast<size_t>(a.trunc());
    for (const auto& [u, cu] : a.terms()) {
        for (const auto& [v, cv] : b.terms()) {
            if (u.length() + v.length() > n) continue;
            out.add_poly(shuffle_words(u, v), cu * cv);
        }
    }
    return out;
}

Series cat(const Series& a, const Series& b) {
    require_compatible(a, b);
    Series out(a.inputs(), a.trunc());
    size_t n = static_cast<size_t>(a.trunc());
    for (const auto& [u, cu] : a.terms()) {
        for (const auto& [v, cv] : b.terms()) {
            if (u.length() + v.length() > n) continue;
            out.add_term(u.cat(v), cu * cv);
        }
    }
    return out;
}

Series shuffle_inverse(const Series& c) {
    Rat alpha = c.constant_term();
    if (alpha == 0) throw std::domain_error("shuffle inverse requires a nonzero constant term");
    Series proper = c;
    proper.add_term(Word::empty(), -alpha);
    Series base = proper * (Rat{-1} / alpha);  // -c'/alpha, proper
    Series out = Series::one(c.inputs(), c.trunc());
    Series pw = Series::one(c.inputs(), c.trunc());
    for (int k = 1; k <= c.trunc(); ++k) {
        pw = shuffle(pw, base);
        if (pw.is_zero()) break;
        out += pw;
    }
    return out * (Rat{1} / alpha);
}

Series left_shift(const Word& p, const Series& c) {
    int n = c.trunc() - static_cast<int>(p.length());
    if (n < 0) n = 0;
    Series out(c.inputs(), n);
    size_t plen = p.length();
    for (const auto& [w, coeff] : c.terms()) {
        if (w.length() < plen) continue;
        bool prefix = true;
        for (size_t k = 0; k < plen; ++k)
            if (w[k] != p[k]) { prefix = false; break; }
        if (!prefix) continue;
        out.add_term(Word(std::vector<int>(w.letters().begin() + static_cast<long>(plen),
                                           w.letters().end())),
                     coeff);
    }
    return out;
}

Series natural_part(const Series& c) {
    Series out(c.inputs(), c.trunc());
    for (const auto& [w, coeff] : c.terms())
        if (w.all_x0()) out.add_term(w, coeff);
    return out;
}

std::optional<size_t> valuation(const Series& c) {
    if (c.is_zero()) return std::nullopt;
    return c.terms().begin()->first.length();  // graded order: shortest word first
}

VectorSeries::VectorSeries(std::vector<Series> components) : components_(std::move(components)) {
    if (components_.empty()) throw std::invalid_argument("empty vector series");
    for (const auto& s : components_) require_compatible(components_.front(), s);
}

VectorSeries::VectorSeries(int m, int n, int dim)
    : components_(static_cast<size_t>(dim), Series(m, n)) {
    if (dim <= 0) throw std::invalid_argument("vector series dimension must be positive");
}

VectorSeries VectorSeries::ones(int m, int n, int dim) {
    VectorSeries out(m, n, dim);
    for (auto& s : out.components_) s = Series::one(m, n);
    return out;
}

VectorSeries VectorSeries::operator+(const VectorSeries& other) const {
    if (dim() != other.dim()) throw std::invalid_argument("dimension mismatch");
    std::vector<Series> out;
    out.reserve(components_.size());
    for (int j = 0; j < dim(); ++j) out.push_back(components_[static_cast<size_t>(j)] + other[j]);
    return VectorSeries(std::move(out));
}

VectorSeries VectorSeries::operator-(const VectorSeries& other) const {
    if (dim() != other.dim()) throw std::invalid_argument("dimension mismatch");
    std::vector<Series> out;
    out.reserve(components_.size());
    for (int j = 0; j < dim(); ++j) out.push_back(components_[static_cast<size_t>(j)] - other[j]);
    return VectorSeries(std::move(out));
}

bool VectorSeries::is_purely_improper() const {
    for (const auto& s : components_)
        if (s.constant_term() == 0) return false;
    return true;
}

bool VectorSeries::is_proper() const {
    for (const auto& s : components_)
        if (s.constant_term() != 0) return false;
    return true;
}

VectorSeries shuffle(const VectorSeries& c, const VectorSeries& d) {
    if (c.dim() != d.dim()) throw std::invalid_argument("dimension mismatch");
    std::vector<Series> out;
    out.reserve(static_cast<size_t>(c.dim()));
    for (int j = 0; j < c.dim(); ++j) out.push_back(shuffle(c[j], d[j]));
    return VectorSeries(std::move(out));
}

VectorSeries adorned_shuffle(const VectorSeries& c, const VectorSeries& d, int k) {
    if (k < 1 || k > d.dim()) throw std::invalid_argument("adorned shuffle index out of range");
    std::vector<Series> out;
    out.reserve(static_cast<size_t>(c.dim()));
    for (int j = 0; j < c.dim(); ++j) out.push_back(shuffle(c[j], d[k - 1]));
    return VectorSeries(std::move(out));
}

VectorSeries shuffle_inverse(const VectorSeries& c) {
    if (!c.is_purely_improper())
        throw std::domain_error("shuffle inverse requires a purely improper vector series");
    std::vector<Series> out;
    out.reserve(static_cast<size_t>(c.dim()));
    for (int j = 0; j < c.dim(); ++j) out.push_back(shuffle_inverse(c[j]));
    return VectorSeries(std::move(out));
}

std::optional<size_t> valuation(const VectorSeries& c) {
    std::optional<size_t> best;
    for (const auto& s : c.components()) {
        auto v = valuation(s);
        if (v && (!best || *v < *best)) best = v;
    }
    return best;
}

Rat ultrametric_distance(const VectorSeries& c, const VectorSeries& d) {
    auto v = valuation(c - d);
    if (!v) return 0;
    Rat out = 1;
    for (size_t k = 0; k < *v; ++k) out /= 2;
    return out;
}

std::pair<VectorSeries, VectorSeries> natural_forced_split(const VectorSeries& c) {
    std::vector<Series> nat, forced;
    nat.reserve(static_cast<size_t>(c.dim()));
    forced.reserve(static_cast<size_t>(c.dim()));
    for (int j = 0; j < c.dim(); ++j) {
        Series n = natural_part(c[j]);
        forced.push_back(c[j] - n);
        nat.push_back(std::move(n));
    }
    return {VectorSeries(std::move(nat)), VectorSeries(std::move(forced))};
}

StructuralKind structural_kind(const VectorSeries& c) {
    if (c.is_proper()) return StructuralKind::Proper;
    if (c.is_purely_improper()) return StructuralKind::PurelyImproper;
    return StructuralKind::NonProper;
}

}  // namespace fliess
