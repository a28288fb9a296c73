#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fliess/rational.hpp"
#include "fliess/word.hpp"
#include "fliess/words.hpp"

namespace fliess {

enum class StructuralKind { Proper, NonProper, PurelyImproper };

/// Formal power series truncated at degree N: sparse map Word -> rational.
/// Immutable in spirit; the mutating helpers exist for construction only.
class Series {
public:
    Series(int num_inputs, int trunc_degree);

    static Series zero(int m, int n) { return Series(m, n); }
    static Series constant(int m, int n, Rat value);
    static Series one(int m, int n) { return constant(m, n, 1); }
    static Series monomial(int m, int n, const Word& w, Rat coeff = 1);

    int inputs() const { return num_inputs_; }
    Alphabet alphabet() const { return Alphabet{num_inputs_}; }
    int trunc() const { return trunc_; }
    const std::map<Word, Rat>& terms() const { return terms_; }

    Rat coeff(const Word& w) const;
    Rat constant_term() const { return coeff(Word::empty()); }
    bool is_zero() const { return terms_.empty(); }
    bool is_proper() const { return constant_term() == 0; }

    /// Adds into the coefficient of w; words longer than the truncation
    /// degree are dropped, zero results are erased.
    void add_term(const Word& w, const Rat& c);
    void add_poly(const WordPoly& p, const Rat& scale = 1);

    Series& operator+=(const Series& other);
    Series& operator-=(const Series& other);
    Series operator+(const Series& other) const;
    Series operator-(const Series& other) const;
    Series operator-() const;
    Series operator*(const Rat& scalar) const;

    bool operator==(const Series& other) const = default;

private:
    int num_inputs_;
    int trunc_;
    std::map<Word, Rat> terms_;
};

Series operator*(const Rat& scalar, const Series& s);

/// Shuffle product, truncated at the common degree N.
Series shuffle(const Series& a, const Series& b);

/// Catenation product (c.d)(eta) = sum over eta = zeta.mu of c(zeta) d(mu).
Series cat(const Series& a, const Series& b);

/// Shuffle inverse of a series with nonzero constant term:
/// alpha^{-1} sum_k (-c'/alpha)^{shuffle k}. Throws std::domain_error on a
/// zero constant term.
Series shuffle_inverse(const Series& c);

/// result(q) = c(p q); truncation degree drops to N - |p|.
Series left_shift(const Word& p, const Series& c);

/// Natural part: support restricted to words in {x0}*.
Series natural_part(const Series& c);

std::optional<size_t> valuation(const Series& c);  // nullopt = +infinity (zero series)

/// Vector of series sharing alphabet and truncation degree.
class VectorSeries {
public:
    explicit VectorSeries(std::vector<Series> components);
    VectorSeries(int m, int n, int dim);  // zero vector series

    static VectorSeries ones(int m, int n, int dim);
    static VectorSeries scalar(Series s) { return VectorSeries({std::move(s)}); }

    int dim() const { return static_cast<int>(components_.size()); }
    int inputs() const { return components_.front().inputs(); }
    int trunc() const { return components_.front().trunc(); }

    const Series& operator[](int j) const { return components_[static_cast<size_t>(j)]; }
    Series& operator[](int j) { return components_[static_cast<size_t>(j)]; }
    const std::vector<Series>& components() const { return components_; }

    VectorSeries operator+(const VectorSeries& other) const;
    VectorSeries operator-(const VectorSeries& other) const;
    bool operator==(const VectorSeries& other) const = default;

    bool is_purely_improper() const;
    bool is_proper() const;

private:
    std::vector<Series> components_;
};

/// Componentwise shuffle.
VectorSeries shuffle(const VectorSeries& c, const VectorSeries& d);

/// Adorned shuffle: (c sh_k d)_j = c_j sh d_k. k is 1-based.
VectorSeries adorned_shuffle(const VectorSeries& c, const VectorSeries& d, int k);

/// Componentwise shuffle inverse; requires purely improper input.
VectorSeries shuffle_inverse(const VectorSeries& c);

std::optional<size_t> valuation(const VectorSeries& c);

/// sigma^val(c-d) with sigma = 1/2; zero when c = d up to truncation.
Rat ultrametric_distance(const VectorSeries& c, const VectorSeries& d);

/// c = natural + forced, natural supported on {x0}* only.
std::pair<VectorSeries, VectorSeries> natural_forced_split(const VectorSeries& c);

StructuralKind structural_kind(const VectorSeries& c);

}  // namespace fliess
