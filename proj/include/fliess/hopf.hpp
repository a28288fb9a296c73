#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fliess/series.hpp"

namespace fliess {

/// Coordinate function a^j_eta: extracts the coefficient of word eta in
/// component j (1-based) of a vector series.
struct CoordFn {
    int component = 1;
    Word word;

    size_t degree() const { return word.length(); }
    std::string str() const;

    bool operator==(const CoordFn& other) const = default;
    std::strong_ordering operator<=>(const CoordFn& other) const;
};

/// Commutative monomial of coordinate functions; the empty multiset is the
/// unit of H. Factors a^j_1 are never stored (quotient by the bi-ideal).
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(CoordFn a);
    explicit Monomial(std::vector<CoordFn> factors);

    static Monomial unit() { return Monomial{}; }

    bool is_unit() const { return factors_.empty(); }
    size_t degree() const;
    const std::vector<CoordFn>& factors() const { return factors_; }

    Monomial times(const Monomial& other) const;
    Monomial times(const CoordFn& a) const;

    std::string str() const;

    bool operator==(const Monomial& other) const = default;
    std::strong_ordering operator<=>(const Monomial& other) const;

private:
    std::vector<CoordFn> factors_;  // kept sorted
};

/// Rational linear combination of monomials: an element of H.
using HElem = std::map<Monomial, Rat>;
/// Element of H (x) H.
using HTensor = std::map<std::pair<Monomial, Monomial>, Rat>;

HElem h_one();
HElem h_gen(const CoordFn& a);
HElem h_from(const Monomial& mono, Rat coeff = 1);
void h_add(HElem& target, const Monomial& mono, const Rat& coeff);
void ht_add(HTensor& target, const Monomial& left, const Monomial& right, const Rat& coeff);
HElem h_mul(const HElem& a, const HElem& b);
std::string h_str(const HElem& h);
std::string ht_str(const HTensor& t);

/// theta_k: prepends the letter x_k to the coordinate's word.
CoordFn theta(int k, const CoordFn& a);

/// Unshuffle coproduct lifted to coordinate functions, extended
/// multiplicatively to monomials and linearly.
HTensor delta_shuffle(const HElem& h);

/// Coaction rho dual to the mixed composition: rho(a^j_eta)(c (x) d) = (c <- d)_j(eta).
HTensor rho(const HElem& h);

/// Coproduct dual to the group product: Delta = (id (x) mul) (rho (x) id) Delta_sh.
HTensor delta_star(const HElem& h);

/// Counit: 1 on the unit monomial, 0 elsewhere.
Rat counit(const HElem& h);

/// Antipode of (H, Delta), computed by recursion on the reduced coproduct
/// and extended multiplicatively. Memoized internally (thread-safe).
HElem antipode(const HElem& h);

/// Character evaluation: a^j_eta -> c_j(eta), monomials -> products.
/// Requires c in M^m (unit constant term in every component).
Rat eval_character(const HElem& h, const VectorSeries& c);

/// Star-group inverse through the antipode: component j, word eta of the
/// result equals antipode(a^j_eta) evaluated at c.
VectorSeries star_inverse_via_antipode(const VectorSeries& c);

}  // namespace fliess
