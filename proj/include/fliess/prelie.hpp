#pragma once

#include <map>
#include <utility>
#include <vector>

#include "fliess/hopf.hpp"
#include "fliess/series.hpp"

namespace fliess {

/// Linear endomorphism g of the letter span: entry(i, j) is the coefficient
/// of x_j in g(x_i), indices 0..m.
struct EndoG {
    int num_inputs = 0;
    std::vector<std::vector<Rat>> entries;  // (m+1) x (m+1)

    static EndoG zero(int m);
    /// g(x_i) = x_i for i >= 1, g(x_0) = 0 — the multiplicative-feedback case.
    static EndoG feedback_default(int m);

    const Rat& entry(int i, int j) const;
    /// True iff the submatrix on rows/columns 1..m is diagonal.
    bool is_admissible() const;
};

/// Element of V (x) V: tensor of single coordinate functions.
using VTensor = std::map<std::pair<CoordFn, CoordFn>, Rat>;

/// Linearized coaction rho-ring on V^+, by structural recursion on the
/// leading letter; implemented independently of rho so the duality test is a
/// genuine cross-check.
VTensor mathring_rho(const CoordFn& a);

/// g-parameterized magmatic product on proper polynomial vectors:
///   x_i e_j <| d = g(x_i) d_i e_j,  x_i c <| d = x_i(c <| d) + g(x_i)(c sh_i d),
/// with d_0 := 0. Both arguments must be proper.
VectorSeries triangle(const VectorSeries& c, const VectorSeries& d, const EndoG& g);

/// Dual of the linearized coproduct: c <| d with the default g.
VectorSeries triangle(const VectorSeries& c, const VectorSeries& d);

/// Pre-Lie product c . d = (c <| d) + (c sh d) with the default g.
VectorSeries bullet(const VectorSeries& c, const VectorSeries& d);

/// Derived pre-Lie product for admissible g: triangle_g + shuffle.
/// Throws std::domain_error on an inadmissible g.
VectorSeries diamond(const VectorSeries& c, const VectorSeries& d, const EndoG& g);

enum class PreLieOp { TriangleG, Bullet, DiamondG };

/// Antisymmetrized bracket [a, b] = a*b - b*a for the chosen product.
VectorSeries lie_bracket(PreLieOp op, const VectorSeries& a, const VectorSeries& b,
                         const EndoG& g);

bool is_admissible(const EndoG& g);

/// Components must be polynomials with zero constant term.
bool is_proper_polynomial(const VectorSeries& c);

}  // namespace fliess
