#pragma once

#include "fliess/series.hpp"

namespace fliess {

/// Composition product c o d of c over X' (|X'| = d.dim()+1 letters) with d
/// over X. Evaluates sum_eta c(eta) psi_d(eta)(1), landing in series over X.
VectorSeries compose(const VectorSeries& c, const VectorSeries& d);

/// Multiplicative mixed composition c <- d: per-word recursion
///   1 <- d = 1,  x0.eta <- d = x0(eta <- d),  xi.eta <- d = xi(d_i sh (eta <- d)).
/// Both arguments live over the same alphabet; d.dim() must equal the number
/// of inputs of that alphabet.
VectorSeries mixed_compose(const VectorSeries& c, const VectorSeries& d);

/// Group product c * d = d sh (c <- d).
VectorSeries star(const VectorSeries& c, const VectorSeries& d);

/// Star inverse of a purely improper d by Picard iteration of
/// e = d^{sh -1} <- e. Throws std::domain_error when d is not purely improper.
VectorSeries star_inverse(const VectorSeries& d);

/// Multiplicative dynamic feedback product c @ d = c <- (d^{sh -1} o c)^{* -1}.
/// c has dimension q over X (m+1 letters); d has dimension m over X' (q+1
/// letters) and must be purely improper.
VectorSeries feedback(const VectorSeries& c, const VectorSeries& d);

}  // namespace fliess
