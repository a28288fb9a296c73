#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "fliess/series.hpp"

namespace fliess {

/// Sampled control input: m channels on a uniform grid over [0, T],
/// interpolated piecewise linearly. Letter x0 always reads the constant 1.
struct Signal {
    double duration = 0.0;
    int steps = 1;
    std::vector<std::vector<double>> channels;  // m x (steps+1)

    static Signal sampled(double duration, int steps,
                          const std::vector<std::function<double(double)>>& fns);
    static Signal constant(double duration, int steps, const std::vector<double>& levels);

    int num_channels() const { return static_cast<int>(channels.size()); }
    double dt() const { return duration / steps; }
    double time(int k) const { return dt() * k; }
};

/// CSV with header "t,u1,...,um".
Signal read_signal_csv(std::istream& in);
void write_signal_csv(std::ostream& out, const Signal& u);

struct SimConfig {
    double picard_tol = 1e-10;
    int max_picard_iters = 50;
};

/// Iterated integral F_w[u] on the grid, trapezoidal rule; F_1 = 1.
std::vector<double> iterated_integral(const Word& w, const Signal& u);

/// y_j(t) = sum over stored words of c_j(eta) F_eta[u](t).
std::vector<std::vector<double>> eval_fliess(const VectorSeries& c, const Signal& u);

struct SimResult {
    std::vector<std::vector<double>> y;  // q x (steps+1), possibly partial
    int iterations = 0;
    bool converged = false;
};

/// Closed-loop trajectory of F_c under multiplicative output feedback by F_d:
/// Picard iteration y <- F_c[v . F_d[y]]. Divergence (error growth over three
/// consecutive iterations) is reported via `converged`, never silently.
SimResult closed_loop_sim(const VectorSeries& c, const VectorSeries& d, const Signal& v,
                          const SimConfig& cfg);

struct FeedbackReport {
    double sup_error = 0.0;
    std::vector<double> per_degree_errors;  // symbolic path re-run at truncations 1..N
    int picard_iters = 0;
    bool converged = false;
};

/// Cross-validates the symbolic feedback product against the time-domain
/// closed-loop simulation.
FeedbackReport validate_feedback(const VectorSeries& c, const VectorSeries& d, const Signal& v,
                                 const SimConfig& cfg);

}  // namespace fliess
