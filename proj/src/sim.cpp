#include "fliess/sim.hpp"

#include "fliess/interconnect.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace fliess {

Signal Signal::sampled(double duration, int steps,
                       const std::vector<std::function<double(double)>>& fns) {
    if (steps < 1) throw std::invalid_argument("signal needs at least one step");
    Signal u;
    u.duration = duration;
    u.steps = steps;
    u.channels.resize(fns.size());
    for (size_t i = 0; i < fns.size(); ++i) {
        u.channels[i].resize(static_cast<size_t>(steps) + 1);
        for (int k = 0; k <= steps; ++k) u.channels[i][static_cast<size_t>(k)] = fns[i](u.time(k));
    }
    return u;
}

Signal Signal::constant(double duration, int steps, const std::vector<double>& levels) {
    std::vector<std::function<double(double)>> fns;
    fns.reserve(levels.size());
    for (double v : levels) fns.emplace_back([v](double) { return v; });
    return sampled(duration, steps, fns);
}

Signal read_signal_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("empty signal file");
    int cols = static_cast<int>(std::count(line.begin(), line.end(), ',')) + 1;
    if (cols < 2) throw std::invalid_argument("signal file needs t plus at least one channel");
    std::vector<double> times;
    std::vector<std::vector<double>> channels(static_cast<size_t>(cols) - 1);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream row(line);
        std::string cell;
        for (int c = 0; c < cols; ++c) {
            if (!std::getline(row, cell, ',')) throw std::invalid_argument("short signal row");
            double v = std::stod(cell);
            if (c == 0) times.push_back(v);
            else channels[static_cast<size_t>(c) - 1].push_back(v);
        }
    }
    if (times.size() < 2) throw std::invalid_argument("signal needs at least two samples");
    Signal u;
    u.duration = times.back() - times.front();
    u.steps = static_cast<int>(times.size()) - 1;
    u.channels = std::move(channels);
    return u;
}

void write_signal_csv(std::ostream& out, const Signal& u) {
    out << "t";
    for (int i = 1; i <= u.num_channels(); ++i) out << ",u" << i;
    out << "\n";
    for (int k = 0; k <= u.steps; ++k) {
        out << u.time(k);
        for (const auto& ch : u.channels) out << "," << ch[static_cast<size_t>(k)];
        out << "\n";
    }
}

namespace {

// channel values for a letter; x0 reads the constant 1
double channel_at(const Signal& u, int letter, int k) {
    if (letter == 0) return 1.0;
    return u.channels[static_cast<size_t>(letter) - 1][static_cast<size_t>(k)];
}

// cumulative trapezoid of f = u_letter * g on the grid
std::vector<double> integrate(const Signal& u, int letter, const std::vector<double>& g) {
    size_t n = g.size();
    std::vector<double> out(n);
    double h = u.dt();
    out[0] = 0.0;
    for (size_t k = 1; k < n; ++k) {
        double fa = channel_at(u, letter, static_cast<int>(k) - 1) * g[k - 1];
        double fb = channel_at(u, letter, static_cast<int>(k)) * g[k];
        out[k] = out[k - 1] + 0.5 * h * (fa + fb);
    }
    return out;
}

const std::vector<double>& iterated_memo(const Word& w, const Signal& u,
                                         std::map<Word, std::vector<double>>& memo) {
    if (auto it = memo.find(w); it != memo.end()) return it->second;
    std::vector<double> value;
    if (w.is_empty()) {
        value.assign(static_cast<size_t>(u.steps) + 1, 1.0);
    } else {
        if (w.front() > u.num_channels()) throw std::invalid_argument("word letter exceeds channel count");
        value = integrate(u, w.front(), iterated_memo(w.tail(), u, memo));
    }
    return memo.emplace(w, std::move(value)).first->second;
}

std::vector<std::vector<double>> eval_fliess_memo(const VectorSeries& c, const Signal& u,
                                                  std::map<Word, std::vector<double>>& memo) {
    if (c.inputs() > u.num_channels())
        throw std::invalid_argument("series needs more input channels than the signal provides");
    size_t n = static_cast<size_t>(u.steps) + 1;
    std::vector<std::vector<double>> y(static_cast<size_t>(c.dim()), std::vector<double>(n, 0.0));
    for (int j = 0; j < c.dim(); ++j)
        for (const auto& [w, coeff] : c[j].terms()) {
            double a = static_cast<double>(coeff);
            const auto& f = iterated_memo(w, u, memo);
            for (size_t k = 0; k < n; ++k) y[static_cast<size_t>(j)][k] += a * f[k];
        }
    return y;
}

double sup_diff(const std::vector<std::vector<double>>& a,
                const std::vector<std::vector<double>>& b) {
    double m = 0.0;
    for (size_t j = 0; j < a.size(); ++j)
        for (size_t k = 0; k < a[j].size(); ++k) m = std::max(m, std::fabs(a[j][k] - b[j][k]));
    return m;
}

}  // namespace

std::vector<double> iterated_integral(const Word& w, const Signal& u) {
    std::map<Word, std::vector<double>> memo;
    return iterated_memo(w, u, memo);
}

std::vector<std::vector<double>> eval_fliess(const VectorSeries& c, const Signal& u) {
    std::map<Word, std::vector<double>> memo;
    return eval_fliess_memo(c, u, memo);
}

SimResult closed_loop_sim(const VectorSeries& c, const VectorSeries& d, const Signal& v,
                          const SimConfig& cfg) {
    if (d.dim() != c.inputs() || d.inputs() != c.dim())
        throw std::invalid_argument("closed loop: dimension/alphabet mismatch");
    if (v.num_channels() != c.inputs())
        throw std::invalid_argument("closed loop: signal channel count mismatch");
    SimResult res;
    res.y = eval_fliess(c, v);
    size_t n = static_cast<size_t>(v.steps) + 1;
    double prev_err = 0.0;
    int growth_streak = 0;
    for (int iter = 1; iter <= cfg.max_picard_iters; ++iter) {
        Signal yd_sig = v;
        yd_sig.channels = res.y;
        auto w = eval_fliess(d, yd_sig);  // F_d[y], one channel per plant input
        Signal forced = v;
        for (size_t i = 0; i < forced.channels.size(); ++i)
            for (size_t k = 0; k < n; ++k) forced.channels[i][k] = v.channels[i][k] * w[i][k];
        auto next = eval_fliess(c, forced);
        double err = sup_diff(next, res.y);
        res.y = std::move(next);
        res.iterations = iter;
        if (err < cfg.picard_tol) {
            res.converged = true;
            return res;
        }
        growth_streak = (iter > 1 && err > prev_err) ? growth_streak + 1 : 0;
        prev_err = err;
        if (growth_streak >= 3) return res;  // diverging, report the partial trajectory
    }
    return res;
}

FeedbackReport validate_feedback(const VectorSeries& c, const VectorSeries& d, const Signal& v,
                                 const SimConfig& cfg) {
    FeedbackReport report;
    SimResult loop = closed_loop_sim(c, d, v, cfg);
    report.picard_iters = loop.iterations;
    report.converged = loop.converged;
    VectorSeries closed = feedback(c, d);
    report.sup_error = sup_diff(eval_fliess(closed, v), loop.y);
    for (int n = 1; n <= closed.trunc(); ++n) {
        std::vector<Series> cut;
        for (int j = 0; j < closed.dim(); ++j) {
            Series s(closed.inputs(), n);
            for (const auto& [w, coeff] : closed[j].terms()) s.add_term(w, coeff);
            cut.push_back(std::move(s));
        }
        report.per_degree_errors.push_back(sup_diff(eval_fliess(VectorSeries(cut), v), loop.y));
    }
    return report;
}

}  // namespace fliess
