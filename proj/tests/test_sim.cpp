#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fliess/interconnect.hpp"
#include "fliess/parse.hpp"
#include "fliess/sim.hpp"

#include <cmath>
#include <sstream>

using namespace fliess;

namespace {

Signal ones_signal(double duration, int steps, int channels) {
    return Signal::constant(duration, steps, std::vector<double>(static_cast<size_t>(channels), 1.0));
}

double sup_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0.0;
    for (size_t k = 0; k < a.size(); ++k) m = std::max(m, std::fabs(a[k] - b[k]));
    return m;
}

}  // namespace

TEST_CASE("iterated integrals of simple words") {
    Signal u = ones_signal(1.0, 1000, 1);
    CHECK(iterated_integral(Word::empty(), u).back() == 1.0);
    CHECK(iterated_integral(Word{0}, u).back() == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(iterated_integral(Word{1}, u).back() == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(iterated_integral(Word{1, 1}, u).back() == doctest::Approx(0.5).epsilon(1e-5));
    CHECK_THROWS_AS(iterated_integral(Word{2}, u), std::invalid_argument);
}

TEST_CASE("fliess evaluation of simple series") {
    Signal u = ones_signal(1.0, 1000, 1);
    auto y = eval_fliess(parse_series("1", 1, 3), u);
    for (double v : y[0]) CHECK(v == 1.0);
    y = eval_fliess(parse_series("x0 + x1", 1, 3), u);
    CHECK(y[0].back() == doctest::Approx(2.0).epsilon(1e-6));
    CHECK(y[0][500] == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("shuffle product law holds numerically") {
    Signal u = Signal::sampled(0.5, 1000, {[](double t) { return std::sin(3 * t); }});
    VectorSeries c = parse_series("x1 + 2 x0x1", 1, 6);
    VectorSeries d = parse_series("1 + x1^2", 1, 6);
    auto yc = eval_fliess(c, u);
    auto yd = eval_fliess(d, u);
    auto ysh = eval_fliess(shuffle(c, d), u);
    double err = 0.0;
    for (size_t k = 0; k < yc[0].size(); ++k)
        err = std::max(err, std::fabs(ysh[0][k] - yc[0][k] * yd[0][k]));
    CHECK(err < 1e-5);
}

TEST_CASE("mixed composition law holds numerically") {
    // F_{c <- d}[u] = F_c[u . F_d[u]]
    Signal u = Signal::sampled(0.3, 1500, {[](double t) { return std::cos(2 * t); }});
    VectorSeries c = parse_series("x1 + x0x1 + x1^2", 1, 6);
    VectorSeries d = parse_series("1 + x1 + x0", 1, 6);
    auto yd = eval_fliess(d, u);
    Signal mod = u;
    for (size_t k = 0; k < mod.channels[0].size(); ++k) mod.channels[0][k] *= yd[0][k];
    auto direct = eval_fliess(c, mod);
    auto viaseries = eval_fliess(mixed_compose(c, d), u);
    CHECK(sup_diff(direct[0], viaseries[0]) < 1e-4);
}

TEST_CASE("cascade law holds numerically") {
    // F_{c o d}[u] = F_c[F_d[u]]
    Signal u = Signal::sampled(0.3, 1500, {[](double t) { return std::sin(t); }});
    VectorSeries c = parse_series("x1 + x1x0", 1, 6);
    VectorSeries d = parse_series("x1 + x0 + x1^2", 1, 6);
    auto yd = eval_fliess(d, u);
    Signal inner = u;
    inner.channels = yd;
    auto direct = eval_fliess(c, inner);
    auto viaseries = eval_fliess(compose(c, d), u);
    CHECK(sup_diff(direct[0], viaseries[0]) < 1e-4);
}

TEST_CASE("trapezoid quadrature error drops by about 4x when halving h") {
    VectorSeries c = parse_series("x1^2", 1, 4);
    auto run = [&](int steps) {
        Signal u = Signal::sampled(1.0, steps, {[](double t) { return std::cos(t); }});
        double exact = 0.5 * std::sin(1.0) * std::sin(1.0);
        return std::fabs(eval_fliess(c, u)[0].back() - exact);
    };
    double coarse = run(250);
    double fine = run(500);
    CHECK(coarse / fine > 3.0);
    CHECK(coarse / fine < 5.0);
}

TEST_CASE("closed loop with unity feedback equals open loop") {
    Signal v = Signal::sampled(0.2, 500, {[](double t) { return 0.5 * std::sin(t); }});
    VectorSeries c = parse_series("x1 + x0x1", 1, 4);
    VectorSeries d = parse_series("1", 1, 4);
    SimResult res = closed_loop_sim(c, d, v, SimConfig{});
    CHECK(res.converged);
    CHECK(sup_diff(res.y[0], eval_fliess(c, v)[0]) < 1e-12);
}

TEST_CASE("no forcing and proper plant gives zero output") {
    Signal v = Signal::constant(0.2, 500, {0.0});
    VectorSeries c = parse_series("x1 + x1^2", 1, 4);
    VectorSeries d = parse_series("1 + x1", 1, 4);
    SimResult res = closed_loop_sim(c, d, v, SimConfig{});
    CHECK(res.converged);
    for (double y : res.y[0]) CHECK(y == 0.0);
}

TEST_CASE("validate_feedback against the symbolic product") {
    Signal v = Signal::sampled(0.2, 2000, {[](double t) { return 0.5 * std::sin(t); }});
    VectorSeries c = parse_series("x1", 1, 5);
    VectorSeries d = parse_series("1 - x1", 1, 5);
    FeedbackReport report = validate_feedback(c, d, v, SimConfig{});
    CHECK(report.converged);
    CHECK(report.sup_error <= 1e-3);
    REQUIRE(report.per_degree_errors.size() == 5);
    CHECK(report.per_degree_errors.back() < report.per_degree_errors[1]);
}

TEST_CASE("group law numerically") {
    // u . F_d[u] . F_c[u . F_d[u]] = u . F_{c*d}[u]
    Signal u = Signal::sampled(0.2, 1000, {[](double t) { return std::cos(3 * t); }});
    VectorSeries c = parse_series("1 + x1", 1, 6);
    VectorSeries d = parse_series("1 + x0 + x1^2", 1, 6);
    auto yd = eval_fliess(d, u);
    Signal mid = u;
    for (size_t k = 0; k < mid.channels[0].size(); ++k) mid.channels[0][k] *= yd[0][k];
    auto yc = eval_fliess(c, mid);
    auto ystar = eval_fliess(star(c, d), u);
    double err = 0.0;
    for (size_t k = 0; k < yc[0].size(); ++k)
        err = std::max(err, std::fabs(mid.channels[0][k] * yc[0][k] -
                                      u.channels[0][k] * ystar[0][k]));
    CHECK(err < 1e-4);
}

TEST_CASE("signal csv round trip") {
    Signal u = Signal::sampled(1.0, 4, {[](double t) { return 2 * t; }, [](double t) { return t * t; }});
    std::stringstream buf;
    write_signal_csv(buf, u);
    Signal back = read_signal_csv(buf);
    CHECK(back.steps == u.steps);
    CHECK(back.duration == doctest::Approx(u.duration));
    REQUIRE(back.num_channels() == 2);
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k <= 4; ++k)
            CHECK(back.channels[static_cast<size_t>(i)][static_cast<size_t>(k)] ==
                  doctest::Approx(u.channels[static_cast<size_t>(i)][static_cast<size_t>(k)]));
}
