#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "fliess/hopf.hpp"
#include "fliess/interconnect.hpp"
#include "fliess/parse.hpp"
#include "fliess/prelie.hpp"
#include "fliess/sim.hpp"
#include "fliess/structure.hpp"

#include <json.hpp>

namespace {

using namespace fliess;

struct Options {
    int m = -1;
    int n = -1;
    std::vector<std::string> inputs;   // inline series expressions
    std::vector<std::string> in_files; // JSON series files
    std::string out_file;
    std::string format = "text";
};

void add_common(CLI::App* cmd, Options& opt, int arity) {
    cmd->add_option("-m,--inputs", opt.m, "number of input letters (alphabet size minus one)");
    cmd->add_option("-N,--trunc", opt.n, "truncation degree");
    if (arity > 0) cmd->add_option("series", opt.inputs, "series expressions")->expected(0, arity);
    cmd->add_option("--in", opt.in_files, "JSON series files (one per operand)");
    cmd->add_option("--out", opt.out_file, "write the result to this file instead of stdout");
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
}

std::vector<VectorSeries> load_operands(const Options& opt, size_t arity) {
    std::vector<VectorSeries> out;
    for (const auto& path : opt.in_files) {
        std::ifstream f(path);
        if (!f) throw ParseError("cannot open '" + path + "'", 0);
        out.push_back(read_series_json(f));
    }
    for (const auto& text : opt.inputs) {
        if (opt.m < 0 || opt.n < 0)
            throw ParseError("-m and -N are required for inline series", 0);
        out.push_back(parse_series(text, opt.m, opt.n));
    }
    if (out.size() != arity)
        throw ParseError("expected " + std::to_string(arity) + " series, got " +
                             std::to_string(out.size()),
                         0);
    return out;
}

void emit(const Options& opt, const std::string& text) {
    if (opt.out_file.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream f(opt.out_file);
    if (!f) throw std::invalid_argument("cannot open '" + opt.out_file + "'");
    f << text << "\n";
}

void emit_series(const Options& opt, const VectorSeries& s) {
    if (opt.format == "json") {
        std::ostringstream buf;
        write_series_json(buf, s);
        std::string text = buf.str();
        if (!text.empty() && text.back() == '\n') text.pop_back();
        emit(opt, text);
    } else {
        emit(opt, format_series(s));
    }
}

CoordFn parse_coord(const std::string& text, int m) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw ParseError("expected j:WORD", 0);
    int j = 0;
    try {
        j = std::stoi(text.substr(0, colon));
    } catch (...) {
        throw ParseError("bad component index", 0);
    }
    std::string body = text.substr(colon + 1);
    Word w;
    if (body != "1") {
        VectorSeries s = parse_series(body, m, 1000);
        if (s[0].terms().size() != 1 || s[0].terms().begin()->second != 1)
            throw ParseError("expected a single word", colon + 1);
        w = s[0].terms().begin()->first;
    }
    return CoordFn{j, w};
}

std::string vt_str(const VTensor& t) {
    if (t.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [pair, c] : t) {
        Rat mag = c < 0 ? -c : c;
        out += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
        if (mag != 1) out += rat_to_string(mag) + " ";
        out += pair.first.str() + " ⊗ " + pair.second.str();
        first = false;
    }
    return out;
}

EndoG load_g(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open '" + path + "'", 0);
    nlohmann::json doc = nlohmann::json::parse(f);
    EndoG g = EndoG::zero(doc.at("num_inputs").get<int>());
    auto rows = doc.at("entries");
    for (int i = 0; i <= g.num_inputs; ++i)
        for (int j = 0; j <= g.num_inputs; ++j)
            g.entries[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                rat_from_string(rows.at(static_cast<size_t>(i)).at(static_cast<size_t>(j)).get<std::string>());
    return g;
}

Signal load_signal(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open '" + path + "'", 0);
    return read_signal_csv(f);
}

std::string trajectory_csv(const std::vector<std::vector<double>>& y, const Signal& u) {
    std::ostringstream out;
    out << "t";
    for (size_t j = 1; j <= y.size(); ++j) out << ",y" << j;
    for (int k = 0; k <= u.steps; ++k) {
        out << "\n" << u.time(k);
        for (const auto& ch : y) out << "," << ch[static_cast<size_t>(k)];
    }
    return out.str();
}

int run(int argc, char** argv) {
    CLI::App app{"truncated Chen-Fliess series calculator"};
    app.require_subcommand(1);

    Options opt;
    std::string method = "fixedpoint";
    std::string kind = "star";
    std::string coord_text;
    std::string op_name = "bullet";
    std::string g_file;
    std::string signal_file;

    auto* sh = app.add_subcommand("shuffle", "shuffle product");
    add_common(sh, opt, 2);
    auto* shinv = app.add_subcommand("shuffle-inv", "componentwise shuffle inverse");
    add_common(shinv, opt, 1);
    auto* catc = app.add_subcommand("cat", "catenation product");
    add_common(catc, opt, 2);
    auto* comp = app.add_subcommand("compose", "composition product");
    add_common(comp, opt, 2);
    auto* mixed = app.add_subcommand("mixed-compose", "multiplicative mixed composition");
    add_common(mixed, opt, 2);
    auto* starc = app.add_subcommand("star", "star product");
    add_common(starc, opt, 2);
    auto* starinv = app.add_subcommand("star-inv", "star inverse");
    add_common(starinv, opt, 1);
    starinv->add_option("--method", method, "fixedpoint or antipode")
        ->check(CLI::IsMember({"fixedpoint", "antipode"}));
    auto* fb = app.add_subcommand("feedback", "multiplicative dynamic feedback product");
    add_common(fb, opt, 2);
    auto* classc = app.add_subcommand("class", "class of a series");
    add_common(classc, opt, 1);
    auto* reldeg = app.add_subcommand("reldeg", "relative degree of a series");
    add_common(reldeg, opt, 1);
    auto* coprod = app.add_subcommand("coproduct", "coproduct of a coordinate function");
    add_common(coprod, opt, 0);
    coprod->add_option("--kind", kind, "shuffle, star, rho or rho-lin")
        ->check(CLI::IsMember({"shuffle", "star", "rho", "rho-lin"}));
    coprod->add_option("--coord", coord_text, "coordinate function j:WORD")->required();
    auto* anti = app.add_subcommand("antipode", "antipode of a coordinate function");
    add_common(anti, opt, 0);
    anti->add_option("--coord", coord_text, "coordinate function j:WORD")->required();
    auto* prelie = app.add_subcommand("prelie", "pre-Lie type products");
    add_common(prelie, opt, 2);
    prelie->add_option("--op", op_name, "triangle, bullet or diamond")
        ->check(CLI::IsMember({"triangle", "bullet", "diamond"}));
    prelie->add_option("--g", g_file, "endomorphism matrix (JSON)");
    auto* simc = app.add_subcommand("simulate", "evaluate a Chen-Fliess series on a signal");
    add_common(simc, opt, 1);
    simc->add_option("--signal", signal_file, "input signal CSV")->required();
    auto* valfb = app.add_subcommand("validate-feedback",
                                     "compare symbolic feedback with closed-loop simulation");
    add_common(valfb, opt, 2);
    valfb->add_option("--signal", signal_file, "reference signal CSV")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    if (sh->parsed()) {
        auto args = load_operands(opt, 2);
        emit_series(opt, shuffle(args[0], args[1]));
    } else if (shinv->parsed()) {
        emit_series(opt, shuffle_inverse(load_operands(opt, 1)[0]));
    } else if (catc->parsed()) {
        auto args = load_operands(opt, 2);
        if (args[0].dim() != args[1].dim()) throw std::invalid_argument("dimension mismatch");
        VectorSeries out(args[0].inputs(), args[0].trunc(), args[0].dim());
        for (int j = 0; j < out.dim(); ++j) out[j] = cat(args[0][j], args[1][j]);
        emit_series(opt, out);
    } else if (comp->parsed()) {
        auto args = load_operands(opt, 2);
        emit_series(opt, compose(args[0], args[1]));
    } else if (mixed->parsed()) {
        auto args = load_operands(opt, 2);
        emit_series(opt, mixed_compose(args[0], args[1]));
    } else if (starc->parsed()) {
        auto args = load_operands(opt, 2);
        emit_series(opt, star(args[0], args[1]));
    } else if (starinv->parsed()) {
        auto c = load_operands(opt, 1)[0];
        emit_series(opt, method == "antipode" ? star_inverse_via_antipode(c) : star_inverse(c));
    } else if (fb->parsed()) {
        auto args = load_operands(opt, 2);
        emit_series(opt, feedback(args[0], args[1]));
    } else if (classc->parsed()) {
        auto c = load_operands(opt, 1)[0];
        ClassResult r = class_of(c[0]);
        emit(opt, r.is_infinite() ? "infinity (truncation " + std::to_string(r.trunc_degree) + ")"
                                  : std::to_string(*r.r));
    } else if (reldeg->parsed()) {
        auto c = load_operands(opt, 1)[0];
        RelativeDegreeResult r = relative_degree(c[0]);
        emit(opt, r.r ? std::to_string(*r.r)
                      : "undefined (truncation " + std::to_string(r.trunc_degree) + ")");
    } else if (coprod->parsed()) {
        int m = opt.m < 0 ? 2 : opt.m;
        CoordFn a = parse_coord(coord_text, m);
        if (kind == "rho-lin") {
            emit(opt, vt_str(mathring_rho(a)));
        } else {
            HElem h = a.word.is_empty() ? h_one() : h_gen(a);
            HTensor t = kind == "shuffle" ? delta_shuffle(h)
                      : kind == "rho"     ? rho(h)
                                          : delta_star(h);
            emit(opt, ht_str(t));
        }
    } else if (anti->parsed()) {
        int m = opt.m < 0 ? 2 : opt.m;
        CoordFn a = parse_coord(coord_text, m);
        emit(opt, h_str(antipode(a.word.is_empty() ? h_one() : h_gen(a))));
    } else if (prelie->parsed()) {
        auto args = load_operands(opt, 2);
        EndoG g = g_file.empty() ? EndoG::feedback_default(args[0].inputs()) : load_g(g_file);
        VectorSeries out = op_name == "triangle" ? triangle(args[0], args[1], g)
                         : op_name == "diamond"  ? diamond(args[0], args[1], g)
                                                 : bullet(args[0], args[1]);
        emit_series(opt, out);
    } else if (simc->parsed()) {
        auto c = load_operands(opt, 1)[0];
        Signal u = load_signal(signal_file);
        emit(opt, trajectory_csv(eval_fliess(c, u), u));
    } else if (valfb->parsed()) {
        auto args = load_operands(opt, 2);
        Signal v = load_signal(signal_file);
        FeedbackReport report = validate_feedback(args[0], args[1], v, SimConfig{});
        nlohmann::json doc{{"sup_error", report.sup_error},
                           {"per_degree_errors", report.per_degree_errors},
                           {"picard_iters", report.picard_iters},
                           {"converged", report.converged}};
        emit(opt, doc.dump(2));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const fliess::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
