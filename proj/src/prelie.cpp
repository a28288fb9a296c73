#include "fliess/prelie.hpp"

#include <map>
#include <stdexcept>

namespace fliess {

EndoG EndoG::zero(int m) {
    EndoG g;
    g.num_inputs = m;
    g.entries.assign(static_cast<size_t>(m + 1), std::vector<Rat>(static_cast<size_t>(m + 1), 0));
    return g;
}

EndoG EndoG::feedback_default(int m) {
    EndoG g = zero(m);
    for (int i = 1; i <= m; ++i) g.entries[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    return g;
}

const Rat& EndoG::entry(int i, int j) const {
    return entries.at(static_cast<size_t>(i)).at(static_cast<size_t>(j));
}

bool EndoG::is_admissible() const {
    for (int i = 1; i <= num_inputs; ++i)
        for (int j = 1; j <= num_inputs; ++j)
            if (i != j && entry(i, j) != 0) return false;
    return true;
}

namespace {

void vt_add(VTensor& target, const CoordFn& left, const CoordFn& right, const Rat& c) {
    if (c == 0) return;
    auto key = std::make_pair(left, right);
    auto it = target.find(key);
    if (it == target.end()) {
        target.emplace(std::move(key), c);
        return;
    }
    it->second += c;
    if (it->second == 0) target.erase(it);
}

}  // namespace

VTensor mathring_rho(const CoordFn& a) {
    if (a.word.is_empty()) throw std::invalid_argument("mathring_rho needs a nonempty word");
    VTensor out;
    if (a.word.length() == 1) return out;
    int k = a.word.front();
    Word eta = a.word.tail();
    CoordFn inner{a.component, eta};
    if (k == 0) {
        for (const auto& [pair, c] : mathring_rho(inner))
            vt_add(out, theta(0, pair.first), pair.second, c);
        return out;
    }
    for (const auto& [pair, c] : mathring_rho(inner))
        vt_add(out, theta(k, pair.first), pair.second, c);
    for (const auto& [split, mult] : unshuffle(eta)) {
        const auto& [eta1, eta2] = split;
        if (eta1.is_empty() || eta2.is_empty()) continue;
        vt_add(out, CoordFn{a.component, eta1.prepend(k)}, CoordFn{k, eta2}, mult);
    }
    vt_add(out, CoordFn{a.component, Word::letter(k)}, CoordFn{k, eta}, 1);
    return out;
}

namespace {

// g(x_i) catenated before s, term by term over the letters of g(x_i).
Series g_times(const EndoG& g, int i, const Series& s) {
    Series out(s.inputs(), s.trunc());
    for (int l = 0; l <= g.num_inputs; ++l) {
        const Rat& a = g.entry(i, l);
        if (a == 0) continue;
        for (const auto& [w, c] : s.terms()) out.add_term(w.prepend(l), c * a);
    }
    return out;
}

// p(eta) for the triangle recursion, memoized per call of triangle.
const Series& triangle_word(const Word& eta, const VectorSeries& d, const EndoG& g,
                            std::map<Word, Series>& memo) {
    if (auto it = memo.find(eta); it != memo.end()) return it->second;
    Series value(d.inputs(), d.trunc());
    if (!eta.is_empty()) {
        int i = eta.front();
        Word zeta = eta.tail();
        const Series& rest = triangle_word(zeta, d, g, memo);
        for (const auto& [w, c] : rest.terms()) value.add_term(w.prepend(i), c);
        if (i >= 1) {  // d_0 := 0
            Series feed = shuffle(Series::monomial(d.inputs(), d.trunc(), zeta), d[i - 1]);
            value += g_times(g, i, feed);
        }
    }
    return memo.emplace(eta, std::move(value)).first->second;
}

void require_triangle_args(const VectorSeries& c, const VectorSeries& d, const EndoG& g) {
    if (c.inputs() != d.inputs() || c.trunc() != d.trunc())
        throw std::invalid_argument("triangle: alphabet or truncation mismatch");
    if (d.dim() != c.inputs())
        throw std::invalid_argument("triangle: right factor needs one component per input letter");
    if (g.num_inputs != c.inputs()) throw std::invalid_argument("triangle: endomorphism shape mismatch");
    if (!c.is_proper() || !d.is_proper())
        throw std::domain_error("triangle requires proper arguments");
}

}  // namespace

VectorSeries triangle(const VectorSeries& c, const VectorSeries& d, const EndoG& g) {
    require_triangle_args(c, d, g);
    std::map<Word, Series> memo;
    VectorSeries out(c.inputs(), c.trunc(), c.dim());
    for (int j = 0; j < c.dim(); ++j)
        for (const auto& [eta, coeff] : c[j].terms())
            out[j] += triangle_word(eta, d, g, memo) * coeff;
    return out;
}

VectorSeries triangle(const VectorSeries& c, const VectorSeries& d) {
    return triangle(c, d, EndoG::feedback_default(c.inputs()));
}

VectorSeries bullet(const VectorSeries& c, const VectorSeries& d) {
    return triangle(c, d) + shuffle(c, d);
}

VectorSeries diamond(const VectorSeries& c, const VectorSeries& d, const EndoG& g) {
    if (!g.is_admissible()) throw std::domain_error("diamond requires an admissible endomorphism");
    return triangle(c, d, g) + shuffle(c, d);
}

VectorSeries lie_bracket(PreLieOp op, const VectorSeries& a, const VectorSeries& b,
                         const EndoG& g) {
    switch (op) {
        case PreLieOp::TriangleG: return triangle(a, b, g) - triangle(b, a, g);
        case PreLieOp::Bullet: return bullet(a, b) - bullet(b, a);
        case PreLieOp::DiamondG: return diamond(a, b, g) - diamond(b, a, g);
    }
    throw std::invalid_argument("unknown pre-Lie product");
}

bool is_admissible(const EndoG& g) { return g.is_admissible(); }

bool is_proper_polynomial(const VectorSeries& c) { return c.is_proper(); }

}  // namespace fliess
