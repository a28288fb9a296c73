#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fliess/parse.hpp"
#include "fliess/prelie.hpp"

#include <random>

using namespace fliess;

namespace {

Rat eval_vtensor(const VTensor& t, const VectorSeries& c, const VectorSeries& d) {
    Rat out = 0;
    for (const auto& [pair, coeff] : t)
        out += coeff * c[pair.first.component - 1].coeff(pair.first.word) *
               d[pair.second.component - 1].coeff(pair.second.word);
    return out;
}

std::vector<Word> words_upto(int m, int max_len) {
    std::vector<Word> out{Word::empty()};
    for (size_t k = 0; k < out.size(); ++k) {
        if (static_cast<int>(out[k].length()) == max_len) continue;
        for (int i = 0; i <= m; ++i) out.push_back(out[k].cat(Word::letter(i)));
    }
    return out;
}

// random proper polynomial vector, dimension m, at a truncation roomy enough
// for nested products
VectorSeries random_proper(std::mt19937& rng, int m, int deg, int trunc) {
    std::uniform_int_distribution<int> nterms(1, 3);
    std::uniform_int_distribution<int> len(1, deg);
    std::uniform_int_distribution<int> letter(0, m);
    std::uniform_int_distribution<int> coeff(-2, 2);
    VectorSeries out(m, trunc, m);
    for (int j = 0; j < m; ++j) {
        int k = nterms(rng);
        for (int t = 0; t < k; ++t) {
            std::vector<int> letters(static_cast<size_t>(len(rng)));
            for (auto& l : letters) l = letter(rng);
            out[j].add_term(Word(std::move(letters)), coeff(rng));
        }
    }
    return out;
}

}  // namespace

TEST_CASE("endomorphism admissibility") {
    CHECK(EndoG::feedback_default(2).is_admissible());
    CHECK(EndoG::zero(3).is_admissible());

    // m = 1: every 2x2 matrix is admissible
    EndoG g1 = EndoG::zero(1);
    g1.entries = {{3, Rat(-1, 2)}, {7, 5}};
    CHECK(g1.is_admissible());

    // m = 2 with a_12 = 1 is not
    EndoG g2 = EndoG::feedback_default(2);
    g2.entries[1][2] = 1;
    CHECK_FALSE(is_admissible(g2));
    // row 0 and column 0 stay unconstrained
    EndoG g3 = EndoG::feedback_default(2);
    g3.entries[0][1] = 4;
    g3.entries[2][0] = -2;
    CHECK(g3.is_admissible());
}

TEST_CASE("mathring_rho displayed values") {
    auto gen = [](int j, std::initializer_list<int> w) { return CoordFn{j, Word(w)}; };
    auto one_term = [](const CoordFn& l, const CoordFn& r, Rat c) {
        VTensor t;
        t[{l, r}] = c;
        return t;
    };

    CHECK(mathring_rho(gen(1, {1})) == VTensor{});                 // degree 1 vanishes
    CHECK(mathring_rho(gen(1, {2, 0})) == one_term(gen(1, {2}), gen(2, {0}), 1));
    CHECK(mathring_rho(gen(1, {0, 2})) == VTensor{});
    CHECK(mathring_rho(gen(2, {1, 2})) == one_term(gen(2, {1}), gen(1, {2}), 1));
    CHECK(mathring_rho(gen(1, {0, 0})) == VTensor{});
    CHECK(mathring_rho(gen(1, {0, 0, 0})) == VTensor{});
    CHECK(mathring_rho(gen(2, {0, 1, 2})) == one_term(gen(2, {0, 1}), gen(1, {2}), 1));

    // three-letter display at k = i: x1 x1 x2
    VTensor expect;
    expect[{gen(1, {1}), gen(1, {1, 2})}] = 1;
    expect[{gen(1, {1, 1}), gen(1, {2})}] = 2;
    expect[{gen(1, {1, 2}), gen(1, {1})}] = 1;
    CHECK(mathring_rho(gen(1, {1, 1, 2})) == expect);

    // distinct letters x1 x2 x1: the i != k case splits the middle term
    expect.clear();
    expect[{gen(1, {1}), gen(1, {2, 1})}] = 1;
    expect[{gen(1, {1, 2}), gen(2, {1})}] = 1;
    expect[{gen(1, {1, 2}), gen(1, {1})}] = 1;
    expect[{gen(1, {1, 1}), gen(1, {2})}] = 1;
    CHECK(mathring_rho(gen(1, {1, 2, 1})) == expect);
}

TEST_CASE("x0 powers are in the kernel of mathring_rho") {
    for (int n = 1; n <= 5; ++n)
        CHECK(mathring_rho(CoordFn{1, Word::power(0, n)}) == VTensor{});
}

TEST_CASE("triangle worked examples") {
    VectorSeries x0e1 = parse_series("x0", 1, 6);
    VectorSeries x1e1 = parse_series("x1", 1, 6);
    VectorSeries x1x1 = parse_series("x1^2", 1, 6);
    CHECK(triangle(x0e1, x1e1) == VectorSeries(1, 6, 1));
    CHECK(triangle(x1e1, x1e1) == parse_series("x1^2", 1, 6));
    CHECK(triangle(x1x1, x1e1) == parse_series("3 x1^3", 1, 6));
    CHECK_THROWS_AS(triangle(parse_series("1 + x1", 1, 6), x1e1), std::domain_error);
}

TEST_CASE("bullet worked examples") {
    VectorSeries x1 = parse_series("x1", 1, 6);
    VectorSeries x0 = parse_series("x0", 1, 6);
    CHECK(bullet(x1, x1) == parse_series("3 x1^2", 1, 6));
    CHECK(bullet(x0, x0) == parse_series("2 x0^2", 1, 6));
}

TEST_CASE("diamond worked examples") {
    VectorSeries x1 = parse_series("x1", 1, 6);
    EndoG g = EndoG::feedback_default(1);
    g.entries[1][1] = 2;
    CHECK(diamond(x1, x1, g) == parse_series("4 x1^2", 1, 6));
    // default g: diamond coincides with bullet
    std::mt19937 rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        VectorSeries c = random_proper(rng, 2, 2, 6);
        VectorSeries d = random_proper(rng, 2, 2, 6);
        CHECK(diamond(c, d, EndoG::feedback_default(2)) == bullet(c, d));
    }
    EndoG bad = EndoG::feedback_default(2);
    bad.entries[1][2] = 1;
    CHECK_THROWS_AS(diamond(random_proper(rng, 2, 2, 6), random_proper(rng, 2, 2, 6), bad),
                    std::domain_error);
}

TEST_CASE("lie bracket basics") {
    std::mt19937 rng(9);
    EndoG g = EndoG::feedback_default(2);
    VectorSeries a = random_proper(rng, 2, 2, 8);
    VectorSeries b = random_proper(rng, 2, 2, 8);
    CHECK(lie_bracket(PreLieOp::Bullet, a, a, g) == VectorSeries(2, 8, 2));
    // worked instance at m = 1: x1 > x0 = x1x0 while x0 > x1 = 0, and the
    // shuffle halves of the bullet products cancel
    VectorSeries x1 = parse_series("x1", 1, 6);
    VectorSeries x0 = parse_series("x0", 1, 6);
    CHECK(lie_bracket(PreLieOp::Bullet, x1, x0, EndoG::feedback_default(1)) ==
          parse_series("x1 x0", 1, 6));
    // shuffle parts cancel: diamond and triangle brackets agree
    g.entries[1][1] = 3;
    g.entries[0][2] = 1;
    CHECK(lie_bracket(PreLieOp::DiamondG, a, b, g) == lie_bracket(PreLieOp::TriangleG, a, b, g));
}

TEST_CASE("duality of mathring_rho against triangle") {
    std::mt19937 rng(15);
    for (int m = 1; m <= 2; ++m) {
        VectorSeries c = random_proper(rng, m, 4, 8);
        VectorSeries d = random_proper(rng, m, 4, 8);
        VectorSeries tri = triangle(c, d);
        for (const Word& eta : words_upto(m, 4)) {
            if (eta.is_empty()) continue;
            for (int j = 1; j <= m; ++j)
                CHECK(eval_vtensor(mathring_rho(CoordFn{j, eta}), c, d) ==
                      tri[j - 1].coeff(eta));
        }
    }
}

TEST_CASE("pre-Lie identity for triangle and bullet") {
    std::mt19937 rng(21);
    for (int trial = 0; trial < 60; ++trial) {
        int m = 1 + trial % 2;
        VectorSeries a = random_proper(rng, m, 3, 12);
        VectorSeries b = random_proper(rng, m, 3, 12);
        VectorSeries c = random_proper(rng, m, 3, 12);
        auto assoc_tri = [&](const VectorSeries& x, const VectorSeries& y,
                             const VectorSeries& z) {
            return triangle(triangle(x, y), z) - triangle(x, triangle(y, z));
        };
        auto assoc_bul = [&](const VectorSeries& x, const VectorSeries& y,
                             const VectorSeries& z) {
            return bullet(bullet(x, y), z) - bullet(x, bullet(y, z));
        };
        CHECK(assoc_tri(a, b, c) == assoc_tri(a, c, b));
        CHECK(assoc_bul(a, b, c) == assoc_bul(a, c, b));
    }
}

TEST_CASE("com-pre-Lie Leibniz law over the shuffle") {
    std::mt19937 rng(33);
    for (int trial = 0; trial < 40; ++trial) {
        int m = 1 + trial % 2;
        VectorSeries c = random_proper(rng, m, 3, 10);
        VectorSeries d = random_proper(rng, m, 3, 10);
        VectorSeries h = random_proper(rng, m, 3, 10);
        CHECK(triangle(shuffle(c, d), h) ==
              shuffle(triangle(c, h), d) + shuffle(c, triangle(d, h)));
        int k = 1 + trial % m;
        CHECK(triangle(adorned_shuffle(c, d, k), h) ==
              adorned_shuffle(triangle(c, h), d, k) + adorned_shuffle(c, triangle(d, h), k));
    }
}

TEST_CASE("inadmissible g breaks the pre-Lie identity") {
    EndoG bad = EndoG::feedback_default(2);
    bad.entries[1][2] = 1;
    // search degree <= 2 basis triples for a witness
    bool found = false;
    std::vector<VectorSeries> basis;
    for (int j = 0; j < 2 && !found; ++j)
        for (const Word& w : words_upto(2, 2)) {
            if (w.is_empty()) continue;
            VectorSeries e(2, 8, 2);
            e[j].add_term(w, 1);
            basis.push_back(e);
        }
    for (const auto& a : basis)
        for (const auto& b : basis) {
            for (const auto& c : basis) {
                VectorSeries lhs = triangle(triangle(a, b, bad), c, bad) -
                                   triangle(a, triangle(b, c, bad), bad);
                VectorSeries rhs = triangle(triangle(a, c, bad), b, bad) -
                                   triangle(a, triangle(c, b, bad), bad);
                if (!(lhs == rhs)) {
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
    CHECK(found);
}

TEST_CASE("jacobi identity for the derived brackets") {
    std::mt19937 rng(55);
    EndoG g = EndoG::feedback_default(2);
    g.entries[2][2] = 3;
    for (int trial = 0; trial < 20; ++trial) {
        VectorSeries a = random_proper(rng, 2, 2, 12);
        VectorSeries b = random_proper(rng, 2, 2, 12);
        VectorSeries c = random_proper(rng, 2, 2, 12);
        for (PreLieOp op : {PreLieOp::TriangleG, PreLieOp::Bullet, PreLieOp::DiamondG}) {
            auto br = [&](const VectorSeries& x, const VectorSeries& y) {
                return lie_bracket(op, x, y, g);
            };
            CHECK(br(br(a, b), c) + br(br(b, c), a) + br(br(c, a), b) == VectorSeries(2, 12, 2));
        }
    }
}
