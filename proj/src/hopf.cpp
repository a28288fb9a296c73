#include "fliess/hopf.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace fliess {

std::string CoordFn::str() const { return "a[" + std::to_string(component) + ":" + word.str() + "]"; }

std::strong_ordering CoordFn::operator<=>(const CoordFn& other) const {
    if (auto c = word <=> other.word; c != 0) return c;
    return component <=> other.component;
}

Monomial::Monomial(CoordFn a) {
    if (!a.word.is_empty()) factors_.push_back(std::move(a));
}

Monomial::Monomial(std::vector<CoordFn> factors) {
    for (auto& a : factors)
        if (!a.word.is_empty()) factors_.push_back(std::move(a));
    std::sort(factors_.begin(), factors_.end());
}

size_t Monomial::degree() const {
    size_t d = 0;
    for (const auto& a : factors_) d += a.degree();
    return d;
}

Monomial Monomial::times(const Monomial& other) const {
    std::vector<CoordFn> all = factors_;
    all.insert(all.end(), other.factors_.begin(), other.factors_.end());
    std::sort(all.begin(), all.end());
    Monomial out;
    out.factors_ = std::move(all);
    return out;
}

Monomial Monomial::times(const CoordFn& a) const { return times(Monomial(a)); }

std::string Monomial::str() const {
    if (factors_.empty()) return "1";
    std::string out;
    for (size_t k = 0; k < factors_.size(); ++k) {
        if (k) out += ".";
        out += factors_[k].str();
    }
    return out;
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
    if (auto c = degree() <=> other.degree(); c != 0) return c;
    return factors_ <=> other.factors_;
}

HElem h_one() { return {{Monomial::unit(), 1}}; }

HElem h_gen(const CoordFn& a) { return {{Monomial(a), 1}}; }

HElem h_from(const Monomial& mono, Rat coeff) {
    if (coeff == 0) return {};
    return {{mono, std::move(coeff)}};
}

void h_add(HElem& target, const Monomial& mono, const Rat& coeff) {
    if (coeff == 0) return;
    auto it = target.find(mono);
    if (it == target.end()) {
        target.emplace(mono, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0) target.erase(it);
}

void ht_add(HTensor& target, const Monomial& left, const Monomial& right, const Rat& coeff) {
    if (coeff == 0) return;
    auto key = std::make_pair(left, right);
    auto it = target.find(key);
    if (it == target.end()) {
        target.emplace(std::move(key), coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0) target.erase(it);
}

HElem h_mul(const HElem& a, const HElem& b) {
    HElem out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) h_add(out, ma.times(mb), ca * cb);
    return out;
}

namespace {

std::string coeff_prefix(const Rat& c, bool first) {
    Rat mag = c < 0 ? -c : c;
    std::string out = first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    if (mag != 1) out += rat_to_string(mag) + " ";
    return out;
}

}  // namespace

std::string h_str(const HElem& h) {
    if (h.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : h) {
        out += coeff_prefix(c, first);
        if (m.is_unit() && (c == 1 || c == -1)) out += "1";
        else out += m.str();
        first = false;
    }
    return out;
}

std::string ht_str(const HTensor& t) {
    if (t.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [pair, c] : t) {
        out += coeff_prefix(c, first);
        out += pair.first.str() + " ⊗ " + pair.second.str();
        first = false;
    }
    return out;
}

CoordFn theta(int k, const CoordFn& a) {
    if (k < 0) throw std::invalid_argument("theta: negative letter index");
    return CoordFn{a.component, a.word.prepend(k)};
}

namespace {

// rho on a generator a^j_eta: the left tensor factor is always the single
// coordinate a^j_w, so only the word w and the right monomial need storing.
// The structure is independent of j; components in the right factor come
// from the letters of eta.
using RhoGen = std::map<std::pair<Word, Monomial>, Rat>;

void rg_add(RhoGen& target, const Word& w, const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto key = std::make_pair(w, m);
    auto it = target.find(key);
    if (it == target.end()) {
        target.emplace(std::move(key), c);
        return;
    }
    it->second += c;
    if (it->second == 0) target.erase(it);
}

const RhoGen& rho_gen(const Word& eta) {
    static std::map<Word, RhoGen> memo;
    static std::mutex mu;
    {
        std::lock_guard lock(mu);
        if (auto it = memo.find(eta); it != memo.end()) return it->second;
    }
    RhoGen out;
    if (eta.is_empty()) {
        out.emplace(std::make_pair(Word::empty(), Monomial::unit()), 1);
    } else if (eta.front() == 0) {
        for (const auto& [key, c] : rho_gen(eta.tail()))
            rg_add(out, key.first.prepend(0), key.second, c);
    } else {
        int k = eta.front();
        for (const auto& [split, mult] : unshuffle(eta.tail())) {
            const auto& [eta1, eta2] = split;
            Monomial extra(CoordFn{k, eta2});  // a^k_1 collapses to the unit
            for (const auto& [key, c] : rho_gen(eta1))
                rg_add(out, key.first.prepend(k), key.second.times(extra), c * mult);
        }
    }
    std::lock_guard lock(mu);
    return memo.emplace(eta, std::move(out)).first->second;
}

Monomial left_monomial(int component, const Word& w) {
    return Monomial(CoordFn{component, w});
}

HTensor rho_coord(const CoordFn& a) {
    HTensor out;
    for (const auto& [key, c] : rho_gen(a.word))
        ht_add(out, left_monomial(a.component, key.first), key.second, c);
    return out;
}

HTensor ht_tensor_mul(const HTensor& a, const HTensor& b) {
    HTensor out;
    for (const auto& [pa, ca] : a)
        for (const auto& [pb, cb] : b)
            ht_add(out, pa.first.times(pb.first), pa.second.times(pb.second), ca * cb);
    return out;
}

HTensor coprod_monomial(const Monomial& m, HTensor (*on_coord)(const CoordFn&)) {
    HTensor out;
    ht_add(out, Monomial::unit(), Monomial::unit(), 1);
    for (const auto& a : m.factors()) out = ht_tensor_mul(out, on_coord(a));
    return out;
}

HTensor coprod_lift(const HElem& h, HTensor (*on_coord)(const CoordFn&)) {
    HTensor out;
    for (const auto& [m, c] : h)
        for (const auto& [pair, t] : coprod_monomial(m, on_coord))
            ht_add(out, pair.first, pair.second, c * t);
    return out;
}

HTensor delta_shuffle_coord(const CoordFn& a) {
    HTensor out;
    for (const auto& [split, mult] : unshuffle(a.word))
        ht_add(out, left_monomial(a.component, split.first),
               left_monomial(a.component, split.second), mult);
    return out;
}

HTensor delta_star_coord(const CoordFn& a) {
    HTensor out;
    for (const auto& [split, mult] : unshuffle(a.word)) {
        const auto& [eta1, eta2] = split;
        Monomial tail(CoordFn{a.component, eta2});
        for (const auto& [key, c] : rho_gen(eta1))
            ht_add(out, left_monomial(a.component, key.first), key.second.times(tail),
                   c * mult);
    }
    return out;
}

const HElem& antipode_coord(const CoordFn& a) {
    static std::map<std::pair<int, Word>, HElem> memo;
    static std::mutex mu;
    auto key = std::make_pair(a.component, a.word);
    {
        std::lock_guard lock(mu);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
    }
    HElem out;
    Monomial self(a);
    h_add(out, self, -1);
    for (const auto& [pair, c] : delta_star_coord(a)) {
        const auto& [left, right] = pair;
        if (left.is_unit() || right.is_unit()) continue;  // drops a(x)1 and 1(x)a
        // right-handedness: the left factor is a single lower-degree generator
        const CoordFn& gen = left.factors().front();
        for (const auto& [m, cs] : antipode_coord(gen)) h_add(out, m.times(right), -c * cs);
    }
    std::lock_guard lock(mu);
    return memo.emplace(std::move(key), std::move(out)).first->second;
}

}  // namespace

HTensor delta_shuffle(const HElem& h) { return coprod_lift(h, &delta_shuffle_coord); }

HTensor rho(const HElem& h) { return coprod_lift(h, &rho_coord); }

HTensor delta_star(const HElem& h) { return coprod_lift(h, &delta_star_coord); }

Rat counit(const HElem& h) {
    auto it = h.find(Monomial::unit());
    return it == h.end() ? Rat{0} : it->second;
}

HElem antipode(const HElem& h) {
    HElem out;
    for (const auto& [m, c] : h) {
        HElem term = h_one();
        for (const auto& a : m.factors()) term = h_mul(term, antipode_coord(a));
        for (const auto& [tm, tc] : term) h_add(out, tm, c * tc);
    }
    return out;
}

Rat eval_character(const HElem& h, const VectorSeries& c) {
    for (int j = 0; j < c.dim(); ++j)
        if (c[j].constant_term() != 1)
            throw std::domain_error("character evaluation requires unit constant terms");
    Rat out = 0;
    for (const auto& [m, coeff] : h) {
        Rat value = coeff;
        for (const auto& a : m.factors()) {
            if (a.component < 1 || a.component > c.dim())
                throw std::invalid_argument("coordinate component out of range");
            value *= c[a.component - 1].coeff(a.word);
            if (value == 0) break;
        }
        out += value;
    }
    return out;
}

namespace {

void enumerate_words(const Alphabet& alpha, int max_len, Word prefix,
                     std::vector<Word>& out) {
    out.push_back(prefix);
    if (static_cast<int>(prefix.length()) == max_len) return;
    for (int i = 0; i <= alpha.num_inputs; ++i)
        enumerate_words(alpha, max_len, prefix.cat(Word::letter(i)), out);
}

}  // namespace

VectorSeries star_inverse_via_antipode(const VectorSeries& c) {
    if (c.dim() != c.inputs())
        throw std::invalid_argument("star inverse requires dimension equal to the input count");
    for (int j = 0; j < c.dim(); ++j)
        if (c[j].constant_term() != 1)
            throw std::domain_error("star inverse via antipode requires unit constant terms");
    std::vector<Word> words;
    enumerate_words(Alphabet{c.inputs()}, c.trunc(), Word::empty(), words);
    VectorSeries out(c.inputs(), c.trunc(), c.dim());
    for (int j = 0; j < c.dim(); ++j)
        for (const Word& eta : words) {
            HElem s = eta.is_empty() ? h_one() : antipode(h_gen(CoordFn{j + 1, eta}));
            out[j].add_term(eta, eval_character(s, c));
        }
    return out;
}

}  // namespace fliess
