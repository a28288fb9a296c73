#include "fliess/words.hpp"

namespace fliess {

namespace {

void poly_add(WordPoly& target, const Word& w, const Rat& c) {
    auto it = target.find(w);
    if (it == target.end()) {
        if (c != 0) target.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second == 0) target.erase(it);
}

WordPoly shuffle_rec(const Word& u, const Word& v, std::map<std::pair<Word, Word>, WordPoly>& memo) {
    if (u.is_empty()) return {{v, 1}};
    if (v.is_empty()) return {{u, 1}};
    auto key = u <= v ? std::make_pair(u, v) : std::make_pair(v, u);
    if (auto it = memo.find(key); it != memo.end()) {
        if (key.first == u) return it->second;
        // shuffle is commutative; the memo holds the ordered pair
        return it->second;
    }
    WordPoly out;
    const Word& a = key.first;
    const Word& b = key.second;
    for (const auto& [w, c] : shuffle_rec(a.tail(), b, memo)) poly_add(out, w.prepend(a.front()), c);
    for (const auto& [w, c] : shuffle_rec(a, b.tail(), memo)) poly_add(out, w.prepend(b.front()), c);
    memo.emplace(key, out);
    return out;
}

}  // namespace

WordPoly shuffle_words(const Word& u, const Word& v) {
    std::map<std::pair<Word, Word>, WordPoly> memo;
    return shuffle_rec(u, v, memo);
}

std::vector<std::pair<std::pair<Word, Word>, std::int64_t>> unshuffle(const Word& w) {
    std::map<std::pair<Word, Word>, std::int64_t> acc;
    acc[{Word::empty(), Word::empty()}] = 1;
    for (size_t pos = w.length(); pos-- > 0;) {
        int letter = w[pos];
        std::map<std::pair<Word, Word>, std::int64_t> next;
        for (const auto& [split, mult] : acc) {
            next[{split.first.prepend(letter), split.second}] += mult;
            next[{split.first, split.second.prepend(letter)}] += mult;
        }
        acc = std::move(next);
    }
    return {acc.begin(), acc.end()};
}

}  // namespace fliess
