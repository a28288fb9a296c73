#include "fliess/word.hpp"

namespace fliess {

Word Word::prepend(int i) const {
    std::vector<int> out;
    out.reserve(letters_.size() + 1);
    out.push_back(i);
    out.insert(out.end(), letters_.begin(), letters_.end());
    return Word(std::move(out));
}

Word Word::cat(const Word& other) const {
    std::vector<int> out = letters_;
    out.insert(out.end(), other.letters_.begin(), other.letters_.end());
    return Word(std::move(out));
}

size_t Word::x0_prefix() const {
    size_t n = 0;
    while (n < letters_.size() && letters_[n] == 0) ++n;
    return n;
}

bool Word::all_x0() const {
    for (int i : letters_)
        if (i != 0) return false;
    return true;
}

bool Word::fits(const Alphabet& a) const {
    for (int i : letters_)
        if (!a.valid_letter(i)) return false;
    return true;
}

std::string Word::str() const {
    if (letters_.empty()) return "1";
    std::string out;
    size_t k = 0;
    while (k < letters_.size()) {
        size_t run = 1;
        while (k + run < letters_.size() && letters_[k + run] == letters_[k]) ++run;
        out += "x" + std::to_string(letters_[k]);
        if (run > 1) out += "^" + std::to_string(run);
        k += run;
    }
    return out;
}

std::strong_ordering Word::operator<=>(const Word& other) const {
    if (auto c = letters_.size() <=> other.letters_.size(); c != 0) return c;
    return letters_ <=> other.letters_;
}

}  // namespace fliess
