#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace fliess {

/// Alphabet X = {x0, x1, ..., xm}; x0 is the drift letter.
struct Alphabet {
    int num_inputs = 0;  // m

    int size() const { return num_inputs + 1; }
    bool valid_letter(int i) const { return i >= 0 && i <= num_inputs; }
};

/// A word over an alphabet: a finite sequence of letter indices.
/// The empty word is the unit of catenation.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<int> letters) : letters_(std::move(letters)) {}
    Word(std::initializer_list<int> letters) : letters_(letters) {}

    static Word empty() { return Word{}; }
    static Word letter(int i) { return Word{{i}}; }
    /// x_i^n
    static Word power(int i, int n) { return Word(std::vector<int>(static_cast<size_t>(n), i)); }

    size_t length() const { return letters_.size(); }
    bool is_empty() const { return letters_.empty(); }
    int front() const { return letters_.front(); }
    int operator[](size_t k) const { return letters_[k]; }
    const std::vector<int>& letters() const { return letters_; }

    Word tail() const { return Word(std::vector<int>(letters_.begin() + 1, letters_.end())); }
    Word prepend(int i) const;
    Word cat(const Word& other) const;

    /// Number of leading x0 letters.
    size_t x0_prefix() const;
    /// True when every letter is x0 (empty word included).
    bool all_x0() const;
    bool fits(const Alphabet& a) const;

    /// "x1x0x1" with repeated runs folded as "x1^3"; empty word prints "1".
    std::string str() const;

    bool operator==(const Word& other) const = default;
    /// Graded order: by length first, then lexicographic.
    std::strong_ordering operator<=>(const Word& other) const;

private:
    std::vector<int> letters_;
};

}  // namespace fliess
