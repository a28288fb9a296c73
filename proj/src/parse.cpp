#include "fliess/parse.hpp"

#include <json.hpp>

#include <cctype>
#include <istream>
#include <ostream>

namespace fliess {

namespace {

class Scanner {
public:
    Scanner(const std::string& text, int num_inputs, int trunc_degree)
        : text_(text), m_(num_inputs), n_(trunc_degree) {}

    VectorSeries run() {
        std::vector<Series> components;
        components.push_back(component());
        while (peek() == ';') {
            ++pos_;
            components.push_back(component());
        }
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected character", pos_);
        return VectorSeries(std::move(components));
    }

private:
    const std::string& text_;
    int m_;
    int n_;
    size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Series component() {
        Series s(m_, n_);
        bool negative = false;
        char c = peek();
        if (c == '+' || c == '-') {
            negative = c == '-';
            ++pos_;
        }
        term(s, negative);
        while (true) {
            c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            term(s, c == '-');
        }
        return s;
    }

    void term(Series& s, bool negative) {
        char c = peek();
        bool has_coeff = std::isdigit(static_cast<unsigned char>(c)) || c == '.';
        Rat coeff = has_coeff ? number() : Rat{1};
        Word w = word();
        if (!has_coeff && w.is_empty()) throw ParseError("expected a coefficient or a word", pos_);
        if (w.length() > static_cast<size_t>(n_))
            throw ParseError("word exceeds the truncation degree", pos_);
        s.add_term(w, negative ? -coeff : coeff);
    }

    Rat number() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
            ++pos_;
        std::string digits = text_.substr(start, pos_ - start);
        if (peek() == '/') {
            ++pos_;
            skip_ws();
            size_t dstart = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (pos_ == dstart) throw ParseError("expected a denominator", pos_);
            digits += "/" + text_.substr(dstart, pos_ - dstart);
        }
        try {
            return rat_from_string(digits);
        } catch (const std::invalid_argument&) {
            throw ParseError("bad number '" + digits + "'", start);
        }
    }

    Word word() {
        std::vector<int> letters;
        while (peek() == 'x') {
            size_t at = pos_;
            ++pos_;
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                throw ParseError("expected a letter index after 'x'", pos_);
            int index = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                index = index * 10 + (text_[pos_++] - '0');
            if (index > m_) throw ParseError("letter x" + std::to_string(index) + " outside alphabet", at);
            int power = 1;
            if (pos_ < text_.size() && text_[pos_] == '^') {
                ++pos_;
                if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    throw ParseError("expected an exponent after '^'", pos_);
                power = 0;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    power = power * 10 + (text_[pos_++] - '0');
            }
            for (int k = 0; k < power; ++k) letters.push_back(index);
        }
        return Word(std::move(letters));
    }
};

}  // namespace

VectorSeries parse_series(const std::string& text, int num_inputs, int trunc_degree) {
    return Scanner(text, num_inputs, trunc_degree).run();
}

std::string format_series(const Series& s) {
    if (s.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : s.terms()) {
        Rat mag = c < 0 ? -c : c;
        out += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
        if (mag != 1 || w.is_empty()) out += rat_to_string(mag);
        if (!w.is_empty()) {
            if (mag != 1) out += " ";
            out += w.str();
        }
        first = false;
    }
    return out;
}

std::string format_series(const VectorSeries& s) {
    std::string out;
    for (int j = 0; j < s.dim(); ++j) {
        if (j) out += "; ";
        out += format_series(s[j]);
    }
    return out;
}

VectorSeries read_series_json(std::istream& in) {
    nlohmann::json doc = nlohmann::json::parse(in);
    int m = doc.at("alphabet_inputs").get<int>();
    int n = doc.at("trunc_degree").get<int>();
    std::vector<Series> components;
    for (const auto& comp : doc.at("components")) {
        Series s(m, n);
        for (const auto& term : comp) {
            Word w(term.at("word").get<std::vector<int>>());
            if (!w.fits(Alphabet{m})) throw std::invalid_argument("word letter outside alphabet");
            s.add_term(w, rat_from_string(term.at("coeff").get<std::string>()));
        }
        components.push_back(std::move(s));
    }
    return VectorSeries(std::move(components));
}

void write_series_json(std::ostream& out, const VectorSeries& s) {
    nlohmann::json components = nlohmann::json::array();
    for (int j = 0; j < s.dim(); ++j) {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [w, c] : s[j].terms())
            terms.push_back({{"word", w.letters()}, {"coeff", rat_to_string(c)}});
        components.push_back(std::move(terms));
    }
    nlohmann::json doc{{"alphabet_inputs", s.inputs()},
                       {"trunc_degree", s.trunc()},
                       {"components", std::move(components)}};
    out << doc.dump(2) << "\n";
}

}  // namespace fliess
