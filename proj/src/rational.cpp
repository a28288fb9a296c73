#include "fliess/rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>

namespace fliess {

namespace {
using Int = boost::multiprecision::cpp_int;

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}
}  // namespace

std::string rat_to_string(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

Rat rat_from_string(std::string_view s) {
    std::string_view body = s;
    bool neg = false;
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
        neg = body.front() == '-';
        body.remove_prefix(1);
    }
    auto fail = [&] { throw std::invalid_argument("bad rational: '" + std::string(s) + "'"); };
    Rat value;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        auto num = body.substr(0, slash);
        auto den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) fail();
        Int d{std::string(den)};
        if (d == 0) fail();
        value = Rat(Int{std::string(num)}, d);
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        auto whole = body.substr(0, dot);
        auto frac = body.substr(dot + 1);
        if (whole.empty() && frac.empty()) fail();
        if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac))) fail();
        Int scale = 1;
        for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
        Int num = whole.empty() ? Int{0} : Int{std::string(whole)};
        num *= scale;
        if (!frac.empty()) num += Int{std::string(frac)};
        value = Rat(num, scale);
    } else {
        if (!all_digits(body)) fail();
        value = Rat(Int{std::string(body)});
    }
    return neg ? -value : value;
}

}  // namespace fliess
