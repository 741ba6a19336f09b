#include "pervlab/rational.hpp"

#include <cctype>

namespace pervlab {

namespace {

bool is_signed_integer(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!is_signed_integer(s)) throw ParseError("not a rational literal: '" + s + "'");
        return Rat(BigInt(s));
    }
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!is_signed_integer(num) || !is_signed_integer(den))
        throw ParseError("not a rational literal: '" + s + "'");
    BigInt d(den);
    if (d == 0) throw ParseError("zero denominator in '" + s + "'");
    return Rat(BigInt(num), d);
}

std::string rat_to_string(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace pervlab
