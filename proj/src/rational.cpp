#include "octa/rational.hpp"

#include <cctype>

#include "octa/errors.hpp"

namespace octa {

namespace {

bool valid_integer_text(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && s[i] == '-') ++i;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text, const std::string& where) {
    const std::string prefix = where.empty() ? "" : where + ": ";
    const auto slash = text.find('/');
    std::string num = slash == std::string::npos ? text : text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!valid_integer_text(num) || !valid_integer_text(den))
        throw input_error(prefix + "malformed rational '" + text + "'");
    BigInt n(num), d(den);
    if (d == 0) throw input_error(prefix + "zero denominator in '" + text + "'");
    if (d < 0) throw input_error(prefix + "negative denominator in '" + text + "'");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string format_rational(const Rational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

int sign(const Rational& value) { return sgn(value); }

}  // namespace octa
