#include "wreath/rational.hpp"
#include "wreath/error.hpp"

namespace wreath {

namespace {

bool is_integer_token(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (c < '0' || c > '9')
            return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    if (!is_integer_token(num))
        throw Error("malformed rational \"" + std::string(text) + "\"");
    if (slash == std::string_view::npos)
        return Rational(Integer(std::string(num)));
    std::string_view den = text.substr(slash + 1);
    if (!is_integer_token(den))
        throw Error("malformed rational \"" + std::string(text) + "\"");
    Integer d{std::string(den)};
    if (d == 0)
        throw Error("zero denominator in rational \"" + std::string(text) + "\"");
    return Rational(Integer(std::string(num)), d);
}

std::string rational_str(const Rational& value) {
    std::string out = numerator(value).str();
    if (denominator(value) != 1) {
        out += '/';
        out += denominator(value).str();
    }
    return out;
}

Integer factorial(unsigned n) {
    Integer out = 1;
    for (unsigned k = 2; k <= n; ++k)
        out *= k;
    return out;
}

Integer binomial(unsigned n, unsigned k) {
    if (k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    Integer out = 1;
    for (unsigned i = 0; i < k; ++i) {
        out *= n - i;
        out /= i + 1;
    }
    return out;
}

} // namespace wreath
