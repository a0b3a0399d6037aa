#include "ringcode/rational.hpp"

#include <charconv>
#include <stdexcept>

namespace ringcode {

std::string to_string(const Rational& value) {
    return std::to_string(value.numerator()) + "/" + std::to_string(value.denominator());
}

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
    std::int64_t out = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
        throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    return out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text, text));
    const std::int64_t den = parse_int(text.substr(slash + 1), text);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(parse_int(text.substr(0, slash), text), den);
}

bool is_integer(const Rational& value) { return value.denominator() == 1; }

std::int64_t floor(const Rational& value) {
    const std::int64_t n = value.numerator();
    const std::int64_t d = value.denominator();  // always > 0 after normalization
    std::int64_t q = n / d;
    if (n % d != 0 && n < 0) --q;
    return q;
}

}  // namespace ringcode
