#include "zpd/rational.hpp"

#include "zpd/errors.hpp"

#include <cctype>

namespace zpd {

std::string to_string(const Rational &value) {
    Rational q(value);
    q.canonicalize();
    if (q.get_den() == 1) {
        return q.get_num().get_str();
    }
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool is_signed_integer(std::string_view s, bool allow_sign) {
    if (s.empty()) {
        return false;
    }
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) {
        i = 1;
    }
    if (i == s.size()) {
        return false;
    }
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            return false;
        }
    }
    return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    const auto den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_signed_integer(num, true) || !is_signed_integer(den, false)) {
        throw InputError("not a rational number: \"" + std::string(text) + "\"");
    }
    const std::string num_str(num[0] == '+' ? num.substr(1) : num);
    Integer d(std::string(den), 10);
    if (d == 0) {
        throw InputError("zero denominator in \"" + std::string(text) + "\"");
    }
    Rational q(Integer(num_str, 10), d);
    q.canonicalize();
    return q;
}

} // namespace zpd
