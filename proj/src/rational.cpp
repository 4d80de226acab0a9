#include "padicsum/rational.hpp"

namespace padicsum {

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(Int(text));
        const Int num(text.substr(0, slash));
        const Int den(text.substr(slash + 1));
        return make_rational(num, den);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("parse_rational: malformed rational '" + text + "'");
    }
}

std::string rational_to_text(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string rational_to_fraction_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

} // namespace padicsum
