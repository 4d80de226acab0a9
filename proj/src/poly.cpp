#include "padicsum/poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace padicsum {

Polynomial bipoly_eval_n(const BiPolynomial& a, const Int& n) {
    std::vector<Rational> coeffs;
    coeffs.reserve(a.coefficients().size());
    const Rational at(n);
    for (const NPolynomial& c : a.coefficients()) coeffs.push_back(evaluate(c, at));
    return Polynomial::from_coefficients(std::move(coeffs));
}

NPolynomial bipoly_eval_x(const BiPolynomial& a, const Rational& x) {
    NPolynomial acc;
    const auto& cs = a.coefficients();
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

BiPolynomial lift_to_bipoly(const Polynomial& p) {
    std::vector<NPolynomial> coeffs;
    coeffs.reserve(p.coefficients().size());
    for (const Rational& c : p.coefficients()) coeffs.push_back(NPolynomial(c));
    return BiPolynomial::from_coefficients(std::move(coeffs));
}

namespace {

Rational abs_rational(const Rational& q) { return sgn(q) < 0 ? Rational(-q) : q; }

std::string power_suffix(char var, std::size_t e) {
    if (e == 0) return "";
    std::string s(1, var);
    if (e > 1) s += "^" + std::to_string(e);
    return s;
}

template <char Var>
std::string univariate_to_text(const BasicPoly<Rational, Var>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    const auto& cs = p.coefficients();
    for (std::size_t i = cs.size(); i-- > 0;) {
        const Rational& c = cs[i];
        if (coeff_is_zero(c)) continue;
        if (sgn(c) < 0)
            out += '-';
        else if (!out.empty())
            out += '+';
        const Rational mag = abs_rational(c);
        if (mag != 1 || i == 0) out += rational_to_text(mag);
        out += power_suffix(Var, i);
    }
    return out;
}

struct SignedTerm {
    int sign;
    std::string body;
};

// Splits "a+b-c" on top-level signs, tracking parenthesis depth.
std::vector<SignedTerm> split_terms(const std::string& text) {
    std::vector<SignedTerm> terms;
    if (text.find_first_not_of(" \t") == std::string::npos)
        throw std::invalid_argument("empty polynomial text");
    int depth = 0;
    int sign = +1;
    std::string body;
    bool expecting_term = true;
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (depth == 0 && (ch == '+' || ch == '-') && !expecting_term) {
            terms.push_back({sign, body});
            body.clear();
            sign = ch == '-' ? -1 : +1;
            expecting_term = true;
            continue;
        }
        if (expecting_term && (ch == '+' || ch == '-')) {
            // sign glued to the first term, or doubled sign
            sign *= ch == '-' ? -1 : +1;
            continue;
        }
        body += ch;
        expecting_term = false;
    }
    if (depth != 0) throw std::invalid_argument("unbalanced parentheses: " + text);
    if (!body.empty()) terms.push_back({sign, body});
    return terms;
}

std::size_t parse_exponent(const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) {
            return std::isdigit(c);
        }))
        throw std::invalid_argument("malformed exponent '" + s + "'");
    return std::stoul(s);
}

// "<magnitude>", "<magnitude>v", "<magnitude>v^e", "v", "v^e"
template <char Var>
std::pair<Rational, std::size_t> parse_monomial(const std::string& body) {
    const auto var_pos = body.find(Var);
    std::string magnitude = var_pos == std::string::npos ? body : body.substr(0, var_pos);
    if (magnitude.empty()) magnitude = "1";
    Rational coeff = parse_rational(magnitude);
    std::size_t exponent = 0;
    if (var_pos != std::string::npos) {
        exponent = 1;
        const std::string rest = body.substr(var_pos + 1);
        if (!rest.empty()) {
            if (rest[0] != '^')
                throw std::invalid_argument("malformed term '" + body + "'");
            exponent = parse_exponent(rest.substr(1));
        }
    }
    return {coeff, exponent};
}

template <char Var>
BasicPoly<Rational, Var> parse_univariate(const std::string& text) {
    std::vector<Rational> coeffs;
    for (const auto& [sign, body] : split_terms(text)) {
        auto [coeff, exponent] = parse_monomial<Var>(body);
        if (sign < 0) coeff = -coeff;
        if (coeffs.size() <= exponent) coeffs.resize(exponent + 1, Rational(0));
        coeffs[exponent] += coeff;
    }
    return BasicPoly<Rational, Var>::from_coefficients(std::move(coeffs));
}

bool is_monomial(const NPolynomial& p) {
    int nonzero = 0;
    for (const Rational& c : p.coefficients())
        if (!coeff_is_zero(c)) ++nonzero;
    return nonzero == 1;
}

} // namespace

std::string to_text(const Polynomial& p) { return univariate_to_text(p); }
std::string to_text(const NPolynomial& p) { return univariate_to_text(p); }

std::string to_text(const BiPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    const auto& cs = p.coefficients();
    for (std::size_t i = cs.size(); i-- > 0;) {
        const NPolynomial& c = cs[i];
        if (c.is_zero()) continue;
        if (is_monomial(c)) {
            // inline: "-n^2", "4nx^2"
            const Rational& lead = c.leading_coefficient();
            if (sgn(lead) < 0)
                out += '-';
            else if (!out.empty())
                out += '+';
            const Rational mag = abs_rational(lead);
            const std::size_t ndeg = static_cast<std::size_t>(c.degree());
            if (mag != 1 || (ndeg == 0 && i == 0)) out += rational_to_text(mag);
            out += power_suffix('n', ndeg);
            out += power_suffix('x', i);
        } else {
            // parenthesized, sign taken from the leading n-coefficient
            const bool negative = sgn(c.leading_coefficient()) < 0;
            if (negative)
                out += '-';
            else if (!out.empty())
                out += '+';
            out += '(' + to_text(negative ? NPolynomial(-c) : c) + ')';
            out += power_suffix('x', i);
        }
    }
    return out;
}

Polynomial parse_polynomial(const std::string& text) {
    return parse_univariate<'x'>(text);
}

NPolynomial parse_npolynomial(const std::string& text) {
    return parse_univariate<'n'>(text);
}

BiPolynomial parse_bipolynomial(const std::string& text) {
    std::vector<NPolynomial> coeffs;
    auto add = [&coeffs](std::size_t exponent, const NPolynomial& c) {
        if (coeffs.size() <= exponent) coeffs.resize(exponent + 1);
        coeffs[exponent] = coeffs[exponent] + c;
    };
    for (const auto& [sign, body] : split_terms(text)) {
        NPolynomial coeff;
        std::string xpart;
        if (!body.empty() && body[0] == '(') {
            const auto close = body.find(')');
            if (close == std::string::npos)
                throw std::invalid_argument("malformed term '" + body + "'");
            coeff = parse_npolynomial(body.substr(1, close - 1));
            xpart = body.substr(close + 1);
        } else {
            const auto x_pos = body.find('x');
            const std::string npart =
                x_pos == std::string::npos ? body : body.substr(0, x_pos);
            coeff = npart.empty() ? NPolynomial(1) : parse_npolynomial(npart);
            xpart = x_pos == std::string::npos ? "" : body.substr(x_pos);
        }
        std::size_t exponent = 0;
        if (!xpart.empty()) {
            if (xpart[0] != 'x')
                throw std::invalid_argument("malformed term '" + body + "'");
            exponent = xpart.size() == 1 ? 1 : (xpart[1] == '^'
                           ? parse_exponent(xpart.substr(2))
                           : throw std::invalid_argument("malformed term '" + body + "'"));
        }
        add(exponent, sign < 0 ? NPolynomial(-coeff) : coeff);
    }
    return BiPolynomial::from_coefficients(std::move(coeffs));
}

namespace {

template <char Var>
std::vector<std::string> univariate_strings(const BasicPoly<Rational, Var>& p) {
    std::vector<std::string> out;
    out.reserve(p.coefficients().size());
    for (const Rational& c : p.coefficients())
        out.push_back(rational_to_fraction_string(c));
    return out;
}

template <char Var>
BasicPoly<Rational, Var> univariate_from_strings(const std::vector<std::string>& coeffs) {
    std::vector<Rational> cs;
    cs.reserve(coeffs.size());
    for (const std::string& s : coeffs) cs.push_back(parse_rational(s));
    return BasicPoly<Rational, Var>::from_coefficients(std::move(cs));
}

} // namespace

std::vector<std::string> coefficient_strings(const Polynomial& p) {
    return univariate_strings(p);
}
std::vector<std::string> coefficient_strings(const NPolynomial& p) {
    return univariate_strings(p);
}
std::vector<std::vector<std::string>> coefficient_strings(const BiPolynomial& p) {
    std::vector<std::vector<std::string>> out;
    out.reserve(p.coefficients().size());
    for (const NPolynomial& c : p.coefficients())
        out.push_back(univariate_strings(c));
    return out;
}

Polynomial polynomial_from_strings(const std::vector<std::string>& coeffs) {
    return univariate_from_strings<'x'>(coeffs);
}
NPolynomial npolynomial_from_strings(const std::vector<std::string>& coeffs) {
    return univariate_from_strings<'n'>(coeffs);
}
BiPolynomial bipolynomial_from_strings(
    const std::vector<std::vector<std::string>>& coeffs) {
    std::vector<NPolynomial> cs;
    cs.reserve(coeffs.size());
    for (const auto& c : coeffs) cs.push_back(univariate_from_strings<'n'>(c));
    return BiPolynomial::from_coefficients(std::move(cs));
}

} // namespace padicsum
