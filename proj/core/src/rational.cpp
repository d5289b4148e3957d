#include "majorkit/rational.hpp"

#include <cctype>

namespace majorkit {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
    // Trim surrounding blanks.
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw parse_error("empty rational literal");

    if (text.find('.') != std::string_view::npos || text.find('e') != std::string_view::npos ||
        text.find('E') != std::string_view::npos)
        throw parse_error("decimal notation is not accepted, use an exact p/q fraction: '" +
                          std::string(text) + "'");

    bool negative = false;
    if (text.front() == '+' || text.front() == '-') {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }

    std::string_view num = text;
    std::string_view den = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    if (!all_digits(num) || !all_digits(den))
        throw parse_error("malformed rational literal '" + std::string(text) + "', expected p or p/q");

    BigInt p{std::string(num)};
    BigInt q{std::string(den)};
    if (q == 0) throw parse_error("zero denominator in '" + std::string(text) + "'");
    if (negative) p = -p;
    return Rational(p, q); // canonicalizes
}

std::string to_string(const Rational& r) {
    return r.str();
}

} // namespace majorkit
