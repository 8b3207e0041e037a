#include "tanaka/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace tanaka {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Scalar parse_scalar(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
    Integer n(std::string(num), 10);
    Integer d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Scalar q(n, d);
    q.canonicalize();
    return negative ? Scalar(-q) : q;
}

std::string to_string(const Scalar& value) { return value.get_str(10); }

} // namespace tanaka
