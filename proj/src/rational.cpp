#include "lieaff/rational.hpp"

#include "lieaff/error.hpp"

#include <cctype>
#include <ostream>

namespace lieaff {

namespace {

bool allDigits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rational::Rational(long num, long den) {
    if (den == 0) throw Error("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational& Rational::operator/=(const Rational& o) {
    if (o.isZero()) throw Error("division by zero");
    value_ /= o.value_;
    return *this;
}

Rational Rational::parse(std::string_view text) {
    const std::string original(text);
    bool negative = false;
    if (text.starts_with("\xE2\x88\x92")) { // U+2212 MINUS SIGN
        negative = true;
        text.remove_prefix(3);
    } else if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    const auto slash = text.find('/');
    const std::string_view numText = text.substr(0, slash);
    const std::string_view denText =
        slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!allDigits(numText) || !allDigits(denText))
        throw Error("malformed rational '" + original + "'");
    mpz_class num(std::string(numText), 10);
    mpz_class den(std::string(denText), 10);
    if (den == 0) throw Error("zero denominator in rational '" + original + "'");
    if (negative) num = -num;
    return Rational(mpq_class(num, den));
}

std::string Rational::str() const { return value_.get_str(10); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace lieaff
