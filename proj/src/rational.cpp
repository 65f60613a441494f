#include "uq/rational.hpp"

#include <cctype>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace uq {

namespace {

using i128 = __int128;

std::int64_t checked_narrow(i128 v, const char* what) {
    if (v > i128(INT64_MAX) || v < i128(INT64_MIN))
        throw std::overflow_error(std::string("rational overflow in ") + what);
    return static_cast<std::int64_t>(v);
}

struct ReducedPair {
    std::int64_t num;
    std::int64_t den;
};

ReducedPair reduce128(i128 num, i128 den, const char* what) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    i128 a = num < 0 ? -num : num;
    i128 b = den;
    while (b != 0) { i128 t = a % b; a = b; b = t; }
    if (a != 0) { num /= a; den /= a; }
    return {checked_narrow(num, what), checked_narrow(den, what)};
}

Rational make_normalized(i128 num, i128 den, const char* what) {
    ReducedPair r = reduce128(num, den, what);
    return Rational(r.num, r.den);
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    ReducedPair r = reduce128(num, den, "ctor");
    num_ = r.num;
    den_ = r.den;
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational operator+(const Rational& a, const Rational& b) {
    return make_normalized(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                           i128(a.den_) * b.den_, "add");
}

Rational operator-(const Rational& a, const Rational& b) {
    return make_normalized(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                           i128(a.den_) * b.den_, "sub");
}

Rational operator*(const Rational& a, const Rational& b) {
    return make_normalized(i128(a.num_) * b.num_, i128(a.den_) * b.den_, "mul");
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::invalid_argument("rational division by zero");
    return make_normalized(i128(a.num_) * b.den_, i128(a.den_) * b.num_, "div");
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    i128 lhs = i128(a.num_) * b.den_;
    i128 rhs = i128(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    std::size_t pos = 0;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
        negative = text[pos] == '-';
        ++pos;
    }
    if (pos >= text.size()) throw std::invalid_argument("bad rational literal: " + text);

    auto digits = [&](std::size_t& p) {
        std::size_t start = p;
        while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) ++p;
        if (p == start) throw std::invalid_argument("bad rational literal: " + text);
        return text.substr(start, p - start);
    };

    std::string intpart = digits(pos);
    i128 num = 0;
    for (char c : intpart) num = num * 10 + (c - '0');
    i128 den = 1;

    if (pos < text.size() && text[pos] == '.') {
        ++pos;
        std::string frac = digits(pos);
        for (char c : frac) {
            num = num * 10 + (c - '0');
            den *= 10;
            if (den > i128(1000000000000000000LL))
                throw std::invalid_argument("rational literal too precise: " + text);
        }
    } else if (pos < text.size() && text[pos] == '/') {
        ++pos;
        std::string d = digits(pos);
        den = 0;
        for (char c : d) den = den * 10 + (c - '0');
    }
    if (pos != text.size()) throw std::invalid_argument("bad rational literal: " + text);
    if (negative) num = -num;
    return make_normalized(num, den, "parse");
}

std::string Rational::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    // Try a finite decimal expansion.
    std::int64_t d = den_;
    int twos = 0, fives = 0;
    while (d % 2 == 0) { d /= 2; ++twos; }
    while (d % 5 == 0) { d /= 5; ++fives; }
    if (d == 1) {
        int digits = twos > fives ? twos : fives;
        i128 scale = 1;
        for (int i = 0; i < digits; ++i) scale *= 10;
        i128 scaled = i128(num_) * scale / den_;
        bool neg = scaled < 0;
        if (neg) scaled = -scaled;
        std::string raw;
        if (scaled == 0) raw = "0";
        while (scaled > 0) {
            raw.insert(raw.begin(), static_cast<char>('0' + int(scaled % 10)));
            scaled /= 10;
        }
        while (static_cast<int>(raw.size()) <= digits) raw.insert(raw.begin(), '0');
        raw.insert(raw.size() - digits, ".");
        if (neg) raw.insert(raw.begin(), '-');
        return raw;
    }
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace uq
