#ifndef UQ_RATIONAL_HPP
#define UQ_RATIONAL_HPP

#include <cstdint>
#include <compare>
#include <iosfwd>
#include <string>

namespace uq {

// Exact rational arithmetic. All interval endpoints, weights and bound
// computations in this library are rationals; endpoint conditions in the
// error measures distinguish <= from < and would be corrupted by floats.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t value) : num_(value), den_(1) {}
    Rational(std::int64_t num, std::int64_t den);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    // Parses "3", "-2.75" or "7/3". Throws std::invalid_argument on junk.
    static Rational parse(const std::string& text);

    // Exact text form: integer, finite decimal when the denominator is
    // 2^a*5^b, otherwise "num/den". parse(to_string(x)) == x always.
    std::string to_string() const;

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    std::int64_t num_;
    std::int64_t den_;  // > 0, gcd(|num|, den) == 1
};

inline Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace uq

#endif
