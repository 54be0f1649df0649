#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace ppg {

// Exact rational value. Always stored reduced with a positive denominator;
// every operation is exact. Nothing in the core ever rounds.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(long long n);
    Rational(long num, long den);

    // Accepts "num/den" or a bare integer, base 10.
    static Rational parse(const std::string& text);

    // Shortest form: "5", "-3/7".
    std::string str() const;
    // Always "num/den", e.g. "5/1"; the wire format.
    std::string fraction_str() const;

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    // For display and DOT positions only.
    double to_double() const { return v_.get_d(); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) != 0; }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

    friend Rational abs(const Rational& r) {
        return r.sign() < 0 ? -r : r;
    }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}

    mpq_class v_;  // kept canonical
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace ppg
