#include "ppg/rational.hpp"

#include <cctype>
#include <ostream>

#include "ppg/errors.hpp"

namespace ppg {

Rational::Rational(long long n) : v_(0) {
    mpz_class z;
    // mpz has no long long ctor on LP64 this is the same as long, but stay portable
    if (n >= 0) {
        z = static_cast<unsigned long>(n);
    } else {
        z = static_cast<unsigned long>(-(n + 1));
        z += 1;
        z = -z;
    }
    v_ = mpq_class(z);
}

Rational::Rational(long num, long den) : v_(0) {
    if (den == 0) {
        throw Error("rational with zero denominator");
    }
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    if (text.empty()) {
        throw Error("empty rational literal");
    }
    // validate shape before handing to gmp: [-]digits[/digits]
    auto digits = [](const std::string& s) {
        if (s.empty()) return false;
        for (char ch : s) {
            if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
        }
        return true;
    };
    std::string body = text;
    if (body[0] == '-' || body[0] == '+') {
        body = body.substr(1);
    }
    auto slash = body.find('/');
    bool ok = slash == std::string::npos
                  ? digits(body)
                  : digits(body.substr(0, slash)) && digits(body.substr(slash + 1));
    if (!ok) {
        throw Error("malformed rational literal: " + text);
    }

    mpq_class v;
    if (v.set_str(text[0] == '+' ? text.substr(1) : text, 10) != 0) {
        throw Error("malformed rational literal: " + text);
    }
    if (v.get_den() == 0) {
        throw Error("rational with zero denominator: " + text);
    }
    v.canonicalize();
    Rational r;
    r.v_ = v;
    return r;
}

std::string Rational::str() const {
    return v_.get_str();
}

std::string Rational::fraction_str() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw Error("rational division by zero");
    }
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace ppg
