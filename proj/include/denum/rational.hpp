#pragma once

#include <gmpxx.h>
#include <ostream>
#include <stdexcept>
#include <string>

namespace denum {

using Int = mpz_class;

// Exact rational scalar. Always canonical: gcd(|num|, den) = 1, den > 0.
// mpq_class arithmetic preserves canonical form; the constructors here are
// the only places raw input enters, so they canonicalize.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(const Int& n) : v_(n) {}

    Rational(const Int& num, const Int& den) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        v_ = mpq_class(num) / mpq_class(den);
    }
    Rational(long num, long den) : Rational(Int(num), Int(den)) {}

    // Accepts the serialized forms "p" and "p/q", base 10.
    static Rational from_string(const std::string& s) {
        mpq_class v;
        if (v.set_str(s, 10) != 0)
            throw std::invalid_argument("unparsable rational: " + s);
        if (v.get_den() == 0) throw std::domain_error("rational with zero denominator");
        v.canonicalize();
        Rational r;
        r.v_ = v;
        return r;
    }

    Int num() const { return v_.get_num(); }
    Int den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    // Integer numerator when den == 1; error otherwise.
    Int as_integer() const {
        if (!is_integer()) throw std::domain_error("rational " + to_string() + " is not an integer");
        return v_.get_num();
    }

    std::string to_string() const { return v_.get_str(); }

    Rational operator-() const { Rational r; r.v_ = -v_; return r; }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.v_ == 0) throw std::domain_error("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational inverse() const {
        if (v_ == 0) throw std::domain_error("rational division by zero");
        Rational r;
        r.v_ = 1 / v_;
        return r;
    }

    Rational pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        Rational acc(1), base = *this;
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.v_;
    }

private:
    mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace denum
