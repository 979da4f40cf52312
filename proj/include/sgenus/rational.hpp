#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <ostream>
#include <stdexcept>
#include <string>

namespace sgenus {

// Exact rational number, always kept in lowest terms with positive denominator.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(int n) : v_(n) {}
    Rational(long num, long den) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        v_ = mpq_class(num) / mpq_class(den);
        v_.canonicalize();
    }

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("rational division by zero");
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

    // Machine form: always "num/den", e.g. "3/16", "2/1", "-1/4".
    std::string fraction_str() const {
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }
    // Human form: omits the denominator when it is 1.
    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return fraction_str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

    // this^e for integer e (e < 0 requires a nonzero value).
    Rational pow(int e) const {
        if (e < 0) {
            if (is_zero()) throw std::domain_error("inverse of zero");
            return (Rational(1) / *this).pow(-e);
        }
        Rational acc(1), base(*this);
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

private:
    explicit Rational(const mpq_class& q) : v_(q) {}
    mpq_class v_;
};

} // namespace sgenus
