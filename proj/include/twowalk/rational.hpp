#pragma once

#include <gmpxx.h>

#include <string>

namespace twowalk {

/// Exact rational number, always reduced, denominator always positive.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long value) : q_(value) {}  // NOLINT: implicit by design
    Rational(const mpz_class& num, const mpz_class& den);

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }
    bool is_integer() const { return q_.get_den() == 1; }

    /// "p" for integers, "p/q" otherwise.
    std::string str() const;

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.q_ + b.q_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.q_ - b.q_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.q_ * b.q_); }
    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }

private:
    explicit Rational(const mpq_class& q) : q_(q) {}
    mpq_class q_;  // invariant: canonical (reduced, positive denominator)
};

}  // namespace twowalk
