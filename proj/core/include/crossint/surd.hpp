#pragma once

#include <string>

#include "crossint/rational.hpp"

namespace crossint {

// Element of the quadratic extension Q[sqrt(d)]: value = a + b*sqrt(d) with
// a, b, d rational and d >= 0. Every comparison is decided exactly by sign
// analysis, so no floating point enters any feasibility verdict.
//
// A perfect-square radicand collapses to the plain rational at construction
// (e.g. d = 1/4 gives a + b/2), which keeps the p1 = p2 = 1/2 family fully
// rational. Mixing two irrational radicands is a logic error and throws.
class Surd {
public:
    Surd() = default;
    Surd(const Rat& rational) : a_(rational) {}  // NOLINT: implicit by design
    Surd(long v) : a_(v) {}                      // NOLINT
    Surd(int v) : a_(v) {}                       // NOLINT
    Surd(const Rat& a, const Rat& b, const Rat& d);

    static Surd sqrt_of(const Rat& d) { return Surd(Rat(0), Rat(1), d); }

    const Rat& rational_part() const { return a_; }
    const Rat& surd_coeff() const { return b_; }
    const Rat& radicand() const { return d_; }
    bool is_rational() const { return sgn(b_) == 0; }

    // Exact sign in {-1, 0, +1}.
    int sign() const;

    Surd operator-() const { return Surd(-a_, -b_, d_); }
    Surd& operator+=(const Surd& o);
    Surd& operator-=(const Surd& o);
    Surd& operator*=(const Surd& o);
    Surd& operator/=(const Surd& o);

    friend Surd operator+(Surd l, const Surd& r) { return l += r; }
    friend Surd operator-(Surd l, const Surd& r) { return l -= r; }
    friend Surd operator*(Surd l, const Surd& r) { return l *= r; }
    friend Surd operator/(Surd l, const Surd& r) { return l /= r; }

    friend bool operator==(const Surd& l, const Surd& r) { return (l - r).sign() == 0; }
    friend bool operator!=(const Surd& l, const Surd& r) { return (l - r).sign() != 0; }
    friend bool operator<(const Surd& l, const Surd& r) { return (l - r).sign() < 0; }
    friend bool operator<=(const Surd& l, const Surd& r) { return (l - r).sign() <= 0; }
    friend bool operator>(const Surd& l, const Surd& r) { return (l - r).sign() > 0; }
    friend bool operator>=(const Surd& l, const Surd& r) { return (l - r).sign() >= 0; }

    long double to_ld() const;

    // "a + b*sqrt(d)", or just "a" when the surd part is zero.
    std::string str() const;

private:
    // Radicand shared by both operands, or throws when incompatible.
    static Rat common_radicand(const Surd& l, const Surd& r);

    Rat a_{0};
    Rat b_{0};
    Rat d_{0};
};

}  // namespace crossint
