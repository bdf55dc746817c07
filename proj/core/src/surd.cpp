#include "crossint/surd.hpp"

#include <cmath>
#include <stdexcept>

namespace crossint {

Surd::Surd(const Rat& a, const Rat& b, const Rat& d) : a_(a), b_(b), d_(d) {
    if (sgn(d_) < 0) throw std::invalid_argument("Surd: negative radicand");
    if (sgn(b_) == 0 || sgn(d_) == 0) {
        b_ = 0;
        d_ = 0;
        return;
    }
    if (rat_is_square(d_)) {
        a_ += b_ * rat_sqrt_exact(d_);
        b_ = 0;
        d_ = 0;
    }
}

Rat Surd::common_radicand(const Surd& l, const Surd& r) {
    if (sgn(l.b_) == 0) return r.d_;
    if (sgn(r.b_) == 0) return l.d_;
    if (l.d_ != r.d_)
        throw std::logic_error("Surd: mixed radicands " + l.d_.get_str() + " vs " +
                               r.d_.get_str());
    return l.d_;
}

int Surd::sign() const {
    const int sa = sgn(a_), sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 against b^2 d; the larger magnitude wins.
    const int mag = cmp(a_ * a_, b_ * b_ * d_);
    if (mag == 0) return 0;
    return mag > 0 ? sa : sb;
}

Surd& Surd::operator+=(const Surd& o) {
    const Rat d = common_radicand(*this, o);
    a_ += o.a_;
    b_ += o.b_;
    *this = Surd(a_, b_, d);
    return *this;
}

Surd& Surd::operator-=(const Surd& o) { return *this += -o; }

Surd& Surd::operator*=(const Surd& o) {
    const Rat d = common_radicand(*this, o);
    const Rat a = a_ * o.a_ + b_ * o.b_ * d;
    const Rat b = a_ * o.b_ + b_ * o.a_;
    *this = Surd(a, b, d);
    return *this;
}

Surd& Surd::operator/=(const Surd& o) {
    if (o.sign() == 0) throw std::domain_error("Surd: division by zero");
    const Rat d = common_radicand(*this, o);
    // 1/(a + b sqrt d) = (a - b sqrt d) / (a^2 - b^2 d)
    const Rat denom = o.a_ * o.a_ - o.b_ * o.b_ * d;
    *this *= Surd(o.a_ / denom, -o.b_ / denom, d);
    return *this;
}

long double Surd::to_ld() const {
    long double v = rat_ld(a_);
    if (sgn(b_) != 0) v += rat_ld(b_) * std::sqrt(rat_ld(d_));
    return v;
}

std::string Surd::str() const {
    if (sgn(b_) == 0) return a_.get_str();
    return a_.get_str() + " + " + b_.get_str() + "*sqrt(" + d_.get_str() + ")";
}

}  // namespace crossint
