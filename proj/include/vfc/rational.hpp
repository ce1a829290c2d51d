// exact rational arithmetic; every quantity in the pipeline is either an integer or a Rat
#pragma once

#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>

namespace vfc {

using Int = long long;

// normalized fraction: den > 0, gcd(num, den) == 1.  hand-rolled because the
// system boost 1.74 resolves rational-vs-int comparisons into unbounded
// recursion (its heterogeneous operator templates out-rank the member they
// were meant to forward to).
class Rat {
public:
    Rat() = default;
    Rat(Int n) : num_(n) {}
    Rat(Int n, Int d) : num_(n), den_(d) { normalize(); }

    Int numerator() const { return num_; }
    Int denominator() const { return den_; }

    Rat& operator+=(const Rat& o) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rat& operator-=(const Rat& o) { return *this += Rat(-o.num_, o.den_); }
    Rat& operator*=(const Rat& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rat& operator/=(const Rat& o) {
        num_ *= o.den_;
        den_ *= o.num_;
        normalize();
        return *this;
    }

    Rat operator-() const { return {-num_, den_}; }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat&, const Rat&) = default;
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

private:
    void normalize() {
        if (den_ == 0) throw std::domain_error("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        Int g = std::gcd(num_, den_);
        num_ /= g;
        den_ /= g;
    }

    Int num_ = 0;
    Int den_ = 1;
};

// representative of r mod 1 lying in [0,1)
inline Rat mod1(Rat r) {
    Int t = r.numerator() / r.denominator();
    r -= t;
    if (r.numerator() < 0) r += 1;
    return r;
}

inline Rat abs(const Rat& r) {
    return r.numerator() < 0 ? -r : r;
}

inline double to_double(const Rat& r) {
    return double(r.numerator()) / double(r.denominator());
}

inline std::string rat_str(const Rat& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}
