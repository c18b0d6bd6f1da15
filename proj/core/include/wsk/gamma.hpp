#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace wsk {

// A value of the (additively written) value group Gamma = Q, extended by
// +infinity for the valuation of zero.  Exact rational arithmetic on int64
// with gcd normalization; exponents at desk scale stay tiny.
class Gamma {
  public:
    constexpr Gamma() : num_(0), den_(1), inf_(false) {}
    Gamma(long long n) : num_(n), den_(1), inf_(false) {}
    Gamma(long long n, long long d);

    static Gamma infinity() {
        Gamma g;
        g.inf_ = true;
        return g;
    }

    bool is_infinite() const { return inf_; }
    bool is_zero() const { return !inf_ && num_ == 0; }
    bool is_integer() const { return !inf_ && den_ == 1; }
    long long num() const { return num_; }
    long long den() const { return den_; }

    // floor/ceil to the nearest integer below/above
    long long floor() const;
    long long ceil() const;

    Gamma operator+(const Gamma& o) const;
    Gamma operator-(const Gamma& o) const; // undefined for inf - inf
    Gamma operator-() const;
    Gamma operator*(long long k) const;
    Gamma operator/(long long k) const;

    Gamma& operator+=(const Gamma& o) { return *this = *this + o; }

    bool operator==(const Gamma& o) const;
    std::strong_ordering operator<=>(const Gamma& o) const;

    std::string str() const; // "3", "-1/2", "inf"

  private:
    long long num_, den_; // den_ > 0, gcd(num_, den_) = 1
    bool inf_;
};

inline Gamma min(const Gamma& a, const Gamma& b) { return a < b ? a : b; }
inline Gamma max(const Gamma& a, const Gamma& b) { return a < b ? b : a; }

} // namespace wsk
