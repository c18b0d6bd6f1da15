#include "wsk/gamma.hpp"

#include "wsk/error.hpp"

#include <numeric>

namespace wsk {

Gamma::Gamma(long long n, long long d) : num_(n), den_(d), inf_(false) {
    if (den_ == 0) fail(errc::domain, "Gamma: zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

long long Gamma::floor() const {
    if (inf_) fail(errc::domain, "Gamma: floor of infinity");
    long long q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
}

long long Gamma::ceil() const {
    if (inf_) fail(errc::domain, "Gamma: ceil of infinity");
    long long q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    return q;
}

Gamma Gamma::operator+(const Gamma& o) const {
    if (inf_ || o.inf_) return infinity();
    return Gamma(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Gamma Gamma::operator-(const Gamma& o) const {
    if (o.inf_) fail(errc::domain, "Gamma: subtracting infinity");
    if (inf_) return infinity();
    return Gamma(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Gamma Gamma::operator-() const {
    if (inf_) fail(errc::domain, "Gamma: negating infinity");
    return Gamma(-num_, den_);
}

Gamma Gamma::operator*(long long k) const {
    if (inf_) return infinity();
    return Gamma(num_ * k, den_);
}

Gamma Gamma::operator/(long long k) const {
    if (inf_) return infinity();
    return Gamma(num_, den_ * k);
}

bool Gamma::operator==(const Gamma& o) const {
    if (inf_ || o.inf_) return inf_ == o.inf_;
    return num_ == o.num_ && den_ == o.den_;
}

std::strong_ordering Gamma::operator<=>(const Gamma& o) const {
    if (inf_ && o.inf_) return std::strong_ordering::equal;
    if (inf_) return std::strong_ordering::greater;
    if (o.inf_) return std::strong_ordering::less;
    // int64 overflow is out of reach for desk-scale exponents
    long long lhs = num_ * o.den_, rhs = o.num_ * den_;
    return lhs <=> rhs;
}

std::string Gamma::str() const {
    if (inf_) return "inf";
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

} // namespace wsk
