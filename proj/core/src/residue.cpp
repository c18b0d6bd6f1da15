#include "wsk/residue.hpp"

#include "wsk/error.hpp"

#include <algorithm>

namespace wsk {

namespace {

using Vec = std::vector<std::uint32_t>;

void trim(Vec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

Vec poly_mul(const Vec& a, const Vec& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Vec r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
    trim(r);
    return r;
}

// reduce a modulo monic m
Vec poly_rem(Vec a, const Vec& m, std::uint32_t p) {
    trim(a);
    while (a.size() >= m.size()) {
        std::uint32_t lead = a.back();
        size_t shift = a.size() - m.size();
        for (size_t i = 0; i < m.size(); ++i) {
            std::uint64_t sub = static_cast<std::uint64_t>(lead) * m[i] % p;
            std::uint32_t& t = a[shift + i];
            t = static_cast<std::uint32_t>((t + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

bool is_irreducible(const Vec& m, std::uint32_t p) {
    // brute force over F_p: no roots and no monic factor of degree < deg m.
    // Fields here are tiny (q <= ~343), so trial division is plenty.
    std::uint32_t f = static_cast<std::uint32_t>(m.size() - 1);
    if (f == 1) return true;
    // enumerate monic candidates of degree d as base-p integers
    for (std::uint32_t d = 1; 2 * d <= f; ++d) {
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Vec cand(d + 1, 0);
            std::uint64_t t = idx;
            for (std::uint32_t i = 0; i < d; ++i) {
                cand[i] = static_cast<std::uint32_t>(t % p);
                t /= p;
            }
            cand[d] = 1;
            if (poly_rem(m, cand, p).empty()) return false;
        }
    }
    return true;
}

} // namespace

Residue::Residue(ResidueFieldPtr F, Vec c) : F_(std::move(F)), c_(std::move(c)) {
    c_.resize(F_->degree(), 0);
}

bool Residue::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](std::uint32_t x) { return x == 0; });
}

bool Residue::in_prime_field() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

std::uint32_t Residue::as_prime() const {
    if (!in_prime_field()) fail(errc::domain, "residue: not in the prime field");
    return c_.empty() ? 0 : c_[0];
}

Residue Residue::operator+(const Residue& o) const {
    Vec r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = (c_[i] + o.c_[i]) % F_->p();
    return Residue(F_, std::move(r));
}

Residue Residue::operator-(const Residue& o) const {
    Vec r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = (c_[i] + F_->p() - o.c_[i]) % F_->p();
    return Residue(F_, std::move(r));
}

Residue Residue::operator*(const Residue& o) const {
    Vec prod = poly_mul(c_, o.c_, F_->p());
    Vec red = poly_rem(std::move(prod), F_->modulus(), F_->p());
    return Residue(F_, std::move(red));
}

Residue Residue::pow(std::uint64_t e) const {
    Residue acc = F_->one(), base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Residue Residue::inverse() const {
    if (is_zero()) fail(errc::domain, "residue: inverse of zero");
    return pow(F_->size() - 2);
}

bool Residue::operator==(const Residue& o) const { return c_ == o.c_; }

std::string Residue::str() const {
    if (F_->degree() == 1) return std::to_string(c_.empty() ? 0 : c_[0]);
    std::string s = "[";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c_[i]);
    }
    return s + "]";
}

ResidueField::ResidueField(std::uint32_t p, std::uint32_t f) : p_(p), f_(f) {
    q_ = 1;
    for (std::uint32_t i = 0; i < f; ++i) q_ *= p;
    if (f == 1) {
        mod_ = {0, 1};
        return;
    }
    // deterministic: smallest monic irreducible of degree f in base-p order
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < f; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        Vec cand(f + 1, 0);
        std::uint64_t t = idx;
        for (std::uint32_t i = 0; i < f; ++i) {
            cand[i] = static_cast<std::uint32_t>(t % p);
            t /= p;
        }
        cand[f] = 1;
        if (is_irreducible(cand, p)) {
            mod_ = cand;
            return;
        }
    }
    fail(errc::domain, "residue: no irreducible modulus found");
}

ResidueFieldPtr ResidueField::make(std::uint32_t p, std::uint32_t f) {
    return ResidueFieldPtr(new ResidueField(p, f));
}

Residue ResidueField::zero() const { return Residue(shared_from_this(), Vec(f_, 0)); }
Residue ResidueField::one() const { return from_int(1); }

Residue ResidueField::from_int(long long n) const {
    long long m = n % static_cast<long long>(p_);
    if (m < 0) m += p_;
    Vec c(f_, 0);
    c[0] = static_cast<std::uint32_t>(m);
    return Residue(shared_from_this(), std::move(c));
}

Residue ResidueField::element(Vec c) const { return Residue(shared_from_this(), std::move(c)); }

Residue ResidueField::generator() const {
    Vec c(f_, 0);
    if (f_ < 2) fail(errc::domain, "residue: prime field has no generator coordinate");
    c[1] = 1;
    return Residue(shared_from_this(), std::move(c));
}

std::vector<Residue> ResidueField::all_elements() const {
    std::vector<Residue> out;
    out.reserve(q_);
    for (std::uint64_t idx = 0; idx < q_; ++idx) {
        Vec c(f_);
        std::uint64_t t = idx;
        for (std::uint32_t i = 0; i < f_; ++i) {
            c[i] = static_cast<std::uint32_t>(t % p_);
            t /= p_;
        }
        out.push_back(element(std::move(c)));
    }
    return out;
}

std::vector<std::uint32_t> ResidueField::min_poly(const Residue& r) const {
    // product of (x - r^{p^i}) over the Frobenius orbit
    std::vector<Residue> orbit;
    Residue cur = r;
    do {
        orbit.push_back(cur);
        cur = cur.pow(p_);
    } while (!(cur == r));
    // multiply out with coefficients in F_{p^f}, then read off the prime-field coords
    std::vector<Residue> poly{one()};
    for (const Residue& root : orbit) {
        std::vector<Residue> next(poly.size() + 1, zero());
        for (size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] = next[i + 1] + poly[i];
            next[i] = next[i] - poly[i] * root;
        }
        poly = std::move(next);
    }
    Vec out(poly.size());
    for (size_t i = 0; i < poly.size(); ++i) out[i] = poly[i].in_prime_field() ? poly[i].as_prime() : throw error(errc::domain, "residue: min_poly coefficient escaped F_p");
    return out;
}

} // namespace wsk
