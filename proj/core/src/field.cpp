#include "wsk/field.hpp"

#include "wsk/error.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace wsk {

namespace {

cpp_int pow_ll(long long base, long long e) {
    cpp_int r = 1;
    for (long long i = 0; i < e; ++i) r *= base;
    return r;
}

// positive representative mod m
cpp_int pmod(const cpp_int& a, const cpp_int& m) {
    cpp_int r = a % m;
    if (r < 0) r += m;
    return r;
}

cpp_int inv_mod(const cpp_int& a, const cpp_int& m) {
    cpp_int t = 0, nt = 1, r = m, nr = pmod(a, m);
    while (nr != 0) {
        cpp_int q = r / nr;
        cpp_int tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) fail(errc::domain, "field: modular inverse does not exist");
    return pmod(t, m);
}

} // namespace

FieldPtr FieldDesc::padic(long long p, long long prec) {
    auto d = std::make_shared<FieldDesc>();
    d->kind = FieldKind::padic;
    d->p = p;
    d->prec = prec;
    d->k = ResidueField::make(static_cast<std::uint32_t>(p), 1);
    d->name = "Q" + std::to_string(p);
    return d;
}

FieldPtr FieldDesc::laurent(long long p, long long prec) {
    auto d = std::make_shared<FieldDesc>();
    d->kind = FieldKind::laurent;
    d->p = p;
    d->prec = prec;
    d->k = ResidueField::make(static_cast<std::uint32_t>(p), 1);
    d->name = "F" + std::to_string(p) + "((t))";
    return d;
}

FieldPtr FieldDesc::hahn(long long p, long long prec, int support_cap, bool mixed) {
    auto d = std::make_shared<FieldDesc>();
    d->kind = FieldKind::hahn;
    d->p = p;
    d->prec = prec;
    d->support_cap = support_cap;
    d->mixed_char = mixed;
    d->k = ResidueField::make(static_cast<std::uint32_t>(p), 1);
    d->name = (mixed ? "Z" : "F") + std::to_string(p) + "((Q))";
    return d;
}

FieldPtr FieldDesc::extension(FieldPtr base, std::vector<long long> eis, int unram) {
    if (!base || (base->kind != FieldKind::padic && base->kind != FieldKind::laurent))
        fail(errc::domain, "field: extension base must be p-adic or Laurent");
    auto d = std::make_shared<FieldDesc>();
    d->kind = FieldKind::extension;
    d->p = base->p;
    d->prec = base->prec;
    d->base = base;
    d->unram = unram;
    if (!eis.empty()) {
        if (eis.back() != 1) fail(errc::domain, "field: Eisenstein polynomial must be monic");
        for (size_t i = 0; i + 1 < eis.size(); ++i)
            if (eis[i] % base->p != 0) fail(errc::domain, "field: Eisenstein coefficients must be divisible by p");
        if ((eis[0] / base->p) % base->p == 0) fail(errc::domain, "field: Eisenstein constant term must have valuation 1");
        d->eisenstein = std::move(eis);
    }
    if (d->degree() > 12) fail(errc::domain, "field: extension degree exceeds the tower cap");
    d->k = ResidueField::make(static_cast<std::uint32_t>(d->p), static_cast<std::uint32_t>(unram));
    std::ostringstream nm;
    nm << base->name << "[e=" << d->ram_degree() << ",f=" << unram << "]";
    d->name = nm.str();
    return d;
}

// ---------------------------------------------------------------------------
// construction / normalization

struct FieldOps {
    static FieldElement make_padic(const FieldPtr& F, long long v, cpp_int u, Gamma aprec) {
        FieldElement x;
        x.F_ = F;
        x.aprec_ = aprec;
        if (aprec.is_infinite()) fail(errc::domain, "field: elements need finite precision");
        long long ap = aprec.floor();
        if (u == 0 || v >= ap) return x; // zero at precision
        while (u % F->p == 0) {
            u /= F->p;
            ++v;
            if (v >= ap) return x;
        }
        u = pmod(u, pow_ll(F->p, ap - v));
        if (u == 0) return x;
        x.zero_ = false;
        x.v_ = v;
        x.u_ = u;
        return x;
    }

    static FieldElement make_laurent(const FieldPtr& F, long long v, std::vector<std::uint32_t> c, Gamma aprec) {
        FieldElement x;
        x.F_ = F;
        x.aprec_ = aprec;
        long long ap = aprec.floor();
        size_t lead = 0;
        while (lead < c.size() && c[lead] == 0) ++lead;
        if (lead == c.size()) return x;
        v += static_cast<long long>(lead);
        if (v >= ap) return x;
        c.erase(c.begin(), c.begin() + lead);
        if (static_cast<long long>(c.size()) > ap - v) c.resize(ap - v);
        while (!c.empty() && c.back() == 0) c.pop_back();
        if (c.empty()) return x;
        x.zero_ = false;
        x.v_ = v;
        x.c_ = std::move(c);
        return x;
    }

    static FieldElement make_ext(const FieldPtr& F, std::vector<FieldElement> coords) {
        FieldElement x;
        x.F_ = F;
        if (static_cast<int>(coords.size()) != F->degree()) fail(errc::domain, "field: wrong coordinate count");
        x.coords_ = std::move(coords);
        x.zero_ = true;
        for (auto& c : x.coords_)
            if (!c.is_zero()) x.zero_ = false;
        x.aprec_ = Gamma::infinity(); // derived from coordinates
        return x;
    }

    static FieldElement make_hahn(const FieldPtr& F, std::vector<std::pair<Gamma, Residue>> supp, Gamma aprec) {
        FieldElement x;
        x.F_ = F;
        x.aprec_ = aprec;
        std::sort(supp.begin(), supp.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<std::pair<Gamma, Residue>> merged;
        for (auto& t : supp) {
            if (!(t.first < aprec)) continue;
            if (t.second.is_zero()) continue;
            if (!merged.empty() && merged.back().first == t.first) {
                Residue s = merged.back().second + t.second;
                if (s.is_zero())
                    merged.pop_back();
                else
                    merged.back().second = s;
            } else {
                merged.push_back(t);
            }
        }
        if (static_cast<int>(merged.size()) > F->support_cap) fail(errc::domain, "field: support cap exceeded");
        x.supp_ = std::move(merged);
        x.zero_ = x.supp_.empty();
        return x;
    }

    // mixed-characteristic Hahn addition at one exponent slot: resolve carries
    // through Z_p using the multiplicative representatives.
    static void hahn_carry_add(const FieldPtr& F, std::vector<std::pair<Gamma, Residue>>& acc, Gamma g, const Residue& r,
                               const Gamma& aprec);
};

FieldElement FieldElement::zero(const FieldPtr& F) { return zero(F, Gamma(F->prec)); }

FieldElement FieldElement::zero(const FieldPtr& F, const Gamma& prec) {
    switch (F->kind) {
    case FieldKind::padic: return FieldOps::make_padic(F, 0, 0, prec);
    case FieldKind::laurent: return FieldOps::make_laurent(F, 0, {}, prec);
    case FieldKind::hahn: return FieldOps::make_hahn(F, {}, prec);
    case FieldKind::extension: {
        std::vector<FieldElement> c(F->degree(), zero(F->base, prec));
        return FieldOps::make_ext(F, std::move(c));
    }
    }
    fail(errc::domain, "field: bad kind");
}

FieldElement FieldElement::one(const FieldPtr& F) { return from_int(F, 1); }

FieldElement FieldElement::from_int(const FieldPtr& F, const cpp_int& n) {
    switch (F->kind) {
    case FieldKind::padic: return FieldOps::make_padic(F, 0, n, Gamma(F->prec));
    case FieldKind::laurent: {
        cpp_int m = pmod(n, F->p);
        std::vector<std::uint32_t> c{static_cast<std::uint32_t>(m.convert_to<long long>())};
        return FieldOps::make_laurent(F, 0, std::move(c), Gamma(F->prec));
    }
    case FieldKind::hahn: {
        if (!F->mixed_char) {
            Residue r = F->k->from_int(n.convert_to<long long>() % F->p);
            return FieldOps::make_hahn(F, {{Gamma(0), r}}, Gamma(F->prec));
        }
        // expand n in multiplicative-representative digits
        std::vector<std::pair<Gamma, Residue>> supp;
        FieldElement x = zero(F, Gamma(F->prec));
        FieldOps::hahn_carry_add(F, supp, Gamma(0), F->k->from_int(0), Gamma(F->prec));
        // reuse the carry machinery by adding n as repeated digit sums at t^0
        auto Qp = FieldDesc::padic(F->p, F->prec + 2);
        FieldElement np = FieldElement::from_int(Qp, n);
        std::vector<std::pair<Gamma, Residue>> out;
        long long level = 0;
        while (!np.is_zero() && level < F->prec) {
            Residue d = np.val() > Gamma(0) ? F->k->from_int(0) : np.residue();
            if (!d.is_zero()) out.push_back({Gamma(level), d});
            np = (np - teichmuller(d, Qp)) / FieldElement::from_int(Qp, F->p);
            ++level;
        }
        return FieldOps::make_hahn(F, std::move(out), Gamma(F->prec));
    }
    case FieldKind::extension: {
        std::vector<FieldElement> c(F->degree(), zero(F->base, Gamma(F->prec)));
        c[0] = from_int(F->base, n);
        return FieldOps::make_ext(F, std::move(c));
    }
    }
    fail(errc::domain, "field: bad kind");
}

FieldElement FieldElement::from_rational(const FieldPtr& F, const cpp_int& num, const cpp_int& den) {
    if (den == 0) fail(errc::domain, "field: zero denominator");
    return from_int(F, num) / from_int(F, den);
}

FieldElement FieldElement::uniformizer_pow(const FieldPtr& F, long long kk) {
    switch (F->kind) {
    case FieldKind::padic: return FieldOps::make_padic(F, kk, 1, Gamma(F->prec + kk < F->prec ? F->prec : F->prec + kk));
    case FieldKind::laurent: return FieldOps::make_laurent(F, kk, {1}, Gamma(F->prec + (kk > 0 ? kk : 0)));
    case FieldKind::hahn: return FieldOps::make_hahn(F, {{Gamma(kk), F->k->one()}}, Gamma(F->prec + (kk > 0 ? kk : 0)));
    case FieldKind::extension: {
        int e = F->ram_degree();
        long long q = kk >= 0 ? kk / e : -((-kk + e - 1) / e);
        long long r = kk - q * e; // 0 <= r < e
        std::vector<FieldElement> c(F->degree(), zero(F->base, Gamma(F->prec)));
        c[static_cast<size_t>(r)] = uniformizer_pow(F->base, q);
        return FieldOps::make_ext(F, std::move(c));
    }
    }
    fail(errc::domain, "field: bad kind");
}

FieldElement FieldElement::lift(const FieldPtr& F, const Residue& r) {
    if (F->kind == FieldKind::extension) {
        std::vector<FieldElement> c(F->degree(), zero(F->base, Gamma(F->prec)));
        int e = F->ram_degree();
        for (size_t j = 0; j < r.coords().size(); ++j) c[e * j] = from_int(F->base, r.coords()[j]);
        return FieldOps::make_ext(F, std::move(c));
    }
    if (F->kind == FieldKind::hahn) return FieldOps::make_hahn(F, {{Gamma(0), r}}, Gamma(F->prec));
    return from_int(F, r.as_prime());
}

FieldElement FieldElement::hahn_term(const FieldPtr& F, const Residue& c, const Gamma& g) {
    return FieldOps::make_hahn(F, {{g, c}}, Gamma(F->prec));
}

FieldElement FieldElement::from_coords(const FieldPtr& F, std::vector<FieldElement> coords) {
    return FieldOps::make_ext(F, std::move(coords));
}

bool FieldElement::is_zero() const { return zero_; }

Gamma FieldElement::val() const {
    if (zero_) return Gamma::infinity();
    switch (F_->kind) {
    case FieldKind::padic:
    case FieldKind::laurent: return Gamma(v_);
    case FieldKind::hahn: return supp_.front().first;
    case FieldKind::extension: {
        int e = F_->ram_degree();
        Gamma best = Gamma::infinity();
        for (int i = 0; i < e; ++i) {
            Gamma vi = Gamma::infinity();
            for (int j = 0; j < F_->unram; ++j) vi = min(vi, coords_[i + e * j].val());
            best = min(best, vi + Gamma(i, e));
        }
        return best;
    }
    }
    fail(errc::domain, "field: bad kind");
}

Gamma FieldElement::precision() const {
    if (F_ && F_->kind == FieldKind::extension) {
        int e = F_->ram_degree();
        Gamma best = Gamma::infinity();
        for (int i = 0; i < e; ++i)
            for (int j = 0; j < F_->unram; ++j) best = min(best, coords_[i + e * j].precision() + Gamma(i, e));
        return best;
    }
    return aprec_;
}

// ---------------------------------------------------------------------------
// arithmetic

FieldElement FieldElement::operator+(const FieldElement& o) const {
    if (!F_ || !o.F_ || F_.get() != o.F_.get()) fail(errc::domain, "field: mixed descriptors");
    switch (F_->kind) {
    case FieldKind::padic: {
        Gamma ap = min(aprec_, o.aprec_);
        if (zero_) return FieldOps::make_padic(F_, o.v_, o.u_, o.zero_ ? ap : min(ap, o.aprec_));
        if (o.zero_) return FieldOps::make_padic(F_, v_, u_, ap);
        long long w = std::min(v_, o.v_);
        cpp_int s = u_ * pow_ll(F_->p, v_ - w) + o.u_ * pow_ll(F_->p, o.v_ - w);
        return FieldOps::make_padic(F_, w, s, ap);
    }
    case FieldKind::laurent: {
        Gamma ap = min(aprec_, o.aprec_);
        if (zero_) return FieldOps::make_laurent(F_, o.v_, o.c_, ap);
        if (o.zero_) return FieldOps::make_laurent(F_, v_, c_, ap);
        long long w = std::min(v_, o.v_);
        size_t n = std::max(c_.size() + (v_ - w), o.c_.size() + (o.v_ - w));
        std::vector<std::uint32_t> s(n, 0);
        for (size_t i = 0; i < c_.size(); ++i) s[i + (v_ - w)] = c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) s[i + (o.v_ - w)] = (s[i + (o.v_ - w)] + o.c_[i]) % F_->p;
        return FieldOps::make_laurent(F_, w, std::move(s), ap);
    }
    case FieldKind::hahn: {
        Gamma ap = min(aprec_, o.aprec_);
        if (!F_->mixed_char) {
            auto supp = supp_;
            supp.insert(supp.end(), o.supp_.begin(), o.supp_.end());
            return FieldOps::make_hahn(F_, std::move(supp), ap);
        }
        std::vector<std::pair<Gamma, Residue>> acc;
        for (auto& t : supp_) FieldOps::hahn_carry_add(F_, acc, t.first, t.second, ap);
        for (auto& t : o.supp_) FieldOps::hahn_carry_add(F_, acc, t.first, t.second, ap);
        return FieldOps::make_hahn(F_, std::move(acc), ap);
    }
    case FieldKind::extension: {
        std::vector<FieldElement> c(coords_.size());
        for (size_t i = 0; i < coords_.size(); ++i) c[i] = coords_[i] + o.coords_[i];
        return FieldOps::make_ext(F_, std::move(c));
    }
    }
    fail(errc::domain, "field: bad kind");
}

FieldElement FieldElement::operator-() const {
    if (!F_) fail(errc::domain, "field: empty element");
    switch (F_->kind) {
    case FieldKind::padic: return zero_ ? *this : FieldOps::make_padic(F_, v_, -u_, aprec_);
    case FieldKind::laurent: {
        auto c = c_;
        for (auto& d : c) d = d == 0 ? 0 : static_cast<std::uint32_t>(F_->p) - d;
        return FieldOps::make_laurent(F_, v_, std::move(c), aprec_);
    }
    case FieldKind::hahn: {
        if (!F_->mixed_char) {
            auto s = supp_;
            for (auto& t : s) t.second = F_->k->zero() - t.second;
            return FieldOps::make_hahn(F_, std::move(s), aprec_);
        }
        // -x = (-1) * x; representatives are multiplicative so term-by-term works
        FieldElement m1 = from_int(F_, -1);
        return m1 * *this;
    }
    case FieldKind::extension: {
        std::vector<FieldElement> c(coords_.size());
        for (size_t i = 0; i < coords_.size(); ++i) c[i] = -coords_[i];
        return FieldOps::make_ext(F_, std::move(c));
    }
    }
    fail(errc::domain, "field: bad kind");
}

FieldElement FieldElement::operator-(const FieldElement& o) const { return *this + (-o); }

FieldElement FieldElement::operator*(const FieldElement& o) const {
    if (!F_ || !o.F_ || F_.get() != o.F_.get()) fail(errc::domain, "field: mixed descriptors");
    switch (F_->kind) {
    case FieldKind::padic: {
        if (zero_ || o.zero_) {
            Gamma ap = min(zero_ ? aprec_ + o.val() : o.aprec_ + val(), Gamma::infinity());
            if (ap.is_infinite()) ap = min(aprec_, o.aprec_);
            return zero(F_, ap);
        }
        Gamma ap = min(Gamma(v_) + o.aprec_, Gamma(o.v_) + aprec_);
        return FieldOps::make_padic(F_, v_ + o.v_, u_ * o.u_, ap);
    }
    case FieldKind::laurent: {
        if (zero_ || o.zero_) return zero(F_, min(aprec_, o.aprec_));
        Gamma ap = min(Gamma(v_) + o.aprec_, Gamma(o.v_) + aprec_);
        std::vector<std::uint32_t> s(c_.size() + o.c_.size() - 1, 0);
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j)
                s[i + j] = static_cast<std::uint32_t>((s[i + j] + static_cast<std::uint64_t>(c_[i]) * o.c_[j]) % F_->p);
        return FieldOps::make_laurent(F_, v_ + o.v_, std::move(s), ap);
    }
    case FieldKind::hahn: {
        if (zero_ || o.zero_) return zero(F_, min(aprec_, o.aprec_));
        Gamma ap = min(val() + o.aprec_, o.val() + aprec_);
        if (!F_->mixed_char) {
            std::vector<std::pair<Gamma, Residue>> s;
            for (auto& a : supp_)
                for (auto& b : o.supp_) s.push_back({a.first + b.first, a.second * b.second});
            return FieldOps::make_hahn(F_, std::move(s), ap);
        }
        std::vector<std::pair<Gamma, Residue>> acc;
        for (auto& a : supp_)
            for (auto& b : o.supp_) FieldOps::hahn_carry_add(F_, acc, a.first + b.first, a.second * b.second, ap);
        return FieldOps::make_hahn(F_, std::move(acc), ap);
    }
    case FieldKind::extension: {
        int e = F_->ram_degree(), f = F_->unram;
        size_t EI = 2 * e - 1, EJ = 2 * f - 1;
        std::vector<FieldElement> acc(EI * EJ, zero(F_->base, Gamma(F_->prec * 4)));
        for (int i1 = 0; i1 < e; ++i1)
            for (int j1 = 0; j1 < f; ++j1) {
                if (coords_[i1 + e * j1].is_zero() && coords_[i1 + e * j1].precision().is_infinite()) continue;
                for (int i2 = 0; i2 < e; ++i2)
                    for (int j2 = 0; j2 < f; ++j2) {
                        FieldElement prod = coords_[i1 + e * j1] * o.coords_[i2 + e * j2];
                        size_t idx = (i1 + i2) + EI * (j1 + j2);
                        acc[idx] = acc[idx] + prod;
                    }
            }
        // reduce w-degree via the lifted residue modulus (monic, digits in [0,p-1])
        const auto& gm = F_->k->modulus();
        for (int j = static_cast<int>(EJ) - 1; j >= f; --j)
            for (size_t i = 0; i < EI; ++i) {
                FieldElement top = acc[i + EI * j];
                if (top.is_zero()) continue;
                acc[i + EI * j] = zero(F_->base, top.precision());
                for (int l = 0; l < f; ++l) {
                    FieldElement c = from_int(F_->base, -static_cast<long long>(gm[l]));
                    acc[i + EI * (j - f + l)] = acc[i + EI * (j - f + l)] + top * c;
                }
            }
        // reduce pi-degree via the Eisenstein relation
        if (e > 1) {
            const auto& eis = F_->eisenstein;
            for (int i = static_cast<int>(EI) - 1; i >= e; --i)
                for (int j = 0; j < f; ++j) {
                    FieldElement top = acc[i + EI * j];
                    if (top.is_zero()) continue;
                    acc[i + EI * j] = zero(F_->base, top.precision());
                    for (int l = 0; l < e; ++l) {
                        FieldElement c = from_int(F_->base, -eis[l]);
                        acc[(i - e + l) + EI * j] = acc[(i - e + l) + EI * j] + top * c;
                    }
                }
        }
        std::vector<FieldElement> out(static_cast<size_t>(e) * f);
        for (int i = 0; i < e; ++i)
            for (int j = 0; j < f; ++j) out[i + e * j] = acc[i + EI * j];
        return FieldOps::make_ext(F_, std::move(out));
    }
    }
    fail(errc::domain, "field: bad kind");
}

FieldElement FieldElement::inverse() const {
    if (!F_) fail(errc::domain, "field: empty element");
    if (zero_) fail(errc::precision, "field: precision-zero divisor");
    switch (F_->kind) {
    case FieldKind::padic: {
        long long k = aprec_.floor() - v_; // relative precision
        cpp_int m = pow_ll(F_->p, k);
        cpp_int iu = inv_mod(u_, m);
        return FieldOps::make_padic(F_, -v_, iu, Gamma(k - v_));
    }
    case FieldKind::laurent: {
        long long k = aprec_.floor() - v_;
        // invert the unit series c_(x) mod t^k
        std::vector<std::uint32_t> inv(k, 0);
        std::uint32_t c0inv = 1;
        { // inverse of c_[0] mod p
            for (std::uint32_t t = 1; t < F_->p; ++t)
                if (t * static_cast<std::uint64_t>(c_[0]) % F_->p == 1) {
                    c0inv = t;
                    break;
                }
        }
        inv[0] = c0inv;
        for (long long n = 1; n < k; ++n) {
            std::uint64_t s = 0;
            for (long long j = 1; j <= n; ++j) {
                std::uint32_t cj = j < static_cast<long long>(c_.size()) ? c_[j] : 0;
                s = (s + static_cast<std::uint64_t>(cj) * inv[n - j]) % F_->p;
            }
            s = s * c0inv % F_->p;
            inv[n] = static_cast<std::uint32_t>(s == 0 ? 0 : F_->p - s);
        }
        return FieldOps::make_laurent(F_, -v_, std::move(inv), Gamma(k - v_));
    }
    case FieldKind::hahn: {
        // x = c t^g (1 + h), h of positive valuation: geometric series
        Gamma g = val();
        Residue c0 = supp_.front().second;
        FieldElement lead = hahn_term(F_, c0, g);
        FieldElement leadinv = hahn_term(F_, c0.inverse(), -g);
        if (F_->mixed_char) {
            // lead^{-1}: representatives are multiplicative, so this is exact
        }
        FieldElement h = *this * leadinv - one(F_); // positive valuation
        Gamma relp = aprec_ - g;
        FieldElement acc = one(F_), term = one(F_);
        if (!h.is_zero()) {
            Gamma step = h.val();
            long long iters = (relp / 1).ceil() * step.den() / (step.num() > 0 ? step.num() : 1) + 2;
            for (long long i = 0; i < iters; ++i) {
                term = term * h;
                if (term.is_zero()) break;
                acc = acc + (i % 2 == 0 ? -term : term);
            }
        }
        return leadinv * acc;
    }
    case FieldKind::extension: {
        // solve (mult-by-x) z = 1 by Gaussian elimination over the base
        int d = F_->degree();
        std::vector<std::vector<FieldElement>> A(d, std::vector<FieldElement>(d, zero(F_->base)));
        for (int kcol = 0; kcol < d; ++kcol) {
            std::vector<FieldElement> b(d, zero(F_->base, Gamma(F_->prec)));
            b[kcol] = one(F_->base);
            FieldElement bas = FieldOps::make_ext(F_, std::move(b));
            FieldElement col = *this * bas;
            for (int r = 0; r < d; ++r) A[r][kcol] = col.coords_[r];
        }
        std::vector<FieldElement> rhs(d, zero(F_->base, Gamma(F_->prec)));
        rhs[0] = one(F_->base);
        std::vector<FieldElement> z = linsolve(std::move(A), std::move(rhs));
        return FieldOps::make_ext(F_, std::move(z));
    }
    }
    fail(errc::domain, "field: bad kind");
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    if (o.is_zero()) fail(errc::precision, "field: precision-zero divisor");
    return *this * o.inverse();
}

FieldElement FieldElement::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElement acc = one(F_), base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        if (e >>= 1) base = base * base;
    }
    return acc;
}

Residue FieldElement::residue() const {
    if (!F_) fail(errc::domain, "field: empty element");
    Gamma v = val();
    if (!zero_ && v < Gamma(0)) fail(errc::domain, "field: not integral");
    if (zero_ || v > Gamma(0)) return F_->k->zero();
    switch (F_->kind) {
    case FieldKind::padic: return F_->k->from_int((u_ % F_->p).convert_to<long long>());
    case FieldKind::laurent: return F_->k->from_int(c_[0]);
    case FieldKind::hahn: return supp_.front().second;
    case FieldKind::extension: {
        int e = F_->ram_degree();
        std::vector<std::uint32_t> c(F_->unram, 0);
        for (int j = 0; j < F_->unram; ++j) {
            const FieldElement& cj = coords_[e * j];
            if (!cj.is_zero() && cj.val() == Gamma(0)) c[j] = cj.residue().as_prime();
        }
        return F_->k->element(std::move(c));
    }
    }
    fail(errc::domain, "field: bad kind");
}

FieldElement FieldElement::truncated(const Gamma& np) const {
    if (!F_) fail(errc::domain, "field: empty element");
    switch (F_->kind) {
    case FieldKind::padic: return FieldOps::make_padic(F_, v_, zero_ ? cpp_int(0) : u_, min(np, aprec_));
    case FieldKind::laurent: return FieldOps::make_laurent(F_, v_, c_, min(np, aprec_));
    case FieldKind::hahn: return FieldOps::make_hahn(F_, supp_, min(np, aprec_));
    case FieldKind::extension: {
        int e = F_->ram_degree();
        std::vector<FieldElement> c(coords_.size());
        for (int i = 0; i < e; ++i)
            for (int j = 0; j < F_->unram; ++j) {
                Gamma coordp = np - Gamma(i, e);
                c[i + e * j] = coords_[i + e * j].truncated(Gamma(coordp.ceil()));
            }
        return FieldOps::make_ext(F_, std::move(c));
    }
    }
    fail(errc::domain, "field: bad kind");
}

void FieldOps::hahn_carry_add(const FieldPtr& F, std::vector<std::pair<Gamma, Residue>>& acc, Gamma g, const Residue& r,
                              const Gamma& aprec) {
    if (r.is_zero() || !(g < aprec)) return;
    // find existing slot
    auto it = std::find_if(acc.begin(), acc.end(), [&](const auto& t) { return t.first == g; });
    if (it == acc.end()) {
        acc.push_back({g, r});
        return;
    }
    Residue a = it->second;
    acc.erase(it);
    // resolve the carry chain in Z_p: teich(a) + teich(r) re-expanded in digits
    long long depth = (aprec - g).ceil() + 2;
    auto Qp = FieldDesc::padic(F->p, depth + 2);
    FieldElement s = teichmuller(a, Qp) + teichmuller(r, Qp);
    long long level = 0;
    while (!s.is_zero() && Gamma(level) + g < aprec) {
        Residue d = s.val() > Gamma(level) ? F->k->zero() : s.residue();
        // digit at p^level: shift down, take residue
        FieldElement shifted = s / FieldElement::uniformizer_pow(Qp, level);
        d = shifted.is_zero() || shifted.val() > Gamma(0) ? F->k->zero() : shifted.residue();
        if (!d.is_zero()) hahn_carry_add(F, acc, g + Gamma(level), d, aprec);
        s = s - teichmuller(d, Qp) * FieldElement::uniformizer_pow(Qp, level);
        ++level;
    }
}

FieldElement teichmuller(const Residue& r, const FieldPtr& F) {
    if (F->kind == FieldKind::laurent || F->kind == FieldKind::hahn) {
        // equicharacteristic: the representatives are the constants
        return FieldElement::lift(F, r);
    }
    if (!F->k->same(*r.field())) fail(errc::domain, "field: residue from a different field");
    FieldElement x = FieldElement::lift(F, r);
    if (x.is_zero()) return x;
    std::uint64_t q = F->k->size();
    for (long long i = 0; i <= F->prec + 1; ++i) {
        FieldElement nx = x.pow(static_cast<long long>(q));
        if ((nx - x).is_zero()) return nx;
        x = nx;
    }
    return x;
}

std::vector<FieldElement> linsolve(std::vector<std::vector<FieldElement>> A, std::vector<FieldElement> b) {
    size_t n = A.size();
    for (size_t col = 0; col < n; ++col) {
        // min-valuation pivot
        size_t piv = col;
        Gamma best = Gamma::infinity();
        for (size_t r = col; r < n; ++r) {
            if (A[r][col].is_zero()) continue;
            if (A[r][col].val() < best) {
                best = A[r][col].val();
                piv = r;
            }
        }
        if (best.is_infinite()) fail(errc::precision, "linsolve: singular at current precision");
        std::swap(A[piv], A[col]);
        std::swap(b[piv], b[col]);
        FieldElement inv = A[col][col].inverse();
        for (size_t c = col; c < n; ++c) A[col][c] = A[col][c] * inv;
        b[col] = b[col] * inv;
        for (size_t r = 0; r < n; ++r) {
            if (r == col || A[r][col].is_zero()) continue;
            FieldElement f = A[r][col];
            for (size_t c = col; c < n; ++c) A[r][c] = A[r][c] - f * A[col][c];
            b[r] = b[r] - f * b[col];
        }
    }
    return b;
}

// ---------------------------------------------------------------------------
// printing

std::string FieldElement::str() const {
    if (!F_) return "<empty>";
    std::ostringstream os;
    switch (F_->kind) {
    case FieldKind::padic: {
        if (zero_) {
            os << "0 + O(" << F_->p << "^" << aprec_.str() << ")";
            return os.str();
        }
        cpp_int u = u_;
        long long k = v_;
        bool first = true;
        while (u != 0) {
            cpp_int d = pmod(u, F_->p);
            if (d != 0) {
                if (!first) os << " + ";
                if (d == 1)
                    os << F_->p << "^" << k;
                else
                    os << d << "*" << F_->p << "^" << k;
                first = false;
            }
            u = (u - d) / F_->p;
            ++k;
        }
        os << " + O(" << F_->p << "^" << aprec_.str() << ")";
        return os.str();
    }
    case FieldKind::laurent: {
        if (zero_) {
            os << "0 + O(t^" << aprec_.str() << ")";
            return os.str();
        }
        bool first = true;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            if (!first) os << " + ";
            if (c_[i] == 1)
                os << "t^" << (v_ + static_cast<long long>(i));
            else
                os << c_[i] << "*t^" << (v_ + static_cast<long long>(i));
            first = false;
        }
        os << " + O(t^" << aprec_.str() << ")";
        return os.str();
    }
    case FieldKind::hahn: {
        if (zero_) return "0";
        bool first = true;
        for (auto& t : supp_) {
            if (!first) os << " + ";
            first = false;
            std::string coef = t.second.str();
            if (t.first.is_zero()) {
                os << coef;
            } else {
                if (coef != "1") os << coef << "*";
                if (t.first.is_integer())
                    os << "t^" << t.first.str();
                else
                    os << "t^(" << t.first.str() << ")";
            }
        }
        return os.str();
    }
    case FieldKind::extension: {
        int e = F_->ram_degree();
        bool first = true;
        for (size_t idx = 0; idx < coords_.size(); ++idx) {
            if (coords_[idx].is_zero()) continue;
            int i = static_cast<int>(idx) % e, j = static_cast<int>(idx) / e;
            if (!first) os << " + ";
            first = false;
            os << "(" << coords_[idx].str() << ")";
            if (i) os << "*y^" << i;
            if (j) os << "*w^" << j;
        }
        if (first) os << "0";
        return os.str();
    }
    }
    return "?";
}

// ---------------------------------------------------------------------------
// parsing: `3^-1 + 2*3^0 + O(3^5)`, `t^-2 + t^0 + O(t^4)`, `1 + t^(1/2)`,
// extension terms with y (ramified) and w (unramified)

namespace {

struct Lexer {
    std::string s;
    size_t i = 0;
    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    bool peek_digit() {
        skip();
        return i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]));
    }
    bool peek(char c) {
        skip();
        return i < s.size() && s[i] == c;
    }
    bool done() {
        skip();
        return i >= s.size();
    }
    long long integer() {
        skip();
        bool neg = eat('-');
        if (!peek_digit()) fail(errc::parse, "element: expected integer at position " + std::to_string(i));
        long long v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) v = v * 10 + (s[i++] - '0');
        return neg ? -v : v;
    }
    Gamma exponent() {
        if (eat('(')) {
            long long n = integer();
            long long d = 1;
            if (eat('/')) d = integer();
            if (!eat(')')) fail(errc::parse, "element: expected ')' in exponent");
            return Gamma(n, d);
        }
        return Gamma(integer());
    }
};

} // namespace

FieldElement parse_element(const FieldPtr& F, const std::string& text) {
    Lexer lx{text};
    FieldElement acc = FieldElement::zero(F);
    Gamma oprec = Gamma(F->prec);
    bool saw_o = false;
    bool first = true;
    while (!lx.done()) {
        if (!first && !lx.eat('+')) {
            if (!lx.peek('-')) fail(errc::parse, "element: expected '+' between terms");
        }
        first = false;
        lx.skip();
        if (lx.peek('O')) {
            lx.eat('O');
            if (!lx.eat('(')) fail(errc::parse, "element: expected '(' after O");
            // base symbol: digits (p-adic) or 't'
            if (lx.peek('t'))
                lx.eat('t');
            else
                lx.integer();
            if (!lx.eat('^')) fail(errc::parse, "element: expected '^' in O(...)");
            oprec = lx.exponent();
            if (!lx.eat(')')) fail(errc::parse, "element: expected ')' in O(...)");
            saw_o = true;
            continue;
        }
        bool neg = false;
        long long coef = 1;
        Gamma expo(0);
        bool have_symbol = false;
        if (lx.peek('-')) neg = true;
        if (lx.peek_digit() || lx.peek('-')) {
            coef = lx.integer();
            neg = false; // folded into coef
            if (lx.eat('*')) {
                // fallthrough to symbol
            } else if (lx.eat('^')) {
                // p^k with p the leading integer (p-adic grammar)
                expo = lx.exponent();
                if (coef != F->p && F->kind != FieldKind::hahn)
                    fail(errc::parse, "element: base of '^' must be the prime");
                coef = 1;
                have_symbol = true;
            }
        }
        if (!have_symbol && (lx.peek('t') || lx.peek('y') || lx.peek('w') || lx.peek_digit())) {
            // symbol part: t^g | p^k | y^i[*w^j] | w^j
            if (lx.peek('t')) {
                lx.eat('t');
                if (lx.eat('^')) expo = lx.exponent();
                have_symbol = true;
            } else if (lx.peek('y') || lx.peek('w')) {
                long long yi = 0, wj = 0;
                if (lx.eat('y')) {
                    yi = 1;
                    if (lx.eat('^')) yi = lx.integer();
                    lx.eat('*');
                }
                if (lx.eat('w')) {
                    wj = 1;
                    if (lx.eat('^')) wj = lx.integer();
                }
                if (F->kind != FieldKind::extension) fail(errc::parse, "element: y/w only in extensions");
                int e = F->ram_degree();
                if (yi >= e || wj >= F->unram) fail(errc::parse, "element: basis exponent out of range");
                std::vector<FieldElement> c(F->degree(), FieldElement::zero(F->base));
                c[yi + e * wj] = FieldElement::from_int(F->base, coef);
                acc = acc + FieldElement::from_coords(F, std::move(c));
                continue;
            } else {
                long long base = lx.integer();
                if (base != F->p) fail(errc::parse, "element: base of '^' must be the prime");
                if (!lx.eat('^')) fail(errc::parse, "element: expected '^'");
                expo = lx.exponent();
                have_symbol = true;
            }
        }
        FieldElement term;
        if (!have_symbol) {
            term = FieldElement::from_int(F, neg ? -coef : coef);
        } else if (F->kind == FieldKind::hahn) {
            Residue r = F->k->from_int(neg ? -coef : coef);
            term = FieldElement::hahn_term(F, r, expo);
        } else {
            if (!expo.is_integer()) fail(errc::parse, "element: fractional exponent outside Hahn field");
            term = FieldElement::from_int(F, neg ? -coef : coef) * FieldElement::uniformizer_pow(F, expo.num());
        }
        acc = acc + term;
    }
    if (saw_o) acc = acc.truncated(oprec);
    return acc;
}

} // namespace wsk
