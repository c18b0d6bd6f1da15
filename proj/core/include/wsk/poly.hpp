#pragma once

#include "wsk/field.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wsk {

// Dense univariate polynomial over a FieldElement coefficient field.
class Poly {
  public:
    Poly() = default;
    explicit Poly(FieldPtr F) : F_(std::move(F)) {}
    Poly(FieldPtr F, std::vector<FieldElement> c) : F_(std::move(F)), c_(std::move(c)) { trim(); }

    static Poly from_ints(const FieldPtr& F, const std::vector<long long>& c);
    static Poly x(const FieldPtr& F); // the monic linear monomial
    static Poly constant(const FieldElement& a);

    const FieldPtr& field() const { return F_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    const FieldElement& coeff(int i) const;
    const std::vector<FieldElement>& coeffs() const { return c_; }
    bool is_monic() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const FieldElement& a) const;
    Poly operator-() const;

    // Euclidean division by a polynomial with unit leading coefficient
    std::pair<Poly, Poly> divmod(const Poly& d) const;

    FieldElement operator()(const FieldElement& x) const; // Horner
    Poly derivative() const;
    Poly shift(const FieldElement& a) const;      // P(x + a)
    Poly scale_arg(const FieldElement& a) const;  // P(a x)
    Poly reverse() const;                         // x^deg P(1/x)

    // minimal valuation over stored coefficients (gauss norm, additive)
    Gamma content_val() const;

    // map coefficients into an extension of the coefficient field
    Poly lifted_to(const FieldPtr& E) const;
    // project coefficients into the base of an extension field; errc::precision
    // if a coordinate outside the base is nonzero at precision
    Poly projected_to_base() const;

    std::string str(const std::string& var = "x") const;

  private:
    void trim();
    FieldPtr F_;
    std::vector<FieldElement> c_; // c_[i] * x^i, trailing (leading) zeros trimmed
};

// Newton polygon: list of (root valuation, multiplicity), ascending valuation.
std::vector<std::pair<Gamma, int>> newton_polygon(const Poly& P);

// number of roots with val > theta (strict) or val >= theta
int count_roots_val_above(const Poly& P, const Gamma& theta, bool strict);

// Resultant via the Euclidean remainder sequence (valuations are what callers use).
FieldElement resultant(const Poly& A, const Poly& B);

// Split a monic P into (deep, rest) where deep is monic and carries exactly the
// roots with val >= theta (strict=false) or val > theta (strict=true).
// theta must lie in the value lattice of the coefficient field.
std::pair<Poly, Poly> split_by_valuation(const Poly& P, const Gamma& theta, bool strict);

// Hensel-style preparation for a polynomial G whose residue structure has
// degree D: G = A * B with A monic of degree D (roots of val >= 0) and B of
// valuation-0 constant term with all other roots negative-valuation.
std::pair<Poly, Poly> prepare_poly(const Poly& G, int D);

// embed an element of the base field of E into E
FieldElement embed(const FieldElement& x, const FieldPtr& E);

} // namespace wsk
