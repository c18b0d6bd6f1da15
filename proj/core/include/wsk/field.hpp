#pragma once

#include "wsk/gamma.hpp"
#include "wsk/residue.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace wsk {

using boost::multiprecision::cpp_int;

enum class FieldKind { padic, laurent, hahn, extension };

struct FieldDesc;
using FieldPtr = std::shared_ptr<const FieldDesc>;

// Which effective field we are working in.  Immutable; elements hold a
// shared pointer to their descriptor.
struct FieldDesc : std::enable_shared_from_this<FieldDesc> {
    FieldKind kind;
    long long p = 0;      // residue characteristic
    long long prec = 20;  // default working precision, in this field's valuation units

    // extension data (kind == extension); the base is p-adic or Laurent
    FieldPtr base;
    std::vector<long long> eisenstein; // monic over Z, constant ... leading; empty => unramified only
    int unram = 1;

    // Hahn data (kind == hahn); Gamma = Q only
    int support_cap = 64;
    bool mixed_char = false; // coefficients are multiplicative representatives with p-adic carries

    ResidueFieldPtr k; // residue field F_{p^f}
    std::string name;

    int ram_degree() const { return eisenstein.empty() ? 1 : static_cast<int>(eisenstein.size()) - 1; }
    int degree() const { return ram_degree() * unram; } // over the base
    // granularity of the value group: val(uniformizer) = 1/ram_degree
    Gamma granule() const { return Gamma(1, ram_degree()); }

    static FieldPtr padic(long long p, long long prec);
    static FieldPtr laurent(long long p, long long prec);
    static FieldPtr hahn(long long p, long long prec, int support_cap = 64, bool mixed = false);
    static FieldPtr extension(FieldPtr base, std::vector<long long> eisenstein, int unram = 1);
};

// An element of an effective valued field, carrying an absolute precision
// certificate: the element is known modulo { val >= prec }.
class FieldElement {
  public:
    FieldElement() = default;

    const FieldPtr& field() const { return F_; }

    static FieldElement zero(const FieldPtr& F);
    static FieldElement zero(const FieldPtr& F, const Gamma& prec); // zero known to that precision
    static FieldElement one(const FieldPtr& F);
    static FieldElement from_int(const FieldPtr& F, const cpp_int& n);
    static FieldElement from_rational(const FieldPtr& F, const cpp_int& num, const cpp_int& den);
    // uniformizer^k, exact to working precision; k counts granules (val = k/e)
    static FieldElement uniformizer_pow(const FieldPtr& F, long long k);
    // canonical lift of a residue element (digit in [0,p-1]; Hahn: single term t^0)
    static FieldElement lift(const FieldPtr& F, const Residue& r);
    // Hahn term c * t^g
    static FieldElement hahn_term(const FieldPtr& F, const Residue& c, const Gamma& g);
    // extension element from base-field coordinates in the pi^i w^j basis, index i + e*j
    static FieldElement from_coords(const FieldPtr& F, std::vector<FieldElement> coords);

    bool is_zero() const; // indistinguishable from zero at current precision
    Gamma val() const;    // infinity iff is_zero()
    Gamma precision() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const; // errc::precision on precision-zero divisor
    FieldElement inverse() const;
    FieldElement pow(long long e) const;

    bool eq(const FieldElement& o) const { return (*this - o).is_zero(); }

    // residue(x) for val(x) >= 0; errc::domain "not integral" otherwise
    Residue residue() const;

    // x truncated to absolute precision np (np <= precision())
    FieldElement truncated(const Gamma& np) const;

    std::string str() const;

    // per-kind accessors used by the printers and the RV machinery
    const std::vector<FieldElement>& coords() const { return coords_; }
    const std::vector<std::pair<Gamma, Residue>>& support() const { return supp_; }

  private:
    friend struct FieldOps;
    FieldPtr F_;
    bool zero_ = true;
    // p-adic: x = p^v * u with u a unit mantissa mod p^(aprec - v)
    // laurent: x = t^v * (c[0] + c[1] t + ...) with c[0] != 0
    long long v_ = 0;
    cpp_int u_;
    std::vector<std::uint32_t> c_;
    Gamma aprec_ = Gamma::infinity();
    std::vector<FieldElement> coords_;            // extension
    std::vector<std::pair<Gamma, Residue>> supp_; // hahn, strictly increasing exponents
};

// teichmuller(r, F): multiplicative representative of r; in equicharacteristic
// the representatives are the constants and this is the canonical embedding.
FieldElement teichmuller(const Residue& r, const FieldPtr& F);

// Solve A x = b over a field by Gaussian elimination with min-valuation pivoting.
std::vector<FieldElement> linsolve(std::vector<std::vector<FieldElement>> A, std::vector<FieldElement> b);

// Parse an element literal in the field's text grammar.
FieldElement parse_element(const FieldPtr& F, const std::string& text);

} // namespace wsk
