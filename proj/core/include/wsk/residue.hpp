#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace wsk {

class ResidueField;
using ResidueFieldPtr = std::shared_ptr<const ResidueField>;

// An element of a small finite field F_{p^f}, stored as the coefficient
// vector of a polynomial of degree < f over F_p, reduced modulo the
// field's fixed monic irreducible.
class Residue {
  public:
    Residue() = default;
    Residue(ResidueFieldPtr F, std::vector<std::uint32_t> c);

    const ResidueFieldPtr& field() const { return F_; }
    bool is_zero() const;
    bool in_prime_field() const; // lies in F_p
    std::uint32_t as_prime() const;

    Residue operator+(const Residue& o) const;
    Residue operator-(const Residue& o) const;
    Residue operator*(const Residue& o) const;
    Residue inverse() const;
    Residue pow(std::uint64_t e) const;
    bool operator==(const Residue& o) const;
    bool operator!=(const Residue& o) const { return !(*this == o); }

    const std::vector<std::uint32_t>& coords() const { return c_; }
    std::string str() const;

    // total order for use as a map key (field identity not compared)
    bool operator<(const Residue& o) const { return c_ < o.c_; }

  private:
    ResidueFieldPtr F_;
    std::vector<std::uint32_t> c_;
};

// F_{p^f} with a deterministically chosen monic irreducible modulus.
class ResidueField : public std::enable_shared_from_this<ResidueField> {
  public:
    static ResidueFieldPtr make(std::uint32_t p, std::uint32_t f = 1);

    std::uint32_t p() const { return p_; }
    std::uint32_t degree() const { return f_; }
    std::uint64_t size() const { return q_; }
    const std::vector<std::uint32_t>& modulus() const { return mod_; }

    Residue zero() const;
    Residue one() const;
    Residue from_int(long long n) const;
    Residue element(std::vector<std::uint32_t> c) const;
    Residue generator() const; // the class of the variable (degree > 1 only)
    std::vector<Residue> all_elements() const;

    // minimal polynomial over F_p of an element of this field, as a monic
    // coefficient vector c0 + c1 x + ... (used by strong-unit certificates)
    std::vector<std::uint32_t> min_poly(const Residue& r) const;

    bool same(const ResidueField& o) const { return p_ == o.p_ && f_ == o.f_; }

  private:
    ResidueField(std::uint32_t p, std::uint32_t f);
    std::uint32_t p_, f_;
    std::uint64_t q_;
    std::vector<std::uint32_t> mod_; // monic, degree f, coefficients mod p
};

} // namespace wsk
