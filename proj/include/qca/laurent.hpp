#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <vector>

namespace qca {

using BigInt = boost::multiprecision::cpp_int;

/// Integer Laurent polynomial in one formal variable.
///
/// Dense block storage: coeff(low + t) == c[t].  Both ends are kept trimmed,
/// so equality of canonical forms is memberwise equality.  The zero
/// polynomial is the empty block with low == 0.
class LaurentZ {
public:
    LaurentZ() = default;
    LaurentZ(long n) : LaurentZ(BigInt(n)) {}
    explicit LaurentZ(BigInt n);

    static LaurentZ monomial(BigInt coeff, int exp);
    static LaurentZ from_coeffs(std::vector<BigInt> coeffs, int low);

    bool is_zero() const { return c_.empty(); }
    bool is_one() const;

    // Exponent range of the support; only valid on nonzero polynomials.
    int low_exp() const { return low_; }
    int high_exp() const { return low_ + static_cast<int>(c_.size()) - 1; }
    int term_count() const { return static_cast<int>(c_.size()); }

    BigInt coeff(int exp) const;
    const std::vector<BigInt>& block() const { return c_; }
    const BigInt& leading() const { return c_.back(); }

    LaurentZ shifted(int k) const;  // multiply by s^k
    LaurentZ reversed() const;      // substitute s -> s^{-1}

    friend LaurentZ operator+(const LaurentZ& a, const LaurentZ& b);
    friend LaurentZ operator-(const LaurentZ& a, const LaurentZ& b);
    friend LaurentZ operator*(const LaurentZ& a, const LaurentZ& b);
    LaurentZ operator-() const;

    bool operator==(const LaurentZ&) const = default;

private:
    int low_ = 0;
    std::vector<BigInt> c_;

    void trim();
};

/// gcd in Z[s] of the ordinary-polynomial parts (units s^k divided out),
/// including integer content, normalized to positive leading coefficient.
/// gcd(0, 0) == 0.
LaurentZ poly_gcd(const LaurentZ& a, const LaurentZ& b);

/// Exact division; throws std::domain_error when b is zero or does not
/// divide a.
LaurentZ exact_div(const LaurentZ& a, const LaurentZ& b);

}  // namespace qca
