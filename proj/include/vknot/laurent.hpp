#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>

namespace vknot {

using BigInt = boost::multiprecision::cpp_int;

// Exact Laurent polynomial in a single variable A with integer coefficients.
// Invariant: no stored coefficient is zero. Equality is exact term equality.
class LaurentPoly {
public:
    LaurentPoly() = default;

    // c * A^k
    static LaurentPoly term(long long exponent, BigInt coefficient);
    static LaurentPoly zero() { return {}; }
    static LaurentPoly one() { return term(0, 1); }
    // the loop variable d = -A^2 - A^-2
    static LaurentPoly loop_value();
    // (-A^3)^k for any integer k (negative k allowed)
    static LaurentPoly neg_a_cubed_pow(long long k);

    bool is_zero() const { return terms_.empty(); }
    const std::map<long long, BigInt>& terms() const { return terms_; }
    BigInt coeff(long long exponent) const;

    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }
    LaurentPoly operator-() const;

    bool operator==(const LaurentPoly& rhs) const = default;

    // A^k -> A^-k on every term
    LaurentPoly mirrored() const;
    LaurentPoly pow(unsigned k) const;

    // Canonical text form, terms by ascending exponent: "-A^-16 + A^-12 + A^-4".
    std::string str() const;
    // Parses the canonical form (also accepts arbitrary term order and "+ -" signs).
    static LaurentPoly parse(const std::string& text);

private:
    std::map<long long, BigInt> terms_;
    void add_term(long long exponent, const BigInt& c);
};

} // namespace vknot
