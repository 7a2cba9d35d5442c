#pragma once

#include <complex>
#include <cstdint>

namespace hwp {

// Validated odd dimension d >= 3. Every downstream type carries one, so the
// parity/size check happens exactly once.
class Dim {
public:
    explicit Dim(int d);

    int value() const { return d_; }
    int half() const { return (d_ - 1) / 2; }  // largest centered residue

    friend bool operator==(Dim a, Dim b) { return a.d_ == b.d_; }
    friend bool operator!=(Dim a, Dim b) { return a.d_ != b.d_; }

private:
    int d_;
};

// Exact residue arithmetic in Z(d). The stored value is the canonical
// representative in [0, d); centered() gives the representative in
// [-(d-1)/2, (d-1)/2]. Mixing moduli throws.
class ModInt {
public:
    ModInt(std::int64_t value, Dim modulus);

    std::int64_t value() const { return v_; }
    std::int64_t centered() const;
    Dim modulus() const { return d_; }

    ModInt inverse() const;          // throws when gcd(value, d) != 1
    ModInt pow(std::int64_t e) const;

    friend ModInt operator+(const ModInt& a, const ModInt& b);
    friend ModInt operator-(const ModInt& a, const ModInt& b);
    friend ModInt operator*(const ModInt& a, const ModInt& b);
    ModInt operator-() const;

    friend bool operator==(const ModInt& a, const ModInt& b);
    friend bool operator!=(const ModInt& a, const ModInt& b) { return !(a == b); }

private:
    std::int64_t v_;
    Dim d_;
};

ModInt mod_add(const ModInt& a, const ModInt& b);
ModInt mod_mul(const ModInt& a, const ModInt& b);
ModInt mod_neg(const ModInt& a);
ModInt mod_inv(const ModInt& a);

// 2^{-1} = (d+1)/2, the workhorse residue of the whole formalism.
ModInt two_inverse(Dim d);
std::int64_t two_inverse_value(Dim d);

// omega(d, e) = exp(i 2 pi e / d), evaluated on the canonical residue of e.
std::complex<double> omega(Dim d, std::int64_t exponent);

// A unit-modulus phase carried as an exact integer exponent of omega.
// Multiplication is exponent addition; materialization happens only at
// matrix boundaries.
class Phase {
public:
    explicit Phase(ModInt exponent) : e_(exponent) {}
    static Phase one(Dim d) { return Phase(ModInt(0, d)); }

    const ModInt& exponent() const { return e_; }
    std::complex<double> value() const { return omega(e_.modulus(), e_.value()); }

    friend Phase operator*(const Phase& a, const Phase& b) { return Phase(a.e_ + b.e_); }
    friend bool operator==(const Phase& a, const Phase& b) { return a.e_ == b.e_; }

private:
    ModInt e_;
};

// Centered residue of any integer: result in [-(d-1)/2, (d-1)/2].
std::int64_t centered_residue(Dim d, std::int64_t x);

// Storage order is ascending centered label: j = -(d-1)/2 lives at index 0,
// j = 0 at index (d-1)/2, j = (d-1)/2 at index d-1.
int centered_index(const ModInt& j);
int centered_index(Dim d, std::int64_t j);
ModInt label_at(Dim d, int index);  // inverse of centered_index

}  // namespace hwp
