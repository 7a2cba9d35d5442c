#include "hwpkit/ring.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hwp {

Dim::Dim(int d) : d_(d) {
    if (d < 3 || d % 2 == 0)
        throw std::invalid_argument("dimension must be odd and >= 3, got " + std::to_string(d));
}

namespace {

std::int64_t floor_mod(std::int64_t x, std::int64_t m) {
    std::int64_t r = x % m;
    return r < 0 ? r + m : r;
}

void require_same_modulus(const ModInt& a, const ModInt& b) {
    if (a.modulus() != b.modulus())
        throw std::invalid_argument("modulus mismatch: " + std::to_string(a.modulus().value()) +
                                    " vs " + std::to_string(b.modulus().value()));
}

}  // namespace

ModInt::ModInt(std::int64_t value, Dim modulus) : v_(floor_mod(value, modulus.value())), d_(modulus) {}

std::int64_t ModInt::centered() const {
    return v_ > d_.half() ? v_ - d_.value() : v_;
}

ModInt ModInt::inverse() const {
    const std::int64_t d = d_.value();
    const std::int64_t g = std::gcd(v_, d);
    if (g != 1)
        throw std::invalid_argument("not invertible mod " + std::to_string(d) + ": gcd(" +
                                    std::to_string(v_) + ", " + std::to_string(d) + ") = " +
                                    std::to_string(g));
    // extended Euclid on (v, d)
    std::int64_t r0 = v_, r1 = d, s0 = 1, s1 = 0;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        s0 -= q * s1;
        std::swap(s0, s1);
    }
    return ModInt(s0, d_);
}

ModInt ModInt::pow(std::int64_t e) const {
    ModInt base = e < 0 ? inverse() : *this;
    std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
    ModInt acc(1, d_);
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

ModInt operator+(const ModInt& a, const ModInt& b) {
    require_same_modulus(a, b);
    return ModInt(a.v_ + b.v_, a.d_);
}

ModInt operator-(const ModInt& a, const ModInt& b) {
    require_same_modulus(a, b);
    return ModInt(a.v_ - b.v_, a.d_);
}

ModInt operator*(const ModInt& a, const ModInt& b) {
    require_same_modulus(a, b);
    return ModInt(a.v_ * b.v_, a.d_);
}

ModInt ModInt::operator-() const { return ModInt(-v_, d_); }

bool operator==(const ModInt& a, const ModInt& b) {
    return a.d_ == b.d_ && a.v_ == b.v_;
}

ModInt mod_add(const ModInt& a, const ModInt& b) { return a + b; }
ModInt mod_mul(const ModInt& a, const ModInt& b) { return a * b; }
ModInt mod_neg(const ModInt& a) { return -a; }
ModInt mod_inv(const ModInt& a) { return a.inverse(); }

ModInt two_inverse(Dim d) { return ModInt((d.value() + 1) / 2, d); }
std::int64_t two_inverse_value(Dim d) { return (d.value() + 1) / 2; }

std::complex<double> omega(Dim d, std::int64_t exponent) {
    const std::int64_t e = floor_mod(exponent, d.value());
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(e) / d.value();
    return {std::cos(theta), std::sin(theta)};
}

std::int64_t centered_residue(Dim d, std::int64_t x) {
    return floor_mod(x + d.half(), d.value()) - d.half();
}

int centered_index(const ModInt& j) {
    return centered_index(j.modulus(), j.value());
}

int centered_index(Dim d, std::int64_t j) {
    return static_cast<int>(floor_mod(j + d.half(), d.value()));
}

ModInt label_at(Dim d, int index) {
    if (index < 0 || index >= d.value())
        throw std::out_of_range("basis index " + std::to_string(index) + " outside [0, " +
                                std::to_string(d.value()) + ")");
    return ModInt(static_cast<std::int64_t>(index) - d.half(), d);
}

}  // namespace hwp
