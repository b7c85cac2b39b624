#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace acphase {

/// Gaussian integer a + b*i with exact machine-integer components.
struct GaussInt {
    std::int64_t re{0};
    std::int64_t im{0};

    constexpr GaussInt() = default;
    constexpr GaussInt(std::int64_t r, std::int64_t i = 0) : re(r), im(i) {}

    constexpr GaussInt operator+(GaussInt o) const { return {re + o.re, im + o.im}; }
    constexpr GaussInt operator-(GaussInt o) const { return {re - o.re, im - o.im}; }
    constexpr GaussInt operator-() const { return {-re, -im}; }
    constexpr GaussInt operator*(GaussInt o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    constexpr bool operator==(const GaussInt&) const = default;

    constexpr GaussInt conj() const { return {re, -im}; }
    /// Multiply by i.
    constexpr GaussInt times_i() const { return {-im, re}; }
    constexpr bool is_zero() const { return re == 0 && im == 0; }
    constexpr bool is_even() const { return re % 2 == 0 && im % 2 == 0; }

    std::complex<double> to_complex() const {
        return {static_cast<double>(re), static_cast<double>(im)};
    }
    /// Squared magnitude, exact.
    constexpr std::int64_t norm() const { return re * re + im * im; }

    std::string str() const;
};

/// Dense square matrix over the Gaussian integers. All arithmetic is exact;
/// there is no floating point anywhere in this type.
class GaussianMatrix {
public:
    GaussianMatrix() = default;
    explicit GaussianMatrix(int dim) : dim_(dim), data_(static_cast<size_t>(dim) * dim) {}

    static GaussianMatrix identity(int dim);
    static GaussianMatrix zero(int dim) { return GaussianMatrix(dim); }

    int dim() const { return dim_; }
    GaussInt& at(int r, int c) { return data_[static_cast<size_t>(r) * dim_ + c]; }
    const GaussInt& at(int r, int c) const { return data_[static_cast<size_t>(r) * dim_ + c]; }

    GaussianMatrix operator+(const GaussianMatrix& o) const;
    GaussianMatrix operator-(const GaussianMatrix& o) const;
    GaussianMatrix operator-() const;
    GaussianMatrix operator*(const GaussianMatrix& o) const;
    GaussianMatrix operator*(GaussInt s) const;
    bool operator==(const GaussianMatrix&) const = default;

    GaussianMatrix commutator(const GaussianMatrix& o) const;
    GaussianMatrix conj_transpose() const;
    GaussInt trace() const;
    bool is_zero() const;
    bool is_hermitian() const { return *this == conj_transpose(); }

    /// Exact halving: succeeds only if every entry is even (both components).
    std::optional<GaussianMatrix> try_half() const;

    /// Sum of squared entry magnitudes, exact (square of the Frobenius norm).
    std::int64_t frobenius_sq() const;

    std::vector<std::complex<double>> to_complex() const;

    /// Plain-text dump, one row per line, entries as "a+bi".
    std::string dump() const;

private:
    int dim_{0};
    std::vector<GaussInt> data_;
};

/// Exact matrix with half-Gaussian-integer entries, stored as twice its value.
struct HalfGaussianMatrix {
    GaussianMatrix twice;  // value = twice / 2

    int dim() const { return twice.dim(); }
    bool operator==(const HalfGaussianMatrix&) const = default;
    HalfGaussianMatrix operator-() const { return {-twice}; }
    bool is_zero() const { return twice.is_zero(); }
    std::vector<std::complex<double>> to_complex() const;
};

}  // namespace acphase
