#include "acphase/gaussian.hpp"

#include <sstream>

namespace acphase {

std::string GaussInt::str() const {
    std::ostringstream os;
    if (im == 0) {
        os << re;
    } else if (re == 0) {
        if (im == 1)
            os << "i";
        else if (im == -1)
            os << "-i";
        else
            os << im << "i";
    } else {
        os << re;
        if (im > 0) os << "+";
        if (im == 1)
            os << "i";
        else if (im == -1)
            os << "-i";
        else
            os << im << "i";
    }
    return os.str();
}

GaussianMatrix GaussianMatrix::identity(int dim) {
    GaussianMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = GaussInt{1};
    return m;
}

GaussianMatrix GaussianMatrix::operator+(const GaussianMatrix& o) const {
    GaussianMatrix r(dim_);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
    return r;
}

GaussianMatrix GaussianMatrix::operator-(const GaussianMatrix& o) const {
    GaussianMatrix r(dim_);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
    return r;
}

GaussianMatrix GaussianMatrix::operator-() const {
    GaussianMatrix r(dim_);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = -data_[i];
    return r;
}

GaussianMatrix GaussianMatrix::operator*(const GaussianMatrix& o) const {
    GaussianMatrix r(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int k = 0; k < dim_; ++k) {
            const GaussInt a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < dim_; ++j) r.at(i, j) = r.at(i, j) + a * o.at(k, j);
        }
    return r;
}

GaussianMatrix GaussianMatrix::operator*(GaussInt s) const {
    GaussianMatrix r(dim_);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * s;
    return r;
}

GaussianMatrix GaussianMatrix::commutator(const GaussianMatrix& o) const {
    return (*this) * o - o * (*this);
}

GaussianMatrix GaussianMatrix::conj_transpose() const {
    GaussianMatrix r(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) r.at(i, j) = at(j, i).conj();
    return r;
}

GaussInt GaussianMatrix::trace() const {
    GaussInt t;
    for (int i = 0; i < dim_; ++i) t = t + at(i, i);
    return t;
}

bool GaussianMatrix::is_zero() const {
    for (const auto& e : data_)
        if (!e.is_zero()) return false;
    return true;
}

std::optional<GaussianMatrix> GaussianMatrix::try_half() const {
    GaussianMatrix r(dim_);
    for (size_t i = 0; i < data_.size(); ++i) {
        if (!data_[i].is_even()) return std::nullopt;
        r.data_[i] = GaussInt{data_[i].re / 2, data_[i].im / 2};
    }
    return r;
}

std::int64_t GaussianMatrix::frobenius_sq() const {
    std::int64_t s = 0;
    for (const auto& e : data_) s += e.norm();
    return s;
}

std::vector<std::complex<double>> GaussianMatrix::to_complex() const {
    std::vector<std::complex<double>> v;
    v.reserve(data_.size());
    for (const auto& e : data_) v.push_back(e.to_complex());
    return v;
}

std::string GaussianMatrix::dump() const {
    std::ostringstream os;
    for (int i = 0; i < dim_; ++i) {
        for (int j = 0; j < dim_; ++j) {
            if (j) os << ' ';
            os << at(i, j).str();
        }
        os << '\n';
    }
    return os.str();
}

std::vector<std::complex<double>> HalfGaussianMatrix::to_complex() const {
    auto v = twice.to_complex();
    for (auto& z : v) z *= 0.5;
    return v;
}

}  // namespace acphase
