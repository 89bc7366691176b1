#pragma once

#include <Eigen/Core>

#include <array>
#include <optional>
#include <vector>

#include "qfla/rational.hpp"

namespace qfla {

/// Dense rank-3 array.  Entry (i, j, k) lives at ((i·d1) + j)·d2 + k, so
/// iteration order is lexicographic in (i, j, k).
template <typename Scalar>
class Tensor3 {
public:
    using Index = Eigen::Index;

    Tensor3() : dims_{0, 0, 0} {}
    Tensor3(Index d0, Index d1, Index d2)
        : dims_{d0, d1, d2},
          data_(static_cast<std::size_t>(d0 * d1 * d2), Scalar(0)) {}

    static Tensor3 Zero(Index d0, Index d1, Index d2) { return Tensor3(d0, d1, d2); }

    const std::array<Index, 3>& dims() const { return dims_; }
    Index dim(int axis) const { return dims_[static_cast<std::size_t>(axis)]; }

    Scalar& operator()(Index i, Index j, Index k) {
        return data_[static_cast<std::size_t>((i * dims_[1] + j) * dims_[2] + k)];
    }
    const Scalar& operator()(Index i, Index j, Index k) const {
        return data_[static_cast<std::size_t>((i * dims_[1] + j) * dims_[2] + k)];
    }

    bool is_zero() const {
        for (const Scalar& v : data_)
            if (!(v == Scalar(0))) return false;
        return true;
    }

    /// Lexicographically first nonzero index, if any.
    std::optional<std::array<Index, 3>> first_nonzero() const {
        for (Index i = 0; i < dims_[0]; ++i)
            for (Index j = 0; j < dims_[1]; ++j)
                for (Index k = 0; k < dims_[2]; ++k)
                    if (!((*this)(i, j, k) == Scalar(0))) return std::array<Index, 3>{i, j, k};
        return std::nullopt;
    }

    friend bool operator==(const Tensor3& a, const Tensor3& b) {
        return a.dims_ == b.dims_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Tensor3& a, const Tensor3& b) { return !(a == b); }

    friend Tensor3 operator+(const Tensor3& a, const Tensor3& b) {
        Tensor3 r(a);
        for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
        return r;
    }
    friend Tensor3 operator-(const Tensor3& a, const Tensor3& b) {
        Tensor3 r(a);
        for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
        return r;
    }
    Tensor3 operator-() const {
        Tensor3 r(*this);
        for (Scalar& v : r.data_) v = -v;
        return r;
    }
    friend Tensor3 operator*(const Scalar& s, const Tensor3& t) {
        Tensor3 r(t);
        for (Scalar& v : r.data_) v *= s;
        return r;
    }

private:
    std::array<Index, 3> dims_;
    std::vector<Scalar> data_;
};

using Tensor3Q = Tensor3<Rational>;

} // namespace qfla
