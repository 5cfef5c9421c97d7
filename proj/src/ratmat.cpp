#include "yangcheck/ratmat.hpp"

#include <stdexcept>

namespace yangcheck {

RatMat RatMat::identity(int n) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool RatMat::is_zero() const {
    for (const auto& x : data_)
        if (x != 0) return false;
    return true;
}

RatMat RatMat::operator+(const RatMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("RatMat: shape mismatch");
    RatMat r = *this;
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
    return r;
}

RatMat RatMat::operator-(const RatMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("RatMat: shape mismatch");
    RatMat r = *this;
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
    return r;
}

RatMat RatMat::operator*(const RatMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("RatMat: shape mismatch");
    RatMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Rational& b = o.at(k, j);
                if (b != 0) r.at(i, j) += a * b;
            }
        }
    return r;
}

RatMat RatMat::scaled(const Rational& c) const {
    RatMat r = *this;
    for (auto& x : r.data_) x *= c;
    return r;
}

RatMat RatMat::transpose() const {
    RatMat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

std::vector<int> RatMat::rref() {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
        int p = -1;
        for (int i = row; i < rows_; ++i)
            if (at(i, col) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < cols_; ++j) std::swap(at(p, j), at(row, j));
        Rational inv = Rational(1) / at(row, col);
        for (int j = col; j < cols_; ++j) at(row, j) *= inv;
        for (int i = 0; i < rows_; ++i) {
            if (i == row || at(i, col) == 0) continue;
            Rational f = at(i, col);
            for (int j = col; j < cols_; ++j) at(i, j) -= f * at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int RatMat::rank() const {
    RatMat c = *this;
    return static_cast<int>(c.rref().size());
}

std::vector<std::vector<Rational>> RatMat::kernel_basis() const {
    RatMat c = *this;
    std::vector<int> pivots = c.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols_);
        v[free] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -c.at(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rational>> RatMat::solve(const std::vector<Rational>& rhs) const {
    if (static_cast<int>(rhs.size()) != rows_) throw std::invalid_argument("RatMat::solve: shape mismatch");
    RatMat aug(rows_, cols_ + 1);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = rhs[i];
    }
    std::vector<int> pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;  // inconsistent
    std::vector<Rational> x(cols_);
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(static_cast<int>(r), cols_);
    return x;
}

std::optional<RatMat> RatMat::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("RatMat::inverse: not square");
    RatMat aug(rows_, 2 * cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = 1;
    }
    std::vector<int> pivots = aug.rref();
    if (static_cast<int>(pivots.size()) != rows_ || pivots.back() != rows_ - 1) return std::nullopt;
    RatMat inv(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
    return inv;
}

Rational RatMat::det() const {
    if (rows_ != cols_) throw std::invalid_argument("RatMat::det: not square");
    RatMat c = *this;
    Rational d(1);
    for (int col = 0; col < cols_; ++col) {
        int p = -1;
        for (int i = col; i < rows_; ++i)
            if (c.at(i, col) != 0) {
                p = i;
                break;
            }
        if (p < 0) return Rational(0);
        if (p != col) {
            for (int j = 0; j < cols_; ++j) std::swap(c.at(p, j), c.at(col, j));
            d = -d;
        }
        d *= c.at(col, col);
        Rational inv = Rational(1) / c.at(col, col);
        for (int i = col + 1; i < rows_; ++i) {
            if (c.at(i, col) == 0) continue;
            Rational f = c.at(i, col) * inv;
            for (int j = col; j < cols_; ++j) c.at(i, j) -= f * c.at(col, j);
        }
    }
    return d;
}

}  // namespace yangcheck
