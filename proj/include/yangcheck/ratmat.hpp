#pragma once

#include <optional>
#include <vector>

#include "yangcheck/rational.hpp"

namespace yangcheck {

// Dense matrix over Q with exact row-reduction. Pivot choice is the first
// nonzero entry in each column, so all derived bases are deterministic.
class RatMat {
  public:
    RatMat() : rows_(0), cols_(0) {}
    RatMat(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static RatMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int i, int j) { return data_[i * cols_ + j]; }
    const Rational& at(int i, int j) const { return data_[i * cols_ + j]; }

    bool is_zero() const;
    bool operator==(const RatMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }
    bool operator!=(const RatMat& o) const { return !(*this == o); }

    RatMat operator+(const RatMat& o) const;
    RatMat operator-(const RatMat& o) const;
    RatMat operator*(const RatMat& o) const;
    RatMat scaled(const Rational& c) const;
    RatMat transpose() const;

    // Reduced row echelon form in place; returns pivot column indices.
    std::vector<int> rref();
    int rank() const;
    std::vector<std::vector<Rational>> kernel_basis() const;
    std::optional<std::vector<Rational>> solve(const std::vector<Rational>& rhs) const;
    std::optional<RatMat> inverse() const;
    Rational det() const;  // square only

  private:
    int rows_, cols_;
    std::vector<Rational> data_;
};

}  // namespace yangcheck
