#include "fmmc/types.hpp"

#include <algorithm>
#include <cmath>

namespace fmmc {

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::operator*(const Matrix& b) const {
    if (cols_ != b.rows_) throw Error(Status::invalid, "matrix product: dimension mismatch");
    Matrix c(rows_, b.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const double aik = (*this)(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

Matrix Matrix::operator+(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw Error(Status::invalid, "matrix sum: dimension mismatch");
    Matrix c = *this;
    for (std::size_t k = 0; k < a_.size(); ++k) c.a_[k] += b.a_[k];
    return c;
}

Matrix Matrix::operator-(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw Error(Status::invalid, "matrix difference: dimension mismatch");
    Matrix c = *this;
    for (std::size_t k = 0; k < a_.size(); ++k) c.a_[k] -= b.a_[k];
    return c;
}

Matrix Matrix::scaled(double s) const {
    Matrix c = *this;
    for (double& x : c.a_) x *= s;
    return c;
}

double Matrix::frobenius() const {
    double s = 0.0;
    for (double x : a_) s += x * x;
    return std::sqrt(s);
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (double x : a_) m = std::max(m, std::abs(x));
    return m;
}

double Matrix::max_asymmetry() const {
    if (rows_ != cols_) return INFINITY;
    double m = 0.0;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j) m = std::max(m, std::abs((*this)(i, j) - (*this)(j, i)));
    return m;
}

Matrix Matrix::trailing(int k) const {
    Matrix t(rows_ - k, cols_ - k);
    for (int i = k; i < rows_; ++i)
        for (int j = k; j < cols_; ++j) t(i - k, j - k) = (*this)(i, j);
    return t;
}

}  // namespace fmmc
