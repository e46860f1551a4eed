#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace fmmc {

using Vec = std::vector<double>;

// Status values double as CLI exit codes.
enum class Status : int {
    ok = 0,
    invalid = 1,
    parse = 2,
    infeasible = 3,
    consistency = 4,
    reproduce = 5,
    internal = 6,
};

class Error : public std::runtime_error {
public:
    Error(Status code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Status code() const noexcept { return code_; }

private:
    Status code_;
};

// Small dense square-or-rectangular matrix, row major.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, double fill = 0.0)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, fill) {}
    explicit Matrix(int n) : Matrix(n, n) {}

    static Matrix identity(int n) {
        Matrix m(n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const std::vector<double>& data() const { return a_; }

    Matrix transpose() const;
    Matrix operator*(const Matrix& b) const;
    Matrix operator+(const Matrix& b) const;
    Matrix operator-(const Matrix& b) const;
    Matrix scaled(double s) const;
    double frobenius() const;
    double max_abs() const;
    double max_asymmetry() const;
    // Drop the first k rows and columns.
    Matrix trailing(int k) const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> a_;
};

}  // namespace fmmc
