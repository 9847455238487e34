#pragma once

// Exact dense linear algebra over a Scalar field: Gaussian elimination with
// deterministic pivoting (first nonzero column, then row order).

#include "ginv/field.hpp"
#include "ginv/upoly.hpp"

namespace ginv {

class Mat {
public:
    Mat(FieldPtr f, unsigned rows, unsigned cols);
    static Mat identity(const FieldPtr& f, unsigned n);
    /// row-major entries
    static Mat from_entries(const FieldPtr& f, unsigned rows, unsigned cols, std::vector<Scalar> e);

    const FieldPtr& field() const { return field_; }
    unsigned rows() const { return rows_; }
    unsigned cols() const { return cols_; }
    const Scalar& at(unsigned i, unsigned j) const { return e_[i * cols_ + j]; }
    Scalar& at(unsigned i, unsigned j) { return e_[i * cols_ + j]; }

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const Mat& o) const;
    Mat operator*(const Scalar& s) const;
    bool operator==(const Mat& o) const;
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat transposed() const;
    Scalar det() const;
    Mat inverse() const;  // errors on singular
    unsigned rank() const;
    /// basis of the right kernel {v : A v = 0}, deterministic
    std::vector<std::vector<Scalar>> kernel() const;
    /// map entries through a field embedding
    Mat mapped(const FieldEmbedding& e) const;
    /// characteristic polynomial det(t I - A), monic
    UPoly char_poly() const;
    /// minimal polynomial, monic
    UPoly min_poly() const;

    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;
    std::string str() const;
    std::string key() const;

private:
    FieldPtr field_;
    unsigned rows_ = 0, cols_ = 0;
    std::vector<Scalar> e_;
};

/// Reduced row echelon form in place; returns pivot column indices.
std::vector<unsigned> rref(Mat& m);

/// Solve A x = b; returns one solution or nullopt if inconsistent.
std::optional<std::vector<Scalar>> solve(const Mat& a, const std::vector<Scalar>& b);

}  // namespace ginv
