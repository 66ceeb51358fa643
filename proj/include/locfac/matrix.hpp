#pragma once

#include <string>
#include <vector>

#include "locfac/intutil.hpp"
#include "locfac/poly.hpp"

namespace locfac {

// Dense integer matrix, row-major.  Plain value type: copies are deep
// and every operation returns a fresh matrix.
class IntegerMatrix {
public:
    IntegerMatrix() : rows_(0), cols_(0) {}

    IntegerMatrix(long rows, long cols);

    static IntegerMatrix identity(long n);

    static IntegerMatrix from_rows(const std::vector<std::vector<Int>>& rows);

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Int& at(long i, long j) { return e_[static_cast<std::size_t>(i * cols_ + j)]; }
    const Int& at(long i, long j) const {
        return e_[static_cast<std::size_t>(i * cols_ + j)];
    }

    IntegerMatrix transpose() const;
    Int trace() const;

    IntegerMatrix operator+(const IntegerMatrix& o) const;
    IntegerMatrix operator-(const IntegerMatrix& o) const;
    IntegerMatrix operator*(const IntegerMatrix& o) const;
    IntegerMatrix operator*(const Int& k) const;
    bool operator==(const IntegerMatrix& o) const;
    bool operator!=(const IntegerMatrix& o) const { return !(*this == o); }

    bool all_nonnegative() const;

    std::string str() const;

private:
    long rows_, cols_;
    std::vector<Int> e_;
};

// Characteristic polynomial det(sI - A) by the Faddeev-LeVerrier
// recurrence; exact over Z, monic of degree n.
IntPolynomial charpoly(const IntegerMatrix& a);

// Constant-term route: det(A) = (-1)^n * charpoly(A)(0).
Int det(const IntegerMatrix& a);

} // namespace locfac
