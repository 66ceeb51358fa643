#include "locfac/matrix.hpp"

#include <sstream>

#include "locfac/errors.hpp"

namespace locfac {

IntegerMatrix::IntegerMatrix(long rows, long cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0)
        throw DimensionMismatchError("negative matrix dimension");
    e_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
              Int(0));
}

IntegerMatrix IntegerMatrix::identity(long n) {
    IntegerMatrix m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::from_rows(
    const std::vector<std::vector<Int>>& rows) {
    const long r = static_cast<long>(rows.size());
    const long c = r == 0 ? 0 : static_cast<long>(rows[0].size());
    IntegerMatrix m(r, c);
    for (long i = 0; i < r; ++i) {
        if (static_cast<long>(rows[static_cast<std::size_t>(i)].size()) != c)
            throw DimensionMismatchError("ragged rows in matrix literal");
        for (long j = 0; j < c; ++j)
            m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return m;
}

IntegerMatrix IntegerMatrix::transpose() const {
    IntegerMatrix t(cols_, rows_);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Int IntegerMatrix::trace() const {
    if (!is_square())
        throw NonSquareError("trace of a non-square matrix");
    Int s{0};
    for (long i = 0; i < rows_; ++i) s += at(i, i);
    return s;
}

IntegerMatrix IntegerMatrix::operator+(const IntegerMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionMismatchError("matrix addition shape mismatch");
    IntegerMatrix r(rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
    return r;
}

IntegerMatrix IntegerMatrix::operator-(const IntegerMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionMismatchError("matrix subtraction shape mismatch");
    IntegerMatrix r(rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
    return r;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& o) const {
    if (cols_ != o.rows_)
        throw DimensionMismatchError("matrix product shape mismatch");
    IntegerMatrix r(rows_, o.cols_);
    for (long i = 0; i < rows_; ++i)
        for (long k = 0; k < cols_; ++k) {
            const Int& aik = at(i, k);
            if (aik == 0) continue;
            for (long j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

IntegerMatrix IntegerMatrix::operator*(const Int& k) const {
    IntegerMatrix r(rows_, cols_);
    for (std::size_t t = 0; t < e_.size(); ++t) r.e_[t] = e_[t] * k;
    return r;
}

bool IntegerMatrix::operator==(const IntegerMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

bool IntegerMatrix::all_nonnegative() const {
    for (const auto& v : e_)
        if (sgn(v) < 0) return false;
    return true;
}

std::string IntegerMatrix::str() const {
    std::ostringstream out;
    for (long i = 0; i < rows_; ++i) {
        out << "[";
        for (long j = 0; j < cols_; ++j) {
            if (j) out << " ";
            out << at(i, j).get_str();
        }
        out << "]";
        if (i + 1 < rows_) out << "\n";
    }
    return out.str();
}

IntPolynomial charpoly(const IntegerMatrix& a) {
    if (!a.is_square())
        throw NonSquareError("characteristic polynomial of a non-square matrix");
    const long n = a.rows();
    // p(s) = s^n + c[n-1] s^(n-1) + ... + c[0]; the auxiliary matrix M
    // starts at the identity and every division by the step index is
    // exact over Z.
    std::vector<Int> c(static_cast<std::size_t>(n) + 1, Int(0));
    c[static_cast<std::size_t>(n)] = 1;
    IntegerMatrix m = IntegerMatrix::identity(n);
    for (long k = 1; k <= n; ++k) {
        if (k > 1) {
            m = a * m;
            for (long i = 0; i < n; ++i)
                m.at(i, i) += c[static_cast<std::size_t>(n - k + 1)];
        }
        Int t = (a * m).trace();
        c[static_cast<std::size_t>(n - k)] = -divexact_int(t, Int(k));
    }
    return IntPolynomial{std::move(c)};
}

Int det(const IntegerMatrix& a) {
    if (!a.is_square()) throw NonSquareError("determinant of a non-square matrix");
    Int d = charpoly(a).coeff(0);
    return a.rows() % 2 == 0 ? d : -d;
}

} // namespace locfac
