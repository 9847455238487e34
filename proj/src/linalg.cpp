#include "ginv/linalg.hpp"

#include <functional>
#include <map>
#include <sstream>

namespace ginv {

Mat::Mat(FieldPtr f, unsigned rows, unsigned cols)
    : field_(std::move(f)), rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, Scalar::zero(field_)) {}

Mat Mat::identity(const FieldPtr& f, unsigned n) {
    Mat m(f, n, n);
    for (unsigned i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Mat Mat::from_entries(const FieldPtr& f, unsigned rows, unsigned cols, std::vector<Scalar> e) {
    if (e.size() != static_cast<size_t>(rows) * cols) throw Error("matrix entry count mismatch");
    Mat m(f, rows, cols);
    m.e_ = std::move(e);
    for (auto& x : m.e_)
        if (!x.field()->same(*f)) throw Error("matrix entry field mismatch");
    return m;
}

Mat Mat::operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch");
    Mat r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = r.e_[i] + o.e_[i];
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch");
    Mat r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = r.e_[i] - o.e_[i];
    return r;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw Error("matrix shape mismatch in product");
    Mat r(field_, rows_, o.cols_);
    for (unsigned i = 0; i < rows_; ++i)
        for (unsigned k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (unsigned j = 0; j < o.cols_; ++j) r.at(i, j) = r.at(i, j) + a * o.at(k, j);
        }
    return r;
}

Mat Mat::operator*(const Scalar& s) const {
    Mat r = *this;
    for (auto& x : r.e_) x = x * s;
    return r;
}

bool Mat::operator==(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < e_.size(); ++i)
        if (e_[i] != o.e_[i]) return false;
    return true;
}

Mat Mat::transposed() const {
    Mat r(field_, cols_, rows_);
    for (unsigned i = 0; i < rows_; ++i)
        for (unsigned j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

std::vector<unsigned> rref(Mat& m) {
    std::vector<unsigned> pivots;
    unsigned r = 0;
    for (unsigned c = 0; c < m.cols() && r < m.rows(); ++c) {
        unsigned pr = r;
        while (pr < m.rows() && m.at(pr, c).is_zero()) ++pr;
        if (pr == m.rows()) continue;
        if (pr != r)
            for (unsigned j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(r, j));
        Scalar inv = m.at(r, c).inverse();
        for (unsigned j = c; j < m.cols(); ++j) m.at(r, j) = m.at(r, j) * inv;
        for (unsigned i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            Scalar f = m.at(i, c);
            for (unsigned j = c; j < m.cols(); ++j) m.at(i, j) = m.at(i, j) - f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

Scalar Mat::det() const {
    if (rows_ != cols_) throw Error("determinant of non-square matrix");
    Mat m = *this;
    Scalar d = Scalar::one(field_);
    for (unsigned c = 0; c < cols_; ++c) {
        unsigned pr = c;
        while (pr < rows_ && m.at(pr, c).is_zero()) ++pr;
        if (pr == rows_) return Scalar::zero(field_);
        if (pr != c) {
            for (unsigned j = 0; j < cols_; ++j) std::swap(m.at(pr, j), m.at(c, j));
            d = -d;
        }
        d = d * m.at(c, c);
        Scalar inv = m.at(c, c).inverse();
        for (unsigned i = c + 1; i < rows_; ++i) {
            if (m.at(i, c).is_zero()) continue;
            Scalar f = m.at(i, c) * inv;
            for (unsigned j = c; j < cols_; ++j) m.at(i, j) = m.at(i, j) - f * m.at(c, j);
        }
    }
    return d;
}

Mat Mat::inverse() const {
    if (rows_ != cols_) throw Error("inverse of non-square matrix");
    Mat aug(field_, rows_, 2 * cols_);
    for (unsigned i = 0; i < rows_; ++i) {
        for (unsigned j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = Scalar::one(field_);
    }
    auto piv = rref(aug);
    if (piv.size() != rows_ || piv.back() >= cols_) throw Error("matrix is singular");
    Mat r(field_, rows_, cols_);
    for (unsigned i = 0; i < rows_; ++i)
        for (unsigned j = 0; j < cols_; ++j) r.at(i, j) = aug.at(i, cols_ + j);
    return r;
}

unsigned Mat::rank() const {
    Mat m = *this;
    return static_cast<unsigned>(rref(m).size());
}

std::vector<std::vector<Scalar>> Mat::kernel() const {
    Mat m = *this;
    auto piv = rref(m);
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (unsigned fc = 0; fc < cols_; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Scalar> v(cols_, Scalar::zero(field_));
        v[fc] = Scalar::one(field_);
        for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m.at(static_cast<unsigned>(r), fc);
        basis.push_back(std::move(v));
    }
    return basis;
}

Mat Mat::mapped(const FieldEmbedding& emb) const {
    Mat r(emb.to(), rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = emb(e_[i]);
    return r;
}

UPoly Mat::char_poly() const {
    if (rows_ != cols_) throw Error("char poly of non-square matrix");
    const unsigned n = rows_;
    // entries of tI - A as degree-<=1 polynomials; expand recursively along the
    // first remaining column with memoization over row subsets
    auto entry = [&](unsigned i, unsigned j) {
        UPoly p(field_);
        Scalar a = -at(i, j);
        p = UPoly::constant(a);
        if (i == j) p = p + UPoly::var(field_);
        return p;
    };
    std::map<unsigned long, UPoly> memo;  // bitmask of used rows -> minor det
    // det over rows S (|S| = k) and the first k columns
    std::function<UPoly(unsigned long, unsigned)> minor = [&](unsigned long mask, unsigned col) -> UPoly {
        if (col == n) return UPoly::constant(Scalar::one(field_));
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        UPoly acc(field_);
        int sign = 1;
        for (unsigned i = 0; i < n; ++i) {
            if (mask & (1UL << i)) continue;
            UPoly e = entry(i, col);
            if (!e.is_zero()) {
                UPoly sub = minor(mask | (1UL << i), col + 1);
                UPoly term = e * sub;
                acc = (sign > 0) ? acc + term : acc - term;
            }
            sign = -sign;
        }
        memo.emplace(mask, acc);
        return acc;
    };
    return minor(0, 0);
}

UPoly Mat::min_poly() const {
    if (rows_ != cols_) throw Error("min poly of non-square matrix");
    const unsigned n = rows_;
    // find least k with I, A, ..., A^k linearly dependent
    std::vector<Mat> powers{identity(field_, n)};
    for (unsigned k = 1; k <= n; ++k) powers.push_back(powers.back() * *this);
    for (unsigned k = 1; k <= n; ++k) {
        // solve sum_{i<k} c_i A^i = -A^k
        Mat sys(field_, n * n, k);
        std::vector<Scalar> rhs;
        rhs.reserve(static_cast<size_t>(n) * n);
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) {
                for (unsigned c = 0; c < k; ++c) sys.at(i * n + j, c) = powers[c].at(i, j);
                rhs.push_back(-powers[k].at(i, j));
            }
        auto sol = solve(sys, rhs);
        if (sol) {
            std::vector<Scalar> coeffs = *sol;
            coeffs.push_back(Scalar::one(field_));
            return UPoly(field_, coeffs);
        }
    }
    throw Error("min poly not found (internal)");
}

std::vector<Scalar> Mat::apply(const std::vector<Scalar>& v) const {
    if (v.size() != cols_) throw Error("vector length mismatch");
    std::vector<Scalar> r(rows_, Scalar::zero(field_));
    for (unsigned i = 0; i < rows_; ++i)
        for (unsigned j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) r[i] = r[i] + at(i, j) * v[j];
    return r;
}

std::string Mat::str() const {
    std::ostringstream os;
    os << "[";
    for (unsigned i = 0; i < rows_; ++i) {
        os << "[";
        for (unsigned j = 0; j < cols_; ++j) {
            os << at(i, j).str();
            if (j + 1 < cols_) os << ",";
        }
        os << "]";
        if (i + 1 < rows_) os << ",";
    }
    os << "]";
    return os.str();
}

std::string Mat::key() const {
    std::ostringstream os;
    for (auto& x : e_) os << x.key() << ";";
    return os.str();
}

std::optional<std::vector<Scalar>> solve(const Mat& a, const std::vector<Scalar>& b) {
    if (b.size() != a.rows()) throw Error("solve: rhs length mismatch");
    Mat aug(a.field(), a.rows(), a.cols() + 1);
    for (unsigned i = 0; i < a.rows(); ++i) {
        for (unsigned j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    auto piv = rref(aug);
    if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;  // inconsistent
    std::vector<Scalar> x(a.cols(), Scalar::zero(a.field()));
    for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug.at(static_cast<unsigned>(r), a.cols());
    return x;
}

}  // namespace ginv
