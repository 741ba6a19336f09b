#include "pervlab/matrix.hpp"

#include <sstream>

#include "pervlab/errors.hpp"

namespace pervlab {

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rat>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw DimensionError("ragged initializer for RatMatrix");
        for (const auto& e : row) entries_.push_back(e);
    }
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::zero(std::size_t rows, std::size_t cols) { return RatMatrix(rows, cols); }

const Rat& RatMatrix::operator()(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw DimensionError("matrix index out of range");
    return entries_[i * cols_ + j];
}

Rat& RatMatrix::operator()(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_) throw DimensionError("matrix index out of range");
    return entries_[i * cols_ + j];
}

bool RatMatrix::operator==(const RatMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
}

RatMatrix RatMatrix::operator+(const RatMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw DimensionError("matrix sum: shape mismatch");
    RatMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k] + other.entries_[k];
    return out;
}

RatMatrix RatMatrix::operator-(const RatMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw DimensionError("matrix difference: shape mismatch");
    RatMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k] - other.entries_[k];
    return out;
}

RatMatrix RatMatrix::operator*(const RatMatrix& other) const {
    if (cols_ != other.rows_) throw DimensionError("matrix product: inner dimension mismatch");
    RatMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& a = entries_[i * cols_ + k];
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) {
                const Rat& b = other.entries_[k * other.cols_ + j];
                if (b != 0) out.entries_[i * other.cols_ + j] += a * b;
            }
        }
    }
    return out;
}

RatMatrix RatMatrix::operator*(const Rat& scalar) const {
    RatMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k] * scalar;
    return out;
}

RatMatrix RatMatrix::operator-() const { return *this * Rat(-1); }

RatMatrix RatMatrix::transpose() const {
    RatMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

bool RatMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (e != 0) return false;
    return true;
}

RatMatrix RatMatrix::column(std::size_t j) const { return select_columns({j}); }

RatMatrix RatMatrix::select_columns(const std::vector<std::size_t>& js) const {
    RatMatrix out(rows_, js.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < js.size(); ++k) out(i, k) = (*this)(i, js[k]);
    return out;
}

RatMatrix RatMatrix::select_rows(const std::vector<std::size_t>& is) const {
    RatMatrix out(is.size(), cols_);
    for (std::size_t k = 0; k < is.size(); ++k)
        for (std::size_t j = 0; j < cols_; ++j) out(k, j) = (*this)(is[k], j);
    return out;
}

std::string RatMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) os << "; ";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << rat_to_string((*this)(i, j));
        }
    }
    os << "]";
    return os.str();
}

RatMatrix col_vector(std::initializer_list<Rat> entries) {
    return col_vector(std::vector<Rat>(entries));
}

RatMatrix col_vector(const std::vector<Rat>& entries) {
    RatMatrix out(entries.size(), 1);
    for (std::size_t i = 0; i < entries.size(); ++i) out(i, 0) = entries[i];
    return out;
}

RatMatrix hconcat(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != b.rows()) throw DimensionError("hconcat: row mismatch");
    RatMatrix out(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
    }
    return out;
}

RatMatrix vconcat(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.cols()) throw DimensionError("vconcat: column mismatch");
    RatMatrix out(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, j) = b(i, j);
    return out;
}

RatMatrix block_diag(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
    return out;
}

RatMatrix tensor_with_identity(const RatMatrix& a, std::size_t k) {
    RatMatrix out(a.rows() * k, a.cols() * k);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j) == 0) continue;
            for (std::size_t s = 0; s < k; ++s) out(i * k + s, j * k + s) = a(i, j);
        }
    return out;
}

Rref rref(const RatMatrix& m) {
    Rref out{m, {}};
    RatMatrix& r = out.mat;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < r.cols() && pivot_row < r.rows(); ++col) {
        // first nonzero entry at or below pivot_row
        std::size_t sel = pivot_row;
        while (sel < r.rows() && r(sel, col) == 0) ++sel;
        if (sel == r.rows()) continue;
        if (sel != pivot_row)
            for (std::size_t j = col; j < r.cols(); ++j) std::swap(r(pivot_row, j), r(sel, j));
        Rat inv_pivot = Rat(1) / r(pivot_row, col);
        for (std::size_t j = col; j < r.cols(); ++j) r(pivot_row, j) *= inv_pivot;
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == pivot_row || r(i, col) == 0) continue;
            Rat factor = r(i, col);
            for (std::size_t j = col; j < r.cols(); ++j) r(i, j) -= factor * r(pivot_row, j);
        }
        out.pivot_cols.push_back(col);
        ++pivot_row;
    }
    return out;
}

std::size_t rank(const RatMatrix& m) { return rref(m).pivot_cols.size(); }

Subspace kernel_basis(const RatMatrix& m) {
    Rref r = rref(m);
    std::vector<std::size_t> free_cols;
    {
        std::size_t p = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (p < r.pivot_cols.size() && r.pivot_cols[p] == j)
                ++p;
            else
                free_cols.push_back(j);
        }
    }
    RatMatrix basis(m.cols(), free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        basis(free_cols[k], k) = 1;
        for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
            basis(r.pivot_cols[i], k) = -r.mat(i, free_cols[k]);
    }
    return Subspace{m.cols(), basis};
}

Subspace image_basis(const RatMatrix& m) {
    Rref r = rref(m);
    return Subspace{m.rows(), m.select_columns(r.pivot_cols)};
}

Rat det(const RatMatrix& m) {
    if (!m.is_square()) throw DimensionError("det: non-square matrix");
    RatMatrix a = m;
    Rat d = 1;
    for (std::size_t col = 0; col < a.cols(); ++col) {
        std::size_t sel = col;
        while (sel < a.rows() && a(sel, col) == 0) ++sel;
        if (sel == a.rows()) return Rat(0);
        if (sel != col) {
            for (std::size_t j = col; j < a.cols(); ++j) std::swap(a(col, j), a(sel, j));
            d = -d;
        }
        d *= a(col, col);
        Rat inv_pivot = Rat(1) / a(col, col);
        for (std::size_t i = col + 1; i < a.rows(); ++i) {
            if (a(i, col) == 0) continue;
            Rat factor = a(i, col) * inv_pivot;
            for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= factor * a(col, j);
        }
    }
    return d;
}

bool is_invertible(const RatMatrix& m) { return m.is_square() && rank(m) == m.rows(); }

RatMatrix inverse(const RatMatrix& m) {
    if (!m.is_square()) throw DimensionError("inverse: non-square matrix");
    std::size_t n = m.rows();
    Rref r = rref(hconcat(m, RatMatrix::identity(n)));
    if (r.pivot_cols.size() != n || (n > 0 && r.pivot_cols.back() >= n))
        throw SingularMatrixError("inverse: singular matrix");
    std::vector<std::size_t> right(n);
    for (std::size_t j = 0; j < n; ++j) right[j] = n + j;
    return r.mat.select_columns(right);
}

std::optional<RatMatrix> solve(const RatMatrix& a, const RatMatrix& rhs) {
    if (a.rows() != rhs.rows()) throw DimensionError("solve: row mismatch");
    Rref r = rref(hconcat(a, rhs));
    std::vector<std::size_t> a_pivots;
    for (std::size_t p : r.pivot_cols) {
        if (p < a.cols())
            a_pivots.push_back(p);
        else
            return std::nullopt;  // a pivot inside the rhs block: inconsistent system
    }
    RatMatrix x(a.cols(), rhs.cols());
    for (std::size_t i = 0; i < a_pivots.size(); ++i)
        for (std::size_t j = 0; j < rhs.cols(); ++j) x(a_pivots[i], j) = r.mat(i, a.cols() + j);
    return x;
}

std::optional<std::size_t> unipotency_index(const RatMatrix& t) {
    if (!t.is_square()) throw DimensionError("unipotency_index: non-square matrix");
    std::size_t n = t.rows();
    if (n == 0) return 1;
    RatMatrix nilpart = t - RatMatrix::identity(n);
    RatMatrix power = nilpart;
    for (std::size_t k = 1; k <= n; ++k) {
        if (power.is_zero()) return k;
        power = power * nilpart;
    }
    return std::nullopt;
}

CokernelProjection cokernel_projection(const RatMatrix& m) {
    // Reduced column echelon basis of im(M): transpose of rref(M^T). Its
    // pivot rows carry an identity block, so projecting away the image along
    // the non-pivot coordinates is a matter of reading off coefficients.
    Rref rt = rref(m.transpose());
    const std::vector<std::size_t>& pivot_rows = rt.pivot_cols;  // rows of ambient space
    std::size_t k = pivot_rows.size();
    std::size_t n = m.rows();

    std::vector<std::size_t> complement;
    {
        std::size_t p = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (p < k && pivot_rows[p] == i)
                ++p;
            else
                complement.push_back(i);
        }
    }

    RatMatrix projection(complement.size(), n);
    for (std::size_t c = 0; c < complement.size(); ++c) {
        std::size_t i = complement[c];
        projection(c, i) = 1;
        for (std::size_t j = 0; j < k; ++j) projection(c, pivot_rows[j]) = -rt.mat(j, i);
    }
    RatMatrix section(n, complement.size());
    for (std::size_t c = 0; c < complement.size(); ++c) section(complement[c], c) = 1;

    CokernelProjection out{projection, section, complement};
    if (!(projection * m).is_zero())
        throw Error("cokernel_projection: projection does not annihilate the image");
    return out;
}

RatMatrix induced_on_cokernels(const CokernelProjection& src, const CokernelProjection& tgt,
                               const RatMatrix& g) {
    RatMatrix candidate = tgt.projection * g * src.section;
    if (candidate * src.projection != tgt.projection * g)
        throw Error("induced_on_cokernels: map does not preserve the images");
    return candidate;
}

bool span_contains(const RatMatrix& big, const RatMatrix& small) {
    if (big.rows() != small.rows()) throw DimensionError("span_contains: ambient mismatch");
    return rank(hconcat(big, small)) == rank(big);
}

bool spans_equal(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != b.rows()) throw DimensionError("spans_equal: ambient mismatch");
    std::size_t ra = rank(a), rb = rank(b);
    return ra == rb && rank(hconcat(a, b)) == ra;
}

}  // namespace pervlab
