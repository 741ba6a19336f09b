#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "pervlab/rational.hpp"

namespace pervlab {

// Dense matrix of exact rationals, row-major. Used as a value type: every
// operation below returns a new matrix.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    RatMatrix(std::initializer_list<std::initializer_list<Rat>> rows);

    static RatMatrix identity(std::size_t n);
    static RatMatrix zero(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_empty() const { return rows_ == 0 || cols_ == 0; }

    const Rat& operator()(std::size_t i, std::size_t j) const;
    Rat& operator()(std::size_t i, std::size_t j);

    bool operator==(const RatMatrix& other) const;
    bool operator!=(const RatMatrix& other) const { return !(*this == other); }

    RatMatrix operator+(const RatMatrix& other) const;
    RatMatrix operator-(const RatMatrix& other) const;
    RatMatrix operator*(const RatMatrix& other) const;
    RatMatrix operator*(const Rat& scalar) const;
    RatMatrix operator-() const;

    RatMatrix transpose() const;
    bool is_zero() const;

    RatMatrix column(std::size_t j) const;
    RatMatrix select_columns(const std::vector<std::size_t>& js) const;
    RatMatrix select_rows(const std::vector<std::size_t>& is) const;

    std::string to_string() const;

private:
    std::size_t rows_, cols_;
    std::vector<Rat> entries_;
};

// Column vector from a list of entries.
RatMatrix col_vector(std::initializer_list<Rat> entries);
RatMatrix col_vector(const std::vector<Rat>& entries);

RatMatrix hconcat(const RatMatrix& a, const RatMatrix& b);
RatMatrix vconcat(const RatMatrix& a, const RatMatrix& b);
RatMatrix block_diag(const RatMatrix& a, const RatMatrix& b);

// Kronecker product a ⊗ I_k; turns a map of generic ranks into the induced
// map on rank·link-dimension spaces.
RatMatrix tensor_with_identity(const RatMatrix& a, std::size_t k);

// A subspace of Q^ambient_dim given by a matrix whose columns form a basis.
struct Subspace {
    std::size_t ambient_dim = 0;
    RatMatrix basis;  // ambient_dim x dim, linearly independent columns

    std::size_t dim() const { return basis.cols(); }
};

// Reduced row echelon form with leftmost-pivot positions.
struct Rref {
    RatMatrix mat;
    std::vector<std::size_t> pivot_cols;
};

Rref rref(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

// Basis of { x : Mx = 0 }; dim = cols - rank.
Subspace kernel_basis(const RatMatrix& m);

// Basis of the column span, given by the pivot columns of M itself.
Subspace image_basis(const RatMatrix& m);

Rat det(const RatMatrix& m);
bool is_invertible(const RatMatrix& m);

// Throws SingularMatrixError when no inverse exists.
RatMatrix inverse(const RatMatrix& m);

// One particular solution of A X = RHS (columnwise), or nullopt when some
// column is outside the image. Free coordinates are set to zero.
std::optional<RatMatrix> solve(const RatMatrix& a, const RatMatrix& rhs);

// Least k >= 1 with (T - I)^k = 0, checked up to k = dim; nullopt when T is
// not unipotent. Throws DimensionError on non-square input.
std::optional<std::size_t> unipotency_index(const RatMatrix& t);

// Cokernel of M presented as a projection of the ambient space onto the
// coordinate complement of im(M): the complement is spanned by the non-pivot
// rows of the reduced column echelon form of the image (leftmost pivots), so
// the representative is deterministic.
//   projection : (rows - rank) x rows, projection * M = 0, full row rank
//   section    : rows x (rows - rank), projection * section = id
struct CokernelProjection {
    RatMatrix projection;
    RatMatrix section;
    std::vector<std::size_t> complement_rows;

    std::size_t dim() const { return projection.rows(); }
};

CokernelProjection cokernel_projection(const RatMatrix& m);

// Map induced on cokernel representatives by g (which must carry im(src's M)
// into im(tgt's M); the characterizing identity is asserted exactly).
RatMatrix induced_on_cokernels(const CokernelProjection& src,
                               const CokernelProjection& tgt,
                               const RatMatrix& g);

// Column-span comparisons.
bool span_contains(const RatMatrix& big, const RatMatrix& small);
bool spans_equal(const RatMatrix& a, const RatMatrix& b);

}  // namespace pervlab
