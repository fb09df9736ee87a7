#pragma once

#include <gmpxx.h>

#include <functional>
#include <stdexcept>
#include <vector>

namespace linkchroma {

using Int = mpz_class;

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols) {}
    IntMatrix(int rows, int cols, std::vector<Int> entries);

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool operator==(const IntMatrix&) const = default;

    void swap_rows(int i, int j);
    void swap_cols(int i, int j);
    void negate_row(int i);
    void negate_col(int j);
    /// row[dst] += k * row[src]
    void add_row_multiple(int dst, int src, const Int& k);
    /// col[dst] += k * col[src]
    void add_col_multiple(int dst, int src, const Int& k);

    IntMatrix without_row_col(int drop_row, int drop_col) const;
    IntMatrix without_col(int drop_col) const;
    IntMatrix times(const IntMatrix& other) const;

    std::vector<Int> row_vector(int i) const;
    /// matrix * x
    std::vector<Int> apply(const std::vector<Int>& x) const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Int> e_;
};

/// Exact determinant, fraction-free (Bareiss). det of the 0x0 matrix is 1.
Int det(const IntMatrix& m);

/// Rank over the rationals.
int rank(const IntMatrix& m);

/// |det| of m with one row and one column removed.
Int first_minor_abs(const IntMatrix& m, int drop_row, int drop_col);

/// Diagonal form d_1 | d_2 | ... | d_r reached by row/column operations that
/// never scale by anything other than -1, together with the unimodular
/// transforms: left * original * right equals the diagonal-extended matrix.
struct SnfResult {
    std::vector<Int> diagonal;  // positive, divisibility chain, rank entries
    IntMatrix left;             // rows x rows, |det| = 1
    IntMatrix right;            // cols x cols, |det| = 1
    int original_rows = 0;
    int original_cols = 0;

    IntMatrix diagonal_matrix() const;
};

SnfResult smith_normal_form(const IntMatrix& m);

struct CapExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Solution space of m * x == 0 (mod n), parameterized through the Smith
/// normal form: coordinate i of the SNF basis ranges over multiples of
/// n/gcd(d_i, n); coordinates past the rank are free.
class ModKernel {
public:
    ModKernel(SnfResult snf, Int modulus);

    const Int& modulus() const { return n_; }
    int dimension() const { return snf_.original_cols; }
    /// Number of solutions: n^(free columns) * prod gcd(d_i, n).
    Int solution_count() const;

    /// Streams all solutions in lexicographic order of their SNF-coordinate
    /// representation (the all-zero solution first). Returns false when
    /// exhausted.
    class Iterator {
    public:
        explicit Iterator(const ModKernel& k);
        bool next(std::vector<Int>& out);

    private:
        const ModKernel& k_;
        std::vector<Int> counter_;
        bool done_ = false;
        bool started_ = false;
    };

    Iterator iterate() const { return Iterator(*this); }
    const SnfResult& snf() const { return snf_; }
    const std::vector<Int>& coordinate_radix() const { return radix_; }

private:
    friend class Iterator;
    SnfResult snf_;
    Int n_;
    std::vector<Int> radix_;  // per SNF coordinate: gcd(d_i,n) for i < rank, n after
    std::vector<Int> step_;   // n/gcd(d_i,n) for i < rank, 1 after
};

ModKernel solve_mod_n(const IntMatrix& m, const Int& n);

enum class TransformKind {
    AddColMultiple,  // col[i] += lambda * col[j]; x[j] -= lambda * x[i]
    SwapCols,
    NegateCol,
    AddRowMultiple,
    SwapRows,
    NegateRow,
    DropZeroCol,  // column i must be zero and the solution entry there 0
    DropRow,
};

struct Transform {
    TransformKind kind;
    int i = 0;
    int j = 0;
    Int lambda = 0;
};

struct CarriedSystem {
    IntMatrix matrix;
    std::vector<Int> solution;
};

/// Applies one solution-preserving elementary transformation: the returned
/// vector solves the returned system mod n. Column operations adjust the
/// solution contragradiently; row operations leave it untouched.
/// Throws std::invalid_argument when a precondition fails.
CarriedSystem carry_transform(const IntMatrix& m, const std::vector<Int>& solution, const Int& n,
                              const Transform& t);

}  // namespace linkchroma
