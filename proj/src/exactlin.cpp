#include "linkchroma/exactlin.hpp"

#include <algorithm>
#include <utility>

namespace linkchroma {

IntMatrix::IntMatrix(int rows, int cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != static_cast<std::size_t>(rows) * cols)
        throw std::invalid_argument("entry count does not match dimensions");
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

void IntMatrix::swap_rows(int i, int j) {
    for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(int i, int j) {
    for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::negate_row(int i) {
    for (int c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMatrix::negate_col(int j) {
    for (int r = 0; r < rows_; ++r) at(r, j) = -at(r, j);
}

void IntMatrix::add_row_multiple(int dst, int src, const Int& k) {
    for (int c = 0; c < cols_; ++c) at(dst, c) += k * at(src, c);
}

void IntMatrix::add_col_multiple(int dst, int src, const Int& k) {
    for (int r = 0; r < rows_; ++r) at(r, dst) += k * at(r, src);
}

IntMatrix IntMatrix::without_row_col(int drop_row, int drop_col) const {
    if (drop_row < 0 || drop_row >= rows_ || drop_col < 0 || drop_col >= cols_)
        throw std::out_of_range("row/column index out of bounds");
    IntMatrix m(rows_ - 1, cols_ - 1);
    for (int i = 0, mi = 0; i < rows_; ++i) {
        if (i == drop_row) continue;
        for (int j = 0, mj = 0; j < cols_; ++j) {
            if (j == drop_col) continue;
            m.at(mi, mj++) = at(i, j);
        }
        ++mi;
    }
    return m;
}

IntMatrix IntMatrix::without_col(int drop_col) const {
    if (drop_col < 0 || drop_col >= cols_) throw std::out_of_range("column index out of bounds");
    IntMatrix m(rows_, cols_ - 1);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0, mj = 0; j < cols_; ++j)
            if (j != drop_col) m.at(i, mj++) = at(i, j);
    return m;
}

IntMatrix IntMatrix::times(const IntMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("dimension mismatch in multiply");
    IntMatrix m(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < other.cols_; ++j) m.at(i, j) += a * other.at(k, j);
        }
    return m;
}

std::vector<Int> IntMatrix::row_vector(int i) const {
    std::vector<Int> r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& x) const {
    if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("vector length mismatch");
    std::vector<Int> y(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) y[i] += at(i, j) * x[j];
    return y;
}

Int det(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det of a non-square matrix");
    const int n = m.rows();
    if (n == 0) return 1;  // empty product convention
    IntMatrix a = m;
    int sign = 1;
    Int prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return 0;
            a.swap_rows(k, piv);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                mpz_divexact(a.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

int rank(const IntMatrix& m) {
    IntMatrix a = m;
    const int rows = a.rows(), cols = a.cols();
    int r = 0;
    Int prev = 1;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (a.at(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r) a.swap_rows(r, piv);
        for (int i = r + 1; i < rows; ++i)
            for (int j = c + 1; j < cols; ++j) {
                Int t = a.at(i, j) * a.at(r, c) - a.at(i, c) * a.at(r, j);
                mpz_divexact(a.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        for (int i = r + 1; i < rows; ++i) a.at(i, c) = 0;
        prev = a.at(r, c);
        ++r;
    }
    return r;
}

Int first_minor_abs(const IntMatrix& m, int drop_row, int drop_col) {
    if (m.rows() != m.cols()) throw std::invalid_argument("first minor of a non-square matrix");
    if (m.rows() < 1) throw std::invalid_argument("first minor needs at least a 1x1 matrix");
    return abs(det(m.without_row_col(drop_row, drop_col)));
}

IntMatrix SnfResult::diagonal_matrix() const {
    IntMatrix d(original_rows, original_cols);
    for (std::size_t i = 0; i < diagonal.size(); ++i) d.at(static_cast<int>(i), static_cast<int>(i)) = diagonal[i];
    return d;
}

SnfResult smith_normal_form(const IntMatrix& m) {
    const int rows = m.rows(), cols = m.cols();
    IntMatrix a = m;
    IntMatrix left = IntMatrix::identity(rows);
    IntMatrix right = IntMatrix::identity(cols);

    // Only the Lemma-style moves: add an integer multiple of a row/column,
    // swap, negate. Each mirrored into left/right.
    auto row_add = [&](int dst, int src, const Int& k) {
        a.add_row_multiple(dst, src, k);
        left.add_row_multiple(dst, src, k);
    };
    auto col_add = [&](int dst, int src, const Int& k) {
        a.add_col_multiple(dst, src, k);
        right.add_col_multiple(dst, src, k);
    };
    auto row_swap = [&](int i, int j) {
        a.swap_rows(i, j);
        left.swap_rows(i, j);
    };
    auto col_swap = [&](int i, int j) {
        a.swap_cols(i, j);
        right.swap_cols(i, j);
    };
    auto row_neg = [&](int i) {
        a.negate_row(i);
        left.negate_row(i);
    };

    std::vector<Int> diag;
    const int bound = std::min(rows, cols);
    for (int s = 0; s < bound; ++s) {
        // minimal-absolute-value pivot in the trailing submatrix
        int pi = -1, pj = -1;
        Int best;
        for (int i = s; i < rows; ++i)
            for (int j = s; j < cols; ++j) {
                const Int& v = a.at(i, j);
                if (v == 0) continue;
                Int av = abs(v);
                if (pi < 0 || av < best) {
                    best = av;
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;  // trailing submatrix is zero
        if (pi != s) row_swap(s, pi);
        if (pj != s) col_swap(s, pj);

        while (true) {
            bool clean = true;
            for (int i = s + 1; i < rows; ++i) {
                if (a.at(i, s) == 0) continue;
                Int q = a.at(i, s) / a.at(s, s);  // truncated
                if (q != 0) row_add(i, s, -q);
                if (a.at(i, s) != 0) {
                    // remainder became the new smallest entry
                    row_swap(s, i);
                    clean = false;
                }
            }
            for (int j = s + 1; j < cols; ++j) {
                if (a.at(s, j) == 0) continue;
                Int q = a.at(s, j) / a.at(s, s);
                if (q != 0) col_add(j, s, -q);
                if (a.at(s, j) != 0) {
                    col_swap(s, j);
                    clean = false;
                }
            }
            if (!clean) continue;

            // pivot must divide every remaining entry for the chain d_i | d_{i+1}
            bool divides = true;
            for (int i = s + 1; i < rows && divides; ++i)
                for (int j = s + 1; j < cols && divides; ++j)
                    if (a.at(i, j) % a.at(s, s) != 0) {
                        row_add(s, i, 1);
                        divides = false;
                    }
            if (divides) break;
        }
        if (a.at(s, s) < 0) row_neg(s);
        diag.push_back(a.at(s, s));
    }

    SnfResult r;
    r.diagonal = std::move(diag);
    r.left = std::move(left);
    r.right = std::move(right);
    r.original_rows = rows;
    r.original_cols = cols;
    return r;
}

ModKernel::ModKernel(SnfResult snf, Int modulus) : snf_(std::move(snf)), n_(std::move(modulus)) {
    if (n_ < 2) throw std::invalid_argument("modulus must be at least 2");
    const int cols = snf_.original_cols;
    const int r = static_cast<int>(snf_.diagonal.size());
    radix_.resize(cols);
    step_.resize(cols);
    for (int i = 0; i < cols; ++i) {
        if (i < r) {
            Int g = gcd(snf_.diagonal[i], n_);
            radix_[i] = g;
            step_[i] = n_ / g;
        } else {
            radix_[i] = n_;
            step_[i] = 1;
        }
    }
}

Int ModKernel::solution_count() const {
    Int c = 1;
    for (const Int& r : radix_) c *= r;
    return c;
}

ModKernel::Iterator::Iterator(const ModKernel& k) : k_(k), counter_(k.radix_.size(), 0) {}

bool ModKernel::Iterator::next(std::vector<Int>& out) {
    if (done_) return false;
    if (started_) {
        // increment mixed-radix counter, last coordinate fastest
        int i = static_cast<int>(counter_.size()) - 1;
        for (; i >= 0; --i) {
            counter_[i] += 1;
            if (counter_[i] < k_.radix_[i]) break;
            counter_[i] = 0;
        }
        if (i < 0) {
            done_ = true;
            return false;
        }
    }
    started_ = true;
    const int cols = k_.snf_.original_cols;
    std::vector<Int> z(cols);
    for (int i = 0; i < cols; ++i) z[i] = counter_[i] * k_.step_[i];
    out.assign(cols, 0);
    for (int i = 0; i < cols; ++i) {
        for (int j = 0; j < cols; ++j) out[i] += k_.snf_.right.at(i, j) * z[j];
        mpz_fdiv_r(out[i].get_mpz_t(), out[i].get_mpz_t(), k_.n_.get_mpz_t());
    }
    return true;
}

ModKernel solve_mod_n(const IntMatrix& m, const Int& n) {
    return ModKernel(smith_normal_form(m), n);
}

namespace {

bool solves(const IntMatrix& m, const std::vector<Int>& x, const Int& n) {
    for (const Int& v : m.apply(x))
        if (v % n != 0) return false;
    return true;
}

Int mod(const Int& v, const Int& n) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    return r;
}

}  // namespace

CarriedSystem carry_transform(const IntMatrix& m, const std::vector<Int>& solution, const Int& n,
                              const Transform& t) {
    if (static_cast<int>(solution.size()) != m.cols())
        throw std::invalid_argument("solution length does not match column count");
    if (!solves(m, solution, n)) throw std::invalid_argument("input vector does not solve the system mod n");

    auto col_index = [&](int j) {
        if (j < 0 || j >= m.cols()) throw std::invalid_argument("column index out of bounds");
    };
    auto row_index = [&](int i) {
        if (i < 0 || i >= m.rows()) throw std::invalid_argument("row index out of bounds");
    };

    CarriedSystem out{m, solution};
    switch (t.kind) {
        case TransformKind::AddColMultiple:
            col_index(t.i);
            col_index(t.j);
            if (t.i == t.j) throw std::invalid_argument("column indices must differ");
            out.matrix.add_col_multiple(t.i, t.j, t.lambda);
            out.solution[t.j] = mod(out.solution[t.j] - t.lambda * out.solution[t.i], n);
            break;
        case TransformKind::SwapCols:
            col_index(t.i);
            col_index(t.j);
            out.matrix.swap_cols(t.i, t.j);
            std::swap(out.solution[t.i], out.solution[t.j]);
            break;
        case TransformKind::NegateCol:
            col_index(t.i);
            out.matrix.negate_col(t.i);
            out.solution[t.i] = mod(-out.solution[t.i], n);
            break;
        case TransformKind::AddRowMultiple:
            row_index(t.i);
            row_index(t.j);
            if (t.i == t.j) throw std::invalid_argument("row indices must differ");
            out.matrix.add_row_multiple(t.i, t.j, t.lambda);
            break;
        case TransformKind::SwapRows:
            row_index(t.i);
            row_index(t.j);
            out.matrix.swap_rows(t.i, t.j);
            break;
        case TransformKind::NegateRow:
            row_index(t.i);
            out.matrix.negate_row(t.i);
            break;
        case TransformKind::DropZeroCol: {
            col_index(t.i);
            for (int r = 0; r < m.rows(); ++r)
                if (m.at(r, t.i) != 0) throw std::invalid_argument("column to drop is not zero");
            if (mod(solution[t.i], n) != 0)
                throw std::invalid_argument("solution entry at dropped column is not 0 mod n");
            out.matrix = m.without_col(t.i);
            out.solution.erase(out.solution.begin() + t.i);
            break;
        }
        case TransformKind::DropRow: {
            row_index(t.i);
            IntMatrix r(m.rows() - 1, m.cols());
            for (int i = 0, ri = 0; i < m.rows(); ++i) {
                if (i == t.i) continue;
                for (int j = 0; j < m.cols(); ++j) r.at(ri, j) = m.at(i, j);
                ++ri;
            }
            out.matrix = std::move(r);
            break;
        }
    }
    if (!solves(out.matrix, out.solution, n))
        throw std::logic_error("carried solution no longer solves the system");
    return out;
}

}  // namespace linkchroma
