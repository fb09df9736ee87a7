#pragma once

#include <json.hpp>
#include <string>

#include "linkchroma/coloring.hpp"

namespace linkchroma {

/// Row taxonomy: the multiset of nonzero entries of a row, one of
/// (i) {1,1,-2}  (ii) {2,-2}  (iii) {1,-1}  (iv) {1,1}  (v) {1,-2}
/// (vi) {1}  (vii) {-1}  (viii) {2}  (ix) {-2}.
enum class RowType { I, II, III, IV, V, VI, VII, VIII, IX, Reject };

const char* row_type_tag(RowType t);  // "(i)".."(ix)", "reject"

RowType classify_row(const std::vector<Int>& row);

/// True iff |det m| <= 2^mu for the mu x mu matrix m. Throws
/// std::invalid_argument when some row is outside the taxonomy.
bool check_det_bound_claim(const IntMatrix& m);

struct MergeResult {
    IntMatrix a1;          // k x l
    std::vector<Int> y0;   // deduplicated color vector, length l
    std::vector<int> kept_columns;
};

/// Column-merge step: scanning from the last column down, each column is
/// folded (add then delete) into the nearest earlier column carrying the same
/// color. The output has one column per distinct color.
MergeResult merge_columns(const IntMatrix& a, const std::vector<Int>& colors);

struct ZeroedResult {
    IntMatrix a2;         // last column zeroed, others unchanged
    std::vector<Int> y1;  // y0 shifted so the last entry is 0, reduced mod n
};

/// Requires the columns of a1 to sum to the zero vector.
ZeroedResult zero_last_column(const IntMatrix& a1, const std::vector<Int>& y0, const Int& n);

/// First l-1 linearly independent rows, in original order. Throws
/// DiagramError if rank(a2) != cols-1.
IntMatrix select_rows(const IntMatrix& a2);

/// Requires the last column of a3 to be zero.
IntMatrix drop_last_column(const IntMatrix& a3);

/// Full audit trail of the matrix pipeline run on one effective coloring.
struct BoundCertificate {
    Int n;
    std::string diagram_name;
    Coloring coloring;
    int l = 0;  // palette size
    IntMatrix A, A1, A2, A3, B;
    std::vector<Int> x0, y0, y1;
    Int det_B;
    std::vector<RowType> row_types_of_B;
    std::vector<Int> snf_diagonal;  // SNF of B
    bool det_lower_ok = false;      // n <= |det B|
    bool det_upper_ok = false;      // |det B| <= 2^(l-1)
    bool palette_ok = false;        // 2^(l-1) >= n, i.e. l >= 1 + log2 n
    bool rows_classified = false;   // every row of B within the taxonomy
    bool snf_primes_ok = false;     // each prime p | n divides some d_i
    bool kink_flag = false;

    bool valid() const;
    nlohmann::json to_json() const;
};

/// Runs merge -> zero last column -> row selection -> column drop, computes
/// det B and the SNF of B, and records every check. Throws
/// std::invalid_argument when c is not an effective coloring of d, and
/// DiagramError when det(d) == 0.
BoundCertificate verify(const LinkDiagram& d, const Coloring& c, const std::string& name = "");

}  // namespace linkchroma
