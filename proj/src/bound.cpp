#include "linkchroma/bound.hpp"

#include <algorithm>

namespace linkchroma {

const char* row_type_tag(RowType t) {
    switch (t) {
        case RowType::I: return "(i)";
        case RowType::II: return "(ii)";
        case RowType::III: return "(iii)";
        case RowType::IV: return "(iv)";
        case RowType::V: return "(v)";
        case RowType::VI: return "(vi)";
        case RowType::VII: return "(vii)";
        case RowType::VIII: return "(viii)";
        case RowType::IX: return "(ix)";
        case RowType::Reject: return "reject";
    }
    return "reject";
}

RowType classify_row(const std::vector<Int>& row) {
    std::vector<long> nz;
    for (const Int& v : row) {
        if (v == 0) continue;
        if (!v.fits_slong_p()) return RowType::Reject;
        nz.push_back(v.get_si());
    }
    std::sort(nz.begin(), nz.end());
    auto is = [&](std::initializer_list<long> want) {
        return nz.size() == want.size() && std::equal(nz.begin(), nz.end(), want.begin());
    };
    if (is({-2, 1, 1})) return RowType::I;
    if (is({-2, 2})) return RowType::II;
    if (is({-1, 1})) return RowType::III;
    if (is({1, 1})) return RowType::IV;
    if (is({-2, 1})) return RowType::V;
    if (is({1})) return RowType::VI;
    if (is({-1})) return RowType::VII;
    if (is({2})) return RowType::VIII;
    if (is({-2})) return RowType::IX;
    return RowType::Reject;
}

bool check_det_bound_claim(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("claim applies to square matrices");
    for (int i = 0; i < m.rows(); ++i)
        if (classify_row(m.row_vector(i)) == RowType::Reject)
            throw std::invalid_argument("row " + std::to_string(i) + " is outside the taxonomy");
    Int bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), 2, static_cast<unsigned long>(m.rows()));
    return abs(det(m)) <= bound;
}

MergeResult merge_columns(const IntMatrix& a, const std::vector<Int>& colors) {
    if (static_cast<int>(colors.size()) != a.cols())
        throw std::invalid_argument("color vector length does not match column count");
    IntMatrix cur = a;
    std::vector<Int> cs = colors;
    std::vector<int> kept(a.cols());
    for (int i = 0; i < a.cols(); ++i) kept[i] = i;

    for (int j = cur.cols() - 1; j >= 1; --j) {
        int target = -1;
        for (int i = j - 1; i >= 0; --i)
            if (cs[i] == cs[j]) {
                target = i;
                break;
            }
        if (target < 0) continue;
        cur.add_col_multiple(target, j, 1);
        cur = cur.without_col(j);
        cs.erase(cs.begin() + j);
        kept.erase(kept.begin() + j);
    }
    return MergeResult{std::move(cur), std::move(cs), std::move(kept)};
}

ZeroedResult zero_last_column(const IntMatrix& a1, const std::vector<Int>& y0, const Int& n) {
    const int l = a1.cols();
    if (static_cast<int>(y0.size()) != l) throw std::invalid_argument("solution length mismatch");
    for (int i = 0; i < a1.rows(); ++i) {
        Int sum = 0;
        for (int j = 0; j < l; ++j) sum += a1.at(i, j);
        if (sum != 0) throw std::invalid_argument("columns do not sum to the zero vector");
    }
    IntMatrix a2 = a1;
    for (int j = 0; j + 1 < l; ++j) a2.add_col_multiple(l - 1, j, 1);
    std::vector<Int> y1(l);
    const Int shift = y0[l - 1];
    for (int i = 0; i < l; ++i) {
        Int v = y0[i] - shift;
        mpz_fdiv_r(y1[i].get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    }
    return ZeroedResult{std::move(a2), std::move(y1)};
}

IntMatrix select_rows(const IntMatrix& a2) {
    const int l = a2.cols();
    if (rank(a2) != l - 1)
        throw DiagramError("rank is not l-1; the diagram's determinant vanishes or upstream data is wrong");
    IntMatrix chosen(0, l);
    std::vector<int> rows;
    for (int i = 0; i < a2.rows() && static_cast<int>(rows.size()) < l - 1; ++i) {
        IntMatrix trial(static_cast<int>(rows.size()) + 1, l);
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (int j = 0; j < l; ++j) trial.at(static_cast<int>(r), j) = a2.at(rows[r], j);
        for (int j = 0; j < l; ++j) trial.at(static_cast<int>(rows.size()), j) = a2.at(i, j);
        if (rank(trial) == trial.rows()) rows.push_back(i);
    }
    IntMatrix a3(l - 1, l);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (int j = 0; j < l; ++j) a3.at(static_cast<int>(r), j) = a2.at(rows[r], j);
    return a3;
}

IntMatrix drop_last_column(const IntMatrix& a3) {
    for (int i = 0; i < a3.rows(); ++i)
        if (a3.at(i, a3.cols() - 1) != 0) throw std::invalid_argument("last column is not zero");
    return a3.without_col(a3.cols() - 1);
}

bool BoundCertificate::valid() const {
    return det_lower_ok && det_upper_ok && palette_ok && snf_primes_ok &&
           (rows_classified || kink_flag);
}

nlohmann::json BoundCertificate::to_json() const {
    nlohmann::json j;
    j["n"] = n.get_str();
    j["diagram_name"] = diagram_name;
    nlohmann::json vals = nlohmann::json::array();
    for (const Int& v : coloring.values) vals.push_back(v.get_str());
    j["coloring"] = vals;
    j["l"] = l;
    j["det_B"] = det_B.get_str();
    nlohmann::json types = nlohmann::json::array();
    for (RowType t : row_types_of_B) types.push_back(row_type_tag(t));
    j["row_types"] = types;
    j["checks"] = {{"n_le_det_B", det_lower_ok},
                   {"det_B_le_2_pow_l_minus_1", det_upper_ok},
                   {"l_ge_1_plus_log2_n", palette_ok}};
    j["kink_flag"] = kink_flag;
    j["valid"] = valid();
    return j;
}

BoundCertificate verify(const LinkDiagram& d, const Coloring& c, const std::string& name) {
    const Int& n = c.modulus;
    ColoringClass cls = classify(c);
    if (!cls.is_effective) throw std::invalid_argument("coloring is not effective");
    if (determinant(d) == 0) throw DiagramError("determinant is zero; outside the theorem's hypothesis");

    BoundCertificate cert;
    cert.n = n;
    cert.diagram_name = name;
    cert.coloring = c;
    cert.kink_flag = d.has_kink();

    cert.A = coloring_matrix(d);
    cert.x0 = c.values;
    for (const Int& v : cert.A.apply(cert.x0))
        if (v % n != 0) throw std::invalid_argument("vector is not a coloring of this diagram");

    MergeResult merged = merge_columns(cert.A, cert.x0);
    cert.A1 = merged.a1;
    cert.y0 = merged.y0;
    cert.l = cls.palette_size;
    if (cert.A1.cols() != cert.l) throw std::logic_error("merged column count differs from palette size");

    ZeroedResult zeroed = zero_last_column(cert.A1, cert.y0, n);
    cert.A2 = zeroed.a2;
    cert.y1 = zeroed.y1;
    for (const Int& v : cert.A2.apply(cert.y1))
        if (v % n != 0) throw std::logic_error("carried solution fails on A2");
    if (!classify(Coloring{n, cert.y1}).is_effective)
        throw std::logic_error("carried solution lost effectiveness");

    cert.A3 = select_rows(cert.A2);
    cert.B = drop_last_column(cert.A3);
    cert.det_B = det(cert.B);

    cert.rows_classified = true;
    for (int i = 0; i < cert.B.rows(); ++i) {
        RowType t = classify_row(cert.B.row_vector(i));
        cert.row_types_of_B.push_back(t);
        if (t == RowType::Reject) cert.rows_classified = false;
    }

    SnfResult snf = smith_normal_form(cert.B);
    cert.snf_diagonal = snf.diagonal;
    cert.snf_primes_ok = true;
    for (const Int& p : prime_factors(n)) {
        bool divides_some = false;
        for (const Int& di : snf.diagonal)
            if (di % p == 0) {
                divides_some = true;
                break;
            }
        if (!divides_some) cert.snf_primes_ok = false;
    }

    Int pow;  // 2^(l-1), compared exactly; no floating-point log anywhere
    mpz_ui_pow_ui(pow.get_mpz_t(), 2, static_cast<unsigned long>(cert.l - 1));
    cert.det_lower_ok = n <= abs(cert.det_B);
    cert.det_upper_ok = abs(cert.det_B) <= pow;
    cert.palette_ok = pow >= n;
    return cert;
}

}  // namespace linkchroma
