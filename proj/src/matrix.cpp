#include "bifactor/matrix.hpp"

#include <algorithm>
#include <numeric>

#include "bifactor/factorization.hpp"

namespace bifactor {

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    ExactMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size())
            throw Error(errc::index_out_of_bounds,
                        "row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                            " entries in a " + std::to_string(rows.size()) + "-square matrix");
        for (std::size_t k = 0; k < rows.size(); ++k) m.at(i, k) = rows[i][k];
    }
    return m;
}

const Rational& ExactMatrix::at(std::size_t row, std::size_t col) const {
    if (row >= n_ || col >= n_)
        throw Error(errc::index_out_of_bounds, "matrix index (" + std::to_string(row) + ", " +
                                                   std::to_string(col) + ") out of range");
    return entries_[row * n_ + col];
}

Rational& ExactMatrix::at(std::size_t row, std::size_t col) {
    if (row >= n_ || col >= n_)
        throw Error(errc::index_out_of_bounds, "matrix index (" + std::to_string(row) + ", " +
                                                   std::to_string(col) + ") out of range");
    return entries_[row * n_ + col];
}

Rational ExactMatrix::row_sum(std::size_t row) const {
    Rational s(0);
    for (std::size_t k = 0; k < n_; ++k) s += at(row, k);
    return s;
}

Rational ExactMatrix::column_sum(std::size_t col) const {
    Rational s(0);
    for (std::size_t i = 0; i < n_; ++i) s += at(i, col);
    return s;
}

namespace {

// Message used whenever a negative entry voids the equal-line-sum guarantee:
// [[0,0,1],[0,0,1],[1,1,-1]] has every line sum equal to 1, yet all six of
// its diagonal products vanish, so nonnegativity is not a technicality.
const char* negative_entry_message =
    "negative entry: with negatives, equal line sums guarantee nothing "
    "([[0,0,1],[0,0,1],[1,1,-1]] has all line sums 1 and no nonzero member)";

void require_nonnegative(const ExactMatrix& m) {
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t k = 0; k < m.size(); ++k)
            if (sgn(m.at(i, k)) < 0) throw Error(errc::negative_entry, negative_entry_message);
}

void require_integer(const ExactMatrix& m) {
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t k = 0; k < m.size(); ++k)
            if (m.at(i, k).get_den() != 1)
                throw Error(errc::non_integer_entry,
                            "entry (" + std::to_string(i) + ", " + std::to_string(k) +
                                ") = " + m.at(i, k).get_str() + " is not an integer");
}

// The common line sum, or unequal_line_sums. n = 0 yields 0.
Rational equal_line_sum_or_throw(const ExactMatrix& m) {
    if (m.size() == 0) return Rational(0);
    Rational s = m.row_sum(0);
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m.row_sum(i) != s)
            throw Error(errc::unequal_line_sums, "row " + std::to_string(i) +
                                                     " sums to " + m.row_sum(i).get_str() +
                                                     ", expected " + s.get_str());
    for (std::size_t k = 0; k < m.size(); ++k)
        if (m.column_sum(k) != s)
            throw Error(errc::unequal_line_sums, "column " + std::to_string(k) +
                                                     " sums to " + m.column_sum(k).get_str() +
                                                     ", expected " + s.get_str());
    return s;
}

// Reads the permutation selected by a perfect matching of the row/column
// graph: row i is matched to column images[i].
Permutation matching_to_permutation(const BipartiteMultigraph& g, const Factor& matching) {
    Permutation p;
    p.images.assign(g.left_count(), 0);
    for (EdgeId e : matching.edges) p.images[g.left_of(e)] = g.right_of(e);
    return p;
}

} // namespace

BipartiteMultigraph graph_from_matrix(const ExactMatrix& m) {
    require_nonnegative(m);
    require_integer(m);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t k = 0; k < m.size(); ++k) {
            const mpz_class& mult = m.at(i, k).get_num();
            if (!mult.fits_ulong_p())
                throw Error(errc::too_large, "entry (" + std::to_string(i) + ", " +
                                                 std::to_string(k) +
                                                 ") is too large to expand into parallel edges");
            for (unsigned long t = 0; t < mult.get_ui(); ++t) edges.emplace_back(i, k);
        }
    }
    return BipartiteMultigraph(m.size(), m.size(), edges);
}

std::pair<ExactMatrix, mpz_class> normalize_rational(const ExactMatrix& m) {
    require_nonnegative(m);
    mpz_class scale(1);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t k = 0; k < m.size(); ++k)
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m.at(i, k).get_den().get_mpz_t());

    ExactMatrix scaled(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t k = 0; k < m.size(); ++k) {
            scaled.at(i, k) = m.at(i, k) * Rational(scale);
            scaled.at(i, k).canonicalize();
        }
    return {scaled, scale};
}

Permutation nonzero_member(const ExactMatrix& m) {
    require_nonnegative(m);
    Rational s = equal_line_sum_or_throw(m);
    if (m.size() == 0) return Permutation{};
    if (s == 0)
        throw Error(errc::zero_sum, "line sums are zero; a nonnegative matrix is then all zero");

    // Clear denominators, expand into a regular bipartite multigraph whose
    // degrees are the (scaled) line sums, and read a permutation off a
    // perfect matching. Matched cells hold at least one edge, so the
    // original entries there are positive.
    auto [scaled, scale] = normalize_rational(m);
    BipartiteMultigraph g = graph_from_matrix(scaled);
    return matching_to_permutation(g, perfect_matching(g));
}

PermutationDecomposition decompose_into_permutations(const ExactMatrix& m) {
    require_nonnegative(m);
    require_integer(m);
    equal_line_sum_or_throw(m);

    BipartiteMultigraph g = graph_from_matrix(m);
    Factorization fact = one_factorization(g);
    PermutationDecomposition d;
    d.parts.reserve(fact.factors.size());
    for (const Factor& f : fact.factors) d.parts.push_back(matching_to_permutation(g, f));
    return d;
}

PermutationDecomposition support_decomposition(const ExactMatrix& m) {
    std::size_t k = 0;
    for (std::size_t j = 0; j < m.size(); ++j) {
        std::size_t in_row = 0, in_col = 0;
        for (std::size_t t = 0; t < m.size(); ++t) {
            if (m.at(j, t) != 0) ++in_row;
            if (m.at(t, j) != 0) ++in_col;
        }
        if (j == 0) k = in_row;
        if (in_row != k || in_col != k)
            throw Error(errc::irregular_support,
                        "support is not line-regular: line " + std::to_string(j) + " has " +
                            std::to_string(in_row) + "/" + std::to_string(in_col) +
                            " nonzeros, expected " + std::to_string(k));
    }

    // Only the zero pattern matters: decompose the 0/1 support, which has
    // equal line sums k by the check above.
    ExactMatrix support(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t t = 0; t < m.size(); ++t)
            if (m.at(i, t) != 0) support.at(i, t) = 1;
    return decompose_into_permutations(support);
}

std::size_t count_nonzero_members_bruteforce(const ExactMatrix& m) {
    if (m.size() > 8)
        throw Error(errc::too_large, "exhaustive member count is limited to n <= 8, got n = " +
                                         std::to_string(m.size()));
    std::vector<std::size_t> perm(m.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::size_t count = 0;
    do {
        bool nonzero = true;
        for (std::size_t i = 0; i < m.size() && nonzero; ++i)
            nonzero = m.at(i, perm[i]) != 0;
        count += nonzero;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

ExactMatrix permutation_sum(const PermutationDecomposition& d, std::size_t n) {
    ExactMatrix sum(n);
    for (const Permutation& p : d.parts) {
        if (p.images.size() != n)
            throw Error(errc::index_out_of_bounds, "permutation size does not match the matrix");
        for (std::size_t i = 0; i < n; ++i) sum.at(i, p.images[i]) += 1;
    }
    return sum;
}

bool covers_support_exactly_once(const PermutationDecomposition& d, const ExactMatrix& m) {
    ExactMatrix sum = permutation_sum(d, m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t k = 0; k < m.size(); ++k)
            if (sum.at(i, k) != Rational(m.at(i, k) != 0 ? 1 : 0)) return false;
    return true;
}

} // namespace bifactor
