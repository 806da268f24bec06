#include "waring/independence.hpp"

#include <algorithm>
#include <map>

#include "waring/decompositions.hpp"
#include "waring/linalg.hpp"
#include "waring/parallel.hpp"

namespace waring {

namespace {

void check_index(int d, const Perm& sigma, int j) {
    if (d < 1 || d > kMaxDegree) throw DomainError("independence: d out of range");
    if (sigma.size() != d) throw DomainError("independence: permutation has the wrong size");
    if (j < 1 || j > d) throw DomainError("independence: j must lie in [1, d]");
}

}  // namespace

TermPoint term_point(int d, const Perm& sigma, int j) {
    check_index(d, sigma, j);
    TermPoint point{sigma, j, CycMatrix(d, d)};
    for (int i = 1; i <= d; ++i) point.coords(i, sigma(i)) = Cyc::root(d, static_cast<long>(i) * j);
    return point;
}

Monomial e_monomial(const Perm& sigma, int k) {
    std::vector<VarId> vars;
    for (int i = 1; i <= sigma.size(); ++i)
        if (i != k) vars.push_back({i, sigma(i)});
    return Monomial::from_vars(vars);
}

DualForm dual_form_L(int d, const Perm& sigma, int j) {
    check_index(d, sigma, j);
    DualForm form{SparsePoly(d), d - 1};
    for (int k = 1; k <= d; ++k) form.poly.add_term(e_monomial(sigma, k), Cyc::root(d, static_cast<long>(k) * j));
    return form;
}

DualForm promoted_dual_form(int d, const Perm& sigma, int j) {
    DualForm form = dual_form_L(d, sigma, j);
    form.poly = SparsePoly::variable(d, {1, sigma(1)}) * form.poly;
    form.degree = d;
    return form;
}

std::vector<std::pair<Perm, int>> term_indices(int d) {
    std::vector<std::pair<Perm, int>> out;
    for (const auto& sigma : all_permutations(d))
        for (int j = 1; j <= d; ++j) out.emplace_back(sigma, j);
    return out;
}

std::vector<std::vector<Cyc>> separation_matrix(int d, bool promoted, unsigned jobs) {
    if (d < 2 || d > 5) throw DomainError("separation_matrix: d must lie in [2, 5]");
    const auto indices = term_indices(d);
    std::vector<DualForm> forms;
    std::vector<TermPoint> points;
    for (const auto& [sigma, j] : indices) {
        forms.push_back(promoted ? promoted_dual_form(d, sigma, j) : dual_form_L(d, sigma, j));
        points.push_back(term_point(d, sigma, j));
    }
    std::vector<std::vector<Cyc>> matrix(indices.size());
    parallel_blocks(indices.size(), jobs, [&](std::size_t, std::size_t begin, std::size_t end) {
        for (std::size_t a = begin; a < end; ++a) {
            matrix[a].reserve(indices.size());
            for (const auto& point : points) matrix[a].push_back(forms[a](point));
        }
    });
    return matrix;
}

SeparationReport check_separation(int d, bool promoted, unsigned jobs) {
    const auto matrix = separation_matrix(d, promoted, jobs);
    const auto indices = term_indices(d);
    SeparationReport report;
    report.diagonal_ok = true;
    report.off_diagonal_zero = true;
    for (std::size_t a = 0; a < matrix.size(); ++a) {
        const int j = indices[a].second;
        Cyc diagonal(d, static_cast<long>(((d + 1) * j) % 2 == 0 ? d : -d));
        if (promoted) diagonal *= Cyc::root(d, j);
        for (std::size_t b = 0; b < matrix[a].size(); ++b) {
            ++report.entries_checked;
            const Cyc& entry = matrix[a][b];
            const bool bad = a == b ? !(entry == diagonal) : !entry.is_zero();
            if (!bad) continue;
            (a == b ? report.diagonal_ok : report.off_diagonal_zero) = false;
            if (!report.witness) report.witness = std::make_pair(a, b);
        }
    }
    return report;
}

std::size_t rank_oracle(int d, bool allow_large) {
    if (d < 2) throw DomainError("rank_oracle: d must be at least 2");
    if (d > 4 && !allow_large) throw DomainError("rank_oracle: d > 4 requires the opt-in flag");
    if (d > 5) throw DomainError("rank_oracle: d > 5 is not supported");
    const PowerDecomposition dec = main_decomposition(d);
    std::vector<SparsePoly> expanded;
    std::map<Monomial, std::size_t> columns;
    for (const auto& term : dec.terms) {
        expanded.push_back(expand_power(term.form, term.exponent));
        for (const auto& [m, c] : expanded.back().terms()) columns.emplace(m, 0);
    }
    std::size_t next = 0;
    for (auto& [m, col] : columns) col = next++;
    IncrementalEchelon echelon(d);
    for (const auto& poly : expanded) {
        IncrementalEchelon::Row row;
        for (const auto& [m, c] : poly.terms()) row.emplace(columns.at(m), c);
        echelon.insert(std::move(row));
    }
    return echelon.rank();
}

}  // namespace waring
