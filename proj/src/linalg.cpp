#include "waring/linalg.hpp"

#include "waring/errors.hpp"

namespace waring {

bool IncrementalEchelon::insert(Row row) {
    for (auto it = row.begin(); it != row.end();) {
        if (it->second.is_zero()) {
            it = row.erase(it);
            continue;
        }
        const auto pivot = pivots_.find(it->first);
        if (pivot == pivots_.end()) {
            ++it;
            continue;
        }
        const Cyc factor = it->second;
        for (const auto& [col, value] : pivot->second) {
            auto [slot, inserted] = row.try_emplace(col, order_);
            slot->second -= factor * value;
        }
        it = row.begin();
    }
    if (row.empty()) return false;
    const std::size_t lead = row.begin()->first;
    const Cyc scale = row.begin()->second.inverse();
    for (auto& [col, value] : row) value *= scale;
    // Keep the basis fully reduced against the new pivot column.
    for (auto& [col, basis] : pivots_) {
        const auto hit = basis.find(lead);
        if (hit == basis.end()) continue;
        const Cyc factor = hit->second;
        for (const auto& [c, value] : row) {
            auto [slot, inserted] = basis.try_emplace(c, order_);
            slot->second -= factor * value;
            if (slot->second.is_zero()) basis.erase(slot);
        }
    }
    pivots_.emplace(lead, std::move(row));
    return true;
}

std::size_t exact_rank(const std::vector<std::vector<Cyc>>& rows, int order) {
    IncrementalEchelon echelon(order);
    for (const auto& dense : rows) {
        IncrementalEchelon::Row row;
        for (std::size_t c = 0; c < dense.size(); ++c)
            if (!dense[c].is_zero()) row.emplace(c, dense[c]);
        echelon.insert(std::move(row));
    }
    return echelon.rank();
}

std::optional<std::vector<Rational>> solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    const std::size_t rows = a.size();
    if (b.size() != rows) throw DomainError("solve_exact: right-hand side has the wrong length");
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        const Rational inv = 1 / a[r][c];
        for (auto& v : a[r]) v *= inv;
        b[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            const Rational f = a[i][c];
            for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
            b[i] -= f * b[r];
        }
        pivot_cols.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (b[i] != 0) return std::nullopt;
    std::vector<Rational> x(cols, Rational(0));
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = b[i];
    return x;
}

}  // namespace waring
