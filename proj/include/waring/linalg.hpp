#pragma once

#include <map>
#include <optional>
#include <vector>

#include "waring/cyclotomic.hpp"

namespace waring {

/// Row-echelon basis over Q(w) grown one sparse row at a time. Rows are keyed
/// by column index; pivots are the smallest nonzero column of each basis row.
class IncrementalEchelon {
   public:
    using Row = std::map<std::size_t, Cyc>;

    explicit IncrementalEchelon(int order) : order_(order) {}

    /// Reduces `row` against the basis and keeps the remainder if nonzero.
    /// Returns true when the rank grew.
    bool insert(Row row);
    std::size_t rank() const noexcept { return pivots_.size(); }

   private:
    int order_;
    std::map<std::size_t, Row> pivots_;  // pivot column -> row with leading entry 1
};

/// Exact rank of dense rows over Q(w).
std::size_t exact_rank(const std::vector<std::vector<Cyc>>& rows, int order);

/// One solution of A x = b over Q with free variables set to zero, or nullopt
/// when the system is inconsistent.
std::optional<std::vector<Rational>> solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b);

}  // namespace waring
