#pragma once

#include <vector>

#include "waring/cyclotomic.hpp"

namespace waring {

/// Dense square matrix over Q(w_d); indices are 1-based to match x_{i,j}.
class CycMatrix {
   public:
    CycMatrix() = default;
    CycMatrix(int dim, int order);

    static CycMatrix identity(int dim, int order);

    int dim() const noexcept { return dim_; }
    int order() const noexcept { return order_; }

    Cyc& operator()(int i, int j) { return entries_.at(index(i, j)); }
    const Cyc& operator()(int i, int j) const { return entries_.at(index(i, j)); }

    CycMatrix operator*(const CycMatrix& rhs) const;
    CycMatrix transpose() const;
    Cyc determinant() const;
    std::size_t nonzero_count() const;

    friend bool operator==(const CycMatrix& lhs, const CycMatrix& rhs) = default;

   private:
    std::size_t index(int i, int j) const {
        if (i < 1 || j < 1 || i > dim_ || j > dim_) throw DomainError("CycMatrix: index out of range");
        return static_cast<std::size_t>((i - 1) * dim_ + (j - 1));
    }

    int dim_ = 0;
    int order_ = 1;
    std::vector<Cyc> entries_;
};

}  // namespace waring
