#include "waring/matrix.hpp"

#include <utility>

namespace waring {

CycMatrix::CycMatrix(int dim, int order) : dim_(dim), order_(order) {
    if (dim < 0) throw DomainError("CycMatrix: negative dimension");
    entries_.assign(static_cast<std::size_t>(dim * dim), Cyc(order));
}

CycMatrix CycMatrix::identity(int dim, int order) {
    CycMatrix out(dim, order);
    for (int i = 1; i <= dim; ++i) out(i, i) = Cyc(order, 1L);
    return out;
}

CycMatrix CycMatrix::operator*(const CycMatrix& rhs) const {
    if (dim_ != rhs.dim_ || order_ != rhs.order_) throw DomainError("CycMatrix: shape or field mismatch");
    CycMatrix out(dim_, order_);
    for (int i = 1; i <= dim_; ++i)
        for (int l = 1; l <= dim_; ++l) {
            const Cyc& a = (*this)(i, l);
            if (a.is_zero()) continue;
            for (int j = 1; j <= dim_; ++j) {
                const Cyc& b = rhs(l, j);
                if (!b.is_zero()) out(i, j).add_product(a, b);
            }
        }
    return out;
}

CycMatrix CycMatrix::transpose() const {
    CycMatrix out(dim_, order_);
    for (int i = 1; i <= dim_; ++i)
        for (int j = 1; j <= dim_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

Cyc CycMatrix::determinant() const {
    CycMatrix work = *this;
    Cyc det(order_, 1L);
    for (int col = 1; col <= dim_; ++col) {
        int pivot = 0;
        for (int r = col; r <= dim_ && pivot == 0; ++r)
            if (!work(r, col).is_zero()) pivot = r;
        if (pivot == 0) return Cyc(order_);
        if (pivot != col) {
            for (int j = 1; j <= dim_; ++j) std::swap(work(pivot, j), work(col, j));
            det.negate();
        }
        det *= work(col, col);
        const Cyc inv = work(col, col).inverse();
        for (int r = col + 1; r <= dim_; ++r) {
            if (work(r, col).is_zero()) continue;
            const Cyc factor = work(r, col) * inv;
            for (int j = col; j <= dim_; ++j) work(r, j) -= factor * work(col, j);
        }
    }
    return det;
}

std::size_t CycMatrix::nonzero_count() const {
    std::size_t n = 0;
    for (const auto& e : entries_)
        if (!e.is_zero()) ++n;
    return n;
}

}  // namespace waring
