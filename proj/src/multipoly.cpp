#include "waring/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace waring {

std::uint8_t VarId::code() const {
    if (row < 1 || col < 1 || row > kMaxDim || col > kMaxDim) throw DomainError("VarId: index out of range");
    return static_cast<std::uint8_t>((row - 1) * kMaxDim + (col - 1));
}

// ---------------------------------------------------------------------------

Monomial Monomial::from_codes(std::span<const std::uint8_t> codes) {
    if (codes.size() > static_cast<std::size_t>(kMaxDegree)) throw DomainError("Monomial: degree exceeds capacity");
    Monomial m;
    std::copy(codes.begin(), codes.end(), m.codes_.begin());
    m.size_ = static_cast<std::uint8_t>(codes.size());
    std::sort(m.codes_.begin(), m.codes_.begin() + m.size_);
    return m;
}

Monomial Monomial::from_vars(std::span<const VarId> vars) {
    std::vector<std::uint8_t> codes;
    codes.reserve(vars.size());
    for (const auto& v : vars) codes.push_back(v.code());
    return from_codes(codes);
}

Monomial Monomial::from_exponents(std::span<const std::pair<VarId, int>> exponents) {
    std::vector<std::uint8_t> codes;
    for (const auto& [v, e] : exponents) {
        if (e < 0) throw DomainError("Monomial: negative exponent");
        codes.insert(codes.end(), static_cast<std::size_t>(e), v.code());
    }
    return from_codes(codes);
}

std::vector<std::pair<VarId, int>> Monomial::exponents() const {
    std::vector<std::pair<VarId, int>> out;
    for (std::size_t i = 0; i < size_;) {
        std::size_t j = i;
        while (j < size_ && codes_[j] == codes_[i]) ++j;
        out.emplace_back(VarId::from_code(codes_[i]), static_cast<int>(j - i));
        i = j;
    }
    return out;
}

int Monomial::exponent(VarId v) const {
    const auto c = v.code();
    return static_cast<int>(std::count(codes_.begin(), codes_.begin() + size_, c));
}

void Monomial::push_sorted(std::uint8_t code) {
    if (size_ >= kMaxDegree) throw DomainError("Monomial: degree exceeds capacity");
    codes_[size_++] = code;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
    if (size_ + rhs.size_ > kMaxDegree) throw DomainError("Monomial: degree exceeds capacity");
    Monomial out;
    std::merge(codes_.begin(), codes_.begin() + size_, rhs.codes_.begin(), rhs.codes_.begin() + rhs.size_, out.codes_.begin());
    out.size_ = static_cast<std::uint8_t>(size_ + rhs.size_);
    return out;
}

std::size_t Monomial::hash() const noexcept {
    std::uint64_t h = 1469598103934665603ULL ^ size_;
    for (std::size_t i = 0; i < size_; ++i) {
        h ^= codes_[i];
        h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
}

std::string Monomial::to_string() const {
    if (size_ == 0) return "1";
    std::ostringstream out;
    bool first = true;
    for (const auto& [v, e] : exponents()) {
        if (!first) out << "*";
        first = false;
        out << "x" << v.row << v.col;
        if (e > 1) out << "^" << e;
    }
    return out.str();
}

// ---------------------------------------------------------------------------

SparsePoly SparsePoly::variable(int order, VarId v) {
    SparsePoly p(order);
    const std::array<VarId, 1> vars{v};
    p.add_term(Monomial::from_vars(vars), Cyc(order, 1L));
    return p;
}

SparsePoly SparsePoly::constant(const Cyc& c) {
    SparsePoly p(c.order());
    p.add_term(Monomial{}, c);
    return p;
}

std::vector<std::pair<Monomial, Cyc>> SparsePoly::sorted_terms() const {
    std::vector<std::pair<Monomial, Cyc>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

Cyc SparsePoly::coefficient(const Monomial& m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? Cyc(order_) : it->second;
}

void SparsePoly::add_term(const Monomial& m, const Cyc& c) {
    if (c.order() != order_) throw DomainError("SparsePoly: coefficient field mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& rhs) {
    if (rhs.order_ != order_) throw DomainError("SparsePoly: field mismatch");
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& rhs) {
    if (rhs.order_ != order_) throw DomainError("SparsePoly: field mismatch");
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

SparsePoly& SparsePoly::operator*=(const Cyc& c) {
    if (c.order() != order_) throw DomainError("SparsePoly: field mismatch");
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

SparsePoly operator*(const SparsePoly& lhs, const SparsePoly& rhs) {
    if (lhs.order_ != rhs.order_) throw DomainError("SparsePoly: field mismatch");
    SparsePoly out(lhs.order_);
    for (const auto& [ma, ca] : lhs.terms_)
        for (const auto& [mb, cb] : rhs.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

bool SparsePoly::is_homogeneous(int degree) const {
    return std::all_of(terms_.begin(), terms_.end(), [degree](const auto& t) { return t.first.degree() == degree; });
}

Cyc SparsePoly::evaluate(const CycMatrix& point) const {
    if (point.order() != order_) throw DomainError("SparsePoly::evaluate: field mismatch");
    Cyc sum(order_);
    Cyc product(order_);
    for (const auto& [m, c] : terms_) {
        product = c;
        bool zero = false;
        for (const auto code : m.codes()) {
            const VarId v = VarId::from_code(code);
            const Cyc& x = point(v.row, v.col);
            if (x.is_zero()) {
                zero = true;
                break;
            }
            product *= x;
        }
        if (!zero) sum += product;
    }
    return sum;
}

SparsePoly SparsePoly::substitute(const std::function<VarId(VarId)>& rename) const {
    SparsePoly out(order_);
    for (const auto& [m, c] : terms_) {
        std::vector<VarId> vars;
        for (const auto code : m.codes()) vars.push_back(rename(VarId::from_code(code)));
        out.add_term(Monomial::from_vars(vars), c);
    }
    return out;
}

SparsePoly SparsePoly::with_order(int order) const {
    if (order == order_) return *this;
    SparsePoly out(order);
    for (const auto& [m, c] : terms_) {
        const auto q = c.as_rational();
        if (!q) throw DomainError("SparsePoly::with_order: coefficient is not rational");
        out.add_term(m, Cyc(order, *q));
    }
    return out;
}

std::string SparsePoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : sorted_terms()) {
        const auto q = c.as_rational();
        if (q) {
            const Rational mag = abs(*q);
            if (first) {
                if (*q < 0) out << "-";
            } else {
                out << (*q < 0 ? " - " : " + ");
            }
            if (mag != 1 || m.degree() == 0) {
                out << mag.get_str();
                if (m.degree() > 0) out << "*";
            }
        } else {
            if (!first) out << " + ";
            out << "(" << c.to_string() << ")";
            if (m.degree() > 0) out << "*";
        }
        if (m.degree() > 0) out << m.to_string();
        first = false;
    }
    return out.str();
}

// ---------------------------------------------------------------------------

std::vector<std::pair<VarId, Cyc>> LinForm::support() const {
    std::vector<std::pair<VarId, Cyc>> out;
    for (int i = 1; i <= dim(); ++i)
        for (int j = 1; j <= dim(); ++j)
            if (!coeffs_(i, j).is_zero()) out.emplace_back(VarId{i, j}, coeffs_(i, j));
    return out;
}

SparsePoly LinForm::to_poly() const {
    SparsePoly p(order());
    for (const auto& [v, c] : support()) {
        const std::array<VarId, 1> vars{v};
        p.add_term(Monomial::from_vars(vars), c);
    }
    return p;
}

// ---------------------------------------------------------------------------

Integer multinomial(int d, std::span<const int> parts) {
    long sum = 0;
    for (const int p : parts) {
        if (p < 0) throw DomainError("multinomial: negative part");
        sum += p;
    }
    if (sum != d) throw DomainError("multinomial: parts do not sum to d");
    Integer out = factorial(d);
    for (const int p : parts) out /= factorial(p);
    return out;
}

void for_each_weak_composition(int total, int count, const std::function<void(std::span<const int>)>& visit) {
    if (count <= 0) {
        if (total == 0) visit({});
        return;
    }
    std::vector<int> parts(static_cast<std::size_t>(count), 0);
    std::function<void(int, int)> rec = [&](int k, int rem) {
        if (k == count - 1) {
            parts[static_cast<std::size_t>(k)] = rem;
            visit(parts);
            return;
        }
        for (int v = rem; v >= 0; --v) {
            parts[static_cast<std::size_t>(k)] = v;
            rec(k + 1, rem - v);
        }
    };
    rec(0, total);
}

void for_each_power_term(const LinForm& form, int e, const Cyc& scale,
                         const std::function<void(const Monomial&, const Cyc&)>& visit) {
    if (e < 0) throw DomainError("for_each_power_term: negative exponent");
    if (e > kMaxDegree) throw DomainError("for_each_power_term: exponent exceeds monomial capacity");
    const auto support = form.support();
    const std::size_t s = support.size();
    if (s == 0) {
        if (e == 0) visit(Monomial{}, scale);
        return;
    }
    // powers[k][l] = c_k^l
    std::vector<std::vector<Cyc>> powers(s);
    for (std::size_t k = 0; k < s; ++k) {
        auto& row = powers[k];
        row.reserve(static_cast<std::size_t>(e) + 1);
        row.emplace_back(form.order(), 1L);
        for (int l = 1; l <= e; ++l) row.push_back(row.back() * support[k].second);
    }
    std::vector<std::vector<Integer>> binom(static_cast<std::size_t>(e) + 1);
    for (int n = 0; n <= e; ++n)
        for (int k = 0; k <= n; ++k) binom[static_cast<std::size_t>(n)].push_back(binomial(n, k));
    std::vector<std::uint8_t> codes(s);
    for (std::size_t k = 0; k < s; ++k) codes[k] = support[k].first.code();

    std::vector<Cyc> partial(s + 1, Cyc(form.order()));
    partial[0] = scale;
    std::vector<Monomial> prefix(s + 1);
    std::function<void(std::size_t, int)> rec = [&](std::size_t k, int rem) {
        if (k == s - 1) {
            Monomial& m = prefix[k + 1];
            m = prefix[k];
            for (int r = 0; r < rem; ++r) m.push_sorted(codes[k]);
            Cyc& value = partial[k + 1];
            value = partial[k];
            if (rem > 0) value *= powers[k][static_cast<std::size_t>(rem)];
            visit(m, value);
            return;
        }
        for (int l = rem; l >= 0; --l) {
            Monomial& m = prefix[k + 1];
            m = prefix[k];
            for (int r = 0; r < l; ++r) m.push_sorted(codes[k]);
            Cyc& value = partial[k + 1];
            value = partial[k];
            if (l > 0) {
                value *= powers[k][static_cast<std::size_t>(l)];
                const Integer& b = binom[static_cast<std::size_t>(rem)][static_cast<std::size_t>(l)];
                if (b != 1) value *= b;
            }
            rec(k + 1, rem - l);
        }
    };
    rec(0, e);
}

SparsePoly expand_power(const LinForm& form, int e) {
    if (e < 1) throw DomainError("expand_power: exponent must be positive");
    SparsePoly out(form.order());
    const Cyc one(form.order(), 1L);
    for_each_power_term(form, e, one, [&](const Monomial& m, const Cyc& c) { out.add_term(m, c); });
    return out;
}

namespace {
int parity_sign(std::span<const int> images) {
    int inversions = 0;
    for (std::size_t a = 0; a < images.size(); ++a)
        for (std::size_t b = a + 1; b < images.size(); ++b)
            if (images[a] > images[b]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}
}  // namespace

SparsePoly determinant_poly(int d, int order) {
    if (d < 1) throw DomainError("determinant_poly: d must be positive");
    SparsePoly out(order);
    std::vector<int> images(static_cast<std::size_t>(d));
    std::iota(images.begin(), images.end(), 1);
    std::vector<VarId> vars(static_cast<std::size_t>(d));
    do {
        for (int i = 0; i < d; ++i) vars[static_cast<std::size_t>(i)] = {i + 1, images[static_cast<std::size_t>(i)]};
        out.add_term(Monomial::from_vars(vars), Cyc(order, static_cast<long>(parity_sign(images))));
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

SparsePoly permanent_poly(std::span<const int> rows, std::span<const int> cols, int order) {
    if (rows.size() != cols.size()) throw DomainError("permanent_poly: row and column sets differ in size");
    SparsePoly out(order);
    std::vector<std::size_t> idx(cols.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<VarId> vars(rows.size());
    do {
        for (std::size_t k = 0; k < rows.size(); ++k) vars[k] = {rows[k], cols[idx[k]]};
        out.add_term(Monomial::from_vars(vars), Cyc(order, 1L));
    } while (std::next_permutation(idx.begin(), idx.end()));
    return out;
}

}  // namespace waring
