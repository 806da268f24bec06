#include "waring/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace waring {

namespace {

using IntPoly = std::vector<Integer>;
using RatPoly = std::vector<Rational>;

// Exact quotient of a by a monic divisor; the remainder must vanish.
IntPoly divide_exact_monic(const IntPoly& a, const IntPoly& b) {
    IntPoly rem = a;
    const std::size_t db = b.size() - 1;
    IntPoly quot(a.size() - db, 0);
    for (std::size_t k = rem.size(); k-- > db;) {
        const Integer c = rem[k];
        if (c == 0) continue;
        quot[k - db] = c;
        for (std::size_t t = 0; t <= db; ++t) rem[k - db + t] -= c * b[t];
    }
    return quot;
}

void trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// q, r with a = q*b + r and deg r < deg b. b must be trimmed and nonzero.
std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b) {
    trim(a);
    const std::size_t db = b.size() - 1;
    if (a.size() < b.size()) return {RatPoly{}, a};
    RatPoly q(a.size() - db, 0);
    for (std::size_t k = a.size(); k-- > db;) {
        if (a[k] == 0) continue;
        const Rational c = a[k] / b.back();
        q[k - db] = c;
        for (std::size_t t = 0; t <= db; ++t) a[k - db + t] -= c * b[t];
    }
    trim(a);
    return {q, a};
}

RatPoly sub_mul(const RatPoly& a, const RatPoly& q, const RatPoly& b) {
    RatPoly out(std::max(a.size(), q.size() + b.size()), 0);
    std::copy(a.begin(), a.end(), out.begin());
    for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] -= q[i] * b[j];
    trim(out);
    return out;
}

thread_local IntPoly scratch;

}  // namespace

std::vector<Integer> cyclotomic_polynomial(int d) {
    if (d < 1) throw DomainError("cyclotomic_polynomial: order must be positive");
    IntPoly poly(static_cast<std::size_t>(d) + 1, 0);
    poly.front() = -1;
    poly.back() = 1;
    for (int e = 1; e < d; ++e) {
        if (d % e == 0) poly = divide_exact_monic(poly, cyclotomic_polynomial(e));
    }
    return poly;
}

int euler_totient(int d) {
    if (d < 1) throw DomainError("euler_totient: argument must be positive");
    int count = 0;
    for (int k = 1; k <= d; ++k)
        if (std::gcd(k, d) == 1) ++count;
    return count;
}

Integer factorial(int n) {
    if (n < 0) throw DomainError("factorial: negative argument");
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

Integer binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

// ---------------------------------------------------------------------------

CyclotomicField::CyclotomicField(int order) : order_(order), modulus_(cyclotomic_polynomial(order)) {
    const int deg = degree();
    root_powers_.reserve(static_cast<std::size_t>(order));
    IntPoly power(static_cast<std::size_t>(deg), 0);
    power[0] = 1;
    for (int k = 0; k < order; ++k) {
        root_powers_.push_back(power);
        IntPoly next(power.size() + 1, 0);
        std::copy(power.begin(), power.end(), next.begin() + 1);
        reduce(next);
        power = std::move(next);
    }
}

const CyclotomicField& CyclotomicField::of(int order) {
    if (order < 1) throw DomainError("cyclotomic field order must be positive");
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<const CyclotomicField>> registry;
    std::lock_guard lock(mutex);
    auto& slot = registry[order];
    if (!slot) slot.reset(new CyclotomicField(order));
    return *slot;
}

void CyclotomicField::reduce(std::vector<Integer>& poly) const {
    const auto deg = static_cast<std::size_t>(degree());
    for (std::size_t k = poly.size(); k-- > deg;) {
        if (poly[k] == 0) continue;
        const Integer& c = poly[k];
        for (std::size_t t = 0; t < deg; ++t) mpz_submul(poly[k - deg + t].get_mpz_t(), c.get_mpz_t(), modulus_[t].get_mpz_t());
        poly[k] = 0;
    }
    poly.resize(deg, 0);
}

// ---------------------------------------------------------------------------

Cyc::Cyc(int order) : field_(&CyclotomicField::of(order)), num_(static_cast<std::size_t>(field_->degree()), 0) {}

Cyc::Cyc(int order, long value) : Cyc(order) { num_[0] = value; }

Cyc::Cyc(int order, const Integer& value) : Cyc(order) { num_[0] = value; }

Cyc::Cyc(int order, const Rational& value) : Cyc(order) {
    num_[0] = value.get_num();
    den_ = value.get_den();
}

Cyc Cyc::root(int order, long k) {
    Cyc out(order);
    long r = k % order;
    if (r < 0) r += order;
    const auto coords = out.field_->root_power(static_cast<int>(r));
    std::copy(coords.begin(), coords.end(), out.num_.begin());
    return out;
}

Cyc Cyc::from_coefficients(int order, std::span<const Rational> coeffs) {
    Cyc out(order);
    Integer den = 1;
    for (const auto& c : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    IntPoly poly(std::max<std::size_t>(coeffs.size(), out.num_.size()), 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) poly[i] = coeffs[i].get_num() * (den / coeffs[i].get_den());
    out.field_->reduce(poly);
    out.num_ = std::move(poly);
    out.den_ = den;
    out.normalize();
    return out;
}

Rational Cyc::coefficient(int i) const {
    Rational q(num_.at(static_cast<std::size_t>(i)), den_);
    q.canonicalize();
    return q;
}

std::vector<Rational> Cyc::coefficients() const {
    std::vector<Rational> out;
    out.reserve(num_.size());
    for (int i = 0; i < degree(); ++i) out.push_back(coefficient(i));
    return out;
}

bool Cyc::is_zero() const noexcept {
    return std::all_of(num_.begin(), num_.end(), [](const Integer& c) { return c == 0; });
}

bool Cyc::is_one() const noexcept {
    if (den_ != 1 || num_[0] != 1) return false;
    return std::all_of(num_.begin() + 1, num_.end(), [](const Integer& c) { return c == 0; });
}

std::optional<Rational> Cyc::as_rational() const {
    if (!std::all_of(num_.begin() + 1, num_.end(), [](const Integer& c) { return c == 0; })) return std::nullopt;
    return coefficient(0);
}

std::optional<int> Cyc::as_root_power() const {
    if (den_ != 1) return std::nullopt;
    for (int k = 0; k < order(); ++k) {
        const auto coords = field_->root_power(k);
        if (std::equal(coords.begin(), coords.end(), num_.begin())) return k;
    }
    return std::nullopt;
}

void Cyc::check_same_field(const Cyc& rhs) const {
    if (field_ != rhs.field_)
        throw DomainError("Cyc: mismatched field orders " + std::to_string(order()) + " and " + std::to_string(rhs.order()));
}

void Cyc::normalize() {
    if (den_ == 1) return;
    if (den_ < 0) {
        den_ = -den_;
        for (auto& c : num_) c = -c;
    }
    Integer g = den_;
    for (const auto& c : num_) {
        if (g == 1) break;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
    if (g == 1) return;
    den_ /= g;
    for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

Cyc& Cyc::operator+=(const Cyc& rhs) {
    check_same_field(rhs);
    if (den_ == rhs.den_) {
        for (std::size_t i = 0; i < num_.size(); ++i) num_[i] += rhs.num_[i];
    } else {
        for (std::size_t i = 0; i < num_.size(); ++i) {
            num_[i] *= rhs.den_;
            mpz_addmul(num_[i].get_mpz_t(), rhs.num_[i].get_mpz_t(), den_.get_mpz_t());
        }
        den_ *= rhs.den_;
    }
    normalize();
    return *this;
}

Cyc& Cyc::operator-=(const Cyc& rhs) {
    Cyc neg = rhs;
    return *this += neg.negate();
}

Cyc& Cyc::negate() {
    for (auto& c : num_) c = -c;
    return *this;
}

Cyc& Cyc::operator*=(const Integer& rhs) {
    for (auto& c : num_) c *= rhs;
    normalize();
    return *this;
}

Cyc& Cyc::operator*=(const Cyc& rhs) {
    check_same_field(rhs);
    const std::size_t n = num_.size();
    scratch.assign(2 * n - 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (num_[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) mpz_addmul(scratch[i + j].get_mpz_t(), num_[i].get_mpz_t(), rhs.num_[j].get_mpz_t());
    }
    field_->reduce(scratch);
    std::swap(num_, scratch);
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Cyc& Cyc::add_product(const Cyc& a, const Cyc& b) {
    if (a.den_ != 1 || b.den_ != 1 || den_ != 1) return *this += a * b;
    check_same_field(a);
    check_same_field(b);
    const std::size_t n = num_.size();
    scratch.assign(2 * n - 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (a.num_[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) mpz_addmul(scratch[i + j].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
    }
    field_->reduce(scratch);
    for (std::size_t i = 0; i < n; ++i) num_[i] += scratch[i];
    return *this;
}

Cyc Cyc::inverse() const {
    if (is_zero()) throw DivisionByZero("Cyc: inverse of zero");
    RatPoly r0(field_->modulus().begin(), field_->modulus().end());
    RatPoly r1(num_.begin(), num_.end());
    trim(r1);
    RatPoly s0{};
    RatPoly s1{Rational(1)};
    while (r1.size() > 1) {
        auto [q, r] = divmod(r0, r1);
        RatPoly s2 = sub_mul(s0, q, s1);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r1 is a nonzero constant c with s1 * num == c (mod Phi), so 1/(num/den) = s1 * den / c.
    const Rational scale = Rational(den_) / r1.front();
    for (auto& c : s1) c *= scale;
    return from_coefficients(order(), s1);
}

Cyc Cyc::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyc result(order(), 1L);
    Cyc base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return result;
}

bool operator==(const Cyc& lhs, const Cyc& rhs) {
    return lhs.field_ == rhs.field_ && lhs.den_ == rhs.den_ && lhs.num_ == rhs.num_;
}

std::string Cyc::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i < degree(); ++i) {
        const Rational c = coefficient(i);
        if (c == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            out << mag.get_str();
        } else {
            if (mag != 1) out << mag.get_str() << "*";
            out << "w";
            if (i > 1) out << "^" << i;
        }
    }
    return first ? "0" : out.str();
}

Cyc root_power_sum(int d, long p) {
    Cyc sum(d);
    for (long j = 1; j <= d; ++j) sum += Cyc::root(d, p * j);
    return sum;
}

// ---------------------------------------------------------------------------

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

namespace {
std::uint64_t reduce_signed(std::uint64_t p, std::int64_t v) {
    const auto m = static_cast<std::int64_t>(p);
    std::int64_t r = v % m;
    if (r < 0) r += m;
    return static_cast<std::uint64_t>(r);
}
}  // namespace

PrimeScalar::PrimeScalar(std::uint64_t modulus, std::int64_t v) : p(modulus), value(reduce_signed(modulus, v)) {
    if (modulus < 2) throw DomainError("PrimeScalar: modulus must be at least 2");
}

PrimeScalar PrimeScalar::operator+(PrimeScalar rhs) const {
    PrimeScalar out = *this;
    out.value = (value + rhs.value) % p;
    return out;
}

PrimeScalar PrimeScalar::operator-(PrimeScalar rhs) const {
    PrimeScalar out = *this;
    out.value = (value + p - rhs.value) % p;
    return out;
}

PrimeScalar PrimeScalar::operator*(PrimeScalar rhs) const {
    PrimeScalar out = *this;
    out.value = static_cast<std::uint64_t>((static_cast<unsigned __int128>(value) * rhs.value) % p);
    return out;
}

PrimeScalar PrimeScalar::operator-() const {
    PrimeScalar out = *this;
    out.value = (p - value) % p;
    return out;
}

PrimeScalar PrimeScalar::pow(std::uint64_t e) const {
    PrimeScalar result(p, 1);
    PrimeScalar base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

PrimeScalar PrimeScalar::inverse() const {
    if (value == 0) throw DivisionByZero("PrimeScalar: inverse of zero");
    return pow(p - 2);
}

PrimeScalar PrimeScalar::root_of_unity(std::uint64_t p, int d) {
    if (!is_prime(p)) throw DomainError("root_of_unity: modulus is not prime");
    if (d < 1 || (p - 1) % static_cast<std::uint64_t>(d) != 0)
        throw DomainError("root_of_unity: order must divide p - 1");
    for (std::uint64_t g = 1; g < p; ++g) {
        const PrimeScalar candidate(p, static_cast<std::int64_t>(g));
        if (candidate.pow(static_cast<std::uint64_t>(d)).value != 1) continue;
        bool primitive = true;
        PrimeScalar power(p, 1);
        for (int k = 1; k < d && primitive; ++k) {
            power = power * candidate;
            primitive = power.value != 1;
        }
        if (primitive) return candidate;
    }
    throw DomainError("root_of_unity: no primitive root found");
}

PrimeScalar PrimeScalar::from_rational(std::uint64_t p, const Rational& q) {
    const Integer pm(static_cast<unsigned long>(p));
    Integer num = q.get_num() % pm;
    Integer den = q.get_den() % pm;
    if (den == 0) throw DivisionByZero("PrimeScalar: denominator divisible by p");
    PrimeScalar n(p, num.get_si());
    PrimeScalar dd(p, den.get_si());
    return n * dd.inverse();
}

}  // namespace waring
