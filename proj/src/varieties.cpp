#include "waring/varieties.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <sstream>

#include "waring/linalg.hpp"
#include "waring/parallel.hpp"
#include "waring/perm.hpp"

namespace waring {

namespace {

int wrap(int i, int d) {
    const int r = ((i - 1) % d + d) % d;
    return r + 1;
}

std::string var_name(int i, int j) {
    return "x" + std::to_string(i) + std::to_string(j);
}

std::vector<int> complement(std::span<const int> chosen, int d) {
    std::vector<int> out;
    for (int i = 1; i <= d; ++i)
        if (std::find(chosen.begin(), chosen.end(), i) == chosen.end()) out.push_back(i);
    return out;
}

std::string index_list(std::span<const int> v) {
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + std::to_string(v[k]);
    return out;
}

SparsePoly monomial_poly(int order, std::initializer_list<VarId> vars) {
    SparsePoly p(order);
    p.add_term(Monomial::from_vars(std::vector<VarId>(vars)), Cyc(order, 1L));
    return p;
}

}  // namespace

std::size_t QuadricSet::count(std::string_view family) const {
    return static_cast<std::size_t>(
        std::count_if(generators.begin(), generators.end(), [&](const Generator& g) { return g.family == family; }));
}

SparsePoly row_sum(int d, int i, int order) {
    const int row = wrap(i, d);
    SparsePoly p(order);
    for (int j = 1; j <= d; ++j) p.add_term(Monomial::from_vars(std::vector<VarId>{{row, j}}), Cyc(order, 1L));
    return p;
}

QuadricSet quadric_generators(int d) {
    if (d < 2 || d > kMaxDim) throw DomainError("quadric_generators: d must lie in [2, 16]");
    QuadricSet set;
    set.d = d;
    for (int i = 1; i <= d; ++i)
        for (int j1 = 1; j1 <= d; ++j1)
            for (int j2 = j1 + 1; j2 <= d; ++j2)
                set.generators.push_back({"row", var_name(i, j1) + "*" + var_name(i, j2), monomial_poly(d, {{i, j1}, {i, j2}})});
    for (int j = 1; j <= d; ++j)
        for (int i1 = 1; i1 <= d; ++i1)
            for (int i2 = i1 + 1; i2 <= d; ++i2)
                set.generators.push_back({"column", var_name(i1, j) + "*" + var_name(i2, j), monomial_poly(d, {{i1, j}, {i2, j}})});
    for (int i = 1; i <= d; ++i) {
        const SparsePoly rho = row_sum(d, i, d);
        SparsePoly g = rho * rho - row_sum(d, i - 1, d) * row_sum(d, i + 1, d);
        const std::string label = "rho" + std::to_string(i) + "^2 - rho" + std::to_string(wrap(i - 1, d)) + "*rho" + std::to_string(wrap(i + 1, d));
        set.generators.push_back({"rho", label, std::move(g)});
    }
    return set;
}

std::vector<CycMatrix> decomposition_points(int d) {
    std::vector<CycMatrix> points;
    for (const auto& sigma : all_permutations(d))
        for (int j = 1; j <= d; ++j) {
            CycMatrix x(d, d);
            for (int i = 1; i <= d; ++i) x(i, sigma(i)) = Cyc::root(d, static_cast<long>(i) * j);
            points.push_back(std::move(x));
        }
    return points;
}

std::optional<std::size_t> first_nonvanishing(const std::vector<Generator>& generators, const CycMatrix& x) {
    for (std::size_t g = 0; g < generators.size(); ++g)
        if (!generators[g].poly.evaluate(x).is_zero()) return g;
    return std::nullopt;
}

VanishReport vanish_on_points(const std::vector<Generator>& generators, int d) {
    if (d < 2 || d > 6) throw DomainError("vanish_on_points: d must lie in [2, 6]");
    const auto points = decomposition_points(d);
    VanishReport report;
    report.ok = true;
    report.generators = generators.size();
    report.points = points.size();
    for (std::size_t g = 0; g < generators.size(); ++g)
        for (std::size_t q = 0; q < points.size(); ++q) {
            ++report.evaluations;
            if (generators[g].poly.evaluate(points[q]).is_zero()) continue;
            if (report.ok) report.witness = std::make_pair(g, q);
            report.ok = false;
        }
    return report;
}

VanishReport vanish_on_points(int d) {
    return vanish_on_points(quadric_generators(d).generators, d);
}

ExtraGenerators extra_generators(int d) {
    if (d != 3 && d != 4) throw DomainError("extra_generators: d must be 3 or 4");
    ExtraGenerators out;
    out.d = d;
    if (d == 3) {
        for (int a = 1; a <= 3; ++a)
            for (int b = 1; b <= 3; ++b) {
                const std::vector<int> row{a};
                const std::vector<int> col{b};
                const SparsePoly square = monomial_poly(d, {{a, b}, {a, b}});
                const SparsePoly per = permanent_poly(complement(row, d), complement(col, d), d);
                out.squares.push_back({"square", var_name(a, b) + "^2 - P[" + std::to_string(a) + ";" + std::to_string(b) + "]", square - per});
            }
        return out;
    }
    for (int i = 1; i <= 4; ++i)
        for (int j1 = 1; j1 <= 4; ++j1)
            for (int j2 = j1 + 1; j2 <= 4; ++j2) {
                const std::vector<int> rows{wrap(i - 1, 4), wrap(i + 1, 4)};
                const std::vector<int> cols = complement(std::vector<int>{j1, j2}, 4);
                const SparsePoly squares = monomial_poly(d, {{i, j1}, {i, j1}}) + monomial_poly(d, {{i, j2}, {i, j2}});
                const std::string label = var_name(i, j1) + "^2 + " + var_name(i, j2) + "^2 - P[" + std::to_string(i) + "," +
                                          std::to_string(wrap(i + 2, 4)) + ";" + std::to_string(j1) + "," + std::to_string(j2) + "]";
                out.squares.push_back({"square", label, squares - permanent_poly(rows, cols, d)});
            }
    // P_{A;J} is the permanent on the rows and columns complementary to A and J.
    std::vector<std::vector<int>> pairs;
    for (int a = 1; a <= 4; ++a)
        for (int b = a + 1; b <= 4; ++b) pairs.push_back({a, b});
    for (const auto& rows_a : pairs) {
        const auto rows_b = complement(rows_a, 4);
        if ((rows_a[0] + rows_a[1] - rows_b[0] - rows_b[1]) % 4 != 0) continue;
        for (const auto& cols_j : pairs) {
            ++out.raw_differences;
            // (A, J) and (B, J^c) give negatives of each other; keep the one with 1 in A.
            if (rows_a[0] != 1) continue;
            const auto cols_jc = complement(cols_j, 4);
            SparsePoly g = permanent_poly(rows_b, cols_jc, d) - permanent_poly(rows_a, cols_j, d);
            const std::string label = "P[" + index_list(rows_a) + ";" + index_list(cols_j) + "] - P[" + index_list(rows_b) + ";" +
                                      index_list(cols_jc) + "]";
            out.differences.push_back({"permanent_difference", label, std::move(g)});
        }
    }
    return out;
}

bool in_monomial_ideal(const Monomial& m) {
    const auto codes = m.codes();
    for (std::size_t k = 0; k < codes.size(); ++k)
        for (std::size_t l = k + 1; l < codes.size(); ++l) {
            if (codes[k] == codes[l]) continue;
            const VarId a = VarId::from_code(codes[k]);
            const VarId b = VarId::from_code(codes[l]);
            if (a.row == b.row || a.col == b.col) return true;
        }
    return false;
}

ReductionReport reduce_rho_quadrics() {
    const QuadricSet set = quadric_generators(3);
    const ExtraGenerators extra = extra_generators(3);
    ReductionReport report;
    report.ok = true;
    int i = 0;
    for (const auto& g : set.generators) {
        if (g.family != "rho") continue;
        RowReduction row;
        row.i = ++i;
        // One equation per monomial outside the ideal.
        std::set<Monomial> outside;
        for (const auto& [m, c] : g.poly.terms())
            if (!in_monomial_ideal(m)) outside.insert(m);
        for (const auto& e : extra.squares)
            for (const auto& [m, c] : e.poly.terms())
                if (!in_monomial_ideal(m)) outside.insert(m);
        std::vector<std::vector<Rational>> a;
        std::vector<Rational> b;
        for (const auto& m : outside) {
            std::vector<Rational> eq;
            for (const auto& e : extra.squares) eq.push_back(*e.poly.coefficient(m).as_rational());
            a.push_back(std::move(eq));
            b.push_back(*g.poly.coefficient(m).as_rational());
        }
        const auto solution = solve_exact(a, b);
        row.solvable = solution.has_value();
        if (row.solvable) {
            row.coefficients = *solution;
            SparsePoly residual = g.poly;
            for (std::size_t k = 0; k < extra.squares.size(); ++k)
                residual -= extra.squares[k].poly * Cyc(3, row.coefficients[k]);
            for (const auto& [m, c] : residual.sorted_terms()) row.residual.push_back(m);
            row.residual_in_ideal = std::all_of(row.residual.begin(), row.residual.end(), in_monomial_ideal);
        }
        report.ok = report.ok && row.solvable && row.residual_in_ideal;
        report.rows.push_back(std::move(row));
    }
    return report;
}

// ---------------------------------------------------------------------------

namespace {

struct CompiledTerm {
    std::uint64_t coeff;
    int a;
    int b;
};

struct CompiledQuadric {
    bool monomial = false;
    std::vector<CompiledTerm> terms;
};

std::vector<CompiledQuadric> compile(const QuadricSet& set, std::uint64_t p) {
    std::vector<CompiledQuadric> out;
    for (const auto& g : set.generators) {
        CompiledQuadric q;
        q.monomial = g.family != "rho";
        for (const auto& [m, c] : g.poly.sorted_terms()) {
            const auto vars = m.codes();
            if (vars.size() != 2) throw DomainError("finite_field_locus_count: generator is not quadratic");
            const VarId x = VarId::from_code(vars[0]);
            const VarId y = VarId::from_code(vars[1]);
            const auto coeff = PrimeScalar::from_rational(p, *c.as_rational()).value;
            q.terms.push_back({coeff, (x.row - 1) * set.d + (x.col - 1), (y.row - 1) * set.d + (y.col - 1)});
        }
        out.push_back(std::move(q));
    }
    return out;
}

bool vanishes(const CompiledQuadric& q, const std::vector<std::uint64_t>& v, std::uint64_t p) {
    std::uint64_t sum = 0;
    for (const auto& t : q.terms) sum = (sum + t.coeff * (v[static_cast<std::size_t>(t.a)] * v[static_cast<std::size_t>(t.b)] % p)) % p;
    return sum == 0;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
    return PrimeScalar(p, static_cast<std::int64_t>(base)).pow(e).value;
}

// Scales by the inverse of the first nonzero entry in row-major order.
std::vector<std::uint8_t> normalize(const std::vector<std::uint64_t>& v, std::uint64_t p) {
    std::uint64_t inv = 0;
    for (const auto x : v)
        if (x != 0) {
            inv = PrimeScalar(p, static_cast<std::int64_t>(x)).inverse().value;
            break;
        }
    std::vector<std::uint8_t> out;
    for (const auto x : v) out.push_back(static_cast<std::uint8_t>(x * inv % p));
    return out;
}

bool geometric(const std::vector<std::uint64_t>& v, int d, std::uint64_t p) {
    std::vector<std::uint64_t> delta;
    for (int i = 0; i < d; ++i) {
        std::uint64_t found = 0;
        int nonzero = 0;
        for (int j = 0; j < d; ++j)
            if (v[static_cast<std::size_t>(i * d + j)] != 0) {
                found = v[static_cast<std::size_t>(i * d + j)];
                ++nonzero;
            }
        if (nonzero != 1) return false;
        delta.push_back(found);
    }
    const std::uint64_t ratio = delta[1 % static_cast<std::size_t>(d)] * PrimeScalar(p, static_cast<std::int64_t>(delta[0])).inverse().value % p;
    for (std::size_t i = 1; i < delta.size(); ++i)
        if (delta[i] != delta[i - 1] * ratio % p) return false;
    return mod_pow(ratio, static_cast<std::uint64_t>(d), p) == 1;
}

std::set<std::vector<std::uint8_t>> expected_points(int d, std::uint64_t p) {
    const auto zeta = PrimeScalar::root_of_unity(p, d);
    std::set<std::vector<std::uint8_t>> out;
    for (const auto& sigma : all_permutations(d))
        for (int j = 1; j <= d; ++j) {
            std::vector<std::uint64_t> v(static_cast<std::size_t>(d * d), 0);
            for (int i = 1; i <= d; ++i)
                v[static_cast<std::size_t>((i - 1) * d + sigma(i) - 1)] = zeta.pow(static_cast<std::uint64_t>(i * j)).value;
            out.insert(normalize(v, p));
        }
    return out;
}

struct LocusTally {
    std::uint64_t candidates = 0;
    std::uint64_t monomial_solutions = 0;
    std::uint64_t solutions = 0;
    bool geometric_ok = true;
    std::set<std::vector<std::uint8_t>> normalized;

    void consider(const std::vector<CompiledQuadric>& quadrics, const std::vector<std::uint64_t>& v, int d, std::uint64_t p) {
        ++candidates;
        std::size_t g = 0;
        for (; g < quadrics.size() && quadrics[g].monomial; ++g)
            if (!vanishes(quadrics[g], v, p)) return;
        ++monomial_solutions;
        for (; g < quadrics.size(); ++g)
            if (!vanishes(quadrics[g], v, p)) return;
        ++solutions;
        if (!geometric(v, d, p)) geometric_ok = false;
        normalized.insert(normalize(v, p));
    }

    void merge(LocusTally&& other) {
        candidates += other.candidates;
        monomial_solutions += other.monomial_solutions;
        solutions += other.solutions;
        geometric_ok = geometric_ok && other.geometric_ok;
        normalized.merge(other.normalized);
    }
};

// Enumerates nonzero matrices with at most one nonzero entry per row and column.
void for_each_partial_monomial(int d, std::uint64_t p, std::vector<std::uint64_t>& v, std::vector<bool>& used, int row, bool any,
                               const std::function<void()>& visit) {
    if (row == d) {
        if (any) visit();
        return;
    }
    for_each_partial_monomial(d, p, v, used, row + 1, any, visit);
    for (int c = 0; c < d; ++c) {
        if (used[static_cast<std::size_t>(c)]) continue;
        used[static_cast<std::size_t>(c)] = true;
        for (std::uint64_t x = 1; x < p; ++x) {
            v[static_cast<std::size_t>(row * d + c)] = x;
            for_each_partial_monomial(d, p, v, used, row + 1, true, visit);
        }
        v[static_cast<std::size_t>(row * d + c)] = 0;
        used[static_cast<std::size_t>(c)] = false;
    }
}

Integer partial_monomial_count(int d, std::uint64_t p) {
    Integer total = 0;
    for (int k = 1; k <= d; ++k) {
        Integer units = 1;
        for (int t = 0; t < k; ++t) units *= static_cast<unsigned long>(p - 1);
        total += binomial(d, k) * binomial(d, k) * factorial(k) * units;
    }
    return total;
}

}  // namespace

LocusMode default_locus_mode(int d, std::uint64_t p) {
    Integer space = 1;
    for (int k = 0; k < d * d; ++k) space *= static_cast<unsigned long>(p);
    return space <= 100000000 ? LocusMode::Full : LocusMode::Staged;
}

LocusReport finite_field_locus_count(int d, std::uint64_t p, LocusMode mode, unsigned jobs, bool force) {
    if (d < 2 || d > 6) throw DomainError("finite_field_locus_count: d must lie in [2, 6]");
    if (p > 251 || !is_prime(p)) throw DomainError("finite_field_locus_count: p must be a prime below 256");
    if ((p - 1) % static_cast<std::uint64_t>(d) != 0) throw DomainError("finite_field_locus_count: d must divide p - 1");
    if (mode == LocusMode::Full && default_locus_mode(d, p) != LocusMode::Full && !force)
        throw DomainError("finite_field_locus_count: full enumeration needs p^(d^2) <= 10^8");

    const QuadricSet set = quadric_generators(d);
    const auto quadrics = compile(set, p);
    const std::size_t n = static_cast<std::size_t>(d * d);
    LocusTally total;

    if (mode == LocusMode::Full) {
        // Partitioned by the value of the leading entry.
        std::vector<LocusTally> tallies(static_cast<std::size_t>(p));
        parallel_blocks(static_cast<std::size_t>(p), jobs, [&](std::size_t, std::size_t begin, std::size_t end) {
            std::vector<std::uint64_t> v(n, 0);
            for (std::size_t lead = begin; lead < end; ++lead) {
                std::fill(v.begin(), v.end(), 0);
                v[0] = lead;
                auto& tally = tallies[lead];
                while (true) {
                    if (lead != 0 || std::any_of(v.begin() + 1, v.end(), [](std::uint64_t x) { return x != 0; }))
                        tally.consider(quadrics, v, d, p);
                    std::size_t k = n - 1;
                    while (k >= 1 && ++v[k] == p) v[k--] = 0;
                    if (k == 0) break;
                }
            }
        });
        for (auto& t : tallies) total.merge(std::move(t));
    } else {
        std::vector<std::uint64_t> v(n, 0);
        std::vector<bool> used(static_cast<std::size_t>(d), false);
        for_each_partial_monomial(d, p, v, used, 0, false, [&] { total.consider(quadrics, v, d, p); });
    }

    LocusReport report;
    report.d = d;
    report.p = p;
    report.mode = mode;
    report.candidates = total.candidates;
    report.affine_solutions = total.solutions;
    report.homogeneous_ok = total.solutions % (p - 1) == 0;
    report.projective_count = total.solutions / (p - 1);
    report.expected = static_cast<std::uint64_t>(d) * factorial(d).get_ui();
    report.geometric_ok = total.geometric_ok;
    report.matches_points = total.normalized == expected_points(d, p) && total.normalized.size() == report.projective_count;
    report.monomial_solutions = total.monomial_solutions;
    report.monomial_consistent = mode == LocusMode::Full ? Integer(static_cast<unsigned long>(total.monomial_solutions)) == partial_monomial_count(d, p)
                                                         : total.monomial_solutions == total.candidates;
    return report;
}

}  // namespace waring
