#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "waring/verify.hpp"

using namespace waring;

namespace {

/// scale * target - sum of terms, built by repeated multiplication.
SparsePoly difference_by_multiplication(const PowerDecomposition& dec) {
    SparsePoly diff = dec.target_poly() * Cyc(dec.order, dec.scale);
    for (const auto& t : dec.terms) diff -= oracle::power_by_multiplication(t.form, t.exponent) * t.coeff;
    return diff;
}

}  // namespace

TEST_CASE("both verification modes confirm every scheme up to d = 4") {
    for (Scheme scheme : {Scheme::Main, Scheme::Classical, Scheme::Gurvits, Scheme::Monomial}) {
        for (int d = 1; d <= 4; ++d) {
            const auto dec = make_decomposition(scheme, d);
            const auto expand = verify_power_decomposition(dec, {VerifyMode::Expand, 1, false});
            const auto stream = verify_power_decomposition(dec, {VerifyMode::Stream, 1, false});
            CHECK(expand.equal);
            CHECK(stream.equal);
            CHECK(expand.monomials_generated == stream.monomials_generated);
            CHECK(expand.monomials_nonzero == stream.monomials_nonzero);
            if (d <= 3) CHECK(difference_by_multiplication(dec).is_zero());
        }
    }
}

TEST_CASE("a tampered identity is rejected with the smallest witness") {
    auto dec = main_decomposition(3);
    dec.terms[5].coeff = dec.terms[5].coeff * Integer(2);
    const auto diff = difference_by_multiplication(dec);
    REQUIRE_FALSE(diff.is_zero());
    const auto sorted = diff.sorted_terms();
    const Monomial smallest = sorted.front().first;
    for (VerifyMode mode : {VerifyMode::Expand, VerifyMode::Stream}) {
        const auto r = verify_power_decomposition(dec, {mode, 1, true});
        CHECK_FALSE(r.equal);
        REQUIRE(r.witness.has_value());
        CHECK(r.witness->monomial == smallest);
        CHECK(r.witness->expected - r.witness->actual == diff.coefficient(smallest));
        CHECK(r.diff.size() == diff.size());
    }
}

TEST_CASE("a dropped term is rejected") {
    auto dec = classical_decomposition(3);
    dec.terms.pop_back();
    CHECK_FALSE(verify_power_decomposition(dec, {VerifyMode::Expand, 1, false}).equal);
    CHECK_FALSE(verify_power_decomposition(dec, {VerifyMode::Stream, 1, false}).equal);
}

TEST_CASE("parallel verification matches sequential") {
    const auto dec = main_decomposition(4);
    for (VerifyMode mode : {VerifyMode::Expand, VerifyMode::Stream}) {
        const auto a = verify_power_decomposition(dec, {mode, 1, false});
        const auto b = verify_power_decomposition(dec, {mode, 3, false});
        CHECK(a.equal == b.equal);
        CHECK(a.monomials_generated == b.monomials_generated);
        CHECK(a.monomials_nonzero == b.monomials_nonzero);
    }
}

TEST_CASE("closed-form coefficient matches a brute-force expansion") {
    for (int d = 2; d <= 4; ++d) {
        SparsePoly sum(d);
        for (int j = 1; j <= d; ++j) {
            LinForm form(d, d);
            for (int i = 1; i <= d; ++i) form.coeffs()(i, i) = Cyc::root(d, static_cast<long>(i) * j);
            const long sign = (d + 1) * j % 2 == 0 ? 1 : -1;
            sum += oracle::power_by_multiplication(form, d) * Cyc(d, sign);
        }
        std::vector<int> entries(static_cast<std::size_t>(d), 1);
        std::size_t seen = 0;
        while (true) {
            ++seen;
            std::vector<VarId> vars;
            for (int e : entries) vars.push_back({e, e});
            CHECK(lemma_coefficient(MultiIndex(entries, d), d) == sum.coefficient(Monomial::from_vars(vars)));
            int pos = d - 1;
            while (pos >= 0 && entries[static_cast<std::size_t>(pos)] == d) --pos;
            if (pos < 0) break;
            const int next = entries[static_cast<std::size_t>(pos)] + 1;
            for (int k = pos; k < d; ++k) entries[static_cast<std::size_t>(k)] = next;
        }
        CHECK(Integer(static_cast<long>(seen)) == binomial(2 * d - 1, d));
        const auto report = verify_lemma(d);
        CHECK(report.agree);
        CHECK(report.monomials == seen);
    }
}

TEST_CASE("determinant coefficients") {
    CHECK(det_coefficient({{1, 2, 3}, {1, 2, 3}}).is_one());
    CHECK(det_coefficient({{1, 2, 3}, {2, 1, 3}}) == Cyc(1, -1L));
    CHECK(det_coefficient({{1, 2, 3}, {1, 1, 3}}).is_zero());
    CHECK(det_coefficient({{1, 1, 3}, {1, 2, 3}}).is_zero());
}

TEST_CASE("product identity check") {
    const auto r = verify_product_identity(krishna_makam_det3());
    CHECK(r.equal);
    CHECK(r.final_monomials == 6);
    auto broken = krishna_makam_det3();
    broken.terms[0].sign = -broken.terms[0].sign;
    CHECK_FALSE(verify_product_identity(broken).equal);
}
