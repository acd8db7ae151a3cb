#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bcdaha/central_char.hpp"

#include <map>
#include <vector>

using namespace bcd;

namespace {

// Independent oracle for the restricted Casimir elements: normal-order the
// degree-k Casimir in the universal enveloping algebra (lowering factors
// left, diagonal middle, raising right) and keep the purely diagonal part.
namespace pbw {

using Factor = std::pair<int, int>;   // E_{ab}, 1-based
using Monomial = std::vector<Factor>;

int cls(const Factor& f) { return f.first > f.second ? 0 : (f.first == f.second ? 1 : 2); }

bool out_of_order(const Factor& a, const Factor& b) {
    auto key = [](const Factor& f) { return std::tuple(cls(f), f.first, f.second); };
    return key(a) > key(b);
}

MultiPoly diagonal_projection(long k, long N) {
    std::map<Monomial, Rational> work, diag;
    // Casimir: sum over index cycles i1 -> i2 -> ... -> ik -> i1.
    std::vector<int> idx(k, 1);
    while (true) {
        Monomial m;
        for (long t = 0; t < k; ++t) m.push_back({idx[t], idx[(t + 1) % k]});
        work[m] += 1;
        long pos = k - 1;
        while (pos >= 0 && idx[pos] == N) idx[pos--] = 1;
        if (pos < 0) break;
        ++idx[pos];
    }
    while (!work.empty()) {
        auto it = work.begin();
        Monomial m = it->first;
        Rational c = it->second;
        work.erase(it);
        if (c == 0) continue;
        std::size_t swapAt = m.size();
        for (std::size_t i = 0; i + 1 < m.size(); ++i)
            if (out_of_order(m[i], m[i + 1])) {
                swapAt = i;
                break;
            }
        if (swapAt == m.size()) {
            diag[m] += c;
            continue;
        }
        // E_ab E_cd = E_cd E_ab + delta_bc E_ad - delta_da E_cb
        auto [a, b] = m[swapAt];
        auto [cc, dd] = m[swapAt + 1];
        Monomial swapped = m;
        std::swap(swapped[swapAt], swapped[swapAt + 1]);
        work[swapped] += c;
        if (b == cc) {
            Monomial reduced = m;
            reduced.erase(reduced.begin() + swapAt + 1);
            reduced[swapAt] = {a, dd};
            work[reduced] += c;
        }
        if (dd == a) {
            Monomial reduced = m;
            reduced.erase(reduced.begin() + swapAt + 1);
            reduced[swapAt] = {cc, b};
            work[reduced] -= c;
        }
    }
    MultiPoly out;
    for (const auto& [m, c] : diag) {
        if (c == 0) continue;
        bool pureDiagonal = true;
        for (const auto& f : m) pureDiagonal = pureDiagonal && f.first == f.second;
        if (!pureDiagonal) continue;  // lies in n_- U + U n_+
        MultiPoly term = MultiPoly::constant(c);
        for (const auto& f : m) term = term * MultiPoly::var("E" + std::to_string(f.first));
        out = out + term;
    }
    return out;
}

}  // namespace pbw

MultiPoly nu(long i) { return MultiPoly::var("nu" + std::to_string(i)); }
MultiPoly mu() { return MultiPoly::var("mu"); }
MultiPoly tau() { return MultiPoly::var("tau"); }
MultiPoly cst(long num, long den = 1) { return MultiPoly::constant(rat(num, den)); }

MultiPoly sum_nu_sq(long p) {
    MultiPoly acc;
    for (long i = 1; i <= p; ++i) acc = acc + nu(i) * nu(i);
    return acc;
}

// Verbatim transcriptions of the reference polynomials for the two cases.
MultiPoly reference_c2_case1(long p, long q) {
    return cst(1, 2) * sum_nu_sq(p) + cst(-p * p * p, 6) + cst(-p * q * q, 2) + cst(p, 6) +
           cst(1, 2) + cst(p - q) * mu() +
           (cst(-p * p * p) + cst(p * q * q)) * cst(1, 2) * mu() * mu() - cst(2) * tau() +
           cst(p + q) * tau() * tau();
}

MultiPoly reference_c3_case1(long p, long q, long k) {
    MultiPoly m = mu(), t = tau();
    MultiPoly s = sum_nu_sq(p);
    MultiPoly out = cst(p + q, 4) * s - cst(3, 4) * nu(k) * nu(k);
    out = out + cst(-p * q * q * q, 4) + cst(-p * p * q * q, 4) + cst(q * q, 4) +
          cst(-p * p * p * q, 12) + cst(7 * p * q, 12) + cst(q, 4) + cst(-p * p * p * p, 12) +
          cst(p * p, 3) + cst(p, 4) - cst(1);
    out = out + cst(-3 * (p - q), 4) * m * s;
    out = out + (cst(p * q * q * q, 4) + cst(-3 * p * p * q * q, 4) + cst(-p * p * p * q, 4) +
                 cst(3 * p * p * p * p, 4)) * m * m * m;
    out = out + (cst(p * q * q * q, 4) + cst(p * p * q * q, 4) + cst(-3 * q * q, 4) +
                 cst(-p * p * p * q, 4) + cst(3 * p * q, 2) + cst(-p * p * p * p, 4) +
                 cst(-3 * p * p, 4)) * m * m;
    out = out + (cst(-p * q * q * q, 4) + cst(3 * p * p * q * q, 4) + cst(-q * q, 2) +
                 cst(-3 * p * p * p * q, 4) + cst(p * q, 4) + cst(3 * q, 4) +
                 cst(p * p * p * p, 4) + cst(p * p, 4) + cst(-3 * p, 4)) * m;
    out = out + cst(3, 2) * t * s + cst(p + q) * t * t * t - cst(3) * t * t;
    out = out + (cst(3 * p * q * q, 2) + cst(-3 * p * p * p, 2)) * m * m * t;
    out = out + (cst(-3 * q) + cst(3 * p)) * m * t;
    out = out + (cst(-3 * p * q * q, 2) + cst(-p * p * p, 2) + cst(p, 2)) * t + cst(3, 2) * t;
    return out;
}

MultiPoly reference_c2_case2(long p, long q) {
    return cst(1, 2) * sum_nu_sq(p) + cst(-p * q * q, 2) + cst(q) + cst(-p * p * p, 6) +
           cst(-5 * p, 6) + (cst(p * q * q, 2) + cst(-p * p * p, 2)) * mu() * mu() +
           cst(2 * p) * mu() - cst(2) * tau() + cst(p + q) * tau() * tau();
}

MultiPoly reference_c3_case2(long p, long q) {
    MultiPoly m = mu(), t = tau();
    MultiPoly s = sum_nu_sq(p);
    MultiPoly out = cst(p + q, 4) * s;
    out = out + cst(-p * q * q * q, 4) + cst(-p * p * q * q, 4) + cst(-p * p * p * q, 12) +
          cst(25 * p * q, 12) + cst(-p * p * p * p, 12) + cst(-11 * p * p, 12) - cst(1);
    out = out + cst(3 * (q - p), 4) * m * s;
    out = out + (cst(p * q * q * q, 4) + cst(-3 * p * p * q * q, 4) + cst(-p * p * p * q, 4) +
                 cst(3 * p * p * p * p, 4)) * m * m * m;
    out = out + (cst(p * q * q * q, 4) + cst(p * p * q * q, 4) + cst(-p * p * p * q, 4) +
                 cst(-p * p * p * p, 4) + cst(-3 * p * p)) * m * m;
    out = out + (cst(-p * q * q * q, 4) + cst(3 * p * p * q * q, 4) + cst(-3 * p * p * p * q, 4) +
                 cst(-7 * p * q, 4) + cst(p * p * p * p, 4) + cst(15 * p * p, 4)) * m;
    out = out + (cst(-5 * p, 2) + cst(-p * p * p, 2) + cst(3 * q) + cst(-3 * p * q * q, 2)) * t;
    out = out + cst(6 * p) * m * t +
          (cst(-3 * p * p * p, 2) + cst(3 * p * q * q, 2)) * m * m * t;
    out = out - cst(3) * t * t + cst(p + q) * t * t * t;
    return out;
}

FunctorParams mk(long p, long q, long n, const Rational& muv, std::vector<long> nvec,
                 std::vector<long> xi, std::vector<Rational> nuv) {
    FunctorParams f;
    f.p = p;
    f.q = q;
    f.n = n;
    f.mu = muv;
    f.nvec = std::move(nvec);
    f.xi = std::move(xi);
    f.nu = std::move(nuv);
    return f;
}

}  // namespace

TEST_CASE("restricted Casimir transcriptions match the enveloping-algebra oracle") {
    for (long N = 1; N <= 5; ++N) {
        CHECK(casimir_restriction(2, N).poly == pbw::diagonal_projection(2, N));
        CHECK(casimir_restriction(3, N).poly == pbw::diagonal_projection(3, N));
    }
}

TEST_CASE("restricted Casimir small cases") {
    MultiPoly e1 = MultiPoly::var("E1"), e2 = MultiPoly::var("E2");
    CHECK(casimir_restriction(2, 1).poly == e1 * e1);
    CHECK(casimir_restriction(2, 2).poly == e1 * e1 + e2 * e2 + e1 - e2);
    CHECK(casimir_restriction(3, 4).poly.total_degree() == 3);
    CHECK_THROWS_AS(casimir_restriction(4, 2), std::invalid_argument);
}

TEST_CASE("case 1 central values at the base point") {
    InfinitesimalCharacter chi = make_character(1, 2, CharacterCase::Case1);
    CentralValues cv = evaluate_character(chi);
    std::map<std::string, Rational> at{{"mu", 0}, {"tau", 0}, {"nu1", rat(3, 5)}};
    CHECK(cv.c2.evaluate(at) == rat(3, 5) * rat(3, 5) / 2 - rat(3, 2));
    CHECK(cv.c3.evaluate(at) == rat(-1));
}

TEST_CASE("case 2 central values at the base point") {
    InfinitesimalCharacter chi = make_character(1, 2, CharacterCase::Case2);
    CentralValues cv = evaluate_character(chi);
    std::map<std::string, Rational> at{{"mu", 0}, {"tau", 0}, {"nu1", rat(3, 7)}};
    CHECK(cv.c2.evaluate(at) == rat(3, 7) * rat(3, 7) / 2 - 1);
}

TEST_CASE("pipeline output matches the reference polynomials") {
    const std::vector<std::pair<long, long>> pairs{{1, 2}, {1, 3}, {2, 3}};
    for (const auto& [p, q] : pairs) {
        for (long k = 1; k <= p; ++k) {
            CentralValues cv = evaluate_character(make_character(p, q, CharacterCase::Case1, k));
            CHECK(cv.c2 == reference_c2_case1(p, q));
            CHECK(cv.c3 == reference_c3_case1(p, q, k));
        }
        CentralValues cv2 = evaluate_character(make_character(p, q, CharacterCase::Case2));
        CHECK(cv2.c2 == reference_c2_case2(p, q));
        // Known defect in the case-2 degree-3 reference: it drops the
        // (3 tau / 2) sum nu_i^2 term that case 1 carries. The pipeline is
        // adjudicated by the square identity, which only the full version
        // satisfies; assert the discrepancy verbatim.
        CHECK(cv2.c3 - reference_c3_case2(p, q) == cst(3, 2) * tau() * sum_nu_sq(p));
    }
}

TEST_CASE("shortened tail variant fails by a known polynomial") {
    // Dropping the final tail term of the closed formula breaks the square
    // identity by exactly tau^2 (1 - mu^2) + (q - p) mu tau (1 - mu), which
    // vanishes on the tau = 0 and mu = 1 slices.
    const std::vector<std::pair<long, long>> pairs{{1, 2}, {1, 3}, {2, 3}};
    for (const auto& [p, q] : pairs) {
        InfinitesimalCharacter chi = make_character(p, q, CharacterCase::Case1);
        MultiPoly full = ycc_rhs(evaluate_character(chi), p, q);
        MultiPoly m = mu(), t = tau();
        MultiPoly correction = t * t * (cst(1) - m * m) + cst(q - p) * m * t * (cst(1) - m);
        MultiPoly shortened = full - correction;
        CHECK(case_target(chi) - shortened == correction);
        CHECK(!(shortened == case_target(chi)));
    }
}

TEST_CASE("the shift belongs on the diagonal coordinates") {
    InfinitesimalCharacter chi = make_character(1, 2, CharacterCase::Case1);
    CHECK(evaluate_character(chi, ShiftOrder::OnDiagonalCoordinates).c2 ==
          reference_c2_case1(1, 2));
    CHECK(!(evaluate_character(chi, ShiftOrder::OnCompactPartOnly).c2 ==
            reference_c2_case1(1, 2)));
}

TEST_CASE("square identities hold symbolically") {
    const std::vector<std::pair<long, long>> pairs{{1, 2}, {1, 3}, {2, 3}};
    for (const auto& [p, q] : pairs) {
        for (long k = 1; k <= p; ++k) {
            InfinitesimalCharacter chi = make_character(p, q, CharacterCase::Case1, k);
            CHECK(ycc_rhs(evaluate_character(chi), p, q) == case_target(chi));
        }
        InfinitesimalCharacter chi2 = make_character(p, q, CharacterCase::Case2);
        CHECK(ycc_rhs(evaluate_character(chi2), p, q) == case_target(chi2));
    }
}

TEST_CASE("case 2 target value for (1,2) in closed form") {
    InfinitesimalCharacter chi = make_character(1, 2, CharacterCase::Case2);
    MultiPoly m = mu();
    MultiPoly expect = (cst(1, 2) + cst(3, 2) * m) * (cst(1, 2) + cst(3, 2) * m);
    CHECK(case_target(chi) == expect);
    CHECK(ycc_rhs(evaluate_character(chi), 1, 2) == expect);
}

TEST_CASE("equal-rank branch") {
    for (long p : {1L, 2L})
        for (long k = 1; k <= p; ++k) {
            InfinitesimalCharacter chi = make_character(p, p, CharacterCase::Case1PEqualsQ, k);
            CHECK(ycc_rhs(evaluate_character(chi), p, p) == case_target(chi));
        }
}

TEST_CASE("rank-one end-to-end cross-checks") {
    EndToEndResult a = end_to_end_check(mk(1, 2, 1, 0, {-1}, {0}, {rat(3, 5)}));
    CHECK(a.applicable);
    CHECK(a.pass);
    CHECK(a.modelValue == rat(9, 100));

    EndToEndResult b = end_to_end_check(mk(1, 2, 1, 0, {0}, {-1}, {rat(3, 7)}));
    CHECK(b.applicable);
    CHECK(b.pass);
    CHECK(b.modelValue == rat(1, 4));

    EndToEndResult c = end_to_end_check(mk(1, 1, 1, 0, {0}, {}, {rat(2)}));
    CHECK(c.applicable);
    CHECK(c.caseName == "case1(p=q)");
    CHECK(c.pass);
    CHECK(c.modelValue == 1);
}

TEST_CASE("end-to-end with both parameters nonzero") {
    EndToEndResult r = end_to_end_check(mk(1, 2, 1, 2, {3}, {-1}, {rat(7, 3)}));
    CHECK(r.applicable);
    CHECK(r.caseName == "case1");
    CHECK(r.pass);

    EndToEndResult k = end_to_end_check(mk(1, 2, 1, -1, {-1}, {0}, {rat(8, 3)}));
    CHECK(k.applicable);
    CHECK(k.caseName == "case2");
    CHECK(k.pass);
    CHECK(k.modelValue == 1);

    // case 2 away from tau = 0
    EndToEndResult q = end_to_end_check(mk(1, 2, 1, 0, {2}, {0}, {rat(5, 4)}));
    CHECK(q.applicable);
    CHECK(q.caseName == "case2");
    CHECK(q.pass);
    CHECK(q.modelValue == rat(1, 4));

    // equal ranks with mu and tau both nonzero
    EndToEndResult r2 = end_to_end_check(mk(1, 1, 1, 2, {0}, {}, {rat(3)}));
    CHECK(r2.applicable);
    CHECK(r2.caseName == "case1(p=q)");
    CHECK(r2.pass);
    CHECK(r2.modelValue == rat(9, 4));
}
