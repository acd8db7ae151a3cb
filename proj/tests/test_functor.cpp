#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bcdaha/functor_params.hpp"
#include "bcdaha/report.hpp"

using namespace bcd;

namespace {
FunctorParams mk(long p, long q, long n, const Rational& mu, std::vector<long> nvec,
                 std::vector<long> xi, std::vector<Rational> nu) {
    FunctorParams f;
    f.p = p;
    f.q = q;
    f.n = n;
    f.mu = mu;
    f.nvec = std::move(nvec);
    f.xi = std::move(xi);
    f.nu = std::move(nu);
    return f;
}

const FunctorParams kCaseA = mk(1, 2, 1, 0, {-1}, {0}, {rat(3, 5)});
const FunctorParams kCaseB = mk(1, 2, 1, 0, {0}, {-1}, {rat(3, 7)});
const FunctorParams kRankTwo = mk(1, 1, 2, 0, {0}, {}, {rat(1, 3)});
}  // namespace

TEST_CASE("derived quantities for the three reference packs") {
    DerivedParams a = derive(kCaseA);
    CHECK(a.tau == 0);
    CHECK(a.nmu == std::vector<long>{1});
    CHECK(a.ximu == Partition());
    CHECK(a.nXi == 0);
    CHECK(a.kappa1 == rat(-1, 2));

    DerivedParams d = derive(kRankTwo);
    CHECK(d.tau == 1);
    CHECK(d.nmu == std::vector<long>{2});
    CHECK(d.kappa1 == 0);

    DerivedParams b = derive(kCaseB);
    CHECK(b.tau == 0);
    CHECK(b.nmu == std::vector<long>{0});
    CHECK(b.ximu == Partition({1}));
    CHECK(b.nXi == 1);
}

TEST_CASE("well-formedness is enforced") {
    CHECK_THROWS_AS(derive(mk(2, 1, 1, 0, {0, 0}, {}, {rat(1), rat(2)})), std::invalid_argument);
    CHECK_THROWS_AS(derive(mk(1, 2, 1, rat(1, 2), {0}, {0}, {rat(1)})), std::invalid_argument);
    CHECK_THROWS_AS(derive(mk(1, 3, 1, 0, {0}, {0, 1}, {rat(1)})), std::invalid_argument);
}

TEST_CASE("admissibility verdicts") {
    CHECK(validate(kCaseA).admissible);
    CHECK(validate(kRankTwo).admissible);
    Admissibility bad = validate(mk(1, 2, 1, 0, {1}, {0}, {rat(1)}));
    CHECK(!bad.admissible);
    CHECK(!bad.violations.empty());
}

TEST_CASE("closed-form dimensions") {
    CHECK(predicted_dimension(kCaseA).dimension == 2);
    PredictedDimension d = predicted_dimension(kRankTwo);
    CHECK(d.dimension == 4);
    CHECK(d.cmuFactor == 4);
    CHECK(d.spechtDim == 1);
    CHECK(predicted_dimension(kCaseB).dimension == 1);
    CHECK_THROWS_AS(predicted_dimension(mk(1, 2, 1, 0, {1}, {0}, {rat(1)})), std::domain_error);
}

TEST_CASE("eigenvalue tables") {
    ExactMatrix a = eigenvalue_table(kCaseA);
    REQUIRE(a.rows() == 1);
    CHECK(a.get(0, 0) == kCaseA.nu[0] / 2);

    ExactMatrix d = eigenvalue_table(kRankTwo);
    CHECK(d.get(0, 0) == kRankTwo.nu[0] / 2 + rat(1, 2));
    CHECK(d.get(1, 0) == kRankTwo.nu[0] / 2 - rat(1, 2));

    ExactMatrix b = eigenvalue_table(kCaseB);
    CHECK(b.get(0, 0) == rat(1, 2));
}

TEST_CASE("eigenvalue tables are canonical rationals") {
    // Arithmetic on non-canonical values breaks exact comparison; every
    // emitted table entry must be in lowest terms with positive denominator.
    for (const auto& params :
         {kRankTwo, mk(1, 3, 3, 0, {1}, {0, 0}, {rat(6, 5)}),
          mk(2, 2, 3, 0, {0, 1}, {}, {rat(1, 2), rat(5, 2)})}) {
        ExactMatrix t = eigenvalue_table(params);
        for (const auto& [rc, v] : t.entries()) {
            Integer g;
            mpz_gcd(g.get_mpz_t(), v.get_num().get_mpz_t(), v.get_den().get_mpz_t());
            CHECK(g == 1);
            CHECK(v.get_den() > 0);
        }
    }
}

TEST_CASE("first-branch eigenvalues telescope inside a block") {
    FunctorParams m = mk(1, 2, 3, 0, {-1}, {1}, {rat(3, 2)});
    ExactMatrix t = eigenvalue_table(m);
    DerivedParams d = derive(m);
    REQUIRE(d.nmu == std::vector<long>{3});
    for (long k = 1; k < 3; ++k) CHECK(t.get(k - 1, 0) - t.get(k, 0) == 1);
}

TEST_CASE("predicted module for case A is the two-dimensional principal series") {
    InducedModule mod = build_p_tilde(kCaseA);
    CHECK(mod.rep.dim == 2);
    CHECK(verify_linear_rep(target_presentation(kCaseA), mod.rep).all_pass);
    auto spec = rational_spectrum(mod.rep.matrix("y1"));
    REQUIRE(spec.size() == 2);
    CHECK(spec[1].first == kCaseA.nu[0] / 2);
}

TEST_CASE("predicted module for case B is one-dimensional") {
    InducedModule mod = build_p_tilde(kCaseB);
    CHECK(mod.rep.dim == 1);
    CHECK(verify_linear_rep(target_presentation(kCaseB), mod.rep).all_pass);
    CHECK(mod.rep.matrix("g") == ExactMatrix::identity(1).scaled(-1));
    CHECK(mod.rep.matrix("y1") == ExactMatrix::identity(1).scaled(rat(1, 2)));
}

TEST_CASE("predicted rank-two module verifies") {
    InducedModule mod = build_p_tilde(kRankTwo);
    CHECK(mod.rep.dim == 4);
    CHECK(verify_linear_rep(target_presentation(kRankTwo), mod.rep).all_pass);
}

TEST_CASE("induced dimension matches the closed form across shapes") {
    for (const auto& params :
         {kCaseA, kCaseB, kRankTwo, mk(1, 2, 2, 0, {-1}, {-1}, {rat(2, 7)}),
          mk(1, 3, 3, 0, {2}, {0, -1}, {rat(3, 8)}), mk(2, 3, 2, 0, {-1, -1}, {0},
                                                        {rat(1, 5), rat(7, 5)})}) {
        InducedModule mod = build_p_tilde(params);
        CHECK(Integer(mod.rep.dim) == predicted_dimension(params).dimension);
    }
}

TEST_CASE("seed vectors sit inside the induced module as common eigenvectors") {
    FunctorParams params = mk(1, 2, 2, 0, {-1}, {-1}, {rat(2, 7)});
    InducedModule mod = build_p_tilde(params);
    ExactMatrix table = eigenvalue_table(params);
    // The identity coset comes first, so basis vector s is the s-th seed
    // vector; y_k must act on it by the table entry alone.
    for (long s = 0; s < mod.seedDim; ++s)
        for (long k = 1; k <= params.n; ++k) {
            ExactMatrix v(mod.rep.dim, 1);
            v.set(s, 0, 1);
            CHECK(mod.rep.matrix("y" + std::to_string(k)) * v ==
                  v.scaled(table.get(k - 1, s)));
        }
}

TEST_CASE("parameter packs round-trip through JSON") {
    nlohmann::json j = params_to_json(kCaseA);
    FunctorParams back = params_from_json(j);
    CHECK(back.p == kCaseA.p);
    CHECK(back.nvec == kCaseA.nvec);
    CHECK(back.nu == kCaseA.nu);
    CHECK(params_to_json(back) == j);
}

TEST_CASE("malformed parameter documents are rejected") {
    nlohmann::json j = params_to_json(kCaseA);
    j.erase("mu");
    CHECK_THROWS_AS(params_from_json(j), std::invalid_argument);
    nlohmann::json k = params_to_json(kCaseA);
    k["nu"] = {3.5};
    CHECK_THROWS_AS(params_from_json(k), std::invalid_argument);
}
