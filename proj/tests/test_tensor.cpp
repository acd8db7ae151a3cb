#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bcdaha/tensor_model.hpp"

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

TEST_CASE("module realizations of small weights") {
    // trivial weight
    CHECK(build_w(mk(1, 3, 1, 0, {0}, {0, 0}, {rat(1)})).dimension == 1);
    // vector representation of U(2)
    WModule vec = build_w(mk(1, 3, 1, 0, {0}, {1, 0}, {rat(1)}));
    CHECK(vec.dimension == 2);
    CHECK(vec.weights[vec.highestWeightIndex] == std::vector<long>{1, 0});
    // inverse determinant character
    WModule det = build_w(mk(1, 3, 1, 0, {0}, {-1, -1}, {rat(1)}));
    CHECK(det.dimension == 1);
    CHECK(det.weights[0] == std::vector<long>{-1, -1});
    CHECK(det.glAction[0].get(0, 0) == -1);  // E_11 acts by -1
    // a three-dimensional twisted symmetric square
    CHECK(build_w(mk(1, 3, 1, 0, {0}, {1, -1}, {rat(1)})).dimension == 3);
}

TEST_CASE("invariant subspace dimensions") {
    CHECK(TensorModel(kCaseA).dim() == 2);
    CHECK(TensorModel(kRankTwo).dim() == 4);
    CHECK(TensorModel(kCaseB).dim() == 1);
    // inadmissible: no invariants
    CHECK(TensorModel(mk(1, 2, 1, 0, {1}, {0}, {rat(1, 2)})).dim() == 0);
}

TEST_CASE("sign generator acts diagonally on case A") {
    TensorModel model(kCaseA);
    // basis ordered by tuple: (w, e_1), (w, e_2)
    CHECK(model.generator_matrix(0) == ExactMatrix::diagonal({Rational(1), Rational(-1)}));
}

TEST_CASE("swap generator is an involution on the rank-two model") {
    TensorModel model(kRankTwo);
    const ExactMatrix& s = model.generator_matrix(0);
    CHECK(s * s == ExactMatrix::identity(4));
    CHECK(model.element_matrix(SignedPermutation::identity(2)) == ExactMatrix::identity(4));
}

TEST_CASE("case A commuting generator has the principal-series spectrum") {
    TensorModel model(kCaseA);
    auto spec = rational_spectrum(model.y_matrix(1));
    REQUIRE(spec.size() == 2);
    CHECK(spec[0].first == -kCaseA.nu[0] / 2);
    CHECK(spec[1].first == kCaseA.nu[0] / 2);
    ExactMatrix v = model.varpi(1);
    CHECK(model.y_matrix(1) * v == v.scaled(kCaseA.nu[0] / 2));
}

TEST_CASE("case B collapses to a scalar") {
    TensorModel model(kCaseB);
    CHECK(model.y_matrix(1) == ExactMatrix::identity(1).scaled(rat(1, 2)));
    CHECK(model.generator_matrix(0) == ExactMatrix::identity(1).scaled(-1));
}

TEST_CASE("rank-two model spectrum contains the table value") {
    TensorModel model(kRankTwo);
    auto spec = rational_spectrum(model.y_matrix(1));
    bool found = false;
    for (const auto& [val, mult] : spec) found = found || val == rat(1, 3) / 2 + rat(1, 2);
    CHECK(found);
}

TEST_CASE("relation constants are the subgroup-cross ones, not the normalized pair") {
    TensorModel model(kCaseA);
    DerivedParams d = derive(kCaseA);
    // The literal reading of the normalized parameters attaches
    // (p-q-mu N)/2 to the swap relations and 1 to the sign relation; the
    // model satisfies the transposed assignment (1, p-q-mu N) instead.
    DahaPresentation literal = make_presentation_bc(1, d.kappa1, d.kappa2);
    CHECK(!verify_linear_rep(literal, model.rep()).all_pass);
    DahaPresentation actual = make_presentation_bc(1, d.sConst, d.gConst);
    CHECK(verify_linear_rep(actual, model.rep()).all_pass);
}

TEST_CASE("full relation suite on the small models") {
    for (const auto& params : {kCaseA, kCaseB, kRankTwo}) {
        TensorModel model(params);
        CHECK(verify_linear_rep(target_presentation(params), model.rep()).all_pass);
    }
}

TEST_CASE("distinguished vectors: invariance, sign action, spanning") {
    for (const auto& params : {kCaseA, kRankTwo, mk(1, 2, 2, 0, {-1}, {-1}, {rat(2, 7)})}) {
        TensorModel model(params);
        std::vector<std::string> failures;
        CHECK(model.proposition_checks(&failures));
        for (const auto& f : failures) MESSAGE(f);
        CHECK(model.orbit_spans());
    }
}

TEST_CASE("varpi is fixed by the block swap in the rank-two model") {
    TensorModel model(kRankTwo);
    ExactMatrix v = model.varpi(1);
    CHECK(model.generator_matrix(0) * v == v);
    CHECK(!v.is_zero());
}

TEST_CASE("varpi index bounds") {
    TensorModel model(kCaseA);
    CHECK_THROWS_AS(model.varpi(0), std::out_of_range);
    CHECK_THROWS_AS(model.varpi(2), std::out_of_range);
}

TEST_CASE("orbit spanning is vacuous on the zero space") {
    TensorModel model(mk(1, 2, 1, 0, {1}, {0}, {rat(1, 2)}));
    CHECK(model.dim() == 0);
    CHECK(model.orbit_spans());
}

TEST_CASE("guardrail rejects oversized tensor spaces") {
    CHECK_THROWS_AS(TensorModel(kRankTwo, Integer(3)), GuardrailExceeded);
}

TEST_CASE("seed dimension two: xi-block Specht structure") {
    FunctorParams params = mk(1, 3, 3, 0, {2}, {0, -1}, {rat(3, 8)});
    TensorModel model(params);
    CHECK(model.dim() == 2);
    ExactMatrix table = eigenvalue_table(params);
    for (long s = 1; s <= 2; ++s) {
        ExactMatrix v = model.varpi(s);
        for (long k = 1; k <= 3; ++k)
            CHECK(model.y_matrix(k) * v == v.scaled(table.get(k - 1, s - 1)));
    }
}
