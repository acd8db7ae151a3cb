#include "bcdaha/central_char.hpp"

#include "bcdaha/tensor_model.hpp"

#include <stdexcept>

namespace bcd {

namespace {
std::string evar(long i) { return "E" + std::to_string(i); }
std::string nuvar(long i) { return "nu" + std::to_string(i); }

MultiPoly c(long num, long den = 1) { return MultiPoly::constant(rat(num, den)); }
}  // namespace

CasimirPoly casimir_restriction(long k, long N) {
    CasimirPoly out;
    out.N = N;
    out.k = k;
    MultiPoly acc;
    if (k == 2) {
        for (long i = 1; i <= N; ++i) {
            MultiPoly e = MultiPoly::var(evar(i));
            acc = acc + e * e + c(N - 2 * i + 1) * e;
        }
    } else if (k == 3) {
        for (long i = 1; i <= N; ++i) {
            MultiPoly e = MultiPoly::var(evar(i));
            acc = acc + e * e * e + c(2 * N - 3 * i + 1) * e * e +
                  c((N - i) * (N - 2 * i + 1)) * e;
        }
        for (long i = 1; i <= N; ++i)
            for (long j = i + 1; j <= N; ++j) {
                MultiPoly ei = MultiPoly::var(evar(i));
                MultiPoly ej = MultiPoly::var(evar(j));
                acc = acc + c(-N + 2 * i - 1) * ej - ei * ej;
            }
    } else {
        throw std::invalid_argument("only degrees 2 and 3 are implemented");
    }
    out.poly = acc;
    return out;
}

InfinitesimalCharacter make_character(long p, long q, CharacterCase tag, long k) {
    if (k < 1 || k > p) throw std::domain_error("lowered position out of range");
    InfinitesimalCharacter chi;
    chi.caseTag = tag;
    chi.p = p;
    chi.q = q;
    chi.k = k;
    MultiPoly mu = MultiPoly::var("mu");
    MultiPoly tau = MultiPoly::var("tau");
    switch (tag) {
        case CharacterCase::Case1: {
            if (q <= p) throw std::domain_error("Case1 requires q > p");
            for (long i = 1; i <= p; ++i) {
                MultiPoly v = c(q - p) * mu + c(2) * tau;
                if (i == k) v = v - c(1);
                chi.lambdaH.push_back(v);
            }
            for (long j = 1; j <= q - p; ++j)
                chi.lambdaB.push_back(c(q - p - 2 * j + 1, 2) - c(p) * mu + tau);
            break;
        }
        case CharacterCase::Case2: {
            if (q <= p) throw std::domain_error("Case2 requires q > p");
            for (long i = 1; i <= p; ++i) chi.lambdaH.push_back(c(q - p) * mu + c(2) * tau);
            for (long j = 1; j <= q - p; ++j) {
                MultiPoly v = c(q - p - 2 * j + 1, 2) - c(p) * mu + tau;
                if (j == q - p) v = v - c(1);
                chi.lambdaB.push_back(v);
            }
            break;
        }
        case CharacterCase::Case1PEqualsQ: {
            if (q != p) throw std::domain_error("this branch requires p = q");
            for (long i = 1; i <= p; ++i) {
                MultiPoly v = c(2) * tau;
                if (i == k) v = v - c(1);
                chi.lambdaH.push_back(v);
            }
            break;
        }
    }
    return chi;
}

CentralValues evaluate_character(const InfinitesimalCharacter& chi, ShiftOrder order) {
    long p = chi.p, q = chi.q, N = p + q;
    // Diagonal coordinate i of the rotated Cartan evaluated at the weight:
    //   i <= p:      (lambda_i - nu_i)/2
    //   p < i <= 2p: (lambda_{i-p} + nu_{i-p})/2
    //   i > 2p:      lambda^b_{i-2p}
    std::map<std::string, MultiPoly> subs;
    for (long i = 1; i <= N; ++i) {
        MultiPoly f;
        if (i <= p)
            f = (chi.lambdaH[i - 1] - MultiPoly::var(nuvar(i))) * c(1, 2);
        else if (i <= 2 * p)
            f = (chi.lambdaH[i - p - 1] + MultiPoly::var(nuvar(i - p))) * c(1, 2);
        else
            f = chi.lambdaB[i - 2 * p - 1];
        Rational shift;
        if (order == ShiftOrder::OnDiagonalCoordinates) {
            shift = rat(N - 2 * i + 1, 2);
        } else {
            // Drop the split component of the half-sum: paired coordinates
            // receive the averaged shift, the rest the full one.
            if (i <= p)
                shift = (rat(N - 2 * i + 1, 2) + rat(N - 2 * (i + p) + 1, 2)) / 2;
            else if (i <= 2 * p)
                shift = (rat(N - 2 * (i - p) + 1, 2) + rat(N - 2 * i + 1, 2)) / 2;
            else
                shift = rat(N - 2 * i + 1, 2);
        }
        subs[evar(i)] = f - MultiPoly::constant(shift);
    }
    CentralValues out;
    out.c2 = casimir_restriction(2, N).poly.substitute(subs);
    out.c3 = casimir_restriction(3, N).poly.substitute(subs);
    return out;
}

MultiPoly ycc_rhs(const CentralValues& cv, long p, long q) {
    MultiPoly mu = MultiPoly::var("mu");
    MultiPoly tau = MultiPoly::var("tau");
    if (p == q) {
        // Simplified p = q variant.
        return c(-1, 3) * cv.c3 + (c(p, 3) + tau) * cv.c2 + c(p * p, 3) - c(1, 3) + tau * tau +
               c(2 * p, 3) * tau * (c(1) - c(p) * tau - c(2) * tau * tau);
    }
    MultiPoly half = c(1, 2);
    MultiPoly term1 = c(-1, 3) * cv.c3;
    MultiPoly term2 = half * (c(p + q, 3) + c(q - p) * mu + c(2) * tau) * cv.c2;
    MultiPoly term3 = c((p + q) * (p + q), 12) - c(1, 3);
    MultiPoly pmq = c(p - q) - c(2) * tau;
    MultiPoly term4 = c(1, 4) * pmq * pmq * mu * mu;
    MultiPoly term5 = c(-p * q * (p - q) * (p + q), 6) * mu * (c(1) - mu * mu);
    MultiPoly term6 = c(p + q, 6) * tau *
                      (c(2) - c(p + q) * tau + c(3 * (p - q)) * mu * tau - c(4) * tau * tau);
    // Without this term the tail breaks off the p = q specialization and the
    // rank-one cross-check at tau != 0, mu not in {0, 1}; it is pinned
    // exactly by both.
    MultiPoly term7 = tau * tau * (c(1) - mu * mu) + c(q - p) * mu * tau * (c(1) - mu);
    return term1 + term2 + term3 + term4 + term5 + term6 + term7;
}

MultiPoly case_target(const InfinitesimalCharacter& chi) {
    switch (chi.caseTag) {
        case CharacterCase::Case1:
        case CharacterCase::Case1PEqualsQ: {
            MultiPoly nu = MultiPoly::var(nuvar(chi.k));
            return nu * nu * c(1, 4);
        }
        case CharacterCase::Case2: {
            MultiPoly v = (c(chi.q - chi.p) + c(chi.p + chi.q) * MultiPoly::var("mu")) * c(1, 2);
            return v * v;
        }
    }
    throw std::logic_error("unreachable");
}

EndToEndResult end_to_end_check(const FunctorParams& params) {
    EndToEndResult res;
    if (params.n != 1) throw std::invalid_argument("end-to-end check is rank-one only");
    Admissibility adm = validate(params);
    if (!adm.admissible) throw std::domain_error("parameters are not admissible");
    DerivedParams d = derive(params);

    // Classify the parameter shape.
    long onesAt = -1;
    bool case1 = d.nXi == 0;
    if (case1) {
        for (long i = 0; i < params.p; ++i) {
            if (d.nmu[i] == 0) continue;
            if (d.nmu[i] == 1 && onesAt < 0) {
                onesAt = i;
                continue;
            }
            case1 = false;
        }
        case1 = case1 && onesAt >= 0;
    }
    bool case2 = !case1 && d.nXi == 1 && params.q > params.p;
    if (case2)
        for (long i = 0; i < params.p; ++i) case2 = case2 && d.nmu[i] == 0;
    if (!case1 && !case2) {
        res.applicable = false;
        return res;
    }
    res.applicable = true;

    InfinitesimalCharacter chi;
    if (case1) {
        chi = make_character(params.p, params.q,
                             params.p == params.q ? CharacterCase::Case1PEqualsQ
                                                  : CharacterCase::Case1,
                             onesAt + 1);
        res.caseName = params.p == params.q ? "case1(p=q)" : "case1";
    } else {
        chi = make_character(params.p, params.q, CharacterCase::Case2);
        res.caseName = "case2";
    }

    CentralValues cv = evaluate_character(chi);
    MultiPoly formula = ycc_rhs(cv, params.p, params.q);
    std::map<std::string, Rational> at;
    at["mu"] = params.mu;
    at["tau"] = d.tau;
    for (long i = 1; i <= params.p; ++i) at[nuvar(i)] = params.nu[i - 1];
    res.formulaValue = formula.evaluate(at);

    TensorModel model(params);
    ExactMatrix v = model.varpi(1);
    ExactMatrix yv = model.y_matrix(1) * v;
    // Extract the eigenvalue from any nonzero coordinate and confirm.
    Rational lam = 0;
    for (const auto& [rc, val] : v.entries()) {
        lam = yv.get(rc.first, rc.second) / val;
        break;
    }
    if (!(yv == v.scaled(lam)))
        throw std::logic_error("distinguished vector is not an eigenvector of y_1");
    res.modelValue = lam * lam;
    res.pass = res.modelValue == res.formulaValue;
    return res;
}

}  // namespace bcd
