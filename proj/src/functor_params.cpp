#include "bcdaha/functor_params.hpp"

#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bcd {

void FunctorParams::check_well_formed() const {
    if (p < 1 || q < 1) throw std::invalid_argument("p and q must be positive");
    if (q < p) throw std::invalid_argument("convention requires q >= p");
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (static_cast<long>(nvec.size()) != p) throw std::invalid_argument("nvec must have length p");
    if (static_cast<long>(xi.size()) != q - p)
        throw std::invalid_argument("xi must have length q-p");
    if (static_cast<long>(nu.size()) != p) throw std::invalid_argument("nu must have length p");
    for (std::size_t i = 1; i < xi.size(); ++i)
        if (xi[i] > xi[i - 1]) throw std::invalid_argument("xi must be weakly decreasing");
    if (!is_integer(mu * p) || !is_integer(mu * q))
        throw std::invalid_argument("mu*p and mu*q must be integers");
}

DerivedParams derive(const FunctorParams& params) {
    params.check_well_formed();
    DerivedParams d;
    long N = params.p + params.q;
    Rational sum = 0;
    for (long v : params.nvec) sum += v;
    for (long v : params.xi) sum += v;
    sum += params.n;
    d.tau = sum / N;

    for (long i = 0; i < params.p; ++i)
        d.nmuExact.push_back(Rational(-params.nvec[i]) + params.mu * (params.q - params.p) +
                             2 * d.tau);
    for (long i = 0; i < params.q - params.p; ++i)
        d.ximuExact.push_back(Rational(-params.xi[params.q - params.p - i - 1]) -
                              params.mu * params.p + d.tau);
    d.nXiExact = 0;
    for (const auto& v : d.ximuExact) d.nXiExact += v;

    d.kappa1 = (Rational(params.p - params.q) - params.mu * N) / 2;
    d.kappa2 = 1;
    d.sConst = 1;
    d.gConst = Rational(params.p - params.q) - params.mu * N;

    for (long i = 1; i <= params.p; ++i) {
        Rational base = params.q > params.p ? rat(-(params.p + params.q), 2)
                                            : Rational(-params.p);
        d.rho.push_back(base + i + rat(-1, 2) + params.nu[i - 1] / 2);
    }

    // Integral block data when available.
    bool integral = true;
    for (const auto& v : d.nmuExact) integral = integral && is_integer(v) && v >= 0;
    for (const auto& v : d.ximuExact) integral = integral && is_integer(v) && v >= 0;
    if (integral) {
        d.m.push_back(0);
        for (const auto& v : d.nmuExact) {
            d.nmu.push_back(to_long(v.get_num()));
            d.m.push_back(d.m.back() + d.nmu.back());
        }
        std::vector<long> xv;
        for (const auto& v : d.ximuExact) xv.push_back(to_long(v.get_num()));
        d.ximu = Partition::from_weakly_decreasing(xv);
        d.nXi = d.ximu.size();
    }
    return d;
}

Admissibility validate(const FunctorParams& params) {
    DerivedParams d = derive(params);
    Admissibility a;
    a.admissible = true;
    for (long i = 0; i < params.p; ++i) {
        const Rational& v = d.nmuExact[i];
        if (!is_integer(v) || v < 0) {
            a.admissible = false;
            std::ostringstream os;
            os << "n_" << (i + 1) << " - mu(q-p) - 2 tau = " << rat_to_string(-v)
               << " is not a non-positive integer";
            a.violations.push_back(os.str());
        }
    }
    for (long i = 0; i < params.q - params.p; ++i) {
        const Rational& v = d.ximuExact[i];
        if (!is_integer(v) || v < 0) {
            a.admissible = false;
            std::ostringstream os;
            os << "xi_" << (params.q - params.p - i) << " + mu p - tau = " << rat_to_string(-v)
               << " violates the dominance/non-positivity condition";
            a.violations.push_back(os.str());
        }
    }
    if (a.admissible) {
        long total = std::accumulate(d.nmu.begin(), d.nmu.end(), 0L) + d.nXi;
        if (total != params.n) {
            a.admissible = false;
            a.violations.push_back("block sizes do not sum to n");
        }
    }
    return a;
}

PredictedDimension predicted_dimension(const FunctorParams& params) {
    Admissibility a = validate(params);
    if (!a.admissible) throw std::domain_error("parameters are not admissible");
    DerivedParams d = derive(params);
    PredictedDimension out;
    Integer cmuNum = factorial(params.n);
    Integer cmuDen = factorial(d.nXi);
    for (long b : d.nmu) {
        cmuNum *= pow2(b);
        cmuDen *= factorial(b);
    }
    if (cmuNum % cmuDen != 0) throw std::logic_error("multiplicity count is not integral");
    out.cmuFactor = cmuNum / cmuDen;
    out.spechtDim = specht_dimension(d.ximu);
    out.dimension = out.cmuFactor * out.spechtDim;
    return out;
}

ExactMatrix eigenvalue_table(const FunctorParams& params, SecondBranchIndex idx) {
    Admissibility a = validate(params);
    if (!a.admissible) throw std::domain_error("parameters are not admissible");
    DerivedParams d = derive(params);

    SpechtModule specht(d.ximu);
    MurphyBasis murphy = specht.murphy_basis(JmVariant::Lhat);
    long dim = specht.dim();
    long mp = d.m[params.p];

    ExactMatrix table(params.n, dim);
    for (long k = 1; k <= params.n; ++k) {
        if (k <= mp) {
            long r = 1;
            while (!(d.m[r - 1] < k && k <= d.m[r])) ++r;
            Rational lam = params.nu[r - 1] / 2 + rat(d.m[r] + d.m[r - 1], 2) - k + rat(1, 2);
            for (long s = 0; s < dim; ++s) table.set(k - 1, s, lam);
        } else {
            long hatIdx = idx == SecondBranchIndex::KMinusMp ? k - mp : k - mp + 1;
            if (hatIdx < 1 || hatIdx > d.nXi)
                throw std::domain_error("hat-eigenvalue index " + std::to_string(hatIdx) +
                                        " is outside 1.." + std::to_string(d.nXi));
            Rational base = Rational(params.q - params.p) + params.mu * (params.p + params.q);
            base /= 2;
            for (long s = 0; s < dim; ++s)
                table.set(k - 1, s, base + murphy.eigenvalues.get(hatIdx - 1, s));
        }
    }
    return table;
}

InducedModule build_p_tilde(const FunctorParams& params) {
    DerivedParams d = derive(params);
    ExactMatrix table = eigenvalue_table(params);
    SeedModule seed = SeedModule::build(d.nmu, d.ximu, table);
    return induce_module(seed, d.sConst, d.gConst);
}

DahaPresentation target_presentation(const FunctorParams& params) {
    DerivedParams d = derive(params);
    return make_presentation_bc(params.n, d.sConst, d.gConst);
}

}  // namespace bcd
