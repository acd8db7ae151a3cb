#include "bcdaha/acceptance.hpp"

#include "bcdaha/central_char.hpp"
#include "bcdaha/tensor_model.hpp"

#include <chrono>
#include <functional>
#include <sstream>

namespace bcd {

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
}  // namespace

std::vector<GridPoint> acceptance_grid() {
    return {
        {"A:p1q2n1-block", mk(1, 2, 1, 0, {-1}, {0}, {rat(3, 5)})},
        {"B:p1q2n1-xi", mk(1, 2, 1, 0, {0}, {-1}, {rat(3, 7)})},
        {"C:p1q1n1", mk(1, 1, 1, 0, {0}, {}, {rat(2)})},
        {"D:p1q1n2", mk(1, 1, 2, 0, {0}, {}, {rat(1, 3)})},
        {"E:p1q2n2-mixed", mk(1, 2, 2, 0, {-1}, {-1}, {rat(2, 7)})},
        {"F:p1q2n2-mu1", mk(1, 2, 2, 1, {1}, {0}, {rat(1, 2)})},
        {"G:p1q2n3-xi2", mk(1, 2, 3, 0, {-1}, {-2}, {rat(4, 3)})},
        {"H:p2q3n2", mk(2, 3, 2, 0, {-1, -1}, {0}, {rat(1, 5), rat(7, 5)})},
        {"I:p1q3n2-det", mk(1, 3, 2, 0, {0}, {-1, -1}, {rat(5, 9)})},
        {"J:p1q1n3-mu1", mk(1, 1, 3, 1, {0}, {}, {rat(5, 7)})},
        {"K:p1q2n1-muneg", mk(1, 2, 1, -1, {-1}, {0}, {rat(8, 3)})},
        {"M:p1q2n3-block", mk(1, 2, 3, 0, {-1}, {1}, {rat(3, 2)})},
        {"N:p1q3n2-bigW", mk(1, 3, 2, 0, {2}, {1, -1}, {rat(9, 4)})},
        {"O:p1q3n3-seed2", mk(1, 3, 3, 0, {2}, {0, -1}, {rat(3, 8)})},
        {"P:p1q2n1-mu2", mk(1, 2, 1, 2, {3}, {-1}, {rat(7, 3)})},
        {"Q:p1q2n1-tau1", mk(1, 2, 1, 0, {2}, {0}, {rat(5, 4)})},
        {"R:p1q1n1-mu2", mk(1, 1, 1, 2, {0}, {}, {rat(3)})},
        {"S:p2q3n3-mixed", mk(2, 3, 3, 0, {-1, -1}, {-1}, {rat(1, 7), rat(9, 7)})},
        {"T:p1q3n3-sign", mk(1, 3, 3, 0, {1}, {0, 0}, {rat(6, 5)})},
        {"U:p2q2n3-blocks", mk(2, 2, 3, 0, {0, 1}, {}, {rat(1, 2), rat(5, 2)})},
    };
}

std::vector<GridPoint> inadmissible_grid() {
    return {
        {"X1:fractional-block", mk(1, 2, 1, 0, {1}, {0}, {rat(1, 2)})},
        {"X2:negative-block", mk(1, 2, 3, 0, {5}, {-2}, {rat(1, 2)})},
        {"X3:non-dominant", mk(1, 3, 2, 0, {0}, {2, 0}, {rat(1, 2)})},
    };
}

namespace {

using Clock = std::chrono::steady_clock;

CriterionResult timed(int number, const std::string& name,
                      const std::function<void(CriterionResult&)>& body) {
    CriterionResult r;
    r.number = number;
    r.name = name;
    r.pass = true;
    auto start = Clock::now();
    try {
        body(r);
    } catch (const std::exception& e) {
        r.pass = false;
        r.notes.push_back(std::string("exception: ") + e.what());
    }
    r.ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    return r;
}

void require(CriterionResult& r, bool cond, const std::string& msg) {
    if (!cond) {
        r.pass = false;
        r.notes.push_back(msg);
    }
}

std::vector<Partition> partitions_up_to(long maxSize) {
    std::vector<Partition> out;
    std::vector<long> cur;
    auto rec = [&](auto&& self, long remaining, long maxPart) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (long part = std::min(remaining, maxPart); part >= 1; --part) {
            cur.push_back(part);
            self(self, remaining - part, part);
            cur.pop_back();
        }
    };
    for (long m = 1; m <= maxSize; ++m) rec(rec, m, m);
    return out;
}

void criterion_murphy(CriterionResult& r) {
    for (const Partition& shape : partitions_up_to(6)) {
        SpechtModule mod(shape);
        long m = shape.size();
        for (JmVariant variant : {JmVariant::L, JmVariant::Lhat}) {
            std::vector<ExactMatrix> ops = mod.jm_matrices(variant);
            MurphyBasis basis = mod.murphy_basis(variant);
            for (long s = 0; s < mod.dim(); ++s) {
                ExactMatrix v(mod.dim(), 1);
                for (long t = 0; t < mod.dim(); ++t) v.set(t, 0, basis.vectors.get(t, s));
                for (long i = 0; i < m; ++i) {
                    ExactMatrix lhs = ops[i] * v;
                    ExactMatrix rhs = v.scaled(basis.eigenvalues.get(i, s));
                    require(r, lhs == rhs,
                            "eigen equation failed for shape " + shape.to_string() +
                                (variant == JmVariant::L ? " L_" : " Lhat_") + std::to_string(i + 1));
                    if (!r.pass) return;
                }
            }
            if (variant == JmVariant::Lhat) {
                // hat eigenvalues are the reversed contents, last one zero
                MurphyBasis plain = mod.murphy_basis(JmVariant::L);
                for (long s = 0; s < mod.dim(); ++s) {
                    for (long i = 1; i < m; ++i)
                        require(r,
                                basis.eigenvalues.get(i - 1, s) == plain.eigenvalues.get(m - i, s),
                                "hat eigenvalue mismatch for " + shape.to_string());
                    if (m > 0)
                        require(r, basis.eigenvalues.get(m - 1, s) == 0,
                                "last hat eigenvalue nonzero for " + shape.to_string());
                }
            }
        }
    }
}

void criterion_schur_weyl(CriterionResult& r) {
    for (long N = 1; N <= 4; ++N)
        for (long m = 1; m <= 5; ++m) {
            Integer total = 0;
            for (const Partition& shape : partitions_up_to(m)) {
                if (shape.size() != m || shape.height() > N) continue;
                total += weyl_dimension(shape, N) * specht_dimension(shape);
            }
            Integer expect;
            mpz_ui_pow_ui(expect.get_mpz_t(), static_cast<unsigned long>(N),
                          static_cast<unsigned long>(m));
            require(r, total == expect,
                    "dimension sum failed at N=" + std::to_string(N) + " m=" + std::to_string(m));
        }
}

void criterion_relations(CriterionResult& r, const AcceptanceOptions& opt) {
    r.notes.push_back(
        "normalized parameters (kappa1, kappa2) = ((p-q-mu N)/2, 1) enter the literal "
        "presentation as swap cross-constant kappa2 and sign cross-constant 2 kappa1");
    for (const GridPoint& gp : acceptance_grid()) {
        TensorModel model(gp.params);
        DerivedParams d = derive(gp.params);
        Rational gConst = opt.injectKappa1Flip ? Rational(-d.gConst) : d.gConst;
        DahaPresentation pres = make_presentation_bc(gp.params.n, d.sConst, gConst);
        VerifyReport rep = verify_linear_rep(pres, model.rep(), opt.mode);
        if (!rep.all_pass) {
            std::ostringstream os;
            os << gp.name << ": failed relations:";
            for (const auto& name : rep.failed_names()) os << " " << name;
            require(r, false, os.str());
        }
    }
}

void criterion_dimensions(CriterionResult& r) {
    for (const GridPoint& gp : acceptance_grid()) {
        TensorModel model(gp.params);
        PredictedDimension pd = predicted_dimension(gp.params);
        require(r, Integer(model.dim()) == pd.dimension,
                gp.name + ": invariant dimension " + std::to_string(model.dim()) +
                    " != formula " + pd.dimension.get_str());
    }
    for (const GridPoint& gp : inadmissible_grid()) {
        require(r, !validate(gp.params).admissible, gp.name + ": expected rejection");
        TensorModel model(gp.params);
        require(r, model.dim() == 0,
                gp.name + ": inadmissible parameters gave dimension " +
                    std::to_string(model.dim()));
    }
}

void criterion_eigenvectors(CriterionResult& r) {
    for (const GridPoint& gp : acceptance_grid()) {
        TensorModel model(gp.params);
        ExactMatrix table = eigenvalue_table(gp.params);
        long d = table.cols();
        for (long s = 1; s <= d; ++s) {
            ExactMatrix v = model.varpi(s);
            for (long k = 1; k <= gp.params.n; ++k) {
                ExactMatrix lhs = model.y_matrix(k) * v;
                ExactMatrix rhs = v.scaled(table.get(k - 1, s - 1));
                require(r, lhs == rhs,
                        gp.name + ": y_" + std::to_string(k) + " eigenvalue mismatch at s=" +
                            std::to_string(s));
            }
        }
    }
    // Index resolution on a point with a nontrivial xi block: the shifted
    // reading must disagree with the model (and overflow at k = n).
    FunctorParams gpt = acceptance_grid()[6].params;  // G: xi block of size 2
    bool shiftedFails = false;
    try {
        ExactMatrix alt = eigenvalue_table(gpt, SecondBranchIndex::KMinusMpPlusOne);
        TensorModel model(gpt);
        ExactMatrix v = model.varpi(1);
        shiftedFails = !(model.y_matrix(2) * v == v.scaled(alt.get(1, 0)));
    } catch (const std::domain_error&) {
        shiftedFails = true;
    }
    require(r, shiftedFails, "shifted hat-index reading unexpectedly matched the model");
    r.notes.push_back(
        "hat-eigenvalue index resolved to k - m_p; the k - m_p + 1 reading overflows at k = n "
        "and disagrees with the model on the xi block");
}

void criterion_isomorphism(CriterionResult& r, const AcceptanceOptions& opt) {
    for (const GridPoint& gp : acceptance_grid()) {
        TensorModel model(gp.params);
        InducedModule induced = build_p_tilde(gp.params);
        DahaPresentation pres = target_presentation(gp.params);
        require(r, verify_linear_rep(pres, induced.rep, opt.mode).all_pass,
                gp.name + ": induced module fails the relations");
        require(r, induced.rep.dim == model.dim(),
                gp.name + ": induced and model dimensions differ");
        auto basis = intertwiner_space(induced.rep, model.rep(), pres);
        auto inv = find_invertible_intertwiner(basis);
        require(r, inv.has_value(), gp.name + ": no invertible intertwiner found");
        std::vector<std::string> failures;
        if (!model.proposition_checks(&failures))
            for (const auto& f : failures) require(r, false, gp.name + ": " + f);
    }
}

void criterion_central(CriterionResult& r) {
    const std::vector<std::pair<long, long>> pairs{{1, 2}, {1, 3}, {2, 3}};
    for (const auto& [p, q] : pairs) {
        for (long k = 1; k <= p; ++k) {
            InfinitesimalCharacter chi = make_character(p, q, CharacterCase::Case1, k);
            MultiPoly lhs = ycc_rhs(evaluate_character(chi), p, q);
            require(r, lhs == case_target(chi),
                    "case1 identity failed at p=" + std::to_string(p) + " q=" + std::to_string(q) +
                        " k=" + std::to_string(k) + ": got " + lhs.to_string());
        }
        InfinitesimalCharacter chi2 = make_character(p, q, CharacterCase::Case2);
        MultiPoly lhs2 = ycc_rhs(evaluate_character(chi2), p, q);
        require(r, lhs2 == case_target(chi2),
                "case2 identity failed at p=" + std::to_string(p) + " q=" + std::to_string(q) +
                    ": got " + lhs2.to_string());
    }
    for (long p : {1L, 2L})
        for (long k = 1; k <= p; ++k) {
            InfinitesimalCharacter chi = make_character(p, p, CharacterCase::Case1PEqualsQ, k);
            MultiPoly lhs = ycc_rhs(evaluate_character(chi), p, p);
            require(r, lhs == case_target(chi),
                    "p=q identity failed at p=" + std::to_string(p) + " k=" + std::to_string(k) +
                        ": got " + lhs.to_string());
        }
}

void criterion_end_to_end(CriterionResult& r) {
    long applicable = 0;
    for (const GridPoint& gp : acceptance_grid()) {
        if (gp.params.n != 1) continue;
        EndToEndResult res = end_to_end_check(gp.params);
        if (!res.applicable) continue;
        ++applicable;
        require(r, res.pass,
                gp.name + " (" + res.caseName + "): model " + rat_to_string(res.modelValue) +
                    " vs formula " + rat_to_string(res.formulaValue));
    }
    require(r, applicable >= 4,
            "only " + std::to_string(applicable) + " rank-one case-shaped points in the grid");
    r.notes.push_back(std::to_string(applicable) + " rank-one points checked");
}

void criterion_regressions(CriterionResult& r) {
    {
        FunctorParams a = acceptance_grid()[0].params;  // A
        TensorModel model(a);
        require(r, model.dim() == 2, "case A dimension is not 2");
        auto spec = rational_spectrum(model.y_matrix(1));
        Rational nu2 = a.nu[0] / 2;
        bool ok = spec.size() == 2 && spec[0].first == -nu2 && spec[0].second == 1 &&
                  spec[1].first == nu2 && spec[1].second == 1;
        require(r, ok, "case A spectrum is not {-nu/2, +nu/2}");
    }
    {
        FunctorParams dpt = acceptance_grid()[3].params;  // D: p=q=1, n=2
        TensorModel model(dpt);
        require(r, model.dim() == 4, "p=q=1 n=2 dimension is not 4");
        ExactMatrix table = eigenvalue_table(dpt);
        Rational l1 = dpt.nu[0] / 2 + rat(1, 2);
        Rational l2 = dpt.nu[0] / 2 - rat(1, 2);
        require(r, table.get(0, 0) == l1 && table.get(1, 0) == l2,
                "p=q=1 n=2 eigenvalue table mismatch");
        ExactMatrix v = model.varpi(1);
        require(r, model.y_matrix(1) * v == v.scaled(l1) && model.y_matrix(2) * v == v.scaled(l2),
                "p=q=1 n=2 distinguished eigenvalues mismatch");
    }
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
    std::vector<CriterionResult> out;
    out.push_back(timed(1, "murphy-basis", criterion_murphy));
    out.push_back(timed(2, "schur-weyl", criterion_schur_weyl));
    out.push_back(timed(3, "relation-suite",
                        [&](CriterionResult& r) { criterion_relations(r, options); }));
    out.push_back(timed(4, "dimension-oracle", criterion_dimensions));
    out.push_back(timed(5, "eigenvector-oracle", criterion_eigenvectors));
    out.push_back(timed(6, "isomorphism-oracle",
                        [&](CriterionResult& r) { criterion_isomorphism(r, options); }));
    out.push_back(timed(7, "central-characters", criterion_central));
    out.push_back(timed(8, "end-to-end-rank-one", criterion_end_to_end));
    out.push_back(timed(9, "known-answers", criterion_regressions));
    return out;
}

}  // namespace bcd
