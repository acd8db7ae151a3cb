#include "bcdaha/presentation.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bcd {

namespace {
std::string sname(long i) { return "S" + std::to_string(i); }
std::string yname(long i) { return "y" + std::to_string(i); }

Relation rel(std::string name, std::vector<RelationTerm> terms) {
    return Relation{std::move(name), std::move(terms)};
}

void add_coxeter_s(DahaPresentation& p) {
    long n = p.n;
    for (long i = 1; i < n; ++i)
        p.relations.push_back(rel(sname(i) + "^2=1", {{1, {sname(i), sname(i)}}, {-1, {}}}));
    for (long i = 1; i + 1 < n; ++i)
        p.relations.push_back(rel("braid(" + sname(i) + "," + sname(i + 1) + ")",
                                  {{1, {sname(i), sname(i + 1), sname(i)}},
                                   {-1, {sname(i + 1), sname(i), sname(i + 1)}}}));
    for (long i = 1; i < n; ++i)
        for (long j = i + 2; j < n; ++j)
            p.relations.push_back(rel("[" + sname(i) + "," + sname(j) + "]=0",
                                      {{1, {sname(i), sname(j)}}, {-1, {sname(j), sname(i)}}}));
}

void add_y_relations(DahaPresentation& p, bool bc) {
    long n = p.n;
    for (long i = 1; i <= n; ++i)
        for (long j = i + 1; j <= n; ++j)
            p.relations.push_back(rel("[" + yname(i) + "," + yname(j) + "]=0",
                                      {{1, {yname(i), yname(j)}}, {-1, {yname(j), yname(i)}}}));
    for (long i = 1; i < n; ++i) {
        p.relations.push_back(rel(sname(i) + yname(i) + "-" + yname(i + 1) + sname(i) + "=k1",
                                  {{1, {sname(i), yname(i)}},
                                   {-1, {yname(i + 1), sname(i)}},
                                   {-p.kappa1, {}}}));
        for (long j = 1; j <= n; ++j) {
            if (j == i || j == i + 1) continue;
            p.relations.push_back(rel("[" + sname(i) + "," + yname(j) + "]=0",
                                      {{1, {sname(i), yname(j)}}, {-1, {yname(j), sname(i)}}}));
        }
    }
    if (bc) {
        p.relations.push_back(rel("g" + yname(n) + "+" + yname(n) + "g=k2",
                                  {{1, {"g", yname(n)}}, {1, {yname(n), "g"}}, {-p.kappa2, {}}}));
        for (long j = 1; j < n; ++j)
            p.relations.push_back(
                rel("[g," + yname(j) + "]=0", {{1, {"g", yname(j)}}, {-1, {yname(j), "g"}}}));
    }
}
}  // namespace

DahaPresentation make_presentation_a(long n, const Rational& kappa, bool includeSumZero) {
    if (n < 1) throw std::invalid_argument("rank must be >= 1");
    DahaPresentation p;
    p.type = DahaType::A;
    p.n = n;
    p.kappa1 = kappa;
    for (long i = 1; i < n; ++i) p.generators.push_back(sname(i));
    for (long i = 1; i <= n; ++i) p.generators.push_back(yname(i));
    add_coxeter_s(p);
    add_y_relations(p, false);
    if (includeSumZero) {
        Relation r;
        r.name = "sum(y)=0";
        for (long i = 1; i <= n; ++i) r.terms.push_back({1, {yname(i)}});
        p.relations.push_back(r);
    }
    return p;
}

DahaPresentation make_presentation_bc(long n, const Rational& kappa1, const Rational& kappa2) {
    if (n < 1) throw std::invalid_argument("rank must be >= 1");
    DahaPresentation p;
    p.type = DahaType::BC;
    p.n = n;
    p.kappa1 = kappa1;
    p.kappa2 = kappa2;
    for (long i = 1; i < n; ++i) p.generators.push_back(sname(i));
    p.generators.push_back("g");
    for (long i = 1; i <= n; ++i) p.generators.push_back(yname(i));
    add_coxeter_s(p);
    p.relations.push_back(rel("g^2=1", {{1, {"g", "g"}}, {-1, {}}}));
    for (long i = 1; i + 1 < n; ++i)
        p.relations.push_back(
            rel("[g," + sname(i) + "]=0", {{1, {"g", sname(i)}}, {-1, {sname(i), "g"}}}));
    if (n >= 2)
        p.relations.push_back(rel("(g" + sname(n - 1) + ")^2 central",
                                  {{1, {"g", sname(n - 1), "g", sname(n - 1)}},
                                   {-1, {sname(n - 1), "g", sname(n - 1), "g"}}}));
    add_y_relations(p, true);
    return p;
}

const ExactMatrix& LinearRep::matrix(const std::string& gen) const {
    auto it = assignment.find(gen);
    if (it == assignment.end()) throw std::invalid_argument("missing generator assignment: " + gen);
    return it->second;
}

LinearRep LinearRep::with_scaled_y(const Rational& c) const {
    LinearRep out = *this;
    for (auto& [name, m] : out.assignment)
        if (name[0] == 'y') m = m.scaled(c);
    return out;
}

std::vector<std::string> VerifyReport::failed_names() const {
    std::vector<std::string> out;
    for (const auto& r : relations)
        if (!r.pass) out.push_back(r.name);
    return out;
}

namespace {
RelationResult evaluate_relation(const Relation& relation, const LinearRep& rep) {
    ExactMatrix acc(rep.dim, rep.dim);
    for (const auto& term : relation.terms) {
        ExactMatrix prod = ExactMatrix::identity(rep.dim);
        for (const auto& gen : term.word) prod = prod * rep.matrix(gen);
        acc = acc + prod.scaled(term.coeff);
    }
    RelationResult res;
    res.name = relation.name;
    res.pass = acc.is_zero();
    res.max_violation = acc.max_abs_entry();
    return res;
}
}  // namespace

VerifyReport verify_linear_rep(const DahaPresentation& pres, const LinearRep& rep, ExecMode mode) {
    for (const auto& g : pres.generators) rep.matrix(g);  // fail fast on gaps
    VerifyReport report;
    report.relations.resize(pres.relations.size());
    long count = static_cast<long>(pres.relations.size());
#ifdef _OPENMP
    if (mode == ExecMode::OpenMP) {
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < count; ++i)
            report.relations[i] = evaluate_relation(pres.relations[i], rep);
    } else
#endif
    {
        (void)mode;
        for (long i = 0; i < count; ++i)
            report.relations[i] = evaluate_relation(pres.relations[i], rep);
    }
    for (const auto& r : report.relations) report.all_pass = report.all_pass && r.pass;
    return report;
}

std::vector<ExactMatrix> intertwiner_space(const LinearRep& repA, const LinearRep& repB,
                                           const DahaPresentation& pres) {
    long da = repA.dim, db = repB.dim;
    // Unknowns X_{ik} flattened as i*da + k; one constraint row per generator
    // and output entry (i, j): sum_k X_{ik} A_{kj} - sum_k B_{ik} X_{kj} = 0.
    ExactMatrix sys(static_cast<long>(pres.generators.size()) * db * da, db * da);
    long rowBase = 0;
    for (const auto& gen : pres.generators) {
        const ExactMatrix& A = repA.matrix(gen);
        const ExactMatrix& B = repB.matrix(gen);
        for (const auto& [rc, v] : A.entries()) {
            // X_{i,rc.first} * A_{rc.first, rc.second} lands in row (i, rc.second)
            for (long i = 0; i < db; ++i)
                sys.add_to(rowBase + i * da + rc.second, i * da + rc.first, v);
        }
        for (const auto& [rc, v] : B.entries()) {
            // -B_{rc.first, rc.second} X_{rc.second, j} lands in row (rc.first, j)
            for (long j = 0; j < da; ++j)
                sys.add_to(rowBase + rc.first * da + j, rc.second * da + j, -v);
        }
        rowBase += db * da;
    }
    std::vector<ExactMatrix> basis;
    for (const ExactMatrix& v : nullspace(sys)) {
        ExactMatrix x(db, da);
        for (const auto& [rc, val] : v.entries()) x.set(rc.first / da, rc.first % da, val);
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<ExactMatrix> find_invertible_intertwiner(const std::vector<ExactMatrix>& basis) {
    if (basis.empty()) return std::nullopt;
    long d = basis[0].rows();
    auto invertible = [&](const ExactMatrix& x) { return x.rows() == x.cols() && rank(x) == d; };
    for (const auto& x : basis)
        if (invertible(x)) return x;
    // Generic combinations sum t^i X_i catch the rank-deficient singles.
    for (long t = 1; t <= 5; ++t) {
        ExactMatrix acc(basis[0].rows(), basis[0].cols());
        Rational w = 1;
        for (const auto& x : basis) {
            acc = acc + x.scaled(w);
            w *= t + 1;
        }
        if (invertible(acc)) return acc;
    }
    return std::nullopt;
}

}  // namespace bcd
