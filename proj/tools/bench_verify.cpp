// Benchmark comparing the serial and OpenMP relation-verifier lanes on a
// larger induced module than the acceptance grid uses.

#include "bcdaha/functor_params.hpp"
#include "bcdaha/presentation.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>

using namespace bcd;

namespace {
double time_verify(const DahaPresentation& pres, const LinearRep& rep, ExecMode mode, int iters) {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    for (int i = 0; i < iters; ++i) ok = ok && verify_linear_rep(pres, rep, mode).all_pass;
    auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!ok) {
        std::cerr << "verification failed; benchmark invalid\n";
        std::exit(1);
    }
    return elapsed / iters;
}
}  // namespace

int main(int argc, char** argv) {
    int iters = argc > 1 ? std::atoi(argv[1]) : 3;

    // p = q = 2, n = 4: a 96-dimensional induced module with ~100 relations.
    FunctorParams params;
    params.p = 2;
    params.q = 2;
    params.n = 4;
    params.mu = 0;
    params.nvec = {0, 0};
    params.nu = {rat(1, 3), rat(7, 5)};

    InducedModule induced = build_p_tilde(params);
    DahaPresentation pres = target_presentation(params);
    std::cout << "module dimension " << induced.rep.dim << ", " << pres.relations.size()
              << " relations, " << iters << " iterations per lane\n";

    double serial = time_verify(pres, induced.rep, ExecMode::Serial, iters);
    double parallel = time_verify(pres, induced.rep, ExecMode::OpenMP, iters);
    std::cout << "serial   " << serial << " s/iter\n";
    std::cout << "openmp   " << parallel << " s/iter\n";
    std::cout << "speedup  " << (parallel > 0 ? serial / parallel : 0.0) << "x\n";
    return 0;
}
