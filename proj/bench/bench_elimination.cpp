// Times the serial reference elimination against the OpenMP kernel on
// the matrices this project actually reduces: flattened boundary maps
// and the induced cochain maps, plus a dense-ish random comparison.
// Both kernels must report identical ranks; speedup depends on the
// hardware thread count.

#include <chrono>
#include <iomanip>
#include <iostream>
#include <random>

#include <CLI11.hpp>
#include <omp.h>

#include "qhh/cochain.hpp"
#include "qhh/elimination.hpp"
#include "qhh/resolution.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

double time_rank(const qhh::Matrix& m, qhh::Kernel k, std::size_t& rank_out) {
  const auto start = clock_type::now();
  rank_out = qhh::rank(m, k);
  return std::chrono::duration<double, std::milli>(clock_type::now() - start).count();
}

void run_case(const std::string& name, const qhh::Matrix& m) {
  std::size_t r_serial = 0, r_parallel = 0;
  const double t_serial = time_rank(m, qhh::Kernel::serial, r_serial);
  const double t_parallel = time_rank(m, qhh::Kernel::parallel, r_parallel);
  std::cout << std::left << std::setw(34) << name << std::right << std::setw(6)
            << m.rows() << " x " << std::left << std::setw(6) << m.cols()
            << std::right << " rank " << std::setw(5) << r_serial << std::fixed
            << std::setprecision(2) << "  serial " << std::setw(9) << t_serial
            << " ms  parallel " << std::setw(9) << t_parallel << " ms  speedup "
            << std::setprecision(2) << (t_parallel > 0 ? t_serial / t_parallel : 0.0)
            << "x\n";
  if (r_serial != r_parallel) {
    std::cerr << "kernel disagreement on " << name << ": " << r_serial
              << " vs " << r_parallel << "\n";
    std::exit(1);
  }
}

qhh::Matrix random_sparse(std::size_t rows, std::size_t cols, double density,
                          qhh::FieldSpec field, std::uint64_t seed) {
  std::mt19937_64 rng{seed};
  std::uniform_real_distribution<double> coin{0.0, 1.0};
  std::uniform_int_distribution<int> val{-4, 4};
  qhh::Matrix m{rows, cols, field};
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (coin(rng) < density) m.set(i, j, qhh::Scalar::from_int(val(rng), field));
  return m;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs OpenMP elimination kernels on this project's matrices"};
  bool quick = false;
  app.add_flag("--quick", quick,
               "skip the dense random cases (the slowest part of the suite)");
  CLI11_PARSE(app, argc, argv);

  std::cout << "elimination kernels, " << omp_get_max_threads()
            << " OpenMP thread(s) available\n\n";

  for (const std::uint64_t p : {std::uint64_t{0}, std::uint64_t{2}}) {
    const qhh::FieldSpec field{p};
    const std::string tag = p == 0 ? " (rationals)" : " (mod 2)";
    qhh::Algebra a{5, field};
    for (const std::uint32_t n : {8u, 12u}) {
      const qhh::Matrix m = qhh::flatten(qhh::boundary_map(a, n));
      run_case("boundary s=5 n=" + std::to_string(n) + tag, m);
    }
    qhh::Workspace ws{5, field};
    run_case("induced map s=5 n=11" + tag, ws.hat(11));
  }

  if (quick) return 0;

  for (const std::uint64_t p : {std::uint64_t{0}, std::uint64_t{1000003}}) {
    const qhh::FieldSpec field{p};
    const std::string tag = p == 0 ? " (rationals)" : " (mod 1000003)";
    run_case("random 400x400 d=0.08" + tag, random_sparse(400, 400, 0.08, field, 42));
  }
  return 0;
}
