// rref (sparse, OpenMP) against rref_reference (dense, serial) on random
// sparse rational matrices and on the coefficient matrix of a system file.
// Entries grow fast under elimination, so sizes stay modest.
//
//   bench_rref [--seed N] [--reps N] [--threads N]

#include <chrono>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <tuple>

#include <CLI11.hpp>
#include <omp.h>

#include "binom/io.hpp"
#include "binom/linalg.hpp"

using namespace binom;

namespace {

SparseMatrix random_sparse(std::mt19937& rng, std::size_t rows, std::size_t cols, double density) {
  std::uniform_real_distribution<double> u(0, 1);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  SparseMatrix m{cols, {}};
  for (std::size_t i = 0; i < rows; ++i) {
    SparseRow r;
    for (std::size_t j = 0; j < cols; ++j) {
      if (u(rng) >= density) continue;
      const int n = num(rng);
      if (n != 0) r.emplace_back(j, Scalar::fraction(n, den(rng)));
    }
    m.rows.push_back(std::move(r));
  }
  return m;
}

template <class F>
double best_of(int reps, F&& f) {
  double best = 1e300;
  for (int k = 0; k < reps; ++k) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

bool same(const RrefResult& a, const RrefResult& b) { return a.pivots == b.pivots && a.reduced.rows == b.reduced.rows; }

void row(const std::string& name, const SparseMatrix& m, int reps) {
  RrefResult fast, ref;
  const double tf = best_of(reps, [&] { fast = rref(m); });
  const double tr = best_of(reps, [&] { ref = rref_reference(m); });
  std::cout << std::left << std::setw(26) << name << std::right << std::setw(6) << m.rows.size() << std::setw(6) << m.ncols
            << std::setw(6) << fast.pivots.size() << std::fixed << std::setprecision(2) << std::setw(12) << tf
            << std::setw(12) << tr << std::setw(9) << tr / tf << "x" << (same(fast, ref) ? "" : "  MISMATCH") << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rref against rref_reference"};
  std::uint32_t seed = 1;
  int reps = 3, threads = 0;
  std::string fixture = BINOM_FIXTURES "/erk.sys";
  app.add_option("--seed", seed)->capture_default_str();
  app.add_option("--reps", reps, "best of this many runs")->capture_default_str();
  app.add_option("--threads", threads, "OpenMP threads (0: runtime default)");
  app.add_option("--system", fixture, "system whose coefficient matrix is also timed")->capture_default_str();
  CLI11_PARSE(app, argc, argv);
  if (threads > 0) omp_set_num_threads(threads);

  std::cout << "threads " << omp_get_max_threads() << ", seed " << seed << ", best of " << reps << " (ms)\n";
  std::cout << std::left << std::setw(26) << "matrix" << std::right << std::setw(6) << "rows" << std::setw(6) << "cols"
            << std::setw(6) << "rank" << std::setw(12) << "rref" << std::setw(12) << "reference" << std::setw(10)
            << "speedup" << '\n';
  std::mt19937 rng(seed);
  for (auto [r, c, d] : {std::tuple{20, 40, 0.2}, {40, 80, 0.08}, {60, 120, 0.05}, {80, 80, 0.05}}) {
    std::ostringstream name;
    name << "random " << r << "x" << c << " p=" << d;
    row(name.str(), random_sparse(rng, r, c, d), reps);
  }
  const PolySystem s = read_system_file(fixture);
  row("coefficient matrix", linearize(s).sparse(), reps);
}
