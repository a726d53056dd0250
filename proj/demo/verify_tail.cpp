// Seeded check of the subordination tail inequality, split by N.
#include <iostream>

#include "bohr/bohr.hpp"

int main(int argc, char** argv) {
  bohr::TailRunConfig cfg;
  cfg.trials = argc > 1 ? std::stoi(argv[1]) : 200;
  for (int N : {1, 2, 3}) {
    cfg.Ns = {N};
    const auto rep = bohr::run_tail_inequality(cfg);
    std::cout << "N=" << N << "  checks " << rep.checks << "  violations " << rep.violations
              << "  worst margin " << bohr::format12(rep.worst_margin) << '\n';
  }
  // f(z) = z under w(z) = z^2: the n >= 2 window of f is empty.
  const auto z = bohr::TruncatedSeries::identity(8);
  const auto m = bohr::verify_tail_inequality(z, bohr::compose(z, bohr::TruncatedSeries::monomial(1.0, 2, 8)), 2, 1.0 / 3.0);
  std::cout << "f=z, w=z^2, N=2, r=1/3: lhs " << bohr::format12(m.lhs) << "  rhs " << bohr::format12(m.rhs) << '\n';
}
