// r_N for the cardioid and sine entries as N grows.
#include <iostream>

#include "bohr/bohr.hpp"

int main() {
  for (const auto& psi : {bohr::PsiSpec::cardioid(), bohr::PsiSpec::sine()}) {
    bohr::RadiusProblem base{psi};
    const auto table = bohr::sweep(base, bohr::SweepAxis::N, 1, 12);
    std::vector<std::vector<std::string>> rows{bohr::radius_table_header()};
    for (const auto& r : table.rows) rows.push_back(bohr::radius_table_row(r));
    bohr::write_table(std::cout, rows);

    base.mode = bohr::Mode::BohrLimit;
    std::cout << "limit " << bohr::format12(bohr::solve(base).r0) << "\n\n";
  }
}
