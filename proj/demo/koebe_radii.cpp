// Koebe radii by quadrature next to the closed values.
#include <cstdio>

#include "bohr/bohr.hpp"

int main() {
  std::printf("%-24s %-16s %-16s %-16s\n", "psi", "starlike", "closed", "convex");
  for (const auto& psi : bohr::default_catalog()) {
    const double s = bohr::koebe_radius_quadrature(psi, bohr::Family::Starlike);
    const double c = bohr::koebe_radius_quadrature(psi, bohr::Family::Convex);
    const auto closed = psi.koebe_closed();
    std::printf("%-24s %-16.12g %-16s %-16.12g\n", psi.name().c_str(), s,
                closed ? bohr::format12(*closed).c_str() : "-", c);
  }
}
