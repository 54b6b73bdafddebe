// Closed-form measures of one state against the brute-force evaluators:
// measurement-optimized classical correlation, scanned relative-entropy and
// Hilbert-Schmidt minimizations.
#include <iostream>

#include "qcorr/qcorr.hpp"

int main() {
  using namespace qcorr;
  const BellDiagonalState s{0.8, -0.4, 0.5};
  const MeasureSet m = measure_all(s);
  const DensityMatrix rho = to_density_matrix(s);

  const double c_opt = oracle::optimize_classical_correlation(rho).value;
  const double qr_scan = oracle::min_relative_entropy_to_classical(s).value;
  const oracle::HsMin qs_scan = oracle::min_hs_to_zero_discord(s);

  std::cout << "C    closed form " << format_number(m.classical)
            << "   optimized " << format_number(c_opt) << '\n';
  std::cout << "Q_R  closed form " << format_number(m.rel_entropy)
            << "   scanned   " << format_number(qr_scan) << '\n';
  std::cout << "Q_S  closed form " << format_number(m.hs) << "  scanned   "
            << format_number(qs_scan.value) << " (axis " << qs_scan.axis + 1
            << ", coefficient " << format_number(qs_scan.coefficient) << ")\n";
  return 0;
}
