// Dephasing trajectory of the state (0.8, -0.4, 0.5) at gamma/Gamma = 0.1:
// discord D stays on its plateau until the sudden-change time, while the
// Hilbert-Schmidt discord Q_S decays from t = 0.
#include <iostream>

#include "qcorr/qcorr.hpp"

int main() {
  using namespace qcorr;
  const BellDiagonalState initial{0.8, -0.4, 0.5};
  const DephasingChannel channel(1.0, 0.1);  // Gamma = 1: times below are Gamma t

  const CriticalPoint cp = critical_time(initial, channel);
  std::cout << "# sudden change at Gamma t = " << format_number(*cp.scaled_tau)
            << " (eta Gamma = " << format_number(cp.eta) << ")\n";

  const TrajectoryTable table = make_trajectory(initial, channel, 5.0, 21);
  write_trajectory_csv(std::cout, table);
  return 0;
}
