// Discord over the (c1, c2) square at fixed c3 = 0.5. Cells outside the
// physical tetrahedron print as nan.
#include <iostream>

#include "qcorr/qcorr.hpp"

int main() {
  const qcorr::ContourTable table =
      qcorr::make_contour(11, 0.5, qcorr::MeasureKind::discord);
  qcorr::write_contour_csv(std::cout, table);
  return 0;
}
