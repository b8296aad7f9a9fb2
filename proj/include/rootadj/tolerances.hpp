#pragma once

namespace rootadj {

struct Tolerances {
  double alg = 1e-9;
  double cls = 1e-9;
  double geo = 1e-8;
  double vertex = 1e-7;
  long max_denominator = 1000000;
  double rational_residual = 1e-9;

  Tolerances scaled(double k) const;
  // Defaults multiplied by ROOTADJ_TOLERANCE_SCALE when that variable is set.
  static Tolerances from_environment();
};

}  // namespace rootadj
