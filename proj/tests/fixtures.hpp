#pragma once

#include "qcy/qalgebra.hpp"

namespace fixtures {

using qcy::AlgebraSpec;
using qcy::IntMatrix;

/// Weights (1,1,2,2) with the omega-matrix of the weighted K3 example (omega = zeta_3).
inline AlgebraSpec weighted_k3() {
  return AlgebraSpec({1, 1, 2, 2}, 3,
                     IntMatrix{{0, 0, 0, 2},  //
                               {0, 0, 2, 0},
                               {0, 1, 0, 0},
                               {1, 0, 0, 0}});
}

/// Chart matrix q' of weighted_k3 on the chart x_0 != 0, as exponents of omega.
inline IntMatrix weighted_k3_chart_exponents() { return {{0, 2, 1}, {1, 0, 2}, {2, 1, 0}}; }

/// The +-1 matrix of the Segre threefold example (four variables, order 2).
inline AlgebraSpec segre_sign_matrix() {
  return AlgebraSpec({1, 1, 1, 1}, 2,
                     IntMatrix{{0, 0, 0, 0},  //
                               {0, 0, 1, 1},
                               {0, 1, 0, 1},
                               {0, 1, 1, 0}});
}

/// Its chart matrix q''_{ij} = q_{0i} q_{ij} q_{j0} on x_0 != 0.
inline qcy::ScalarMatrix sign_chart() {
  qcy::RootScalar one(2, 0), minus(2, 1);
  return {{one, minus, minus}, {minus, one, minus}, {minus, minus, one}};
}

/// Five variables, weights one, every column product equal to zeta_5.
inline AlgebraSpec quintic_constant_columns() {
  return AlgebraSpec({1, 1, 1, 1, 1}, 5,
                     IntMatrix{{0, 4, 0, 4, 1},  //
                               {1, 0, 4, 3, 1},
                               {0, 1, 0, 4, 4},
                               {1, 2, 1, 0, 0},
                               {4, 4, 1, 0, 0}});
}

inline qcy::ScalarMatrix to_scalars(const IntMatrix& e, qcy::Int order) {
  qcy::ScalarMatrix m(e.size());
  for (std::size_t i = 0; i < e.size(); ++i)
    for (auto x : e[i]) m[i].emplace_back(order, x);
  return m;
}

}  // namespace fixtures
