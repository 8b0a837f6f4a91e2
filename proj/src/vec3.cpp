#include "bmm/vec3.hpp"

#include <algorithm>
#include <cmath>

namespace bmm {

void symmetric_eigen3(const Mat3& m, std::array<double, 3>& values,
                      std::array<Vec3, 3>& vectors) {
  Mat3 a = m;
  Mat3 v = Mat3::identity();

  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = std::abs(a(0, 1)) + std::abs(a(0, 2)) + std::abs(a(1, 2));
    if (off < 1e-15 * (std::abs(a(0, 0)) + std::abs(a(1, 1)) + std::abs(a(2, 2)) + 1e-300))
      break;
    for (int p = 0; p < 2; ++p) {
      for (int q = p + 1; q < 3; ++q) {
        if (a(p, q) == 0.0) continue;
        double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        Mat3 r = Mat3::identity();
        r(p, p) = c; r(q, q) = c; r(p, q) = s; r(q, p) = -s;
        // a <- r^T a r, v <- v r
        Mat3 rt = r;
        std::swap(rt(p, q), rt(q, p));
        a = matmul(rt, matmul(a, r));
        v = matmul(v, r);
      }
    }
  }

  std::array<int, 3> order{0, 1, 2};
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return a(i, i) < a(j, j); });
  for (int k = 0; k < 3; ++k) {
    int i = order[k];
    values[k] = a(i, i);
    vectors[k] = normalized(Vec3{v(0, i), v(1, i), v(2, i)});
  }
}

}  // namespace bmm
