#include "moprl/linalg.hpp"

namespace moprl {

std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> a,
                                                  std::vector<Rational> b) {
    const size_t n = a.size();
    if (b.size() != n) throw std::invalid_argument("solve_linear: shape mismatch");
    for (auto& row : a) {
        if (row.size() != n) throw std::invalid_argument("solve_linear: non-square matrix");
    }
    for (size_t i = 0; i < n; ++i) a[i].push_back(b[i]);

    Rational prev(1);
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            size_t swap_row = k;
            for (size_t i = k + 1; i < n; ++i) {
                if (a[i][k] != 0) {
                    swap_row = i;
                    break;
                }
            }
            if (swap_row == k) return std::nullopt;
            std::swap(a[k], a[swap_row]);
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j <= n; ++j) {
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    if (n > 0 && a[n - 1][n - 1] == 0) return std::nullopt;

    std::vector<Rational> x(n, Rational(0));
    for (size_t ii = n; ii-- > 0;) {
        Rational acc = a[ii][n];
        for (size_t j = ii + 1; j < n; ++j) acc -= a[ii][j] * x[j];
        x[ii] = acc / a[ii][ii];
    }
    return x;
}

}  // namespace moprl
