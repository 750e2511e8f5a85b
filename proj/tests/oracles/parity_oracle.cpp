#include "parity_oracle.hpp"

long parity_kernel_dim(int n, int m) {
    long total = 0;
    for (unsigned y = 0; y < (1u << m); ++y) {
        int piece = 1; // slot 0
        long odd = 0;
        for (int j = 0; j + 1 < n; ++j) {
            bool cut = j >= 1 && j <= m && (y >> (j - 1) & 1);
            if (cut) {
                odd += piece & 1;
                piece = 1;
            } else {
                ++piece;
            }
        }
        odd += piece & 1;
        total += odd;
    }
    return total;
}
