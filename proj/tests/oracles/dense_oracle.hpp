#pragma once
#include <gmpxx.h>
#include <cstdint>
#include <vector>

// Textbook dense Gaussian elimination, kept independent of the library's
// sparse code so the two can check each other.
long dense_rank_q(std::vector<std::vector<mpq_class>> m);
long dense_rank_gf(uint64_t p, std::vector<std::vector<uint64_t>> m);
