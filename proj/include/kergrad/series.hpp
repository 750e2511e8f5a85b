#pragma once

#include "kergrad/census.hpp"

#include <vector>

namespace kergrad {

// One class of components: total mass of its vertex cylinders, vertices per
// component, and the kernel dimension of its move matrix.
struct SeriesTerm {
    mpq_class measure;
    int64_t size = 1;
    int64_t kernel_dim = 0;
};

struct SeriesBounds {
    mpq_class lower;
    mpq_class upper;
};

// Exact two-sided bound for a kernel dimension per unit of box size: every
// resolved class contributes (measure / size) * kernel_dim, and the
// unresolved tail can carry at most max_cols kernel dimensions per unit of
// mass.  Construction checks that masses and the tail are nonnegative, sum to
// at most 1, and that no class claims more kernel than its matrix has
// columns.
class GradientSeries {
public:
    GradientSeries(std::vector<SeriesTerm> terms, mpq_class tail, int64_t max_cols = 1);

    const std::vector<SeriesTerm>& terms() const { return terms_; }
    const mpq_class& tail() const { return tail_; }
    int64_t max_cols() const { return max_cols_; }
    SeriesBounds bounds() const;

private:
    std::vector<SeriesTerm> terms_;
    mpq_class tail_;
    int64_t max_cols_;
};

// The chain series of the standard operator, truncated after kmax chain
// lengths: mass k / 2^(k+1) on the k-chain, whose kernel is one-dimensional
// for odd k and zero otherwise, with tail (kmax + 2) / 2^(kmax + 1).
GradientSeries lamplighter_series(int kmax = 40);

// Series assembled from a census: one term per interior type, kernel
// dimensions read off the representative's move matrix over the given field,
// and the boundary mass as the tail.
GradientSeries series_from_census(const TDecomposition& dec, const CensusResult& census,
                                  const FieldSpec& field, int64_t max_cols = 1);

}  // namespace kergrad
