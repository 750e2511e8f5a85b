#include "kergrad/series.hpp"

#include <stdexcept>

namespace kergrad {

GradientSeries::GradientSeries(std::vector<SeriesTerm> terms, mpq_class tail, int64_t max_cols)
    : terms_(std::move(terms)), tail_(std::move(tail)), max_cols_(max_cols) {
    if (max_cols_ < 1) throw std::invalid_argument("series needs at least one column");
    if (tail_ < 0) throw std::invalid_argument("series tail is negative");
    mpq_class total = tail_;
    for (const SeriesTerm& t : terms_) {
        if (t.measure < 0) throw std::invalid_argument("series term has negative mass");
        if (t.size < 1) throw std::invalid_argument("series term has no vertices");
        if (t.kernel_dim < 0 || t.kernel_dim > t.size * max_cols_)
            throw std::invalid_argument("series term kernel exceeds its matrix");
        total += t.measure;
    }
    if (total > 1) throw std::invalid_argument("series masses exceed full measure");
}

SeriesBounds GradientSeries::bounds() const {
    SeriesBounds b;
    b.lower = 0;
    for (const SeriesTerm& t : terms_)
        b.lower += t.measure * t.kernel_dim / t.size;
    b.upper = b.lower + tail_ * max_cols_;
    return b;
}

GradientSeries lamplighter_series(int kmax) {
    if (kmax < 1) throw std::invalid_argument("need at least one chain length");
    std::vector<SeriesTerm> terms;
    terms.reserve(size_t(kmax));
    mpq_class assigned = 0;
    for (int k = 1; k <= kmax; ++k) {
        SeriesTerm t;
        t.measure = mpq_class(k, 1) / mpq_class(mpz_class(1) << (k + 1));
        t.size = k;
        t.kernel_dim = k % 2;
        assigned += t.measure;
        terms.push_back(std::move(t));
    }
    return GradientSeries(std::move(terms), 1 - assigned, 1);
}

GradientSeries series_from_census(const TDecomposition& dec, const CensusResult& census,
                                  const FieldSpec& field, int64_t max_cols) {
    std::vector<SeriesTerm> terms;
    for (const CensusTypeRow& row : census.types) {
        if (!row.interior) continue;
        SeriesTerm t;
        t.measure = row.measure.to_rational();
        t.size = row.vertex_count;
        t.kernel_dim = build_M(dec, census.instances[row.representative].verts).kernel_dim(field);
        terms.push_back(std::move(t));
    }
    return GradientSeries(std::move(terms), census.boundary_measure.to_rational(), max_cols);
}

}  // namespace kergrad
