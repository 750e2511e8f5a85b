#include "kergrad/matrix.hpp"
#include <algorithm>
#include <vector>

namespace kergrad {

ExactMatrix::ExactMatrix(FieldSpec f, int64_t rows, int64_t cols)
    : field_(f), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

void ExactMatrix::check_index(int64_t r, int64_t c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("matrix index out of range");
}

void ExactMatrix::set(int64_t r, int64_t c, const Scalar& v) {
    check_index(r, c);
    if (v.is_zero()) entries_.erase({r, c});
    else entries_[{r, c}] = v;
}

void ExactMatrix::add(int64_t r, int64_t c, const Scalar& v) {
    check_index(r, c);
    if (v.is_zero()) return;
    auto it = entries_.find({r, c});
    if (it == entries_.end()) {
        entries_.emplace(std::make_pair(r, c), v);
        return;
    }
    it->second += v;
    if (it->second.is_zero()) entries_.erase(it);
}

Scalar ExactMatrix::get(int64_t r, int64_t c) const {
    check_index(r, c);
    auto it = entries_.find({r, c});
    return it == entries_.end() ? Scalar::zero(field_) : it->second;
}

namespace {

// Rank-only sparse elimination. Rows are kept sorted by column; a bucket per
// column holds the active rows leading there. Once a column is processed its
// bucket can never refill, so pivot rows are retired immediately.
template <typename Value, typename Eliminate>
int64_t eliminate_rank(int64_t cols,
                       std::vector<std::vector<std::pair<int64_t, Value>>>& rows,
                       Eliminate eliminate) {
    std::vector<std::vector<int64_t>> bucket(static_cast<size_t>(cols));
    for (size_t i = 0; i < rows.size(); ++i)
        if (!rows[i].empty()) bucket[static_cast<size_t>(rows[i][0].first)].push_back(static_cast<int64_t>(i));
    int64_t rank = 0;
    for (int64_t c = 0; c < cols; ++c) {
        auto& b = bucket[static_cast<size_t>(c)];
        if (b.empty()) continue;
        int64_t piv = b[0];
        for (int64_t id : b)
            if (rows[static_cast<size_t>(id)].size() < rows[static_cast<size_t>(piv)].size()) piv = id;
        ++rank;
        for (int64_t id : b) {
            if (id == piv) continue;
            eliminate(rows[static_cast<size_t>(id)], rows[static_cast<size_t>(piv)]);
            auto& r = rows[static_cast<size_t>(id)];
            if (!r.empty()) bucket[static_cast<size_t>(r[0].first)].push_back(id);
        }
        std::vector<std::pair<int64_t, Value>>().swap(rows[static_cast<size_t>(piv)]);
        b.clear();
        b.shrink_to_fit();
    }
    return rank;
}

int64_t rank_gf(uint64_t p, int64_t cols,
                std::vector<std::vector<std::pair<int64_t, uint64_t>>> rows) {
    auto eliminate = [p](std::vector<std::pair<int64_t, uint64_t>>& r,
                         const std::vector<std::pair<int64_t, uint64_t>>& piv) {
        uint64_t f = mulmod(r[0].second, invmod(piv[0].second, p), p);
        std::vector<std::pair<int64_t, uint64_t>> out;
        out.reserve(r.size() + piv.size());
        size_t i = 0, j = 0;
        while (i < r.size() || j < piv.size()) {
            if (j == piv.size() || (i < r.size() && r[i].first < piv[j].first)) {
                out.push_back(r[i++]);
            } else if (i == r.size() || piv[j].first < r[i].first) {
                uint64_t v = (p - mulmod(f, piv[j].second, p)) % p;
                if (v) out.emplace_back(piv[j].first, v);
                ++j;
            } else {
                uint64_t v = (r[i].second + p - mulmod(f, piv[j].second, p)) % p;
                if (v) out.emplace_back(r[i].first, v);
                ++i;
                ++j;
            }
        }
        r = std::move(out);
    };
    return eliminate_rank<uint64_t>(cols, rows, eliminate);
}

void divide_content(std::vector<std::pair<int64_t, mpz_class>>& r) {
    if (r.empty()) return;
    mpz_class g = 0;
    for (auto& [c, v] : r) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    if (g > 1)
        for (auto& [c, v] : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

int64_t rank_q(int64_t cols, std::vector<std::vector<std::pair<int64_t, mpz_class>>> rows) {
    auto eliminate = [](std::vector<std::pair<int64_t, mpz_class>>& r,
                        const std::vector<std::pair<int64_t, mpz_class>>& piv) {
        // r <- lead(piv) * r - lead(r) * piv, then strip the content gcd.
        const mpz_class lp = piv[0].second;
        const mpz_class lr = r[0].second;
        std::vector<std::pair<int64_t, mpz_class>> out;
        out.reserve(r.size() + piv.size());
        size_t i = 0, j = 0;
        mpz_class v;
        while (i < r.size() || j < piv.size()) {
            if (j == piv.size() || (i < r.size() && r[i].first < piv[j].first)) {
                out.emplace_back(r[i].first, lp * r[i].second);
                ++i;
            } else if (i == r.size() || piv[j].first < r[i].first) {
                out.emplace_back(piv[j].first, -lr * piv[j].second);
                ++j;
            } else {
                v = lp * r[i].second - lr * piv[j].second;
                if (v != 0) out.emplace_back(r[i].first, v);
                ++i;
                ++j;
            }
        }
        divide_content(out);
        r = std::move(out);
    };
    return eliminate_rank<mpz_class>(cols, rows, eliminate);
}

template <typename Value, typename Convert>
std::vector<std::vector<std::pair<int64_t, Value>>>
collect_rows(const std::map<std::pair<int64_t, int64_t>, Scalar>& entries,
             int64_t row_offset, Convert convert,
             std::vector<std::vector<std::pair<int64_t, Value>>> rows = {}) {
    for (auto& [rc, v] : entries) {
        size_t r = static_cast<size_t>(rc.first + row_offset);
        if (rows.size() <= r) rows.resize(r + 1);
        rows[r].emplace_back(rc.second, convert(v));
    }
    return rows;
}

std::vector<std::vector<std::pair<int64_t, mpz_class>>>
to_integer_rows(const std::map<std::pair<int64_t, int64_t>, Scalar>& entries,
                int64_t row_offset,
                std::vector<std::vector<std::pair<int64_t, mpz_class>>> rows = {}) {
    // Clear denominators per row; only the rowspan matters for rank.
    auto raw = collect_rows<mpq_class>(entries, row_offset,
                                       [](const Scalar& s) { return s.rational(); });
    if (rows.size() < raw.size()) rows.resize(raw.size());
    for (size_t r = 0; r < raw.size(); ++r) {
        if (raw[r].empty()) continue;
        mpz_class l = 1;
        for (auto& [c, q] : raw[r]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
        for (auto& [c, q] : raw[r]) {
            mpz_class v = q.get_num() * (l / q.get_den());
            rows[r].emplace_back(c, std::move(v));
        }
        divide_content(rows[r]);
    }
    return rows;
}

} // namespace

int64_t ExactMatrix::rank() const {
    if (field_.is_rational()) {
        return rank_q(cols_, to_integer_rows(entries_, 0));
    }
    auto rows = collect_rows<uint64_t>(entries_, 0, [](const Scalar& s) { return s.residue(); });
    return rank_gf(field_.p, cols_, std::move(rows));
}

int64_t joint_kernel_dim(const ExactMatrix& top, const ExactMatrix& bottom) {
    if (top.field() != bottom.field()) throw std::invalid_argument("field mismatch in joint kernel");
    if (top.cols() != bottom.cols()) throw std::invalid_argument("column mismatch in joint kernel");
    int64_t rank;
    if (top.field().is_rational()) {
        auto rows = to_integer_rows(top.entries(), 0);
        rows = to_integer_rows(bottom.entries(), top.rows(), std::move(rows));
        rank = rank_q(top.cols(), std::move(rows));
    } else {
        auto conv = [](const Scalar& s) { return s.residue(); };
        auto rows = collect_rows<uint64_t>(top.entries(), 0, conv);
        rows = collect_rows<uint64_t>(bottom.entries(), top.rows(), conv, std::move(rows));
        rank = rank_gf(top.field().p, top.cols(), std::move(rows));
    }
    return top.cols() - rank;
}

} // namespace kergrad
