#include "kergrad/folner.hpp"
#include <algorithm>
#include <cstdlib>
#include <future>
#include <map>
#include <set>

namespace kergrad {

FolnerBox::FolnerBox(GroupSpec s, std::vector<std::pair<int64_t, int64_t>> iv,
                     std::vector<std::vector<int64_t>> win)
    : spec(std::move(s)), intervals(std::move(iv)), windows(std::move(win)) {
    if (static_cast<int>(intervals.size()) != spec.shift_rank ||
        static_cast<int>(windows.size()) != spec.shift_rank)
        throw std::invalid_argument("box needs one interval and one window per track");
    for (auto& [lo, hi] : intervals)
        if (lo >= hi) throw std::invalid_argument("empty box interval");
    for (auto& w : windows) {
        std::sort(w.begin(), w.end());
        if (std::adjacent_find(w.begin(), w.end()) != w.end())
            throw std::invalid_argument("duplicate window site");
    }
}

FolnerBox standard_box(const GroupSpec& spec, int64_t n, int64_t m) {
    if (n < 1 || m < 0) throw std::invalid_argument("bad standard box parameters");
    std::vector<std::pair<int64_t, int64_t>> iv(spec.shift_rank, {0, n});
    std::vector<int64_t> w;
    for (int64_t s = -m; s <= -1; ++s) w.push_back(s);
    std::vector<std::vector<int64_t>> wins(spec.shift_rank, w);
    return FolnerBox(spec, std::move(iv), std::move(wins));
}

bool FolnerBox::contains(const GroupElement& g) const {
    for (int t = 0; t < spec.shift_rank; ++t)
        if (g.shifts[t] < intervals[t].first || g.shifts[t] >= intervals[t].second) return false;
    for (auto& [track, pos] : g.lamps) {
        const auto& w = windows[track];
        if (!std::binary_search(w.begin(), w.end(), pos - g.shifts[track])) return false;
    }
    return true;
}

mpz_class FolnerBox::size() const {
    mpz_class n = 1;
    for (int t = 0; t < spec.shift_rank; ++t) {
        n *= intervals[t].second - intervals[t].first;
        mpz_class lamps = 1;
        lamps <<= windows[t].size();
        n *= lamps;
    }
    mpz_class fin = 1;
    fin <<= spec.fin_bits;
    return n * fin * spec.aut_count();
}

std::vector<GroupElement> FolnerBox::enumerate(size_t cap) const {
    mpz_class total = size();
    if (total > static_cast<unsigned long>(cap))
        throw std::length_error("box too large to enumerate: " + total.get_str());
    std::vector<GroupElement> out;
    out.reserve(total.get_ui());
    GroupElement g = identity(spec);
    // Odometer over shift vectors; per shift vector iterate lamp subsets, masks, auts.
    std::vector<int64_t> shift(spec.shift_rank);
    for (int t = 0; t < spec.shift_rank; ++t) shift[t] = intervals[t].first;
    for (;;) {
        g.shifts = shift;
        std::vector<size_t> pick(spec.shift_rank, 0);
        for (;;) {
            g.lamps.clear();
            for (int t = 0; t < spec.shift_rank; ++t)
                for (size_t b = 0; b < windows[t].size(); ++b)
                    if (pick[t] >> b & 1) g.lamps.emplace_back(t, windows[t][b] + shift[t]);
            std::sort(g.lamps.begin(), g.lamps.end());
            for (uint32_t fin = 0; fin < (1u << spec.fin_bits); ++fin)
                for (int aut = 0; aut < spec.aut_count(); ++aut) {
                    g.fin = fin;
                    g.aut = aut;
                    out.push_back(g);
                }
            int t = 0;
            while (t < spec.shift_rank && ++pick[t] >> windows[t].size()) pick[t++] = 0;
            if (t == spec.shift_rank) break;
        }
        int t = 0;
        while (t < spec.shift_rank && ++shift[t] >= intervals[t].second) {
            shift[t] = intervals[t].first;
            ++t;
        }
        if (t == spec.shift_rank) break;
    }
    return out;
}

std::string FolnerBox::label() const {
    std::string s;
    for (int t = 0; t < spec.shift_rank; ++t) {
        if (t) s += ";";
        s += std::to_string(intervals[t].second - intervals[t].first) + "x" +
             std::to_string(windows[t].size());
    }
    return s;
}

namespace {

std::vector<GroupElement> support_set(const GroupRingMatrix& T) {
    std::set<GroupElement> s;
    for (int i = 0; i < T.rows(); ++i)
        for (int j = 0; j < T.cols(); ++j)
            for (auto& [g, c] : T.at(i, j).terms()) s.insert(g);
    return {s.begin(), s.end()};
}

} // namespace

mpq_class boundary_ratio(const GroupRingMatrix& T, const FolnerBox& box) {
    std::vector<GroupElement> sup = support_set(T);
    std::set<GroupElement> moved;
    for (const GroupElement& b : box.enumerate())
        for (const GroupElement& s : sup) {
            GroupElement x = mul(box.spec, s, b);
            if (!box.contains(x)) moved.insert(std::move(x));
        }
    mpq_class r(static_cast<unsigned long>(moved.size()), 1);
    return r / mpq_class(box.size());
}

ExactMatrix compress(const GroupRingMatrix& T, const std::vector<GroupElement>& basis,
                     const FieldSpec& field) {
    std::map<GroupElement, int64_t> index;
    for (size_t i = 0; i < basis.size(); ++i)
        if (!index.emplace(basis[i], static_cast<int64_t>(i)).second)
            throw std::invalid_argument("duplicate basis element in compression");
    const int64_t nb = static_cast<int64_t>(basis.size());
    ExactMatrix M(field, T.rows() * nb, T.cols() * nb);
    for (int64_t col = 0; col < nb; ++col)
        for (int j = 0; j < T.cols(); ++j)
            for (int i = 0; i < T.rows(); ++i)
                for (auto& [s, c] : T.at(i, j).terms()) {
                    GroupElement h = mul(T.spec(), s, basis[col]);
                    auto it = index.find(h);
                    if (it == index.end()) continue;
                    M.add(i * nb + it->second, j * nb + col, reduce_mod(c, field));
                }
    return M;
}

ExactMatrix compression_matrix(const GroupRingMatrix& T, const FolnerBox& box,
                               const FieldSpec& field) {
    std::vector<GroupElement> basis = box.enumerate();
    std::sort(basis.begin(), basis.end());
    return compress(T, basis, field);
}

std::vector<std::pair<int64_t, int64_t>> default_schedule() {
    std::vector<std::pair<int64_t, int64_t>> s;
    for (int64_t k = 2; k <= 8; ++k) s.emplace_back(k, k);
    s.emplace_back(9, 8);
    s.emplace_back(10, 8);
    return s;
}

std::vector<BoxResult> gradient_estimate(const GroupRingMatrix& T,
                                         const std::vector<FolnerBox>& boxes,
                                         const FieldSpec& field, int workers) {
    if (workers <= 0) {
        workers = 1;
        if (const char* env = std::getenv("KERGRAD_WORKERS")) {
            int w = std::atoi(env);
            if (w > 0) workers = w;
        }
    }
    auto evaluate = [&](const FolnerBox& box) {
        BoxResult r;
        r.label = box.label();
        r.box_size = box.size();
        ExactMatrix M = compression_matrix(T, box, field);
        r.kernel_dim = M.kernel_dim();
        r.estimate = mpq_class(r.kernel_dim) / mpq_class(r.box_size);
        r.eps = boundary_ratio(T, box);
        return r;
    };
    std::vector<BoxResult> out(boxes.size());
    if (workers <= 1) {
        for (size_t i = 0; i < boxes.size(); ++i) out[i] = evaluate(boxes[i]);
        return out;
    }
    for (size_t start = 0; start < boxes.size(); start += workers) {
        size_t stop = std::min(boxes.size(), start + workers);
        std::vector<std::future<BoxResult>> batch;
        for (size_t i = start; i < stop; ++i)
            batch.push_back(std::async(std::launch::async, evaluate, std::cref(boxes[i])));
        for (size_t i = start; i < stop; ++i) out[i] = batch[i - start].get();
    }
    return out;
}

} // namespace kergrad
