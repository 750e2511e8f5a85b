#include "kergrad/group.hpp"
#include <algorithm>

namespace kergrad {

BitMatrix BitMatrix::identity(int m) {
    BitMatrix b;
    b.dim = m;
    b.row.resize(m);
    for (int i = 0; i < m; ++i) b.row[i] = 1u << i;
    return b;
}

uint32_t BitMatrix::apply(uint32_t v) const {
    uint32_t out = 0;
    for (int i = 0; i < dim; ++i)
        out |= static_cast<uint32_t>(__builtin_parity(row[i] & v)) << i;
    return out;
}

BitMatrix BitMatrix::compose(const BitMatrix& o) const {
    if (dim != o.dim) throw std::invalid_argument("bit matrix dimension mismatch");
    BitMatrix out;
    out.dim = dim;
    out.row.resize(dim);
    BitMatrix ot = o.transpose();
    for (int i = 0; i < dim; ++i) {
        uint32_t r = 0;
        for (int j = 0; j < dim; ++j)
            r |= static_cast<uint32_t>(__builtin_parity(row[i] & ot.row[j])) << j;
        out.row[i] = r;
    }
    return out;
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix out;
    out.dim = dim;
    out.row.assign(dim, 0);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            if (row[i] >> j & 1) out.row[j] |= 1u << i;
    return out;
}

BitMatrix BitMatrix::inverse() const {
    // Gauss-Jordan over F2 on [this | I].
    std::vector<uint32_t> a = row, inv(dim);
    for (int i = 0; i < dim; ++i) inv[i] = 1u << i;
    for (int c = 0; c < dim; ++c) {
        int piv = -1;
        for (int r = c; r < dim; ++r)
            if (a[r] >> c & 1) { piv = r; break; }
        if (piv < 0) throw std::invalid_argument("singular bit matrix");
        std::swap(a[c], a[piv]);
        std::swap(inv[c], inv[piv]);
        for (int r = 0; r < dim; ++r)
            if (r != c && (a[r] >> c & 1)) {
                a[r] ^= a[c];
                inv[r] ^= inv[c];
            }
    }
    BitMatrix out;
    out.dim = dim;
    out.row = inv;
    return out;
}

GroupSpec::GroupSpec(int d, int m, std::vector<BitMatrix> automorphisms)
    : shift_rank(d), fin_bits(m), auts(std::move(automorphisms)) {
    if (d < 0 || m < 0 || m > 24) throw std::invalid_argument("bad group spec dimensions");
    if (auts.empty()) auts.push_back(BitMatrix::identity(m));
    if (!(auts[0] == BitMatrix::identity(m)))
        throw std::invalid_argument("automorphism list must start with the identity");
    for (auto& a : auts)
        if (a.dim != m) throw std::invalid_argument("automorphism dimension mismatch");
    build_tables();
}

void GroupSpec::build_tables() {
    int n = aut_count();
    auto index_of = [&](const BitMatrix& b) {
        for (int i = 0; i < n; ++i)
            if (auts[i] == b) return i;
        throw std::invalid_argument("automorphism list is not closed");
    };
    aut_mul_.assign(n, std::vector<int>(n));
    aut_inv_.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aut_mul_[i][j] = index_of(auts[i].compose(auts[j]));
        aut_inv_[i] = index_of(auts[i].inverse());
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (auts[i] == auts[j]) throw std::invalid_argument("duplicate automorphism");
}

bool GroupElement::is_abelian_part() const {
    if (aut != 0) return false;
    for (int64_t s : shifts)
        if (s != 0) return false;
    return true;
}

GroupElement identity(const GroupSpec& spec) {
    GroupElement g;
    g.shifts.assign(spec.shift_rank, 0);
    return g;
}

GroupElement shift_gen(const GroupSpec& spec, int track, int64_t power) {
    if (track < 0 || track >= spec.shift_rank) throw std::invalid_argument("bad shift track");
    GroupElement g = identity(spec);
    g.shifts[track] = power;
    return g;
}

GroupElement lamp_gen(const GroupSpec& spec, int track, int64_t pos) {
    if (track < 0 || track >= spec.shift_rank) throw std::invalid_argument("bad lamp track");
    GroupElement g = identity(spec);
    g.lamps.emplace_back(track, pos);
    return g;
}

GroupElement fin_gen(const GroupSpec& spec, int bit) {
    if (bit < 0 || bit >= spec.fin_bits) throw std::invalid_argument("bad finite bit");
    GroupElement g = identity(spec);
    g.fin = 1u << bit;
    return g;
}

void validate_element(const GroupSpec& spec, const GroupElement& g) {
    if (static_cast<int>(g.shifts.size()) != spec.shift_rank)
        throw std::invalid_argument("element shift rank mismatch");
    if (g.aut < 0 || g.aut >= spec.aut_count())
        throw std::invalid_argument("element automorphism index out of range");
    if (g.fin >> spec.fin_bits)
        throw std::invalid_argument("element finite mask out of range");
    for (size_t i = 0; i < g.lamps.size(); ++i) {
        auto [track, pos] = g.lamps[i];
        (void)pos;
        if (track < 0 || track >= spec.shift_rank)
            throw std::invalid_argument("element lamp track out of range");
        if (i > 0 && !(g.lamps[i - 1] < g.lamps[i]))
            throw std::invalid_argument("element lamps not sorted and distinct");
    }
}

namespace {

// Symmetric difference of sorted lamp lists; order-two generators cancel in pairs.
std::vector<std::pair<int, int64_t>> lamp_xor(const std::vector<std::pair<int, int64_t>>& a,
                                              const std::vector<std::pair<int, int64_t>>& b) {
    std::vector<std::pair<int, int64_t>> out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i] < b[j])) out.push_back(a[i++]);
        else if (i == a.size() || b[j] < a[i]) out.push_back(b[j++]);
        else { ++i; ++j; }
    }
    return out;
}

} // namespace

GroupElement mul(const GroupSpec& spec, const GroupElement& a, const GroupElement& b) {
    // (a_A, a_G)(b_A, b_G) = (a_A + a_G.b_A, a_G b_G): shift b's lamps by a's
    // shifts, push b's finite mask through a's automorphism.
    GroupElement out;
    out.shifts.resize(spec.shift_rank);
    for (int t = 0; t < spec.shift_rank; ++t) out.shifts[t] = a.shifts[t] + b.shifts[t];
    std::vector<std::pair<int, int64_t>> moved = b.lamps;
    for (auto& [track, pos] : moved) pos += a.shifts[track];
    out.lamps = lamp_xor(a.lamps, moved);
    out.fin = a.fin ^ spec.auts[a.aut].apply(b.fin);
    out.aut = spec.aut_compose(a.aut, b.aut);
    return out;
}

GroupElement inverse(const GroupSpec& spec, const GroupElement& a) {
    // a = x * gamma with x in A of exponent two, so a^-1 = (gamma^-1.x) * gamma^-1.
    GroupElement out;
    out.shifts.resize(spec.shift_rank);
    for (int t = 0; t < spec.shift_rank; ++t) out.shifts[t] = -a.shifts[t];
    out.aut = spec.aut_inverse(a.aut);
    out.lamps = a.lamps;
    for (auto& [track, pos] : out.lamps) pos -= a.shifts[track];
    std::sort(out.lamps.begin(), out.lamps.end());
    out.fin = spec.auts[out.aut].apply(a.fin);
    return out;
}

std::string element_str(const GroupSpec& spec, const GroupElement& g) {
    std::string s;
    for (auto& [track, pos] : g.lamps) {
        s += spec.shift_rank > 1 ? "u" + std::to_string(track) : "u";
        s += "[" + std::to_string(pos) + "]";
    }
    if (g.fin) {
        s += "phi[";
        bool first = true;
        for (int b = 0; b < spec.fin_bits; ++b)
            if (g.fin >> b & 1) {
                if (!first) s += ",";
                s += std::to_string(b);
                first = false;
            }
        s += "]";
    }
    for (int t = 0; t < spec.shift_rank; ++t) {
        if (g.shifts[t] == 0) continue;
        s += spec.shift_rank > 1 ? "t" + std::to_string(t) : "t";
        if (g.shifts[t] != 1) s += "^" + std::to_string(g.shifts[t]);
    }
    if (g.aut != 0) s += "alpha" + std::to_string(g.aut);
    return s.empty() ? "e" : s;
}

} // namespace kergrad
