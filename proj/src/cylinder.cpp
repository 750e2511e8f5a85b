#include "kergrad/cylinder.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace kergrad {

namespace {

constexpr int kMaxBits = 24;

void require_same_spec(const CylinderFunction& a, const CylinderFunction& b) {
    if (!(a.spec() == b.spec())) throw std::invalid_argument("cylinder spec mismatch");
}

}  // namespace

Window::Window(const GroupSpec& spec, std::vector<std::vector<int64_t>> s, std::vector<int> f)
    : sites(std::move(s)), fin_bits(std::move(f)) {
    if (static_cast<int>(sites.size()) != spec.shift_rank)
        throw std::invalid_argument("window needs one site list per track");
    for (const auto& track : sites)
        if (!std::is_sorted(track.begin(), track.end()) ||
            std::adjacent_find(track.begin(), track.end()) != track.end())
            throw std::invalid_argument("window sites must be strictly ascending");
    if (!std::is_sorted(fin_bits.begin(), fin_bits.end()) ||
        std::adjacent_find(fin_bits.begin(), fin_bits.end()) != fin_bits.end())
        throw std::invalid_argument("window finite bits must be strictly ascending");
    for (int b : fin_bits)
        if (b < 0 || b >= spec.fin_bits) throw std::invalid_argument("finite bit out of range");
    if (bit_count() > kMaxBits) throw std::invalid_argument("window exceeds 24 coordinates");
}

int Window::bit_count() const { return site_count() + static_cast<int>(fin_bits.size()); }

int Window::site_count() const {
    int n = 0;
    for (const auto& track : sites) n += static_cast<int>(track.size());
    return n;
}

int Window::site_coord(int track, int64_t pos) const {
    if (track < 0 || track >= static_cast<int>(sites.size())) return -1;
    int offset = 0;
    for (int t = 0; t < track; ++t) offset += static_cast<int>(sites[t].size());
    const auto& row = sites[track];
    auto it = std::lower_bound(row.begin(), row.end(), pos);
    if (it == row.end() || *it != pos) return -1;
    return offset + static_cast<int>(it - row.begin());
}

int Window::fin_coord(int bit) const {
    auto it = std::lower_bound(fin_bits.begin(), fin_bits.end(), bit);
    if (it == fin_bits.end() || *it != bit) return -1;
    return site_count() + static_cast<int>(it - fin_bits.begin());
}

bool Window::contains(const Window& other) const {
    if (sites.size() != other.sites.size()) return false;
    for (size_t t = 0; t < sites.size(); ++t)
        if (!std::includes(sites[t].begin(), sites[t].end(), other.sites[t].begin(),
                           other.sites[t].end()))
            return false;
    return std::includes(fin_bits.begin(), fin_bits.end(), other.fin_bits.begin(),
                         other.fin_bits.end());
}

bool Window::operator==(const Window& other) const {
    return sites == other.sites && fin_bits == other.fin_bits;
}

Window Window::merged(const Window& a, const Window& b) {
    if (a.sites.size() != b.sites.size())
        throw std::invalid_argument("windows over different track counts");
    Window out;
    out.sites.resize(a.sites.size());
    for (size_t t = 0; t < a.sites.size(); ++t) {
        std::set_union(a.sites[t].begin(), a.sites[t].end(), b.sites[t].begin(), b.sites[t].end(),
                       std::back_inserter(out.sites[t]));
    }
    std::set_union(a.fin_bits.begin(), a.fin_bits.end(), b.fin_bits.begin(), b.fin_bits.end(),
                   std::back_inserter(out.fin_bits));
    if (out.bit_count() > kMaxBits) throw std::invalid_argument("window exceeds 24 coordinates");
    return out;
}

CylinderFunction::CylinderFunction(GroupSpec spec, Window window, std::vector<Dyadic> table)
    : spec_(std::move(spec)), window_(std::move(window)), table_(std::move(table)) {
    if (table_.size() != (static_cast<size_t>(1) << window_.bit_count()))
        throw std::invalid_argument("table size must be 2^(window bits)");
}

CylinderFunction CylinderFunction::constant(const GroupSpec& spec, const Dyadic& value) {
    Window w(spec, std::vector<std::vector<int64_t>>(spec.shift_rank), {});
    return CylinderFunction(spec, std::move(w), {value});
}

bool CylinderFunction::is_zero() const {
    return std::all_of(table_.begin(), table_.end(), [](const Dyadic& d) { return d.is_zero(); });
}

bool CylinderFunction::is_projection() const {
    return std::all_of(table_.begin(), table_.end(),
                       [](const Dyadic& d) { return d.is_zero() || d.is_one(); });
}

Dyadic CylinderFunction::integral() const {
    Dyadic sum;
    for (const auto& v : table_) sum = sum + v;
    return Dyadic(sum.numerator(), sum.log2_denominator() + window_.bit_count());
}

Dyadic CylinderFunction::measure() const {
    if (!is_projection()) throw std::domain_error("measure needs a 0/1 valued function");
    return integral();
}

CylinderFunction CylinderFunction::extended(const Window& bigger) const {
    if (!bigger.contains(window_)) throw std::invalid_argument("extension target must contain the window");
    const int old_bits = window_.bit_count();
    std::vector<int> where(old_bits);
    int i = 0;
    for (size_t t = 0; t < window_.sites.size(); ++t)
        for (int64_t pos : window_.sites[t]) where[i++] = bigger.site_coord(static_cast<int>(t), pos);
    for (int b : window_.fin_bits) where[i++] = bigger.fin_coord(b);
    std::vector<Dyadic> out(static_cast<size_t>(1) << bigger.bit_count());
    for (uint32_t c = 0; c < out.size(); ++c) {
        uint32_t small = 0;
        for (int j = 0; j < old_bits; ++j) small |= ((c >> where[j]) & 1u) << j;
        out[c] = table_[small];
    }
    return CylinderFunction(spec_, bigger, std::move(out));
}

CylinderFunction CylinderFunction::normalized() const {
    const int bits = window_.bit_count();
    const size_t n = table_.size();
    std::vector<bool> keep(bits, false);
    for (int j = 0; j < bits; ++j) {
        for (uint32_t c = 0; c < n; ++c) {
            if ((c >> j) & 1u) continue;
            if (!(table_[c] == table_[c | (1u << j)])) {
                keep[j] = true;
                break;
            }
        }
    }
    Window w;
    w.sites.resize(window_.sites.size());
    int coord = 0;
    for (size_t t = 0; t < window_.sites.size(); ++t)
        for (int64_t pos : window_.sites[t])
            if (keep[coord++]) w.sites[t].push_back(pos);
    for (int b : window_.fin_bits)
        if (keep[coord++]) w.fin_bits.push_back(b);
    std::vector<int> kept;
    for (int j = 0; j < bits; ++j)
        if (keep[j]) kept.push_back(j);
    std::vector<Dyadic> out(static_cast<size_t>(1) << kept.size());
    for (uint32_t c = 0; c < out.size(); ++c) {
        uint32_t full = 0;
        for (size_t j = 0; j < kept.size(); ++j) full |= ((c >> j) & 1u) << kept[j];
        out[c] = table_[full];
    }
    return CylinderFunction(spec_, std::move(w), std::move(out));
}

namespace {

template <typename Op>
CylinderFunction pointwise(const CylinderFunction& a, const CylinderFunction& b, Op op) {
    require_same_spec(a, b);
    Window w = Window::merged(a.window(), b.window());
    CylinderFunction ea = a.extended(w), eb = b.extended(w);
    std::vector<Dyadic> out(ea.table().size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = op(ea.table()[i], eb.table()[i]);
    return CylinderFunction(a.spec(), std::move(w), std::move(out));
}

}  // namespace

CylinderFunction operator+(const CylinderFunction& a, const CylinderFunction& b) {
    return pointwise(a, b, [](const Dyadic& x, const Dyadic& y) { return x + y; });
}

CylinderFunction operator-(const CylinderFunction& a, const CylinderFunction& b) {
    return pointwise(a, b, [](const Dyadic& x, const Dyadic& y) { return x - y; });
}

CylinderFunction operator*(const CylinderFunction& a, const CylinderFunction& b) {
    return pointwise(a, b, [](const Dyadic& x, const Dyadic& y) { return x * y; });
}

CylinderFunction CylinderFunction::scaled(const Dyadic& c) const {
    std::vector<Dyadic> out(table_.size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = table_[i] * c;
    return CylinderFunction(spec_, window_, std::move(out));
}

bool CylinderFunction::operator==(const CylinderFunction& other) const {
    if (!(spec_ == other.spec_)) return false;
    Window w = Window::merged(window_, other.window_);
    return extended(w).table() == other.extended(w).table();
}

CylinderFunction hat(const GroupRingElement& f) {
    if (!f.supported_on_abelian_part())
        throw std::invalid_argument("transform needs support on the abelian part");
    const GroupSpec& spec = f.spec();
    std::vector<std::vector<int64_t>> sites(spec.shift_rank);
    uint32_t fin_used = 0;
    for (const auto& [g, c] : f.terms()) {
        for (const auto& [track, pos] : g.lamps) sites[track].push_back(pos);
        fin_used |= g.fin;
    }
    for (auto& track : sites) {
        std::sort(track.begin(), track.end());
        track.erase(std::unique(track.begin(), track.end()), track.end());
    }
    std::vector<int> fbits;
    for (int b = 0; b < spec.fin_bits; ++b)
        if ((fin_used >> b) & 1u) fbits.push_back(b);
    Window w(spec, std::move(sites), std::move(fbits));
    std::vector<Dyadic> table(static_cast<size_t>(1) << w.bit_count());
    for (const auto& [g, c] : f.terms()) {
        uint32_t mask = 0;
        for (const auto& [track, pos] : g.lamps) mask |= 1u << w.site_coord(track, pos);
        for (int b = 0; b < spec.fin_bits; ++b)
            if ((g.fin >> b) & 1u) mask |= 1u << w.fin_coord(b);
        for (uint32_t x = 0; x < table.size(); ++x) {
            if (std::popcount(mask & x) & 1)
                table[x] = table[x] - c;
            else
                table[x] = table[x] + c;
        }
    }
    return CylinderFunction(spec, std::move(w), std::move(table));
}

GroupRingElement unhat(const CylinderFunction& c) {
    const Window& w = c.window();
    const int bits = w.bit_count();
    std::vector<Dyadic> t = c.table();
    for (int j = 0; j < bits; ++j) {
        const uint32_t step = 1u << j;
        for (uint32_t x = 0; x < t.size(); ++x) {
            if (x & step) continue;
            Dyadic a = t[x], b = t[x | step];
            t[x] = a + b;
            t[x | step] = a - b;
        }
    }
    GroupRingElement out(c.spec());
    std::vector<std::pair<int, int64_t>> coords;  // coordinate -> (track, pos)
    for (size_t track = 0; track < w.sites.size(); ++track)
        for (int64_t pos : w.sites[track]) coords.emplace_back(static_cast<int>(track), pos);
    for (uint32_t mask = 0; mask < t.size(); ++mask) {
        Dyadic coeff(t[mask].numerator(), t[mask].log2_denominator() + bits);
        if (coeff.is_zero()) continue;
        GroupElement g = identity(c.spec());
        for (size_t j = 0; j < coords.size(); ++j)
            if ((mask >> j) & 1u) g.lamps.push_back(coords[j]);
        for (size_t j = 0; j < w.fin_bits.size(); ++j)
            if ((mask >> (coords.size() + j)) & 1u) g.fin |= 1u << w.fin_bits[j];
        out.add_term(g, coeff);
    }
    return out;
}

CylinderFunction act(const GroupElement& gamma, const CylinderFunction& f) {
    const GroupSpec& spec = f.spec();
    if (!gamma.lamps.empty() || gamma.fin != 0)
        throw std::invalid_argument("translation must have no abelian part");
    CylinderFunction base = f;
    if (gamma.aut != 0) {
        std::vector<int> all(spec.fin_bits);
        std::iota(all.begin(), all.end(), 0);
        base = f.extended(Window(spec, f.window().sites, all));
        BitMatrix at = spec.auts[gamma.aut].transpose();
        const int sc = base.window().site_count();
        const uint32_t site_mask = (1u << sc) - 1;
        std::vector<Dyadic> nt(base.table().size());
        for (uint32_t x = 0; x < nt.size(); ++x) {
            uint32_t fin = x >> sc;
            nt[x] = base.table()[(x & site_mask) | (at.apply(fin) << sc)];
        }
        base = CylinderFunction(spec, base.window(), std::move(nt));
    }
    Window w = base.window();
    for (size_t t = 0; t < w.sites.size(); ++t)
        for (auto& pos : w.sites[t]) pos += gamma.shifts[t];
    return CylinderFunction(spec, std::move(w), base.table());
}

ProjRelation proj_relate(const CylinderFunction& p, const CylinderFunction& q) {
    if (!p.is_projection() || !q.is_projection())
        throw std::invalid_argument("proj_relate needs 0/1 valued functions");
    CylinderFunction prod = p * q;
    if (prod == p) return ProjRelation::Below;
    if (prod.is_zero()) return ProjRelation::Orthogonal;
    return ProjRelation::Mixed;
}

std::vector<CylinderFunction> refine_partition(const std::vector<CylinderFunction>& gens,
                                               const std::vector<GroupElement>& phis) {
    if (gens.empty()) throw std::invalid_argument("refine_partition needs at least one generator");
    const GroupSpec& spec = gens[0].spec();
    CylinderFunction rest = CylinderFunction::constant(spec, Dyadic(1));
    for (const auto& g : gens) {
        if (!g.is_projection()) throw std::invalid_argument("generators must be projections");
        rest = rest - g;
    }
    if (!rest.is_projection())
        throw std::invalid_argument("generators must be pairwise orthogonal with sum at most 1");
    std::vector<CylinderFunction> gplus = gens;
    if (!rest.is_zero()) gplus.push_back(rest);

    std::vector<CylinderFunction> parts{CylinderFunction::constant(spec, Dyadic(1))};
    for (const auto& phi : phis) {
        GroupElement inv = inverse(spec, phi);
        std::vector<CylinderFunction> next;
        for (const auto& p : parts) {
            for (const auto& q : gplus) {
                CylinderFunction piece = p * act(inv, q);
                if (!piece.is_zero()) next.push_back(std::move(piece));
            }
        }
        parts = std::move(next);
    }
    for (auto& p : parts) p = p.normalized();
    return parts;
}

}  // namespace kergrad
