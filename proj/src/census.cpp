#include "kergrad/census.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace kergrad {

namespace {

// Seed spaces are enumerated in full, so keep them small.
constexpr int kMaxSeedBits = 20;

struct Probe {
    bool known = false;
    Dyadic value;
};

// The data a frame position pins down: per-track offsets plus the finite
// block contents after the frame's automorphism.
struct FramePins {
    std::vector<int64_t> off;
    uint32_t fin = 0;
};

FramePins pins_of(const GroupSpec& spec, const GroupElement& g, uint32_t seed_fin) {
    FramePins p;
    p.off = g.shifts;
    // act by g sends the atom [fin = v] to [fin = (g.aut^T)^-1 v].
    p.fin = spec.auts[g.aut].transpose().inverse().apply(seed_fin);
    return p;
}

// Evaluate fh on the partial configuration pinned by a frame over the seed.
// Sites inside the window read the seed bit; a site outside is left free, and
// the value counts as known only if it does not depend on the free sites.
// Consulted pinned coordinates are recorded per track.
Probe probe_value(const CylinderFunction& fh, const FramePins& pins, uint64_t seed, int width,
                  std::vector<std::set<int64_t>>& consulted, bool& fin_consulted) {
    const Window& w = fh.window();
    uint32_t base = 0;
    std::vector<int> free_coords;
    int coord = 0;
    for (size_t track = 0; track < w.sites.size(); ++track) {
        for (int64_t site : w.sites[track]) {
            int64_t sc = site - pins.off[track];
            if (sc >= 0 && sc < width) {
                consulted[track].insert(sc);
                if ((seed >> (track * width + sc)) & 1) base |= 1u << coord;
            } else {
                free_coords.push_back(coord);
            }
            ++coord;
        }
    }
    for (int bit : w.fin_bits) {
        fin_consulted = true;
        if ((pins.fin >> bit) & 1) base |= 1u << coord;
        ++coord;
    }

    Probe out;
    for (uint64_t u = 0; u < (uint64_t(1) << free_coords.size()); ++u) {
        uint32_t idx = base;
        for (size_t i = 0; i < free_coords.size(); ++i)
            if ((u >> i) & 1) idx |= 1u << free_coords[i];
        const Dyadic& v = fh.value(idx);
        if (u == 0) {
            out.value = v;
        } else if (!(v == out.value)) {
            return out;  // depends on a free site
        }
    }
    out.known = true;
    return out;
}

bool frame_in_range(const GroupElement& g, int width) {
    for (int64_t s : g.shifts)
        if (s > width || s < -width) return false;
    return true;
}

std::string vertex_key(const Window& w, uint32_t idx) {
    std::ostringstream os;
    for (size_t track = 0; track < w.sites.size(); ++track) {
        os << 't' << track << ':';
        for (int64_t s : w.sites[track]) os << s << ',';
        os << ';';
    }
    os << 'f';
    for (int b : w.fin_bits) os << b << ',';
    os << '#' << idx;
    return os.str();
}

}  // namespace

CensusResult component_census(const TDecomposition& dec, int width) {
    const GroupSpec& spec = dec.spec;
    const int tracks = spec.shift_rank;
    const int m = spec.fin_bits;
    if (width < 1) throw std::invalid_argument("census width must be positive");
    const int64_t seed_bits = int64_t(width) * tracks + m;
    if (seed_bits > kMaxSeedBits) throw std::invalid_argument("census seed space too large");

    std::vector<CylinderFunction> norm;
    norm.reserve(dec.terms.size());
    for (const auto& term : dec.terms) norm.push_back(term.fhat.normalized());

    CensusResult res;
    res.seeds = int64_t(1) << seed_bits;
    res.interior_measure = Dyadic(0);

    std::map<std::string, size_t> seen;  // instance key -> index

    for (uint64_t seed = 0; seed < (uint64_t(1) << seed_bits); ++seed) {
        const uint32_t seed_fin = uint32_t(seed >> (width * tracks));

        std::vector<std::set<int64_t>> consulted(tracks);
        bool fin_consulted = false;
        bool incomplete = false;

        std::map<GroupElement, bool> visited;
        std::deque<GroupElement> queue;
        GroupElement root = identity(spec);
        visited.emplace(root, true);
        queue.push_back(root);

        while (!queue.empty() && !incomplete) {
            GroupElement g = queue.front();
            queue.pop_front();
            FramePins pins = pins_of(spec, g, seed_fin);
            for (size_t k = 0; k < dec.terms.size() && !incomplete; ++k) {
                // Outgoing move: does term k fire at this frame?
                Probe fwd = probe_value(norm[k], pins, seed, width, consulted, fin_consulted);
                if (!fwd.known) {
                    incomplete = true;
                    break;
                }
                if (!fwd.value.is_zero()) {
                    GroupElement tgt = mul(spec, dec.terms[k].gamma, g);
                    if (!frame_in_range(tgt, width)) {
                        incomplete = true;
                        break;
                    }
                    if (visited.emplace(tgt, true).second) queue.push_back(tgt);
                }
                // Incoming move: does term k fire at the would-be predecessor?
                GroupElement pred = mul(spec, inverse(spec, dec.terms[k].gamma), g);
                Probe bwd =
                    probe_value(norm[k], pins_of(spec, pred, seed_fin), seed, width, consulted,
                                fin_consulted);
                if (!bwd.known) {
                    incomplete = true;
                    break;
                }
                if (!bwd.value.is_zero()) {
                    if (!frame_in_range(pred, width)) {
                        incomplete = true;
                        break;
                    }
                    if (visited.emplace(pred, true).second) queue.push_back(pred);
                }
            }
        }

        if (incomplete) {
            ++res.incomplete_seeds;
            continue;
        }

        // The component is closed; restrict each frame to the consulted
        // coordinates and merge frames that pin the same cylinder.
        const bool use_fin = fin_consulted || spec.aut_count() > 1;
        std::vector<std::vector<int64_t>> base_sites(tracks);
        int bits = use_fin ? m : 0;
        bool interior = true;
        for (int track = 0; track < tracks; ++track) {
            base_sites[track].assign(consulted[track].begin(), consulted[track].end());
            bits += int(base_sites[track].size());
            if (!base_sites[track].empty() && base_sites[track].back() > width - 2)
                interior = false;
        }

        std::map<std::string, std::pair<Window, uint32_t>> atoms;
        for (const auto& [g, unused] : visited) {
            (void)unused;
            FramePins pins = pins_of(spec, g, seed_fin);
            std::vector<std::vector<int64_t>> sites(tracks);
            uint32_t idx = 0;
            int coord = 0;
            for (int track = 0; track < tracks; ++track) {
                for (int64_t sc : base_sites[track]) {
                    sites[track].push_back(sc + pins.off[track]);
                    if ((seed >> (track * width + sc)) & 1) idx |= 1u << coord;
                    ++coord;
                }
            }
            std::vector<int> fins;
            if (use_fin) {
                for (int b = 0; b < m; ++b) {
                    fins.push_back(b);
                    if ((pins.fin >> b) & 1) idx |= 1u << coord;
                    ++coord;
                }
            }
            Window w(spec, std::move(sites), std::move(fins));
            std::string key = vertex_key(w, idx);
            atoms.emplace(std::move(key), std::make_pair(std::move(w), idx));
        }

        std::string instance_key;
        for (const auto& [key, unused] : atoms) {
            (void)unused;
            instance_key += key;
            instance_key += '|';
        }
        if (seen.count(instance_key)) continue;
        seen.emplace(instance_key, res.instances.size());

        CensusInstance inst;
        for (const auto& [key, wi] : atoms) {
            (void)key;
            std::vector<Dyadic> table(size_t(1) << bits, Dyadic(0));
            table[wi.second] = Dyadic(1);
            inst.verts.emplace_back(spec, wi.first, std::move(table));
        }
        inst.measure = Dyadic(mpz_class(int64_t(inst.verts.size())), unsigned(bits));
        inst.interior = interior;
        if (interior) res.interior_measure = res.interior_measure + inst.measure;
        res.instances.push_back(std::move(inst));
    }

    res.boundary_measure = Dyadic(1) - res.interior_measure;

    // Group instances by the canonical encoding of their move graph.
    std::map<std::pair<std::string, bool>, size_t> rows;
    for (size_t i = 0; i < res.instances.size(); ++i) {
        const CensusInstance& inst = res.instances[i];
        std::string key = canonical_encoding(build_M(dec, inst.verts));
        auto it = rows.find({key, inst.interior});
        if (it == rows.end()) {
            CensusTypeRow row;
            row.key = key;
            row.interior = inst.interior;
            row.vertex_count = int(inst.verts.size());
            row.instances = 1;
            row.measure = inst.measure;
            row.representative = i;
            rows.emplace(std::make_pair(key, inst.interior), res.types.size());
            res.types.push_back(std::move(row));
        } else {
            CensusTypeRow& row = res.types[it->second];
            row.instances += 1;
            row.measure = row.measure + inst.measure;
        }
    }
    std::sort(res.types.begin(), res.types.end(), [](const CensusTypeRow& a, const CensusTypeRow& b) {
        if (a.interior != b.interior) return a.interior;
        if (a.vertex_count != b.vertex_count) return a.vertex_count < b.vertex_count;
        return a.key < b.key;
    });
    return res;
}

}  // namespace kergrad
