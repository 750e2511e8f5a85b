#include "kergrad/group_ring.hpp"
#include <algorithm>

namespace kergrad {

GroupRingElement::GroupRingElement(GroupSpec spec, const GroupElement& g, Dyadic c)
    : spec_(std::move(spec)) {
    add_term(g, c);
}

Dyadic GroupRingElement::coeff(const GroupElement& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? Dyadic(0) : it->second;
}

void GroupRingElement::add_term(const GroupElement& g, const Dyadic& c) {
    if (c.is_zero()) return;
    validate_element(spec_, g);
    auto [it, fresh] = terms_.emplace(g, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
    if (!(spec_ == o.spec_)) throw std::invalid_argument("group ring spec mismatch");
    for (auto& [g, c] : o.terms_) add_term(g, c);
    return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& o) {
    if (!(spec_ == o.spec_)) throw std::invalid_argument("group ring spec mismatch");
    for (auto& [g, c] : o.terms_) add_term(g, -c);
    return *this;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
    if (!(a.spec_ == b.spec_)) throw std::invalid_argument("group ring spec mismatch");
    GroupRingElement out(a.spec_);
    for (auto& [g, c] : a.terms_)
        for (auto& [h, d] : b.terms_) out.add_term(mul(a.spec_, g, h), c * d);
    return out;
}

GroupRingElement GroupRingElement::scaled(const Dyadic& c) const {
    GroupRingElement out(spec_);
    if (c.is_zero()) return out;
    for (auto& [g, d] : terms_) out.terms_.emplace(g, d * c);
    return out;
}

bool GroupRingElement::supported_on_abelian_part() const {
    for (auto& [g, c] : terms_)
        if (!g.is_abelian_part()) return false;
    return true;
}

std::string GroupRingElement::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto& [g, c] : terms_) {
        std::string cs = c.str();
        if (!first) {
            if (cs[0] == '-') {
                s += " - ";
                cs = cs.substr(1);
            } else {
                s += " + ";
            }
        }
        first = false;
        std::string gs = element_str(spec_, g);
        if (cs == "1" && gs != "e") s += gs;
        else if (gs == "e") s += cs;
        else s += cs + " " + gs;
    }
    return s;
}

GroupRingMatrix::GroupRingMatrix(GroupSpec spec, int rows, int cols)
    : spec_(std::move(spec)), rows_(rows), cols_(cols) {
    if (rows <= 0 || cols <= 0) throw std::invalid_argument("bad group ring matrix shape");
    data_.assign(static_cast<size_t>(rows) * cols, GroupRingElement(spec_));
}

GroupRingElement& GroupRingMatrix::at(int r, int c) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("matrix index");
    return data_[static_cast<size_t>(r) * cols_ + c];
}

const GroupRingElement& GroupRingMatrix::at(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("matrix index");
    return data_[static_cast<size_t>(r) * cols_ + c];
}

GroupRingMatrix GroupRingMatrix::from_element(const GroupRingElement& e) {
    GroupRingMatrix m(e.spec(), 1, 1);
    m.at(0, 0) = e;
    return m;
}

int lambda_index(const GroupSpec& spec, uint32_t fin, int aut) {
    return static_cast<int>(fin) * spec.aut_count() + aut;
}

GroupRingMatrix regular_rep_expand(const GroupRingMatrix& T) {
    const GroupSpec& spec = T.spec();
    int n = spec.lambda_count();
    GroupSpec flat(spec.shift_rank, 0);
    GroupRingMatrix out(flat, T.rows() * n, T.cols() * n);
    // lambda_v = (fin_t, aut_t) * lambda_u, multiplied in the finite factor.
    for (int i = 0; i < T.rows(); ++i)
        for (int j = 0; j < T.cols(); ++j)
            for (auto& [g, c] : T.at(i, j).terms()) {
                GroupElement bare;
                bare.shifts = g.shifts;
                bare.lamps = g.lamps;
                for (uint32_t fu = 0; fu < (1u << spec.fin_bits); ++fu)
                    for (int au = 0; au < spec.aut_count(); ++au) {
                        uint32_t fv = g.fin ^ spec.auts[g.aut].apply(fu);
                        int av = spec.aut_compose(g.aut, au);
                        int u = lambda_index(spec, fu, au);
                        int v = lambda_index(spec, fv, av);
                        out.at(i * n + v, j * n + u).add_term(bare, c);
                    }
            }
    return out;
}

GroupRingElement extend_spec(const GroupRingElement& e, const GroupSpec& bigger) {
    if (bigger.shift_rank < e.spec().shift_rank || bigger.fin_bits < e.spec().fin_bits)
        throw std::invalid_argument("extend_spec cannot shrink the group");
    GroupRingElement out(bigger);
    for (auto& [g, c] : e.terms()) {
        GroupElement h = g;
        h.shifts.resize(bigger.shift_rank, 0);
        out.add_term(h, c);
    }
    return out;
}

GroupRingMatrix halving_construct(const GroupRingMatrix& T) {
    const GroupSpec& spec = T.spec();
    if (T.rows() < T.cols())
        throw std::invalid_argument("halving_construct needs rows >= cols");
    int m = spec.fin_bits;
    std::vector<BitMatrix> auts;
    for (auto& a : spec.auts) {
        BitMatrix b = BitMatrix::identity(m + 1);
        for (int i = 0; i < m; ++i) b.row[i] = a.row[i];
        auts.push_back(b);
    }
    GroupSpec big(spec.shift_rank, m + 1, auts);
    GroupElement w = fin_gen(big, m);
    GroupRingElement half_minus(big), half_plus(big);
    half_minus.add_term(identity(big), Dyadic(mpz_class(1), 1));
    half_minus.add_term(w, Dyadic(mpz_class(-1), 1));
    half_plus.add_term(identity(big), Dyadic(mpz_class(1), 1));
    half_plus.add_term(w, Dyadic(mpz_class(1), 1));
    GroupRingMatrix out(big, T.rows(), T.cols());
    for (int i = 0; i < T.rows(); ++i)
        for (int j = 0; j < T.cols(); ++j) {
            GroupRingElement s = extend_spec(T.at(i, j), big) * half_plus;
            if (i == j) s += half_minus;
            out.at(i, j) = s;
        }
    return out;
}

} // namespace kergrad
