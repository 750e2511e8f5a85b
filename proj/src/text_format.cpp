#include "kergrad/text_format.hpp"
#include <cctype>
#include <vector>

namespace kergrad {

namespace {

struct Atom {
    enum Kind { E, Shift, Lamp, Fin } kind = E;
    int track = 0;
    int64_t power = 1;              // shifts only
    std::vector<int64_t> positions; // lamps only
    std::vector<int> bits;          // fin only
};

struct Term {
    Dyadic coeff = Dyadic(1);
    std::vector<Atom> atoms;
};

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    std::vector<Term> parse() {
        std::vector<Term> terms;
        skip();
        if (eof()) fail("empty element");
        bool neg = eat('-');
        if (!neg) eat('+');
        terms.push_back(term(neg));
        skip();
        while (!eof()) {
            if (eat('+')) terms.push_back(term(false));
            else if (eat('-')) terms.push_back(term(true));
            else fail("expected '+' or '-'");
            skip();
        }
        return terms;
    }

private:
    const std::string& s_;
    size_t i_ = 0;

    [[noreturn]] void fail(const std::string& why) {
        throw std::invalid_argument("parse error at offset " + std::to_string(i_) + ": " + why);
    }
    bool eof() const { return i_ >= s_.size(); }
    char peek() const { return eof() ? '\0' : s_[i_]; }
    void skip() {
        while (!eof() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool eat(char c) {
        skip();
        if (peek() == c) {
            ++i_;
            return true;
        }
        return false;
    }

    int64_t integer() {
        skip();
        bool neg = eat('-');
        skip();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
        int64_t v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) v = v * 10 + (s_[i_++] - '0');
        return neg ? -v : v;
    }

    std::optional<int> track_suffix() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) return std::nullopt;
        int v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) v = v * 10 + (s_[i_++] - '0');
        return v;
    }

    Term term(bool negate) {
        Term t;
        bool have_coeff = false;
        skip();
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            have_coeff = true;
            mpz_class num(integer());
            unsigned den = 0;
            if (peek() == '/') {
                ++i_;
                if (s_.compare(i_, 2, "2^") != 0) fail("denominator must be a power of two");
                i_ += 2;
                int64_t e = integer();
                if (e < 0) fail("negative denominator exponent");
                den = static_cast<unsigned>(e);
            }
            t.coeff = Dyadic(num, den);
            eat('*');
        }
        if (negate) t.coeff = -t.coeff;
        skip();
        while (!eof() && peek() != '+' && peek() != '-') {
            t.atoms.push_back(atom());
            eat('*');
            skip();
        }
        if (!have_coeff && t.atoms.empty()) fail("empty term");
        return t;
    }

    Atom atom() {
        skip();
        Atom a;
        if (s_.compare(i_, 3, "phi") == 0) {
            i_ += 3;
            a.kind = Atom::Fin;
            if (!eat('[')) fail("phi needs a bit list");
            do a.bits.push_back(static_cast<int>(integer()));
            while (eat(','));
            if (!eat(']')) fail("unterminated bit list");
            for (int b : a.bits)
                if (b < 0) fail("negative phi bit");
            return a;
        }
        char c = peek();
        if (c == 'e') {
            ++i_;
            a.kind = Atom::E;
            return a;
        }
        if (c == 't') {
            ++i_;
            a.kind = Atom::Shift;
            a.track = track_suffix().value_or(0);
            if (eat('^')) a.power = integer();
            return a;
        }
        if (c == 'u') {
            ++i_;
            a.kind = Atom::Lamp;
            a.track = track_suffix().value_or(0);
            if (!eat('[')) fail("u needs a position list");
            do a.positions.push_back(integer());
            while (eat(','));
            if (!eat(']')) fail("unterminated position list");
            return a;
        }
        fail("expected an atom (e, t, u, phi)");
    }
};

GroupSpec infer_spec(const std::vector<Term>& terms) {
    int d = 0, m = 0;
    for (auto& t : terms)
        for (auto& a : t.atoms) {
            if (a.kind == Atom::Shift || a.kind == Atom::Lamp) d = std::max(d, a.track + 1);
            if (a.kind == Atom::Fin)
                for (int b : a.bits) m = std::max(m, b + 1);
        }
    return GroupSpec(d, m);
}

GroupRingElement build(const std::vector<Term>& terms, const GroupSpec& spec) {
    GroupRingElement out(spec);
    for (auto& t : terms) {
        GroupElement g = identity(spec);
        for (auto& a : t.atoms) {
            switch (a.kind) {
                case Atom::E:
                    break;
                case Atom::Shift:
                    g = mul(spec, g, shift_gen(spec, a.track, a.power));
                    break;
                case Atom::Lamp:
                    for (int64_t p : a.positions) g = mul(spec, g, lamp_gen(spec, a.track, p));
                    break;
                case Atom::Fin:
                    for (int b : a.bits) g = mul(spec, g, fin_gen(spec, b));
                    break;
            }
        }
        out.add_term(g, t.coeff);
    }
    return out;
}

} // namespace

GroupRingElement parse_element(const std::string& text) {
    auto terms = Parser(text).parse();
    return build(terms, infer_spec(terms));
}

GroupRingElement parse_element(const std::string& text, const GroupSpec& spec) {
    return build(Parser(text).parse(), spec);
}

std::string format_element(const GroupRingElement& e) {
    return e.str();
}

} // namespace kergrad
