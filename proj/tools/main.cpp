// Command-line front end: operator presets, box schedules, component census,
// closed-form evaluators, verification suites, and CSV/JSON output.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "kergrad/census.hpp"
#include "kergrad/closed_forms.hpp"
#include "kergrad/folner.hpp"
#include "kergrad/graph_families.hpp"
#include "kergrad/group_ring.hpp"
#include "kergrad/text_format.hpp"
#include "kergrad/tgraph.hpp"
#include "kergrad/verify.hpp"

using json = nlohmann::json;
using namespace kergrad;

namespace {

std::string timestamp_line() {
    std::time_t now = std::time(nullptr);
    char buf[64];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    return std::string("# generated ") + buf;
}

// %.17g keeps doubles round-trippable and runs byte-reproducible.
std::string float_str(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string rational_str(const mpq_class& q) {
    mpq_class c = q;
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

void emit(const std::string& body, const std::string& out_path, bool meta) {
    std::string full = meta ? timestamp_line() + "\n" + body : body;
    if (out_path.empty()) {
        std::cout << full;
    } else {
        std::ofstream f(out_path);
        if (!f) throw std::invalid_argument("cannot open output path: " + out_path);
        f << full;
    }
}

std::vector<int64_t> parse_int_list(const std::string& csv) {
    std::vector<int64_t> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        size_t used = 0;
        int64_t v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("not an integer: " + tok);
        out.push_back(v);
    }
    return out;
}

FieldSpec field_of(int64_t arg) {
    if (arg == 0) return FieldSpec::rationals();
    if (arg < 0) throw std::invalid_argument("field must be 0 or an odd prime");
    return FieldSpec::gf(uint64_t(arg));
}

// A finite matrix is a group-ring matrix over the trivial group.
GroupRingMatrix graph_operator(const LabeledGraph& g) {
    GroupSpec triv(0, 0);
    GroupRingMatrix M(triv, g.size(), g.size());
    for (const auto& [key, label] : g.edges())
        M.at(key.first, key.second).add_term(identity(triv), label);
    return M;
}

// Presets: lamplighter, halved:<preset>, family:G1:<k>, family:G2:<l>,
// family:G3:<k>,<l>; anything else is parsed as an operator expression.
GroupRingMatrix resolve_operator(const std::string& name) {
    if (name == "lamplighter")
        return GroupRingMatrix::from_element(parse_element("t + t^-1 + t*u[0] + u[0]*t^-1"));
    if (name.rfind("halved:", 0) == 0)
        return halving_construct(resolve_operator(name.substr(7)));
    if (name.rfind("family:", 0) == 0) {
        std::string rest = name.substr(7);
        try {
            if (rest.rfind("G1:", 0) == 0) return graph_operator(family_g1(std::stoi(rest.substr(3))));
            if (rest.rfind("G2:", 0) == 0) return graph_operator(family_g2(std::stoi(rest.substr(3))));
            if (rest.rfind("G3:", 0) == 0) {
                std::string args = rest.substr(3);
                size_t comma = args.find(',');
                if (comma == std::string::npos)
                    throw std::invalid_argument("family:G3 needs two parameters");
                return graph_operator(family_g3(std::stoi(args.substr(0, comma)),
                                                std::stoi(args.substr(comma + 1))));
            }
        } catch (const std::out_of_range&) {
            throw std::invalid_argument("family parameter out of range in " + name);
        }
        throw std::invalid_argument("unknown family preset: " + name);
    }
    return GroupRingMatrix::from_element(parse_element(name));
}

std::vector<FolnerBox> parse_boxes(const GroupSpec& spec, const std::string& boxes) {
    std::vector<FolnerBox> out;
    if (spec.shift_rank == 0) {
        if (!boxes.empty())
            throw std::invalid_argument("operator has no shift part; drop --boxes");
        out.push_back(FolnerBox(spec, {}, {}));
        return out;
    }
    std::vector<std::pair<int64_t, int64_t>> sched;
    if (boxes.empty()) {
        sched = default_schedule();
    } else {
        std::stringstream ss(boxes);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            size_t colon = tok.find(':');
            if (colon == std::string::npos)
                throw std::invalid_argument("box wants the form n:m, got " + tok);
            sched.emplace_back(std::stoll(tok.substr(0, colon)), std::stoll(tok.substr(colon + 1)));
        }
        if (sched.empty()) throw std::invalid_argument("empty box schedule");
    }
    for (auto [n, m] : sched) out.push_back(standard_box(spec, n, m));
    return out;
}

int cmd_estimate(const std::string& op, int64_t field_arg, const std::string& boxes, int workers,
                 const std::string& format, const std::string& out, bool meta) {
    GroupRingMatrix T = resolve_operator(op);
    FieldSpec f = field_of(field_arg);
    std::vector<BoxResult> rows = gradient_estimate(T, parse_boxes(T.spec(), boxes), f, workers);
    if (format == "csv") {
        std::ostringstream os;
        os << "box,dim,size,estimate_num,estimate_den,estimate_float\n";
        for (const auto& r : rows) {
            mpq_class e = r.estimate;
            e.canonicalize();
            os << (r.label.empty() ? "point" : r.label) << ',' << r.kernel_dim << ','
               << r.box_size.get_str() << ',' << e.get_num().get_str() << ','
               << e.get_den().get_str() << ',' << float_str(e.get_d()) << '\n';
        }
        emit(os.str(), out, meta);
    } else {
        json doc;
        doc["command"] = "estimate";
        doc["operator"] = op;
        doc["field"] = f.str();
        json arr = json::array();
        for (const auto& r : rows)
            arr.push_back({{"box", r.label.empty() ? "point" : r.label},
                           {"dim", r.kernel_dim},
                           {"size", r.box_size.get_str()},
                           {"estimate", rational_str(r.estimate)},
                           {"estimate_float", r.estimate.get_d()},
                           {"eps", rational_str(r.eps)}});
        doc["rows"] = arr;
        emit(doc.dump(2) + "\n", out, meta);
    }
    return 0;
}

int cmd_census(const std::string& op, int window, int64_t field_arg, const std::string& out,
               bool meta) {
    GroupRingMatrix T = resolve_operator(op);
    if (T.rows() != 1 || T.cols() != 1)
        throw std::invalid_argument("census wants a single group-ring element");
    FieldSpec f = field_of(field_arg);
    TDecomposition dec = TDecomposition::from_operator(T.at(0, 0));
    CensusResult c = component_census(dec, window);
    json arr = json::array();
    for (size_t i = 0; i < c.types.size(); ++i) {
        const CensusTypeRow& row = c.types[i];
        int64_t kd = build_M(dec, c.instances[row.representative].verts).kernel_dim(f);
        arr.push_back({{"type_id", int64_t(i)},
                       {"vertices", row.vertex_count},
                       {"instances", row.instances},
                       {"measure", rational_str(row.measure.to_rational())},
                       {"kernel_dim", kd},
                       {"interior", row.interior}});
    }
    emit(arr.dump(2) + "\n", out, meta);
    return 0;
}

int cmd_families(bool check, int kmax, int lmax, const std::string& primes_csv,
                 const std::string& out, bool meta) {
    if (!check) throw std::invalid_argument("families wants --check");
    if (kmax < 1 || lmax < 1) throw std::invalid_argument("cutoffs must be at least 1");
    std::vector<FieldSpec> fields = {FieldSpec::rationals()};
    for (int64_t p : parse_int_list(primes_csv)) fields.push_back(field_of(p));
    std::ostringstream os;
    os << "family,k,l,field,closed,elimination,status\n";
    bool all_ok = true;
    auto row = [&](const char* fam, int k, int l, const FieldSpec& f, int64_t closed,
                   int64_t elim) {
        bool ok = closed == elim;
        all_ok = all_ok && ok;
        os << fam << ',' << (k ? std::to_string(k) : "") << ',' << (l ? std::to_string(l) : "")
           << ',' << f.str() << ',' << closed << ',' << elim << ',' << (ok ? "pass" : "fail")
           << '\n';
    };
    for (int k = 1; k <= kmax; ++k)
        for (const FieldSpec& f : fields)
            row("G1", k, 0, f, family_g1_kernel(k, f), family_g1(k).kernel_dim(f));
    for (int l = 1; l <= lmax; ++l)
        for (const FieldSpec& f : fields)
            row("G2", 0, l, f, family_g2_kernel(l, f), family_g2(l).kernel_dim(f));
    for (int k = 1; k <= kmax; ++k)
        for (int l = 1; l <= lmax; ++l)
            for (const FieldSpec& f : fields)
                row("G3", k, l, f, family_g3_kernel(k, l, f), family_g3(k, l).kernel_dim(f));
    emit(os.str(), out, meta);
    return all_ok ? 0 : 1;
}

void emit_value(const std::string& quantity, const mpq_class& exact, const mpq_class& tail,
                const std::string& out, bool meta) {
    json doc;
    doc["quantity"] = quantity;
    doc["exact"] = rational_str(exact);
    doc["float"] = exact.get_d();
    doc["tail"] = rational_str(tail);
    emit(doc.dump(2) + "\n", out, meta);
}

int cmd_verify(const std::string& suite, const std::string& out, bool meta) {
    if (!is_suite(suite)) {
        std::ostringstream names;
        for (const auto& n : suite_names()) names << ' ' << n;
        std::cerr << "unknown suite '" << suite << "'; valid:" << names.str() << "\n";
        return 2;
    }
    std::vector<CheckResult> rows = run_suite(suite);
    std::ostringstream os;
    bool ok = true;
    for (const auto& r : rows) {
        os << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail << '\n';
        ok = ok && r.pass;
    }
    os << "suite " << suite << ": " << (ok ? "pass" : "FAIL") << " (" << rows.size()
       << " checks)\n";
    emit(os.str(), out, meta);
    return ok ? 0 : 1;
}

int cmd_table(const std::string& primes_csv, const std::string& format, const std::string& out,
              bool meta) {
    std::vector<int64_t> ps = parse_int_list(primes_csv);
    if (ps.empty()) throw std::invalid_argument("need at least one prime");
    std::set<uint64_t> uniq;
    for (int64_t p : ps) {
        if (p < 3) throw std::invalid_argument("primes must be odd and at least 3");
        uniq.insert(uint64_t(p));
    }
    std::ostringstream csv;
    json arr = json::array();
    csv << "prime,ord2,L,inner_exact,inner_float,with_1344_exact\n";
    for (uint64_t p : uniq) {
        CharData cd = char_data(p);  // rejects composites
        mpq_class inner = eval_thm13(p), with = eval_thm13(p, true);
        std::string joined;
        json jl = json::array();
        for (int64_t x : cd.L) {
            if (!joined.empty()) joined += ';';
            joined += std::to_string(x);
            jl.push_back(x);
        }
        csv << p << ',' << cd.ord2 << ',' << joined << ',' << rational_str(inner) << ','
            << float_str(inner.get_d()) << ',' << rational_str(with) << '\n';
        arr.push_back({{"prime", p},
                       {"ord2", cd.ord2},
                       {"L", jl},
                       {"inner_exact", rational_str(inner)},
                       {"inner_float", inner.get_d()},
                       {"with_1344_exact", rational_str(with)}});
    }
    emit(format == "csv" ? csv.str() : arr.dump(2) + "\n", out, meta);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact kernel gradients over group rings"};
    app.require_subcommand(1);

    std::string op, boxes, format = "csv", out_path, suite, primes = "3,5,7,11,13", set_csv;
    int64_t field_arg = 0;
    int window = 8, workers = 0, kmax = 10, lmax = 33, trunc = 0;
    uint64_t prime = 3;
    bool no_meta = false, check = false, with_1344 = false;

    auto add_output = [&](CLI::App* cmd) {
        cmd->add_option("--output", out_path, "write here instead of stdout");
        cmd->add_flag("--no-meta", no_meta, "omit the timestamp header line");
    };

    CLI::App* est = app.add_subcommand("estimate", "kernel dimension per box along a schedule");
    est->add_option("--operator", op, "preset or operator expression")->required();
    est->add_option("--field", field_arg, "0 for the rationals, an odd prime otherwise");
    est->add_option("--boxes", boxes, "n:m pairs, comma separated (default: standard ladder)");
    est->add_option("--workers", workers, "threads (default: KERGRAD_WORKERS, else 1)");
    est->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    add_output(est);

    CLI::App* cen = app.add_subcommand("census", "window component census of an operator");
    cen->add_option("--operator", op, "preset or operator expression")->required();
    cen->add_option("--window", window, "window width in lamp sites")->required();
    cen->add_option("--field", field_arg, "0 for the rationals, an odd prime otherwise");
    add_output(cen);

    CLI::App* fam = app.add_subcommand("families", "closed-form vs elimination sweep");
    fam->add_flag("--check", check, "run the sweep");
    fam->add_option("--kmax", kmax, "largest k");
    fam->add_option("--lmax", lmax, "largest l");
    fam->add_option("--primes", primes, "comma separated odd primes");
    add_output(fam);

    CLI::App* cf = app.add_subcommand("closed-form", "exact series and closed-form values");
    cf->require_subcommand(1);
    CLI::App* t13 = cf->add_subcommand("thm13", "characteristic-p gradient value");
    t13->add_option("--prime", prime, "odd prime")->required();
    t13->add_flag("--with-1344", with_1344, "scale by the group order 1344");
    add_output(t13);
    CLI::App* t12 = cf->add_subcommand("thm12", "alternating series partial value");
    t12->add_option("--trunc", trunc, "truncation depth K")->required();
    add_output(t12);
    CLI::App* sig = cf->add_subcommand("sigma", "set-parameterized family value");
    sig->add_option("--set", set_csv, "comma separated non-negative integers");
    add_output(sig);

    CLI::App* ver = app.add_subcommand("verify", "run a named property suite");
    ver->add_option("--suite", suite, "linalg, lemmas31, pontryagin, tgraph, families, "
                                      "closedforms, crosscheck, or all")
        ->required();
    add_output(ver);

    CLI::App* tab = app.add_subcommand("table", "closed-form value table over primes");
    tab->add_option("--primes", primes, "comma separated odd primes")->required();
    tab->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    add_output(tab);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    bool meta = !no_meta;
    try {
        if (app.got_subcommand(est))
            return cmd_estimate(op, field_arg, boxes, workers, format, out_path, meta);
        if (app.got_subcommand(cen)) return cmd_census(op, window, field_arg, out_path, meta);
        if (app.got_subcommand(fam))
            return cmd_families(check, kmax, lmax, primes, out_path, meta);
        if (app.got_subcommand(cf)) {
            if (cf->got_subcommand(t13)) {
                mpq_class v = eval_thm13(prime, with_1344);
                std::string q = "thm13 p=" + std::to_string(prime) + (with_1344 ? " x1344" : "");
                emit_value(q, v, mpq_class(0), out_path, meta);
                return 0;
            }
            if (cf->got_subcommand(t12)) {
                ValueBracket b = eval_thm12_partial(trunc);
                emit_value("thm12 K=" + std::to_string(trunc), b.upper, b.upper - b.lower,
                           out_path, meta);
                return 0;
            }
            std::vector<int64_t> sigma = parse_int_list(set_csv);
            std::string q = "sigma {";
            for (size_t i = 0; i < sigma.size(); ++i)
                q += (i ? "," : "") + std::to_string(sigma[i]);
            q += "}";
            emit_value(q, eval_sigma(sigma).to_rational(), mpq_class(0), out_path, meta);
            return 0;
        }
        if (app.got_subcommand(ver)) return cmd_verify(suite, out_path, meta);
        if (app.got_subcommand(tab)) return cmd_table(primes, format, out_path, meta);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
