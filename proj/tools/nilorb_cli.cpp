#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>

#include "nilorb/chevalley.hpp"
#include "nilorb/errors.hpp"
#include "nilorb/f2.hpp"
#include "nilorb/orbits.hpp"
#include "nilorb/pieces.hpp"
#include "nilorb/serialize.hpp"
#include "nilorb/springer.hpp"
#include "nilorb/verify.hpp"

using namespace nilorb;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct VerifyError : std::runtime_error {
    verify::Failures failures;
    explicit VerifyError(verify::Failures f) : std::runtime_error("verification failed"), failures(std::move(f)) {}
};

struct Options {
    std::string type = "C";
    int n = 0;
    std::string format = "json";
    std::string group = "G2";
    int q = 0;
    bool verify = false;
    bool verbose = false;
    bool mass = false;
    bool census = false;
    bool bfs = false;
    std::uint64_t cap = 10'000'000;
    std::string dump;
};

// Rank budget per subcommand.
int budget(const std::string& cmd) {
    if (cmd == "enumerate" || cmd == "springer") return 12;
    if (cmd == "hasse" || cmd == "pieces") return 8;
    if (cmd == "oracle") return 3;
    return 0;
}

LieType checked_type(const Options& o, const std::string& cmd) {
    LieType t;
    try {
        t = parse_type(o.type);
    } catch (const Error&) {
        throw UsageError("unknown type '" + o.type + "' (expected B, C or D)");
    }
    if (o.n < 0 || o.n > budget(cmd))
        throw UsageError(cmd + ": rank " + std::to_string(o.n) + " is outside the budget [0, " + std::to_string(budget(cmd)) + "]");
    return t;
}

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed)
        if (o.format == f) return;
    throw UsageError("format '" + o.format + "' is not supported by this subcommand");
}

void log(const Options& o, const std::string& msg) {
    if (o.verbose) std::cerr << msg << '\n';
}

void finish_verify(const Options& o, const verify::Failures& f) {
    if (!f.empty()) throw VerifyError(f);
    log(o, "verify: all checks passed");
}

std::string type_str(LieType t) { return std::string(1, type_char(t)); }

int run_enumerate(const Options& o) {
    require_format(o, {"json", "text", "csv"});
    const LieType t = checked_type(o, "enumerate");
    const auto orbits = enumerate(t, o.n);
    if (o.format == "json") {
        Json arr = Json::array();
        for (const auto& s : orbits) {
            Json j = to_json(s);
            if (t != LieType::D) j["centralizer_dim"] = centralizer_dim(s);
            arr.push_back(j);
        }
        std::cout << Json{{"type", type_str(t)}, {"n", o.n}, {"count", orbits.size()}, {"orbits", arr}}.dump(2) << '\n';
    } else if (o.format == "csv") {
        std::cout << "index,symbol,centralizer_dim\n";
        for (std::size_t i = 0; i < orbits.size(); ++i)
            std::cout << i << ",\"" << orbits[i].str() << "\"," << (t == LieType::D ? "" : std::to_string(centralizer_dim(orbits[i]))) << '\n';
    } else {
        for (const auto& s : orbits) std::cout << s.str() << '\n';
    }
    if (o.verify) finish_verify(o, verify::catalog(t, o.n));
    return kOk;
}

int run_springer(const Options& o) {
    require_format(o, {"json", "text"});
    const LieType t = checked_type(o, "springer");
    Json arr = Json::array();
    for (const auto& s : enumerate(t, o.n)) {
        Json j{{"symbol", to_json(s)}, {"gamma_star", to_json(gamma_star(s))}};
        if (t != LieType::D) {
            j["phi"] = to_json(phi(gamma_star(s), t));
            j["psi_star"] = to_json(psi_star(s));
        }
        if (o.format == "text") {
            std::cout << s.str() << " -> " << gamma_star(s).str();
            if (t != LieType::D) std::cout << " -> " << psi_star(s).parts.str();
            std::cout << '\n';
        }
        arr.push_back(j);
    }
    if (o.format == "json") std::cout << Json{{"type", type_str(t)}, {"n", o.n}, {"orbits", arr}}.dump(2) << '\n';
    if (o.verify) finish_verify(o, verify::springer(t, o.n));
    return kOk;
}

int run_hasse(const Options& o) {
    require_format(o, {"dot", "json", "text"});
    const LieType t = checked_type(o, "hasse");
    const auto orbits = enumerate(t, o.n);
    const auto edges = hasse(t, o.n);
    // Stable layout: larger centralizer first, ties by serialized symbol.
    std::vector<std::size_t> order(orbits.size());
    std::vector<std::string> keys(orbits.size());
    for (std::size_t i = 0; i < orbits.size(); ++i) {
        order[i] = i;
        keys[i] = to_json(orbits[i]).dump();
    }
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (t != LieType::D) {
            const int da = centralizer_dim(orbits[a]), db = centralizer_dim(orbits[b]);
            if (da != db) return da > db;
        }
        return keys[a] < keys[b];
    });
    std::vector<std::size_t> node(orbits.size());
    for (std::size_t i = 0; i < order.size(); ++i) node[order[i]] = i;
    auto sorted_edges = edges;
    for (auto& [lo, hi] : sorted_edges) std::tie(lo, hi) = std::pair{node[lo], node[hi]};
    std::sort(sorted_edges.begin(), sorted_edges.end());

    if (o.format == "dot") {
        std::cout << "digraph hasse_" << type_str(t) << o.n << " {\n  rankdir=BT;\n";
        for (std::size_t i = 0; i < order.size(); ++i) std::cout << "  n" << i << " [label=\"" << orbits[order[i]].str() << "\"];\n";
        for (const auto& [lo, hi] : sorted_edges) std::cout << "  n" << lo << " -> n" << hi << ";\n";
        std::cout << "}\n";
    } else if (o.format == "json") {
        Json nodes = Json::array(), es = Json::array();
        for (std::size_t i : order) nodes.push_back(to_json(orbits[i]));
        for (const auto& [lo, hi] : sorted_edges) es.push_back(Json::array({lo, hi}));
        std::cout << Json{{"type", type_str(t)}, {"n", o.n}, {"nodes", nodes}, {"covers", es}}.dump(2) << '\n';
    } else {
        for (const auto& [lo, hi] : sorted_edges) std::cout << orbits[order[lo]].str() << " < " << orbits[order[hi]].str() << '\n';
    }
    if (o.verify) finish_verify(o, verify::catalog(t, o.n));
    return kOk;
}

int run_pieces(const Options& o) {
    require_format(o, {"json", "text"});
    const LieType t = checked_type(o, "pieces");
    if (t == LieType::D) throw UsageError("pieces: type D is not supported (pieces are defined for types B and C)");
    const PieceReport r = piece_report(t, o.n, 6);
    if (o.format == "json") {
        std::cout << to_json(r).dump(2) << '\n';
    } else {
        for (const auto& block : r.by_psi) {
            std::cout << psi_star(r.orbits[block.front()]).parts.str() << ":";
            for (std::size_t i : block) std::cout << ' ' << r.orbits[i].str();
            std::cout << '\n';
        }
    }
    if (!r.agree) throw VerifyError(r.witnesses);
    if (o.verify) finish_verify(o, verify::pieces(t, o.n));
    return kOk;
}

int run_oracle(const Options& o) {
    require_format(o, {"json", "text"});
    const LieType t = checked_type(o, "oracle");
    std::ofstream dump;
    if (!o.dump.empty()) {
        dump.open(o.dump);
        if (!dump) throw UsageError("cannot open dump file '" + o.dump + "'");
        dump << "form_bits,symbol\n";
    }
    log(o, "oracle: sweeping all forms");
    const auto counts = f2::classify_all(t, o.n, o.dump.empty() ? nullptr : &dump);
    long total = 0;
    for (const auto& [s, c] : counts) total += c;
    if (o.format == "json") {
        Json arr = Json::array();
        for (const auto& [s, c] : counts) arr.push_back(Json{{"symbol", to_json(s)}, {"count", c}});
        std::cout << Json{{"type", type_str(t)}, {"n", o.n}, {"total", total}, {"orbits", arr}}.dump(2) << '\n';
    } else {
        for (const auto& [s, c] : counts) std::cout << s.str() << ' ' << c << '\n';
        std::cout << "total " << total << '\n';
    }
    if (o.verify) finish_verify(o, verify::oracle(t, o.n));
    return kOk;
}

int run_exceptional(const Options& o) {
    require_format(o, {"json", "text"});
    chev::Group g;
    try {
        g = chev::parse_group(o.group);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    const int p = g == chev::Group::G2p3 ? 3 : 2;
    const int q = o.q == 0 ? p : o.q;
    {
        int r = q;
        while (r % p == 0) r /= p;
        if (r != 1 || q > 16) throw UsageError("q must be a power of " + std::to_string(p) + " up to 16");
    }
    if (o.census && (g != chev::Group::G2p3 || q != 3)) throw UsageError("--census is only in budget for G2 at q = 3");

    Json out;
    out["group"] = chev::group_name(g);
    const bool table_only = !o.mass && !o.census && !o.bfs;
    if (o.mass) {
        const chev::MassReport m = chev::mass_check(g);
        if (o.format == "text")
            std::cout << "mass = " << m.sum.str() << (m.ok ? " OK" : " FAIL") << '\n';
        out["mass"] = Json{{"sum", m.sum.str()}, {"expected", m.expected.str()}, {"ok", m.ok}, {"problems", m.problems}};
        if (!m.ok) throw VerifyError(m.problems);
    }
    if (table_only) {
        Json rows = Json::array();
        for (const auto& row : chev::table(g)) {
            Json terms = Json::array();
            for (const auto& term : row.terms) terms.push_back(Json{{"root", term.root}, {"coeff", term.coeff}});
            rows.push_back(Json{{"orbit", row.orbit}, {"label", row.label}, {"terms", terms}, {"centralizer", row.centralizer_text}});
            if (o.format == "text") std::cout << row.label << ' ' << row.orbit << " |Z| = " << row.centralizer_text << '\n';
        }
        out["rows"] = rows;
    }
    if (o.bfs || o.census) {
        const chev::ChevalleyRep rep = chev::build_lie(g);
        const chev::FiniteField f(q);
        if (o.bfs) {
            const chev::CoadjointAction act(rep, f);
            Json sizes = Json::object();
            const auto rows = chev::table(g);
            QPoly order;
            for (const auto& row : rows)
                if (row.terms.empty()) order = row.centralizer;
            for (const auto& row : rows) {
                // Rows the table predicts to exceed the cap are not attempted.
                const Rational predicted = order.eval(q) / row.centralizer.eval(q);
                if (predicted > Rational(static_cast<std::int64_t>(o.cap))) {
                    const std::string msg = "skipped, predicted " + std::to_string(predicted.numerator());
                    sizes[row.label] = msg;
                    if (o.format == "text") std::cout << row.label << ' ' << msg << '\n';
                    continue;
                }
                std::vector<int> v;
                try {
                    v = chev::materialize_rep(rep, row, f);
                } catch (const Error& e) {
                    if (e.kind() != ErrorKind::ParameterUnavailable) throw;
                    sizes[row.label] = "parameter unavailable";
                    if (o.format == "text") std::cout << row.label << " parameter unavailable\n";
                    continue;
                }
                log(o, "bfs: " + row.label);
                const chev::BfsResult r = chev::orbit_bfs(act, act.pack(v), o.cap);
                const std::string s = r.capped ? "> " + std::to_string(o.cap) : std::to_string(r.size);
                sizes[row.label] = s;
                if (o.format == "text") std::cout << row.label << ' ' << s << '\n';
            }
            out["orbit_sizes"] = sizes;
        }
        if (o.census) {
            log(o, "census: sweeping n*");
            const chev::Census c = chev::nilpotent_sweep(rep, f);
            out["census"] = census_json(c.histogram());
            if (o.format == "text")
                for (const auto& [size, mult] : c.histogram()) std::cout << size << ' ' << mult << '\n';
        }
    }
    if (o.format == "json") std::cout << out.dump(2) << '\n';
    if (o.verify) {
        verify::ExceptionalOptions eo;
        eo.bfs = true;
        eo.census = g == chev::Group::G2p3;
        eo.cap = o.cap;
        finish_verify(o, verify::exceptional(g, eo));
    }
    return kOk;
}

void add_common(CLI::App* sub, Options& o, bool typed) {
    if (typed) {
        sub->add_option("--type", o.type, "B, C or D")->required();
        sub->add_option("--n", o.n, "rank")->required();
    }
    sub->add_option("--format", o.format, "output format");
    sub->add_flag("--verify", o.verify, "run the invariant suites");
    sub->add_flag("--verbose", o.verbose, "progress on stderr");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Nilpotent orbits in bad characteristic"};
    app.require_subcommand(1);
    Options o;
    std::function<int(const Options&)> action;

    auto* en = app.add_subcommand("enumerate", "list orbit symbols");
    add_common(en, o, true);
    en->callback([&] { action = run_enumerate; });

    auto* sp = app.add_subcommand("springer", "Springer images and unipotent classes");
    add_common(sp, o, true);
    sp->callback([&] { action = run_springer; });

    auto* ha = app.add_subcommand("hasse", "closure order covering relations");
    add_common(ha, o, true);
    ha->callback([&] { action = run_hasse; });

    auto* pi = app.add_subcommand("pieces", "nilpotent pieces");
    add_common(pi, o, true);
    pi->callback([&] { action = run_pieces; });

    auto* orc = app.add_subcommand("oracle", "exhaustive F_2 classification");
    add_common(orc, o, true);
    orc->add_option("--dump", o.dump, "write form_bits,symbol rows to this CSV file");
    orc->callback([&] { action = run_oracle; });

    auto* ex = app.add_subcommand("exceptional", "G2 and F4 tables, mass identities and orbit BFS");
    add_common(ex, o, false);
    ex->add_option("--group", o.group, "G2 or F4")->required();
    ex->add_option("--q", o.q, "field size (defaults to the characteristic)");
    ex->add_flag("--mass", o.mass, "check the mass identity");
    ex->add_flag("--census", o.census, "orbit census of all of n* (G2, q = 3)");
    ex->add_flag("--bfs", o.bfs, "orbit sizes of the table representatives");
    ex->add_option("--cap", o.cap, "BFS size cap");

    ex->callback([&] { action = run_exceptional; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        return action(o);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const VerifyError& e) {
        std::cout << Json{{"status", "fail"}, {"failures", e.failures}}.dump(2) << '\n';
        return kVerifyFailed;
    } catch (const Error& e) {
        std::cout << Json{{"status", "fail"}, {"failures", Json::array({e.what()})}}.dump(2) << '\n';
        return kVerifyFailed;
    }
}
