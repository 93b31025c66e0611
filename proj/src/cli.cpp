#include "covex/cli.hpp"

#include "covex/capacity_tree.hpp"
#include "covex/errors.hpp"
#include "covex/inductive.hpp"
#include "covex/oracle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

namespace covex::cli {

using json = nlohmann::ordered_json;

namespace {

std::string type_str(LieType t) { return std::string(1, to_char(t)); }

json matrix_json(const MatrixResult& r) {
    json j{{"a", r.m.a}, {"b", r.m.b}, {"text", r.m.str()}};
    if (!r.nu.empty()) {
        j["nu"] = r.nu;
        j["nu_t"] = r.nu_t;
    }
    j["partition"] = r.partition;
    if (!r.eliminated.empty()) j["eliminated"] = r.eliminated;
    return j;
}

json tree_json(const LabelTree& t) {
    json edges = json::array();
    for (size_t i = 0; i < t.edges.size(); ++i) {
        const TreeEdge& e = t.edges[i];
        edges.push_back({{"id", i},
                         {"parent", e.parent},
                         {"kind", to_string(e.kind)},
                         {"plus", e.plus},
                         {"position", e.pos},
                         {"capacity", e.cap},
                         {"bound", e.bound},
                         {"preceding", e.preceding}});
    }
    return {{"edges", edges}};
}

std::string lines(const std::vector<std::string>& ws) {
    std::string s;
    for (const auto& w : ws) s += "warning: " + w + "\n";
    return s;
}

Output fail(int code, const std::string& msg, const std::string& emit) {
    Output o;
    o.code = code;
    o.err = "error: " + msg + (msg.empty() || msg.back() != '\n' ? "\n" : "");
    if (emit == "json") o.out = json{{"error", msg}, {"exit_code", code}}.dump(2) + "\n";
    return o;
}

struct Intermediates {
    WeylElement w, v;
    WeakTriple weak;
    MatrixResult h, k;
    std::vector<int> c;
    ABWord word;
    LabelTree tree;
    std::vector<std::string> warnings;
};

Intermediates prepare(const ComputeRequest& req) {
    const Triple& t = req.triple;
    require_valid(t);
    Intermediates m;
    m.w = vexillary_from_triple(t);
    if (req.v) {
        std::string warn;
        m.v = window_element(t.type, t.n, *req.v, &warn);
        if (!warn.empty()) m.warnings.push_back(warn);
    } else {
        m.v = m.w;
        m.warnings.push_back("no v given; using v = w(tau) = " + m.w.str() + ", so P = 1");
    }
    m.weak = weak_triple_from_pair(t, m.v);
    m.h = h_matrix(t);
    m.k = k_matrix(t, m.weak);
    m.c = capacity(m.h.m, m.k.m);
    m.word = tree_word(t.type, t.n, m.h.m);
    m.tree = build_tree(m.word, m.c, t.type);
    return m;
}

}  // namespace

WeylElement window_element(LieType t, int n, const std::vector<int>& window, std::string* warning) {
    if (static_cast<int>(window.size()) != n)
        throw ValidationError("window has " + std::to_string(window.size()) + " entries, expected " + std::to_string(n));
    std::vector<int> w = window;
    if (t == LieType::D) {
        int neg = 0;
        for (int x : w) neg += x < 0;
        if (neg % 2) {
            for (int& x : w)
                if (x == 1 || x == -1) x = -x;
            WeylElement e(t, w);
            if (warning)
                *warning = "window " + make_unchecked(LieType::B, window).str() + " has an odd number of negative entries; using " + e.str();
            return e;
        }
    }
    return WeylElement(t, w);
}

ComputeRequest parse_request_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed JSON: ") + e.what());
    }
    try {
        ComputeRequest r;
        r.triple.type = parse_lie_type(j.at("type").get<std::string>());
        r.triple.n = j.at("n").get<int>();
        r.triple.k = j.at("k").get<std::vector<int>>();
        r.triple.p = j.at("p").get<std::vector<int>>();
        r.triple.q = j.at("q").get<std::vector<int>>();
        if (j.contains("v")) r.v = j.at("v").get<std::vector<int>>();
        if (j.contains("method")) r.method = j.at("method").get<std::string>();
        return r;
    } catch (const json::exception& e) {
        throw ValidationError(std::string("bad request: ") + e.what());
    }
}

Output cmd_compute(const ComputeRequest& req) {
    if (req.emit == "dot") return cmd_tree(req);
    static const std::vector<std::string> methods{"trees", "inductive", "oracle", "all"};
    if (std::find(methods.begin(), methods.end(), req.method) == methods.end())
        return fail(kValidation, "unknown method " + req.method, req.emit);
    if (req.emit != "text" && req.emit != "json") return fail(kValidation, "unknown emit format " + req.emit, req.emit);
    const bool all = req.method == "all";
    const Triple& t = req.triple;
    try {
        Intermediates m = prepare(req);
        std::map<std::string, QPoly> got;
        std::map<std::string, std::string> notes;
        if (all || req.method == "trees") got["trees"] = tree_polynomial(m.tree);
        if (all || req.method == "inductive") {
            auto rep = validate_triple(t);
            if (rep.side_conditions_ok()) {
                got["inductive"] = kl_via_inductive(m.h.m, m.c);
            } else if (all) {
                notes["inductive"] = "not applicable: " + rep.describe();
            } else {
                throw ValidationError("inductive formula does not apply to " + t.str() + "\n" + rep.describe());
            }
        }
        if (all || req.method == "oracle") {
            try {
                check_budget(t.type, t.n, req.budget);
                KLOracle o(t.type, t.n);
                const WeylElement w0 = longest_element(t.type, t.n);
                got["oracle"] = o.P(compose(w0, m.v), compose(w0, m.w));
            } catch (const BudgetError& e) {
                if (!all) throw;
                notes["oracle"] = std::string("skipped: ") + e.what();
            }
        }
        bool match = true;
        for (const auto& [name, p] : got)
            if (p != got.begin()->second) match = false;

        Output o;
        o.err = lines(m.warnings);
        for (auto& [name, note] : notes) {
            while (!note.empty() && note.back() == '\n') note.pop_back();
            for (auto p = note.find('\n'); p != std::string::npos; p = note.find('\n', p)) note.replace(p, 1, "; ");
        }
        const std::vector<std::string> order{"trees", "inductive", "oracle"};
        if (req.emit == "json") {
            json j;
            j["type"] = type_str(t.type);
            j["n"] = t.n;
            j["k"] = t.k;
            j["p"] = t.p;
            j["q"] = t.q;
            j["v"] = m.v.window();
            j["method"] = req.method;
            j["w_tau"] = m.w.window();
            j["weak_triple"] = {{"k", m.weak.k}, {"p", m.weak.p}, {"q", m.weak.q}};
            j["h"] = matrix_json(m.h);
            j["K"] = matrix_json(m.k);
            j["capacity"] = m.c;
            j["word"] = {{"letters", m.word.letters_str()}, {"pairs", m.word.str()}};
            j["tree"] = tree_json(m.tree);
            json res = json::object();
            for (const auto& name : order) {
                if (got.count(name)) res[name] = got[name].str();
                else if (notes.count(name)) res[name] = nullptr;
            }
            j["results"] = res;
            if (!notes.empty()) {
                json nj = json::object();
                for (const auto& name : order)
                    if (notes.count(name)) nj[name] = notes[name];
                j["notes"] = nj;
            }
            if (all) j["verdict"] = match ? "MATCH" : "MISMATCH";
            o.out = j.dump(2) + "\n";
        } else if (!all) {
            o.out = got.begin()->second.str() + "\n";
        } else {
            std::ostringstream os;
            for (const auto& name : order) {
                if (got.count(name)) os << name << ": " << got[name].str() << "\n";
                else os << name << ": " << notes[name] << "\n";
            }
            os << (match ? "MATCH" : "MISMATCH") << "\n";
            o.out = os.str();
        }
        if (!match) o.code = kMismatch;
        return o;
    } catch (const ValidationError& e) {
        return fail(kValidation, e.what(), req.emit);
    } catch (const BudgetError& e) {
        return fail(kBudget, e.what(), req.emit);
    }
}

Output cmd_tree(const ComputeRequest& req) {
    try {
        Intermediates m = prepare(req);
        Output o;
        o.err = lines(m.warnings);
        o.out = to_dot(m.tree);
        return o;
    } catch (const ValidationError& e) {
        return fail(kValidation, e.what(), "dot");
    }
}

Output cmd_oracle(const OracleRequest& req) {
    try {
        std::vector<std::string> warnings;
        std::string warn;
        WeylElement v = window_element(req.type, req.n, req.v, &warn);
        if (!warn.empty()) warnings.push_back(warn);
        warn.clear();
        WeylElement w = window_element(req.type, req.n, req.w, &warn);
        if (!warn.empty()) warnings.push_back(warn);
        QPoly p = kl_oracle(req.type, req.n, v, w, req.budget);
        Output o;
        o.err = lines(warnings);
        if (req.emit == "json") {
            json j{{"type", type_str(req.type)}, {"n", req.n},           {"v", v.window()},
                   {"w", w.window()},            {"length_v", length(v)}, {"length_w", length(w)},
                   {"P", p.str()}};
            o.out = j.dump(2) + "\n";
        } else {
            o.out = p.str() + "\n";
        }
        return o;
    } catch (const ValidationError& e) {
        return fail(kValidation, e.what(), req.emit);
    } catch (const BudgetError& e) {
        return fail(kBudget, e.what(), req.emit);
    }
}

Output cmd_crosscheck(const CrosscheckRequest& req) {
    std::vector<LieType> types = req.types;
    if (types.empty()) types = {LieType::A, LieType::B, LieType::C, LieType::D};
    struct Case {
        Triple t;
        WeylElement w, v;
        bool side;
    };
    struct Group {
        LieType type;
        int n;
        std::size_t triples = 0, pairs = 0, three_way = 0, two_way = 0, mismatches = 0;
    };
    std::vector<Group> groups;
    std::vector<std::string> skipped;
    std::string first_bad;
    std::size_t total = 0, bad = 0;
    std::mt19937_64 rng(req.seed);
    try {
        for (LieType type : types) {
            for (int n = 1; n <= req.n_max; ++n) {
                const std::uint64_t order = group_order(type, n);
                if (order > req.budget) {
                    skipped.push_back(type_str(type) + std::to_string(n) + " (" + std::to_string(order) + " elements)");
                    continue;
                }
                KLOracle o(type, n);
                const auto els = all_elements(type, n);
                const auto triples = all_valid_triples(type, n);
                std::vector<Case> cases;
                for (const auto& t : triples) {
                    WeylElement w = vexillary_from_triple(t);
                    bool side = validate_triple(t).side_conditions_ok();
                    for (const auto& v : els)
                        if (o.leq(w, v)) cases.push_back({t, w, v, side});
                }
                if (req.samples > 0 && req.samples < cases.size()) {
                    std::vector<std::size_t> idx(cases.size());
                    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
                    std::shuffle(idx.begin(), idx.end(), rng);
                    idx.resize(req.samples);
                    std::sort(idx.begin(), idx.end());
                    std::vector<Case> pick;
                    for (auto i : idx) pick.push_back(cases[i]);
                    cases.swap(pick);
                }
                Group g{type, n};
                g.triples = triples.size();
                const WeylElement w0 = longest_element(type, n);
                for (const auto& c : cases) {
                    QPoly pt = kl_via_trees(c.t, c.v);
                    QPoly po = o.P(compose(w0, c.v), compose(w0, c.w));
                    bool ok = pt == po;
                    std::string ind = "n/a";
                    if (c.side) {
                        QPoly pi = kl_via_inductive(c.t, c.v);
                        ok = ok && pi == po;
                        ind = pi.str();
                        ++g.three_way;
                    } else {
                        ++g.two_way;
                    }
                    ++g.pairs;
                    if (!ok) {
                        ++g.mismatches;
                        if (first_bad.empty())
                            first_bad = type_str(type) + " n=" + std::to_string(n) + " triple " + c.t.str() + " v=" + c.v.str() +
                                        ": trees " + pt.str() + ", inductive " + ind + ", oracle " + po.str();
                    }
                }
                total += g.pairs;
                bad += g.mismatches;
                groups.push_back(g);
            }
        }
    } catch (const ValidationError& e) {
        return fail(kValidation, e.what(), req.emit);
    }
    Output out;
    if (req.emit == "json") {
        json gs = json::array();
        for (const auto& g : groups)
            gs.push_back({{"type", type_str(g.type)},
                          {"n", g.n},
                          {"triples", g.triples},
                          {"pairs", g.pairs},
                          {"three_way", g.three_way},
                          {"two_way", g.two_way},
                          {"mismatches", g.mismatches}});
        json j{{"groups", gs}, {"skipped", skipped}, {"pairs", total}, {"mismatches", bad}};
        if (!first_bad.empty()) j["first_mismatch"] = first_bad;
        out.out = j.dump(2) + "\n";
    } else {
        std::ostringstream os;
        for (const auto& g : groups)
            os << type_str(g.type) << g.n << ": " << g.triples << " triples, " << g.pairs << " pairs, " << g.three_way
               << " three-way, " << g.two_way << " two-way, " << g.mismatches << " mismatches\n";
        for (const auto& s : skipped) os << "skipped " << s << " over budget " << req.budget << "\n";
        os << "total: " << total << " pairs, " << bad << " mismatches\n";
        if (!first_bad.empty()) os << "first mismatch: " << first_bad << "\n";
        out.out = os.str();
    }
    if (bad) out.code = kMismatch;
    return out;
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int emit(const Output& o) {
    std::cout << o.out;
    std::cerr << o.err;
    return o.code;
}

}  // namespace

int run(int argc, char** argv) {
    CLI::App app{"Kazhdan-Lusztig polynomials of covexillary Schubert varieties"};
    app.require_subcommand(1);

    std::string type, triple, vwin, wwin, method = "trees", fmt = "text", input;
    int n = 0;
    std::uint64_t seed = 0;
    std::size_t samples = 0;
    std::optional<std::uint64_t> budget;

    auto add_triple = [&](CLI::App* s) {
        s->add_option("--type", type, "Lie type A, B, C or D");
        s->add_option("--n", n, "rank");
        s->add_option("--triple", triple, "\"k=1,3 p=3,4 q=2,5\"");
        s->add_option("--v", vwin, "window of v, e.g. \"8,7,6,5,4,3,2,1\"");
        s->add_option("--input", input, "JSON request file");
    };
    auto* compute = app.add_subcommand("compute", "compute P for a triple and a point v");
    add_triple(compute);
    compute->add_option("--method", method)->check(CLI::IsMember({"trees", "inductive", "oracle", "all"}));
    compute->add_option("--emit", fmt)->check(CLI::IsMember({"text", "json", "dot"}));
    compute->add_option("--budget", budget, "oracle group size budget");

    auto* tree = app.add_subcommand("tree", "print the labelled tree in DOT");
    add_triple(tree);
    tree->add_option("--emit", fmt)->check(CLI::IsMember({"dot"}));

    auto* oracle = app.add_subcommand("oracle", "classical recursion for P_{v,w}");
    oracle->add_option("--type", type)->required();
    oracle->add_option("--n", n)->required();
    oracle->add_option("--v", vwin)->required();
    oracle->add_option("--w", wwin)->required();
    oracle->add_option("--emit", fmt)->check(CLI::IsMember({"text", "json"}));
    oracle->add_option("--budget", budget, "oracle group size budget");

    auto* cross = app.add_subcommand("crosscheck", "compare all three methods exhaustively");
    cross->add_option("--type", type, "restrict to one type");
    cross->add_option("--n", n, "largest rank")->required();
    cross->add_option("--budget", budget, "oracle group size budget");
    cross->add_option("--samples", samples, "random subset size per group");
    cross->add_option("--seed", seed, "seed for --samples");
    cross->add_option("--emit", fmt)->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kValidation;
    }

    try {
        const std::uint64_t bud = budget ? *budget : oracle_budget();
        if (*compute || *tree) {
            ComputeRequest req;
            if (!input.empty()) {
                req = parse_request_json(read_file(input));
                if (compute->count("--method")) req.method = method;
            } else {
                if (type.empty() || n == 0 || triple.empty())
                    throw ValidationError("--type, --n and --triple are required without --input");
                req.triple = parse_triple(parse_lie_type(type), n, triple);
                req.method = method;
            }
            if (!vwin.empty()) req.v = parse_int_list(vwin);
            req.emit = fmt;
            req.budget = bud;
            return emit(*tree ? cmd_tree(req) : cmd_compute(req));
        }
        if (*oracle) {
            OracleRequest req;
            req.type = parse_lie_type(type);
            req.n = n;
            req.v = parse_int_list(vwin);
            req.w = parse_int_list(wwin);
            req.emit = fmt;
            req.budget = bud;
            return emit(cmd_oracle(req));
        }
        CrosscheckRequest req;
        if (!type.empty()) req.types = {parse_lie_type(type)};
        req.n_max = n;
        req.budget = bud;
        req.samples = samples;
        req.seed = seed;
        req.emit = fmt;
        return emit(cmd_crosscheck(req));
    } catch (const ValidationError& e) {
        return emit(fail(kValidation, e.what(), fmt));
    } catch (const BudgetError& e) {
        return emit(fail(kBudget, e.what(), fmt));
    }
}

}  // namespace covex::cli
