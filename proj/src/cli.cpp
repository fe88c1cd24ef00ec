#include "sss/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sss/cylinders.hpp"
#include "sss/dyadic.hpp"
#include "sss/fixtures.hpp"
#include "sss/nondegeneracy.hpp"

namespace sss {

namespace {

using nlohmann::ordered_json;

std::string load_source(const std::string& file) {
    if (!file.empty() && file.front() == '@') return fixture_source(file);
    std::ifstream in(file);
    if (!in) throw std::invalid_argument("cannot read file: " + file);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct Report {
    std::string command;
    std::string input;
    std::string verdict;
    ordered_json witness;  // null when absent
    ordered_json data;     // null when absent
    std::vector<std::string> lines;  // human-readable output

    void emit(std::ostream& out, bool json) const {
        if (json) {
            ordered_json r;
            r["command"] = command;
            r["input"] = input;
            r["verdict"] = verdict;
            if (!witness.is_null()) r["witness"] = witness;
            if (!data.is_null()) r["data"] = data;
            out << r.dump(2) << "\n";
        } else {
            for (const auto& l : lines) out << l << "\n";
        }
    }
};

ordered_json lasso_json(const FrontierGraph& g, const LassoCertificate& lasso) {
    auto labels = [&](const std::vector<std::size_t>& part) {
        ordered_json arr = ordered_json::array();
        for (std::size_t ti : part) {
            const auto& t = g.transitions[ti];
            ordered_json step;
            step["from"] = g.states[t.from];
            step["to"] = g.states[t.to];
            for (const auto& [k, v] : t.labels) step[k] = v;
            arr.push_back(step);
        }
        return arr;
    };
    ordered_json w;
    w["stem"] = labels(lasso.stem);
    w["cycle"] = labels(lasso.cycle);
    w["verified"] = verify_lasso(g, lasso);
    return w;
}

ordered_json nd_failure_json(const NDFailure& f, const std::string& b = "") {
    ordered_json w;
    if (!b.empty()) w["row"] = b;
    w["kind"] = f.kind;
    w["f"] = f.f;
    w["f'"] = f.fp;
    w["x"] = f.x;
    if (!f.xp.empty()) w["x'"] = f.xp;
    return w;
}

SystemDocument parse_or_throw(const std::string& file) {
    ParseResult r = parse_system(load_source(file));
    if (auto* errs = std::get_if<std::vector<ParseError>>(&r)) {
        std::ostringstream msg;
        for (const auto& e : *errs)
            msg << file << ":" << e.line << ":" << e.column << ": " << e.message << "\n";
        throw std::invalid_argument(msg.str());
    }
    return std::get<SystemDocument>(std::move(r));
}

int cmd_validate(const std::string& file, Report& rep) {
    ParseResult r = parse_system(load_source(file));
    if (auto* errs = std::get_if<std::vector<ParseError>>(&r)) {
        rep.verdict = "invalid";
        ordered_json arr = ordered_json::array();
        for (const auto& e : *errs) {
            ordered_json je;
            je["line"] = e.line;
            je["column"] = e.column;
            je["message"] = e.message;
            arr.push_back(je);
            rep.lines.push_back(file + ":" + std::to_string(e.line) + ":" +
                                std::to_string(e.column) + ": " + e.message);
        }
        rep.data["errors"] = arr;
        return 1;
    }
    const SystemDocument doc = std::get<SystemDocument>(std::move(r));
    const SelfSimilaritySystem s = doc.system();
    std::vector<std::string> problems;
    for (const auto& c : doc.coalgebras)
        for (const auto& msg : validate_coalgebra(s, c))
            problems.push_back("coalgebra " + c.name + ": " + msg);
    if (!problems.empty()) {
        rep.verdict = "invalid";
        rep.data["errors"] = problems;
        rep.lines = problems;
        return 1;
    }
    rep.verdict = "valid";
    rep.data["category"] = doc.category.name;
    rep.data["module"] = doc.module.name;
    rep.data["reconstructed"] = doc.reconstructed;
    rep.data["objects"] = doc.category.objects.size();
    rep.data["morphisms"] = doc.category.morphisms.size();
    rep.data["module_elements"] = doc.module.all_elements().size();
    ordered_json sizes;
    for (const auto& [a, oc] : elt_sizes(doc.module))
        sizes[a] = {{"objects", oc.first}, {"morphisms", oc.second}};
    rep.data["elt_sizes"] = sizes;
    rep.data["functors"] = doc.functors.size();
    rep.data["coalgebras"] = doc.coalgebras.size();
    if (doc.reconstructed) rep.data["reconstructed"] = true;
    rep.lines.push_back("valid: " + doc.category.name + " with module " + doc.module.name);
    return 0;
}

int cmd_nondegen(const SystemDocument& doc, const std::string& functor_name,
                 bool whole_module, Report& rep) {
    if (whole_module) {
        ModuleNDVerdict v = check_nondegenerate_module(doc.module);
        rep.verdict = v.holds ? "nondegenerate" : "degenerate";
        if (!v.holds) {
            rep.witness = nd_failure_json(v.failures.front().second, v.failures.front().first);
            rep.lines.push_back("degenerate: M(" + v.failures.front().first + ",-): " +
                                v.failures.front().second.describe());
        } else {
            rep.lines.push_back("nondegenerate module " + doc.module.name);
        }
        return v.holds ? 0 : 1;
    }
    const SetValuedFunctor* f = doc.functor(functor_name);
    if (!f) throw std::invalid_argument("unknown functor: " + functor_name);
    NDVerdict v = check_nondegenerate_functor(*f);
    rep.verdict = v.holds ? "nondegenerate" : "degenerate";
    if (!v.holds) {
        rep.witness = nd_failure_json(v.failures.front());
        rep.lines.push_back("degenerate: " + v.failures.front().describe());
    } else {
        rep.lines.push_back("nondegenerate functor " + f->name);
    }
    return v.holds ? 0 : 1;
}

int cmd_solvable(const SystemDocument& doc, Report& rep) {
    const SelfSimilaritySystem s = doc.system();
    SVerdict v1 = check_S1(s);
    SVerdict v2 = v1.holds ? check_S2(s) : SVerdict{};
    const bool holds = v1.holds && v2.holds;
    rep.verdict = holds ? "solvable" : "unsolvable";
    if (holds) {
        rep.lines.push_back("solvable: conditions S1 and S2 hold");
        return 0;
    }
    const SVerdict& bad = v1.holds ? v2 : v1;
    rep.witness["condition"] = v1.holds ? "S2" : "S1";
    rep.witness["pair"] = {bad.witness.first, bad.witness.second};
    rep.witness["lasso"] = lasso_json(bad.graph, bad.lasso);
    rep.lines.push_back("unsolvable: " + std::string(v1.holds ? "S2" : "S1") +
                        " fails at (" + bad.witness.first + ", " + bad.witness.second + ")");
    return 1;
}

int cmd_tensor(const SystemDocument& doc, const std::string& functor_name,
               bool with_module, Report& rep) {
    const SetValuedFunctor* f = doc.functor(functor_name);
    if (!f) throw std::invalid_argument("unknown functor: " + functor_name);
    SetValuedFunctor t = tensor_functor(doc.module, *f);
    rep.verdict = "ok";
    ordered_json per;
    for (const auto& a : doc.category.objects) {
        ordered_json o;
        o["count"] = t.at(a).size();
        o["classes"] = t.at(a);
        per[a] = o;
        std::string line = "(M(x)" + f->name + ")" + a + ": " +
                           std::to_string(t.at(a).size()) + " classes";
        rep.lines.push_back(line);
    }
    rep.data["tensor_functor"] = per;
    if (with_module) {
        Module mm = tensor_modules(doc.module, doc.module);
        ordered_json homs;
        for (const auto& [ba, elems] : mm.elements) {
            const std::string key = "(" + ba.first + "," + ba.second + ")";
            homs[key] = elems.size();
            rep.lines.push_back("(M(x)M)" + key + ": " + std::to_string(elems.size()));
        }
        rep.data["tensor_module"] = homs;
    }
    return 0;
}

int cmd_levels(const SystemDocument& doc, const std::string& object, std::size_t depth,
               Report& rep) {
    const SelfSimilaritySystem s = doc.system();
    if (!doc.category.has_object(object))
        throw std::invalid_argument("unknown object: " + object);
    rep.verdict = "ok";
    ordered_json counts = ordered_json::array();
    for (std::size_t n = 0; n <= depth; ++n) {
        LevelComponents lc = level_components(s, object, n);
        counts.push_back(lc.classes.class_count());
        rep.lines.push_back("|I_" + std::to_string(n) + " " + object + "| = " +
                            std::to_string(lc.classes.class_count()));
    }
    rep.data["counts"] = counts;
    return 0;
}

int cmd_equal(const SystemDocument& doc, const std::string& lit1, const std::string& lit2,
              Report& rep) {
    const SelfSimilaritySystem s = doc.system();
    PeriodicAddress t = parse_address(doc.module, lit1);
    PeriodicAddress tp = parse_address(doc.module, lit2);
    EqualityVerdict v = decide_equal(s, t, tp);
    switch (v.result) {
        case Equality::Equal:
            rep.verdict = "equal";
            rep.witness = lasso_json(v.graph, v.certificate);
            rep.lines.push_back("equal");
            return 0;
        case Equality::NotEqual:
            rep.verdict = "not-equal";
            rep.lines.push_back("not equal");
            return 1;
        default:
            rep.verdict = "unknown";
            rep.lines.push_back("unknown (system not known to be solvable)");
            return 1;
    }
}

int cmd_resolve(const SystemDocument& doc, const std::string& coalgebra_name,
                const std::string& object, const std::string& element,
                const std::string& decode, Report& rep) {
    const SelfSimilaritySystem s = doc.system();
    const Coalgebra* c = doc.coalgebra(coalgebra_name);
    if (!c) throw std::invalid_argument("unknown coalgebra: " + coalgebra_name);
    if (c->carrier.object_of(element) != object)
        throw std::invalid_argument("element " + element + " does not live at " + object);
    PeriodicAddress addr = resolve(s, *c, element);
    rep.verdict = "ok";
    rep.data["address"] = print_address(addr);
    rep.lines.push_back(print_address(addr));
    if (decode == "dyadic") {
        Rational r = decode_dyadic(addr);
        rep.data["value"] = r.str();
        rep.lines.push_back(r.str());
    } else if (!decode.empty()) {
        throw std::invalid_argument("unknown decoder: " + decode);
    }
    return 0;
}

int cmd_member(const SystemDocument& doc, const std::string& lit,
               const std::string& cylinder, Report& rep) {
    const SelfSimilaritySystem s = doc.system();
    PeriodicAddress t = parse_address(doc.module, lit);
    Cylinder cyl{parse_chain(doc.module, cylinder, t.anchor)};
    LassoCertificate cert;
    const bool in = cylinder_member(s, t, cyl, &cert);
    rep.verdict = in ? "member" : "not-member";
    rep.lines.push_back(in ? "member" : "not a member");
    return in ? 0 : 1;
}

int cmd_graph(const SystemDocument& doc, const std::string& object, std::size_t depth,
              const std::string& format, Report& rep) {
    const SelfSimilaritySystem s = doc.system();
    if (!doc.category.has_object(object))
        throw std::invalid_argument("unknown object: " + object);
    AdjacencyGraph g = adjacency_graph(s, object, depth);
    rep.verdict = "ok";
    if (format == "dot") {
        rep.data["dot"] = adjacency_dot(g);
        rep.lines.push_back(adjacency_dot(g));
    } else if (format == "json") {
        rep.data["graph"] = ordered_json::parse(adjacency_json(g));
        rep.lines.push_back(adjacency_json(g));
    } else {
        throw std::invalid_argument("unknown format: " + format);
    }
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"self-similarity systems: validation, solvability and universal solutions"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "emit a machine-readable JSON report");

    struct Args {
        std::string file, functor_name, coalgebra_name, object, element;
        std::string addr, addr2, cylinder, format = "dot", decode;
        std::size_t depth = 0;
        bool whole_module = false, with_module = false;
    } a;

    auto add_file = [&](CLI::App* sub) {
        sub->add_option("file", a.file, "system source file or builtin @name")->required();
        sub->add_flag("--json", json, "emit a machine-readable JSON report");
    };

    CLI::App* validate = app.add_subcommand("validate", "parse and validate a system");
    add_file(validate);
    CLI::App* nondegen = app.add_subcommand("nondegen", "nondegeneracy check");
    add_file(nondegen);
    nondegen->add_option("--functor", a.functor_name, "check a named functor");
    nondegen->add_flag("--module", a.whole_module, "check the module rows");
    CLI::App* solvable = app.add_subcommand("solvable", "decide condition S");
    add_file(solvable);
    CLI::App* tensor = app.add_subcommand("tensor", "tensor the module with a functor");
    add_file(tensor);
    tensor->add_option("--functor", a.functor_name, "functor to tensor with")->required();
    tensor->add_flag("--with-module", a.with_module, "also compute M(x)M");
    CLI::App* levels = app.add_subcommand("levels", "level component counts");
    add_file(levels);
    levels->add_option("--object", a.object, "anchor object")->required();
    levels->add_option("--depth", a.depth, "maximum depth")->required();
    CLI::App* equal = app.add_subcommand("equal", "decide equality of two addresses");
    add_file(equal);
    equal->add_option("--addr", a.addr, "first address literal")->required();
    equal->add_option("--addr2", a.addr2, "second address literal")->required();
    CLI::App* resolve = app.add_subcommand("resolve", "resolve a coalgebra element");
    add_file(resolve);
    resolve->add_option("--coalgebra", a.coalgebra_name, "coalgebra name")->required();
    resolve->add_option("--object", a.object, "object of the element")->required();
    resolve->add_option("--element", a.element, "carrier element")->required();
    resolve->add_option("--decode", a.decode, "decode the address (dyadic)");
    CLI::App* member = app.add_subcommand("member", "cylinder membership");
    add_file(member);
    member->add_option("--addr", a.addr, "address literal")->required();
    member->add_option("--cylinder", a.cylinder, "prefix chain, deepest last")->required();
    CLI::App* graph = app.add_subcommand("graph", "cylinder adjacency graph");
    add_file(graph);
    graph->add_option("--object", a.object, "anchor object")->required();
    graph->add_option("--depth", a.depth, "chain depth")->required();
    graph->add_option("--format", a.format, "dot or json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return 2;
    }

    Report rep;
    rep.input = a.file;
    try {
        int rc = 0;
        if (validate->parsed()) {
            rep.command = "validate";
            rc = cmd_validate(a.file, rep);
        } else {
            SystemDocument doc = parse_or_throw(a.file);
            if (nondegen->parsed()) {
                rep.command = "nondegen";
                if (a.whole_module != a.functor_name.empty())
                    throw std::invalid_argument(
                        "nondegen needs exactly one of --functor, --module");
                rc = cmd_nondegen(doc, a.functor_name, a.whole_module, rep);
            } else if (solvable->parsed()) {
                rep.command = "solvable";
                rc = cmd_solvable(doc, rep);
            } else if (tensor->parsed()) {
                rep.command = "tensor";
                rc = cmd_tensor(doc, a.functor_name, a.with_module, rep);
            } else if (levels->parsed()) {
                rep.command = "levels";
                rc = cmd_levels(doc, a.object, a.depth, rep);
            } else if (equal->parsed()) {
                rep.command = "equal";
                rc = cmd_equal(doc, a.addr, a.addr2, rep);
            } else if (resolve->parsed()) {
                rep.command = "resolve";
                rc = cmd_resolve(doc, a.coalgebra_name, a.object, a.element, a.decode, rep);
            } else if (member->parsed()) {
                rep.command = "member";
                rc = cmd_member(doc, a.addr, a.cylinder, rep);
            } else if (graph->parsed()) {
                rep.command = "graph";
                rc = cmd_graph(doc, a.object, a.depth, a.format, rep);
            }
        }
        rep.emit(out, json);
        return rc;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace sss
