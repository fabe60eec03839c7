#include "lo_cli.hpp"

#include "lo/boxes.hpp"
#include "lo/classify.hpp"
#include "lo/cliques.hpp"
#include "lo/dgp.hpp"
#include "lo/inequality.hpp"
#include "lo/nspolytope.hpp"
#include "lo/orthograph.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

namespace {

using nlohmann::ordered_json;
using namespace lo;

struct Options {
    bool json = false;
    unsigned threads = 0;
    std::vector<std::pair<std::string, std::string>> inputs; // path -> digest
};

std::string fnv1a_digest(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open file: " + path);
    std::uint64_t hash = 0xcbf29ce484222325ull;
    char c;
    while (in.get(c)) {
        hash ^= std::uint8_t(c);
        hash *= 0x100000001b3ull;
    }
    std::ostringstream os;
    os << "fnv1a:" << std::hex << std::setw(16) << std::setfill('0') << hash;
    return os.str();
}

void note_input(Options& opt, const std::string& path)
{
    opt.inputs.emplace_back(path, fnv1a_digest(path));
}

std::string decimal(const Rational& r, int digits = 6)
{
    std::ostringstream os;
    os << std::fixed << std::setprecision(digits) << to_double(r);
    return os.str();
}

// optional on-disk cache of adjacency rows, keyed by scenario
OrthogonalityGraph build_graph_cached(const Scenario& sc)
{
    const char* dir = std::getenv("LO_CACHE_DIR");
    if (dir == nullptr || *dir == '\0')
        return build_graph(sc);
    const std::string path = std::string(dir) + "/graph_" + std::to_string(sc.parties()) + "_" +
                             std::to_string(sc.settings()) + "_" +
                             std::to_string(sc.outcomes()) + ".bin";

    const std::uint64_t count = sc.event_count();
    const std::uint64_t words = (count + 63) / 64;
    {
        std::ifstream in(path, std::ios::binary);
        if (in) {
            std::uint64_t header[4] = {};
            in.read(reinterpret_cast<char*>(header), sizeof header);
            if (in && header[0] == 0x4c4f4752ull && header[1] == count) {
                std::vector<Bitset> adj(count, Bitset(count));
                bool ok = true;
                for (std::uint64_t v = 0; v < count && ok; ++v) {
                    in.read(reinterpret_cast<char*>(adj[v].words().data()),
                            std::streamsize(words * 8));
                    ok = bool(in);
                }
                if (ok) {
                    std::vector<std::uint32_t> labels(count);
                    for (std::uint64_t v = 0; v < count; ++v)
                        labels[v] = std::uint32_t(v);
                    return OrthogonalityGraph(sc, std::move(labels), std::move(adj));
                }
            }
        }
    }
    OrthogonalityGraph g = build_graph(sc);
    std::ofstream out(path, std::ios::binary);
    if (out) {
        const std::uint64_t header[4] = {0x4c4f4752ull, count, 0, 0};
        out.write(reinterpret_cast<const char*>(header), sizeof header);
        for (std::uint64_t v = 0; v < count; ++v)
            out.write(reinterpret_cast<const char*>(g.neighbors(v).words().data()),
                      std::streamsize(words * 8));
    }
    return g;
}

Behavior parse_box(Options& opt, const std::string& spec)
{
    if (spec == "pr")
        return pr_box();
    if (spec.starts_with("noisy:"))
        return noisy_pr(parse_rational(spec.substr(6)));
    if (spec.starts_with("fig4:")) {
        const auto rest = spec.substr(5);
        const auto comma = rest.find(',');
        if (comma == std::string::npos)
            throw ParseError("fig4 box needs two parameters: fig4:XI,GAMMA");
        return pr_local_noise_mixture(parse_rational(rest.substr(0, comma)),
                                      parse_rational(rest.substr(comma + 1)));
    }
    note_input(opt, spec);
    return load_behavior(spec);
}

std::string clique_line(const OrthogonalityGraph& g, const Clique& c)
{
    std::string line;
    for (std::size_t i = 0; i < c.vertices.size(); ++i) {
        if (i)
            line += ',';
        line += event_to_string(g.label_event(c.vertices[i]));
    }
    return line;
}

int cmd_graph(Options& opt, const Scenario& sc, const std::optional<std::string>& dot_path,
              ordered_json& results, std::ostream& out)
{
    const auto g = build_graph_cached(sc);
    results["vertices"] = g.vertex_count();
    results["edges"] = g.edge_count();
    if (dot_path) {
        std::ofstream dot(*dot_path);
        if (!dot)
            throw ParseError("cannot open output file: " + *dot_path);
        for (std::size_t v = 0; v < g.vertex_count(); ++v)
            dot << v << ": " << event_to_string(g.label_event(v)) << '\n';
        for (std::size_t u = 0; u < g.vertex_count(); ++u)
            g.neighbors(u).for_each([&](std::size_t v) {
                if (u < v)
                    dot << u << ' ' << v << '\n';
            });
        results["graph_file"] = *dot_path;
    }
    if (!opt.json)
        out << "vertices=" << g.vertex_count() << " edges=" << g.edge_count() << '\n';
    return 0;
}

int cmd_cliques(Options& opt, const Scenario& sc, const std::optional<std::string>& support,
                std::size_t min_size, std::optional<std::uint64_t> limit, bool sorted,
                ordered_json& results, std::ostream& out)
{
    const auto full = build_graph_cached(sc);
    std::optional<OrthogonalityGraph> sub;
    if (support) {
        const Behavior box = [&] {
            auto b = load_behavior(*support);
            note_input(opt, *support);
            return b;
        }();
        if (box.scenario() != sc)
            throw ScenarioMismatch("support box scenario differs from --scenario");
        sub = induced_subgraph(full, support_vertices(full, box));
    }
    const OrthogonalityGraph& g = sub ? *sub : full;

    std::vector<std::string> lines;
    const auto stats = enumerate_maximal_cliques(g, min_size, limit, [&](const Clique& c) {
        lines.push_back(clique_line(g, c));
    });
    if (sorted)
        std::sort(lines.begin(), lines.end());
    results["count"] = stats.emitted;
    results["truncated"] = stats.truncated;
    results["cliques"] = lines;
    if (!opt.json)
        for (const auto& line : lines)
            out << line << '\n';
    return 0;
}

std::vector<LOInequality> read_inequality_lines(const Scenario& sc, const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open input file: " + path);
    std::vector<LOInequality> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        std::vector<Event> events;
        std::size_t start = 0;
        while (start <= line.size()) {
            auto end = line.find(',', start);
            if (end == std::string::npos)
                end = line.size();
            const auto token = line.substr(start, end - start);
            if (!token.empty())
                events.push_back(parse_event(sc, token));
            start = end + 1;
        }
        if (!events.empty())
            out.emplace_back(sc, std::move(events));
    }
    return out;
}

int cmd_classify(Options& opt, const Scenario& sc, const std::optional<std::string>& input,
                 ordered_json& results, std::ostream& out)
{
    Classifier classifier(sc, opt.threads);
    std::uint64_t total = 0;
    if (input) {
        note_input(opt, *input);
        for (const auto& ineq : read_inequality_lines(sc, *input)) {
            classifier.add(ineq);
            ++total;
        }
    } else {
        const auto g = build_graph_cached(sc);
        enumerate_maximal_cliques(g, 1, std::nullopt, [&](const Clique& c) {
            classifier.add(g, c);
            ++total;
        });
    }
    const auto classes = classifier.finalize();

    std::uint64_t nontrivial = 0;
    ordered_json class_list = ordered_json::array();
    for (std::size_t k = 0; k < classes.size(); ++k) {
        const auto& cls = classes[k];
        nontrivial += !cls.trivial;
        std::string rep;
        for (const auto& e : cls.representative.events()) {
            if (!rep.empty())
                rep += ',';
            rep += event_to_string(e);
        }
        class_list.push_back({{"representative", rep},
                              {"size", cls.representative.size()},
                              {"members", cls.member_count},
                              {"ns_max", to_string(cls.ns_maximum)},
                              {"trivial", cls.trivial}});
        if (!opt.json)
            out << "class " << k << ": size=" << cls.representative.size()
                << " members=" << cls.member_count << " ns_max=" << to_string(cls.ns_maximum)
                << (cls.trivial ? " trivial" : " nontrivial") << " rep=" << rep << '\n';
    }
    results["inequalities"] = total;
    results["classes"] = class_list;
    results["class_count"] = classes.size();
    results["nontrivial_count"] = nontrivial;
    if (!opt.json)
        out << "classes=" << classes.size() << " nontrivial=" << nontrivial << '\n';
    return 0;
}

int cmd_eval(Options& opt, const std::string& box_spec, int copies, const std::string& ineq_path,
             ordered_json& results, std::ostream& out)
{
    const Behavior base = parse_box(opt, box_spec);
    const Behavior box = copies > 1 ? tensor_power(base, copies) : base;
    note_input(opt, ineq_path);
    const LOInequality ineq = load_inequality(ineq_path);
    const Rational value = evaluate(ineq, box);
    results["value"] = to_string(value);
    results["violated"] = value > 1;
    if (!opt.json)
        out << to_string(value) << '\n';
    return 0;
}

int cmd_nsmax(Options& opt, const Scenario& sc, const std::string& ineq_path,
              const std::optional<std::string>& witness_path, ordered_json& results,
              std::ostream& out)
{
    note_input(opt, ineq_path);
    const LOInequality ineq = load_inequality(ineq_path);
    if (ineq.scenario() != sc)
        throw ScenarioMismatch("inequality scenario differs from --scenario");
    const auto [value, witness] = ns_maximize(ineq);
    results["ns_max"] = to_string(value);
    if (witness_path) {
        save_behavior(witness, *witness_path);
        results["witness_file"] = *witness_path;
    }
    if (!opt.json)
        out << to_string(value) << '\n';
    return 0;
}

int cmd_threshold(Options& opt, const std::string& ineq_path, int copies,
                  const Rational& width, ordered_json& results, std::ostream& out)
{
    note_input(opt, ineq_path);
    const LOInequality ineq = load_inequality(ineq_path);
    try {
        const auto interval = lo_threshold(noisy_pr_family(), ineq, copies, width);
        const Rational mid = (interval.lower + interval.upper) / 2;
        results["q_lower"] = to_string(interval.lower);
        results["q_upper"] = to_string(interval.upper);
        results["q_decimal"] = decimal(mid);
        results["crossing"] = true;
        if (!opt.json)
            out << "q in [" << to_string(interval.lower) << ", " << to_string(interval.upper)
                << "] ~ " << decimal(mid) << '\n';
    } catch (const NoViolationInRange&) {
        results["crossing"] = false;
        if (!opt.json)
            out << "no violation for q in (0,1]" << '\n';
    }
    return 0;
}

int cmd_dgp(Options& opt, const std::string& instance_path, bool classical,
            const std::optional<std::string>& emit_path, ordered_json& results,
            std::ostream& out)
{
    note_input(opt, instance_path);
    const DGPInstance inst = load_dgp(instance_path);
    const bool difficult = is_maximally_difficult(inst);
    results["maximally_difficult"] = difficult;
    if (!opt.json)
        out << "maximally_difficult=" << (difficult ? "true" : "false") << '\n';
    if (classical) {
        const Rational value = classical_value(inst);
        results["classical_value"] = to_string(value);
        if (!opt.json)
            out << "classical_value=" << to_string(value) << '\n';
    }
    if (emit_path) {
        save_inequality(dgp_to_inequality(inst), *emit_path);
        results["inequality_file"] = *emit_path;
    }
    return 0;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"local-orthogonality toolkit for multipartite Bell scenarios"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--json", opt.json, "emit a machine-readable run report");
    app.add_option("--threads", opt.threads, "cap worker threads (0 = all cores)");

    std::string scenario_text;
    std::optional<std::string> dot_path;
    auto* graph = app.add_subcommand("graph", "build the orthogonality graph");
    graph->add_option("--scenario", scenario_text, "n,m,d")->required();
    graph->add_option("--dot", dot_path, "write vertices/edges to a text file");

    std::optional<std::string> support_path;
    std::size_t min_size = 1;
    std::optional<std::uint64_t> limit;
    bool sorted = false;
    auto* cliques = app.add_subcommand("cliques", "enumerate maximal cliques");
    cliques->add_option("--scenario", scenario_text, "n,m,d")->required();
    cliques->add_option("--support", support_path, "restrict to the support of a box JSON");
    cliques->add_option("--min-size", min_size, "only cliques of at least this size");
    cliques->add_option("--limit", limit, "stop after this many cliques");
    cliques->add_flag("--sorted", sorted, "sort output lines");

    std::optional<std::string> classify_input;
    auto* classify = app.add_subcommand("classify", "group inequalities into equivalence classes");
    classify->add_option("--scenario", scenario_text, "n,m,d")->required();
    classify->add_option("--input", classify_input,
                         "inequalities, one comma-separated event list per line "
                         "(default: enumerate all maximal cliques)");

    std::string box_spec = "pr";
    int copies = 1;
    std::string ineq_path;
    auto* eval = app.add_subcommand("eval", "evaluate an inequality on a box");
    eval->add_option("--box", box_spec, "pr | noisy:Q | fig4:XI,GAMMA | file.json");
    eval->add_option("--copies", copies, "tensor copies of the box")->check(CLI::PositiveNumber);
    eval->add_option("--ineq", ineq_path, "inequality file")->required();

    std::optional<std::string> witness_path;
    auto* nsmax = app.add_subcommand("nsmax", "maximize an inequality over no-signaling boxes");
    nsmax->add_option("--scenario", scenario_text, "n,m,d")->required();
    nsmax->add_option("--ineq", ineq_path, "inequality file")->required();
    nsmax->add_option("--witness", witness_path, "write an optimizing box as JSON");

    std::string width_text = "1/10000";
    auto* threshold = app.add_subcommand("threshold", "noise threshold of an inequality for "
                                                      "copies of the noisy PR box");
    threshold->add_option("--ineq", ineq_path, "inequality file")->required();
    threshold->add_option("--copies", copies, "tensor copies")->check(CLI::PositiveNumber);
    threshold->add_option("--width", width_text, "bracket width (rational)");

    std::string instance_path;
    bool classical = false;
    std::optional<std::string> emit_path;
    auto* dgp = app.add_subcommand("dgp", "inspect a distributed guessing problem");
    dgp->add_option("--instance", instance_path, "instance JSON")->required();
    dgp->add_flag("--classical-value", classical, "search deterministic strategies");
    dgp->add_option("--emit-ineq", emit_path, "write the matching inequality");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return 0;
        }
        err << e.what() << '\n' << app.help();
        return 2;
    }

    const auto started = std::chrono::steady_clock::now();
    ordered_json report;
    ordered_json results;
    int code = 0;
    try {
        if (graph->parsed()) {
            report["command"] = "graph";
            const Scenario sc = Scenario::parse(scenario_text);
            report["scenario"] = sc.to_string();
            code = cmd_graph(opt, sc, dot_path, results, out);
        } else if (cliques->parsed()) {
            report["command"] = "cliques";
            const Scenario sc = Scenario::parse(scenario_text);
            report["scenario"] = sc.to_string();
            code = cmd_cliques(opt, sc, support_path, min_size, limit, sorted, results, out);
        } else if (classify->parsed()) {
            report["command"] = "classify";
            const Scenario sc = Scenario::parse(scenario_text);
            report["scenario"] = sc.to_string();
            code = cmd_classify(opt, sc, classify_input, results, out);
        } else if (eval->parsed()) {
            report["command"] = "eval";
            code = cmd_eval(opt, box_spec, copies, ineq_path, results, out);
        } else if (nsmax->parsed()) {
            report["command"] = "nsmax";
            const Scenario sc = Scenario::parse(scenario_text);
            report["scenario"] = sc.to_string();
            code = cmd_nsmax(opt, sc, ineq_path, witness_path, results, out);
        } else if (threshold->parsed()) {
            report["command"] = "threshold";
            code = cmd_threshold(opt, ineq_path, copies, parse_rational(width_text), results,
                                 out);
        } else if (dgp->parsed()) {
            report["command"] = "dgp";
            code = cmd_dgp(opt, instance_path, classical, emit_path, results, out);
        }
    } catch (const CapacityExceeded& e) {
        err << "capacity error: " << e.what() << '\n';
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    if (opt.json) {
        ordered_json inputs = ordered_json::object();
        for (const auto& [path, digest] : opt.inputs)
            inputs[path] = digest;
        report["inputs"] = inputs;
        report["results"] = results;
        const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                           started);
        report["wall_time"] = elapsed.count();
        out << report.dump(2) << '\n';
    }
    return code;
}
