// homcx: enumerate graph homomorphisms, build coloring flip graphs, compute
// GF(2) homology of coloring complexes, and verify the bundled 9-vertex
// counterexample end to end.

#include "homcx/chromatic.hpp"
#include "homcx/counterexample.hpp"
#include "homcx/errors.hpp"
#include "homcx/flip_graph.hpp"
#include "homcx/graph.hpp"
#include "homcx/hom_complex.hpp"
#include "homcx/hom_enum.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using homcx::Graph;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

struct RunConfig {
    std::string format = "text";
    std::string output; // empty = stdout
    int threads = 1;
    std::uint64_t max_colorings = 10'000'000;
    std::uint64_t max_cells = 2'000'000;
};

// "name[:p1,p2]" -> generated graph
Graph graph_from_family(const std::string& spec)
{
    std::string name = spec;
    std::vector<int> params;
    if (auto colon = spec.find(':'); colon != std::string::npos) {
        name = spec.substr(0, colon);
        std::string rest = spec.substr(colon + 1);
        std::istringstream in(rest);
        std::string tok;
        while (std::getline(in, tok, ','))
            params.push_back(std::stoi(tok));
        if (rest.empty())
            throw std::invalid_argument("empty parameter list in '" + spec + "'");
    }
    return homcx::generate_graph(name, params);
}

// one grammar for both sources: "family:name[:params]" or a DIMACS file path
Graph graph_from_source(const std::string& src)
{
    if (src.rfind("family:", 0) == 0)
        return graph_from_family(src.substr(7));
    std::ifstream in(src);
    if (!in)
        throw std::invalid_argument("cannot open graph file '" + src + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return homcx::parse_graph(buf.str());
}

void write_output(const RunConfig& cfg, const std::string& body)
{
    if (cfg.output.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream out(cfg.output, std::ios::binary);
    if (!out)
        throw std::invalid_argument("cannot open output file '" + cfg.output + "'");
    out << body;
}

void add_common(CLI::App* cmd, RunConfig& cfg, bool dot_allowed = false)
{
    std::vector<std::string> formats = {"text", "json"};
    if (dot_allowed)
        formats.push_back("dot");
    cmd->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember(formats))
        ->capture_default_str();
    cmd->add_option("-o,--output", cfg.output, "write output to a file instead of stdout");
    cmd->add_option("--threads", cfg.threads, "worker threads (output is thread-count invariant)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

std::string render_components(const RunConfig& cfg, const homcx::ComponentReport& rep)
{
    if (cfg.format == "json") {
        json j;
        j["components"] = rep.component_count;
        j["sizes"] = rep.sizes;
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "components: " << rep.component_count << '\n';
    out << "sizes:";
    for (int s : rep.sizes)
        out << ' ' << s;
    out << '\n';
    return out.str();
}

std::string render_homology(const RunConfig& cfg, const homcx::HomologyReport& rep)
{
    if (cfg.format == "json") {
        json j;
        j["cells"] = rep.cell_counts;
        j["euler"] = rep.euler;
        j["betti_gf2"] = rep.betti_gf2;
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "cells:";
    for (auto c : rep.cell_counts)
        out << ' ' << c;
    out << '\n'
        << "euler: " << rep.euler << '\n';
    out << "betti_gf2 (homological evidence):";
    for (auto b : rep.betti_gf2)
        out << ' ' << b;
    out << '\n';
    return out.str();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"graph homomorphism and coloring-complex toolkit"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string family, file, g_src, h_src, from_text, to_text;
    int max_dim = -1;
    std::string verify_graph_src;

    // chi
    auto* chi = app.add_subcommand("chi", "exact chromatic number of a small graph");
    auto* chi_family = chi->add_option("--family", family, "graph family name[:p1,p2]");
    auto* chi_file = chi->add_option("--file", file, "DIMACS graph file");
    chi_family->excludes(chi_file);
    add_common(chi, cfg);

    // hom count|list
    auto* hom = app.add_subcommand("hom", "homomorphisms G -> H");
    hom->require_subcommand(1);
    auto* hom_count = hom->add_subcommand("count", "number of homomorphisms");
    auto* hom_list = hom->add_subcommand("list", "enumerate homomorphisms, one per line");
    for (auto* cmd : {hom_count, hom_list}) {
        cmd->add_option("--g", g_src, "source graph (family:... or file path)")->required();
        cmd->add_option("--h", h_src, "target graph (family:... or file path)")->required();
        add_common(cmd, cfg);
    }
    hom_list->add_option("--max-colorings", cfg.max_colorings, "result-size cap")
        ->capture_default_str();

    // flip components|path|export
    auto* flip = app.add_subcommand("flip", "1-skeleton of Hom(G,H): the coloring flip graph");
    flip->require_subcommand(1);
    auto* flip_comp = flip->add_subcommand("components", "connected components");
    auto* flip_path = flip->add_subcommand("path", "shortest flip sequence between two colorings");
    auto* flip_export = flip->add_subcommand("export", "DOT export");
    for (auto* cmd : {flip_comp, flip_path, flip_export}) {
        cmd->add_option("--g", g_src, "source graph (family:... or file path)")->required();
        cmd->add_option("--h", h_src, "target graph (family:... or file path)")->required();
        cmd->add_option("--max-colorings", cfg.max_colorings, "result-size cap")
            ->capture_default_str();
        add_common(cmd, cfg, cmd == flip_export);
    }
    flip_path->add_option("--from", from_text, "start coloring, space-separated 1-based colors")
        ->required();
    flip_path->add_option("--to", to_text, "end coloring, space-separated 1-based colors")
        ->required();

    // complex cells|homology
    auto* complex = app.add_subcommand("complex", "cell structure and homology of Hom(G,H)");
    complex->require_subcommand(1);
    auto* cx_cells = complex->add_subcommand("cells", "cell counts per dimension");
    auto* cx_hom = complex->add_subcommand("homology", "GF(2) Betti numbers of the order complex");
    for (auto* cmd : {cx_cells, cx_hom}) {
        cmd->add_option("--g", g_src, "source graph (family:... or file path)")->required();
        cmd->add_option("--h", h_src, "target graph (family:... or file path)")->required();
        cmd->add_option("--max-cells", cfg.max_cells,
               "cap on cells and on subdivision simplices")
            ->capture_default_str();
        add_common(cmd, cfg);
    }
    cx_cells->add_option("--max-dim", max_dim, "enumerate cells up to this dimension only");

    // verify-paper
    auto* verify = app.add_subcommand("verify-paper",
        "verify every claim about the bundled counterexample graph");
    verify->add_option("--graph", verify_graph_src,
        "candidate graph to check instead of the builtin one (family:... or file path)");
    add_common(verify, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) // --help
            return app.exit(e);
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (chi->parsed()) {
            if (chi_family->count() == 0 && chi_file->count() == 0)
                throw std::invalid_argument("chi needs --family or --file");
            Graph g = chi_family->count() ? graph_from_family(family) : graph_from_source(file);
            homcx::ChromaticResult res = homcx::chromatic_number(g);
            std::string body;
            if (cfg.format == "json") {
                json j;
                j["chi"] = res.chi;
                json witness = json::array();
                for (int c : res.witness)
                    witness.push_back(c + 1);
                json clique = json::array();
                for (int v : res.lower_bound_clique)
                    clique.push_back(v + 1);
                j["witness"] = witness;
                j["clique"] = clique;
                body = j.dump(2) + "\n";
            } else {
                std::ostringstream out;
                out << "chi: " << res.chi << '\n';
                out << "witness: " << homcx::coloring_to_text(res.witness) << '\n';
                out << "clique:";
                for (int v : res.lower_bound_clique)
                    out << ' ' << v + 1;
                out << '\n';
                body = out.str();
            }
            write_output(cfg, body);
            return kExitOk;
        }

        if (hom->parsed()) {
            Graph g = graph_from_source(g_src);
            Graph h = graph_from_source(h_src);
            if (hom_count->parsed()) {
                std::uint64_t count = homcx::count_homs(g, h, cfg.threads);
                std::string body = cfg.format == "json"
                    ? json{{"count", count}}.dump(2) + "\n"
                    : std::to_string(count) + "\n";
                write_output(cfg, body);
                return kExitOk;
            }
            homcx::HomEnumOptions opt{cfg.max_colorings, cfg.threads};
            homcx::HomSet hs = homcx::enumerate_homs(g, h, opt);
            std::string body;
            if (cfg.format == "json") {
                json list = json::array();
                for (const auto& c : hs.colorings) {
                    json one = json::array();
                    for (int x : c)
                        one.push_back(x + 1);
                    list.push_back(one);
                }
                body = json{{"count", hs.size()}, {"colorings", list}}.dump(2) + "\n";
            } else {
                std::ostringstream out;
                for (const auto& c : hs.colorings)
                    out << homcx::coloring_to_text(c) << '\n';
                body = out.str();
            }
            write_output(cfg, body);
            return kExitOk;
        }

        if (flip->parsed()) {
            Graph g = graph_from_source(g_src);
            Graph h = graph_from_source(h_src);
            homcx::HomEnumOptions opt{cfg.max_colorings, cfg.threads};
            homcx::FlipGraph fg
                = homcx::build_flip_graph(homcx::enumerate_homs(g, h, opt), cfg.threads);
            if (flip_comp->parsed()) {
                write_output(cfg, render_components(cfg, homcx::components(fg)));
                return kExitOk;
            }
            if (flip_path->parsed()) {
                homcx::Coloring from = homcx::coloring_from_text(from_text, h.n);
                homcx::Coloring to = homcx::coloring_from_text(to_text, h.n);
                auto path = homcx::shortest_path(fg, from, to);
                std::string body;
                if (cfg.format == "json") {
                    json j;
                    if (path) {
                        json list = json::array();
                        for (const auto& c : *path) {
                            json one = json::array();
                            for (int x : c)
                                one.push_back(x + 1);
                            list.push_back(one);
                        }
                        j["path"] = list;
                    } else {
                        j["path"] = nullptr;
                    }
                    body = j.dump(2) + "\n";
                } else if (!path) {
                    body = "no path\n";
                } else {
                    std::ostringstream out;
                    for (const auto& c : *path)
                        out << homcx::coloring_to_text(c) << '\n';
                    body = out.str();
                }
                write_output(cfg, body);
                return kExitOk;
            }
            write_output(cfg, homcx::to_dot(fg)); // export
            return kExitOk;
        }

        if (complex->parsed()) {
            Graph g = graph_from_source(g_src);
            Graph h = graph_from_source(h_src);
            homcx::ComplexOptions opt;
            opt.max_cells = cfg.max_cells;
            opt.threads = cfg.threads;
            if (cx_cells->parsed()) {
                opt.max_dim = max_dim;
                homcx::FacePoset fp = homcx::enumerate_cells(g, h, opt);
                auto counts = fp.cell_counts();
                std::string body;
                if (cfg.format == "json") {
                    json j;
                    j["cells"] = counts;
                    j["total"] = fp.cells.size();
                    j["complete"] = fp.complete;
                    body = j.dump(2) + "\n";
                } else {
                    std::ostringstream out;
                    out << "cells:";
                    for (auto c : counts)
                        out << ' ' << c;
                    out << '\n'
                        << "total: " << fp.cells.size() << '\n'
                        << "complete: " << (fp.complete ? "true" : "false") << '\n';
                    body = out.str();
                }
                write_output(cfg, body);
                return kExitOk;
            }
            homcx::FacePoset fp = homcx::enumerate_cells(g, h, opt);
            homcx::HomologyReport rep = homcx::betti_gf2(fp, cfg.max_cells);
            write_output(cfg, render_homology(cfg, rep));
            return kExitOk;
        }

        if (verify->parsed()) {
            homcx::PaperReport rep = verify_graph_src.empty()
                ? homcx::verify_paper(cfg.threads)
                : homcx::verify_paper(graph_from_source(verify_graph_src), cfg.threads);
            std::string body = cfg.format == "json" ? homcx::paper_report_json(rep)
                                                    : homcx::paper_report_text(rep);
            write_output(cfg, body);
            return rep.pass ? kExitOk : kExitVerifyFailed;
        }
    } catch (const homcx::CapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
