#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "chromapath/circuits.hpp"
#include "chromapath/coloring.hpp"
#include "chromapath/digraph.hpp"
#include "chromapath/harness.hpp"
#include "chromapath/outforest.hpp"
#include "chromapath/pathfind.hpp"

namespace {

using nlohmann::json;
using namespace chromapath;

constexpr int kExitFound = 0;
constexpr int kExitMiss = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;
constexpr int kExitInternal = 4;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw precondition_error("cannot open input file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::vector<int> parse_csv(const std::string& text) {
    std::vector<int> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        std::string tok =
            text.substr(start, end == std::string::npos ? std::string::npos : end - start);
        if (tok.empty())
            throw CLI::ValidationError("empty entry in vertex list");
        for (char c : tok)
            if (c < '0' || c > '9')
                throw CLI::ValidationError("vertex list must contain non-negative integers");
        out.push_back(std::stoi(tok));
        if (end == std::string::npos)
            break;
        start = end + 1;
    }
    return out;
}

json embedding_json(const PathEmbedding& e) {
    json j;
    j["vertices"] = e.vertices;
    std::vector<std::string> blocks;
    for (const auto& b : e.blocks)
        blocks.push_back(block_token(b));
    j["blocks"] = blocks;
    return j;
}

json coloring_json(const VertexColoring& c) {
    return json{{"k", c.k}, {"colors", c.color}};
}

void emit(const json& j, const std::string& format, const std::string& text_alt) {
    if (format == "text")
        std::cout << text_alt;
    else
        std::cout << j.dump(2) << "\n";
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("CHROMAPATH_SEED"))
        return std::strtoull(env, nullptr, 10);
    return 1;
}

int run(int argc, char** argv) {
    CLI::App app{"chromapath: certifying digraph algorithms for chromatic path problems"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string format = "json";

    auto add_common = [&](CLI::App* cmd, bool with_dot) {
        cmd->add_option("input", input, "arc-list file, or - for stdin");
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember(with_dot ? std::vector<std::string>{"json", "dot", "text"}
                                           : std::vector<std::string>{"json", "text"}));
    };

    auto* chi_cmd = app.add_subcommand("chi", "exact chromatic number with a witness coloring");
    add_common(chi_cmd, false);

    auto* forest_cmd =
        app.add_subcommand("forest", "maximal spanning out-forest: levels and parents");
    add_common(forest_cmd, true);

    auto* find_cmd = app.add_subcommand("find", "search for oriented paths");
    add_common(find_cmd, false);
    bool p4_flag = false;
    std::string pattern_spec;
    std::vector<int> two_block;
    find_cmd->add_flag("--p4", p4_flag, "search the antidirected path of length 4");
    find_cmd->add_option("--pattern", pattern_spec, "block pattern, e.g. b1,f2");
    find_cmd->add_option("--two-block", two_block, "certified two-block search: K L")
        ->expected(2);

    auto* circuit_cmd = app.add_subcommand("circuit", "circuit search and decompositions");
    add_common(circuit_cmd, false);
    int circuit_k = 0;
    bool good_flag = false, handles_flag = false;
    auto* kopt = circuit_cmd->add_option("--k", circuit_k, "minimum circuit length");
    circuit_cmd->add_flag("--good", good_flag, "circuit with small induced chromatic number");
    circuit_cmd->add_flag("--handles", handles_flag, "handle decomposition");

    auto* contract_cmd = app.add_subcommand("contract", "contract a vertex set or a circuit");
    add_common(contract_cmd, true);
    std::string set_csv, circuit_csv;
    contract_cmd->add_option("--set", set_csv, "comma-separated vertex set");
    contract_cmd->add_option("--circuit", circuit_csv, "comma-separated circuit in cyclic order");

    auto* verify_cmd = app.add_subcommand("verify", "run a verification campaign");
    std::string campaign;
    int max_n = 8;
    std::uint64_t seed = default_seed();
    int jobs = 1;
    verify_cmd->add_option("--campaign", campaign, "campaign name")
        ->required()
        ->check(CLI::IsMember({"grunbaum", "bondy", "cor32", "thm36", "conj219", "conj38"}));
    verify_cmd->add_option("--max-n", max_n, "largest order to scan");
    verify_cmd->add_option("--seed", seed, "random seed (also env CHROMAPATH_SEED)");
    verify_cmd->add_option("--jobs", jobs, "worker cap for the campaign");
    verify_cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember(std::vector<std::string>{"json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (chi_cmd->parsed()) {
        Digraph d = parse_arclist(read_input(input));
        ChromaticResult res = chromatic_number(d);
        json j{{"chi", res.chi}, {"colors", res.witness.color}};
        emit(j, format, "chi = " + std::to_string(res.chi) + "\n");
        return kExitFound;
    }

    if (forest_cmd->parsed()) {
        Digraph d = parse_arclist(read_input(input));
        OutForest f = maximal_closure(d);
        if (format == "dot") {
            std::cout << to_dot(d, f);
            return kExitFound;
        }
        std::vector<int> levels(d.order()), parents(d.order());
        for (int v = 0; v < d.order(); ++v) {
            levels[v] = f.level(v);
            parents[v] = f.parent(v);
        }
        json j{{"levels", levels}, {"parents", parents}};
        std::string text;
        for (int v = 0; v < d.order(); ++v)
            text += std::to_string(v) + ": level " + std::to_string(levels[v]) + ", parent " +
                    std::to_string(parents[v]) + "\n";
        emit(j, format, text);
        return kExitFound;
    }

    if (find_cmd->parsed()) {
        int modes = (p4_flag ? 1 : 0) + (pattern_spec.empty() ? 0 : 1) + (two_block.empty() ? 0 : 1);
        if (modes != 1) {
            std::cerr << "find: exactly one of --p4, --pattern, --two-block is required\n";
            return kExitUsage;
        }
        Digraph d = parse_arclist(read_input(input));
        if (!two_block.empty()) {
            CertifiedOutcome out = find_two_block_certified(d, two_block[0], two_block[1]);
            json j;
            if (out.is_embedding()) {
                j = embedding_json(*out.embedding);
                j["certificate"] = "embedding";
            } else {
                j = coloring_json(*out.coloring);
                j["certificate"] = "coloring";
            }
            emit(j, format, std::string("certificate: ") + (out.is_embedding() ? "embedding\n" : "coloring\n"));
            return kExitFound;
        }
        BlockPattern pattern;
        try {
            pattern = p4_flag ? BlockPattern::p4() : BlockPattern::parse(pattern_spec);
        } catch (const precondition_error& e) {
            std::cerr << "find: " << e.what() << "\n";
            return kExitUsage;
        }
        auto emb = find_pattern(d, pattern);
        if (!emb) {
            emit(json{{"found", false}}, format, "not found\n");
            return kExitMiss;
        }
        json j = embedding_json(*emb);
        j["found"] = true;
        j["certificate"] = "embedding";
        emit(j, format, "found\n");
        return kExitFound;
    }

    if (circuit_cmd->parsed()) {
        Digraph d = parse_arclist(read_input(input));
        if (handles_flag) {
            HandleDecomposition h = handle_decomposition(d);
            json j{{"base", h.base.vertices},
                   {"handles", h.handles},
                   {"r", h.handle_count()},
                   {"trivial_count", h.trivial_count}};
            emit(j, format, "r = " + std::to_string(h.handle_count()) + ", trivial = " +
                                std::to_string(h.trivial_count) + "\n");
            return kExitFound;
        }
        if (!*kopt) {
            std::cerr << "circuit: --k K or --handles is required\n";
            return kExitUsage;
        }
        if (good_flag) {
            Circuit c = k_good_circuit(d, circuit_k);
            int chi_c = chromatic_number(induced(d, c.vertices).graph).chi;
            json j{{"circuit", c.vertices}, {"induced_chi", chi_c}};
            emit(j, format, "circuit of length " + std::to_string(c.length()) + "\n");
            return kExitFound;
        }
        auto c = shortest_circuit_at_least(d, circuit_k);
        if (!c) {
            emit(json{{"found", false}}, format, "not found\n");
            return kExitMiss;
        }
        emit(json{{"found", true}, {"circuit", c->vertices}}, format,
             "circuit of length " + std::to_string(c->length()) + "\n");
        return kExitFound;
    }

    if (contract_cmd->parsed()) {
        if (set_csv.empty() == circuit_csv.empty()) {
            std::cerr << "contract: exactly one of --set, --circuit is required\n";
            return kExitUsage;
        }
        Digraph d = parse_arclist(read_input(input));
        ContractResult res = set_csv.empty()
                                 ? contract_circuit(d, Circuit{parse_csv(circuit_csv)})
                                 : contract(d, parse_csv(set_csv), ContractMode::digraph);
        if (format == "dot") {
            std::cout << to_dot(res.graph);
            return kExitFound;
        }
        if (format == "text") {
            std::cout << format_arclist(res.graph);
            return kExitFound;
        }
        json arcs = json::array();
        for (auto [u, v] : res.graph.arcs())
            arcs.push_back({u, v});
        json j{{"n", res.graph.order()},
               {"oriented", res.graph.oriented()},
               {"arcs", arcs},
               {"map", res.to_host},
               {"merged", res.merged}};
        emit(j, format, "");
        return kExitFound;
    }

    // verify
    VerificationReport report;
    if (campaign == "grunbaum")
        report = verify_grunbaum();
    else if (campaign == "bondy")
        report = bondy_campaign(seed, jobs);
    else if (campaign == "cor32")
        report = cor32_campaign(seed, jobs);
    else if (campaign == "thm36")
        report = thm36_campaign(seed, jobs);
    else if (campaign == "conj219")
        report = scan_conjecture_219(max_n, seed, jobs);
    else
        report = scan_conjecture_38(max_n, seed, jobs);
    if (format == "text")
        std::cout << report.campaign << ": " << (report.pass() ? "pass" : "fail") << " ("
                  << report.failures.size() << " failures)\n";
    else
        std::cout << report.to_json() << "\n";
    return report.pass() ? kExitFound : kExitMiss;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const chromapath::internal_inconsistency& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return kExitInternal;
    } catch (const chromapath::parse_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const chromapath::precondition_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}
