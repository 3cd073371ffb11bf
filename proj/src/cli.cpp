#include "qcrystal/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qcrystal/crystal.hpp"
#include "qcrystal/insertion.hpp"
#include "qcrystal/verify.hpp"

namespace qcrystal {

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Input is taken positionally, or from --file when given.
std::string resolve_input(const std::string& positional, const std::string& file) {
    if (!file.empty()) return slurp(file);
    if (positional.empty()) throw std::invalid_argument("missing input (positional or --file)");
    return positional;
}

InsertionPair parse_pair_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    InsertionPair pair;
    pair.insertion = IncreasingShiftedTableau::from_json(j.at("insertion").dump());
    pair.recording = PrimedTableau::from_json(j.at("recording").dump());
    return pair;
}

std::string pair_to_json(const InsertionPair& pair) {
    nlohmann::json j;
    j["insertion"] = nlohmann::json::parse(pair.insertion.to_json());
    j["recording"] = nlohmann::json::parse(pair.recording.to_json());
    return j.dump();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"fixed-point-free involution words, shifted insertion, and queer crystal graphs"};
    app.require_subcommand(1);

    std::string variant = "sp";
    std::string format = "text";
    std::string file;
    int m = 3;
    int window = 6;
    int max_len = 8;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--variant", variant, "sp (fixed-point-free) or o (orthogonal)")
            ->check(CLI::IsMember({"sp", "o"}));
        cmd->add_option("--file", file, "read the positional input from a file");
    };

    // words <z>
    std::string z_arg;
    auto* cmd_words = app.add_subcommand("words", "list all words of an involution");
    cmd_words->add_option("z", z_arg, "one-line involution, e.g. \"5 4 6 2 1 3\" or 546213");
    add_common(cmd_words);

    // insert <word-or-factorization>
    std::string insert_arg;
    auto* cmd_insert = app.add_subcommand("insert", "insertion and recording tableau of a word or factorization");
    cmd_insert->add_option("input", insert_arg, "word \"6 2 4 1\" or factorization \"(6)(24)(1)\"");
    cmd_insert->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    add_common(cmd_insert);

    // reverse <pair-json>
    std::string reverse_arg;
    bool reverse_fact = false;
    auto* cmd_reverse = app.add_subcommand("reverse", "recover the word or factorization of a tableau pair");
    cmd_reverse->add_option("input", reverse_arg, "JSON {\"insertion\":...,\"recording\":...}");
    cmd_reverse->add_flag("--factorization", reverse_fact, "recover an m-block factorization");
    cmd_reverse->add_option("--m", m, "block count for --factorization");
    add_common(cmd_reverse);

    // graph <z>
    std::string graph_z;
    auto* cmd_graph = app.add_subcommand("graph", "crystal graph of the m-block factorizations");
    cmd_graph->add_option("z", graph_z, "one-line involution");
    cmd_graph->add_option("--m", m, "number of blocks");
    cmd_graph->add_option("--format", format)->check(CLI::IsMember({"json", "dot", "text"}));
    add_common(cmd_graph);

    // standardize <q-json>
    std::string std_arg;
    auto* cmd_std = app.add_subcommand("standardize", "standardize a primed tableau");
    cmd_std->add_option("input", std_arg, "primed tableau JSON");
    cmd_std->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    add_common(cmd_std);

    // verify [z]
    std::string verify_z;
    std::vector<int> verify_ms;
    bool inject_fault = false;
    std::string fixture;
    std::string experiment;
    auto* cmd_verify = app.add_subcommand("verify", "run the invariant suite");
    cmd_verify->add_option("z", verify_z, "restrict the fixture comparison to this involution");
    cmd_verify->add_option("--window", window, "maximal window to sweep");
    cmd_verify->add_option("--m", verify_ms, "block counts (repeatable)");
    cmd_verify->add_option("--max-len", max_len, "word-length cap for relation sweeps");
    cmd_verify->add_option("--fixture", fixture, "golden graph JSON to compare against (with z and --m)");
    cmd_verify->add_flag("--inject-fault", inject_fault, "self-test: report a deliberate failure");
    cmd_verify->add_option("--experiment", experiment,
                           "extra reports; 'odd-pt' prints the recording-tableau odd-operator note");
    add_common(cmd_verify);

    std::vector<std::string> argv = args;
    try {
        std::vector<const char*> cargv;
        cargv.push_back("qcrystal");
        for (const auto& a : argv) cargv.push_back(a.c_str());
        app.parse(static_cast<int>(cargv.size()), cargv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            std::ostringstream help;
            app.exit(e, help, help);
            out << help.str();
            return 0;
        }
        err << e.what() << '\n';
        return 1;
    }

    try {
        if (cmd_words->parsed()) {
            const std::string input = resolve_input(z_arg, file);
            std::vector<Word> ws;
            if (variant == "sp") ws = enumerate_words(parse_fpf_involution(input));
            else ws = enumerate_words_o(parse_involution(input));
            for (const Word& w : ws) out << word_to_string(w) << '\n';
            return 0;
        }

        if (cmd_insert->parsed()) {
            const std::string input = resolve_input(insert_arg, file);
            InsertionPair pair;
            try {
                if (input.find('(') != std::string::npos) {
                    const Factorization f = parse_factorization(input);
                    pair = variant == "sp" ? insert_factorization_sp(f) : insert_factorization_o(f);
                } else {
                    const Word w = parse_word(input);
                    pair = variant == "sp" ? insert_word_sp(w) : insert_word_o(w);
                }
            } catch (const InvalidWordError& e) {
                err << "invalid word: " << e.what() << '\n';
                return 1;
            } catch (const DescentError& e) {
                err << "invalid word: " << e.what() << '\n';
                return 1;
            }
            if (format == "json") {
                out << pair_to_json(pair) << '\n';
            } else {
                out << "insertion tableau:\n" << pair.insertion.to_text();
                out << "recording tableau:\n" << pair.recording.to_text();
            }
            return 0;
        }

        if (cmd_reverse->parsed()) {
            const std::string input = resolve_input(reverse_arg, file);
            InsertionPair pair = parse_pair_json(input);
            if (variant != "sp") {
                err << "reverse insertion is only defined for the sp variant\n";
                return 1;
            }
            try {
                if (reverse_fact) {
                    const Factorization f = reverse_factorization_sp(pair.insertion, pair.recording, m);
                    out << f.to_string() << '\n';
                } else {
                    const Word w = reverse_insert_sp(pair.insertion, pair.recording);
                    out << word_to_string(w) << '\n';
                }
            } catch (const NotInImageError& e) {
                err << "not in the image of the insertion: " << e.what() << '\n';
                return 2;
            }
            return 0;
        }

        if (cmd_graph->parsed()) {
            const std::string input = resolve_input(graph_z, file);
            CrystalGraph g;
            if (variant == "sp") g = build_graph(parse_fpf_involution(input), m);
            else g = build_graph_o(parse_involution(input), m);
            if (format == "dot") out << graph_to_dot(g);
            else if (format == "json") out << graph_to_json(g) << '\n';
            else {
                out << g.vertices.size() << " vertices, " << g.edges.size() << " edges\n";
                for (const auto& e : g.edges)
                    out << e.src << " -" << e.label << "-> " << e.dst << '\n';
            }
            return 0;
        }

        if (cmd_std->parsed()) {
            const std::string input = resolve_input(std_arg, file);
            const PrimedTableau q = PrimedTableau::from_json(input);
            const std::string invalid = q.validate();
            if (!invalid.empty()) {
                err << "invalid primed tableau: " << invalid << '\n';
                return 1;
            }
            const PrimedTableau st = standardize(q);
            if (format == "json") out << st.to_json() << '\n';
            else out << st.to_text();
            return 0;
        }

        if (cmd_verify->parsed()) {
            verify::Options opt;
            opt.variant = variant == "sp" ? Variant::sp : Variant::o;
            opt.window = window;
            if (!verify_ms.empty()) opt.ms = verify_ms;
            else opt.ms = opt.variant == Variant::sp ? std::vector<int>{2, 3, 4} : std::vector<int>{2, 3};
            opt.max_len = max_len;
            opt.inject_fault = inject_fault;
            verify::Report rep = verify::run(opt);

            if (!fixture.empty()) {
                if (verify_z.empty()) {
                    err << "--fixture needs an explicit involution argument\n";
                    return 1;
                }
                const CrystalGraph expected = graph_from_json(slurp(fixture));
                CrystalGraph got;
                const int gm = opt.ms.front();
                if (opt.variant == Variant::sp) got = build_graph(parse_fpf_involution(verify_z), gm);
                else got = build_graph_o(parse_involution(verify_z), gm);
                verify::Section sec{"fixture comparison (m=" + std::to_string(gm) + ")", 1, {}};
                if (!(got == expected)) sec.violations.push_back("graph differs from the fixture");
                rep.sections.push_back(std::move(sec));
            }
            if (experiment == "odd-pt") {
                out << "experiment odd-pt: odd operators transported through the insertion agree\n"
                       "with the first-row operators on recording tableaux (see the\n"
                       "recording-tableau transport section). Whether the even operators agree\n"
                       "with the established tableau operators requires an external\n"
                       "implementation of those operators and is not decided by this tool.\n";
            }
            out << rep.to_text();
            return rep.passed() ? 0 : 2;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    err << "no subcommand\n";
    return 1;
}

}  // namespace qcrystal
