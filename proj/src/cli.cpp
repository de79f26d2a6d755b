#include "addiword/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "addiword/collinear.hpp"
#include "addiword/detectors.hpp"
#include "addiword/ejs.hpp"
#include "addiword/io.hpp"
#include "addiword/search.hpp"
#include "addiword/svg.hpp"
#include "addiword/word.hpp"

namespace addiword {

namespace {

using nlohmann::json;

// Everything the surface reports is 1-based; the core is 0-based.
json factor_json(const Factor& f, const PrefixSums& ps) {
    return json{{"start", f.start + 1}, {"len", f.len}, {"sum", factor_sum(ps, f)}};
}

json input_digest(const Word& w) {
    json alpha = json::array();
    if (!w.empty()) {
        const Alphabet a = w.effective_alphabet();
        for (Letter s : a.symbols()) alpha.push_back(s);
    }
    return json{{"length", w.size()}, {"alphabet", alpha}};
}

json digest_of_alphabet(const Alphabet& a) {
    json alpha = json::array();
    for (Letter s : a.symbols()) alpha.push_back(s);
    return json{{"length", 0}, {"alphabet", alpha}};
}

void emit(std::ostream& out, json report) { out << report.dump(2) << '\n'; }

struct WordSource {
    std::string file;
    std::string inline_word;

    Word load(std::istream& stdin_stream) const {
        if (!file.empty()) return load_word_file(file);
        if (!inline_word.empty()) return parse_word_input(inline_word);
        std::ostringstream buf;
        buf << stdin_stream.rdbuf();
        return parse_word_input(buf.str());
    }
};

void add_word_options(CLI::App* cmd, WordSource& src) {
    auto* f = cmd->add_option("--file", src.file, "word file (integers, '#' comments)");
    auto* w = cmd->add_option("--word", src.inline_word, "inline word text");
    f->excludes(w);
}

int emit_error(std::ostream& out, const std::string& command, const std::string& message) {
    emit(out, json{{"command", command},
                   {"input", nullptr},
                   {"status", "error"},
                   {"result", nullptr},
                   {"error", message}});
    return 2;
}

int run_detect(std::ostream& out, const Word& w, const std::string& pattern,
               std::size_t min_half_len) {
    const Pattern pat = pattern_from_name(pattern);
    std::optional<PowerLocation> loc;
    if (w.size() >= 2) {
        loc = pat == Pattern::abelian_square
                  ? find_abelian_square(w, min_half_len)
                  : find_additive_power(w, pattern_order(pat), min_half_len);
    }
    json report{{"command", "detect"}, {"input", input_digest(w)}};
    if (!loc) {
        report["status"] = "not-found";
        report["result"] = nullptr;
        emit(out, report);
        return 1;
    }
    const PrefixSums ps(w);
    json blocks = json::array();
    for (int b = 0; b < loc->order; ++b) {
        blocks.push_back(factor_json(
            Factor{loc->start + static_cast<std::size_t>(b) * loc->half_len, loc->half_len}, ps));
    }
    report["status"] = "found";
    report["result"] = json{{"pattern", pattern_name(pat)},
                            {"order", loc->order},
                            {"start", loc->start + 1},
                            {"half_len", loc->half_len},
                            {"blocks", blocks}};
    emit(out, report);
    return 0;
}

int run_theorem1(std::ostream& out, const Word& w, std::size_t min_block_len) {
    json report{{"command", "theorem1"}, {"input", input_digest(w)}};
    try {
        const NearSquareReport r = near_additive_square(w, min_block_len);
        const PrefixSums ps(w);
        report["status"] = "found";
        report["result"] =
            json{{"u", factor_json(r.square.u, ps)},
                 {"v", factor_json(r.square.v, ps)},
                 {"discrepancy", r.square.discrepancy},
                 {"bound_c", r.square.bound_c},
                 {"k", r.alignment.k},
                 {"alphas", r.alignment.alpha},
                 {"shift_offset", r.square.shift_offset},
                 {"binary_square",
                  json{{"start", r.binary.start + 1}, {"half_len", r.binary.half_len}}}};
        emit(out, report);
        return 0;
    } catch (const NotFound& e) {
        report["status"] = "not-found";
        report["result"] = nullptr;
        report["error"] = e.what();
        emit(out, report);
        return 1;
    }
}

int run_theorem2(std::ostream& out, std::ostream& err, const Word& w, std::size_t k,
                 std::size_t max_points, const std::string& svg_path) {
    // Pair grouping is quadratic; cap the searched prefix.
    Word prefix = w;
    if (prefix.size() + 1 > max_points) {
        prefix.letters.resize(max_points - 1);
        prefix.alphabet.reset();
        err << "theorem2: searching the first " << prefix.size() << " letters ("
            << max_points << "-point cap)\n";
    }
    json report{{"command", "theorem2"}, {"input", input_digest(w)}};
    const auto fz = equal_average_factorization(prefix, k);
    if (!fz) {
        report["status"] = "not-found";
        report["result"] = nullptr;
        emit(out, report);
        return 1;
    }
    const PrefixSums ps(prefix);
    json factors = json::array();
    for (const Factor& f : fz->factors) {
        json fj = factor_json(f, ps);
        fj["average"] = factor_average(ps, f).str();
        factors.push_back(std::move(fj));
    }
    report["status"] = "found";
    report["result"] = json{{"indices", fz->point_indices},
                            {"factors", factors},
                            {"common_average", fz->common_average.str()}};
    if (!svg_path.empty()) {
        std::ofstream svg(svg_path);
        if (!svg) return emit_error(out, "theorem2", "cannot write SVG file: " + svg_path);
        write_path_svg(svg, lattice_path(prefix), fz->point_indices);
        report["result"]["svg"] = svg_path;
    }
    emit(out, report);
    return 0;
}

int run_search(std::ostream& out, const std::string& alphabet_text, const std::string& pattern,
               std::size_t depth_budget, std::uint64_t node_budget,
               std::optional<std::size_t> count_at) {
    SearchConfig cfg;
    cfg.alphabet = Alphabet(parse_word_input(alphabet_text).letters);
    cfg.pattern = pattern_from_name(pattern);
    cfg.depth_budget = depth_budget;
    cfg.node_budget = node_budget;

    const SearchResult res = longest_avoiding(cfg);
    json result{{"witness", res.witness}, {"nodes_visited", res.nodes_visited}};
    if (res.verdict == Verdict::exhausted) {
        result["verdict"] = "exhausted";
        result["g"] = res.length;
    } else {
        result["verdict"] = "budget-exceeded";
        result["depth_reached"] = res.length;
    }
    if (count_at) {
        result["count_at"] =
            json{{"length", *count_at}, {"count", count_avoiding(cfg, *count_at)}};
    }
    json report{{"command", "search"},
                {"input", digest_of_alphabet(cfg.alphabet)},
                {"status", res.verdict == Verdict::exhausted ? "found" : "budget-exceeded"},
                {"result", result}};
    emit(out, report);
    return res.verdict == Verdict::exhausted ? 0 : 1;
}

int run_ap(std::ostream& out, const Word& w) {
    json report{{"command", "ap"}, {"input", input_digest(w)}};
    const auto triple = find_double_ap(w.letters);
    if (!triple) {
        report["status"] = "not-found";
        report["result"] = nullptr;
        emit(out, report);
        return 1;
    }
    report["status"] = "found";
    report["result"] = json{{"i", triple->i + 1},
                            {"j", triple->j + 1},
                            {"k", triple->k + 1},
                            {"values", json::array({triple->xi, triple->xj, triple->xk})}};
    emit(out, report);
    return 0;
}

int run_encode(std::ostream& out, const Word& w) {
    json report{{"command", "encode"}, {"input", input_digest(w)}};
    const auto [shifted, offset] = shift_to_positive(w);
    const BinaryWord bw = ejs_encode(shifted);
    std::string bits;
    bits.reserve(bw.size());
    for (std::uint8_t b : bw.bits) bits.push_back(b ? '1' : '0');
    report["status"] = "found";
    report["result"] = json{{"offset", offset},
                            {"length", bw.size()},
                            {"letters", bw.letter_count()},
                            {"zeros", bw.letter_count()},
                            {"bits", bits}};
    emit(out, report);
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"additive/abelian square analysis for integer words"};
    app.name("addiword");
    app.require_subcommand(1);

    WordSource detect_src;
    std::string detect_pattern = "additive-square";
    std::size_t detect_min_half = 1;
    auto* detect = app.add_subcommand("detect", "find the first forbidden power in a word");
    add_word_options(detect, detect_src);
    detect->add_option("--pattern", detect_pattern,
                       "additive-square | additive-cube | abelian-square");
    detect->add_option("--min-half-len", detect_min_half, "minimal block length")
        ->check(CLI::PositiveNumber);

    WordSource t1_src;
    std::size_t t1_min_block = 1;
    auto* t1 = app.add_subcommand(
        "theorem1", "near-additive square via the binary run-length encoding");
    add_word_options(t1, t1_src);
    t1->add_option("--min-block-len", t1_min_block, "minimal letters per block")
        ->check(CLI::PositiveNumber);

    WordSource t2_src;
    std::size_t t2_k = 2;
    std::size_t t2_max_points = 20'000;
    std::string t2_svg;
    auto* t2 = app.add_subcommand(
        "theorem2", "equal-average adjacent factors via collinear path points");
    add_word_options(t2, t2_src);
    t2->add_option("--k", t2_k, "number of factors")->check(CLI::Range(std::size_t{2}, std::size_t{1000}));
    t2->add_option("--max-points", t2_max_points, "path prefix cap")->check(CLI::PositiveNumber);
    t2->add_option("--svg", t2_svg, "write the path and chosen points as SVG");

    std::string search_alphabet;
    std::string search_pattern = "additive-square";
    std::size_t search_depth = 200;
    std::uint64_t search_nodes = 100'000'000;
    std::optional<std::size_t> search_count_at;
    auto* search = app.add_subcommand("search", "longest word avoiding a pattern (DFS)");
    search->add_option("--alphabet", search_alphabet, "e.g. \"1,2,3,4\"")->required();
    search->add_option("--pattern", search_pattern,
                       "additive-square | additive-cube | abelian-square");
    search->add_option("--depth-budget", search_depth, "maximal word length explored")
        ->check(CLI::PositiveNumber);
    search->add_option("--node-budget", search_nodes, "maximal DFS nodes")
        ->check(CLI::PositiveNumber);
    search->add_option("--count-at", search_count_at,
                       "also count avoiding words of exactly this length");

    WordSource ap_src;
    auto* ap = app.add_subcommand(
        "ap", "first triple whose indices and values are both arithmetic progressions");
    add_word_options(ap, ap_src);

    WordSource enc_src;
    auto* enc = app.add_subcommand("encode", "binary run-length encoding of a word");
    add_word_options(enc, enc_src);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        // Help requests exit 0; anything else is a usage error.
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        if (app.got_subcommand(detect))
            return run_detect(out, detect_src.load(std::cin), detect_pattern, detect_min_half);
        if (app.got_subcommand(t1))
            return run_theorem1(out, t1_src.load(std::cin), t1_min_block);
        if (app.got_subcommand(t2))
            return run_theorem2(out, err, t2_src.load(std::cin), t2_k, t2_max_points, t2_svg);
        if (app.got_subcommand(search))
            return run_search(out, search_alphabet, search_pattern, search_depth, search_nodes,
                              search_count_at);
        if (app.got_subcommand(ap)) return run_ap(out, ap_src.load(std::cin));
        if (app.got_subcommand(enc)) return run_encode(out, enc_src.load(std::cin));
    } catch (const ParseError& e) {
        err << "addiword " << command << ": " << e.what() << '\n';
        return emit_error(out, command, e.what());
    } catch (const std::exception& e) {
        err << "addiword " << command << ": " << e.what() << '\n';
        return emit_error(out, command, e.what());
    }
    err << "addiword: unknown subcommand\n";
    return 2;
}

}  // namespace addiword
