// insdel: command-line front end for the insertion/deletion list-decoding
// library.  Exit codes: 0 success, 1 usage, 2 computation failure,
// 3 verification failure.

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "insdel/bounds.hpp"
#include "insdel/channel.hpp"
#include "insdel/concat.hpp"
#include "insdel/field.hpp"
#include "insdel/inner_code.hpp"
#include "insdel/io.hpp"
#include "insdel/rational.hpp"
#include "insdel/sudan.hpp"
#include "insdel/word.hpp"

namespace {

using namespace insdel;

struct VerifyFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool g_json = false;

void emit_bound(const std::string& name, const BoundResult& res, const nlohmann::json& extra = {}) {
    if (g_json) {
        nlohmann::json j = extra;
        j["bound"] = name;
        j["feasible"] = res.feasible;
        if (res.feasible) {
            j["list_bound"] = rat_string(res.list_bound);
            j["list_bound_double"] = rat_double(res.list_bound);
            j["list_bound_floor"] = to_ll(res.list_bound_floor);
        }
        std::cout << j.dump(2) << '\n';
        return;
    }
    if (!res.feasible) {
        std::cout << "infeasible\n";
        return;
    }
    std::cout << "feasible, bound " << rat_string(res.list_bound);
    if (rat_den(res.list_bound) != 1) std::cout << " (floor " << res.list_bound_floor << ")";
    std::cout << '\n';
}

std::string msg_to_hex(const Message& s) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    for (long long v : s) out += digits[static_cast<std::size_t>(v)];
    return out;
}

Message hex_to_msg(const std::string& text, long long p, long long k) {
    if (static_cast<long long>(text.size()) != k)
        throw std::invalid_argument("message must have exactly " + std::to_string(k) + " hex digits");
    if (p > 16) throw std::invalid_argument("hex message encoding requires p <= 16");
    Message s;
    for (char c : text) {
        long long v;
        if (c >= '0' && c <= '9') v = c - '0';
        else if (c >= 'a' && c <= 'f') v = 10 + (c - 'a');
        else if (c >= 'A' && c <= 'F') v = 10 + (c - 'A');
        else throw std::invalid_argument("invalid hex digit in message");
        if (v >= p) throw std::invalid_argument("message digit outside F_p");
        s.push_back(v);
    }
    return s;
}

InnerCode load_inner(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_inner_code(in);
}

ConcatParams load_params(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_params(in);
}

Word load_word(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_single_word(in);
}

CodeBook load_codebook(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_codebook(in);
}

void run_verify_appendix() {
    const Word c1 = Word::parse("000000", 2), c2 = Word::parse("011100", 2), c3 = Word::parse("100011", 2);
    const Word r1 = Word::parse("01100", 2);
    const EditWitness w1(c1, r1, {4, 5, 6}, {2, 3});
    const EditWitness w2(c2, r1, {4}, {});
    const EditWitness w3(c3, r1, {4, 5, 6}, {1, 2});

    const Word c4 = Word::parse("000111222", 3), c5 = Word::parse("222111000", 3);
    const Word r2 = Word::parse("000", 3);
    const EditWitness w4(c4, r2, {4, 5, 6, 7, 8, 9}, {});
    const EditWitness w5(c5, r2, {1, 2, 3, 4, 5, 6}, {});

    struct Row {
        const char* label;
        long long u, d;
    };
    const std::vector<Row> rows = {
        {"u(1,2)", wz_u_value(w1, w2), levenshtein_distance(c1, c2)},
        {"u(1,3)", wz_u_value(w1, w3), levenshtein_distance(c1, c3)},
        {"u(2,3)", wz_u_value(w2, w3), levenshtein_distance(c2, c3)},
        {"u(4,5)", wz_u_value(w4, w5), levenshtein_distance(c4, c5)},
    };
    const long long expect_u[] = {5, 4, 5, 6};
    const long long expect_d[] = {6, 6, 6, 12};

    nlohmann::json j;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!g_json)
            std::cout << rows[i].label << "=" << rows[i].u << " d_L=" << rows[i].d << '\n';
        else
            j[rows[i].label] = {{"u", rows[i].u}, {"d_L", rows[i].d}};
        if (rows[i].u != expect_u[i] || rows[i].d != expect_d[i])
            throw VerifyFailure(std::string(rows[i].label) + " disagrees with the recorded appendix values");
        if (!(rows[i].d > rows[i].u))
            throw VerifyFailure(std::string(rows[i].label) + " does not satisfy d_L > u");
    }
    if (g_json) std::cout << j.dump(2) << '\n';
    else std::cout << "all pairs satisfy d_L > u; claimed relation (13) refuted\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"list decoding of insertions and deletions: bounds, codes, channel, codec, oracles"};
    app.require_subcommand(1);
    app.add_flag("--json", g_json, "emit JSON instead of text");

    // ---- bounds ----
    auto* bounds = app.add_subcommand("bounds", "evaluate the list-size and code-size bounds");
    bounds->require_subcommand(1);
    struct {
        long long n = 1, d = 0, tins = 0, tdel = 0, big_n = 1, t = -1;
        std::string tins_rat = "0", tdel_rat = "0", delta = "0", step = "1/100", out;
        int figure = 1;
    } bo;

    auto* b_johnson = bounds->add_subcommand("johnson", "Johnson-type bound (Theorem-1 form)");
    b_johnson->add_option("--n", bo.n, "block length")->required();
    b_johnson->add_option("--d", bo.d, "minimum Levenshtein distance")->required();
    b_johnson->add_option("--tins", bo.tins, "insertion budget")->required();
    b_johnson->add_option("--tdel", bo.tdel, "deletion budget")->required();
    b_johnson->callback([&] {
        emit_bound("johnson", johnson_bound(bo.n, bo.d, bo.tins, bo.tdel),
                   {{"n", bo.n}, {"d", bo.d}, {"t_ins", bo.tins}, {"t_del", bo.tdel}});
        if (!g_json && bo.tins == 0)
            std::cout << "note: deletions only -- a Johnson-type bound is open here; the operative answer is "
                         "unique decoding (list size 1 whenever t_del < d/2, Lemma-1 form)\n";
    });

    auto* b_lemma1 = bounds->add_subcommand("lemma1", "exact-length bound (Lemma-1 form)");
    b_lemma1->add_option("--n", bo.n)->required();
    b_lemma1->add_option("--d", bo.d)->required();
    b_lemma1->add_option("--tins", bo.tins)->required();
    b_lemma1->add_option("--tdel", bo.tdel)->required();
    b_lemma1->callback([&] {
        emit_bound("lemma1", lemma1_bound(bo.n, bo.d, bo.tins, bo.tdel),
                   {{"n", bo.n}, {"d", bo.d}, {"t_ins", bo.tins}, {"t_del", bo.tdel}});
    });

    auto* b_equal = bounds->add_subcommand("equal", "equal-radius bound (t_ins = t_del = t)");
    b_equal->add_option("--n", bo.n)->required();
    b_equal->add_option("--d", bo.d)->required();
    auto* t_opt = b_equal->add_option("--t", bo.t, "evaluate the bound at this radius");
    b_equal->callback([&] {
        const EqualRadiusBound eq = equal_radius_bound(bo.n, bo.d);
        nlohmann::json j{{"n", bo.n}, {"d", bo.d}, {"t_equal", eq.t_equal}};
        if (!g_json) std::cout << "t_equal " << eq.t_equal << '\n';
        if (t_opt->count()) {
            if (eq.feasible_at(bo.t)) {
                const Rational bound = eq.bound_at(bo.t);
                j["feasible"] = true;
                j["list_bound"] = rat_string(bound);
                j["list_bound_floor"] = to_ll(rat_floor(bound));
                if (!g_json)
                    std::cout << "feasible at t=" << bo.t << ", bound " << rat_string(bound) << " (floor "
                              << rat_floor(bound) << ")\n";
            } else {
                j["feasible"] = false;
                if (!g_json) std::cout << "infeasible at t=" << bo.t << '\n';
            }
        }
        if (g_json) std::cout << j.dump(2) << '\n';
    });

    auto* b_summary = bounds->add_subcommand("summary", "normalized-radius bound (Corollary-2 form)");
    b_summary->add_option("--tins", bo.tins_rat, "tau_ins as a rational or decimal")->required();
    b_summary->add_option("--tdel", bo.tdel_rat, "tau_del as a rational or decimal")->required();
    b_summary->add_option("--delta", bo.delta, "normalized distance d/2n")->required();
    b_summary->callback([&] {
        const Rational ti = parse_rational(bo.tins_rat), td = parse_rational(bo.tdel_rat),
                       de = parse_rational(bo.delta);
        const Rational threshold = delta_id(ti, td);
        if (!g_json) std::cout << "delta_ID " << rat_string(threshold) << '\n';
        emit_bound("summary", summary_bound(ti, td, de),
                   {{"tau_ins", bo.tins_rat}, {"tau_del", bo.tdel_rat}, {"delta", bo.delta},
                    {"delta_ID", rat_string(threshold)}});
    });

    auto* b_plotkin = bounds->add_subcommand("plotkin", "Plotkin-type code-size bound");
    b_plotkin->add_option("--n", bo.n)->required();
    b_plotkin->add_option("--d", bo.d)->required();
    b_plotkin->add_option("--N", bo.big_n, "supersequence length")->required();
    b_plotkin->callback([&] {
        emit_bound("plotkin", plotkin_bound(bo.n, bo.d, bo.big_n),
                   {{"n", bo.n}, {"d", bo.d}, {"N", bo.big_n}});
    });

    auto* b_curves = bounds->add_subcommand("curves", "CSV sweeps of the normalized radius curves");
    b_curves->add_option("--figure", bo.figure, "1, 2 or 3")->required()->check(CLI::Range(1, 3));
    b_curves->add_option("--out", bo.out, "output CSV path")->required();
    b_curves->add_option("--step", bo.step, "delta grid step (rational)");
    b_curves->callback([&] {
        std::ofstream out(bo.out);
        if (!out) throw std::runtime_error("cannot open " + bo.out + " for writing");
        write_curve_csv(out, bo.figure, parse_rational(bo.step));
        if (!out) throw std::runtime_error("write to " + bo.out + " failed");
        std::cout << "wrote figure " << bo.figure << " sweep to " << bo.out << '\n';
    });

    // ---- code ----
    auto* code = app.add_subcommand("code", "inner-code construction and codebook utilities");
    code->require_subcommand(1);
    struct {
        int q = 2;
        long long m = 1, p = 2, budget = 1'000'000;
        std::uint64_t seed = 0;
        std::string delta = "0", out, in;
    } co;

    auto* c_search = code->add_subcommand("search-inner", "randomized search for an inner code");
    c_search->add_option("--q", co.q)->required();
    c_search->add_option("--m", co.m)->required();
    c_search->add_option("--p", co.p)->required();
    c_search->add_option("--delta", co.delta, "normalized distance target")->required();
    c_search->add_option("--seed", co.seed)->required();
    c_search->add_option("--budget", co.budget, "candidate draws before giving up");
    c_search->add_option("--out", co.out, "inner-code file")->required();
    c_search->callback([&] {
        const InnerCode inner =
            search_inner_code(co.q, co.m, co.p, parse_rational(co.delta), co.seed, co.budget);
        std::ofstream out(co.out);
        if (!out) throw std::runtime_error("cannot open " + co.out + " for writing");
        write_inner_code(out, inner);
        std::cout << "found " << inner.p() * inner.p() << " codewords, delta_in "
                  << rat_string(inner.delta_in()) << ", wrote " << co.out << '\n';
    });

    auto* c_mind = code->add_subcommand("min-distance", "minimum Levenshtein distance of a codebook");
    c_mind->add_option("--in", co.in, "codebook file")->required();
    c_mind->callback([&] {
        const CodeBook book = load_codebook(co.in);
        if (g_json)
            std::cout << nlohmann::json{{"q", book.q()}, {"n", book.block_length()},
                                        {"size", book.size()}, {"min_dist", book.min_dist()}}.dump(2)
                      << '\n';
        else
            std::cout << "size " << book.size() << ", min distance " << book.min_dist() << '\n';
    });

    // ---- channel ----
    auto* channel = app.add_subcommand("channel", "insertion/deletion channel simulator");
    channel->require_subcommand(1);
    struct {
        std::string in, out, ledger;
        long long tins = 0, tdel = 0, block = 0;
        std::uint64_t seed = 0;
    } ch;
    auto* ch_corrupt = channel->add_subcommand("corrupt", "apply seeded random corruption");
    ch_corrupt->add_option("--in", ch.in, "single-word file")->required();
    ch_corrupt->add_option("--tins", ch.tins)->required();
    ch_corrupt->add_option("--tdel", ch.tdel)->required();
    ch_corrupt->add_option("--seed", ch.seed)->required();
    ch_corrupt->add_option("--block-length", ch.block, "attach per-block counts to the ledger");
    ch_corrupt->add_option("--out", ch.out, "write the corrupted word here instead of stdout");
    ch_corrupt->add_option("--ledger", ch.ledger, "write the ledger JSON here instead of stdout");
    ch_corrupt->callback([&] {
        const Word x = load_word(ch.in);
        const CorruptResult res = corrupt(x, ch.tins, ch.tdel, ch.seed, ch.block);
        std::ostringstream word_text;
        write_word_file(word_text, {res.word}, res.word.q());
        if (ch.out.empty()) std::cout << word_text.str();
        else spill_file(ch.out, word_text.str());
        const std::string ledger_text = res.ledger.to_json() + "\n";
        if (ch.ledger.empty()) std::cout << ledger_text;
        else spill_file(ch.ledger, ledger_text);
    });

    // ---- codec ----
    auto* codec = app.add_subcommand("codec", "concatenated encoder and windowed list decoders");
    codec->require_subcommand(1);
    struct {
        std::string mode = "insdel", tins = "0", tdel = "0", gamma = "0", override_rate = "0";
        std::string params, inner, msg, in, out;
        long long k = 1, lp = 1, n = 1, m = 1, p = 2, cap = 4'000'000;
        int threads = 1;
    } cd;

    auto* cd_derive = codec->add_subcommand("derive-params", "derive and save a parameter bundle");
    cd_derive->add_option("--mode", cd.mode)->check(CLI::IsMember({"insdel", "insertions"}));
    cd_derive->add_option("--tins", cd.tins, "tau_I (rational)")->required();
    cd_derive->add_option("--tdel", cd.tdel, "tau_D (rational, insdel mode)");
    cd_derive->add_option("--gamma", cd.gamma, "gamma (rational, insertion mode)");
    cd_derive->add_option("--k", cd.k, "window divisor k (insertion mode)");
    cd_derive->add_option("--lp", cd.lp, "inner list size ell_prime")->required();
    cd_derive->add_option("--n", cd.n)->required();
    cd_derive->add_option("--m", cd.m)->required();
    cd_derive->add_option("--p", cd.p)->required();
    cd_derive->add_option("--override-rate", cd.override_rate,
                          "decouple the outer rate from the lemma formula (outside the guarantee)");
    cd_derive->add_option("--cap", cd.cap, "brute-force fallback cap on p^k");
    cd_derive->add_option("--out", cd.out, "params file")->required();
    cd_derive->callback([&] {
        ConcatParams params =
            cd.mode == "insdel"
                ? derive_params(parse_rational(cd.tins), parse_rational(cd.tdel), cd.lp, cd.n, cd.m,
                                cd.p, parse_rational(cd.override_rate))
                : derive_params_insertions(parse_rational(cd.tins), parse_rational(cd.gamma), cd.k,
                                           cd.lp, cd.n, cd.m, cd.p, parse_rational(cd.override_rate));
        params.fallback_cap = cd.cap;
        std::ostringstream text;
        write_params(text, params);
        spill_file(cd.out, text.str());
        std::cout << "k_degree " << params.k_degree() << ", ell " << rat_string(params.ell) << " (floor "
                  << rat_floor(params.ell) << "), r " << rat_string(params.r);
        if (params.r_override > 0)
            std::cout << ", rate override " << rat_string(params.r_override)
                      << " (outside the lemma guarantee)";
        std::cout << ", wrote " << cd.out << '\n';
    });

    auto* cd_encode = codec->add_subcommand("encode", "encode a message");
    cd_encode->add_option("--params", cd.params)->required();
    cd_encode->add_option("--inner", cd.inner)->required();
    cd_encode->add_option("--msg", cd.msg, "message as hex digits, one per F_p symbol")->required();
    cd_encode->add_option("--out", cd.out, "write the codeword here instead of stdout");
    cd_encode->callback([&] {
        const ConcatParams params = load_params(cd.params);
        const InnerCode inner = load_inner(cd.inner);
        const Word word =
            concat_encode(params, inner, hex_to_msg(cd.msg, params.p, params.k_degree()));
        std::ostringstream text;
        write_word_file(text, {word}, word.q());
        if (cd.out.empty()) std::cout << text.str();
        else spill_file(cd.out, text.str());
    });

    auto* cd_decode = codec->add_subcommand("decode", "windowed list decoding");
    cd_decode->add_option("--mode", cd.mode)->check(CLI::IsMember({"insdel", "insertions"}));
    cd_decode->add_option("--params", cd.params)->required();
    cd_decode->add_option("--inner", cd.inner)->required();
    cd_decode->add_option("--in", cd.in, "received-word file")->required();
    cd_decode->add_option("--threads", cd.threads, "parallel window decoding");
    cd_decode->callback([&] {
        const ConcatParams params = load_params(cd.params);
        const InnerCode inner = load_inner(cd.inner);
        const Word v = load_word(cd.in);
        const DecodeMode mode = cd.mode == "insdel" ? DecodeMode::insdel : DecodeMode::insertions;
        if (mode != params.mode) throw std::invalid_argument("--mode disagrees with the params file");
        const DecodeOutput out = mode == DecodeMode::insdel
                                     ? list_decode_insdel(params, inner, v, cd.threads)
                                     : list_decode_insertions(params, inner, v, cd.threads);
        if (g_json) {
            nlohmann::json j{{"windows", out.window_count},
                             {"pairs", out.pair_count},
                             {"max_window_list", out.max_window_list},
                             {"outer_list", out.outer_list_size},
                             {"sudan_regime_ok", out.sudan_regime_ok},
                             {"used_fallback", out.used_fallback},
                             {"ell_floor", to_ll(rat_floor(params.ell))},
                             {"messages", nlohmann::json::array()}};
            for (const Message& s : out.messages) j["messages"].push_back(msg_to_hex(s));
            std::cout << j.dump(2) << '\n';
        } else {
            std::cout << "windows " << out.window_count << ", pairs " << out.pair_count
                      << ", max window list " << out.max_window_list << ", outer list "
                      << out.outer_list_size << '\n'
                      << "step 3: " << (out.sudan_regime_ok ? "sudan regime" : "outside sudan regime")
                      << (out.used_fallback ? ", brute-force fallback used" : "") << '\n'
                      << "list size " << out.messages.size() << " (ell floor " << rat_floor(params.ell)
                      << ")\n";
            for (const Message& s : out.messages) std::cout << "msg " << msg_to_hex(s) << '\n';
        }
    });

    // ---- oracle ----
    auto* oracle = app.add_subcommand("oracle", "exhaustive brute-force oracles");
    oracle->require_subcommand(1);
    struct {
        std::string code;
        long long tins = 0, tdel = 0, n = 1, d = 0, cap = 0;
        int q = 2;
    } orc;

    auto* o_maxlist = oracle->add_subcommand("max-list", "maximum list size over all received words");
    o_maxlist->add_option("--code", orc.code, "codebook file")->required();
    o_maxlist->add_option("--tins", orc.tins)->required();
    o_maxlist->add_option("--tdel", orc.tdel)->required();
    o_maxlist->add_option("--cap", orc.cap, "enumeration cap (default 5000000)");
    o_maxlist->callback([&] {
        const CodeBook book = load_codebook(orc.code);
        const MaxListResult res =
            max_list_size(book, orc.tins, orc.tdel, orc.cap > 0 ? orc.cap : 5'000'000);
        if (g_json)
            std::cout << nlohmann::json{{"max_list", res.max_size}, {"witness", res.witness.str()}}.dump(2)
                      << '\n';
        else
            std::cout << "max list " << res.max_size << ", witness " << res.witness.str() << '\n';
    });

    auto* o_maxcode = oracle->add_subcommand("max-code", "maximum code size at a distance target");
    o_maxcode->add_option("--q", orc.q)->required();
    o_maxcode->add_option("--n", orc.n)->required();
    o_maxcode->add_option("--d", orc.d)->required();
    o_maxcode->add_option("--cap", orc.cap, "enumeration cap (default 250000)");
    o_maxcode->callback([&] {
        const MaxCodeResult res = max_code_search(orc.q, orc.n, orc.d, orc.cap > 0 ? orc.cap : 250'000);
        if (g_json) {
            nlohmann::json j{{"size", res.size}, {"min_dist", res.code.min_dist()},
                             {"words", nlohmann::json::array()}};
            for (const Word& w : res.code.words()) j["words"].push_back(w.str());
            std::cout << j.dump(2) << '\n';
        } else {
            std::cout << "max code size " << res.size << " (min distance " << res.code.min_dist()
                      << ")\n";
            for (const Word& w : res.code.words()) std::cout << w.str() << '\n';
        }
    });

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "recompute recorded claims");
    verify->require_subcommand(1);
    verify->add_subcommand("appendix", "Appendix A u(i,j) refutation")->callback(run_verify_appendix);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const VerifyFailure& e) {
        std::cerr << "verification failure: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
