// Acceptance gate: runs every advertised guarantee end to end and prints one
// PASS/FAIL line per criterion.  Invoke as:  acceptance <path-to-cli-binary>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "insdel/bounds.hpp"
#include "insdel/channel.hpp"
#include "insdel/concat.hpp"
#include "insdel/inner_code.hpp"
#include "insdel/random.hpp"
#include "insdel/sudan.hpp"
#include "insdel/word.hpp"

using namespace insdel;
using Clock = std::chrono::steady_clock;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string output;
};

CliResult run_cli(const std::string& cli, const std::string& args) {
    const std::string cmd = "\"" + cli + "\" " + args + " 2>&1";
    CliResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return res;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) res.output.append(buf, got);
    const int status = pclose(pipe);
    res.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return res;
}

Word random_word(std::mt19937_64& rng, long long len, int q) {
    std::vector<int> symbols(static_cast<std::size_t>(len));
    for (auto& s : symbols) s = static_cast<int>(uniform_draw(rng, static_cast<std::uint64_t>(q)));
    return Word(std::move(symbols), q);
}

// Ball-membership oracle by exhaustive edit-sequence enumeration: guess which
// positions of v were inserted, the rest must survive from c as a subsequence.
bool ball_oracle(const Word& c, const Word& v, long long t_ins, long long t_del) {
    for (std::uint64_t mask = 0; mask < (1ULL << v.size()); ++mask) {
        std::vector<int> kept;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (mask & (1ULL << i)) kept.push_back(v[i]);
        if (static_cast<long long>(v.size() - kept.size()) > t_ins) continue;
        Word s(kept, v.q());
        if (is_subsequence(s, c) && static_cast<long long>(c.size() - s.size()) <= t_del) return true;
    }
    return false;
}

struct Criterion {
    bool ok = true;
    std::ostringstream detail;

    void fail(const std::string& why) {
        if (ok) {
            ok = false;
            detail.str("");
            detail << why;
        }
    }
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void enforce_budget(Criterion& c, double elapsed, double budget_s) {
    if (elapsed > budget_s) {
        std::ostringstream why;
        why << "runtime " << elapsed << " s exceeds the " << budget_s << " s budget";
        c.fail(why.str());
    }
}

// ---------------------------------------------------------------- criterion 1
Criterion appendix_reproduction(const std::string& cli) {
    Criterion c;
    const auto start = Clock::now();
    const CliResult res = run_cli(cli, "verify appendix");
    const double elapsed = seconds_since(start);
    if (res.exit_code != 0) {
        c.fail("verify appendix exited with " + std::to_string(res.exit_code));
        return c;
    }
    for (const char* needle : {"u(1,2)=5", "u(1,3)=4", "u(2,3)=5", "u(4,5)=6", "d_L=6", "d_L=12"})
        if (res.output.find(needle) == std::string::npos) {
            c.fail(std::string("output lacks \"") + needle + "\"");
            return c;
        }
    enforce_budget(c, elapsed, 1.0);
    if (c.ok)
        c.detail << "u(1,2)=5 u(1,3)=4 u(2,3)=5 u(4,5)=6 with d_L 6/12 via CLI in " << elapsed
                 << " s";
    return c;
}

// ---------------------------------------------------------------- criterion 2
Criterion endpoint_0707() {
    Criterion c;
    const auto curves =
        radius_curves({Rational(414213562, 1000000000), Rational(0), Rational(0)});
    const double target = (2.0 + std::sqrt(2.0)) / 2.0 - 1.0;
    const double got = rat_double(curves.tau_i);
    if (std::abs(got - target) >= 1e-6) {
        std::ostringstream why;
        why.precision(12);
        why << "tau_I = " << got << " misses " << target << " by " << std::abs(got - target);
        c.fail(why.str());
    } else {
        c.detail.precision(10);
        c.detail << "tau_I(" << 0.414213562 << ", 0) = " << got << ", |err| = "
                 << std::abs(got - target) << " < 1e-6";
    }
    return c;
}

// ------------------------------------------------------- corpus for 3 and 4
std::vector<CodeBook> random_codebooks(int count) {
    std::vector<CodeBook> books;
    std::mt19937_64 rng(20260823);
    while (static_cast<int>(books.size()) < count) {
        const int q = 2 + static_cast<int>(uniform_draw(rng, 2));
        const long long n = 4 + static_cast<long long>(uniform_draw(rng, 3));
        std::set<Word> words;
        if (books.size() % 2 == 0) {
            // Plain random support of size 2..5.
            const std::size_t want = 2 + static_cast<std::size_t>(uniform_draw(rng, 4));
            while (words.size() < want) words.insert(random_word(rng, n, q));
        } else {
            // Greedy spread: keep draws far from everything kept so far, to
            // exercise the feasible region with t_ins > 0.
            for (int draws = 0; draws < 60 && words.size() < 4; ++draws) {
                const Word cand = random_word(rng, n, q);
                bool far = true;
                for (const Word& w : words)
                    if (levenshtein_distance(cand, w) < n) far = false;
                if (far) words.insert(cand);
            }
            if (words.size() < 2) continue;
        }
        books.emplace_back(std::vector<Word>(words.begin(), words.end()));
    }
    return books;
}

// ---------------------------------------------------------------- criterion 3
Criterion johnson_soundness(const std::vector<CodeBook>& books) {
    Criterion c;
    const auto start = Clock::now();
    long long checked = 0;
    for (const CodeBook& code : books) {
        const long long n = code.block_length(), d = code.min_dist();
        for (long long ti = 0; ti <= 3 && c.ok; ++ti)
            for (long long td = 0; td <= 2 && c.ok; ++td) {
                if (td > n) continue;
                const auto bound = johnson_bound(n, d, ti, td);
                if (!bound.feasible) continue;
                const auto observed = max_list_size(code, ti, td);
                ++checked;
                if (observed.max_size > to_ll(bound.list_bound_floor)) {
                    std::ostringstream why;
                    why << "violation at n=" << n << " d=" << d << " t_ins=" << ti
                        << " t_del=" << td << ": observed " << observed.max_size
                        << " > floor " << to_ll(bound.list_bound_floor) << " (witness "
                        << observed.witness.str() << ")";
                    c.fail(why.str());
                }
            }
        if (!c.ok) break;
    }
    const double elapsed = seconds_since(start);
    enforce_budget(c, elapsed, 600.0);
    if (c.ok)
        c.detail << books.size() << " codebooks, " << checked
                 << " feasible budget pairs, zero violations in " << elapsed << " s";
    return c;
}

// ---------------------------------------------------------------- criterion 4
Criterion unique_decoding_degeneration(const std::vector<CodeBook>& books) {
    Criterion c;
    long long checked = 0;
    for (const CodeBook& code : books) {
        const long long n = code.block_length(), d = code.min_dist();
        for (long long td = 0; 2 * td < d && td <= std::min(n, 2LL) && c.ok; ++td) {
            const auto observed = max_list_size(code, 0, td);
            ++checked;
            if (observed.max_size > 1) {
                std::ostringstream why;
                why << "deletions-only list of size " << observed.max_size << " at n=" << n
                    << " d=" << d << " t_del=" << td << " (witness " << observed.witness.str()
                    << ")";
                c.fail(why.str());
            }
        }
        if (!c.ok) break;
    }
    if (c.ok) c.detail << checked << " deletion-only settings, every list size <= 1";
    return c;
}

// ---------------------------------------------------------------- criterion 5
Criterion sudan_oracle_equivalence() {
    Criterion c;
    const auto start = Clock::now();
    std::mt19937_64 rng(5150);
    const long long primes[] = {5, 7, 11, 13};
    int trials = 0;
    for (int attempt = 0; attempt < 2000 && trials < 500 && c.ok; ++attempt) {
        const long long p = primes[uniform_draw(rng, 4)];
        const PrimeField field(p);
        const long long k = 1 + static_cast<long long>(uniform_draw(rng, 3));
        std::vector<std::pair<long long, long long>> pts;
        // Plant up to two polynomials so nonempty lists are common.
        const int planted = static_cast<int>(uniform_draw(rng, 3));
        for (int pl = 0; pl < planted; ++pl) {
            std::vector<long long> coeffs;
            for (long long i = 0; i < k; ++i)
                coeffs.push_back(static_cast<long long>(uniform_draw(rng, static_cast<std::uint64_t>(p))));
            const Polynomial f(field, coeffs);
            for (long long x = 0; x < p; ++x)
                if (uniform_draw(rng, 4) != 0) pts.push_back({x, poly_eval(field, f, x)});
        }
        const int noise = 2 + static_cast<int>(uniform_draw(rng, 10));
        for (int i = 0; i < noise; ++i)
            pts.push_back({static_cast<long long>(uniform_draw(rng, static_cast<std::uint64_t>(p))),
                           static_cast<long long>(uniform_draw(rng, static_cast<std::uint64_t>(p)))});
        const PairSet pairs(field, pts);
        if (pairs.size() > 40) continue;
        const long long j_size = static_cast<long long>(pairs.size());
        long long threshold = 1;
        while (threshold * threshold <= 2 * k * j_size) ++threshold;
        threshold += static_cast<long long>(uniform_draw(rng, 3));  // stay in regime
        try {
            const auto fast = sudan_list_recover(field, pairs, k, threshold);
            const auto brute = brute_force_list_recover(field, pairs, k, threshold);
            std::vector<std::vector<long long>> a, b;
            for (const auto& f : fast) a.push_back(f.coeffs());
            for (const auto& f : brute) b.push_back(f.coeffs());
            if (a != b) {
                std::ostringstream why;
                why << "mismatch at p=" << p << " k=" << k << " |J|=" << j_size
                    << " threshold=" << threshold << ": sudan " << a.size() << " vs brute "
                    << b.size();
                c.fail(why.str());
            }
            ++trials;
        } catch (const std::exception& e) {
            c.fail(std::string("exception: ") + e.what());
        }
    }
    const double elapsed = seconds_since(start);
    enforce_budget(c, elapsed, 300.0);
    if (c.ok && trials < 500) c.fail("only " + std::to_string(trials) + " usable trials");
    if (c.ok)
        c.detail << trials << " pair sets agree set-exactly with enumeration in " << elapsed
                 << " s";
    return c;
}

// ------------------------------------------------------ shared for 6 and 7
const InnerCode& acceptance_inner() {
    static const InnerCode code = search_inner_code(4, 16, 7, Rational(1, 4), 2026);
    return code;
}

// ---------------------------------------------------------------- criterion 6
Criterion lemma4_end_to_end() {
    Criterion c;
    const auto start = Clock::now();
    const InnerCode& inner = acceptance_inner();
    const auto params =
        derive_params(Rational(1, 5), Rational(1, 25), 2, 7, 16, 7, Rational(1, 7));
    if (rat_floor(params.ell) != 225) {
        c.fail("ell floor is not 225");
        return c;
    }
    const long long nm = params.n * params.m;  // 112
    const long long t_ins = to_ll(rat_floor(params.tau_i * nm));  // 22
    const long long t_del = to_ll(rat_floor(params.tau_d * nm));  // 4
    std::mt19937_64 rng(4096);
    int recovered = 0;
    long long max_list = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const long long s = static_cast<long long>(uniform_draw(rng, 7));
        const Word enc = concat_encode(params, inner, {s});
        const Word v = corrupt(enc, t_ins, t_del, 31000 + static_cast<std::uint64_t>(trial)).word;
        const auto out = list_decode_insdel(params, inner, v, 2);
        max_list = std::max(max_list, static_cast<long long>(out.messages.size()));
        const bool hit =
            std::find(out.messages.begin(), out.messages.end(), Message{s}) != out.messages.end();
        if (hit) ++recovered;
        if (static_cast<long long>(out.messages.size()) > 225) {
            c.fail("list size " + std::to_string(out.messages.size()) + " exceeds 225");
            break;
        }
        if (!hit) {
            c.fail("trial " + std::to_string(trial) + " lost message " + std::to_string(s));
            break;
        }
    }
    const double elapsed = seconds_since(start);
    enforce_budget(c, elapsed, 900.0);
    if (c.ok)
        c.detail << recovered << "/100 messages recovered under 22 ins + 4 del, max list "
                 << max_list << " <= 225, rate override 1/7, " << elapsed << " s";
    return c;
}

// ---------------------------------------------------------------- criterion 7
Criterion lemma5_end_to_end() {
    Criterion c;
    const auto start = Clock::now();
    const InnerCode& inner = acceptance_inner();
    const auto params = derive_params_insertions(Rational(1, 5), Rational(1, 2), 4, 2, 7, 16, 7,
                                                 Rational(1, 7));
    const long long cap = to_ll(rat_floor(params.ell));  // 4k^2 l'/gamma = 256
    if (cap != 256) {
        c.fail("ell is not 256");
        return c;
    }
    const long long t_ins = to_ll(rat_floor(params.tau_i * params.n * params.m));  // 22
    std::mt19937_64 rng(8192);
    int recovered = 0;
    long long max_list = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const long long s = static_cast<long long>(uniform_draw(rng, 7));
        const Word enc = concat_encode(params, inner, {s});
        const Word v = corrupt(enc, t_ins, 0, 47000 + static_cast<std::uint64_t>(trial)).word;
        const auto out = list_decode_insertions(params, inner, v, 2);
        max_list = std::max(max_list, static_cast<long long>(out.messages.size()));
        const bool hit =
            std::find(out.messages.begin(), out.messages.end(), Message{s}) != out.messages.end();
        if (hit) ++recovered;
        if (static_cast<long long>(out.messages.size()) > cap) {
            c.fail("list size " + std::to_string(out.messages.size()) + " exceeds 256");
            break;
        }
        if (!hit) {
            c.fail("trial " + std::to_string(trial) + " lost message " + std::to_string(s));
            break;
        }
    }
    const double elapsed = seconds_since(start);
    enforce_budget(c, elapsed, 600.0);
    if (c.ok)
        c.detail << recovered << "/100 messages recovered under 22 insertions, max list "
                 << max_list << " <= 256, " << elapsed << " s";
    return c;
}

// ---------------------------------------------------------------- criterion 8
Criterion plotkin_check() {
    Criterion c;
    const auto start = Clock::now();
    const auto bound = plotkin_bound(4, 6, 8);
    if (!bound.feasible || bound.list_bound != Rational(3)) {
        c.fail("plotkin_bound(4, 6, 8) is not exactly 3");
        return c;
    }
    const auto best = max_code_search(2, 4, 6);
    if (best.size > 3) {
        c.fail("max_code_search(2, 4, 6) found " + std::to_string(best.size) + " > 3");
        return c;
    }
    // Frozen regression constant from the first exhaustive run.
    if (best.size != 2) {
        c.fail("max_code_search(2, 4, 6) = " + std::to_string(best.size) +
               ", expected the recorded optimum 2");
        return c;
    }
    const double elapsed = seconds_since(start);
    enforce_budget(c, elapsed, 120.0);
    if (c.ok)
        c.detail << "plotkin_bound(4,6,8) = 3 exactly; exhaustive optimum 2 <= 3 in " << elapsed
                 << " s";
    return c;
}

// ---------------------------------------------------------------- criterion 9
Criterion metric_property_suite() {
    Criterion c;
    const auto start = Clock::now();
    std::mt19937_64 rng(999);
    for (int trial = 0; trial < 10000 && c.ok; ++trial) {
        const int q = 2 + static_cast<int>(uniform_draw(rng, 3));
        const Word x = random_word(rng, static_cast<long long>(uniform_draw(rng, 13)), q);
        const Word y = random_word(rng, static_cast<long long>(uniform_draw(rng, 13)), q);
        const Word z = random_word(rng, static_cast<long long>(uniform_draw(rng, 13)), q);
        const long long dxy = levenshtein_distance(x, y);
        if (dxy < 0) c.fail("negative distance");
        if ((dxy == 0) != (x == y)) c.fail("identity of indiscernibles fails");
        if (dxy != levenshtein_distance(y, x)) c.fail("symmetry fails");
        if (levenshtein_distance(x, z) > dxy + levenshtein_distance(y, z))
            c.fail("triangle inequality fails");
        if (dxy != static_cast<long long>(x.size() + y.size()) - 2 * lcs(x, y))
            c.fail("LCS identity fails");
    }
    for (int trial = 0; trial < 4000 && c.ok; ++trial) {
        const int q = 2 + static_cast<int>(uniform_draw(rng, 2));
        const Word cw = random_word(rng, static_cast<long long>(uniform_draw(rng, 9)), q);
        const Word v = random_word(rng, static_cast<long long>(uniform_draw(rng, 9)), q);
        const long long ti = static_cast<long long>(uniform_draw(rng, 4));
        const long long td = static_cast<long long>(uniform_draw(rng, 4));
        if (in_insdel_ball(cw, v, ti, td) != ball_oracle(cw, v, ti, td)) {
            std::ostringstream why;
            why << "ball mismatch: c=" << cw.str() << " v=" << v.str() << " t_ins=" << ti
                << " t_del=" << td;
            c.fail(why.str());
        }
    }
    const double elapsed = seconds_since(start);
    enforce_budget(c, elapsed, 120.0);
    if (c.ok)
        c.detail << "10000 triples + 4000 exhaustive ball checks agree in " << elapsed << " s";
    return c;
}

// --------------------------------------------------------------- criterion 10
Criterion curve_regression() {
    Criterion c;
    for (int figure = 1; figure <= 3 && c.ok; ++figure) {
        std::ostringstream a, b;
        write_curve_csv(a, figure);
        write_curve_csv(b, figure);
        if (a.str() != b.str()) {
            c.fail("figure " + std::to_string(figure) + " CSV is not byte-stable");
            break;
        }
        std::istringstream in(a.str());
        std::string line;
        std::getline(in, line);
        struct Row {
            double delta, second, tau_id, tau_i, tau_d;
        };
        std::vector<Row> rows;
        while (std::getline(in, line)) {
            Row r{};
            if (std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf,%lf", &r.delta, &r.second, &r.tau_id,
                            &r.tau_i, &r.tau_d) != 5) {
                c.fail("figure " + std::to_string(figure) + " has an unparsable row: " + line);
                break;
            }
            rows.push_back(r);
        }
        for (std::size_t i = 0; i < rows.size() && c.ok; ++i)
            for (std::size_t j = 0; j < rows.size(); ++j) {
                if (rows[i].delta != rows[j].delta || rows[i].second >= rows[j].second) continue;
                const bool rho_figure = figure != 3;
                if (rho_figure && (rows[j].tau_id > rows[i].tau_id + 1e-12 ||
                                   rows[j].tau_i > rows[i].tau_i + 1e-12)) {
                    c.fail("figure " + std::to_string(figure) + " is not monotone in rho");
                    break;
                }
                if (!rho_figure && rows[j].tau_d > rows[i].tau_d + 1e-12) {
                    c.fail("figure 3 is not monotone in tau_ins");
                    break;
                }
            }
    }
    if (c.ok) c.detail << "figures 1-3 byte-stable and monotone in the implied directions";
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-cli-binary>\n";
        return 2;
    }
    const std::string cli = argv[1];

    std::vector<std::pair<std::string, Criterion>> results;
    const auto corpus_books = random_codebooks(200);
    results.push_back({"appendix reproduction", appendix_reproduction(cli)});
    results.push_back({"0.707 endpoint", endpoint_0707()});
    results.push_back({"Johnson soundness", johnson_soundness(corpus_books)});
    results.push_back({"unique-decoding degeneration", unique_decoding_degeneration(corpus_books)});
    results.push_back({"Sudan oracle equivalence", sudan_oracle_equivalence()});
    results.push_back({"windowed insdel decoding", lemma4_end_to_end()});
    results.push_back({"insertion-only decoding", lemma5_end_to_end()});
    results.push_back({"cardinality bound check", plotkin_check()});
    results.push_back({"metric property suite", metric_property_suite()});
    results.push_back({"figure curve regression", curve_regression()});

    int passed = 0;
    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& [name, crit] = results[i];
        std::cout << (crit.ok ? "PASS" : "FAIL") << " criterion " << (i + 1) << " (" << name
                  << "): " << crit.detail.str() << '\n';
        passed += crit.ok;
    }
    std::cout << "acceptance: " << passed << "/" << results.size() << " criteria passed\n";
    return passed == static_cast<int>(results.size()) ? 0 : 1;
}
