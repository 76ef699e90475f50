// Acceptance suite: one pass/fail line per criterion, exact tolerances.
// Exit status is the number of failed criteria.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "kncover/cli.hpp"
#include "kncover/counting.hpp"
#include "kncover/covering.hpp"
#include "kncover/enumerate.hpp"
#include "kncover/gen.hpp"
#include "kncover/verify.hpp"

using namespace kncover;

namespace {

struct Criterion {
    int id;
    std::string name;
    bool pass = true;
    std::vector<std::string> detail;

    void fail(const std::string& why) {
        pass = false;
        detail.push_back(why);
    }
    void info(const std::string& what) { detail.push_back(what); }
};

int jobs_from_env() {
    if (const char* env = std::getenv("COVER_SWITCH_JOBS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && v <= 256) return static_cast<int>(v);
    }
    return 4;
}

long long detail_of(const VerifyReport& r, const std::string& key) {
    for (const auto& [k, v] : r.details)
        if (k == key) return v;
    return -1;
}

Criterion criterion1(int jobs) {
    Criterion c{1, "max i_t over covered classes equals C(N-n+1,t) with unique split maximizer"};
    long long cells = 0;
    for (int n = 1; n <= 4; ++n) {
        for (int t = 3; t <= 4; ++t) {
            int n_hi = (n >= 3) ? 8 : 7;
            for (int N = n; N <= n_hi; ++N) {
                VerifyReport r = verify_main(n, t, N, jobs);
                ++cells;
                if (!r.pass) {
                    std::ostringstream os;
                    os << "(n=" << n << ",t=" << t << ",N=" << N << "): bound " << *r.bound
                       << ", achieved " << *r.achieved << ", extremal classes "
                       << *r.extremal_count;
                    for (const auto& note : r.notes) os << "; " << note;
                    c.fail(os.str());
                }
            }
        }
    }
    c.info(std::to_string(cells) + " grid cells, exact equality and uniqueness checked");
    return c;
}

Criterion criterion2(int jobs) {
    Criterion c{2, "min k_t over covered classes equals the overlap construction, uniquely"};
    long long cells = 0, value_fails = 0, unique_fails = 0;
    for (int n = 2; n <= 3; ++n)
        for (int t = 2; t <= n; ++t)
            for (int N = n; N <= 7; ++N) {
                VerifyReport r = verify_cl(n, t, N, jobs);
                ++cells;
                if (*r.achieved != *r.bound) {
                    ++value_fails;
                    c.fail("(n=" + std::to_string(n) + ",t=" + std::to_string(t) + ",N=" +
                           std::to_string(N) + "): minimum " + std::to_string(*r.achieved) +
                           " != construction value " + std::to_string(*r.bound));
                } else if (!r.pass) {
                    ++unique_fails;
                    std::ostringstream os;
                    os << "(n=" << n << ",t=" << t << ",N=" << N
                       << "): minimum matches the construction but " << *r.extremal_count
                       << " classes attain it (uniqueness refuted)";
                    c.fail(os.str());
                }
            }
    std::ostringstream os;
    os << cells << " grid cells; minimum-value clause failed " << value_fails
       << " times, uniqueness clause failed " << unique_fails << " times";
    c.info(os.str());
    return c;
}

Criterion criterion3(int jobs) {
    Criterion c{3, "switching: i3 nondecreasing, f nonincreasing, equality iff isomorphic"};
    VerifyReport r = verify_switching(2000, 20250809, jobs);
    c.info(std::to_string(detail_of(r, "switches")) + " switches over 2000 seeded hypergraphs");
    if (detail_of(r, "mono_i3_violations") != 0) c.fail("i3 decreased under a switch");
    if (detail_of(r, "mono_f_violations") != 0) c.fail("f increased under a switch");
    if (detail_of(r, "iso_implies_equality_violations") != 0)
        c.fail("an isomorphic outcome changed i3 or f");
    if (detail_of(r, "f_equality_without_iso") != 0)
        c.fail("f equality without isomorphism on a collision-free switch");
    if (detail_of(r, "merged_without_strict_f_drop") != 0)
        c.fail("a merging switch failed to strictly drop f");
    long long i3_eq = detail_of(r, "i3_equality_without_iso");
    if (i3_eq != 0) {
        c.fail("i3 equality without isomorphism on " + std::to_string(i3_eq) +
               " collision-free switches — the asserted equality condition of the switching "
               "lemma is refuted (monotonicity holds; counts recounted by brute force)");
        for (const auto& note : r.notes) c.detail.push_back("  " + note);
    }
    return c;
}

Criterion criterion4(int jobs) {
    Criterion c{4, "partition audit: T1/T2/T3 equal, T4 nondecreasing, sums reproduce i3"};
    VerifyReport r = verify_audit(500, 31415926, jobs);
    c.info(std::to_string(detail_of(r, "audits")) + " audits over 500 seeded instances (" +
           std::to_string(detail_of(r, "merged_skipped")) + " merged switches tracked apart)");
    if (detail_of(r, "t1_violations") != 0) c.fail("|T1| changed across a switch");
    if (detail_of(r, "t2_violations") != 0) c.fail("|T2| changed across a switch");
    if (detail_of(r, "t4_violations") != 0) c.fail("|T4| decreased across a switch");
    if (detail_of(r, "sum_violations") != 0) c.fail("class sums disagree with i3");
    long long t3 = detail_of(r, "t3_violations");
    if (t3 != 0) {
        c.fail("|T3| changed on " + std::to_string(t3) +
               " collision-free switches — the asserted T3 equality is refuted (T1/T2 "
               "equalities, the T4 inequality and both sums hold throughout)");
        for (const auto& note : r.notes) c.detail.push_back("  " + note);
    }
    return c;
}

Criterion criterion5(int jobs) {
    Criterion c{5, "stabilization terminates with strictly decreasing f and a universal vertex"};
    VerifyReport r = verify_stable_lemma(500, 27182818, jobs);
    c.info(std::to_string(r.instances_scanned) + " connected instances, max " +
           std::to_string(detail_of(r, "max_steps")) + " switching steps");
    if (detail_of(r, "trace_violations") != 0) c.fail("an f-trace failed to strictly decrease");
    if (detail_of(r, "disconnected_results") != 0) c.fail("stabilization lost connectivity");
    if (detail_of(r, "max_degree_violations") != 0)
        c.fail("a connected stable result had no vertex covering all edges");
    if (detail_of(r, "unstable_results") != 0) c.fail("a stabilized result was not stable");
    return c;
}

Criterion criterion6(int jobs) {
    Criterion c{6, "base-case identities: census, degree sum, 1-regular formula, leaf recursion"};
    VerifyReport base = verify_base_recursion(7, jobs);
    if (!base.pass) c.fail("leaf recursion or matching formula failed");
    c.info(std::to_string(base.instances_scanned) +
           " edge-critical pair-covered classes up to 7 vertices; matchings on 6..12 vertices");

    Rng rng(16180339);
    long long census_fails = 0, degsum_fails = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        Graph g = random_graph(rng, rng.range(3, 10), rng.range(0, 100));
        int N = g.vertex_count();
        TripleCensus tc = triple_census(g);
        if (count_independent_sets(g, 3) !=
            binomial(N, 3) - tc.tau1 - tc.tau2 - count_cliques(g, 3))
            ++census_fails;
        long long degsum = 0;
        for (int v = 0; v < N; ++v)
            degsum += static_cast<long long>(g.degree(v)) * (N - 1 - g.degree(v));
        if (2 * (tc.tau1 + tc.tau2) != degsum) ++degsum_fails;
    }
    if (census_fails != 0) c.fail("census identity failed on random graphs");
    if (degsum_fails != 0) c.fail("degree-sum identity failed on random graphs");
    c.info("1000 random graphs up to 10 vertices, both identities exact");
    return c;
}

Criterion criterion7() {
    Criterion c{7, "deficit positivity and the closed form of the boundary polynomial"};
    VerifyReport r = verify_disconnected_bound(50, 50);
    if (detail_of(r, "positivity_violations") != 0) c.fail("a deficit value was not positive");
    if (detail_of(r, "monotonicity_violations") != 0) c.fail("f(r) failed to decrease in r");
    if (detail_of(r, "closed_form_violations") != 0) c.fail("f(n-1) != n^2 + n - 3");
    if (detail_of(r, "scan_violations") != 0)
        c.fail("a disconnected covered class matched the connected maximum");
    std::ostringstream os;
    os << detail_of(r, "grid_checked") << " grid points in " << r.elapsed_ms << " ms";
    c.info(os.str());
    if (r.elapsed_ms >= 1000) c.fail("closed-form sweep exceeded one second");
    return c;
}

Criterion criterion8(int jobs) {
    Criterion c{8, "induction-step chain on all edge-critical triangle-covered classes, N=7..8"};
    VerifyReport r = verify_induction_step(3, 4, 7, 8, jobs);
    if (!r.pass) c.fail("the |A|/|B|/telescoping chain failed on some class");
    c.info(std::to_string(r.instances_scanned) + " classes audited at t = 4");
    return c;
}

Criterion criterion9() {
    Criterion c{9, "negative control: a mutated bound must flip verify-main to pass=false"};
    VerifyReport direct = verify_main(3, 3, 6, 1, /*bound_offset=*/1);
    if (direct.pass) c.fail("mutated bound still reported pass=true");

    std::string cfg = "acceptance_negative_control.json";
    std::string out = "acceptance_negative_control.jsonl";
    {
        std::ofstream f(cfg);
        f << "{\"runs\": [[\"verify-main\", \"--n\", \"3\", \"--t\", \"3\", \"--N\", \"6\", "
             "\"--bound-offset\", \"1\"]]}";
    }
    std::ostringstream sink, err;
    std::istringstream empty;
    int code = run({"batch", "--config", cfg, "--out", out}, sink, err, empty);
    if (code != 1) c.fail("batch with the mutated bound exited " + std::to_string(code));
    std::ifstream lines(out);
    std::string line;
    bool saw_false = false;
    while (std::getline(lines, line)) {
        auto j = nlohmann::json::parse(line, nullptr, false);
        if (!j.is_discarded() && j.contains("pass") && j["pass"] == false) saw_false = true;
    }
    if (!saw_false) c.fail("no pass=false line in the batch output");
    std::remove(cfg.c_str());
    std::remove(out.c_str());
    c.info("mutated C(N-n+2,t) bound rejected both directly and through batch");
    return c;
}

}  // namespace

int main() {
    int jobs = jobs_from_env();
    std::vector<Criterion> results;
    results.push_back(criterion1(jobs));
    results.push_back(criterion2(jobs));
    results.push_back(criterion3(jobs));
    results.push_back(criterion4(jobs));
    results.push_back(criterion5(jobs));
    results.push_back(criterion6(jobs));
    results.push_back(criterion7());
    results.push_back(criterion8(jobs));
    results.push_back(criterion9());

    int failed = 0;
    for (const Criterion& c : results) {
        std::cout << (c.pass ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": " << c.name
                  << "\n";
        for (const std::string& d : c.detail) std::cout << "       " << d << "\n";
        if (!c.pass) ++failed;
    }
    std::cout << (results.size() - static_cast<std::size_t>(failed)) << "/" << results.size()
              << " criteria passed\n";
    if (failed > 0)
        std::cout << "failing criteria assert claims of the source material that the suite "
                     "refutes with explicit counterexamples; see the per-criterion detail "
                     "lines above\n";
    return failed;
}
