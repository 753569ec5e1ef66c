// Acceptance suite: one pass/fail line per criterion, exact values throughout.

#include <srg/errors.hpp>
#include <srg/exactlin.hpp>
#include <srg/graphs.hpp>
#include <srg/params.hpp>
#include <srg/replay.hpp>
#include <srg/roots.hpp>

#include "fixtures.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

using namespace srg;

namespace {

int failures = 0;

void run(int number, const std::string& name, double limit_ms,
         const std::function<bool()>& body) {
    using clock = std::chrono::steady_clock;
    bool ok = false;
    std::string error;
    const auto start = clock::now();
    try {
        ok = body();
    } catch (const std::exception& e) {
        error = e.what();
    }
    const double ms =
        std::chrono::duration_cast<std::chrono::microseconds>(clock::now() - start).count() /
        1000.0;
    const bool in_time = ms <= limit_ms;
    if (!in_time) ok = false;
    if (!ok) ++failures;
    std::printf("[%s] %2d. %s (%.2f ms, limit %.0f ms)%s%s\n", ok ? "PASS" : "FAIL", number,
                name.c_str(), ms, limit_ms, error.empty() ? "" : " error: ", error.c_str());
}

bool criterion_spectrum() {
    const SrgParams p = validate_params(76, 21, 2, 7);
    const Spectrum sp = spectrum(p);
    const CosineSequence cs = cosine_sequence(p, -7);
    return sp.integral && sp.theta_plus == 2 && sp.theta_minus == -7 && sp.mult_k == 1 &&
           sp.mult_plus == 56 && sp.mult_minus == 19 && cs.w0 == 1 && cs.w1 == rat(-1, 3) &&
           cs.w2 == rat(1, 9);
}

bool criterion_determinants() {
    for (std::size_t r = 1; r <= 50; ++r)
        if (det(gram_path(r)) != Rat(long(r) + 1)) return false;
    for (std::size_t t = 3; t <= 20; ++t)
        if (rank(gram_cycle(t)) != t - 1) return false;
    return true;
}

bool criterion_tables() {
    const InnerModel m = build_inner_model(validate_params(76, 21, 2, 7), -7, Rat(2));
    return hat_inner(m, Relation::L1Same) == 2 && hat_inner(m, Relation::L1Adjacent) == -1 &&
           hat_inner(m, Relation::L1NonAdjacent) == 0 && hat_inner(m, Relation::L2Same) == 5 &&
           hat_inner(m, Relation::L2Adjacent) == rat(-7, 4) &&
           hat_inner(m, Relation::L2NonAdjacent) == rat(1, 2) &&
           hat_inner(m, Relation::CrossAdjacent) == -1 &&
           hat_inner(m, Relation::CrossNonAdjacent) == rat(1, 2);
}

bool criterion_projection_minima() {
    const InnerModel m = build_inner_model(validate_params(76, 21, 2, 7), -7, Rat(2));
    for (long s = 1; s <= 5; ++s) {
        const MinProjection mp = min_projection(m, s, false);
        if (mp.min_value != rat(s, 2) || mp.argmin.size() != 1) return false;
        std::vector<std::size_t> evenly;
        for (long i = 0; i < s; ++i) evenly.push_back(std::size_t(3 * i));
        if (mp.argmin[0].marks.marks != evenly) return false;
    }
    for (long s = 2; s <= 5; ++s) {
        const MinProjection mp = min_projection(m, s, true);
        if (mp.min_value != rat(s + 3, 2) || mp.argmin.size() != 1) return false;
        std::vector<std::size_t> gaps{0, 1};
        for (long j = 1; j <= s - 2; ++j) gaps.push_back(std::size_t(3 * j + 2));
        if (mp.argmin[0].marks.marks != gaps) return false;
    }
    return true;
}

bool criterion_clique_gap() {
    const InnerModel m = build_inner_model(validate_params(76, 21, 2, 7), -7, Rat(2));
    const Rat required = hat_inner(m, Relation::L2Adjacent);
    if (required != rat(-7, 4)) return false;
    for (long s = 2; s <= 5; ++s) {
        const Rat bound = lemma_cliques_bound(m, s);
        if (bound != -1 || !(bound > required)) return false;
    }
    return Rat(-1) - required == rat(3, 4);
}

bool criterion_roots() {
    const LatticeGram d4{4, simple_root_gram_d(4)};
    const RootSet rs = short_vectors(d4, Rat(2));
    if (rs.roots.size() != 24) return false;
    const RootClassification cls = classify(rs, d4);
    return cls.components.size() == 1 && cls.components[0].type == AdeType::D &&
           cls.components[0].rank == 4 && cls.components[0].root_count == 24 &&
           max_roots(4) == 24;
}

bool criterion_code_search() {
    const CodeSearchResult hard = agreement_code_search(5, 7, 3, 1);
    if (hard.feasible) return false;
    const CodeSearchResult easy = agreement_code_search(2, 7, 3, 1);
    return easy.feasible && check_agreement_code(easy.witness, 1);
}

bool criterion_replay() {
    const ReplayReport rep = replay_all();
    if (!rep.nonexistent || rep.final_verdict() != "NONEXISTENT") return false;
    if (rep.stages.size() != replay_stage_names().size()) return false;
    for (const auto& st : rep.stages)
        if (st.verdict == StageVerdict::Failed) return false;
    return rep.to_json().dump() == replay_all().to_json().dump();
}

bool criterion_representations() {
    const Graph pet = fixtures::petersen();
    const Spectrum pet_sp = spectrum(verify_srg(pet));
    for (long theta : {pet_sp.theta_plus, pet_sp.theta_minus}) {
        const PsdResult r = psd_rank(representation_gram(pet, theta));
        const long expected = theta == pet_sp.theta_plus ? pet_sp.mult_plus : pet_sp.mult_minus;
        if (!r.is_psd || r.rank != std::size_t(expected)) return false;
    }
    const Graph r3 = fixtures::rook(3);
    const Spectrum r3_sp = spectrum(verify_srg(r3));
    for (long theta : {r3_sp.theta_plus, r3_sp.theta_minus}) {
        const PsdResult r = psd_rank(representation_gram(r3, theta));
        const long expected = theta == r3_sp.theta_plus ? r3_sp.mult_plus : r3_sp.mult_minus;
        if (!r.is_psd || r.rank != std::size_t(expected)) return false;
    }
    const Graph pal = fixtures::paley(13);
    const NeighborhoodDecomposition dec = neighborhood_cycles(pal, 0);
    if (dec.cycles.size() != 1 || dec.cycles[0].size() != 6) return false;
    for (std::size_t w = 1; w < 13; ++w) {
        if (pal.adjacent(0, w)) continue;
        std::size_t total = 0;
        for (const auto& mc : mu_marks(pal, 0, w)) total += mc.marks.size();
        if (total != 3) return false;
    }
    return true;
}

bool criterion_graph6() {
    if (parse_graph6("@").size() != 1) return false;
    if (parse_graph6("A_") != parse_adjacency_json(R"({"n":2,"edges":[[0,1]]})")) return false;
    if (write_graph6(parse_graph6("Bw")) != "Bw") return false;
    std::mt19937 rng(20250810);
    std::uniform_int_distribution<std::size_t> size_dist(0, 30);
    std::bernoulli_distribution coin(0.5);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = size_dist(rng);
        Graph g(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (coin(rng)) g.add_edge(i, j);
        if (parse_graph6(write_graph6(g)) != g) return false;
    }
    return true;
}

}  // namespace

int main() {
    run(1, "spectrum, multiplicities and cosine sequence of (76,21,2,7)", 1.0,
        criterion_spectrum);
    run(2, "determinant law det(path) = r+1 and rank(cycle) = t-1", 1000.0,
        criterion_determinants);
    run(3, "hatted inner-product tables {2,-1,0}, {5,-7/4,1/2}, {-1,1/2}", 1.0,
        criterion_tables);
    run(4, "projection minima s/2 and (s+3)/2 with unique minimizers", 10000.0,
        criterion_projection_minima);
    run(5, "clique-forcing bound -1 vs required -7/4 (gap 3/4)", 1000.0, criterion_clique_gap);
    run(6, "D4 has 24 roots and is the rank-4 maximum", 1000.0, criterion_roots);
    run(7, "agreement codes: (5,7,3,1) infeasible, (2,7,3,1) feasible", 60000.0,
        criterion_code_search);
    run(8, "full replay reaches NONEXISTENT deterministically", 120000.0, criterion_replay);
    run(9, "representation ranks on Petersen and rook graphs; Paley(13) local data", 1000.0,
        criterion_representations);
    run(10, "graph6 round-trip on fixtures and 500 random graphs", 1000.0, criterion_graph6);

    if (failures == 0)
        std::printf("acceptance: all 10 criteria passed\n");
    else
        std::printf("acceptance: %d criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
