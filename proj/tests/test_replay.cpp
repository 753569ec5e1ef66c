#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <srg/errors.hpp>
#include <srg/replay.hpp>

#include <algorithm>
#include <random>

using namespace srg;

namespace {

InnerModel model76() {
    return build_inner_model(validate_params(76, 21, 2, 7), -7, Rat(2));
}

}  // namespace

TEST_CASE("inner model at (76,21,2,7)") {
    const InnerModel m = model76();
    CHECK(m.layer1.alpha == rat(3, 2));
    CHECK(m.layer1.beta == rat(1, 2));
    CHECK(m.layer1.sq_norm == 2);
    CHECK(m.layer2.alpha == rat(9, 4));
    CHECK(m.layer2.beta == rat(-1, 4));
    CHECK(m.layer2.sq_norm == 5);

    // orthogonality to the base vertex holds by construction on both layers
    CHECK(m.layer1.beta == -m.layer1.alpha * m.cosines.w1);
    CHECK(m.layer2.beta == -m.layer2.alpha * m.cosines.w2);
    CHECK(m.layer1.sq_norm == m.layer1.alpha * m.layer1.alpha * (1 - m.cosines.w1 * m.cosines.w1));
    CHECK(m.layer2.sq_norm == m.layer2.alpha * m.layer2.alpha * (1 - m.cosines.w2 * m.cosines.w2));
}

TEST_CASE("inner model on other parameters") {
    // rook 3x3 with theta = -2: w = (1, -1/2, 1/4); norm 3 gives alpha1 = 2
    const SrgParams rook = validate_params(9, 4, 1, 2);
    const InnerModel m = build_inner_model(rook, -2, Rat(3));
    CHECK(m.cosines.w1 == rat(-1, 2));
    CHECK(m.cosines.w2 == rat(1, 4));
    CHECK(m.layer1.alpha == 2);
    CHECK(m.layer1.beta == 1);
    CHECK(m.layer1.beta == -m.layer1.alpha * m.cosines.w1);
    CHECK(m.layer2.beta == -m.layer2.alpha * m.cosines.w2);

    // norm 2 would need an irrational scale here
    CHECK_THROWS_AS(build_inner_model(rook, -2, Rat(2)), NonSquareScale);

    // K_{2,2} at theta = 0 has w2 = -1; no hat transform exists
    CHECK_THROWS_AS(build_inner_model(validate_params(4, 2, 0, 2), 0, Rat(2)),
                    DegenerateCosine);
}

TEST_CASE("the eight hatted inner products") {
    const InnerModel m = model76();
    CHECK(hat_inner(m, Relation::L1Same) == 2);
    CHECK(hat_inner(m, Relation::L1Adjacent) == -1);
    CHECK(hat_inner(m, Relation::L1NonAdjacent) == 0);
    CHECK(hat_inner(m, Relation::L2Same) == 5);
    CHECK(hat_inner(m, Relation::L2Adjacent) == rat(-7, 4));
    CHECK(hat_inner(m, Relation::L2NonAdjacent) == rat(1, 2));
    CHECK(hat_inner(m, Relation::CrossAdjacent) == -1);
    CHECK(hat_inner(m, Relation::CrossNonAdjacent) == rat(1, 2));
}

TEST_CASE("half-hat inner products") {
    const InnerModel m = model76();
    CHECK(half_hat_inner(m, true) == rat(-4, 9));
    CHECK(half_hat_inner(m, false) == rat(2, 9));
}

TEST_CASE("cycle lengths are multiples of three") {
    const InnerModel m = model76();
    CHECK(lemma_three(m, 3) == 1);
    CHECK(lemma_three(m, 6) == 2);
    CHECK(lemma_three(m, 9) == 3);
    CHECK(lemma_three(m, 12) == 4);
    CHECK(lemma_three(m, 15) == 5);
    CHECK(!lemma_three(m, 7));   // s = 7/3
    CHECK(!lemma_three(m, 11));
    CHECK_THROWS_AS(lemma_three(m, 2), Error);
}

TEST_CASE("mark-count equation on other parameters") {
    // rook 3x3, theta = -2: half-hat values -3/4 and 3/4 give s = t/2
    const InnerModel m = build_inner_model(validate_params(9, 4, 1, 2), -2, Rat(3));
    CHECK(half_hat_inner(m, true) == rat(-3, 4));
    CHECK(half_hat_inner(m, false) == rat(3, 4));
    CHECK(lemma_three(m, 4) == 2);
    CHECK(lemma_three(m, 6) == 3);
    CHECK(!lemma_three(m, 3));
    CHECK(!lemma_three(m, 5));
}

TEST_CASE("component size bound") {
    InnerModel m = model76();
    CHECK(component_size_bound(m) == 1);

    // synthetic budgets: equality at k = 0, and a looser norm
    m.layer2.sq_norm = rat(7, 2);
    CHECK(component_size_bound(m) == 0);
    m.layer2.sq_norm = rat(11, 2);
    CHECK(component_size_bound(m) == 2);
}

TEST_CASE("model cycle gram equals the normalized cycle gram") {
    const InnerModel m = model76();
    for (std::size_t t = 3; t <= 9; ++t) CHECK(model_cycle_gram(m, t) == gram_cycle(t));
}

TEST_CASE("arrangement projections: worked values") {
    const InnerModel m = model76();
    CHECK(arrangement_projection(m, MarkedCycle{3, {0}}).value == rat(1, 2));
    CHECK(arrangement_projection(m, MarkedCycle{6, {0, 3}}).value == 1);
    CHECK(arrangement_projection(m, MarkedCycle{6, {0, 2}}).value == rat(11, 8));
    CHECK(arrangement_projection(m, MarkedCycle{6, {0, 1}}, true).value == rat(5, 2));

    // a mark count excluded by the kernel condition is inconsistent
    CHECK_THROWS_AS(arrangement_projection(m, MarkedCycle{6, {0}}), InconsistentSystem);
}

TEST_CASE("certificate coefficients reproduce the projection") {
    const InnerModel m = model76();
    for (const MarkedCycle& mc :
         {MarkedCycle{6, {0, 3}}, MarkedCycle{6, {0, 2}}, MarkedCycle{9, {0, 1, 5}},
          MarkedCycle{12, {0, 3, 6, 9}}}) {
        const ProjectionCertificate cert = arrangement_projection(m, mc);
        RatVector b(mc.t);
        for (std::size_t i = 0; i < mc.t; ++i) b[i] = rat(1, 2);
        for (const auto p : mc.marks) b[p] = Rat(-1);
        CHECK(mat_vec(gram_cycle(mc.t), cert.coefficients) == b);
        CHECK(dot(b, cert.coefficients) == cert.value);
        CHECK(projection_sq_norm(gram_cycle(mc.t), b) == cert.value);
    }
}

TEST_CASE("optimal coefficients match the closed forms") {
    const InnerModel m = model76();

    // evenly spaced: p = -1/2 * sum of the marked hatted vectors
    const ProjectionCertificate even = arrangement_projection(m, MarkedCycle{9, {0, 3, 6}});
    for (std::size_t i = 0; i < 9; ++i)
        CHECK(even.coefficients[i] == (i % 3 == 0 ? rat(-1, 2) : Rat(0)));

    // forced pair with gaps of two: minus-pair then half-pairs
    const ProjectionCertificate forced =
        arrangement_projection(m, MarkedCycle{9, {0, 1, 5}}, true);
    const RatVector expected{Rat(-1), Rat(-1), Rat(0),    rat(1, 2), rat(1, 2),
                             Rat(0),  rat(1, 2), rat(1, 2), Rat(0)};
    CHECK(forced.coefficients == expected);
}

TEST_CASE("projection minima: free arrangements") {
    const InnerModel m = model76();
    const std::size_t expected_classes[] = {0, 1, 3, 7, 29, 111};
    for (long s = 1; s <= 5; ++s) {
        const MinProjection mp = min_projection(m, s, false);
        CHECK(mp.min_value == rat(s, 2));
        REQUIRE(mp.argmin.size() == 1);
        CHECK(mp.argmin[0].optimal);
        std::vector<std::size_t> evenly;
        for (long i = 0; i < s; ++i) evenly.push_back(std::size_t(3 * i));
        CHECK(mp.argmin[0].marks.marks == evenly);
        CHECK(mp.arrangement_classes == expected_classes[s]);
    }
}

TEST_CASE("projection minima: forced adjacent pair") {
    const InnerModel m = model76();
    const std::size_t expected_classes[] = {0, 0, 1, 3, 12, 44};
    for (long s = 2; s <= 5; ++s) {
        const MinProjection mp = min_projection(m, s, true);
        CHECK(mp.min_value == rat(s + 3, 2));
        REQUIRE(mp.argmin.size() == 1);
        std::vector<std::size_t> gaps{0, 1};
        for (long j = 1; j <= s - 2; ++j) gaps.push_back(std::size_t(3 * j + 2));
        CHECK(mp.argmin[0].marks.marks == gaps);
        CHECK(mp.arrangement_classes == expected_classes[s]);
    }
    CHECK_THROWS_AS(min_projection(m, 1, true), Error);
}

TEST_CASE("clique-forcing bound") {
    const InnerModel m = model76();
    for (long s = 2; s <= 5; ++s) {
        CHECK(lemma_cliques_bound(m, s) == -1);
        CHECK(lemma_cliques_bound(m, s) > hat_inner(m, Relation::L2Adjacent));
    }
    CHECK(Rat(-1) - hat_inner(m, Relation::L2Adjacent) == rat(3, 4));
}

TEST_CASE("clique-forcing bound matches a full pattern enumeration") {
    const InnerModel m = model76();
    const Rat ca = hat_inner(m, Relation::CrossAdjacent);
    const Rat cn = hat_inner(m, Relation::CrossNonAdjacent);
    const Rat coef = ca / hat_inner(m, Relation::L1Same);
    for (long s = 2; s <= 5; ++s) {
        const long halves = s - 1, outside = m.params.mu - s;
        Rat best;
        bool first = true;
        for (long hmask = 0; hmask < (1 << halves); ++hmask) {
            for (long omask = 0; omask < (1 << outside); ++omask) {
                Rat total = -(ca + cn);  // minus-pair, one endpoint adjacent
                for (long h = 0; h < halves; ++h)
                    total += (hmask >> h) & 1 ? (ca + cn) / 2 : cn;
                for (long o = 0; o < outside; ++o)
                    total += (omask >> o) & 1 ? coef * ca : coef * cn;
                if (first || total < best) {
                    best = total;
                    first = false;
                }
            }
        }
        CHECK(best == lemma_cliques_bound(m, s));
    }
}

TEST_CASE("dimensions after the clique step") {
    const CliqueDimensions dims = post_clique_dimensions(model76());
    CHECK(dims.dim_span == 15);
    CHECK(dims.dim_complement == 4);

    const CliqueDimensions formula = post_clique_dimensions(12, 11);
    CHECK(formula.dim_span == 9);
    CHECK(formula.dim_complement == 2);

    CHECK_THROWS_AS(post_clique_dimensions(10, 9), NotDivisible);
}

TEST_CASE("complement-space inner products") {
    const InnerModel m = model76();
    CHECK(circ_inner(m, CircRelation::Same) == 2);
    CHECK(circ_inner(m, CircRelation::Adjacent) == -1);
    CHECK(circ_inner(m, CircRelation::NonAdjacent, 2) == 1);
    for (long beta = 1; beta <= 5; ++beta)
        CHECK(circ_inner(m, CircRelation::NonAdjacent, beta) == Rat(3 - beta));
    CHECK(circ_beta_range(m) == std::pair<long, long>{1, 5});
    CHECK_THROWS_AS(circ_inner(m, CircRelation::NonAdjacent, 8), BetaOutOfRange);
    CHECK_THROWS_AS(circ_inner(m, CircRelation::NonAdjacent, -1), BetaOutOfRange);
}

TEST_CASE("pigeonhole") {
    CHECK(pigeonhole_pairs(54, 12) == 5);
    CHECK(pigeonhole_pairs(12, 12) == 1);
    CHECK(pigeonhole_pairs(25, 12) == 3);
    CHECK_THROWS_AS(pigeonhole_pairs(0, 12), Error);
}

TEST_CASE("opposite root case") {
    CHECK(min_common_elements(5, 5, 7) == 3);
    CHECK(min_common_elements(4, 4, 7) == 1);
    CHECK(min_common_elements(3, 3, 7) == 0);
    const OppositeRootCase oc = opposite_root_case();
    CHECK(oc.overlap == 3);
    CHECK(oc.contradiction);
}

TEST_CASE("agreement code search: feasible instances") {
    const CodeSearchResult two = agreement_code_search(2, 7, 3, 1);
    REQUIRE(two.feasible);
    REQUIRE(two.witness.size() == 2);
    CHECK(two.witness[0] == std::vector<int>{0, 0, 0, 0, 0, 0, 0});
    CHECK(two.witness[1] == std::vector<int>{0, 1, 1, 1, 1, 1, 1});
    CHECK(check_agreement_code(two.witness, 1));

    const CodeSearchResult one = agreement_code_search(1, 7, 3, 1);
    CHECK(one.feasible);
    CHECK(one.witness == std::vector<std::vector<int>>{{0, 0, 0, 0, 0, 0, 0}});

    // a larger alphabet admits five words
    const CodeSearchResult five4 = agreement_code_search(5, 7, 4, 1);
    CHECK(five4.feasible);
    CHECK(check_agreement_code(five4.witness, 1));
}

TEST_CASE("agreement code search: the endgame instance is infeasible") {
    const CodeSearchResult res = agreement_code_search(5, 7, 3, 1);
    CHECK(!res.feasible);
    CHECK(res.nodes > 0);

    // three words are possible; already four are not
    const CodeSearchResult three = agreement_code_search(3, 7, 3, 1);
    CHECK(three.feasible);
    CHECK(check_agreement_code(three.witness, 1));
    CHECK(!agreement_code_search(4, 7, 3, 1).feasible);
}

TEST_CASE("agreement code search: exploration order does not change verdicts") {
    for (const std::vector<int>& order :
         {std::vector<int>{2, 1, 0}, std::vector<int>{1, 2, 0}, std::vector<int>{2, 0, 1}}) {
        CodeSearchConfig cfg;
        cfg.letter_order = order;
        CHECK(!agreement_code_search(5, 7, 3, 1, cfg).feasible);
        const CodeSearchResult two = agreement_code_search(2, 7, 3, 1, cfg);
        CHECK(two.feasible);
        CHECK(check_agreement_code(two.witness, 1));
    }
    CodeSearchConfig bad;
    bad.letter_order = {0, 0, 1};
    CHECK_THROWS_AS(agreement_code_search(2, 7, 3, 1, bad), Error);
}

TEST_CASE("agreement code search: node budget") {
    CodeSearchConfig cfg;
    cfg.node_budget = 10;
    CHECK_THROWS_AS(agreement_code_search(5, 7, 3, 1, cfg), ResourceLimit);
}

TEST_CASE("witness checker is invariant under instance symmetries") {
    const CodeSearchResult res = agreement_code_search(5, 7, 4, 1);
    REQUIRE(res.feasible);
    std::mt19937 rng(2025);
    for (int trial = 0; trial < 20; ++trial) {
        // permute positions and relabel letters per position
        std::vector<int> pos(7);
        std::iota(pos.begin(), pos.end(), 0);
        std::shuffle(pos.begin(), pos.end(), rng);
        std::vector<std::vector<int>> relabel(7, std::vector<int>(4));
        for (auto& r : relabel) {
            std::iota(r.begin(), r.end(), 0);
            std::shuffle(r.begin(), r.end(), rng);
        }
        std::vector<std::vector<int>> mapped = res.witness;
        for (auto& word : mapped) {
            std::vector<int> next(7);
            for (int i = 0; i < 7; ++i) next[i] = relabel[pos[i]][word[pos[i]]];
            word = next;
        }
        CHECK(check_agreement_code(mapped, 1));
    }

    // tampering breaks it
    auto broken = res.witness;
    broken[1] = broken[0];
    CHECK(!check_agreement_code(broken, 1));
}

TEST_CASE("full replay reaches NONEXISTENT") {
    const ReplayReport rep = replay_all();
    CHECK(rep.nonexistent);
    CHECK(rep.final_verdict() == "NONEXISTENT");
    REQUIRE(rep.stages.size() == replay_stage_names().size());
    for (std::size_t i = 0; i < rep.stages.size(); ++i) {
        CHECK(rep.stages[i].name == replay_stage_names()[i]);
        CHECK(rep.stages[i].verdict != StageVerdict::Failed);
    }
    CHECK(rep.find_stage("agreement-code-search")->verdict ==
          StageVerdict::ContradictionReached);
    CHECK(rep.find_stage("spectrum")->verdict == StageVerdict::Verified);
}

TEST_CASE("replay report is byte-identical across runs") {
    const std::string a = replay_all().to_json().dump(2);
    const std::string b = replay_all().to_json().dump(2);
    CHECK(a == b);
    CHECK(a.find("\"schema_version\": \"1\"") != std::string::npos);
    CHECK(a.find("NONEXISTENT") != std::string::npos);
}

TEST_CASE("a wrong endgame instance cannot certify") {
    ReplayOptions opts;
    opts.code_alphabet = 4;  // admits a feasible witness, so the stage fails
    const ReplayReport rep = replay_all(opts);
    CHECK(!rep.nonexistent);
    CHECK(rep.final_verdict() == "INCONCLUSIVE");
    const ReplayStage* last = rep.find_stage("agreement-code-search");
    REQUIRE(last);
    CHECK(last->verdict == StageVerdict::Failed);
    CHECK(last->certificate.contains("witness"));
}
