#pragma once

#include <srg/exactlin.hpp>
#include <srg/graphs.hpp>
#include <srg/jsonio.hpp>
#include <srg/params.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace srg {

/// Affine rescale v -> alpha*v + beta*u applied to one distance layer so the
/// rescaled vectors are orthogonal to the base vertex u.
/// Invariants: beta = -alpha * w_layer and sq_norm = alpha^2 (1 - w_layer^2).
struct HatTransform {
    int layer = 1;  // 1 or 2 (graph distance from u)
    Rat alpha;
    Rat beta;
    Rat sq_norm;
};

/// Distance profile of a vertex pair relative to the base vertex.
enum class Relation {
    L1Same,
    L1Adjacent,
    L1NonAdjacent,
    L2Same,
    L2Adjacent,
    L2NonAdjacent,
    CrossAdjacent,
    CrossNonAdjacent,
};

/// Exact inner-product model for the hatted representation vectors of one
/// eigenspace: parameters, cosine sequence and both layer transforms.
struct InnerModel {
    SrgParams params;
    long theta = 0;
    CosineSequence cosines;
    HatTransform layer1;
    HatTransform layer2;
};

/// Builds the model for an integral eigenvalue. The layer-1 scale alpha1 is
/// the positive rational square root of layer1_sq_norm / (1 - w1^2)
/// (NonSquareScale when irrational); the layer-2 scale is alpha2 = 2/(1-w2).
/// Throws DegenerateCosine when a cosine is +-1.
InnerModel build_inner_model(const SrgParams& p, long theta, const Rat& layer1_sq_norm);

/// Exact bilinear expansion a a'(v,w) + a b'(v,u) + b a'(u,w) + b b' with the
/// raw inner products read off the cosine sequence.
Rat hat_inner(const InnerModel& m, Relation rel);

/// (hat v, w) for v in the first layer and a raw second-layer vertex w.
Rat half_hat_inner(const InnerModel& m, bool adjacent);

/// Solves s*A + (t-s)*B = 0 for the number s of marked vertices on a t-cycle,
/// where A and B are the half-hat inner products of marked resp. unmarked
/// vertices. Returns s when a nonnegative integer solution <= t exists;
/// nullopt is itself a structural infeasibility certificate for that t.
std::optional<long> lemma_three(const InnerModel& m, long t);

/// Largest number of size-2 components permitted by the projection budget:
/// max k with 2k + (mu-2k)/2 <= ||hat w||^2 (and 2k <= mu). May be negative
/// when even k = 0 exceeds the budget.
long component_size_bound(const InnerModel& m);

/// Cycle Gram matrix built from the model's layer-1 inner products
/// (equals gram_cycle(t) whenever the layer-1 table is {2, -1, 0}).
RatMatrix model_cycle_gram(const InnerModel& m, std::size_t t);

/// Certified value of one marked arrangement.
struct ProjectionCertificate {
    std::size_t t = 0;
    MarkedCycle marks;
    bool forced_pair = false;
    Rat value;  // (p,p)
    bool optimal = false;
    RatVector coefficients;  // expression of p in the hatted cycle vectors
};

/// Exact (p,p) for the projection of a hatted second-layer vertex onto a
/// marked cycle's span. Throws InconsistentSystem when the mark count breaks
/// the kernel condition (an impossible arrangement).
ProjectionCertificate arrangement_projection(const InnerModel& m, const MarkedCycle& mc,
                                             bool forced_pair = false);

struct MinProjection {
    Rat min_value;
    std::vector<ProjectionCertificate> argmin;  // canonical representatives
    std::size_t arrangement_classes = 0;        // up to rotation/reflection
};

/// Exhaustive minimization of (p,p) over all arrangements of s marks on a
/// 3s-cycle, up to rotation and reflection. With forced_pair, only
/// arrangements with exactly one adjacent marked pair (all other marked
/// components singletons) are admissible.
MinProjection min_projection(const InnerModel& m, long s, bool forced_pair);

/// Exact minimum of (hat w, hat w') over the admissible adjacency patterns of
/// w' against the forced-pair decomposition of hat w with s marks on its
/// cycle; -1 at the (76,21,2,7) tables, independent of s.
Rat lemma_cliques_bound(const InnerModel& m, long s);

struct CliqueDimensions {
    long dim_span;        // 1 + (k/3)*2
    long dim_complement;  // mult(theta) - dim_span
};

/// Dimension split once the neighborhood is a union of triangles.
/// Throws NotDivisible when 3 does not divide k.
CliqueDimensions post_clique_dimensions(long k, long theta_multiplicity);
CliqueDimensions post_clique_dimensions(const InnerModel& m);

enum class CircRelation { Same, Adjacent, NonAdjacent };

/// Inner products of the normalized complement-space projections: 2 on the
/// diagonal, -1 for adjacent pairs, 3 - beta for non-adjacent pairs with beta
/// common neighbors in the first layer. Throws BetaOutOfRange for beta
/// outside 0..mu on the non-adjacent relation.
Rat circ_inner(const InnerModel& m, CircRelation rel, long beta = 0);

/// Integers beta whose non-adjacent inner product respects |value| <= 2.
std::pair<long, long> circ_beta_range(const InnerModel& m);

/// ceil(population / buckets): the guaranteed maximum bucket load.
long pigeonhole_pairs(long population, long buckets);

struct OppositeRootCase {
    long overlap;        // guaranteed |A cap B| for two 5-subsets of a 7-set
    long required_max;   // the common-neighbor count it must not exceed
    bool contradiction;  // overlap > required_max
};

/// Two 5-element subsets of a 7-element set share >= 3 elements, against the
/// single common neighbor allowed for same-root pairs.
OppositeRootCase opposite_root_case();

/// max(0, a + b - universe): minimum intersection of subset sizes a and b.
long min_common_elements(long a, long b, long universe);

struct CodeSearchConfig {
    unsigned long long node_budget = 100'000'000ULL;
    std::vector<int> letter_order;  // optional exploration order of letters
};

struct CodeSearchResult {
    bool feasible = false;
    std::vector<std::vector<int>> witness;  // set when feasible
    unsigned long long nodes = 0;           // search tree size (completion certificate)
};

/// Exhaustive search for n_words distinct words of the given length over a
/// q-letter alphabet whose pairs agree in exactly `agreement` positions.
/// Symmetry reduction: word 1 pinned to all-zeros, later words strictly
/// increasing lexicographically, pruning on running agreement counts.
/// Throws ResourceLimit past the node budget.
CodeSearchResult agreement_code_search(int n_words, int length, int alphabet, int agreement,
                                       const CodeSearchConfig& cfg = {});

/// Independent witness checker: pairwise distinct with exact agreements.
bool check_agreement_code(const std::vector<std::vector<int>>& words, int agreement);

enum class StageVerdict { Verified, ContradictionReached, Failed };

std::string verdict_string(StageVerdict v);

struct ReplayStage {
    std::string name;
    StageVerdict verdict;
    Json certificate;
};

/// Chained lemma verdicts with certificates; NONEXISTENT only when every
/// stage is VERIFIED or CONTRADICTION-REACHED.
struct ReplayReport {
    std::vector<ReplayStage> stages;
    bool nonexistent = false;

    std::string final_verdict() const { return nonexistent ? "NONEXISTENT" : "INCONCLUSIVE"; }
    const ReplayStage* find_stage(const std::string& name) const;
    Json to_json() const;
    std::string to_text() const;
};

struct ReplayOptions {
    int code_alphabet = 3;  // letters per triangle in the endgame search
    unsigned long long node_budget = 100'000'000ULL;
};

/// Replays the whole non-existence argument for (76,21,2,7), one certified
/// stage per lemma.
ReplayReport replay_all(const ReplayOptions& opts = {});

/// The fixed stage list, in replay order.
const std::vector<std::string>& replay_stage_names();

}  // namespace srg
