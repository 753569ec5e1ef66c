#include <srg/replay.hpp>

#include <srg/errors.hpp>
#include <srg/roots.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace srg {

InnerModel build_inner_model(const SrgParams& p, long theta, const Rat& layer1_sq_norm) {
    InnerModel m;
    m.params = p;
    m.theta = theta;
    m.cosines = cosine_sequence(p, theta);
    const Rat& w1 = m.cosines.w1;
    const Rat& w2 = m.cosines.w2;
    const Rat one_m_w1sq = 1 - w1 * w1;
    const Rat one_m_w2sq = 1 - w2 * w2;
    if (one_m_w1sq <= 0 || one_m_w2sq <= 0)
        throw DegenerateCosine("cosine of modulus >= 1; hat transform undefined");
    if (layer1_sq_norm <= 0) throw Error("build_inner_model: layer-1 norm must be positive");
    const auto alpha1 = rational_sqrt(layer1_sq_norm / one_m_w1sq);
    if (!alpha1)
        throw NonSquareScale("layer-1 scale sqrt(" + to_string(layer1_sq_norm / one_m_w1sq) +
                             ") is irrational; choose a layer-1 norm making it a rational square");
    m.layer1 = HatTransform{1, *alpha1, -*alpha1 * w1, layer1_sq_norm};
    const Rat alpha2 = Rat(2) / (1 - w2);
    m.layer2 = HatTransform{2, alpha2, -alpha2 * w2, alpha2 * alpha2 * one_m_w2sq};
    return m;
}

Rat hat_inner(const InnerModel& m, Relation rel) {
    const Rat& w1 = m.cosines.w1;
    const Rat& w2 = m.cosines.w2;
    int layer_a = 1, layer_b = 1;
    Rat raw;
    switch (rel) {
        case Relation::L1Same: raw = 1; break;
        case Relation::L1Adjacent: raw = w1; break;
        case Relation::L1NonAdjacent: raw = w2; break;
        case Relation::L2Same: layer_a = layer_b = 2; raw = 1; break;
        case Relation::L2Adjacent: layer_a = layer_b = 2; raw = w1; break;
        case Relation::L2NonAdjacent: layer_a = layer_b = 2; raw = w2; break;
        case Relation::CrossAdjacent: layer_b = 2; raw = w1; break;
        case Relation::CrossNonAdjacent: layer_b = 2; raw = w2; break;
    }
    const HatTransform& ta = layer_a == 1 ? m.layer1 : m.layer2;
    const HatTransform& tb = layer_b == 1 ? m.layer1 : m.layer2;
    const Rat& wa = layer_a == 1 ? w1 : w2;  // (v,u)
    const Rat& wb = layer_b == 1 ? w1 : w2;  // (u,w)
    return ta.alpha * tb.alpha * raw + ta.alpha * tb.beta * wa + ta.beta * tb.alpha * wb +
           ta.beta * tb.beta;
}

Rat half_hat_inner(const InnerModel& m, bool adjacent) {
    const Rat& raw = adjacent ? m.cosines.w1 : m.cosines.w2;
    return m.layer1.alpha * raw + m.layer1.beta * m.cosines.w2;
}

std::optional<long> lemma_three(const InnerModel& m, long t) {
    if (t < 3) throw Error("lemma_three: t >= 3 required");
    const Rat marked = half_hat_inner(m, true);
    const Rat unmarked = half_hat_inner(m, false);
    if (marked == unmarked) return std::nullopt;  // no unique mark count
    const Rat s = Rat(t) * unmarked / (unmarked - marked);
    if (!is_integer(s) || s < 0 || s > t) return std::nullopt;
    return long(s.get_num().get_si());
}

long component_size_bound(const InnerModel& m) {
    // k size-2 components project to 2k, the mu-2k singletons to (mu-2k)/2
    const Rat budget = m.layer2.sq_norm - rat(m.params.mu, 2);
    Int k_budget = floor_int(budget);
    Int k_struct(m.params.mu / 2);
    return long((k_budget < k_struct ? k_budget : k_struct).get_si());
}

RatMatrix model_cycle_gram(const InnerModel& m, std::size_t t) {
    if (t < 3) throw Error("model_cycle_gram: t >= 3 required");
    const Rat same = hat_inner(m, Relation::L1Same);
    const Rat adj = hat_inner(m, Relation::L1Adjacent);
    const Rat non = hat_inner(m, Relation::L1NonAdjacent);
    RatMatrix g(t, t);
    for (std::size_t i = 0; i < t; ++i) {
        for (std::size_t j = 0; j < t; ++j) {
            const std::size_t d = std::min((i - j + t) % t, (j - i + t) % t);
            g(i, j) = d == 0 ? same : d == 1 ? adj : non;
        }
    }
    return g;
}

ProjectionCertificate arrangement_projection(const InnerModel& m, const MarkedCycle& mc,
                                             bool forced_pair) {
    const std::size_t t = mc.t;
    if (t < 3) throw Error("arrangement_projection: cycle length >= 3 required");
    std::vector<bool> marked(t, false);
    for (const std::size_t p : mc.marks) {
        if (p >= t) throw Error("arrangement_projection: mark position out of range");
        if (marked[p]) throw Error("arrangement_projection: duplicate mark");
        marked[p] = true;
    }
    const Rat b_marked = hat_inner(m, Relation::CrossAdjacent);
    const Rat b_unmarked = hat_inner(m, Relation::CrossNonAdjacent);
    RatVector b(t);
    for (std::size_t i = 0; i < t; ++i) b[i] = marked[i] ? b_marked : b_unmarked;
    const RatMatrix gram = model_cycle_gram(m, t);
    auto x = solve_consistent(gram, b);
    if (!x)
        throw InconsistentSystem(
            "arrangement_projection: mark count breaks the cycle kernel condition");

    // canonical representative: zero coefficient at the last unmarked
    // position, when the shift stays a solution (all-ones kernel)
    std::size_t anchor = t;
    for (std::size_t i = t; i-- > 0;)
        if (!marked[i]) {
            anchor = i;
            break;
        }
    if (anchor < t && (*x)[anchor] != 0) {
        RatVector shifted = *x;
        const Rat c = shifted[anchor];
        for (auto& xi : shifted) xi -= c;
        if (mat_vec(gram, shifted) == b) x = shifted;
    }

    ProjectionCertificate cert;
    cert.t = t;
    cert.marks = mc;
    std::sort(cert.marks.marks.begin(), cert.marks.marks.end());
    cert.forced_pair = forced_pair;
    cert.value = dot(b, *x);
    cert.coefficients = *x;
    return cert;
}

namespace {

std::vector<std::size_t> canonical_marks(std::size_t t, std::vector<std::size_t> marks) {
    std::sort(marks.begin(), marks.end());
    std::vector<std::size_t> best, im(marks.size());
    for (int refl = 0; refl < 2; ++refl) {
        for (std::size_t rot = 0; rot < t; ++rot) {
            for (std::size_t i = 0; i < marks.size(); ++i) {
                const std::size_t p = refl ? (t - marks[i]) % t : marks[i];
                im[i] = (p + rot) % t;
            }
            std::sort(im.begin(), im.end());
            if (best.empty() || im < best) best = im;
        }
    }
    return best;
}

std::vector<std::size_t> mark_component_sizes(std::size_t t,
                                              const std::vector<std::size_t>& marks) {
    std::vector<bool> mk(t, false);
    for (const std::size_t p : marks) mk[p] = true;
    std::vector<std::size_t> sizes;
    for (std::size_t p = 0; p < t; ++p) {
        if (!mk[p] || mk[(p + t - 1) % t]) continue;
        std::size_t len = 0, q = p;
        while (mk[q] && len < t) {
            ++len;
            q = (q + 1) % t;
        }
        sizes.push_back(len);
    }
    if (sizes.empty() && marks.size() == t) sizes.push_back(t);
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

}  // namespace

MinProjection min_projection(const InnerModel& m, long s, bool forced_pair) {
    if (s < 1 || s > 5) throw Error("min_projection: 1 <= s <= 5 required");
    if (forced_pair && s < 2) throw Error("min_projection: a forced pair needs s >= 2");
    const std::size_t t = std::size_t(3 * s);
    const std::size_t ss = std::size_t(s);

    // expected component structure in forced-pair mode: one pair, rest singletons
    std::vector<std::size_t> forced_sizes(ss - 1, 1);
    if (forced_pair) forced_sizes.back() = 2;

    std::set<std::vector<std::size_t>> seen;
    MinProjection out;
    std::vector<std::size_t> idx(ss);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    while (true) {
        if (!forced_pair || mark_component_sizes(t, idx) == forced_sizes) {
            std::vector<std::size_t> canon = canonical_marks(t, idx);
            if (seen.insert(canon).second) {
                ProjectionCertificate cert =
                    arrangement_projection(m, MarkedCycle{t, canon}, forced_pair);
                if (out.argmin.empty() || cert.value < out.min_value) {
                    out.min_value = cert.value;
                    out.argmin.clear();
                    out.argmin.push_back(std::move(cert));
                } else if (cert.value == out.min_value) {
                    out.argmin.push_back(std::move(cert));
                }
            }
        }
        // next s-combination of {0..t-1}
        std::size_t i = ss;
        while (i-- > 0) {
            if (idx[i] != i + t - ss) {
                ++idx[i];
                for (std::size_t j = i + 1; j < ss; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) goto done;
        }
    }
done:
    out.arrangement_classes = seen.size();
    for (auto& cert : out.argmin) cert.optimal = true;
    return out;
}

Rat lemma_cliques_bound(const InnerModel& m, long s) {
    if (s < 2 || s > 5) throw Error("lemma_cliques_bound: 2 <= s <= 5 required");
    const Rat cross_adj = hat_inner(m, Relation::CrossAdjacent);
    const Rat cross_non = hat_inner(m, Relation::CrossNonAdjacent);
    const Rat l1_same = hat_inner(m, Relation::L1Same);
    // minus-pair: w' is adjacent to exactly one endpoint of the pair base
    const Rat minus_pair = -(cross_adj + cross_non);
    // half-pair: w' adjacent to at most one of the two endpoints
    const Rat half_one = (cross_adj + cross_non) / 2;
    const Rat half_min = std::min(half_one, cross_non);
    // marks on the other cycles appear in hat w with this coefficient
    const Rat coef = cross_adj / l1_same;
    const Rat out_min = std::min(coef * cross_adj, coef * cross_non);
    return minus_pair + Rat(s - 1) * half_min + Rat(m.params.mu - s) * out_min;
}

CliqueDimensions post_clique_dimensions(long k, long theta_multiplicity) {
    if (k % 3 != 0) throw NotDivisible("k = " + std::to_string(k) + " is not divisible by 3");
    const long dim_span = 1 + (k / 3) * 2;
    return {dim_span, theta_multiplicity - dim_span};
}

CliqueDimensions post_clique_dimensions(const InnerModel& m) {
    const Spectrum sp = spectrum(m.params);
    const long mult = m.theta == sp.theta_plus ? sp.mult_plus : sp.mult_minus;
    return post_clique_dimensions(m.params.k, mult);
}

namespace {

// coefficient of each marked hatted vector inside hat w once every cycle is
// a triangle with a single mark
Rat mark_coefficient(const InnerModel& m) {
    return hat_inner(m, Relation::CrossAdjacent) / hat_inner(m, Relation::L1Same);
}

Rat complement_sq_norm(const InnerModel& m) {
    const Rat proj = Rat(m.params.mu) * mark_coefficient(m) * hat_inner(m, Relation::CrossAdjacent);
    return hat_inner(m, Relation::L2Same) - proj;
}

void require_triangle_geometry(const InnerModel& m) {
    if (hat_inner(m, Relation::L1NonAdjacent) != 0)
        throw Error("complement table needs orthogonal distinct-cycle vectors (w2 = w1^2)");
    if (3 * m.params.mu != m.params.k)
        throw Error("complement table needs one mark per triangle (mu = k/3)");
}

}  // namespace

Rat circ_inner(const InnerModel& m, CircRelation rel, long beta) {
    require_triangle_geometry(m);
    const Rat tnorm = complement_sq_norm(m);
    if (tnorm <= 0) throw Error("circ_inner: complement projection has nonpositive norm");
    const Rat scale = Rat(2) / tnorm;  // normalizes diagonal entries to 2
    const Rat coef = mark_coefficient(m);
    const Rat cross_adj = hat_inner(m, Relation::CrossAdjacent);
    const Rat cross_non = hat_inner(m, Relation::CrossNonAdjacent);
    switch (rel) {
        case CircRelation::Same:
            return scale * tnorm;
        case CircRelation::Adjacent: {
            // the edge lies in a unique 4-clique: exactly one common mark
            const Rat pp = coef * cross_adj + Rat(m.params.mu - 1) * coef * cross_non;
            return scale * (hat_inner(m, Relation::L2Adjacent) - pp);
        }
        case CircRelation::NonAdjacent: {
            if (beta < 0 || beta > m.params.mu)
                throw BetaOutOfRange("beta = " + std::to_string(beta) +
                                     " outside 0..mu common neighbors");
            const Rat pp =
                Rat(beta) * coef * cross_adj + Rat(m.params.mu - beta) * coef * cross_non;
            return scale * (hat_inner(m, Relation::L2NonAdjacent) - pp);
        }
    }
    throw Error("unreachable");
}

std::pair<long, long> circ_beta_range(const InnerModel& m) {
    long lo = -1, hi = -1;
    for (long beta = 0; beta <= m.params.mu; ++beta) {
        const Rat value = circ_inner(m, CircRelation::NonAdjacent, beta);
        if (abs(value) <= 2) {
            if (lo == -1) lo = beta;
            hi = beta;
        }
    }
    if (lo == -1) throw Error("circ_beta_range: no admissible beta");
    return {lo, hi};
}

long pigeonhole_pairs(long population, long buckets) {
    if (population < 1 || buckets < 1) throw Error("pigeonhole_pairs: positive inputs required");
    return (population + buckets - 1) / buckets;
}

long min_common_elements(long a, long b, long universe) {
    return std::max(0L, a + b - universe);
}

OppositeRootCase opposite_root_case() {
    OppositeRootCase oc;
    oc.overlap = min_common_elements(5, 5, 7);
    oc.required_max = 1;
    oc.contradiction = oc.overlap > oc.required_max;
    return oc;
}

namespace {

struct CodeSearcher {
    int n_words, length, q, agreement;
    unsigned long long budget;
    std::vector<int> order;
    unsigned long long nodes = 0;
    std::vector<std::vector<int>> chosen;
    std::vector<std::vector<int>>* witness = nullptr;

    bool search_next() {
        if (int(chosen.size()) == n_words) {
            *witness = chosen;
            return true;
        }
        std::vector<int> cur(std::size_t(length), 0);
        std::vector<int> agree(chosen.size(), 0);
        return place(cur, 0, true, agree);
    }

    // cur[0..pos) fixed; tight = prefix equals the previous word so far
    bool place(std::vector<int>& cur, int pos, bool tight, std::vector<int>& agree) {
        if (pos == length) {
            if (tight) return false;  // equal to the previous word
            for (const int a : agree)
                if (a != agreement) return false;
            chosen.push_back(cur);
            if (search_next()) return true;
            chosen.pop_back();
            return false;
        }
        const std::vector<int>& prev = chosen.back();
        const int remaining = length - pos - 1;
        for (const int letter : order) {
            if (tight && letter < prev[pos]) continue;
            if (++nodes > budget)
                throw ResourceLimit("agreement code search exceeded the node budget");
            bool viable = true;
            for (std::size_t i = 0; i < chosen.size(); ++i) {
                const int a = agree[i] + (chosen[i][pos] == letter ? 1 : 0);
                if (a > agreement || a + remaining < agreement) {
                    viable = false;
                    break;
                }
            }
            if (!viable) continue;
            cur[pos] = letter;
            for (std::size_t i = 0; i < chosen.size(); ++i)
                if (chosen[i][pos] == letter) ++agree[i];
            if (place(cur, pos + 1, tight && letter == prev[pos], agree)) return true;
            for (std::size_t i = 0; i < chosen.size(); ++i)
                if (chosen[i][pos] == letter) --agree[i];
        }
        return false;
    }
};

}  // namespace

CodeSearchResult agreement_code_search(int n_words, int length, int alphabet, int agreement,
                                       const CodeSearchConfig& cfg) {
    if (n_words < 1 || length < 1 || alphabet < 1)
        throw Error("agreement_code_search: positive inputs required");
    if (agreement < 0 || agreement > length)
        throw Error("agreement_code_search: agreement must lie in 0..length");
    std::vector<int> order = cfg.letter_order;
    if (order.empty()) {
        order.resize(std::size_t(alphabet));
        std::iota(order.begin(), order.end(), 0);
    } else {
        std::vector<int> sorted = order;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> expect(std::size_t(alphabet), 0);
        std::iota(expect.begin(), expect.end(), 0);
        if (sorted != expect)
            throw Error("agreement_code_search: letter_order must permute 0..alphabet-1");
    }

    CodeSearchResult res;
    CodeSearcher searcher{n_words, length, alphabet, agreement, cfg.node_budget, order, 0, {},
                          nullptr};
    searcher.witness = &res.witness;
    // keep references into `chosen` stable across the recursion
    searcher.chosen.reserve(std::size_t(n_words));
    searcher.chosen.push_back(std::vector<int>(std::size_t(length), 0));
    res.feasible = searcher.search_next();
    res.nodes = searcher.nodes;
    if (!res.feasible) res.witness.clear();
    if (res.feasible && !check_agreement_code(res.witness, agreement))
        throw Error("internal: search produced an invalid witness");
    return res;
}

bool check_agreement_code(const std::vector<std::vector<int>>& words, int agreement) {
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            if (words[i].size() != words[j].size()) return false;
            if (words[i] == words[j]) return false;
            int agree = 0;
            for (std::size_t p = 0; p < words[i].size(); ++p)
                if (words[i][p] == words[j][p]) ++agree;
            if (agree != agreement) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// full replay
// ---------------------------------------------------------------------------

std::string verdict_string(StageVerdict v) {
    switch (v) {
        case StageVerdict::Verified: return "VERIFIED";
        case StageVerdict::ContradictionReached: return "CONTRADICTION-REACHED";
        case StageVerdict::Failed: return "FAILED";
    }
    return "FAILED";
}

const std::vector<std::string>& replay_stage_names() {
    static const std::vector<std::string> names{
        "parameter-identity",
        "spectrum",
        "cosine-sequence",
        "inner-product-tables",
        "cycle-space-dimension",
        "cycle-length-multiple-of-3",
        "component-size-bound",
        "projection-minima",
        "clique-forcing",
        "post-clique-dimensions",
        "complement-inner-table",
        "root-system-maximum",
        "pigeonhole",
        "opposite-root-case",
        "agreement-code-search",
    };
    return names;
}

const ReplayStage* ReplayReport::find_stage(const std::string& name) const {
    for (const auto& st : stages)
        if (st.name == name) return &st;
    return nullptr;
}

Json ReplayReport::to_json() const {
    Json j;
    j["schema_version"] = "1";
    j["stage_list_version"] = "1";
    j["parameters"] = Json{{"v", 76}, {"k", 21}, {"lambda", 2}, {"mu", 7}};
    j["theta"] = -7;
    Json st = Json::array();
    for (const auto& stage : stages)
        st.push_back(Json{{"name", stage.name},
                          {"verdict", verdict_string(stage.verdict)},
                          {"certificate", stage.certificate}});
    j["stages"] = std::move(st);
    j["final_verdict"] = final_verdict();
    return j;
}

std::string ReplayReport::to_text() const {
    std::ostringstream os;
    for (const auto& stage : stages)
        os << stage.name << ": " << verdict_string(stage.verdict) << "\n";
    os << "final verdict: " << final_verdict() << "\n";
    return os.str();
}

namespace {

Json marks_json(const std::vector<std::size_t>& marks) {
    Json a = Json::array();
    for (const auto p : marks) a.push_back(p);
    return a;
}

Json coeff_json(const RatVector& x) {
    Json a = Json::array();
    for (const auto& q : x) a.push_back(rat_json(q));
    return a;
}

}  // namespace

ReplayReport replay_all(const ReplayOptions& opts) {
    ReplayReport rep;
    bool aborted = false;

    auto add = [&](const std::string& name, StageVerdict verdict, Json cert) {
        rep.stages.push_back(ReplayStage{name, verdict, std::move(cert)});
        if (verdict == StageVerdict::Failed) aborted = true;
        return verdict != StageVerdict::Failed;
    };
    auto guarded = [&](const std::string& name, auto&& body) {
        if (aborted) return;
        try {
            body();
        } catch (const Error& e) {
            add(name, StageVerdict::Failed, Json{{"error", e.what()}});
        }
    };

    SrgParams p{};
    Spectrum sp;
    InnerModel model;

    guarded("parameter-identity", [&] {
        p = validate_params(76, 21, 2, 7);
        const Int lhs = Int(p.k) * (p.k - p.lambda - 1);
        const Int rhs = Int(p.v - p.k - 1) * p.mu;
        add("parameter-identity", StageVerdict::Verified,
            Json{{"v", p.v},
                 {"k", p.k},
                 {"lambda", p.lambda},
                 {"mu", p.mu},
                 {"k(k-lambda-1)", lhs.get_str()},
                 {"(v-k-1)mu", rhs.get_str()}});
    });

    guarded("spectrum", [&] {
        sp = spectrum(p);
        const bool ok = sp.integral && sp.theta_plus == 2 && sp.theta_minus == -7 &&
                        sp.mult_plus == 56 && sp.mult_minus == 19;
        add("spectrum", ok ? StageVerdict::Verified : StageVerdict::Failed,
            Json{{"eigenvalues", Json::array({21, sp.theta_plus, sp.theta_minus})},
                 {"multiplicities", Json::array({1, sp.mult_plus, sp.mult_minus})},
                 {"expected-eigenvalues", Json::array({21, 2, -7})},
                 {"expected-multiplicities", Json::array({1, 56, 19})}});
    });

    guarded("cosine-sequence", [&] {
        const CosineSequence cs = cosine_sequence(p, -7);
        const bool ok = cs.w0 == 1 && cs.w1 == rat(-1, 3) && cs.w2 == rat(1, 9);
        add("cosine-sequence", ok ? StageVerdict::Verified : StageVerdict::Failed,
            Json{{"theta", -7},
                 {"w0", rat_json(cs.w0)},
                 {"w1", rat_json(cs.w1)},
                 {"w2", rat_json(cs.w2)}});
    });

    guarded("inner-product-tables", [&] {
        model = build_inner_model(p, -7, Rat(2));
        struct Entry {
            const char* name;
            Rat got;
            Rat expected;
        };
        const std::vector<Entry> entries{
            {"layer1-alpha", model.layer1.alpha, rat(3, 2)},
            {"layer1-beta", model.layer1.beta, rat(1, 2)},
            {"layer1-sq-norm", model.layer1.sq_norm, Rat(2)},
            {"layer2-alpha", model.layer2.alpha, rat(9, 4)},
            {"layer2-beta", model.layer2.beta, rat(-1, 4)},
            {"layer2-sq-norm", model.layer2.sq_norm, Rat(5)},
            {"L1-same", hat_inner(model, Relation::L1Same), Rat(2)},
            {"L1-adjacent", hat_inner(model, Relation::L1Adjacent), Rat(-1)},
            {"L1-nonadjacent", hat_inner(model, Relation::L1NonAdjacent), Rat(0)},
            {"L2-same", hat_inner(model, Relation::L2Same), Rat(5)},
            {"L2-adjacent", hat_inner(model, Relation::L2Adjacent), rat(-7, 4)},
            {"L2-nonadjacent", hat_inner(model, Relation::L2NonAdjacent), rat(1, 2)},
            {"cross-adjacent", hat_inner(model, Relation::CrossAdjacent), Rat(-1)},
            {"cross-nonadjacent", hat_inner(model, Relation::CrossNonAdjacent), rat(1, 2)},
            {"half-hat-adjacent", half_hat_inner(model, true), rat(-4, 9)},
            {"half-hat-nonadjacent", half_hat_inner(model, false), rat(2, 9)},
        };
        bool ok = true;
        Json table;
        for (const auto& e : entries) {
            ok = ok && e.got == e.expected;
            table[e.name] = rat_json(e.got);
        }
        add("inner-product-tables", ok ? StageVerdict::Verified : StageVerdict::Failed, table);
    });

    guarded("cycle-space-dimension", [&] {
        // cycle lengths range over 3..15: at least k-(mult-1) = 3 cycles fit in
        // the orthogonal complement of u, leaving at most k - 3*2 vertices
        const long dim_budget = sp.mult_minus - 1;
        const long min_cycles = p.k - dim_budget;
        const long t_max = p.k - 3 * (min_cycles - 1);
        bool ok = t_max == 15;
        Json dets = Json::array();
        for (long t = 3; t <= t_max; ++t) {
            const Rat dp = det(gram_path(std::size_t(t - 1)));
            const Rat dc = det(gram_cycle(std::size_t(t)));
            const std::size_t rc = rank(gram_cycle(std::size_t(t)));
            ok = ok && dp == t && dc == 0 && rc == std::size_t(t - 1);
            dets.push_back(Json{{"t", t},
                                {"det-path", rat_json(dp)},
                                {"det-cycle", rat_json(dc)},
                                {"rank-cycle", rc}});
        }
        add("cycle-space-dimension", ok ? StageVerdict::Verified : StageVerdict::Failed,
            Json{{"dimension-budget", dim_budget}, {"max-cycle-length", t_max},
                 {"tables", dets}});
    });

    guarded("cycle-length-multiple-of-3", [&] {
        bool ok = true;
        Json rows = Json::array();
        for (long t = 3; t <= 15; ++t) {
            const auto s = lemma_three(model, t);
            if (t % 3 == 0)
                ok = ok && s && *s == t / 3;
            else
                ok = ok && !s;
            rows.push_back(Json{{"t", t},
                                {"s", s ? Json(*s) : Json("infeasible")}});
        }
        add("cycle-length-multiple-of-3", ok ? StageVerdict::Verified : StageVerdict::Failed,
            Json{{"solutions", rows}});
    });

    guarded("component-size-bound", [&] {
        const long bound = component_size_bound(model);
        add("component-size-bound", bound == 1 ? StageVerdict::Verified : StageVerdict::Failed,
            Json{{"max-size-2-components", bound},
                 {"projection-budget", rat_json(model.layer2.sq_norm)},
                 {"singleton-load", rat_json(rat(p.mu, 2))},
                 {"assumes", "components of size >= 3 would contain a 2-path, forcing a "
                             "4-cycle in the neighborhood of its middle vertex; impossible "
                             "since every such cycle length is a multiple of 3"}});
    });

    guarded("projection-minima", [&] {
        bool ok = true;
        Json rows = Json::array();
        for (long s = 1; s <= 5; ++s) {
            const MinProjection mp = min_projection(model, s, false);
            std::vector<std::size_t> evenly;
            for (long i = 0; i < s; ++i) evenly.push_back(std::size_t(3 * i));
            ok = ok && mp.min_value == rat(s, 2) && mp.argmin.size() == 1 &&
                 mp.argmin[0].marks.marks == evenly;
            rows.push_back(Json{{"s", s},
                                {"forced-pair", false},
                                {"min", rat_json(mp.min_value)},
                                {"classes", mp.arrangement_classes},
                                {"argmin", marks_json(mp.argmin[0].marks.marks)},
                                {"coefficients", coeff_json(mp.argmin[0].coefficients)}});
        }
        for (long s = 2; s <= 5; ++s) {
            const MinProjection mp = min_projection(model, s, true);
            std::vector<std::size_t> gaps{0, 1};
            for (long mth = 1; mth <= s - 2; ++mth) gaps.push_back(std::size_t(3 * mth + 2));
            ok = ok && mp.min_value == rat(s + 3, 2) && mp.argmin.size() == 1 &&
                 mp.argmin[0].marks.marks == gaps;
            rows.push_back(Json{{"s", s},
                                {"forced-pair", true},
                                {"min", rat_json(mp.min_value)},
                                {"classes", mp.arrangement_classes},
                                {"argmin", marks_json(mp.argmin[0].marks.marks)},
                                {"coefficients", coeff_json(mp.argmin[0].coefficients)}});
        }
        add("projection-minima", ok ? StageVerdict::Verified : StageVerdict::Failed,
            Json{{"rows", rows}});
    });

    guarded("clique-forcing", [&] {
        const Rat required = hat_inner(model, Relation::L2Adjacent);
        bool contradiction = true;
        Json rows = Json::array();
        for (long s = 2; s <= 5; ++s) {
            const Rat bound = lemma_cliques_bound(model, s);
            contradiction = contradiction && bound == -1 && bound > required;
            rows.push_back(Json{{"s", s}, {"min-inner", rat_json(bound)}});
        }
        add("clique-forcing",
            contradiction ? StageVerdict::ContradictionReached : StageVerdict::Failed,
            Json{{"required", rat_json(required)},
                 {"gap", rat_json(Rat(-1) - required)},
                 {"rows", rows},
                 {"assumes", "a cycle of length >= 6 through a long-cycle edge yields "
                             "adjacent second-layer vertices w, w' with w adjacent to both "
                             "endpoints of that edge (the neighborhood of an endpoint is "
                             "itself a union of cycles)"},
                 {"conclusion", "cycles of length >= 6 are impossible; every cycle is a "
                                "triangle"}});
    });

    guarded("post-clique-dimensions", [&] {
        const CliqueDimensions dims = post_clique_dimensions(model);
        const bool ok = dims.dim_span == 15 && dims.dim_complement == 4;
        add("post-clique-dimensions", ok ? StageVerdict::Verified : StageVerdict::Failed,
            Json{{"dim-span", dims.dim_span}, {"dim-complement", dims.dim_complement}});
    });

    guarded("complement-inner-table", [&] {
        const Rat same = circ_inner(model, CircRelation::Same);
        const Rat adj = circ_inner(model, CircRelation::Adjacent);
        const auto [beta_lo, beta_hi] = circ_beta_range(model);
        bool ok = same == 2 && adj == -1 && beta_lo == 1 && beta_hi == 5;
        Json betas = Json::array();
        for (long beta = beta_lo; beta <= beta_hi; ++beta) {
            const Rat val = circ_inner(model, CircRelation::NonAdjacent, beta);
            ok = ok && val == 3 - beta;
            betas.push_back(Json{{"beta", beta}, {"value", rat_json(val)}});
        }
        add("complement-inner-table", ok ? StageVerdict::Verified : StageVerdict::Failed,
            Json{{"same", rat_json(same)},
                 {"adjacent", rat_json(adj)},
                 {"nonadjacent", betas},
                 {"beta-range", Json::array({beta_lo, beta_hi})}});
    });

    guarded("root-system-maximum", [&] {
        const LatticeGram d4{4, simple_root_gram_d(4)};
        const RootSet rs = short_vectors(d4, Rat(2));
        const RootClassification cls = classify(rs, d4);
        const std::size_t best = max_roots(4);
        const bool ok = rs.roots.size() == 24 && cls.components.size() == 1 &&
                        cls.components[0].type == AdeType::D && cls.components[0].rank == 4 &&
                        cls.components[0].root_count == 24 && best == 24;
        add("root-system-maximum", ok ? StageVerdict::Verified : StageVerdict::Failed,
            Json{{"d4-root-count", rs.roots.size()},
                 {"d4-classification", ade_name(cls.components[0])},
                 {"max-roots-rank-4", best},
                 {"opposite-root-pairs", best / 2}});
    });

    long pigeonhole_load = 0;
    long beta_same = 0;

    guarded("pigeonhole", [&] {
        const long population = p.v - 1 - p.k;  // |G2(u)| = 54
        const long buckets = long(max_roots(4) / 2);
        pigeonhole_load = pigeonhole_pairs(population, buckets);
        const bool ok = population == 54 && buckets == 12 && pigeonhole_load == 5;
        add("pigeonhole", ok ? StageVerdict::Verified : StageVerdict::Failed,
            Json{{"population", population},
                 {"buckets", buckets},
                 {"guaranteed-load", pigeonhole_load}});
    });

    guarded("opposite-root-case", [&] {
        // invert the non-adjacent table: beta counts for inner products +2 / -2
        long beta_opposite = 0;
        const auto [beta_lo, beta_hi] = circ_beta_range(model);
        for (long beta = beta_lo; beta <= beta_hi; ++beta) {
            const Rat value = circ_inner(model, CircRelation::NonAdjacent, beta);
            if (value == 2) beta_same = beta;
            if (value == -2) beta_opposite = beta;
        }
        // adjacent pairs cannot share a root pair at all
        const Rat adj = circ_inner(model, CircRelation::Adjacent);
        const bool pairwise_nonadjacent = adj != 2 && adj != -2;
        const long overlap =
            min_common_elements(beta_opposite, beta_opposite, p.mu);
        const bool contradiction =
            pairwise_nonadjacent && beta_same == 1 && beta_opposite == 5 &&
            overlap == opposite_root_case().overlap && overlap > beta_same;
        add("opposite-root-case",
            contradiction ? StageVerdict::ContradictionReached : StageVerdict::Failed,
            Json{{"same-root-common-neighbors", beta_same},
                 {"opposite-root-common-neighbors", beta_opposite},
                 {"guaranteed-overlap", overlap},
                 {"allowed-overlap", beta_same},
                 {"conclusion", "five vertices on one root pair must all share the same "
                                "root"}});
    });

    guarded("agreement-code-search", [&] {
        CodeSearchConfig cfg;
        cfg.node_budget = opts.node_budget;
        const int triangles = int(p.k / 3);
        const CodeSearchResult res = agreement_code_search(
            int(pigeonhole_load), triangles, opts.code_alphabet, int(beta_same), cfg);
        Json cert{{"n-words", pigeonhole_load},
                  {"length", triangles},
                  {"alphabet", opts.code_alphabet},
                  {"agreement", beta_same},
                  {"nodes", res.nodes}};
        if (res.feasible) {
            Json w = Json::array();
            for (const auto& word : res.witness) w.push_back(word);
            cert["witness"] = std::move(w);
            add("agreement-code-search", StageVerdict::Failed, std::move(cert));
        } else {
            cert["result"] = "INFEASIBLE";
            add("agreement-code-search", StageVerdict::ContradictionReached, std::move(cert));
        }
    });

    rep.nonexistent = !aborted && rep.stages.size() == replay_stage_names().size();
    return rep;
}

}  // namespace srg
