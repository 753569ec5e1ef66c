#include <srg/graphs.hpp>

#include <srg/errors.hpp>

#include <json.hpp>

#include <algorithm>

namespace srg {

void Graph::add_edge(std::size_t i, std::size_t j) {
    if (i >= n_ || j >= n_) throw Error("add_edge: vertex id out of range");
    if (i == j) throw Error("add_edge: loops not allowed");
    adj_[i][j] = adj_[j][i] = true;
}

std::size_t Graph::degree(std::size_t v) const {
    std::size_t d = 0;
    for (std::size_t j = 0; j < n_; ++j)
        if (adj_[v][j]) ++d;
    return d;
}

std::vector<std::size_t> Graph::neighbors(std::size_t v) const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < n_; ++j)
        if (adj_[v][j]) out.push_back(j);
    return out;
}

Graph Graph::complement() const {
    Graph c(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if (!adj_[i][j]) c.add_edge(i, j);
    return c;
}

namespace {

constexpr std::size_t kGraph6MaxShort = 62;
constexpr std::size_t kGraph6MaxExtended = 258047;

std::string strip_graph6(const std::string& text) {
    std::string s = text;
    const std::string prefix = ">>graph6<<";
    if (s.rfind(prefix, 0) == 0) s = s.substr(prefix.size());
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' '))
        s.pop_back();
    return s;
}

}  // namespace

Graph parse_graph6(const std::string& text) {
    std::string s = strip_graph6(text);
    if (s.empty()) throw MalformedHeader("empty graph6 string");
    for (char ch : s)
        if (ch < 63 || ch > 126)
            throw MalformedHeader(std::string("byte out of graph6 range: '") + ch + "'");

    std::size_t n = 0, pos = 0;
    if (s[0] == 126) {
        if (s.size() >= 2 && s[1] == 126)
            throw TooLarge("8-byte graph6 size header not supported");
        if (s.size() < 4) throw MalformedHeader("truncated extended size header");
        n = 0;
        for (int i = 1; i <= 3; ++i) n = (n << 6) | std::size_t(s[i] - 63);
        if (n <= kGraph6MaxShort)
            throw MalformedHeader("extended header used for a short-form size");
        pos = 4;
    } else {
        n = std::size_t(s[0] - 63);
        pos = 1;
    }

    const std::size_t nbits = n * (n - 1) / 2;
    const std::size_t nbytes = (nbits + 5) / 6;
    if (s.size() - pos < nbytes) throw TruncatedBitVector("graph6 bit vector too short");
    if (s.size() - pos > nbytes) throw TrailingGarbage("extra bytes after graph6 bit vector");

    Graph g(n);
    std::size_t bit = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i, ++bit) {
            const unsigned byte = unsigned(s[pos + bit / 6] - 63);
            if ((byte >> (5 - bit % 6)) & 1u) g.add_edge(i, j);
        }
    }
    // padding bits must be zero
    for (; bit < nbytes * 6; ++bit) {
        const unsigned byte = unsigned(s[pos + bit / 6] - 63);
        if ((byte >> (5 - bit % 6)) & 1u)
            throw TrailingGarbage("nonzero padding bits in graph6 encoding");
    }
    return g;
}

std::string write_graph6(const Graph& g) {
    const std::size_t n = g.size();
    std::string out;
    if (n <= kGraph6MaxShort) {
        out.push_back(char(63 + n));
    } else if (n <= kGraph6MaxExtended) {
        out.push_back(char(126));
        out.push_back(char(63 + ((n >> 12) & 63)));
        out.push_back(char(63 + ((n >> 6) & 63)));
        out.push_back(char(63 + (n & 63)));
    } else {
        throw TooLarge("graphs beyond 258047 vertices are not encodable here");
    }
    unsigned acc = 0;
    int nb = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            acc = (acc << 1) | unsigned(g.adjacent(i, j));
            if (++nb == 6) {
                out.push_back(char(63 + acc));
                acc = 0;
                nb = 0;
            }
        }
    }
    if (nb > 0) out.push_back(char(63 + (acc << (6 - nb))));
    return out;
}

Graph parse_adjacency_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw BadGraphFile(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw BadGraphFile(R"(expected {"n": int, "edges": [[i,j],...]})");
    if (!j["n"].is_number_integer() || j["n"].get<long>() < 0)
        throw BadGraphFile("\"n\" must be a nonnegative integer");
    Graph g(j["n"].get<std::size_t>());
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw BadGraphFile("each edge must be a pair of vertex ids");
        const long a = e[0].get<long>(), b = e[1].get<long>();
        if (a < 0 || b < 0 || std::size_t(a) >= g.size() || std::size_t(b) >= g.size() || a == b)
            throw BadGraphFile("edge endpoint out of range or loop");
        g.add_edge(std::size_t(a), std::size_t(b));
    }
    return g;
}

std::string write_adjacency_json(const Graph& g) {
    nlohmann::ordered_json j;
    j["n"] = g.size();
    auto edges = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t k = i + 1; k < g.size(); ++k)
            if (g.adjacent(i, k)) edges.push_back({i, k});
    j["edges"] = std::move(edges);
    return j.dump();
}

SrgParams verify_srg(const Graph& g) {
    const std::size_t n = g.size();
    if (n < 2) throw Degenerate("strong regularity needs at least 2 vertices");
    const std::size_t k = g.degree(0);
    for (std::size_t v = 1; v < n; ++v)
        if (g.degree(v) != k)
            throw NotRegular("vertex " + std::to_string(v) + " has degree " +
                                 std::to_string(g.degree(v)) + " != " + std::to_string(k),
                             v);
    if (k == 0) throw Degenerate("empty graph");
    if (k == n - 1) throw Degenerate("complete graph (no non-adjacent pair, mu undefined)");

    long lambda = -1, mu = -1;
    std::size_t wit_a = 0, wit_b = 0;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            long common = 0;
            for (std::size_t c = 0; c < n; ++c)
                if (g.adjacent(a, c) && g.adjacent(b, c)) ++common;
            long& expected = g.adjacent(a, b) ? lambda : mu;
            if (expected == -1) {
                expected = common;
                wit_a = a;
                wit_b = b;
            } else if (expected != common) {
                throw NotStronglyRegular(
                    "pairs (" + std::to_string(wit_a) + "," + std::to_string(wit_b) + ") and (" +
                        std::to_string(a) + "," + std::to_string(b) + ") have " +
                        std::to_string(expected) + " vs " + std::to_string(common) +
                        " common neighbours",
                    a, b);
            }
        }
    }
    if (mu == 0) throw Degenerate("mu = 0: disjoint union of cliques");
    return validate_params(long(n), long(k), lambda, mu);
}

RatMatrix representation_gram(const Graph& g, long theta) {
    SrgParams p = verify_srg(g);
    CosineSequence cs = cosine_sequence(p, theta);
    const std::size_t n = g.size();
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = cs.w0;
        for (std::size_t j = i + 1; j < n; ++j)
            m(i, j) = m(j, i) = g.adjacent(i, j) ? cs.w1 : cs.w2;
    }
    return m;
}

NeighborhoodDecomposition neighborhood_cycles(const Graph& g, std::size_t u) {
    if (u >= g.size()) throw Error("neighborhood_cycles: vertex out of range");
    const std::vector<std::size_t> nbrs = g.neighbors(u);

    // induced adjacency restricted to the neighborhood, kept sorted
    std::vector<std::vector<std::size_t>> induced(nbrs.size());
    for (std::size_t a = 0; a < nbrs.size(); ++a) {
        for (std::size_t b = 0; b < nbrs.size(); ++b)
            if (a != b && g.adjacent(nbrs[a], nbrs[b])) induced[a].push_back(b);
        if (induced[a].size() != 2)
            throw NotDegreeTwo("vertex " + std::to_string(nbrs[a]) + " has induced degree " +
                                   std::to_string(induced[a].size()) + " in the neighborhood of " +
                                   std::to_string(u),
                               nbrs[a]);
    }

    NeighborhoodDecomposition dec;
    dec.center = u;
    std::vector<bool> visited(nbrs.size(), false);
    for (std::size_t start = 0; start < nbrs.size(); ++start) {
        if (visited[start]) continue;
        std::vector<std::size_t> cycle;
        std::size_t prev = start;
        std::size_t cur = std::min(induced[start][0], induced[start][1]);
        cycle.push_back(nbrs[start]);
        visited[start] = true;
        while (cur != start) {
            cycle.push_back(nbrs[cur]);
            visited[cur] = true;
            const std::size_t next = induced[cur][0] == prev ? induced[cur][1] : induced[cur][0];
            prev = cur;
            cur = next;
        }
        dec.cycles.push_back(std::move(cycle));
    }
    return dec;
}

std::vector<MarkedCycle> mu_marks(const Graph& g, std::size_t u, std::size_t w) {
    if (w >= g.size()) throw Error("mu_marks: vertex out of range");
    if (w == u) throw Error("mu_marks: w must differ from u");
    if (g.adjacent(u, w)) throw Error("mu_marks: w must be non-adjacent to u");
    const NeighborhoodDecomposition dec = neighborhood_cycles(g, u);
    std::vector<MarkedCycle> out;
    for (const auto& cycle : dec.cycles) {
        MarkedCycle mc;
        mc.t = cycle.size();
        for (std::size_t pos = 0; pos < cycle.size(); ++pos)
            if (g.adjacent(cycle[pos], w)) mc.marks.push_back(pos);
        out.push_back(std::move(mc));
    }
    return out;
}

}  // namespace srg
