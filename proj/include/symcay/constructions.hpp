#pragma once

#include <algorithm>
#include <optional>
#include <thread>
#include <unordered_set>
#include <utility>
#include <vector>

#include "symcay/bigint.hpp"
#include "symcay/errors.hpp"
#include "symcay/graph.hpp"
#include "symcay/graph_aut.hpp"
#include "symcay/group.hpp"

namespace symcay {

/// Ingredients of a coset graph: a group G, a core-free-in-spirit subgroup
/// H, and a joining element g.  The graph is undirected only when g^2 lies
/// in H; feasibility_check reports on that rather than assuming it.
struct CosetGraphSpec {
    GeneratedGroup G;
    GeneratedGroup H;
    Permutation g;
};

namespace detail_cons {

inline void validate_spec_membership(const CosetGraphSpec& spec) {
    if (spec.H.degree() != spec.G.degree())
        throw DegreeMismatch(spec.H.degree(), spec.G.degree());
    if (spec.g.degree() != spec.G.degree())
        throw DegreeMismatch(spec.g.degree(), spec.G.degree());
    if (!is_subgroup_of(spec.H, spec.G)) throw NotSubgroup("H is not a subgroup of G");
    if (!spec.G.contains(spec.g)) throw InvalidParameter("joining element lies outside G");
}

}  // namespace detail_cons

/// The three conditions a joining element must satisfy for the coset graph
/// to be a connected undirected |H:H∩H^g|-regular graph, plus that valency.
struct FeasibilityReport {
    bool two_element = false;       // order of g is a power of two
    bool square_in_subgroup = false;  // g^2 in H
    bool generates = false;         // <H, g> = G
    BigCount valency;               // |H : H ∩ H^g|
    bool feasible = false;          // all three conditions
};

inline FeasibilityReport feasibility_check(const CosetGraphSpec& spec,
                                           const BigCount& enum_cap) {
    detail_cons::validate_spec_membership(spec);
    FeasibilityReport rep;
    rep.two_element = spec.g.is_two_element();
    rep.square_in_subgroup = spec.H.contains(spec.g * spec.g);

    std::vector<Permutation> joined = spec.H.generators();
    joined.push_back(spec.g);
    rep.generates = GeneratedGroup(spec.G.degree(), std::move(joined)).order() == spec.G.order();

    // |H ∩ H^g|: h lies in H^g = g^-1 H g exactly when g h g^-1 lies in H.
    Permutation ginv = spec.g.inverse();
    unsigned long fixed = 0;
    for (const Permutation& h : spec.H.elements(enum_cap))
        if (spec.H.contains(h.conjugated_by(ginv))) ++fixed;
    rep.valency = spec.H.order() / BigCount(fixed);

    rep.feasible = rep.two_element && rep.square_in_subgroup && rep.generates;
    return rep;
}

/// Membership in the double coset HgH: r = h g h' for some h, h' in H,
/// equivalently g^-1 h^-1 r lies in H for some h in H.
inline bool double_coset_contains(const GeneratedGroup& H, const Permutation& g,
                                  const Permutation& r, const BigCount& enum_cap) {
    Permutation ginv = g.inverse();
    for (const Permutation& h : H.elements(enum_cap))
        if (H.contains(ginv * h.inverse() * r)) return true;
    return false;
}

/// Coset graph: vertices are the right cosets of H in G, and Hx ~ Hy
/// exactly when yx^-1 lies in HgH; equivalently the neighbours of Hx are
/// the cosets H(ghx) for h in H.  Requires g^2 in H so that adjacency is
/// symmetric.  Self-loops (which appear only in the degenerate case g in H)
/// are dropped.
inline SimpleGraph coset_graph(const CosetGraphSpec& spec, const BigCount& max_index,
                               const BigCount& enum_cap) {
    detail_cons::validate_spec_membership(spec);
    if (!spec.H.contains(spec.g * spec.g))
        throw InvalidParameter("coset graph needs g^2 in H to be undirected");
    CosetAction act = coset_action(spec.G, spec.H, max_index);
    const auto& h_elems = spec.H.elements(enum_cap);
    std::vector<std::pair<int, int>> edges;
    for (int k = 0; k < act.index; ++k)
        for (const Permutation& h : h_elems) {
            int j = act.coset_id(spec.g * h * act.reps[static_cast<std::size_t>(k)]);
            if (j != k) edges.emplace_back(k, j);
        }
    SimpleGraph graph(act.index, edges);

    // Cross-checks against the feasibility arithmetic.  When g lies in H the
    // double coset collapses and the graph is edgeless by construction, so
    // the regularity comparison only applies to genuine joining elements.
    FeasibilityReport rep = feasibility_check(spec, enum_cap);
    if (graph.connected() != rep.generates)
        throw Error("connectivity disagrees with whether H and g generate G");
    if (!spec.H.contains(spec.g)) {
        auto val = graph.valency();
        if (!val || BigCount(*val) != rep.valency)
            throw Error("vertex degrees disagree with the subgroup-index valency");
    }
    return graph;
}

/// Inverse-closed, identity-free subset of a group, the right-hand datum of
/// a Cayley graph.
struct ConnectionSet {
    int degree = 0;
    std::vector<Permutation> elements;
};

/// Validates connection-set invariants against R.
inline void validate_connection_set(const GeneratedGroup& R, const ConnectionSet& S) {
    if (S.degree != R.degree()) throw DegreeMismatch(S.degree, R.degree());
    std::unordered_set<Permutation, PermHash> seen;
    for (const Permutation& s : S.elements) {
        if (s.is_identity()) throw InvalidConnectionSet("connection set contains the identity");
        if (!R.contains(s))
            throw InvalidConnectionSet("connection set element lies outside the group");
        if (!seen.insert(s).second) throw InvalidConnectionSet("duplicate connection element");
    }
    for (const Permutation& s : S.elements)
        if (!seen.count(s.inverse()))
            throw InvalidConnectionSet("connection set is not inverse-closed");
}

/// Cayley graph Cay(R, S): vertices are the elements of R in enumeration
/// order (identity first), with r ~ t exactly when t r^-1 lies in S; the
/// neighbours of r are the products s·r.
inline SimpleGraph cayley_graph(const GeneratedGroup& R, const ConnectionSet& S,
                                const BigCount& enum_cap) {
    validate_connection_set(R, S);
    const auto& elems = R.elements(enum_cap);
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (const Permutation& s : S.elements) {
            int j = R.element_index(s * elems[i], enum_cap);
            edges.emplace_back(static_cast<int>(i), j);
        }
    return SimpleGraph(static_cast<int>(elems.size()), edges);
}

/// Extracts the connection set that presents a coset graph as a Cayley
/// graph of R, where R must act regularly (and faithfully) on the cosets:
/// S = { r in R : r in HgH, r != 1 }.  The identification is then verified
/// by relabeling: vertex Hr of the coset graph corresponds to r, and the
/// two adjacency relations must coincide exactly.
inline ConnectionSet connection_set(const GeneratedGroup& R, const CosetGraphSpec& spec,
                                    const BigCount& max_index, const BigCount& enum_cap) {
    detail_cons::validate_spec_membership(spec);
    if (!spec.H.contains(spec.g * spec.g))
        throw InvalidParameter("connection set needs g^2 in H");
    if (R.degree() != spec.G.degree()) throw DegreeMismatch(R.degree(), spec.G.degree());
    if (!is_subgroup_of(R, spec.G)) throw NotSubgroup("R is not a subgroup of G");

    CosetAction act = coset_action(spec.G, spec.H, max_index);
    std::vector<Permutation> r_action;
    for (const Permutation& a : R.generators()) {
        std::vector<int> images(static_cast<std::size_t>(act.index));
        for (int k = 0; k < act.index; ++k)
            images[static_cast<std::size_t>(k)] =
                act.coset_id(act.reps[static_cast<std::size_t>(k)] * a);
        r_action.push_back(Permutation::from_images(std::move(images)));
    }
    GeneratedGroup image(act.index, r_action);
    if (R.order() != BigCount(act.index) || !image.is_transitive() ||
        image.order() != R.order())
        throw NotRegular("R does not act regularly on the cosets");

    ConnectionSet S;
    S.degree = R.degree();
    for (const Permutation& r : R.elements(enum_cap))
        if (!r.is_identity() && double_coset_contains(spec.H, spec.g, r, enum_cap))
            S.elements.push_back(r);

    // Relabeling check: r -> coset Hr is a bijection; adjacency must match.
    SimpleGraph cos = coset_graph(spec, max_index, enum_cap);
    std::unordered_set<Permutation, PermHash> in_S(S.elements.begin(), S.elements.end());
    const auto& relems = R.elements(enum_cap);
    std::vector<int> vertex_of(relems.size());
    for (std::size_t i = 0; i < relems.size(); ++i)
        vertex_of[i] = act.coset_id(relems[i]);
    for (std::size_t i = 0; i < relems.size(); ++i)
        for (std::size_t j = 0; j < relems.size(); ++j) {
            bool cayley_edge = in_S.count(relems[j] * relems[i].inverse()) > 0;
            if (cos.adjacent(vertex_of[i], vertex_of[j]) != cayley_edge)
                throw Error("coset graph does not relabel to the Cayley graph");
        }
    return S;
}

/// Everything the normality test of a Cayley graph produces: the graph, the
/// full automorphism group's order, whether the right-regular copy of R is
/// normal in it, and connectivity (equivalent to S generating R).
struct NormalityReport {
    SimpleGraph graph;
    BigCount aut_order;
    bool normal = false;
    bool connected = false;
};

/// Right-regular embedding of R into Sym(vertices of Cay(R, S)): the
/// generator a acts by r -> r·a.
inline GeneratedGroup right_regular_embedding(const GeneratedGroup& R, const BigCount& enum_cap) {
    const auto& elems = R.elements(enum_cap);
    std::vector<Permutation> gens;
    for (const Permutation& a : R.generators()) {
        std::vector<int> images(elems.size());
        for (std::size_t i = 0; i < elems.size(); ++i)
            images[i] = R.element_index(elems[i] * a, enum_cap);
        gens.push_back(Permutation::from_images(std::move(images)));
    }
    return GeneratedGroup(static_cast<int>(elems.size()), std::move(gens));
}

inline NormalityReport normality_report(const GeneratedGroup& R, const ConnectionSet& S,
                                        int vertex_cap, const BigCount& enum_cap) {
    NormalityReport rep;
    rep.graph = cayley_graph(R, S, enum_cap);
    GeneratedGroup aut = automorphism_group(rep.graph, vertex_cap);
    GeneratedGroup regular = right_regular_embedding(R, enum_cap);
    rep.aut_order = aut.order();
    rep.normal = is_normal_in(regular, aut);
    rep.connected = rep.graph.connected();
    return rep;
}

/// Quotient of a graph by the orbits of a normal subgroup N of a supplied
/// automorphism group X: vertices are N-orbits, adjacent when any cross
/// edge exists.
struct QuotientReport {
    SimpleGraph quotient;
    std::vector<std::vector<int>> orbits;
    long long orbit_count = 0;
    bool semiregular = false;       // every orbit has |N| vertices
    bool valency_preserved = false;  // both graphs regular of equal valency
};

inline QuotientReport normal_quotient(const SimpleGraph& graph, const GeneratedGroup& X,
                                      const GeneratedGroup& N) {
    if (X.degree() != graph.vertex_count())
        throw DegreeMismatch(X.degree(), graph.vertex_count());
    for (const Permutation& gen : X.generators())
        if (!preserves_edges(graph, gen))
            throw NonAutomorphism("supplied group does not act on the graph");
    if (!is_subgroup_of(N, X)) throw NotSubgroup("N is not a subgroup of X");
    if (!is_normal_in(N, X)) throw NotNormal("N is not normal in X");

    QuotientReport rep;
    rep.orbits = N.orbits();
    rep.orbit_count = static_cast<long long>(rep.orbits.size());
    std::vector<int> block(static_cast<std::size_t>(graph.vertex_count()));
    for (std::size_t b = 0; b < rep.orbits.size(); ++b)
        for (int v : rep.orbits[b]) block[static_cast<std::size_t>(v)] = static_cast<int>(b);

    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < graph.vertex_count(); ++u)
        for (int w : graph.neighbors(u))
            if (u < w && block[static_cast<std::size_t>(u)] != block[static_cast<std::size_t>(w)])
                edges.emplace_back(block[static_cast<std::size_t>(u)],
                                   block[static_cast<std::size_t>(w)]);
    rep.quotient = SimpleGraph(static_cast<int>(rep.orbits.size()), edges);
    rep.semiregular = N.is_semiregular();
    auto v0 = graph.valency();
    auto v1 = rep.quotient.valency();
    rep.valency_preserved = v0.has_value() && v1.has_value() && *v0 == *v1;
    return rep;
}

/// One feasible joining element found by the exhaustive search.
struct SearchHit {
    Permutation witness;
    FeasibilityReport report;
};

/// Scans every element of G for the feasibility conditions with respect to
/// H, optionally keeping only hits of one valency.  The scan order (hence
/// the result order) is G's deterministic element order; worker threads
/// partition the index range and results are concatenated in range order.
inline std::vector<SearchHit> feasible_element_search(const GeneratedGroup& G,
                                                      const GeneratedGroup& H,
                                                      std::optional<BigCount> target_valency,
                                                      const BigCount& enum_cap,
                                                      int workers = 1) {
    if (G.order_exceeds(enum_cap))
        throw CapExceeded("group too large to scan for feasible elements");
    if (!is_subgroup_of(H, G)) throw NotSubgroup("search needs H <= G");
    const auto& candidates = G.elements(enum_cap);
    const auto& h_elems = H.elements(enum_cap);
    (void)h_elems;  // pre-warmed so worker threads only read caches
    BigCount g_order = G.order();
    BigCount h_order = H.order();

    auto scan = [&](std::size_t begin, std::size_t end, std::vector<SearchHit>& out) {
        for (std::size_t k = begin; k < end; ++k) {
            const Permutation& g = candidates[k];
            if (!g.is_two_element()) continue;
            // g in H never yields an arc (Hg = H); for proper H it could not
            // generate G anyway, and for H = G it would only produce loops.
            if (H.contains(g)) continue;
            if (!H.contains(g * g)) continue;

            FeasibilityReport rep;
            rep.two_element = true;
            rep.square_in_subgroup = true;
            std::vector<Permutation> joined = H.generators();
            joined.push_back(g);
            rep.generates =
                GeneratedGroup(G.degree(), std::move(joined)).order() == g_order;
            if (!rep.generates) continue;

            Permutation ginv = g.inverse();
            unsigned long fixed = 0;
            for (const Permutation& h : H.elements(enum_cap))
                if (H.contains(h.conjugated_by(ginv))) ++fixed;
            rep.valency = h_order / BigCount(fixed);
            rep.feasible = true;
            if (target_valency && rep.valency != *target_valency) continue;
            out.push_back(SearchHit{g, rep});
        }
    };

    if (workers < 1) throw InvalidParameter("worker count must be positive");
    std::vector<SearchHit> hits;
    if (workers == 1 || candidates.size() < 64) {
        scan(0, candidates.size(), hits);
    } else {
        std::vector<std::vector<SearchHit>> parts(static_cast<std::size_t>(workers));
        std::vector<std::thread> threads;
        std::size_t chunk = (candidates.size() + static_cast<std::size_t>(workers) - 1) /
                            static_cast<std::size_t>(workers);
        for (int w = 0; w < workers; ++w) {
            std::size_t begin = static_cast<std::size_t>(w) * chunk;
            std::size_t end = std::min(candidates.size(), begin + chunk);
            if (begin >= end) break;
            threads.emplace_back(scan, begin, end, std::ref(parts[static_cast<std::size_t>(w)]));
        }
        for (auto& t : threads) t.join();
        for (auto& part : parts)
            for (auto& hit : part) hits.push_back(std::move(hit));
    }
    std::sort(hits.begin(), hits.end(), [](const SearchHit& a, const SearchHit& b) {
        return a.witness.images() < b.witness.images();
    });
    return hits;
}

}  // namespace symcay
