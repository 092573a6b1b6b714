#pragma once

#include <algorithm>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "symcay/bigint.hpp"
#include "symcay/errors.hpp"
#include "symcay/perm.hpp"

namespace symcay {

/// Stabilizer chain with explicit transversals, built by the deterministic
/// Schreier-Sims procedure.  Base points are chosen as the smallest moved
/// point at each level (optional hints take precedence), generators are
/// processed in input order, and orbits grow by breadth-first search, so two
/// builds from the same generator list produce identical chains.
///
/// Level k stores a transversal for the orbit of its base point b_k under
/// the group generated by the level's generators: transversal[j] maps b_k to
/// orbit[j] (right action, so transversal[j](b_k) == orbit[j]).
class StabilizerChain {
public:
    struct Level {
        int base_point = -1;
        std::vector<Permutation> generators;
        std::vector<int> orbit;       // discovery order; orbit[0] == base_point
        std::vector<int> orbit_pos;   // point -> position in orbit, -1 outside
        std::vector<Permutation> transversal;
        std::vector<Permutation> transversal_inv;
        // Tree edge that discovered orbit[j]: (parent position, generator
        // index), (-1,-1) for the root.  These pairs produce trivial
        // Schreier generators and are skipped during construction.
        std::vector<std::pair<int, int>> parent_edge;
        // Rectangle of (orbit position, generator index) pairs whose
        // Schreier generators already sifted to the identity.  Orbit
        // extension never rewrites existing transversal entries, so a
        // verified pair stays verified and is never re-sifted.
        std::size_t verified_orbit = 0;
        std::size_t verified_gens = 0;
    };

    static StabilizerChain build(int degree, const std::vector<Permutation>& generators,
                                 const std::vector<int>& base_hints = {}) {
        StabilizerChain chain;
        chain.construct(degree, generators, base_hints, nullptr);
        return chain;
    }

    /// Builds unless the group order provably exceeds `abort_above`, in
    /// which case construction stops early and nullopt is returned.  The
    /// early-out test uses the product of the current orbit sizes, which
    /// only ever grows toward the true order, so an abort is a proof that
    /// |G| > abort_above.
    static std::optional<StabilizerChain> build_capped(int degree,
                                                       const std::vector<Permutation>& generators,
                                                       const BigCount& abort_above,
                                                       const std::vector<int>& base_hints = {}) {
        StabilizerChain chain;
        if (!chain.construct(degree, generators, base_hints, &abort_above)) return std::nullopt;
        return chain;
    }

    int degree() const { return degree_; }
    const std::vector<Level>& levels() const { return levels_; }

    BigCount order() const {
        BigCount o = 1;
        for (const Level& lv : levels_) o *= static_cast<unsigned long>(lv.orbit.size());
        return o;
    }

    /// Strips base images level by level; the returned residue is the
    /// identity exactly when p is a member.
    Permutation sift(const Permutation& p) const {
        Permutation r = p;
        for (const Level& lv : levels_) {
            int pos = lv.orbit_pos[static_cast<std::size_t>(r(lv.base_point))];
            if (pos < 0) return r;
            if (pos > 0) r = r * lv.transversal_inv[static_cast<std::size_t>(pos)];
        }
        return r;
    }

    bool contains(const Permutation& p) const {
        if (p.degree() != degree_) throw DegreeMismatch(p.degree(), degree_);
        return sift(p).is_identity();
    }

    std::vector<int> base() const {
        std::vector<int> b;
        b.reserve(levels_.size());
        for (const Level& lv : levels_) b.push_back(lv.base_point);
        return b;
    }

private:
    StabilizerChain() = default;

    // Adds `gen` at level i (creating the level if needed) and extends the
    // orbit incrementally.  Existing orbit points keep their transversal
    // entries; only newly reached points are appended.
    void add_generator(std::size_t i, const Permutation& gen, const std::vector<int>& hints) {
        if (i == levels_.size()) {
            Level lv;
            if (i < hints.size()) {
                lv.base_point = hints[i];
            } else {
                for (int point = 0; point < degree_; ++point)
                    if (gen(point) != point) {
                        lv.base_point = point;
                        break;
                    }
            }
            lv.orbit_pos.assign(static_cast<std::size_t>(degree_), -1);
            lv.orbit.push_back(lv.base_point);
            lv.orbit_pos[static_cast<std::size_t>(lv.base_point)] = 0;
            lv.transversal.emplace_back(degree_);
            lv.transversal_inv.emplace_back(degree_);
            lv.parent_edge.emplace_back(-1, -1);
            levels_.push_back(std::move(lv));
        }
        Level& lv = levels_[i];
        lv.generators.push_back(gen);
        int gen_index = static_cast<int>(lv.generators.size()) - 1;

        std::vector<int> frontier;
        auto reach = [&](std::size_t from_pos, std::size_t via_gen) {
            int image = lv.generators[via_gen](lv.orbit[from_pos]);
            if (lv.orbit_pos[static_cast<std::size_t>(image)] < 0) {
                lv.orbit_pos[static_cast<std::size_t>(image)] = static_cast<int>(lv.orbit.size());
                lv.orbit.push_back(image);
                lv.transversal.push_back(lv.transversal[from_pos] * lv.generators[via_gen]);
                lv.transversal_inv.push_back(lv.transversal.back().inverse());
                lv.parent_edge.emplace_back(static_cast<int>(from_pos),
                                            static_cast<int>(via_gen));
                frontier.push_back(static_cast<int>(lv.orbit.size()) - 1);
            }
        };
        std::size_t old_size = lv.orbit.size();
        for (std::size_t pos = 0; pos < old_size; ++pos)
            reach(pos, static_cast<std::size_t>(gen_index));
        for (std::size_t f = 0; f < frontier.size(); ++f)
            for (std::size_t s = 0; s < lv.generators.size(); ++s)
                reach(static_cast<std::size_t>(frontier[f]), s);
    }

    bool order_bound_exceeds(const BigCount& cap) const {
        BigCount bound = 1;
        for (const Level& lv : levels_) bound *= static_cast<unsigned long>(lv.orbit.size());
        return bound > cap;
    }

    // Ensures the chain property at levels i.. given it holds at i+1.. on
    // entry.  Insertions land strictly deeper than i, so level i's orbit and
    // generator list are stable for the duration of the call; levels_ itself
    // may reallocate, hence the index-based access throughout.  Returns
    // false only when the abort cap fired.
    bool complete_level(std::size_t i, const std::vector<int>& hints, const BigCount* cap) {
        const std::size_t orbit_count = levels_[i].orbit.size();
        const std::size_t gen_count = levels_[i].generators.size();
        const std::size_t done_orbit = levels_[i].verified_orbit;
        const std::size_t done_gens = levels_[i].verified_gens;
        const std::size_t n = static_cast<std::size_t>(degree_);
        std::vector<int> cur(n), nxt(n);

        for (std::size_t pos = 0; pos < orbit_count; ++pos) {
            for (std::size_t s = 0; s < gen_count; ++s) {
                if (pos < done_orbit && s < done_gens) continue;
                {
                    const Level& lv = levels_[i];
                    int child_pos =
                        lv.orbit_pos[static_cast<std::size_t>(lv.generators[s](lv.orbit[pos]))];
                    if (lv.parent_edge[static_cast<std::size_t>(child_pos)] ==
                        std::make_pair(static_cast<int>(pos), static_cast<int>(s)))
                        continue;
                    // Schreier generator u * s * u_child^-1, composed in one
                    // pass without allocating.
                    const auto& u = lv.transversal[pos].images();
                    const auto& sv = lv.generators[s].images();
                    const auto& w = lv.transversal_inv[static_cast<std::size_t>(child_pos)].images();
                    for (std::size_t point = 0; point < n; ++point)
                        cur[point] = w[static_cast<std::size_t>(
                            sv[static_cast<std::size_t>(u[point])])];
                }
                // Sift the Schreier generator through the deeper levels.
                std::size_t j = i + 1;
                for (; j < levels_.size(); ++j) {
                    const Level& deep = levels_[j];
                    int rpos = deep.orbit_pos[static_cast<std::size_t>(
                        cur[static_cast<std::size_t>(deep.base_point)])];
                    if (rpos < 0) break;
                    if (rpos > 0) {
                        const auto& tinv =
                            deep.transversal_inv[static_cast<std::size_t>(rpos)].images();
                        for (std::size_t point = 0; point < n; ++point)
                            nxt[point] = tinv[static_cast<std::size_t>(cur[point])];
                        cur.swap(nxt);
                    }
                }
                bool trivial = true;
                for (std::size_t point = 0; point < n; ++point)
                    if (cur[point] != static_cast<int>(point)) {
                        trivial = false;
                        break;
                    }
                if (trivial) continue;

                Permutation residue = Permutation::from_images(cur);
                // The residue fixes every base point above level j, so it
                // may extend any of the levels i+1..j; inserting it at all
                // of them keeps each level's generators inside the group
                // generated one level up.
                for (std::size_t l = i + 1; l <= j; ++l) {
                    add_generator(l, residue, hints);
                    if (cap && order_bound_exceeds(*cap)) return false;
                }
                for (std::size_t l = j; l > i; --l)
                    if (!complete_level(l, hints, cap)) return false;
            }
        }
        levels_[i].verified_orbit = orbit_count;
        levels_[i].verified_gens = gen_count;
        return true;
    }

    bool construct(int degree, const std::vector<Permutation>& generators,
                   const std::vector<int>& hints, const BigCount* cap) {
        degree_ = degree;
        for (int h : hints)
            if (h < 0 || h >= degree) throw InvalidParameter("base hint outside the domain");
        for (const Permutation& g : generators) {
            if (g.degree() != degree) throw DegreeMismatch(g.degree(), degree);
            if (!g.is_identity()) add_generator(0, g, hints);
        }
        if (levels_.empty()) return true;  // trivial group
        if (cap && order_bound_exceeds(*cap)) return false;
        return complete_level(0, hints, cap);
    }

    int degree_ = 0;
    std::vector<Level> levels_;
};

/// Finitely generated permutation group.  Cheap to copy (shared immutable
/// core); the stabilizer chain and the element table are computed once on
/// first use and cached.
class GeneratedGroup {
public:
    explicit GeneratedGroup(int degree, std::vector<Permutation> generators = {},
                            std::vector<int> base_hints = {})
        : core_(std::make_shared<Core>()) {
        if (degree < 0) throw InvalidParameter("negative degree");
        core_->degree = degree;
        core_->hints = std::move(base_hints);
        for (Permutation& g : generators) {
            if (g.degree() != degree) throw DegreeMismatch(g.degree(), degree);
            if (!g.is_identity()) core_->generators.push_back(std::move(g));
        }
    }

    int degree() const { return core_->degree; }
    const std::vector<Permutation>& generators() const { return core_->generators; }

    const StabilizerChain& chain() const {
        std::lock_guard<std::mutex> lock(core_->mutex);
        if (!core_->chain)
            core_->chain = std::make_shared<const StabilizerChain>(
                StabilizerChain::build(core_->degree, core_->generators, core_->hints));
        return *core_->chain;
    }

    BigCount order() const { return chain().order(); }

    /// True when |G| > cap, decided without completing the full chain when
    /// the partial orbit-size product already exceeds the cap.
    bool order_exceeds(const BigCount& cap) const {
        {
            std::lock_guard<std::mutex> lock(core_->mutex);
            if (core_->chain) return core_->chain->order() > cap;
        }
        auto built =
            StabilizerChain::build_capped(core_->degree, core_->generators, cap, core_->hints);
        if (!built) return true;
        std::lock_guard<std::mutex> lock(core_->mutex);
        if (!core_->chain)
            core_->chain = std::make_shared<const StabilizerChain>(std::move(*built));
        return core_->chain->order() > cap;
    }

    bool contains(const Permutation& p) const { return chain().contains(p); }

    Permutation sift(const Permutation& p) const {
        if (p.degree() != degree()) throw DegreeMismatch(p.degree(), degree());
        return chain().sift(p);
    }

    bool is_trivial() const { return core_->generators.empty(); }

    /// Orbits on the full domain, each sorted ascending, ordered by their
    /// smallest point.
    std::vector<std::vector<int>> orbits() const {
        std::vector<std::vector<int>> result;
        std::vector<char> seen(static_cast<std::size_t>(degree()), 0);
        for (int start = 0; start < degree(); ++start) {
            if (seen[static_cast<std::size_t>(start)]) continue;
            std::vector<int> orbit{start};
            seen[static_cast<std::size_t>(start)] = 1;
            for (std::size_t k = 0; k < orbit.size(); ++k)
                for (const Permutation& g : core_->generators) {
                    int image = g(orbit[k]);
                    if (!seen[static_cast<std::size_t>(image)]) {
                        seen[static_cast<std::size_t>(image)] = 1;
                        orbit.push_back(image);
                    }
                }
            std::sort(orbit.begin(), orbit.end());
            result.push_back(std::move(orbit));
        }
        return result;
    }

    bool is_transitive() const { return degree() > 0 && orbits().size() == 1; }

    /// Subgroup fixing `point`, with strong generators read off a chain
    /// whose first base point is `point`.
    GeneratedGroup point_stabilizer(int point) const {
        if (point < 0 || point >= degree()) throw InvalidParameter("point outside the domain");
        std::shared_ptr<const StabilizerChain> ch;
        {
            std::lock_guard<std::mutex> lock(core_->mutex);
            ch = core_->chain;
        }
        if (!ch || ch->levels().empty() || ch->levels()[0].base_point != point)
            ch = std::make_shared<const StabilizerChain>(
                StabilizerChain::build(degree(), core_->generators, {point}));
        std::vector<Permutation> gens;
        for (std::size_t i = 1; i < ch->levels().size(); ++i)
            for (const Permutation& g : ch->levels()[i].generators) gens.push_back(g);
        return GeneratedGroup(degree(), std::move(gens));
    }

    /// Transitive with trivial point stabilizers: |G| equals the domain size.
    bool is_regular() const { return is_transitive() && order() == BigCount(degree()); }

    /// Every point stabilizer trivial: each orbit has |G| points.  The
    /// trivial group is semiregular on any domain.
    bool is_semiregular() const {
        BigCount o = order();
        if (o > BigCount(degree())) return false;
        for (const auto& orbit : orbits())
            if (BigCount(static_cast<unsigned long>(orbit.size())) != o) return false;
        return true;
    }

    /// All elements, identity first, in the deterministic order induced by
    /// the chain's transversals.  Throws CapExceeded when |G| > cap.  The
    /// table is cached together with an element -> position index.
    const std::vector<Permutation>& elements(const BigCount& cap) const {
        ensure_elements(cap);
        return core_->element_table->list;
    }

    /// Position of p in elements(), or -1 when p is not a member.
    int element_index(const Permutation& p, const BigCount& cap) const {
        ensure_elements(cap);
        auto it = core_->element_table->index.find(p);
        return it == core_->element_table->index.end() ? -1 : it->second;
    }

    GeneratedGroup conjugated_by(const Permutation& q) const {
        std::vector<Permutation> gens;
        gens.reserve(core_->generators.size());
        for (const Permutation& g : core_->generators) gens.push_back(g.conjugated_by(q));
        return GeneratedGroup(degree(), std::move(gens));
    }

private:
    struct ElementTable {
        std::vector<Permutation> list;
        std::unordered_map<Permutation, int, PermHash> index;
    };

    struct Core {
        int degree = 0;
        std::vector<Permutation> generators;
        std::vector<int> hints;
        mutable std::mutex mutex;
        mutable std::shared_ptr<const StabilizerChain> chain;
        mutable std::shared_ptr<const ElementTable> element_table;
    };

    void ensure_elements(const BigCount& cap) const {
        {
            std::lock_guard<std::mutex> lock(core_->mutex);
            if (core_->element_table) {
                if (BigCount(static_cast<unsigned long>(core_->element_table->list.size())) > cap)
                    throw CapExceeded("group order exceeds enumeration cap " + big_str(cap));
                return;
            }
        }
        if (order_exceeds(cap))
            throw CapExceeded("group order exceeds enumeration cap " + big_str(cap));
        const StabilizerChain& ch = chain();
        auto table = std::make_shared<ElementTable>();
        table->list.emplace_back(degree());
        // Every element factors uniquely as (deeper element) * (transversal
        // entry), so the table is assembled bottom level up.
        for (std::size_t i = ch.levels().size(); i-- > 0;) {
            const auto& lv = ch.levels()[i];
            std::vector<Permutation> next;
            next.reserve(lv.transversal.size() * table->list.size());
            for (const Permutation& t : lv.transversal)
                for (const Permutation& e : table->list) next.push_back(e * t);
            table->list = std::move(next);
        }
        table->index.reserve(table->list.size());
        for (std::size_t k = 0; k < table->list.size(); ++k)
            table->index.emplace(table->list[k], static_cast<int>(k));
        std::lock_guard<std::mutex> lock(core_->mutex);
        if (!core_->element_table) core_->element_table = std::move(table);
    }

    std::shared_ptr<Core> core_;
};

/// True when every generator of H lies in G.
inline bool is_subgroup_of(const GeneratedGroup& H, const GeneratedGroup& G) {
    if (H.degree() != G.degree()) throw DegreeMismatch(H.degree(), G.degree());
    for (const Permutation& h : H.generators())
        if (!G.contains(h)) return false;
    return true;
}

/// H ∩ K by enumerating the smaller group and filtering through the other's
/// membership test.  Both orders must stay within `cap`.
inline GeneratedGroup intersect_small(const GeneratedGroup& H, const GeneratedGroup& K,
                                      const BigCount& cap) {
    if (H.degree() != K.degree()) throw DegreeMismatch(H.degree(), K.degree());
    const GeneratedGroup& small = H.order() <= K.order() ? H : K;
    const GeneratedGroup& other = H.order() <= K.order() ? K : H;
    std::vector<Permutation> found;
    for (const Permutation& e : small.elements(cap))
        if (!e.is_identity() && other.contains(e)) found.push_back(e);
    return GeneratedGroup(H.degree(), std::move(found));
}

/// Normality of H in G, decided by conjugating H's generators with G's.
inline bool is_normal_in(const GeneratedGroup& H, const GeneratedGroup& G) {
    if (H.degree() != G.degree()) throw DegreeMismatch(H.degree(), G.degree());
    for (const Permutation& g : G.generators())
        for (const Permutation& h : H.generators())
            if (!H.contains(h.conjugated_by(g))) return false;
    return true;
}

struct GroupFingerprint {
    BigCount order;
    bool is_abelian = false;
    BigCount center_order;
    BigCount derived_order;
    BigCount exponent;
    std::vector<int> orbit_lengths;  // ascending
};

/// Structural summary used to compare concrete groups against claimed
/// isomorphism types.  Requires |G| <= cap.
inline GroupFingerprint fingerprint(const GeneratedGroup& G, const BigCount& cap) {
    GroupFingerprint fp;
    const auto& elems = G.elements(cap);
    fp.order = static_cast<unsigned long>(elems.size());

    fp.is_abelian = true;
    for (const Permutation& a : G.generators()) {
        for (const Permutation& b : G.generators())
            if (a * b != b * a) {
                fp.is_abelian = false;
                break;
            }
        if (!fp.is_abelian) break;
    }

    unsigned long central = 0;
    for (const Permutation& e : elems) {
        bool commutes = true;
        for (const Permutation& g : G.generators())
            if (e * g != g * e) {
                commutes = false;
                break;
            }
        if (commutes) ++central;
    }
    fp.center_order = central;

    // Derived subgroup: close the generator commutators under products and
    // under conjugation by the group's generators (normal closure).
    {
        std::unordered_map<Permutation, int, PermHash> seen;
        std::vector<Permutation> pool;
        auto push = [&](const Permutation& p) {
            if (seen.emplace(p, 1).second) pool.push_back(p);
        };
        push(Permutation(G.degree()));
        for (const Permutation& a : G.generators())
            for (const Permutation& b : G.generators())
                push(a.inverse() * b.inverse() * a * b);
        for (std::size_t k = 0; k < pool.size(); ++k) {
            Permutation current = pool[k];
            for (const Permutation& g : G.generators()) push(current.conjugated_by(g));
            for (std::size_t l = 0; l < pool.size(); ++l) {
                push(current * pool[l]);
                if (BigCount(static_cast<unsigned long>(pool.size())) > cap)
                    throw CapExceeded("derived subgroup exceeds enumeration cap");
            }
        }
        fp.derived_order = static_cast<unsigned long>(pool.size());
    }

    fp.exponent = 1;
    for (const Permutation& e : elems) fp.exponent = big_lcm(fp.exponent, e.order());

    for (const auto& orbit : G.orbits())
        fp.orbit_lengths.push_back(static_cast<int>(orbit.size()));
    std::sort(fp.orbit_lengths.begin(), fp.orbit_lengths.end());
    return fp;
}

enum class SymmetryType { none, alternating, symmetric };

/// Exact recognition of the full alternating or symmetric group in its
/// natural action: the order is compared against n! and n!/2, and for the
/// alternating case every generator must be even.
inline SymmetryType recognize_alt_sym(const GeneratedGroup& G) {
    BigCount full = big_factorial(static_cast<unsigned long>(G.degree()));
    BigCount o = G.order();
    if (o == full) return SymmetryType::symmetric;
    if (BigCount(o * 2) == full) {
        for (const Permutation& g : G.generators())
            if (!g.is_even()) return SymmetryType::none;
        return SymmetryType::alternating;
    }
    return SymmetryType::none;
}

/// Canonical representative of the right coset H·x: the unique member
/// minimizing the tuple of base images along H's stabilizer chain.  Two
/// elements represent the same coset exactly when their canonical
/// representatives are equal permutations.
inline Permutation minimal_coset_rep(const GeneratedGroup& H, const Permutation& x) {
    if (x.degree() != H.degree()) throw DegreeMismatch(x.degree(), H.degree());
    Permutation rep = x;
    for (const auto& lv : H.chain().levels()) {
        int best_pos = 0;
        int best_image = rep(lv.orbit[0]);
        for (std::size_t k = 1; k < lv.orbit.size(); ++k) {
            int image = rep(lv.orbit[k]);
            if (image < best_image) {
                best_image = image;
                best_pos = static_cast<int>(k);
            }
        }
        if (best_pos > 0) rep = lv.transversal[static_cast<std::size_t>(best_pos)] * rep;
    }
    return rep;
}

/// Right action of G on the coset space [G:H], with cosets numbered in
/// breadth-first discovery order from H itself (coset 0).
struct CosetAction {
    GeneratedGroup subgroup{0};           // H, used for canonicalization
    int index = 0;                        // |G : H|
    std::vector<Permutation> reps;        // canonical representatives
    std::vector<Permutation> action;      // one induced permutation per G generator
    std::unordered_map<Permutation, int, PermHash> id_of_rep;

    int coset_id(const Permutation& x) const {
        auto it = id_of_rep.find(minimal_coset_rep(subgroup, x));
        if (it == id_of_rep.end()) throw InvalidParameter("element outside the acted group");
        return it->second;
    }
};

inline CosetAction coset_action(const GeneratedGroup& G, const GeneratedGroup& H,
                                const BigCount& max_index) {
    if (!is_subgroup_of(H, G)) throw NotSubgroup("coset action: H is not a subgroup of G");
    BigCount index = G.order() / H.order();
    if (index > max_index)
        throw CapExceeded("coset space of size " + big_str(index) + " exceeds cap " +
                          big_str(max_index));

    CosetAction act;
    act.subgroup = H;
    act.reps.push_back(minimal_coset_rep(H, Permutation(G.degree())));
    act.id_of_rep.emplace(act.reps[0], 0);
    for (std::size_t k = 0; k < act.reps.size(); ++k)
        for (const Permutation& s : G.generators()) {
            Permutation next = minimal_coset_rep(H, act.reps[k] * s);
            if (act.id_of_rep.emplace(next, static_cast<int>(act.reps.size())).second)
                act.reps.push_back(next);
        }
    act.index = static_cast<int>(act.reps.size());
    if (BigCount(static_cast<unsigned long>(act.index)) != index)
        throw Error("coset enumeration disagrees with the order quotient");

    for (const Permutation& s : G.generators()) {
        std::vector<int> images(static_cast<std::size_t>(act.index));
        for (int k = 0; k < act.index; ++k) {
            Permutation moved = minimal_coset_rep(H, act.reps[static_cast<std::size_t>(k)] * s);
            images[static_cast<std::size_t>(k)] = act.id_of_rep.at(moved);
        }
        act.action.push_back(Permutation::from_images(std::move(images)));
    }
    return act;
}

}  // namespace symcay
