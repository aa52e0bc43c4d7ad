#include "striphom/matching.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <tuple>

namespace striphom {

namespace {

bool in_window(const StripPoint& u, const Rat& a1, const Rat& a2) {
    Rat f1 = fauxtan(u.k1(), u.c1());
    Rat f2 = fauxtan(u.k2(), u.c2());
    return a2 <= f1 && f1 <= a1 && a2 <= f2 && f2 <= a1;
}

std::optional<Rat> endpoint_dist(const MatchEntry& e) {
    return dist(e.left.point, e.right.point);
}

Diagram interior_projection(const Matching& m, bool left) {
    Diagram d;
    for (const auto& e : m.entries) {
        const MatchEndpoint& ep = left ? e.left : e.right;
        if (!ep.boundary) d[ep.point] += e.mult;
    }
    return d;
}

// Unit-copy expansion in deterministic (lexicographic, copy index) order.
std::vector<StripPoint> expand(const Diagram& d) {
    std::vector<StripPoint> out;
    for (const auto& [p, m] : d)
        for (long i = 0; i < m; ++i) out.push_back(p);
    return out;
}

struct Kuhn {
    int nl = 0, nr = 0;
    std::vector<std::vector<int>> adj;  // per left node
    std::vector<int> ml, mr;            // matches, -1 if free

    bool augment(int v, std::vector<char>& used) {
        for (int to : adj[v]) {
            if (used[to]) continue;
            used[to] = 1;
            if (mr[to] < 0 || augment(mr[to], used)) {
                ml[v] = to;
                mr[to] = v;
                return true;
            }
        }
        return false;
    }

    bool perfect() {
        ml.assign(nl, -1);
        mr.assign(nr, -1);
        int matched = 0;
        for (int v = 0; v < nl; ++v) {
            std::vector<char> used(nr, 0);
            if (augment(v, used)) ++matched;
        }
        return matched == nl && nl == nr;
    }
};

struct Instance {
    std::vector<StripPoint> L, R;
    std::vector<std::vector<std::optional<Rat>>> dmat;
    std::vector<std::optional<Rat>> dbl_, dbr_;

    explicit Instance(const Diagram& mu, const Diagram& nu)
        : L(expand(mu)), R(expand(nu)) {
        dmat.assign(L.size(), std::vector<std::optional<Rat>>(R.size()));
        for (std::size_t i = 0; i < L.size(); ++i)
            for (std::size_t j = 0; j < R.size(); ++j) dmat[i][j] = dist(L[i], R[j]);
        for (const auto& p : L) dbl_.push_back(dist_to_boundary(p));
        for (const auto& p : R) dbr_.push_back(dist_to_boundary(p));
    }

    // Perfect-matching feasibility at radius delta: each side is padded with
    // one boundary proxy per opposite copy; proxy-proxy pairs are free.
    bool feasible(const Rat& delta, Kuhn* out = nullptr) const {
        int nl = (int)L.size(), nr = (int)R.size();
        Kuhn k;
        k.nl = k.nr = nl + nr;
        k.adj.assign(k.nl, {});
        auto le = [&](const std::optional<Rat>& d) { return d && *d <= delta; };
        for (int i = 0; i < nl; ++i) {
            for (int j = 0; j < nr; ++j)
                if (le(dmat[i][j])) k.adj[i].push_back(j);
            if (le(dbl_[i])) k.adj[i].push_back(nr + i);  // own proxy
        }
        for (int j = 0; j < nr; ++j) {
            if (le(dbr_[j])) k.adj[nl + j].push_back(j);
            for (int i = 0; i < nl; ++i) k.adj[nl + j].push_back(nr + i);
        }
        bool ok = k.perfect();
        if (ok && out) *out = std::move(k);
        return ok;
    }

    Matching reconstruct(const Kuhn& k) const {
        int nl = (int)L.size(), nr = (int)R.size();
        std::map<std::tuple<StripPoint, bool, StripPoint, bool>, long> agg;
        for (int i = 0; i < nl; ++i) {
            int to = k.ml[i];
            if (to < nr)
                agg[{L[i], false, R[to], false}] += 1;
            else
                agg[{L[i], false, nearest_boundary_point(L[i]), true}] += 1;
        }
        for (int j = 0; j < nr; ++j)
            if (k.mr[j] >= nl)
                agg[{nearest_boundary_point(R[j]), true, R[j], false}] += 1;
        Matching m;
        for (const auto& [key, mult] : agg) {
            const auto& [lp, lb, rp, rb] = key;
            m.entries.push_back({{lp, lb}, {rp, rb}, mult});
        }
        return m;
    }
};

}  // namespace

Admissibility check_admissible(const Diagram& d) {
    Admissibility res;
    std::optional<StripPoint> base;
    for (const auto& [p, m] : d) {
        if (m <= 0) {
            res.reason = "nonpositive multiplicity";
            res.witness = p;
            return res;
        }
        if (p.k1() == 0 && p.k2() == 0) {
            if (base || m > 1) {
                res.reason = "more than one base-square point";
                res.witness = p;
                return res;
            }
            if (!(p.c2() <= p.c1())) {
                res.reason = "base-square point above the diagonal";
                res.witness = p;
                return res;
            }
            base = p;
        }
    }
    if (!base) {
        res.reason = "no point in the base square";
        return res;
    }
    Rat a1 = base->c1(), a2 = base->c2();
    for (const auto& [p, m] : d) {
        if (p == *base) continue;
        if (p.k1() < 0 || p.k2() > 0) {
            res.reason = "point outside the down-set region";
            res.witness = p;
            return res;
        }
        if (!in_window(p, a1, a2)) {
            res.reason = "point outside the window of the base point";
            res.witness = p;
            return res;
        }
    }
    res.ok = true;
    res.r_point = base;
    return res;
}

std::optional<Rat> matching_norm(const Matching& m) {
    Rat best(0);
    for (const auto& e : m.entries) {
        std::optional<Rat> d = endpoint_dist(e);
        if (!d) return std::nullopt;
        best = std::max(best, *d);
    }
    return best;
}

bool matching_between(const Matching& m, const Diagram& mu, const Diagram& nu) {
    for (const auto& e : m.entries) {
        if (e.mult <= 0) return false;
        if (e.left.boundary && e.right.boundary) return false;
        if (e.left.boundary && !e.left.point.on_boundary()) return false;
        if (e.right.boundary && !e.right.point.on_boundary()) return false;
    }
    return interior_projection(m, true) == mu && interior_projection(m, false) == nu;
}

BottleneckResult bottleneck_distance(const Diagram& mu, const Diagram& nu) {
    Instance inst(mu, nu);
    std::vector<Rat> cands;
    cands.push_back(Rat(0));
    for (const auto& row : inst.dmat)
        for (const auto& d : row)
            if (d) cands.push_back(*d);
    for (const auto& d : inst.dbl_)
        if (d) cands.push_back(*d);
    for (const auto& d : inst.dbr_)
        if (d) cands.push_back(*d);
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

    // feasibility is monotone in the radius: binary search the least feasible
    int lo = 0, hi = (int)cands.size() - 1, found = -1;
    while (lo <= hi) {
        int mid = (lo + hi) / 2;
        if (inst.feasible(cands[mid])) {
            found = mid;
            hi = mid - 1;
        } else {
            lo = mid + 1;
        }
    }
    BottleneckResult res;
    if (found < 0) return res;  // infinite
    Kuhn k;
    inst.feasible(cands[found], &k);
    res.value = cands[found];
    res.matching = inst.reconstruct(k);
    return res;
}

std::optional<Rat> brute_force_bottleneck(const Diagram& mu, const Diagram& nu) {
    Instance inst(mu, nu);
    if (inst.L.size() > 7 || inst.R.size() > 7)
        throw std::invalid_argument("brute_force_bottleneck: instance too large");
    std::optional<Rat> best;
    std::vector<char> used(inst.R.size(), 0);
    auto better = [&](const Rat& c) { return !best || c < *best; };

    std::function<void(std::size_t, Rat)> rec = [&](std::size_t i, Rat cur) {
        if (best && !better(cur)) return;
        if (i == inst.L.size()) {
            Rat total = cur;
            for (std::size_t j = 0; j < inst.R.size(); ++j) {
                if (used[j]) continue;
                if (!inst.dbr_[j]) return;
                total = std::max(total, *inst.dbr_[j]);
            }
            if (better(total)) best = total;
            return;
        }
        if (inst.dbl_[i]) rec(i + 1, std::max(cur, *inst.dbl_[i]));
        for (std::size_t j = 0; j < inst.R.size(); ++j) {
            if (used[j] || !inst.dmat[i][j]) continue;
            used[j] = 1;
            rec(i + 1, std::max(cur, *inst.dmat[i][j]));
            used[j] = 0;
        }
    };
    rec(0, Rat(0));
    return best;
}

Matching repair_matching(const Matching& m, const Diagram& mu, const Diagram& nu) {
    Admissibility am = check_admissible(mu), an = check_admissible(nu);
    if (!am.ok || !an.ok)
        throw std::invalid_argument("repair_matching: diagrams not admissible");
    if (!matching_between(m, mu, nu))
        throw std::invalid_argument("repair_matching: not a matching between the diagrams");

    auto fix = [](const MatchEndpoint& bnd, const StripPoint& partner, const Rat& a1,
                  const Rat& a2) -> MatchEndpoint {
        if (in_window(bnd.point, a1, a2)) return bnd;
        // antidiagonal parameter nearest to the interior partner, clamped
        // into the window segment of this boundary component
        long k1 = bnd.point.k1(), k2 = bnd.point.k2();
        Rat t0 = (partner.k1() == k1 && partner.k2() == k2)
                     ? (partner.c1() - partner.c2()) / 2
                     : bnd.point.c1();
        Rat lo = (k1 % 2 == 0) ? a2 : -a1;
        Rat hi = (k1 % 2 == 0) ? a1 : -a2;
        Rat t = std::min(std::max(t0, lo), hi);
        return {StripPoint(k1, k2, t, -t), true};
    };

    Rat mu_a1 = am.r_point->c1(), mu_a2 = am.r_point->c2();
    Rat nu_a1 = an.r_point->c1(), nu_a2 = an.r_point->c2();
    Matching out = m;
    for (auto& e : out.entries) {
        if (e.right.boundary) e.right = fix(e.right, e.left.point, nu_a1, nu_a2);
        if (e.left.boundary) e.left = fix(e.left, e.right.point, mu_a1, mu_a2);
    }
    return out;
}

}  // namespace striphom
