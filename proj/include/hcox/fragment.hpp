#pragma once

// Quasicrystal fragments Q_k(n): word-closure generation, the root-sum
// construction used as an independent oracle, dominant points, orbits,
// shells, and the planar (cyclotomic) view of H2 fragments.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

#include "hcox/affine.hpp"
#include "hcox/golden.hpp"
#include "hcox/rootsystem.hpp"

namespace hcox {

inline constexpr std::size_t kDefaultCap = 10'000'000;

struct Fragment {
    enum class Method { word_bfs, root_sum };

    GroupId group = GroupId::H2;
    int n = 0;
    std::vector<OmegaVector> points;  // canonical order
    Method method = Method::word_bfs;

    std::size_t size() const { return points.size(); }
    bool contains(const OmegaVector& v) const { return std::binary_search(points.begin(), points.end(), v); }
};

inline Fragment generate(GroupId g, int n, std::size_t cap = kDefaultCap) {
    return {g, n, word_closure(g, n, cap), Fragment::Method::word_bfs};
}

/// All sums of at most n roots, deduplicated.
inline Fragment generate_rootsum(GroupId g, int n, std::size_t cap = kDefaultCap) {
    if (n < 0) throw std::invalid_argument("hcox: cut-off must be non-negative");
    const auto& rs = roots_omega(g);
    OmegaSet all{OmegaVector::zero(g)};
    std::vector<OmegaVector> level{OmegaVector::zero(g)};  // sums of exactly m roots
    for (int m = 1; m <= n; ++m) {
        OmegaSet next;
        for (const auto& v : level)
            for (const auto& r : rs) next.insert(v + r);
        level.assign(next.begin(), next.end());
        all.insert(level.begin(), level.end());
        if (all.size() > cap)
            throw ResourceLimitError("hcox: point count " + std::to_string(all.size()) + " exceeds cap " +
                                     std::to_string(cap));
    }
    std::vector<OmegaVector> pts(all.begin(), all.end());
    std::sort(pts.begin(), pts.end());
    return {g, n, std::move(pts), Fragment::Method::root_sum};
}

struct DominantResult {
    OmegaVector dominant;
    std::vector<std::size_t> word;  // reflection indices (1-based), in application order
};

/// Applies r_i at the first negative coordinate until the point is dominant.
inline DominantResult to_dominant(OmegaVector v) {
    DominantResult r;
    for (;;) {
        std::size_t i = 0;
        while (i < v.size() && v[i].sign() != Sign::negative) ++i;
        if (i == v.size()) break;
        v = reflect(v, i);
        r.word.push_back(i + 1);
    }
    r.dominant = std::move(v);
    return r;
}

/// The H_k orbit of a point, canonically sorted.
inline std::vector<OmegaVector> orbit_of(const OmegaVector& v) { return reflection_closure({v}); }

struct OrbitRecord {
    OmegaVector dominant;
    std::size_t size = 0;
    std::vector<OmegaVector> members;
};

/// Partition into orbits keyed by dominant point, sorted by dominant point.
inline std::vector<OrbitRecord> orbits(const Fragment& f) {
    std::map<OmegaVector, std::vector<OmegaVector>> groups;
    for (const auto& p : f.points) groups[to_dominant(p).dominant].push_back(p);
    std::vector<OrbitRecord> out;
    out.reserve(groups.size());
    for (auto& [dom, members] : groups) out.push_back({dom, members.size(), std::move(members)});
    return out;
}

struct Shell {
    GoldenRational norm_sq;
    std::vector<OmegaVector> members;
};

/// Partition by exact squared norm, ascending.
inline std::vector<Shell> shells(const Fragment& f) {
    std::vector<Shell> out;
    for (const auto& p : f.points) {
        const auto ns = norm_sq(p);
        auto it = std::find_if(out.begin(), out.end(), [&](const Shell& s) { return s.norm_sq == ns; });
        if (it == out.end())
            out.push_back({ns, {p}});
        else
            it->members.push_back(p);
    }
    std::sort(out.begin(), out.end(), [](const Shell& x, const Shell& y) { return real_less(x.norm_sq, y.norm_sq); });
    return out;
}

// --- planar view of H2 -----------------------------------------------------
// The simple roots are alpha_1 = xi^0 and alpha_2 = xi^4 = -tau + xi.

/// Omega coordinates of an H2 point to p + q xi. Requires integral alpha coordinates.
inline CycloInt to_cyclo(const OmegaVector& v) {
    if (v.group != GroupId::H2) throw std::invalid_argument("hcox: cyclotomic view exists for H2 only");
    const auto a = alpha_integral(v);
    if (!a) throw std::domain_error("hcox: point " + v.str() + " is not in the root module");
    const GoldenInt c1 = a->coords[0];
    const GoldenInt c2 = a->coords[1];
    return {c1 - GoldenInt::tau() * c2, c2};
}

inline OmegaVector from_cyclo(const CycloInt& x) {
    // x = c1 + c2 xi^4 with c2 = q and c1 = p + tau q
    const AlphaVector a{GroupId::H2, {x.p() + GoldenInt::tau() * x.q(), x.q()}};
    return omega_from_alpha(a);
}

inline std::vector<CycloInt> cyclo_points(const Fragment& f) {
    std::vector<CycloInt> out;
    out.reserve(f.size());
    for (const auto& p : f.points) out.push_back(to_cyclo(p));
    std::sort(out.begin(), out.end());
    return out;
}

/// Exact invariance of the planar image under multiplication by xi.
inline bool check_tenfold(const std::vector<CycloInt>& pts) {
    const std::unordered_set<CycloInt> set(pts.begin(), pts.end());
    const CycloInt xi = CycloInt::xi();
    return std::all_of(pts.begin(), pts.end(), [&](const CycloInt& x) { return set.count(x * xi) > 0; });
}

inline bool check_tenfold(const Fragment& f) {
    if (f.group != GroupId::H2) throw std::invalid_argument("hcox: ten-fold check applies to H2 fragments");
    return check_tenfold(cyclo_points(f));
}

}  // namespace hcox
