#pragma once

// Root systems of A2, H2, H3, H4: Cartan data, basis changes between the
// simple-root (alpha) basis and the fundamental-weight (omega) basis, and
// exact squared norms.
//
// Conventions: H-type simple roots have unit length and 2(alpha_j|omega_k) =
// delta_jk, so a simple reflection acts as r_j v = v - v_j alpha_j with alpha_j
// given by row j of the Cartan matrix. A2 uses the Lie convention
// (alpha|alpha) = 2, (alpha_j|omega_k) = delta_jk, which gives the same
// reflection formula.

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "hcox/golden.hpp"
#include "hcox/matrix.hpp"

namespace hcox {

enum class GroupId { A2, H2, H3, H4 };

inline constexpr std::array<GroupId, 4> kAllGroups{GroupId::A2, GroupId::H2, GroupId::H3, GroupId::H4};
inline constexpr std::array<GroupId, 3> kHGroups{GroupId::H2, GroupId::H3, GroupId::H4};

constexpr std::size_t rank(GroupId g) {
    switch (g) {
        case GroupId::A2:
        case GroupId::H2: return 2;
        case GroupId::H3: return 3;
        case GroupId::H4: return 4;
    }
    return 0;
}

/// Order of the finite reflection group (H4: 14400).
constexpr std::size_t group_order(GroupId g) {
    switch (g) {
        case GroupId::A2: return 6;
        case GroupId::H2: return 10;
        case GroupId::H3: return 120;
        case GroupId::H4: return 14400;
    }
    return 0;
}

constexpr bool is_h_type(GroupId g) { return g != GroupId::A2; }

inline std::string_view name(GroupId g) {
    switch (g) {
        case GroupId::A2: return "A2";
        case GroupId::H2: return "H2";
        case GroupId::H3: return "H3";
        case GroupId::H4: return "H4";
    }
    return "?";
}

inline std::optional<GroupId> parse_group(std::string_view s) {
    std::string lower(s);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    if (lower == "a2") return GroupId::A2;
    if (lower == "h2") return GroupId::H2;
    if (lower == "h3") return GroupId::H3;
    if (lower == "h4") return GroupId::H4;
    return std::nullopt;
}

struct CartanMatrix {
    GroupId group = GroupId::H2;
    bool extended = false;
    GoldenMatrix entries;

    std::size_t size() const { return entries.rows(); }
    friend bool operator==(const CartanMatrix&, const CartanMatrix&) = default;
};

/// A point in omega-basis coordinates.
struct OmegaVector {
    GroupId group = GroupId::H2;
    std::vector<GoldenInt> coords;

    static OmegaVector zero(GroupId g) { return {g, std::vector<GoldenInt>(rank(g))}; }

    std::size_t size() const { return coords.size(); }
    const GoldenInt& operator[](std::size_t i) const { return coords[i]; }
    GoldenInt& operator[](std::size_t i) { return coords[i]; }

    bool is_zero() const {
        return std::all_of(coords.begin(), coords.end(), [](GoldenInt x) { return x.is_zero(); });
    }
    /// All omega-coordinates non-negative.
    bool is_dominant() const {
        return std::none_of(coords.begin(), coords.end(), [](GoldenInt x) { return x.sign() == Sign::negative; });
    }

    friend OmegaVector operator+(const OmegaVector& x, const OmegaVector& y) {
        OmegaVector r = x;
        for (std::size_t i = 0; i < r.size(); ++i) r.coords[i] += y.coords[i];
        return r;
    }
    friend OmegaVector operator-(const OmegaVector& x) {
        OmegaVector r = x;
        for (auto& c : r.coords) c = -c;
        return r;
    }
    friend OmegaVector operator*(GoldenInt s, const OmegaVector& x) {
        OmegaVector r = x;
        for (auto& c : r.coords) c *= s;
        return r;
    }

    friend bool operator==(const OmegaVector& x, const OmegaVector& y) { return x.coords == y.coords; }
    /// Canonical order: lexicographic on (a1, b1, a2, b2, ...).
    friend auto operator<=>(const OmegaVector& x, const OmegaVector& y) { return x.coords <=> y.coords; }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < coords.size(); ++i) s += (i ? ", " : "") + coords[i].str();
        return s + ")";
    }
};

/// A point in simple-root coordinates.
struct AlphaVector {
    GroupId group = GroupId::H2;
    std::vector<GoldenInt> coords;

    friend bool operator==(const AlphaVector& x, const AlphaVector& y) { return x.coords == y.coords; }
    friend auto operator<=>(const AlphaVector& x, const AlphaVector& y) { return x.coords <=> y.coords; }
};

struct OmegaHash {
    std::size_t operator()(const OmegaVector& v) const noexcept {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (const auto& c : v.coords) h = (h ^ std::hash<GoldenInt>{}(c)) * 0x100000001b3ULL;
        return h;
    }
};

using OmegaSet = std::unordered_set<OmegaVector, OmegaHash>;

inline CartanMatrix cartan(GroupId g) {
    const GoldenInt t = GoldenInt::tau();
    switch (g) {
        case GroupId::A2: return {g, false, {{2, -1}, {-1, 2}}};
        case GroupId::H2: return {g, false, {{2, -t}, {-t, 2}}};
        case GroupId::H3: return {g, false, {{2, -1, 0}, {-1, 2, -t}, {0, -t, 2}}};
        case GroupId::H4: return {g, false, {{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -1, 2, -t}, {0, 0, -t, 2}}};
    }
    throw std::invalid_argument("hcox: unknown group");
}

inline const RationalMatrix& cartan_inverse(GroupId g) {
    static const std::array<RationalMatrix, 4> table = [] {
        std::array<RationalMatrix, 4> t;
        for (GroupId id : kAllGroups) t[static_cast<std::size_t>(id)] = inverse(to_rational(cartan(id).entries));
        return t;
    }();
    return table[static_cast<std::size_t>(g)];
}

/// Simple root alpha_j in omega coordinates (row j of the Cartan matrix).
inline OmegaVector simple_root(GroupId g, std::size_t j) { return {g, cartan(g).entries.row(j)}; }

/// r_j v = v - v_j alpha_j
inline OmegaVector reflect(const OmegaVector& v, std::size_t j) {
    static thread_local std::array<GoldenMatrix, 4> cache;
    auto& a = cache[static_cast<std::size_t>(v.group)];
    if (a.rows() == 0) a = cartan(v.group).entries;
    OmegaVector r = v;
    const GoldenInt vj = v.coords[j];
    if (vj.is_zero()) return r;
    for (std::size_t i = 0; i < r.size(); ++i)
        if (!a(j, i).is_zero()) r.coords[i] -= vj * a(j, i);
    return r;
}

inline OmegaVector omega_from_alpha(const AlphaVector& v) {
    const auto a = cartan(v.group).entries;
    OmegaVector r = OmegaVector::zero(v.group);
    for (std::size_t j = 0; j < v.coords.size(); ++j)
        for (std::size_t i = 0; i < r.size(); ++i) r.coords[i] += v.coords[j] * a(j, i);
    return r;
}

inline std::vector<GoldenRational> alpha_from_omega(const OmegaVector& v) {
    const auto& inv = cartan_inverse(v.group);
    std::vector<GoldenRational> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) r[i] += inv(i, j) * GoldenRational{v.coords[j]};
    return r;
}

/// Alpha coordinates when all of them lie in Z[tau].
inline std::optional<AlphaVector> alpha_integral(const OmegaVector& v) {
    AlphaVector r{v.group, {}};
    for (const auto& c : alpha_from_omega(v)) {
        if (!c.is_integral()) return std::nullopt;
        r.coords.push_back(c.num());
    }
    return r;
}

/// Exact (v|v) from the inverse-Cartan quadratic form.
inline GoldenRational norm_sq(const OmegaVector& v) {
    const auto& inv = cartan_inverse(v.group);
    GoldenRational s;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!v.coords[i].is_zero() && !v.coords[j].is_zero())
                s += inv(i, j) * GoldenRational{v.coords[i] * v.coords[j]};
    return is_h_type(v.group) ? s * GoldenRational{GoldenInt{1}, 2} : s;
}

namespace detail {

inline std::vector<OmegaVector> reflection_closure_of(const std::vector<OmegaVector>& seeds) {
    if (seeds.empty()) return {};
    const std::size_t k = seeds.front().size();
    OmegaSet seen(seeds.begin(), seeds.end());
    std::vector<OmegaVector> frontier(seen.begin(), seen.end());
    while (!frontier.empty()) {
        std::vector<OmegaVector> next;
        for (const auto& v : frontier)
            for (std::size_t j = 0; j < k; ++j) {
                auto w = reflect(v, j);
                if (seen.insert(w).second) next.push_back(std::move(w));
            }
        frontier = std::move(next);
    }
    std::vector<OmegaVector> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

/// The full root system, generated by reflection closure of the simple roots,
/// in alpha coordinates, canonically sorted.
inline const std::vector<AlphaVector>& roots(GroupId g) {
    static const std::array<std::vector<AlphaVector>, 4> table = [] {
        std::array<std::vector<AlphaVector>, 4> t;
        for (GroupId id : kAllGroups) {
            std::vector<OmegaVector> seeds;
            for (std::size_t j = 0; j < rank(id); ++j) seeds.push_back(simple_root(id, j));
            auto& out = t[static_cast<std::size_t>(id)];
            for (const auto& w : detail::reflection_closure_of(seeds)) {
                auto a = alpha_integral(w);
                if (!a) throw std::logic_error("hcox: root with non-integral alpha coordinates");
                out.push_back(*a);
            }
            std::sort(out.begin(), out.end());
        }
        return t;
    }();
    return table[static_cast<std::size_t>(g)];
}

/// Roots in omega coordinates, canonically sorted.
inline const std::vector<OmegaVector>& roots_omega(GroupId g) {
    static const std::array<std::vector<OmegaVector>, 4> table = [] {
        std::array<std::vector<OmegaVector>, 4> t;
        for (GroupId id : kAllGroups) {
            auto& out = t[static_cast<std::size_t>(id)];
            for (const auto& a : roots(id)) out.push_back(omega_from_alpha(a));
            std::sort(out.begin(), out.end());
        }
        return t;
    }();
    return table[static_cast<std::size_t>(g)];
}

/// The unique dominant root.
inline AlphaVector highest_root(GroupId g) {
    for (const auto& a : roots(g))
        if (omega_from_alpha(a).is_dominant()) return a;
    throw std::logic_error("hcox: no dominant root");
}

inline OmegaVector highest_root_omega(GroupId g) { return omega_from_alpha(highest_root(g)); }

/// Orthonormal models of the simple roots (H3, H4) used for Cartesian output.
inline std::vector<std::vector<double>> simple_roots_cartesian(GroupId g) {
    const double t = kTau;
    const double tp = kTauConj;
    switch (g) {
        case GroupId::A2:
            return {{std::sqrt(2.0), 0.0}, {-std::sqrt(2.0) / 2.0, std::sqrt(6.0) / 2.0}};
        case GroupId::H2:
            return {{1.0, 0.0}, {std::cos(4.0 * M_PI / 5.0), std::sin(4.0 * M_PI / 5.0)}};
        case GroupId::H3:
            return {{0.0, 0.0, 1.0}, {-tp / 2.0, -t / 2.0, -0.5}, {0.0, 1.0, 0.0}};
        case GroupId::H4:
            return {{-tp / 2.0, -t / 2.0, 0.0, -0.5},
                    {0.0, -tp / 2.0, -t / 2.0, 0.5},
                    {0.0, 0.5, -tp / 2.0, -t / 2.0},
                    {0.0, -0.5, -tp / 2.0, t / 2.0}};
    }
    return {};
}

/// Cartesian coordinates. H2 uses x = ((0, r), (1, tau/2)) v with
/// r = sqrt(1 - tau^2/4); that map sends roots to length sqrt(3 - tau), so
/// `normalize` divides it out. The other groups expand the alpha
/// coordinates against the orthonormal simple-root models and ignore the flag.
inline std::vector<double> cartesian(const OmegaVector& v, bool normalize = true) {
    if (v.group == GroupId::H2) {
        const double r = std::sqrt(1.0 - kTau * kTau / 4.0);
        const double v1 = v.coords[0].value();
        const double v2 = v.coords[1].value();
        std::vector<double> x{r * v2, v1 + kTau / 2.0 * v2};
        if (normalize) {
            const double s = std::sqrt(3.0 - kTau);
            x[0] /= s;
            x[1] /= s;
        }
        return x;
    }
    const auto basis = simple_roots_cartesian(v.group);
    const auto alpha = alpha_from_omega(v);
    std::vector<double> x(basis.front().size(), 0.0);
    for (std::size_t j = 0; j < alpha.size(); ++j)
        for (std::size_t i = 0; i < x.size(); ++i) x[i] += alpha[j].value() * basis[j][i];
    return x;
}

}  // namespace hcox
