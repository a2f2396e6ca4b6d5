#pragma once

// Affine extensions: extended Cartan matrices, reflection/translation
// operators in the omega basis, the Coxeter relations, enumeration of
// generalized Cartan matrices, and the breadth-first word closure that
// builds fragments.

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "hcox/golden.hpp"
#include "hcox/matrix.hpp"
#include "hcox/rootsystem.hpp"

namespace hcox {

/// Thrown when a point set would exceed its configured cap.
class ResourceLimitError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Cartan matrix with alpha_0 = -alpha_H adjoined as index 0.
/// Since 2(alpha_H|alpha_j) is the j-th omega coordinate of alpha_H (both
/// normalisations), a_0j = -h_j.
inline CartanMatrix extended_cartan(GroupId g) {
    const auto base = cartan(g).entries;
    const auto h = highest_root_omega(g);
    const std::size_t k = rank(g);
    GoldenMatrix m(k + 1, k + 1);
    m(0, 0) = 2;
    for (std::size_t j = 0; j < k; ++j) {
        m(0, j + 1) = -h[j];
        m(j + 1, 0) = -h[j];
        for (std::size_t i = 0; i < k; ++i) m(i + 1, j + 1) = base(i, j);
    }
    return {g, true, m};
}

struct ConditionReport {
    bool diagonal_two = false;
    bool symmetric = false;
    bool off_diagonal_nonpositive = false;
    bool det_zero = false;
    GoldenInt det;

    bool all() const { return diagonal_two && symmetric && off_diagonal_nonpositive && det_zero; }
};

/// a_ii = 2, a_ij = a_ji, a_ij in Z[tau]^- (i != j), det = 0.
inline ConditionReport verify_conditions(const CartanMatrix& m) {
    ConditionReport r;
    const auto& e = m.entries;
    const std::size_t n = e.rows();
    r.diagonal_two = true;
    r.symmetric = true;
    r.off_diagonal_nonpositive = true;
    for (std::size_t i = 0; i < n; ++i) {
        if (e(i, i) != GoldenInt{2}) r.diagonal_two = false;
        for (std::size_t j = 0; j < n; ++j) {
            if (e(i, j) != e(j, i)) r.symmetric = false;
            if (i != j && e(i, j).sign() == Sign::positive) r.off_diagonal_nonpositive = false;
        }
    }
    r.det = determinant(e);
    r.det_zero = r.det.is_zero();
    return r;
}

/// v -> matrix * v + offset, all in omega coordinates.
struct AffineOperator {
    enum class Kind { reflection, root_reflection, affine_reflection, translation, composite };

    GroupId group = GroupId::H2;
    Kind kind = Kind::composite;
    std::size_t index = 0;  // simple-reflection index, 0-based
    GoldenMatrix matrix;
    std::vector<GoldenInt> offset;

    OmegaVector operator()(const OmegaVector& v) const {
        OmegaVector r{group, matrix * v.coords};
        for (std::size_t i = 0; i < r.size(); ++i) r.coords[i] += offset[i];
        return r;
    }

    /// (this o other)(v) = this(other(v))
    AffineOperator then_after(const AffineOperator& other) const {
        AffineOperator r{group, Kind::composite, 0, matrix * other.matrix, matrix * other.offset};
        for (std::size_t i = 0; i < r.offset.size(); ++i) r.offset[i] += offset[i];
        return r;
    }

    bool is_identity() const {
        if (matrix != GoldenMatrix::identity(matrix.rows())) return false;
        return std::all_of(offset.begin(), offset.end(), [](GoldenInt x) { return x.is_zero(); });
    }

    std::string label() const {
        switch (kind) {
            case Kind::reflection: return "r" + std::to_string(index + 1);
            case Kind::root_reflection: return "r0";
            case Kind::affine_reflection: return "r_H^aff";
            case Kind::translation: return "T";
            case Kind::composite: return "composite";
        }
        return "?";
    }

    friend bool operator==(const AffineOperator& x, const AffineOperator& y) {
        return x.matrix == y.matrix && x.offset == y.offset;
    }
};

inline AffineOperator affine_identity(GroupId g) {
    return {g, AffineOperator::Kind::composite, 0, GoldenMatrix::identity(rank(g)),
            std::vector<GoldenInt>(rank(g))};
}

inline AffineOperator power(const AffineOperator& op, unsigned e) {
    AffineOperator r = affine_identity(op.group);
    for (unsigned i = 0; i < e; ++i) r = op.then_after(r);
    return r;
}

/// Simple reflection r_{j+1}: column j of the identity replaced by -alpha_j.
inline AffineOperator simple_reflection(GroupId g, std::size_t j) {
    const auto a = cartan(g).entries;
    const std::size_t k = rank(g);
    GoldenMatrix m = GoldenMatrix::identity(k);
    for (std::size_t i = 0; i < k; ++i) m(i, j) -= a(j, i);
    return {g, AffineOperator::Kind::reflection, j, m, std::vector<GoldenInt>(k)};
}

/// r0 v = v - 2(v|alpha_H) alpha_H; 2(v|alpha_H) = sum_i v_i c_i with c the
/// alpha coordinates of alpha_H (H-type). For A2 the factor is (v|alpha_H).
inline AffineOperator root_reflection(GroupId g) {
    const std::size_t k = rank(g);
    const auto h = highest_root_omega(g);
    const auto c = highest_root(g).coords;
    GoldenMatrix m = GoldenMatrix::identity(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m(i, j) -= h[i] * c[j];
    return {g, AffineOperator::Kind::root_reflection, 0, m, std::vector<GoldenInt>(k)};
}

/// r_H^aff v = v + {1 - 2(v|alpha_H)} alpha_H = r0 v + alpha_H.
inline AffineOperator affine_reflection(GroupId g) {
    auto r = root_reflection(g);
    r.kind = AffineOperator::Kind::affine_reflection;
    r.offset = highest_root_omega(g).coords;
    return r;
}

/// T v = v + alpha_H.
inline AffineOperator translation(GroupId g) {
    return {g, AffineOperator::Kind::translation, 0, GoldenMatrix::identity(rank(g)), highest_root_omega(g).coords};
}

/// r1..rk, and with `extended` also r0, r_H^aff and T.
inline std::vector<AffineOperator> operators(GroupId g, bool extended) {
    std::vector<AffineOperator> ops;
    for (std::size_t j = 0; j < rank(g); ++j) ops.push_back(simple_reflection(g, j));
    if (extended) {
        ops.push_back(root_reflection(g));
        ops.push_back(affine_reflection(g));
        ops.push_back(translation(g));
    }
    return ops;
}

/// Coxeter exponent M for a Cartan entry: 2 -> 1, 0 -> 2, -1 -> 3, -tau or tau' -> 5.
inline std::optional<unsigned> coxeter_exponent(GoldenInt a) {
    if (a == GoldenInt{2}) return 1;
    if (a == GoldenInt{0}) return 2;
    if (a == GoldenInt{-1}) return 3;
    if (a == -GoldenInt::tau() || a == GoldenInt::tau_conj()) return 5;
    return std::nullopt;
}

struct IdentityCheck {
    std::string left;
    std::string right;
    GoldenInt cartan_entry;
    unsigned expected = 0;  // M
    unsigned found = 0;     // smallest m <= search bound with (r_j r_k)^m = 1, 0 if none
    bool ok = false;
};

/// (r_j r_k)^M = 1 with M minimal, for all generator pairs. In the extended
/// system generator 0 is the affine reflection r_H^aff.
inline std::vector<IdentityCheck> verify_identities(GroupId g, bool extended) {
    std::vector<AffineOperator> gens;
    CartanMatrix cm = extended ? extended_cartan(g) : cartan(g);
    if (extended) gens.push_back(affine_reflection(g));
    for (std::size_t j = 0; j < rank(g); ++j) gens.push_back(simple_reflection(g, j));

    std::vector<IdentityCheck> out;
    for (std::size_t j = 0; j < gens.size(); ++j)
        for (std::size_t k = j; k < gens.size(); ++k) {
            IdentityCheck c;
            c.left = extended && j == 0 ? "r0" : "r" + std::to_string(extended ? j : j + 1);
            c.right = extended && k == 0 ? "r0" : "r" + std::to_string(extended ? k : k + 1);
            c.cartan_entry = cm.entries(j, k);
            const auto m = coxeter_exponent(c.cartan_entry);
            c.expected = m.value_or(0);
            const AffineOperator prod = gens[j].then_after(gens[k]);
            AffineOperator acc = affine_identity(g);
            const unsigned bound = std::max(c.expected, 10u);
            for (unsigned e = 1; e <= bound; ++e) {
                acc = prod.then_after(acc);
                if (acc.is_identity()) {
                    c.found = e;
                    break;
                }
            }
            c.ok = m.has_value() && c.found == c.expected;
            out.push_back(c);
        }
    return out;
}

/// A generalized Cartan matrix from the bordered templates: the first row and
/// column carry a, b (, c, d) = x1 + tau x2 over the fixed Cartan block.
struct CartanCandidate {
    std::vector<Int> coefficients;  // a1, a2, b1, b2, ...
    CartanMatrix matrix;
    bool positive_semidefinite = false;

    bool off_diagonal_nonpositive() const {
        for (std::size_t i = 0; i + 1 < coefficients.size(); i += 2)
            if (GoldenInt(coefficients[i], coefficients[i + 1]).sign() == Sign::positive) return false;
        return true;
    }
};

inline CartanMatrix assemble_candidate(GroupId g, const std::vector<Int>& coeffs) {
    if (!is_h_type(g)) throw std::invalid_argument("hcox: generalized Cartan templates exist for H2, H3, H4");
    const std::size_t k = rank(g);
    if (coeffs.size() != 2 * k) throw std::invalid_argument("hcox: wrong coefficient count");
    const auto base = cartan(g).entries;
    GoldenMatrix m(k + 1, k + 1);
    m(0, 0) = 2;
    for (std::size_t j = 0; j < k; ++j) {
        const GoldenInt x{coeffs[2 * j], coeffs[2 * j + 1]};
        m(0, j + 1) = x;
        m(j + 1, 0) = x;
        for (std::size_t i = 0; i < k; ++i) m(i + 1, j + 1) = base(i, j);
    }
    return {g, true, m};
}

/// All principal minors non-negative.
inline bool is_positive_semidefinite(const GoldenMatrix& m) {
    const std::size_t n = m.rows();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) keep.push_back(i);
        if (determinant(m.submatrix(keep)).sign() == Sign::negative) return false;
    }
    return true;
}

struct EnumerationResult {
    GroupId group = GroupId::H2;
    Int coeff_bound = 3;
    std::vector<CartanCandidate> candidates;  // det = 0, sorted lexicographically

    std::size_t psd_count() const {
        return static_cast<std::size_t>(std::count_if(candidates.begin(), candidates.end(),
                                                      [](const auto& c) { return c.positive_semidefinite; }));
    }
    bool contains(const std::vector<Int>& coeffs) const {
        return std::binary_search(candidates.begin(), candidates.end(), CartanCandidate{coeffs, {}, false},
                                  [](const auto& x, const auto& y) { return x.coefficients < y.coefficients; });
    }
};

/// Every coefficient tuple with |x| <= coeff_bound whose bordered matrix has
/// exact determinant 0. Parallel over the leading coefficient; the merged
/// output is sorted, so it does not depend on the thread count.
inline EnumerationResult enumerate_generalized(GroupId g, Int coeff_bound, unsigned threads = 0) {
    if (coeff_bound < 0) throw std::invalid_argument("hcox: negative coefficient bound");
    const std::size_t dims = 2 * rank(g);
    const Int width = 2 * coeff_bound + 1;
    Int total = 1;
    for (std::size_t i = 0; i < dims; ++i) total = checked::mul(total, width);
    const Int per_lead = total / width;

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<Int>(threads, width));

    std::vector<std::vector<CartanCandidate>> buckets(static_cast<std::size_t>(width));
    std::atomic<Int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        try {
            for (Int lead = next++; lead < width; lead = next++) {
                std::vector<Int> coeffs(dims);
                auto& bucket = buckets[static_cast<std::size_t>(lead)];
                for (Int idx = 0; idx < per_lead; ++idx) {
                    Int rest = idx;
                    coeffs[0] = lead - coeff_bound;
                    for (std::size_t d = dims; d-- > 1;) {
                        coeffs[d] = rest % width - coeff_bound;
                        rest /= width;
                    }
                    auto m = assemble_candidate(g, coeffs);
                    if (!determinant(m.entries).is_zero()) continue;
                    const bool psd = is_positive_semidefinite(m.entries);
                    bucket.push_back({coeffs, std::move(m), psd});
                }
            }
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);

    EnumerationResult r{g, coeff_bound, {}};
    for (auto& b : buckets)
        for (auto& c : b) r.candidates.push_back(std::move(c));
    std::sort(r.candidates.begin(), r.candidates.end(),
              [](const auto& x, const auto& y) { return x.coefficients < y.coefficients; });
    return r;
}

/// Reflection closure of a set of points under r1..rk, canonically sorted.
inline std::vector<OmegaVector> reflection_closure(const std::vector<OmegaVector>& seeds) {
    return detail::reflection_closure_of(seeds);
}

/// Word closure: level 0 is the reflection closure of the origin, level m+1
/// the reflection closure of T applied to level m. Returns the union over
/// m <= n, canonically sorted.
inline std::vector<OmegaVector> word_closure(GroupId g, int n, std::size_t cap = 10'000'000) {
    if (n < 0) throw std::invalid_argument("hcox: cut-off must be non-negative");
    const auto t = translation(g);
    std::vector<OmegaVector> level = reflection_closure({OmegaVector::zero(g)});
    OmegaSet all(level.begin(), level.end());
    for (int m = 1; m <= n; ++m) {
        std::vector<OmegaVector> shifted;
        shifted.reserve(level.size());
        for (const auto& v : level) shifted.push_back(t(v));
        level = reflection_closure(shifted);
        all.insert(level.begin(), level.end());
        if (all.size() > cap)
            throw ResourceLimitError("hcox: point count " + std::to_string(all.size()) + " exceeds cap " +
                                     std::to_string(cap));
    }
    std::vector<OmegaVector> out(all.begin(), all.end());
    std::sort(out.begin(), out.end());
    return out;
}

/// The A2 analogue of the fragment construction; every point lies in the root lattice.
inline std::vector<OmegaVector> a2_lattice_demo(int n) { return word_closure(GroupId::A2, n); }

}  // namespace hcox
