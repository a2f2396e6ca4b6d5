#pragma once

// Named self-checks behind `hcox verify`. Each suite returns one result per
// item; a suite passes when all its items pass. Items with `informational`
// set report data (e.g. table extras) and never fail.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hcox/affine.hpp"
#include "hcox/cutproject.hpp"
#include "hcox/fragment.hpp"
#include "hcox/lineanalysis.hpp"
#include "hcox/rootsystem.hpp"

namespace hcox {

struct CheckResult {
    std::string suite;
    std::string item;
    bool ok = false;
    std::string detail;
    bool informational = false;
};

struct VerifyConfig {
    Int coeff_bound = 3;
    std::filesystem::path fixtures_dir;
    std::size_t cap = kDefaultCap;
};

using CoeffRow = std::vector<Int>;

/// Whitespace-separated integer rows; blank lines and '#' comments are skipped.
inline std::vector<CoeffRow> load_table(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("hcox: cannot open " + path.string());
    std::vector<CoeffRow> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
        std::istringstream ss(line);
        CoeffRow r;
        for (Int x; ss >> x;) r.push_back(x);
        if (!ss.eof()) throw std::runtime_error("hcox: malformed row in " + path.string() + ": " + line);
        if (!r.empty()) rows.push_back(std::move(r));
    }
    return rows;
}

inline std::string row_str(const CoeffRow& r) {
    std::string s = "(";
    for (std::size_t i = 0; i < r.size(); ++i) s += (i ? " " : "") + std::to_string(r[i]);
    return s + ")";
}

struct TableDiff {
    std::vector<CoeffRow> missing;  // in the table, not enumerated
    std::vector<CoeffRow> extra;    // enumerated, not in the table
};

inline TableDiff diff_table(const EnumerationResult& e, std::vector<CoeffRow> table) {
    std::sort(table.begin(), table.end());
    TableDiff d;
    for (const auto& r : table)
        if (!e.contains(r)) d.missing.push_back(r);
    for (const auto& c : e.candidates)
        if (!std::binary_search(table.begin(), table.end(), c.coefficients)) d.extra.push_back(c.coefficients);
    return d;
}

namespace detail {

inline CheckResult item(std::string suite, std::string name, bool ok, std::string detail = {}) {
    return {std::move(suite), std::move(name), ok, std::move(detail), false};
}

inline std::string fixture_name(GroupId g) {
    std::string s = "appendix_a_";
    for (char c : name(g)) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s + ".txt";
}

inline const EnumerationResult& cached_enumeration(GroupId g, Int bound) {
    static std::map<std::pair<GroupId, Int>, EnumerationResult> cache;
    auto key = std::make_pair(g, bound);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, enumerate_generalized(g, bound)).first;
    return it->second;
}

inline std::vector<CheckResult> check_identities(const VerifyConfig&) {
    std::vector<CheckResult> out;
    for (GroupId g : kHGroups)
        for (bool ext : {false, true})
            for (const auto& c : verify_identities(g, ext)) {
                std::string label = std::string(name(g)) + (ext ? "^aff " : " ") + "(" + c.left + " " + c.right +
                                    ")^" + std::to_string(c.expected);
                out.push_back(item("identities", label, c.ok,
                                   "a=" + c.cartan_entry.str() + " order found " + std::to_string(c.found)));
            }
    return out;
}

inline std::vector<CheckResult> check_cartan(const VerifyConfig& cfg) {
    std::vector<CheckResult> out;
    for (GroupId g : kAllGroups) {
        const auto m = extended_cartan(g);
        const auto r = verify_conditions(m);
        out.push_back(item("cartan", std::string(name(g)) + "^aff conditions", r.all(), "det=" + r.det.str()));
        if (!is_h_type(g)) continue;
        const auto& e = cached_enumeration(g, cfg.coeff_bound);
        std::vector<const CartanCandidate*> nonpos;
        for (const auto& c : e.candidates)
            if (c.off_diagonal_nonpositive()) nonpos.push_back(&c);
        const bool unique = nonpos.size() == 1 && nonpos.front()->matrix.entries == m.entries;
        out.push_back(item("cartan", std::string(name(g)) + "^aff unique non-positive candidate", unique,
                           std::to_string(nonpos.size()) + " candidates with non-positive off-diagonal"));
    }
    return out;
}

inline std::vector<CheckResult> check_appendix_a(const VerifyConfig& cfg) {
    std::vector<CheckResult> out;
    for (GroupId g : kHGroups) {
        const std::string gname(name(g));
        std::vector<CoeffRow> table;
        try {
            table = load_table(cfg.fixtures_dir / fixture_name(g));
        } catch (const std::exception& ex) {
            out.push_back(item("appendix-a", gname + " fixture", false, ex.what()));
            continue;
        }
        const auto& e = cached_enumeration(g, cfg.coeff_bound);
        const auto d = diff_table(e, table);
        std::string miss;
        for (const auto& r : d.missing) miss += " " + row_str(r);
        out.push_back(item("appendix-a", gname + " table rows enumerated", d.missing.empty(),
                           std::to_string(table.size()) + " rows, " + std::to_string(d.missing.size()) +
                               " missing" + (miss.empty() ? "" : ":" + miss)));
        std::string extra;
        for (const auto& r : d.extra) extra += " " + row_str(r);
        CheckResult info = item("appendix-a", gname + " extras", true,
                                std::to_string(e.candidates.size()) + " enumerated, " +
                                    std::to_string(d.extra.size()) + " not in table" +
                                    (extra.empty() ? "" : ":" + extra));
        info.informational = true;
        out.push_back(std::move(info));
    }
    return out;
}

inline std::vector<CheckResult> check_fragments(const VerifyConfig& cfg) {
    std::vector<CheckResult> out;
    const std::size_t expected[] = {1, 11, 61};
    for (int n = 0; n <= 2; ++n) {
        const auto f = generate(GroupId::H2, n, cfg.cap);
        out.push_back(item("fragments", "|Q2(" + std::to_string(n) + ")| = " + std::to_string(expected[n]),
                           f.size() == expected[n], "got " + std::to_string(f.size())));
    }
    const auto q2 = generate(GroupId::H2, 2, cfg.cap);
    std::size_t tens = 0, fives = 0, ones = 0, total = 0;
    for (const auto& o : orbits(q2)) {
        total += o.size;
        tens += o.size == 10;
        fives += o.size == 5;
        ones += o.size == 1;
    }
    out.push_back(item("fragments", "Q2(2) orbits 4x10 + 4x5 + 1", tens == 4 && fives == 4 && ones == 1 && total == 61,
                       std::to_string(tens) + "x10 " + std::to_string(fives) + "x5 " + std::to_string(ones) + "x1"));
    for (int n = 1; n <= 6; ++n)
        out.push_back(item("fragments", "Q2(" + std::to_string(n) + ") ten-fold symmetric",
                           check_tenfold(generate(GroupId::H2, n, cfg.cap))));
    return out;
}

inline std::vector<CheckResult> check_oracle(const VerifyConfig& cfg) {
    std::vector<CheckResult> out;
    const std::pair<GroupId, int> cases[] = {{GroupId::H2, 4}, {GroupId::H3, 3}, {GroupId::H4, 2}};
    for (auto [g, nmax] : cases)
        for (int n = 0; n <= nmax; ++n) {
            const auto a = generate(g, n, cfg.cap);
            const auto b = generate_rootsum(g, n, cfg.cap);
            out.push_back(item("oracle", std::string(name(g)) + " n=" + std::to_string(n) + " words = root sums",
                               a.points == b.points, std::to_string(a.size()) + " points"));
        }
    return out;
}

inline std::vector<CheckResult> check_line(const VerifyConfig&) {
    std::vector<CheckResult> out;
    const auto lv = levels(2);
    std::vector<GoldenInt> want{2, -2, GoldenInt::tau(), -GoldenInt::tau(), GoldenInt::tau_conj(), -GoldenInt::tau_conj()};
    detail::sort_real(want);
    out.push_back(item("line", "level 2 = {+-2, +-tau, +-tau'}", lv[2].points == want));
    for (int n = 0; n <= 8; ++n)
        out.push_back(item("line", "closed form = brute force, n=" + std::to_string(n),
                           line_closed_form(n) == line_bruteforce(n)));
    for (int n = 1; n <= 4; ++n)
        out.push_back(item("line", "closed form = fragment section, n=" + std::to_string(n),
                           line_closed_form(n) == line_from_fragment(generate(GroupId::H2, n))));
    return out;
}

inline std::vector<CheckResult> check_cut_project_1d(const VerifyConfig&) {
    std::vector<CheckResult> out;
    for (int n = 1; n <= 2; ++n)
        out.push_back(item("cut-project-1d", "no deficiencies, n=" + std::to_string(n), deficiencies_1d(n).empty()));
    const auto d3 = deficiencies_1d(3);
    const GoldenInt x{-1, 2};
    const bool has = std::find(d3.begin(), d3.end(), x) != d3.end() && std::find(d3.begin(), d3.end(), -x) != d3.end();
    out.push_back(item("cut-project-1d", "+-(-1+2*tau) deficient at n=3", has));
    for (int n = 3; n <= 12; ++n) {
        const auto d = deficiencies_1d(n);
        out.push_back(item("cut-project-1d", "deficiencies nonempty, n=" + std::to_string(n), !d.empty(),
                           std::to_string(d.size()) + " points"));
    }
    return out;
}

inline std::vector<CheckResult> check_mn_nn(const VerifyConfig&) {
    std::vector<CheckResult> out;
    const auto m3 = mn_nn(3);
    out.push_back(item("mn-nn", "(M3, N3) = (1, 2)", m3.m == 1 && m3.n == 2));
    for (int n = 3; n <= 20; ++n) {
        const auto r = mn_nn(n);
        out.push_back(item("mn-nn", "M < N, n=" + std::to_string(n), r.m < r.n,
                           "M=" + std::to_string(r.m) + " N=" + std::to_string(r.n)));
    }
    return out;
}

inline std::vector<CheckResult> check_cut_project_2d(const VerifyConfig& cfg) {
    std::vector<CheckResult> out;
    for (int n = 1; n <= 5; ++n) {
        const auto sigma = sigma_2d(n);
        const auto q = generate(GroupId::H2, n, cfg.cap);
        const auto pts = cyclo_points(q);
        const bool subset = std::includes(sigma.points.begin(), sigma.points.end(), pts.begin(), pts.end());
        out.push_back(item("cut-project-2d", "Q2 inside window set, n=" + std::to_string(n), subset));
        const auto d = deficiencies_2d(n, sigma, q);
        const bool want_empty = n <= 2;
        out.push_back(item("cut-project-2d",
                           std::string("deficiencies ") + (want_empty ? "empty" : "nonempty") +
                               ", n=" + std::to_string(n),
                           d.empty() == want_empty, std::to_string(d.size()) + " points"));
    }
    return out;
}

inline std::vector<CheckResult> check_decompose(const VerifyConfig&) {
    std::vector<CheckResult> out;
    for (int n = 1; n <= 4; ++n) {
        const auto w = root_sum_witnesses(n);
        std::size_t bad = 0;
        std::string first;
        for (const auto& x : cyclo_points(generate(GroupId::H2, n)))
            if (!decompose(x, w.at(x), n).within_bound && bad++ == 0) first = x.str();
        out.push_back(item("decompose", "both bounds <= n, n=" + std::to_string(n), bad == 0,
                           bad ? std::to_string(bad) + " failures, first " + first : ""));
    }
    return out;
}

inline std::vector<CheckResult> check_scaling(const VerifyConfig&) {
    std::vector<CheckResult> out;
    for (int n = 1; n <= 10; ++n) {
        const auto r = scaling_check(n);
        const std::string ce = r.counterexample ? "counterexample " + r.counterexample->str() : "";
        out.push_back(item("scaling", "tau L(n) in L(2n), n=" + std::to_string(n), r.tau_scaling, ce));
        out.push_back(item("scaling", "L(r) + L(s) in L(n), n=" + std::to_string(n), r.repetitivity, ce));
    }
    return out;
}

inline std::vector<CheckResult> check_star(const VerifyConfig&) {
    std::vector<CheckResult> out;
    std::vector<CycloInt> rts, starred;
    for (int j = 0; j < 10; ++j) {
        rts.push_back(CycloInt::xi_pow(j));
        starred.push_back(CycloInt::xi_pow(j).star());
    }
    std::sort(rts.begin(), rts.end());
    std::sort(starred.begin(), starred.end());
    out.push_back(item("star", "roots map to roots", rts == starred));
    out.push_back(item("star", "alpha1* = xi^0", CycloInt::xi_pow(0).star() == CycloInt::xi_pow(0)));
    out.push_back(item("star", "alpha2* = xi^8", CycloInt::xi_pow(4).star() == CycloInt::xi_pow(8)));
    // fixed deterministic sample for semilinearity
    std::uint64_t s = 0x9e3779b97f4a7c15ULL;
    auto next = [&] {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return static_cast<Int>(s % 41) - 20;
    };
    bool semilinear = true;
    for (int i = 0; i < 1000 && semilinear; ++i) {
        const GoldenInt a{next(), next()};
        const CycloInt x{GoldenInt{next(), next()}, GoldenInt{next(), next()}};
        const CycloInt y{GoldenInt{next(), next()}, GoldenInt{next(), next()}};
        semilinear = (a * x + y).star() == a.conj() * x.star() + y.star();
    }
    out.push_back(item("star", "(ax + y)* = a'x* + y* on 1000 samples", semilinear));
    return out;
}

inline std::vector<CheckResult> check_distance(const VerifyConfig& cfg) {
    std::vector<CheckResult> out;
    for (int n = 1; n <= 10; ++n) {
        const auto r = min_distance_compare(n);
        out.push_back(item("distance", "1D n=" + std::to_string(n), r.ok,
                           "line " + std::to_string(r.d_line) + " window " + std::to_string(r.d_sigma)));
    }
    for (int n = 1; n <= 5; ++n) {
        const double dq = min_pair_distance(cyclo_points(generate(GroupId::H2, n, cfg.cap)));
        const double ds = min_pair_distance(sigma_2d(n).points);
        out.push_back(item("distance", "2D n=" + std::to_string(n), dq >= ds - 1e-9,
                           "fragment " + std::to_string(dq) + " window " + std::to_string(ds)));
    }
    return out;
}

inline std::vector<CheckResult> check_a2_lattice(const VerifyConfig& cfg) {
    std::vector<CheckResult> out;
    for (int n = 0; n <= 5; ++n) {
        const auto pts = word_closure(GroupId::A2, n, cfg.cap);
        const bool integral = std::all_of(pts.begin(), pts.end(), [](const OmegaVector& v) {
            const auto a = alpha_integral(v);
            return a && std::all_of(a->coords.begin(), a->coords.end(), [](GoldenInt c) { return c.b() == 0; });
        });
        out.push_back(item("a2-lattice", "integer alpha coordinates, n=" + std::to_string(n), integral,
                           std::to_string(pts.size()) + " points"));
    }
    return out;
}

}  // namespace detail

struct Suite {
    std::string name;
    std::function<std::vector<CheckResult>(const VerifyConfig&)> run;
};

inline const std::vector<Suite>& suites() {
    static const std::vector<Suite> all{
        {"identities", detail::check_identities},   {"cartan", detail::check_cartan},
        {"appendix-a", detail::check_appendix_a},   {"fragments", detail::check_fragments},
        {"oracle", detail::check_oracle},           {"line", detail::check_line},
        {"cut-project-1d", detail::check_cut_project_1d}, {"mn-nn", detail::check_mn_nn},
        {"cut-project-2d", detail::check_cut_project_2d}, {"decompose", detail::check_decompose},
        {"scaling", detail::check_scaling},         {"star", detail::check_star},
        {"distance", detail::check_distance},       {"a2-lattice", detail::check_a2_lattice},
    };
    return all;
}

inline const Suite* find_suite(std::string_view name) {
    for (const auto& s : suites())
        if (s.name == name) return &s;
    return nullptr;
}

}  // namespace hcox
