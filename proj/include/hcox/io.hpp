#pragma once

// CSV, JSON and SVG writers for fragments. Output depends only on the point
// set, so repeated runs produce identical bytes.

#include <cmath>
#include <algorithm>
#include <cstdio>
#include <iterator>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "hcox/fragment.hpp"
#include "hcox/rootsystem.hpp"

namespace hcox {

namespace detail {

inline std::string fixed12(double x) {
    if (std::abs(x) < 5e-13) x = 0.0;  // no "-0.000000000000"
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12f", x);
    return buf;
}

inline std::string px(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", std::abs(x) < 5e-4 ? 0.0 : x);
    return buf;
}

inline nlohmann::ordered_json pairs(const OmegaVector& v) {
    auto a = nlohmann::ordered_json::array();
    for (const auto& c : v.coords) a.push_back({c.a(), c.b()});
    return a;
}

}  // namespace detail

inline std::vector<std::string> csv_header(GroupId g) {
    static const char* axes[] = {"x", "y", "z", "w"};
    std::vector<std::string> h;
    for (std::size_t i = 1; i <= rank(g); ++i) {
        h.push_back("a" + std::to_string(i));
        h.push_back("b" + std::to_string(i));
    }
    for (std::size_t i = 0; i < rank(g); ++i) h.emplace_back(axes[i]);
    return h;
}

/// One row per point: exact omega coordinates a_i + b_i tau, then Cartesian
/// coordinates with 12 decimals.
inline void write_csv(std::ostream& os, const Fragment& f, bool normalize = true) {
    const auto h = csv_header(f.group);
    for (std::size_t i = 0; i < h.size(); ++i) os << (i ? "," : "") << h[i];
    os << '\n';
    for (const auto& p : f.points) {
        for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i].a() << ',' << p[i].b();
        for (double x : cartesian(p, normalize)) os << ',' << detail::fixed12(x);
        os << '\n';
    }
}

inline nlohmann::ordered_json to_json(const Fragment& f, bool normalize = true) {
    nlohmann::ordered_json j;
    j["group"] = std::string(name(f.group));
    j["n"] = f.n;
    auto pts = nlohmann::ordered_json::array();
    for (const auto& p : f.points) pts.push_back({{"omega", detail::pairs(p)}, {"cart", cartesian(p, normalize)}});
    j["points"] = std::move(pts);
    auto orb = nlohmann::ordered_json::array();
    for (const auto& o : orbits(f)) orb.push_back({{"dominant", detail::pairs(o.dominant)}, {"size", o.size}});
    j["orbits"] = std::move(orb);
    auto sh = nlohmann::ordered_json::array();
    for (const auto& s : shells(f))
        sh.push_back({{"norm_num", {s.norm_sq.num().a(), s.norm_sq.num().b()}},
                      {"norm_den", s.norm_sq.den()},
                      {"count", s.members.size()}});
    j["shells"] = std::move(sh);
    return j;
}

inline void write_json(std::ostream& os, const Fragment& f, bool normalize = true) {
    os << to_json(f, normalize).dump(2) << '\n';
}

struct SvgOptions {
    int canvas = 1000;
    double outer_radius = 450.0;  // pixels for the outermost shell
    double dot_radius = 4.0;
    bool color_shells = false;
};

/// Planar drawing of an H2 fragment, origin at the centre.
inline void write_svg(std::ostream& os, const Fragment& f, const SvgOptions& opt = {}, bool normalize = true) {
    if (f.group != GroupId::H2) throw std::invalid_argument("hcox: SVG output is available for H2 only");
    static const char* palette[] = {"#1b4f72", "#b03a2e", "#1e8449", "#7d3c98", "#b9770e", "#117a65", "#5d6d7e"};

    const auto sh = shells(f);
    double rmax = 0.0;
    for (const auto& p : f.points) {
        const auto c = cartesian(p, normalize);
        rmax = std::max(rmax, std::hypot(c[0], c[1]));
    }
    const double scale = rmax > 0 ? opt.outer_radius / rmax : 1.0;
    const double mid = opt.canvas / 2.0;

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opt.canvas << "\" height=\"" << opt.canvas
       << "\" viewBox=\"0 0 " << opt.canvas << ' ' << opt.canvas << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (std::size_t s = 0; s < sh.size(); ++s) {
        const char* fill = opt.color_shells ? palette[s % std::size(palette)] : "black";
        os << "<g class=\"shell\" data-norm=\"" << sh[s].norm_sq.str() << "\" fill=\"" << fill << "\">\n";
        auto members = sh[s].members;
        std::sort(members.begin(), members.end());
        for (const auto& p : members) {
            const auto c = cartesian(p, normalize);
            os << "<circle cx=\"" << detail::px(mid + scale * c[0]) << "\" cy=\"" << detail::px(mid - scale * c[1])
               << "\" r=\"" << detail::px(opt.dot_radius) << "\"/>\n";
        }
        os << "</g>\n";
    }
    os << "</svg>\n";
}

}  // namespace hcox
