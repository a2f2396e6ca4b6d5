#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "hcox/hcox.hpp"

#ifndef HCOX_FIXTURES_DIR
#define HCOX_FIXTURES_DIR "tests/fixtures"
#endif

namespace {

using hcox::GroupId;
using json = nlohmann::ordered_json;

enum Exit { kOk = 0, kUsage = 1, kFailed = 2 };

struct RunConfig {
    std::string group = "h2";
    int n = 0;
    std::string format = "csv";
    std::string out;
    hcox::Int coeff_bound = 3;
    bool normalize = true;
    std::size_t cap = hcox::kDefaultCap;
    std::string only;
    std::string fixtures = HCOX_FIXTURES_DIR;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Writes to --out if given, stdout otherwise.
class Sink {
  public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
            if (!*file_) throw UsageError("cannot open output file " + path);
        }
    }
    std::ostream& get() { return file_ ? *file_ : std::cout; }

  private:
    std::unique_ptr<std::ofstream> file_;
};

GroupId group_of(const RunConfig& cfg) {
    auto g = hcox::parse_group(cfg.group);
    if (!g) throw UsageError("unknown group " + cfg.group);
    return *g;
}

json golden_json(hcox::GoldenInt x) {
    return {{"value", x.str()}, {"a", x.a()}, {"b", x.b()}, {"real", x.value()}};
}

int cmd_generate(const RunConfig& cfg) {
    const GroupId g = group_of(cfg);
    if (cfg.n < 0) throw UsageError("--n must be non-negative");
    if (cfg.format == "svg" && g != GroupId::H2) throw UsageError("SVG output is available for h2 only");
    const auto f = hcox::generate(g, cfg.n, cfg.cap);
    Sink out(cfg.out);
    if (cfg.format == "csv")
        hcox::write_csv(out.get(), f, cfg.normalize);
    else if (cfg.format == "json")
        hcox::write_json(out.get(), f, cfg.normalize);
    else
        hcox::write_svg(out.get(), f, {}, cfg.normalize);
    return kOk;
}

int cmd_verify(const RunConfig& cfg) {
    hcox::VerifyConfig vc{cfg.coeff_bound, cfg.fixtures, cfg.cap};
    std::vector<const hcox::Suite*> selected;
    if (cfg.only.empty()) {
        for (const auto& s : hcox::suites()) selected.push_back(&s);
    } else {
        const auto* s = hcox::find_suite(cfg.only);
        if (!s) {
            std::string names;
            for (const auto& x : hcox::suites()) names += " " + x.name;
            throw UsageError("unknown check " + cfg.only + "; available:" + names);
        }
        selected.push_back(s);
    }

    json report;
    report["checks"] = json::array();
    bool all_ok = true;
    for (const auto* s : selected) {
        for (const auto& r : s->run(vc)) {
            all_ok = all_ok && r.ok;
            const char* tag = r.informational ? "INFO" : r.ok ? "PASS" : "FAIL";
            std::cerr << tag << "  " << r.suite << ": " << r.item;
            if (!r.detail.empty()) std::cerr << "  [" << r.detail << "]";
            std::cerr << '\n';
            report["checks"].push_back({{"suite", r.suite},
                                        {"item", r.item},
                                        {"status", tag},
                                        {"detail", r.detail}});
        }
    }
    report["passed"] = all_ok;
    Sink out(cfg.out);
    out.get() << report.dump(2) << '\n';
    return all_ok ? kOk : kFailed;
}

int cmd_line(const RunConfig& cfg) {
    if (cfg.n < 1) throw UsageError("--n must be at least 1");
    json j;
    j["n"] = cfg.n;
    auto pts = json::array();
    for (const auto& lv : hcox::levels(cfg.n))
        for (const auto& x : lv.points) {
            auto e = golden_json(x);
            e["level"] = lv.level;
            pts.push_back(std::move(e));
        }
    j["line"] = std::move(pts);
    auto def = json::array();
    for (const auto& x : hcox::deficiencies_1d(cfg.n)) def.push_back(golden_json(x));
    j["deficiencies"] = std::move(def);
    const auto mn = hcox::mn_nn(cfg.n);
    j["M"] = mn.m;
    j["N"] = mn.n;
    Sink out(cfg.out);
    out.get() << j.dump(2) << '\n';
    return kOk;
}

int cmd_compare(const RunConfig& cfg) {
    if (group_of(cfg) != GroupId::H2) throw UsageError("compare is available for h2 only");
    if (cfg.n < 1) throw UsageError("--n must be at least 1");
    const auto q = hcox::generate(GroupId::H2, cfg.n, cfg.cap);
    const auto sigma = hcox::sigma_2d(cfg.n);
    json j;
    j["group"] = "H2";
    j["n"] = cfg.n;
    j["fragment_size"] = q.size();
    j["window_set_size"] = sigma.size();
    auto def = json::array();
    for (const auto& x : hcox::deficiencies_2d(cfg.n, sigma, q)) {
        const auto z = x.embed();
        def.push_back({{"point", x.str()},
                       {"p", {x.p().a(), x.p().b()}},
                       {"q", {x.q().a(), x.q().b()}},
                       {"cart", {z.real(), z.imag()}}});
    }
    j["deficiencies"] = std::move(def);
    auto d1 = json::array();
    for (const auto& x : hcox::deficiencies_1d(cfg.n)) d1.push_back(golden_json(x));
    j["line_deficiencies"] = std::move(d1);
    Sink out(cfg.out);
    out.get() << j.dump(2) << '\n';
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Affine H2/H3/H4 Coxeter groups, quasicrystal fragments and cut-and-project comparisons"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_group = [&](CLI::App* c) {
        c->add_option("--group", cfg.group, "Group")
            ->check(CLI::IsMember({"a2", "h2", "h3", "h4"}, CLI::ignore_case));
    };
    auto add_out = [&](CLI::App* c) { c->add_option("--out", cfg.out, "Output file (default stdout)"); };
    auto add_cap = [&](CLI::App* c) {
        c->add_option("--cap", cfg.cap, "Maximum number of points before aborting")->capture_default_str();
    };

    auto* gen = app.add_subcommand("generate", "Generate a fragment Q_k(n)");
    add_group(gen);
    gen->add_option("--n", cfg.n, "Number of translations")->required();
    gen->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json", "svg"}));
    gen->add_option("--normalize", cfg.normalize, "Unit-length roots in Cartesian output (true|false)")
        ->capture_default_str();
    add_out(gen);
    add_cap(gen);

    auto* ver = app.add_subcommand("verify", "Run the property checks");
    ver->add_option("--only", cfg.only, "Run a single named check");
    ver->add_option("--coeff-bound", cfg.coeff_bound, "Coefficient bound for the Cartan enumeration")
        ->capture_default_str()
        ->check(CLI::Range(0, 6));
    ver->add_option("--fixtures", cfg.fixtures, "Directory with the Cartan table fixtures")->capture_default_str();
    add_out(ver);
    add_cap(ver);

    auto* line = app.add_subcommand("line", "Real-axis section, deficiencies and (M_n, N_n)");
    line->add_option("--n", cfg.n, "Cut-off")->required();
    add_out(line);

    auto* cmp = app.add_subcommand("compare", "Planar fragment against the decagon window set");
    add_group(cmp);
    cmp->add_option("--n", cfg.n, "Cut-off")->required();
    add_out(cmp);
    add_cap(cmp);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*gen) return cmd_generate(cfg);
        if (*ver) return cmd_verify(cfg);
        if (*line) return cmd_line(cfg);
        return cmd_compare(cfg);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n" << app.help();
        return kUsage;
    } catch (const hcox::ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailed;
    } catch (const hcox::OverflowError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailed;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
}
