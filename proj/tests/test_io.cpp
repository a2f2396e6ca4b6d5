#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <regex>
#include <sstream>
#include <string>

#include "hcox/io.hpp"

using namespace hcox;

namespace {

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

std::size_t count_matches(const std::string& s, const std::string& needle) {
    std::size_t k = 0;
    for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++k;
    return k;
}

}  // namespace

TEST(Csv, HeaderAndRows) {
    std::ostringstream os;
    write_csv(os, generate(GroupId::H2, 1));
    const std::string s = os.str();
    EXPECT_EQ(s.substr(0, s.find('\n')), "a1,b1,a2,b2,x,y");
    EXPECT_EQ(count_lines(s), 12u);
    // the origin row
    EXPECT_NE(s.find("\n0,0,0,0,0.000000000000,0.000000000000\n"), std::string::npos);
    EXPECT_EQ(csv_header(GroupId::H3), (std::vector<std::string>{"a1", "b1", "a2", "b2", "a3", "b3", "x", "y", "z"}));
    EXPECT_EQ(csv_header(GroupId::H4).back(), "w");
}

TEST(Csv, TwelveDecimals) {
    std::ostringstream os;
    write_csv(os, generate(GroupId::H3, 1));
    std::istringstream in(os.str());
    std::string line;
    std::getline(in, line);
    const std::regex row(R"(^-?\d+,-?\d+,-?\d+,-?\d+,-?\d+,-?\d+(,-?\d+\.\d{12}){3}$)");
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        EXPECT_TRUE(std::regex_match(line, row)) << line;
        ++rows;
    }
    EXPECT_EQ(rows, 31u);
}

TEST(Json, Structure) {
    const auto f = generate(GroupId::H2, 2);
    const auto j = to_json(f);
    EXPECT_EQ(j["group"], "H2");
    EXPECT_EQ(j["n"], 2);
    EXPECT_EQ(j["points"].size(), 61u);
    EXPECT_EQ(j["points"][0]["omega"].size(), 2u);
    EXPECT_EQ(j["points"][0]["cart"].size(), 2u);
    std::size_t orbit_total = 0, shell_total = 0;
    for (const auto& o : j["orbits"]) orbit_total += o["size"].get<std::size_t>();
    for (const auto& s : j["shells"]) {
        shell_total += s["count"].get<std::size_t>();
        EXPECT_GT(s["norm_den"].get<Int>(), 0);
        EXPECT_EQ(s["norm_num"].size(), 2u);
    }
    EXPECT_EQ(orbit_total, 61u);
    EXPECT_EQ(shell_total, 61u);
    EXPECT_EQ(j["orbits"].size(), 9u);
}

TEST(Json, OriginOnly) {
    const auto j = to_json(generate(GroupId::H2, 0));
    ASSERT_EQ(j["points"].size(), 1u);
    EXPECT_EQ(j["points"][0]["omega"], nlohmann::json::parse("[[0,0],[0,0]]"));
}

TEST(Svg, OneCirclePerPoint) {
    for (int n = 0; n <= 6; ++n) {
        std::ostringstream os;
        const auto f = generate(GroupId::H2, n);
        write_svg(os, f);
        EXPECT_EQ(count_matches(os.str(), "<circle "), f.size()) << n;
        EXPECT_NE(os.str().find("width=\"1000\" height=\"1000\""), std::string::npos);
    }
    std::ostringstream os;
    EXPECT_THROW(write_svg(os, generate(GroupId::H3, 1)), std::invalid_argument);
}

TEST(Svg, OutermostShellAtFourHundredFifty) {
    std::ostringstream os;
    write_svg(os, generate(GroupId::H2, 2));
    const std::string s = os.str();
    const std::regex circle(R"re(cx="([-\d.]+)" cy="([-\d.]+)")re");
    double rmax = 0;
    std::size_t at_max = 0;
    for (auto it = std::sregex_iterator(s.begin(), s.end(), circle); it != std::sregex_iterator(); ++it) {
        const double r = std::hypot(std::stod((*it)[1]) - 500, std::stod((*it)[2]) - 500);
        if (r > rmax + 1e-2) {
            rmax = r;
            at_max = 0;
        }
        if (std::abs(r - rmax) <= 1e-2) ++at_max;
    }
    EXPECT_NEAR(rmax, 450.0, 1e-2);
    EXPECT_EQ(at_max, 10u);
    EXPECT_NE(s.find("cx=\"500.000\" cy=\"500.000\""), std::string::npos);
}

TEST(Output, Deterministic) {
    std::ostringstream a, b;
    write_json(a, generate(GroupId::H3, 2));
    write_json(b, generate(GroupId::H3, 2));
    EXPECT_EQ(a.str(), b.str());
}
