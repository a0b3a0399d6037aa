#include <sstream>

#include "doctest.h"
#include "ringcode/io.hpp"

using namespace ringcode;

namespace {

std::size_t error_line(const std::string& text) {
    try {
        parse_matrix(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    FAIL("expected a parse error");
    return 0;
}

std::size_t count_char(const std::string& s, char c) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), c)); }

}  // namespace

TEST_CASE("parse_matrix reads headers, rows and comments") {
    const auto g = parse_matrix("# a Z4 code\n\nring: Z4\nn: 2   # length\nrows:\n1 1\n\n0 2  # second\n");
    CHECK(g.ring == Ring::zmod(4));
    CHECK(g.length == 2);
    REQUIRE(g.rows.size() == 2);
    CHECK(g.rows[0] == std::vector<Element>{1, 1});
    CHECK(g.rows[1] == std::vector<Element>{0, 2});

    const auto f = parse_matrix("ring: F2UV\nn: 3\nrows:\nuv 1+u+v 15\n");
    CHECK(f.rows[0] == std::vector<Element>{8, 7, 15});

    const auto u = parse_matrix("ring: F2U\nn: 2\nrows:\nu 1+u\n");
    CHECK(u.rows[0] == std::vector<Element>{2, 3});
}

TEST_CASE("parse_matrix errors name the offending line") {
    CHECK(error_line("rung: Z4\n") == 1);
    CHECK(error_line("ring: Z65\n") == 1);
    CHECK(error_line("ring: Z4\n\nn: zero\n") == 3);
    CHECK(error_line("ring: Z4\nn: 0\n") == 2);
    CHECK(error_line("ring: Z4\nn: 2\nrow:\n") == 3);
    CHECK(error_line("ring: Z4\nn: 2\nrows:\n1 1\n1 4\n") == 5);
    CHECK(error_line("ring: Z4\nn: 2\nrows:\n1 1 1\n") == 4);
    CHECK(error_line("ring: F2U\nn: 1\nrows:\nv\n") == 4);
    CHECK(error_line("ring: Z4\nn: 2\nrows:\n# nothing here\n") == 3);
    CHECK(error_line("ring: Z4\nn: 2\n") == 3);
    CHECK_THROWS_WITH_AS(parse_matrix("ring: Z4\nn: 2\nrows:\n"), doctest::Contains("no rows"), ParseError);
}

TEST_CASE("format_matrix round-trips") {
    for (const char* text : {"ring: Z4\nn: 2\nrows:\n1 1\n0 2\n", "ring: F2UV\nn: 2\nrows:\nuv uv\n1+u v\n",
                             "ring: F5\nn: 3\nrows:\n1 2 3\n", "ring: F2U\nn: 1\nrows:\n1+u\n"}) {
        const auto g = parse_matrix(text);
        CHECK(format_matrix(g) == text);
        CHECK(parse_matrix(format_matrix(g)) == g);
    }
    const auto g = parse_matrix("ring: Z4\nn: 2\nrows:\n1 1\n0 2\n");
    CHECK(format_rows_inline(g) == "1 1;0 2");
}

TEST_CASE("weight function JSON round-trip") {
    const WeightFunction custom(Ring::zmod(3), "custom", {Rational(0), Rational(1, 2), Rational(5, 3)});
    for (const auto& wf : {lee_wf_zl(6), euclidean_wf_f2u(), lee_wf_f2uv(), custom}) {
        const auto j = to_json(wf);
        CHECK(weight_function_from_json(nlohmann::json::parse(j.dump())) == wf);
    }
    CHECK(to_json(custom).at("coeffs")[1] == "1/2");
    nlohmann::json bad = to_json(custom);
    bad["coeffs"][0] = "1/1";
    CHECK_THROWS(weight_function_from_json(bad));
}

TEST_CASE("Gray map JSON round-trip keeps flags") {
    GrayMap gm = gray_z4();
    verify_isometric(gm, lee_wf_zl(4));
    verify_bijective(gm);
    const auto back = gray_map_from_json(nlohmann::json::parse(to_json(gm).dump()));
    CHECK(back == gm);
    CHECK(back.flags() == gm.flags());
    CHECK(back.table() == gm.table());
    CHECK(to_json(gm).at("flags").at("isometric") == "true");

    auto bad = to_json(gm);
    bad["table"][1][0] = 2;
    CHECK_THROWS(gray_map_from_json(bad));
    bad = to_json(gm);
    bad["flags"]["bijective"] = "maybe";
    CHECK_THROWS(gray_map_from_json(bad));
}

TEST_CASE("bound report JSON carries inputs") {
    const auto reps = corollary_zl_check(6, 2, 6, {Rational(1), Rational(2), Rational(4)});
    const auto j = to_json(reps[1]);
    CHECK(j.at("bound_id") == "Zl_Lee");
    CHECK(j.at("inputs").at("l") == 6);
    CHECK(j.at("inputs").at("l1") == 3);
    CHECK(j.at("inputs").at("l2") == 9);
    CHECK(j.at("inputs").at("A") == "3/1");
    for (const auto& r : reps) CHECK(bound_report_from_json(nlohmann::json::parse(to_json(r).dump())) == r);
}

TEST_CASE("scan summary JSON is stable and excludes runtime by default") {
    ScanConfig c{Ring::zmod(4)};
    c.n = 2;
    c.max_rows = 2;
    c.weights = {lee_wf_zl(4)};
    c.gray = gray_z4();
    const auto res = run_scan(c);
    const auto j = to_json(res.summary);
    CHECK_FALSE(j.contains("runtime_seconds"));
    CHECK(to_json(res.summary, true).contains("runtime_seconds"));
    CHECK(nlohmann::json::parse(j.dump()).dump() == j.dump());
    CHECK(j.at("codes_examined") == res.summary.codes_examined);
    CHECK(j.at("gray") == "Z4->F2^2");
    CHECK(j.at("tallies").at("GraySingleton:lee").at("violations") == 0);

    std::ostringstream csv;
    write_scan_csv(csv, res, CodeEvaluator(c.ring, c.weights, c.gray));
    const std::string text = csv.str();
    const std::string header = text.substr(0, text.find('\n'));
    CHECK(header.rfind("ring,n,size,generator,d:lee,image_size,image_min_hamming,ShiromotoFloor:lee.verdict", 0) == 0);
    CHECK(count_char(text, '\n') == res.records.size() + 1);
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) CHECK(count_char(line, ',') == count_char(header, ','));
    CHECK(text.find("VIOLATED") == std::string::npos);
}
