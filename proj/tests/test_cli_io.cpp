#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "verlinde/report_io.hpp"

using namespace verlinde;

TEST_CASE("json round-trips every report in range") {
    for (unsigned R = 1; R <= 6; ++R)
        for (unsigned L = 1; L <= 8; ++L) {
            const OutputRecord rec = make_output_record(
                decompose(R, L), "decompose rank=" + std::to_string(R) + " level=" + std::to_string(L));
            REQUIRE(from_json(to_json(rec)) == rec);
        }
}

TEST_CASE("json round-trips a theorem2 record") {
    const OutputRecord rec = make_output_record(theorem2_decompose(6, 4, 2, -3), "theorem2");
    CHECK(rec.has_theta_shift);
    CHECK(rec.theta_shift == -3);
    CHECK(from_json(to_json(rec)) == rec);
}

TEST_CASE("serialization is deterministic") {
    const auto render = [] {
        return to_json(make_output_record(decompose(4, 6), "decompose rank=4 level=6"));
    };
    CHECK(render() == render());
}

TEST_CASE("summands are ordered by order then character") {
    const OutputRecord rec = make_output_record(decompose(6, 4), "q");
    for (size_t i = 1; i < rec.summands.size(); ++i) {
        const auto& a = rec.summands[i - 1];
        const auto& b = rec.summands[i];
        CHECK(std::tie(a.order, a.char_a, a.char_b) < std::tie(b.order, b.char_a, b.char_b));
    }
}

TEST_CASE("csv format") {
    const OutputRecord rec = make_output_record(decompose(2, 2), "q");
    const std::string csv = to_csv(rec);
    std::istringstream is(csv);
    std::string line;
    REQUIRE(std::getline(is, line));
    CHECK(line == "order,char_a,char_b,rank,det_degree,multiplicity");
    size_t rows = 0;
    while (std::getline(is, line)) ++rows;
    CHECK(rows == rec.summands.size());
}

TEST_CASE("rationals travel as strings") {
    const OutputRecord rec = make_output_record(decompose(4, 2), "q");
    const std::string json = to_json(rec);
    CHECK(json.find("\"rank_total\": \"10\"") != std::string::npos);
    CHECK(json.find("\"multiplicity\": \"2\"") != std::string::npos);
}

TEST_CASE("text format shows the theta twist for line-bundle splittings") {
    const std::string text = to_text(make_output_record(decompose(3, 3), "q"));
    CHECK(text.find("Theta^1") != std::string::npos);
    CHECK(text.find("rank total: 10") != std::string::npos);
    CHECK(text.find("splits into line bundles: yes") != std::string::npos);
}
