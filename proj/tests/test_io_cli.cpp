#include <doctest.h>

#include <cmath>
#include <sstream>

#include "triq/conformance.hpp"
#include "triq/family.hpp"
#include "triq/io.hpp"
#include "triq/statecore.hpp"

using namespace triq;

TEST_CASE("state json parsing is strict") {
    PureState3 s = parse_state_json(
        "[[1,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,1]]");
    CHECK(std::abs(s.amp[0].real() - 1.0 / std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(s.amp[7].imag() - 1.0 / std::sqrt(2.0)) < 1e-15);

    CHECK_THROWS_AS(parse_state_json("not json"), ParseError);
    CHECK_THROWS_AS(parse_state_json("[[1,0]]"), ParseError);  // 7 short
    CHECK_THROWS_AS(
        parse_state_json("[[1,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,0]]"),
        ParseError);  // exactly 8 required
    CHECK_THROWS_AS(
        parse_state_json("[[1,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0]]"),
        ParseError);  // pair required
    CHECK_THROWS_AS(
        parse_state_json(
            "[[1,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,0],[\"x\",0]]"),
        ParseError);  // numbers required

    PureState3 w = preset_state(Preset::W);
    PureState3 back = parse_state_json(state_to_json(w));
    for (int b = 0; b < 8; ++b) CHECK(std::abs(back.amp[b] - w.amp[b]) < 1e-15);
}

TEST_CASE("csv serialization shapes") {
    CHECK(tangle_csv_header(false) == "c12,c13,c23,tau3,tau11,tau12,tau13,i5,i6");
    CHECK(tangle_csv_header(true) ==
          "c12,c13,c23,tau3,tau11,tau12,tau13,i5,i6,re_ig,im_ig");
    CHECK(fmt(0.25) == "0.25");
    CHECK(fmt(0.25) == fmt(0.25));

    FamilyTable t = scan(target_from_state(preset_state(Preset::PSI_ALPHA, kPi)), 3);
    std::ostringstream os;
    write_family_csv(os, t);
    std::string text = os.str();
    CHECK(text.rfind("lambda4,l0,l1,l2,l3,phi,cosphi,c12,", 0) == 0);
    // header + 3 rows
    CHECK(std::count(text.begin(), text.end(), '\n') == 4);

    std::string iv = interval_json(t.interval);
    CHECK(iv.find("constraints_log") != std::string::npos);
}

TEST_CASE("conformance report covers the headline claims") {
    auto claims = conformance_claims(42);
    auto find = [&](const std::string& frag) -> const ConformanceClaim* {
        for (const auto& c : claims)
            if (c.claim.find(frag) != std::string::npos) return &c;
        return nullptr;
    };
    const auto* t8 = find("8/25");
    REQUIRE(t8 != nullptr);
    CHECK(!t8->agree);  // hyperdeterminant gives 4/25
    CHECK(t8->computed_value == doctest::Approx(0.16));

    const auto* ghz = find("I5(GHZ)");
    REQUIRE(ghz != nullptr);
    CHECK(ghz->agree);

    const auto* ea = find("E_a = sqrt(C + tau3)");
    REQUIRE(ea != nullptr);
    CHECK(!ea->agree);
    const auto* ea2 = find("E_a^2 = C^2 + tau3");
    REQUIRE(ea2 != nullptr);
    CHECK(ea2->agree);

    std::string json = conformance_json(claims);
    CHECK(json.find("\"claims\"") != std::string::npos);
    CHECK(json.find("paper_value") != std::string::npos);
}
