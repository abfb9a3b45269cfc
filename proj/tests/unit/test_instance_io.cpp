#include <doctest.h>

#include "clab/corpus.hpp"
#include "clab/falsify.hpp"
#include "clab/reports.hpp"

using clab::Rational;

namespace {

const char* kAbsdiffInstance = R"({
  "space": {"kind": "absdiff-window", "values": ["1", "2", "4", "5"]},
  "map": {"kind": "table", "images": [0, 0, 1, 0]},
  "phi": {"family": "parity-linear", "k": "5/6"},
  "contraction": {"variant": "type2", "delta": "5/6"}
})";

const char* kMatrixInstance = R"({
  "space": {"kind": "finite-matrix", "labels": ["a", "b"],
            "matrix": [["0", "1/2"], ["1/2", "0"]]},
  "map": {"kind": "table", "images": [0, 0]},
  "phi": {"family": "linear", "k": "1/2"}
})";

} // namespace

TEST_CASE("absdiff instance files parse with exact rationals") {
    const auto instance = clab::load_instance_string(kAbsdiffInstance);
    CHECK(instance.space->size() == 4);
    CHECK(instance.space->value(2) == Rational(4));
    CHECK(instance.require_map().image(2) == 1);
    CHECK(instance.require_phi().k() == Rational(5, 6));
    REQUIRE(instance.contraction.has_value());
    CHECK(instance.contraction->delta() == Rational(5, 6));
    CHECK(instance.contraction->alpha() == Rational(0));
}

TEST_CASE("matrix instance files parse") {
    const auto instance = clab::load_instance_string(kMatrixInstance);
    CHECK(instance.space->kind() == clab::SpaceKind::FiniteMatrix);
    CHECK(instance.space->distance(0, 1) == Rational(1, 2));
    CHECK(!instance.contraction.has_value());
}

TEST_CASE("rule map instances resolve against the window") {
    const auto instance = clab::load_instance_string(R"({
      "space": {"kind": "absdiff-window", "values": ["1","2","4","5","6","7"]},
      "map": {"kind": "rule", "name": "example10"},
      "phi": {"family": "parity-linear", "k": "5/6"}
    })");
    const auto& map = instance.require_map();
    CHECK(map.kind() == clab::MapKind::Rule);
    // f(7) = 2, f(everything else here) = 1.
    CHECK(map.space().point(map.image(*map.space().find_value(Rational(7)))).label == "2");
    CHECK(map.space().point(map.image(*map.space().find_value(Rational(4)))).label == "1");
}

TEST_CASE("parse errors name the offending field") {
    SUBCASE("zero denominator") {
        const char* text = R"({"space": {"kind": "absdiff-window", "values": ["1", "5/0"]}})";
        try {
            clab::load_instance_string(text);
            FAIL("expected ParseError");
        } catch (const clab::ParseError& e) {
            CHECK(std::string(e.what()).find("space.values[1]") != std::string::npos);
        }
    }
    SUBCASE("malformed JSON carries the position") {
        CHECK_THROWS_AS(clab::load_instance_string("{"), clab::ParseError);
    }
    SUBCASE("unknown rule name") {
        const char* text = R"({
          "space": {"kind": "absdiff-window", "values": ["1"]},
          "map": {"kind": "rule", "name": "examplethirteen"}
        })";
        CHECK_THROWS_AS(clab::load_instance_string(text), clab::ParseError);
    }
    SUBCASE("unknown phi family") {
        const char* text = R"({
          "space": {"kind": "absdiff-window", "values": ["1"]},
          "phi": {"family": "cubic"}
        })";
        CHECK_THROWS_AS(clab::load_instance_string(text), clab::ParseError);
    }
    SUBCASE("missing space") {
        CHECK_THROWS_AS(clab::load_instance_string("{}"), clab::ParseError);
    }
}

TEST_CASE("map images outside the point set are closure errors") {
    const char* text = R"({
      "space": {"kind": "absdiff-window", "values": ["1", "2"]},
      "map": {"kind": "table", "images": [0, 5]}
    })";
    CHECK_THROWS_AS(clab::load_instance_string(text), clab::InvariantError);
}

TEST_CASE("rule image outside the window is a closure error") {
    // example10 maps everything of this window to 1 or 2, but 2 is missing.
    const char* text = R"({
      "space": {"kind": "absdiff-window", "values": ["1", "7"]},
      "map": {"kind": "rule", "name": "example10"}
    })";
    CHECK_THROWS_AS(clab::load_instance_string(text), clab::InvariantError);
}

TEST_CASE("instance round-trip reproduces identical reports") {
    clab::GeneratorConfig config;
    config.seed = 13;
    clab::InstanceGenerator generator(config);
    for (std::size_t index = 0; index < 25; ++index) {
        const auto original = generator.generate(index);
        const auto reloaded =
            clab::load_instance_string(clab::instance_to_json(original).dump());

        REQUIRE(reloaded.space->size() == original.space->size());
        for (std::size_t i = 0; i < original.space->size(); ++i) {
            for (std::size_t j = 0; j < original.space->size(); ++j) {
                CHECK(original.space->distance(i, j) == reloaded.space->distance(i, j));
            }
        }
        const auto report_a = clab::to_json(
            clab::certify(original.require_map(), original.require_phi(),
                          clab::ContractionSpec::type3()));
        const auto report_b = clab::to_json(
            clab::certify(reloaded.require_map(), reloaded.require_phi(),
                          clab::ContractionSpec::type3()));
        CHECK(report_a.dump() == report_b.dump());
    }
}

TEST_CASE("corpus instances round-trip through their serialized form") {
    clab::CorpusOptions options;
    options.window_max = 25;
    for (const auto& name : clab::corpus_names()) {
        const auto original = clab::corpus_instance(name, options);
        const auto reloaded =
            clab::load_instance_string(clab::instance_to_json(original).dump(2));
        CHECK(reloaded.space->size() == original.space->size());
        CHECK(reloaded.space->window_of_larger() == original.space->window_of_larger());
        REQUIRE(reloaded.contraction.has_value());
        CHECK(clab::instance_to_json(reloaded).dump() ==
              clab::instance_to_json(original).dump());
    }
}

TEST_CASE("unknown corpus names are rejected") {
    CHECK_THROWS_AS(clab::corpus_instance("example99"), clab::ParseError);
}
