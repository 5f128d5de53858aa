#include "doctest.h"

#include "embrace/document.hpp"

using namespace embrace;

namespace {

const char* kMinimal = R"js({
  "field": "Q",
  "quiver": {
    "window": [0, 0],
    "objects": ["e"],
    "arrows": [
      {"name": "one", "src": "e", "tgt": "e", "degree": 0},
      {"name": "x", "src": "e", "tgt": "e", "degree": 0}
    ]
  },
  "structure": {
    "kind": "linear",
    "components": [
      {"arity": 2, "entries": [
        {"path": ["e", "e", "e"], "args": ["one", "one"], "value": [{"arrow": "one", "coeff": "1"}]},
        {"path": ["e", "e", "e"], "args": ["one", "x"], "value": [{"arrow": "x", "coeff": "1"}]},
        {"path": ["e", "e", "e"], "args": ["x", "one"], "value": [{"arrow": "x", "coeff": "1"}]}
      ]}
    ]
  },
  "cochains": {
    "phi": {"degree": 2, "components": [
      {"arity": 2, "entries": [
        {"path": ["e", "e", "e"], "args": ["x", "x"], "value": [{"arrow": "one", "coeff": "1"}]}
      ]}
    ]}
  },
  "complexes": {
    "w": {"lo": 0, "hi": 1,
          "at": [{"pos": 0, "object": "e"}, {"pos": 1, "object": "e"}],
          "delta": [{"from": 0, "to": 1, "value": [{"arrow": "x", "coeff": "1"}]}]}
  },
  "deformations": {"d": {"cocycle": "phi"}},
  "tasks": [{"op": "hh", "degree": 2}, {"op": "obstruct", "deformation": "d"}]
})js";

std::string location_of(const std::string& text) {
    try {
        parse_document(text);
    } catch (const DocumentError& e) {
        return e.location();
    }
    return "(no error)";
}

}  // namespace

TEST_CASE("parse/serialize round trip reaches a fixed point") {
    ProblemDocument doc = parse_document(kMinimal);
    CHECK(doc.field == FieldSpec::rational());
    CHECK(doc.quiver->object_count() == 1);
    CHECK(doc.quiver->arrow_count() == 2);
    REQUIRE(doc.structure.has_value());
    CHECK(doc.structure->kind == StructureKind::Linear);
    CHECK(doc.cochains.count("phi") == 1);
    CHECK(doc.cochains.at("phi").hochschild_degree() == 2);
    CHECK(doc.complexes.count("w") == 1);
    CHECK(doc.deformations.at("d") == "phi");
    REQUIRE(doc.tasks.size() == 2);
    CHECK(doc.tasks[0].op == "hh");
    CHECK(doc.tasks[0].args.at("degree") == "2");  // numbers become string args
    CHECK(doc.tasks[1].args.at("deformation") == "d");

    std::string first = serialize_document(doc);
    ProblemDocument again = parse_document(first);
    std::string second = serialize_document(again);
    CHECK(first == second);
    CHECK(first.back() == '\n');
}

TEST_CASE("serialization omits empty sections") {
    ProblemDocument doc = parse_document(R"js({
      "field": "GF(5)",
      "quiver": {"window": [0, 0], "objects": ["a"], "arrows": []}
    })js");
    std::string text = serialize_document(doc);
    CHECK(text.find("cochains") == std::string::npos);
    CHECK(text.find("complexes") == std::string::npos);
    CHECK(text.find("deformations") == std::string::npos);
    CHECK(text.find("tasks") == std::string::npos);
    CHECK(text.find("structure") == std::string::npos);
    CHECK(text.find("GF(5)") != std::string::npos);
}

TEST_CASE("schema violations carry precise locations") {
    CHECK(location_of(R"js({"quiver": {}})js") == "");  // missing field key reported at the root
    CHECK(location_of(R"js({"field": "Z", "quiver": {}})js") == "/field");
    CHECK(location_of(R"js({"field": "Q"})js") == "");  // missing quiver
    CHECK(location_of(R"js({"field": "Q", "quiver": {"window": [0], "objects": [], "arrows": []}})js") ==
          "/quiver/window");
    CHECK(location_of(
              R"js({"field": "Q", "quiver": {"window": [0,0], "objects": [], "arrows": [], "bogus": 1}})js") ==
          "/quiver/bogus");
    CHECK(location_of(R"js({"field": "Q", "nonsense": 3, "quiver": {"window": [0,0], "objects": [], "arrows": []}})js") ==
          "/nonsense");

    // unknown reference from a deformation
    CHECK(location_of(R"js({
        "field": "Q",
        "quiver": {"window": [0,0], "objects": ["e"], "arrows": []},
        "deformations": {"d": {"cocycle": "missing"}}
      })js") == "/deformations/d/cocycle");

    // unknown arrow inside a structure entry value
    std::string bad_arrow_loc = location_of(R"js({
        "field": "Q",
        "quiver": {"window": [0,0], "objects": ["e"],
                   "arrows": [{"name": "one", "src": "e", "tgt": "e", "degree": 0}]},
        "structure": {"kind": "linear", "components": [
          {"arity": 2, "entries": [
            {"path": ["e","e","e"], "args": ["one","one"], "value": [{"arrow": "nope", "coeff": "1"}]}
          ]}
        ]}
      })js");
    CHECK(bad_arrow_loc.find("arrow") != std::string::npos);

    // malformed coefficient string
    std::string bad_coeff_loc = location_of(R"js({
        "field": "Q",
        "quiver": {"window": [0,0], "objects": ["e"],
                   "arrows": [{"name": "one", "src": "e", "tgt": "e", "degree": 0}]},
        "structure": {"kind": "linear", "components": [
          {"arity": 2, "entries": [
            {"path": ["e","e","e"], "args": ["one","one"], "value": [{"arrow": "one", "coeff": "?"}]}
          ]}
        ]}
      })js");
    CHECK(bad_coeff_loc.find("coeff") != std::string::npos);

    // differential endpoints must carry objects
    std::string bad_delta_loc = location_of(R"js({
        "field": "Q",
        "quiver": {"window": [0,0], "objects": ["e"],
                   "arrows": [{"name": "x", "src": "e", "tgt": "e", "degree": 0}]},
        "complexes": {"c": {"lo": 0, "hi": 1,
          "at": [{"pos": 0, "object": "e"}],
          "delta": [{"from": 0, "to": 1, "value": [{"arrow": "x", "coeff": "1"}]}]}}
      })js");
    CHECK(bad_delta_loc.find("/complexes/c/delta/0") == 0);

    // duplicate positions
    std::string dup_loc = location_of(R"js({
        "field": "Q",
        "quiver": {"window": [0,0], "objects": ["e"], "arrows": []},
        "complexes": {"c": {"lo": 0, "hi": 0,
          "at": [{"pos": 0, "object": "e"}, {"pos": 0, "object": "e"}]}}
      })js");
    CHECK(dup_loc == "/complexes/c/at/1");

    CHECK(location_of(R"js({"field": "GF(4)", "quiver": {"window": [0,0], "objects": [], "arrows": []}})js") ==
          "/field");
}

TEST_CASE("unknown structure kinds and bad fields are rejected") {
    CHECK(location_of(R"js({
        "field": "Q",
        "quiver": {"window": [0,0], "objects": [], "arrows": []},
        "structure": {"kind": "magic", "components": []}
      })js") == "/structure/kind");
}

TEST_CASE("loading a missing file reports the path location") {
    try {
        load_document("/no/such/file.json");
        CHECK(false);
    } catch (const DocumentError& e) {
        CHECK(e.location() == "/");
    }
}
