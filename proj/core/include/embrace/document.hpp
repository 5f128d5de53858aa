#pragma once

#include "embrace/twisted.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace embrace {

// One batch task from a problem document; argument values are kept as strings
// and interpreted by the dispatcher.
struct TaskSpec {
    std::string op;
    std::map<std::string, std::string> args;
};

// A self-contained problem statement: the field, a quiver, an optional
// structure, and named cochains, windows, deformations and tasks.
struct ProblemDocument {
    FieldSpec field;
    QuiverPtr quiver;
    std::optional<StructuredCategory> structure;
    std::map<std::string, MixedCochain> cochains;
    std::map<std::string, ComplexWindow> complexes;
    std::map<std::string, std::string> deformations;  // name -> cocycle cochain name
    std::vector<TaskSpec> tasks;
};

// Schema violation with a JSON-pointer-style location.
class DocumentError : public std::runtime_error {
  public:
    DocumentError(const std::string& location, const std::string& message)
        : std::runtime_error(location + ": " + message), location_(location) {}
    const std::string& location() const { return location_; }

  private:
    std::string location_;
};

ProblemDocument parse_document(const std::string& text);
ProblemDocument load_document(const std::string& path);

// Canonical serialization: sorted keys, two-space indentation; parsing the
// output reproduces the document (round-trip identity, asserted in tests).
std::string serialize_document(const ProblemDocument& doc);

}  // namespace embrace
