#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tcat/powers.hpp"

namespace tcat {

struct ParseError : Error {
    using Error::Error;
};

// A parsed input document: a monad, plus either a T-category presentation or
// an explicit truncated T-simplicial object.
struct Document {
    int depth = 4;
    MonadSpec monad;
    std::string monad_kind;
    std::optional<TCatData> tcategory;
    std::optional<TSimplicialObject> tsimplicial;
    std::string name;  // optional document name
    // canonical JSON of each input section, for bit-exact reserialization
    std::string monad_section;
    std::string tcategory_section;
    std::string tsimplicial_section;
};

Document parse_document(const std::string& text);
// Canonical serialization: sorted keys, canonical element order.  Parsing a
// serialized document and re-serializing is the identity.
std::string serialize_document(const Document& doc);
// monad_section is the canonical JSON of the monad entry, e.g. {"kind":"maybe"}.
std::string serialize_tsimplicial(const TSimplicialObject& X, const std::string& monad_section,
                                  const std::string& name);

struct CheckLine {
    std::string name;
    bool pass;
    std::string detail;
};

struct Report {
    std::string command;
    std::vector<std::pair<std::string, std::string>> fields;
    std::vector<CheckLine> checks;

    void field(const std::string& key, const std::string& value);
    void check(const std::string& name, bool pass, const std::string& detail = "");
    bool all_passed() const;
    std::string render_text() const;
    std::string render_json() const;
};

// Runs one CLI command over already-read document texts.  Throws ParseError
// for malformed input and CapabilityError for unsupported monads; check
// failures are recorded in the report instead.
Report run_command(const std::string& command, const std::vector<std::string>& documents,
                   std::optional<int> depth_override);

// Exit-code contract: 0 all checks pass, 1 check failures, 2 parse errors,
// 3 capability errors.
int exit_code_for(const Report& report);

}  // namespace tcat
