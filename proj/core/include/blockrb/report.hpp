#pragma once

#include "blockrb/audit.hpp"
#include "blockrb/equations.hpp"

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace blockrb {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// JSON serializers (nlohmann ADL). Exact values travel as strings:
// Rational "p/q", Scalar as {monomial: rational}. Objects use nlohmann's
// sorted-key representation, so identical values serialize byte-identically.

void to_json(nlohmann::json& j, const Rational& r);
void from_json(const nlohmann::json& j, Rational& r);

void to_json(nlohmann::json& j, const Scalar& s);
void from_json(const nlohmann::json& j, Scalar& s);

void to_json(nlohmann::json& j, const Bidegree& d);  // [m, i]
void from_json(const nlohmann::json& j, Bidegree& d);

void to_json(nlohmann::json& j, const GradedElement& e);  // [[m, i, Scalar], ...]
void from_json(const nlohmann::json& j, GradedElement& e);

void to_json(nlohmann::json& j, const Window& w);
void from_json(const nlohmann::json& j, Window& w);

void to_json(nlohmann::json& j, const Profile1D& g);  // tagged record {"kind": ...}
void from_json(const nlohmann::json& j, Profile1D& g);

void to_json(nlohmann::json& j, const ProfileSpec& f);
void from_json(const nlohmann::json& j, ProfileSpec& f);

void to_json(nlohmann::json& j, const OperatorSpec& op);
void from_json(const nlohmann::json& j, OperatorSpec& op);

void to_json(nlohmann::json& j, const Witness& w);
void from_json(const nlohmann::json& j, Witness& w);

void to_json(nlohmann::json& j, const Verdict& v);
void from_json(const nlohmann::json& j, Verdict& v);

void to_json(nlohmann::json& j, const Mismatch& m);
void from_json(const nlohmann::json& j, Mismatch& m);

void to_json(nlohmann::json& j, const DiscrepancyReport& r);
void from_json(const nlohmann::json& j, DiscrepancyReport& r);

void to_json(nlohmann::json& j, const AuditReport& r);
void from_json(const nlohmann::json& j, AuditReport& r);

void to_json(nlohmann::json& j, const AdmissibilityCell& cell);

void to_json(nlohmann::json& j, const FeqSearchResult& r);

/// Serializes with a fixed layout (2-space indent, sorted keys, trailing
/// newline). All report files in the project go through this.
std::string dump_json(const nlohmann::json& j);

/// Atomic write (temp file + rename). Throws IoError on failure.
void write_json_atomic(const nlohmann::json& j, const std::string& path);

}  // namespace blockrb
