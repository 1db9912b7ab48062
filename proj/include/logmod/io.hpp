#pragma once

// JSON documents exchanged by the command-line tool. Each document is a plain
// record mirroring the JSON fields one to one, so parse(serialize(d)) == d.

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "logmod/integer.hpp"

namespace logmod::io {

using Json = nlohmann::json;

struct MonoidDoc {
  std::size_t ambient_rank = 0;
  Matrix generators;
  bool operator==(const MonoidDoc&) const = default;
};

/// A cone either by generators or by inequalities (and equations).
struct ConeSpec {
  std::optional<Matrix> rays;
  std::optional<Matrix> inequalities;
  std::optional<Matrix> equations;
  bool operator==(const ConeSpec&) const = default;
};

struct ConeDoc {
  std::size_t ambient_rank = 0;
  Matrix rays;
  std::optional<Matrix> lattice;
  bool operator==(const ConeDoc&) const = default;
};

struct LocalizationDoc {
  MonoidDoc monoid;
  Matrix face;
  bool operator==(const LocalizationDoc&) const = default;
};

struct IntersectionDoc {
  MonoidDoc monoid;
  Matrix subgroup;
  bool operator==(const IntersectionDoc&) const = default;
};

struct HomDoc {
  MonoidDoc source;
  MonoidDoc target;
  Matrix matrix;
  bool operator==(const HomDoc&) const = default;
};

struct IdealDoc {
  MonoidDoc base;
  Matrix generators;
  bool operator==(const IdealDoc&) const = default;
};

struct ExtensionDoc {
  MonoidDoc q;
  MonoidDoc p;
  bool operator==(const ExtensionDoc&) const = default;
};

struct LiftDoc {
  MonoidDoc base;
  Matrix generators;
  Vec valuation;
  bool operator==(const LiftDoc&) const = default;
};

struct FamilyDoc {
  MonoidDoc monoid;
  Matrix functionals;
  bool operator==(const FamilyDoc&) const = default;
};

struct CoverDoc {
  std::size_t ambient_rank = 0;
  Matrix sigma_rays;
  std::vector<ConeSpec> subcones;
  bool operator==(const CoverDoc&) const = default;
};

struct TowerStageDoc {
  Matrix ideal;
  std::optional<std::size_t> chart;
  bool operator==(const TowerStageDoc&) const = default;
};

struct TowerDoc {
  MonoidDoc base;
  std::vector<TowerStageDoc> stages;
  bool operator==(const TowerDoc&) const = default;
};

struct FanDoc {
  std::size_t ambient_rank = 0;
  ConeSpec support;
  std::vector<ConeSpec> cones;
  bool operator==(const FanDoc&) const = default;
};

struct StratumDoc {
  std::string name;
  std::size_t closure_dim = 0;
  MonoidDoc char_monoid;
  bool operator==(const StratumDoc&) const = default;
};

struct StratificationDoc {
  std::vector<StratumDoc> strata;
  bool operator==(const StratificationDoc&) const = default;
};

using Document = std::variant<MonoidDoc, ConeDoc, LocalizationDoc, IntersectionDoc, HomDoc, IdealDoc,
                              ExtensionDoc, LiftDoc, FamilyDoc, CoverDoc, TowerDoc, FanDoc, StratificationDoc>;

/// The "type" tag of a document.
std::string type_name(const Document& d);

/// Strict parse: malformed JSON reports line and column, schema problems
/// report the JSON path. Throws Error(ParseError).
Document parse_document(std::string_view text);

Json to_json(const Document& d);
/// Compact single-line JSON.
std::string serialize(const Document& d);

/// Integers up to 2^53 in magnitude become JSON numbers, larger ones decimal strings.
Json int_to_json(const Int& x);
Json vec_to_json(const Vec& v);
Json matrix_to_json(const Matrix& m);
Json monoid_to_json(const MonoidDoc& m);

} // namespace logmod::io
