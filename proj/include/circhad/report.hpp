#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "circhad/circulant.hpp"
#include "circhad/coding_bounds.hpp"
#include "circhad/decomposition.hpp"
#include "circhad/exact_rank.hpp"
#include "circhad/f2.hpp"
#include "circhad/search.hpp"

namespace circhad {

/// Insertion-ordered JSON so that parse + dump reproduces a report byte for
/// byte.
using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

Json to_json(const SignRow& row);
/// Integers become JSON numbers, other rationals "p/q" strings.
Json to_json(const Rational& value);
Json to_json(const Circulant& c);
Json to_json(const PafSpectrum& paf);
Json to_json(const EigenvalueReport& eig);
Json to_json(const RankCertificate& cert);
Json to_json(const Decomposition& d);
Json to_json(const ConditionProfile& p);
Json to_json(const MisscaseReport& m);
Json to_json(const RegularityProfile& r);
Json to_json(const MacWilliamsSurvey& s);
/// {m, d, bound, oracle_size}; oracle_size is null when no oracle ran.
Json plotkin_record(const PlotkinQuery& q, const CodeSearchResult* oracle);
Json to_json(const SearchReport& r);

/// Header line of the CSV search summary.
std::string csv_summary_header();
/// order,mode,examined,hits,elapsed_ms
std::string csv_summary_line(const SearchReport& r);

/// Wraps a record as {"schema_version": "1", "kind": kind, ...fields}; a
/// non-object body goes under "value".
Json versioned(const std::string& kind, const Json& body);

/// Pretty, deterministic rendering used for every emitted document.
std::string render(const Json& doc);

}  // namespace circhad
