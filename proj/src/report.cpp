#include "circhad/report.hpp"

#include <sstream>

namespace circhad {

namespace {

Json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max()) {
    return v.convert_to<long long>();
  }
  return v.str();
}

Json rows_json(const std::vector<SignRow>& rows) {
  Json a = Json::array();
  for (const auto& r : rows) a.push_back(to_json(r));
  return a;
}

}  // namespace

Json to_json(const SignRow& row) {
  Json a = Json::array();
  for (auto v : row.entries()) a.push_back(static_cast<int>(v));
  return a;
}

Json to_json(const Rational& value) {
  if (boost::multiprecision::denominator(value) == 1) {
    return integer_json(boost::multiprecision::numerator(value));
  }
  return value.str();
}

Json to_json(const Circulant& c) {
  Json a = Json::array();
  for (const auto& v : c.first_row()) a.push_back(to_json(v));
  return a;
}

Json to_json(const PafSpectrum& paf) { return Json(paf.values); }

Json to_json(const EigenvalueReport& eig) {
  Json j;
  j["magnitudes"] = eig.magnitudes;
  j["row_sum"] = eig.row_sum;
  return j;
}

Json to_json(const RankCertificate& cert) {
  Json j;
  j["rank"] = cert.rank;
  j["pivot_rows"] = cert.pivot_rows;
  if (cert.dependency) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    const auto& d = *cert.dependency;
    j["dependency"] = {{"a_num", integer_json(numerator(d.a))},
                       {"a_den", integer_json(denominator(d.a))},
                       {"b_num", integer_json(numerator(d.b))},
                       {"b_den", integer_json(denominator(d.b))}};
  } else {
    j["dependency"] = nullptr;
  }
  return j;
}

Json to_json(const Decomposition& d) {
  Json j;
  j["n"] = d.n;
  j["e1"] = to_json(d.e1);
  j["e2"] = to_json(d.e2);
  j["lambda1"] = d.lambda1;
  j["lambda2"] = d.lambda2;
  j["g1"] = to_json(d.g1);
  j["g2"] = to_json(d.g2);
  j["rank1"] = to_json(d.rank1);
  j["rank2"] = to_json(d.rank2);
  j["k1"] = to_json(d.k1);
  j["k2"] = to_json(d.k2);
  return j;
}

Json to_json(const ConditionProfile& p) {
  Json j;
  j["cond_a"] = p.cond_a;
  j["cond_b"] = p.cond_b;
  j["cond_c"] = p.cond_c;
  j["cond_d"] = p.cond_d;
  j["ranks"] = {p.ranks.first, p.ranks.second};
  j["gram_abs_uniform"] = p.gram_abs_uniform;
  j["graphr_sum"] = p.graphr_sum;
  j["lambda_product"] = p.lambda_product;
  return j;
}

Json to_json(const MisscaseReport& m) {
  Json j;
  j["lambda1"] = m.lambda1;
  j["lambda2"] = m.lambda2;
  j["product"] = m.product;
  j["sum_of_squares"] = m.sum_of_squares;
  j["needs_shift"] = m.needs_shift;
  j["normalized_row"] = to_json(m.normalized_row);
  return j;
}

Json to_json(const RegularityProfile& r) {
  Json j;
  j["n"] = r.n;
  j["h"] = r.h ? Json(*r.h) : Json(nullptr);
  j["positive_count"] = r.positive_count;
  j["negative_count"] = r.negative_count;
  j["row_sum"] = r.row_sum;
  j["consistent"] = r.consistent;
  return j;
}

Json to_json(const MacWilliamsSurvey& s) {
  Json j;
  j["order"] = s.order;
  j["count"] = s.count;
  Json w = Json::array();
  for (const auto& c : s.witnesses) w.push_back(c.to_bitstring());
  j["witnesses"] = w;
  return j;
}

Json plotkin_record(const PlotkinQuery& q, const CodeSearchResult* oracle) {
  Json j;
  j["m"] = q.m;
  j["d"] = q.d;
  j["bound"] = q.bound ? Json(*q.bound) : Json(nullptr);
  j["oracle_size"] = oracle ? Json(oracle->size) : Json(nullptr);
  return j;
}

Json to_json(const SearchReport& r) {
  Json j;
  j["order"] = r.order;
  j["mode"] = std::string(to_string(r.mode));
  j["candidates_examined"] = r.candidates_examined;
  j["hits"] = rows_json(r.hits);
  j["canonical_hits"] = rows_json(r.canonical_hits);
  Json pruned = Json::object();
  for (const auto& [rule, count] : r.pruned_by_rule) pruned[rule] = count;
  j["pruned_by_rule"] = pruned;
  j["elapsed_ms"] = r.elapsed.count();
  return j;
}

std::string csv_summary_header() { return "order,mode,examined,hits,elapsed_ms"; }

std::string csv_summary_line(const SearchReport& r) {
  std::ostringstream os;
  os << r.order << ',' << to_string(r.mode) << ',' << r.candidates_examined << ','
     << r.hits.size() << ',' << r.elapsed.count();
  return os.str();
}

Json versioned(const std::string& kind, const Json& body) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = kind;
  if (!body.is_object()) {
    j["value"] = body;
    return j;
  }
  for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
  return j;
}

std::string render(const Json& doc) { return doc.dump(2); }

}  // namespace circhad
