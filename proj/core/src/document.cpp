#include "cpulse/document.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "cpulse/errors.hpp"

namespace cpulse {
namespace {

using nlohmann::json;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

}  // namespace

std::string to_json(const SequenceDocument& doc) {
  json j;
  j["schema_version"] = doc.schema_version;
  j["label"] = doc.sequence.label;
  j["pulses"] = json::array();
  for (const Pulse& p : doc.sequence.pulses)
    j["pulses"].push_back({{"area_pi", p.area_pi}, {"phase_pi", p.phase_pi}});
  json meta = json::object();
  if (doc.metadata.family) meta["family"] = *doc.metadata.family;
  if (doc.metadata.n) meta["n"] = *doc.metadata.n;
  if (doc.metadata.p_target) meta["p_target"] = *doc.metadata.p_target;
  if (doc.metadata.theta_pi) meta["theta_pi"] = *doc.metadata.theta_pi;
  if (doc.metadata.variant) meta["variant"] = *doc.metadata.variant;
  if (!meta.empty()) j["metadata"] = std::move(meta);
  return j.dump(2) + "\n";
}

SequenceDocument from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    if (!j.is_object()) throw DocumentError("document root must be an object");
    SequenceDocument doc;
    doc.schema_version = j.at("schema_version").get<int>();
    if (doc.schema_version != 1)
      throw DocumentError("unsupported schema_version " + std::to_string(doc.schema_version));
    doc.sequence.label = j.value("label", std::string{});
    const json& pulses = j.at("pulses");
    if (!pulses.is_array() || pulses.empty())
      throw DocumentError("document needs a non-empty pulses array");
    for (const json& p : pulses)
      doc.sequence.pulses.push_back(
          {p.at("area_pi").get<double>(), p.at("phase_pi").get<double>()});
    if (j.contains("metadata")) {
      const json& meta = j.at("metadata");
      if (!meta.is_object()) throw DocumentError("metadata must be an object");
      if (meta.contains("family")) doc.metadata.family = meta.at("family").get<std::string>();
      if (meta.contains("n")) doc.metadata.n = meta.at("n").get<int>();
      if (meta.contains("p_target")) doc.metadata.p_target = meta.at("p_target").get<double>();
      if (meta.contains("theta_pi")) doc.metadata.theta_pi = meta.at("theta_pi").get<double>();
      if (meta.contains("variant")) doc.metadata.variant = meta.at("variant").get<std::string>();
    }
    validate(doc.sequence);
    return doc;
  } catch (const DocumentError&) {
    throw;
  } catch (const std::exception& e) {
    throw DocumentError(std::string("invalid sequence document: ") + e.what());
  }
}

void save_document(const SequenceDocument& doc, const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw DocumentError("cannot open " + path + " for writing");
  os << to_json(doc);
  if (!os) throw DocumentError("failed writing " + path);
}

SequenceDocument load_document(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw DocumentError("cannot open " + path);
  std::ostringstream buf;
  buf << is.rdbuf();
  return from_json(buf.str());
}

void write_profile_csv(std::ostream& os, const ExcitationProfile& profile) {
  os << "eps,probability\n";
  for (std::size_t i = 0; i < profile.eps.size(); ++i)
    os << num(profile.eps[i]) << ',' << num(profile.probability[i]) << '\n';
}

void write_series_csv(std::ostream& os, const std::vector<double>& series) {
  os << "order,coefficient\n";
  for (std::size_t k = 0; k < series.size(); ++k)
    os << k << ',' << num(series[k]) << '\n';
}

void write_compare_csv(std::ostream& os, const CompareReport& report) {
  os << "label,p_center,max_abs_deviation\n";
  for (const CompareEntry& e : report.entries)
    os << e.label << ',' << num(e.p_center) << ',' << num(e.max_abs_deviation) << '\n';
}

}  // namespace cpulse
