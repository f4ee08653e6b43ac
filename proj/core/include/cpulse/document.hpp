#ifndef CPULSE_DOCUMENT_HPP
#define CPULSE_DOCUMENT_HPP

// On-disk formats: a JSON document for sequences and CSV writers for
// profiles, series coefficients and comparison reports.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cpulse/analysis.hpp"
#include "cpulse/pulse.hpp"

namespace cpulse {

struct SequenceMetadata {
  std::optional<std::string> family;
  std::optional<int> n;
  std::optional<double> p_target;
  std::optional<double> theta_pi;
  std::optional<std::string> variant;
};

// Schema: {"schema_version": 1, "label": ..., "pulses": [{"area_pi": ...,
// "phase_pi": ...}, ...], "metadata": {...}} with the metadata object and
// its keys optional.
struct SequenceDocument {
  int schema_version = 1;
  CompositeSequence sequence;
  SequenceMetadata metadata;
};

std::string to_json(const SequenceDocument& doc);  // two-space indent, LF line ends

// Parses and validates a document. Throws DocumentError on malformed JSON,
// schema violations or invalid pulse parameters.
SequenceDocument from_json(const std::string& text);

void save_document(const SequenceDocument& doc, const std::string& path);
SequenceDocument load_document(const std::string& path);

// CSV, printf %.15g formatting, LF line ends.
void write_profile_csv(std::ostream& os, const ExcitationProfile& profile);   // eps,probability
void write_series_csv(std::ostream& os, const std::vector<double>& series);   // order,coefficient
void write_compare_csv(std::ostream& os, const CompareReport& report);
// label,p_center,max_abs_deviation

}  // namespace cpulse

#endif
