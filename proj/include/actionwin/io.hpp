#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "actionwin/barcode.hpp"
#include "actionwin/complex.hpp"
#include "actionwin/dga.hpp"
#include "actionwin/displacement.hpp"
#include "actionwin/pwc.hpp"

namespace actionwin::io {

using Json = nlohmann::ordered_json;

/// Whole file; throws IoError.
std::string read_file(const std::string& path);
/// Throws IoError.
void write_file(const std::string& path, const std::string& text);

/// Throws ParseError "source:line:column: message".
Json parse_json(const std::string& text, const std::string& source = "<input>");
Json load_json(const std::string& path);

/// Document schemas. Rationals are strings ("3", "-3/4", "1.05", "inf");
/// integers may also be given as JSON numbers. Schema violations throw
/// SchemaError naming the JSON path ("$.generators[2].action").
///
///   complex  = {field, window: [a, b], generators: [{id, action, degree}],
///               differential: {id: [{id, coeff}]}}
///   dga      = {field, chords: [{label, length, degree, component, kind,
///               ends}], differential: {label: [{coeff, word: [labels]}]}}
///   augmentation = {label: scalar}
///   timeline = {initial: complex, start_time, items: [{type, ...}]}
///   barcode  = [{start, end, degree}]
FilteredComplex complex_from_json(const Json& doc);
Json to_json(const FilteredComplex& complex);

ChordDGA dga_from_json(const Json& doc);
Json to_json(const ChordDGA& dga);

Augmentation augmentation_from_json(const Json& doc, const FieldSpec& field);
Json to_json(const Augmentation& eps);

Timeline timeline_from_json(const Json& doc);
Json to_json(const Timeline& timeline);

Barcode barcode_from_json(const Json& doc);
Json to_json(const Barcode& bars);

/// {"sigma": ["1", "inf", "1"]} or a bare list.
SigmaProfile sigma_from_json(const Json& doc);
/// {"betti": [1, 0, 1]} or a bare list.
BettiProfile betti_from_json(const Json& doc);
/// Comma-separated inline lists: "1,inf,1" and "1,0,1".
SigmaProfile parse_sigma_list(const std::string& text);
BettiProfile parse_betti_list(const std::string& text);

/// CSV with rows t,max,min (optional header line). Throws ParseError with the
/// line number.
OscillationProfile<Rational> profile_from_csv(const std::string& text, const std::string& source = "<input>");

/// "[1, 2) deg 0" per line.
std::string barcode_table(const Barcode& bars);
/// start,end,degree with a header.
std::string barcode_csv(const Barcode& bars);
/// One row per bar, drawn on a common scale of `width` columns.
std::string bar_diagram(const Barcode& bars, std::size_t width = 60);
/// t,bar_id,start,end,degree with a header.
std::string vineyard_csv(const std::vector<VineyardRow>& rows);

/// Document for a named built-in fixture; throws SchemaError for unknown
/// names. "dga+augmentation" fixtures produce {dga, augmentation}.
Json fixture_document(const std::string& name, const FieldSpec& field);

}  // namespace actionwin::io
