#pragma once

#include "zipchow/chow.hpp"

#include <json.hpp>

#include <string>

namespace zipchow::io {

/// Key order is fixed by insertion, so dumps are byte-stable.
using Json = nlohmann::ordered_json;

/// Integers that fit in a signed 64-bit word are JSON numbers; larger ones
/// are decimal strings.
Json integer_to_json(const Integer &v);
Integer integer_from_json(const Json &j);

Json to_json(const ZipDatum &z);
Json to_json(const AbelianGroup &g);
Json to_json(const GradedAbelianGroup &g);
Json to_json(const ChowPresentation &p);
Json to_json(const ChowReport &r);
Json to_json(const LocalizedReport &r);
Json to_json(const BtReport &r);
Json to_json(const M11Certificate &c);

ZipDatum datum_from_json(const Json &j);
AbelianGroup group_from_json(const Json &j);
GradedAbelianGroup graded_from_json(const Json &j);
ChowPresentation presentation_from_json(const Json &j);
ChowReport report_from_json(const Json &j);

std::string describe(const ZipDatum &z);

std::string render_text(const ChowPresentation &p);
std::string render_text(const GradedAbelianGroup &g,
                        std::string_view symbol = "A");
std::string render_text(const ChowReport &r);
std::string render_text(const BtReport &r);
std::string render_text(const M11Certificate &c);

} // namespace zipchow::io
