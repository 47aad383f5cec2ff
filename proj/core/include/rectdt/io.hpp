#pragma once

#include <string>
#include <string_view>

#include "rectdt/certificate.hpp"
#include "rectdt/delaunay.hpp"
#include "rectdt/spanner.hpp"

namespace rectdt {

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view content);

/// {"points": [{"x": "p/q", "y": "p/q"}, ...]}. Other top-level keys are ignored.
PointSet points_from_json(std::string_view text);
std::string points_to_json(const PointSet& ps);

/// Points in the caller's frame plus the canonical aspect and transpose flag;
/// circumhomothets are in the canonical frame keyed "i,j,k".
Triangulation triangulation_from_json(std::string_view text);
std::string triangulation_to_json(const Triangulation& t);

Certificate certificate_from_json(std::string_view text);
std::string certificate_to_json(const Certificate& cert);

StretchReport stretch_report_from_json(std::string_view text);
std::string stretch_report_to_json(const StretchReport& report);
/// One row per pair: u,v,d_t,d_2,ratio,display,bound,slack.
std::string stretch_report_to_csv(const StretchReport& report);

/// aspect,trial,n,seed,max_ratio,sigma
std::string sweep_to_csv(const SweepResult& sweep);
SweepResult sweep_from_csv(std::string_view text);

/// The best configuration as a point file with the search metadata alongside.
std::string search_result_to_json(const SearchResult& result, const AspectRatio& aspect, std::size_t n,
                                  std::size_t budget, std::uint64_t seed);

}  // namespace rectdt
