#pragma once

#include <string>

#include "corner/catalog.hpp"
#include "corner/caustic.hpp"

namespace corner {

// Deterministic double formatting shared by every writer.
std::string fmt(double v);

// component,kind,q...,witness...,residual rows in sweep order.
std::string geometry_csv(const CausticGeometry& geo);

// Labelled colored polylines and point markers for two-parameter windows.
std::string geometry_svg(const CausticGeometry& geo);

// Ascii PLY with one vertex/face/edge block; components are delimited by
// header comments carrying their vertex ranges.
std::string geometry_ply(const CausticGeometry& geo);

// Filters match a full label or everything sharing "<filter>^...".
std::string catalog_json(const std::string& label_filter = "");
std::string catalog_csv(const std::string& label_filter = "");

bool catalog_filter_match(const NormalFormEntry& e, const std::string& filter);

// Filesystem-safe tag: alphanumerics kept, '+' -> 'p', '-' -> 'm', ' -> x.
std::string sanitize_label(const std::string& label);

}  // namespace corner
