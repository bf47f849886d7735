#pragma once

#include "ellstab/euclid.hpp"
#include "ellstab/transport.hpp"
#include "ellstab/walls.hpp"

#include <json.hpp>

#include <string>

namespace ellstab {

// All emission goes through nlohmann ordered_json with fixed key order and
// canonical rational strings, so identical inputs give identical bytes.
using Json = nlohmann::ordered_json;

Json to_json(const ChernTable& v);
Json to_json(const Divisor& D);
Json to_json(const StabParams& P);
Json to_json(const Mat2& T);
Json to_json(const TransportResult& r, const SurfaceGeometry& g);
Json to_json(const EuclidTrace& t, const SurfaceGeometry& g);
Json to_json(const WallReport& r, const SurfaceGeometry& g);

// Schema-checked parsing with field-level diagnostics (usage_error).
ChernTable table_from_json(const Json& j);
StabParams params_from_json(const Json& j);

ChernTable read_table_file(const std::string& path); // "-" reads stdin

std::string dump_json(const Json& j); // 2-space indent, trailing newline

// One row per (wall, witness): a, n_A, d_A, c_A, s_A.
std::string walls_tsv(const WallReport& r);

// One horizontal <line> per wall on the vertical a-ray, labelled with the
// wall position and witness count.  Pure text templating, integer-scaled
// coordinates; no floating point.
std::string walls_svg(const WallReport& r);

} // namespace ellstab
