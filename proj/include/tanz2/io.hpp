#pragma once

#include "tanz2/grid.hpp"
#include "tanz2/orbit.hpp"
#include "tanz2/scan.hpp"
#include "tanz2/symbolic.hpp"

#include <json.hpp>

#include <array>
#include <map>
#include <string>

namespace tanz2 {

using RGB = std::array<std::uint8_t, 3>;
using Palette = std::map<int, RGB>;

// origin white, escape black, undetermined gray, cycles coloured by period
Palette default_palette();

std::string ppm_bytes(const ClassifiedGrid& grid, const Palette& palette);
// same colours, darkened by iteration count relative to the slowest pixel of each class
std::string ppm_bytes_shaded(const ClassifiedGrid& grid, const Palette& palette);
void write_ppm(const ClassifiedGrid& grid, const Palette& palette, const std::string& path);

std::string base64_encode(const std::string& bytes);
std::string base64_decode(const std::string& text);

// cells as little-endian int32 triples (class_id, period, steps)
std::string pack_cells(const std::vector<Cell>& cells);
std::vector<Cell> unpack_cells(const std::string& bytes);

nlohmann::ordered_json grid_to_json(const ClassifiedGrid& grid, const nlohmann::ordered_json& meta = {});
ClassifiedGrid grid_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json report_json(const ParameterClass& pc, const Parameter& p, int budget);
nlohmann::ordered_json report_json(const CantorReport& rep);
nlohmann::ordered_json report_json(const BasinHeuristic& h);

nlohmann::ordered_json numeric_defaults();

void write_text(const std::string& path, const std::string& data);

}  // namespace tanz2
