#include "tanz2/io.hpp"

#include <boost/archive/iterators/base64_from_binary.hpp>
#include <boost/archive/iterators/binary_from_base64.hpp>
#include <boost/archive/iterators/transform_width.hpp>

#include <cmath>
#include <cstring>
#include <fstream>
#include <set>

namespace tanz2 {

using json = nlohmann::ordered_json;

Palette default_palette() {
  Palette p;
  p[class_origin] = {255, 255, 255};
  p[class_escape] = {0, 0, 0};
  p[class_undetermined] = {128, 128, 128};
  for (int per = 1; per <= default_p_max; ++per) {
    // golden-ratio hue steps, fixed saturation and value
    double hue = std::fmod((per - 1) * 0.61803398874989485, 1.0) * 6.0;
    int sector = static_cast<int>(hue);
    double f = hue - sector;
    double v = 0.9, s = 0.75;
    double a = v * (1 - s), b = v * (1 - s * f), c = v * (1 - s * (1 - f));
    double rgb[6][3] = {{v, c, a}, {b, v, a}, {a, v, c}, {a, b, v}, {c, a, v}, {v, a, b}};
    auto to8 = [](double x) { return static_cast<std::uint8_t>(std::lround(x * 255)); };
    p[per] = {to8(rgb[sector][0]), to8(rgb[sector][1]), to8(rgb[sector][2])};
  }
  return p;
}

std::string ppm_bytes(const ClassifiedGrid& grid, const Palette& palette) {
  std::set<int> present;
  for (const auto& c : grid.cells) present.insert(c.class_id);
  for (int cls : present)
    if (!palette.count(cls)) throw Error(Errc::IoFailure, "palette has no colour for class " + std::to_string(cls));
  std::string out = "P6\n" + std::to_string(grid.spec.cols) + " " + std::to_string(grid.spec.rows) + "\n255\n";
  out.reserve(out.size() + grid.cells.size() * 3);
  for (const auto& c : grid.cells) {
    const RGB& rgb = palette.at(c.class_id);
    out.append(reinterpret_cast<const char*>(rgb.data()), 3);
  }
  return out;
}

std::string ppm_bytes_shaded(const ClassifiedGrid& grid, const Palette& palette) {
  std::string out = ppm_bytes(grid, palette);
  std::map<int, std::pair<int, int>> range;
  for (const auto& c : grid.cells) {
    auto [it, fresh] = range.try_emplace(c.class_id, c.steps, c.steps);
    if (!fresh) {
      it->second.first = std::min(it->second.first, c.steps);
      it->second.second = std::max(it->second.second, c.steps);
    }
  }
  size_t header = out.size() - grid.cells.size() * 3;
  for (size_t i = 0; i < grid.cells.size(); ++i) {
    const Cell& c = grid.cells[i];
    if (c.class_id == class_escape || c.class_id == class_undetermined) continue;
    auto [lo, hi] = range.at(c.class_id);
    if (hi <= lo) continue;
    double t = static_cast<double>(c.steps - lo) / (hi - lo);
    double f = 1.0 - 0.9 * t * t;
    for (int k = 0; k < 3; ++k) {
      auto& byte = out[header + 3 * i + k];
      byte = static_cast<char>(std::lround(static_cast<unsigned char>(byte) * f));
    }
  }
  return out;
}

void write_text(const std::string& path, const std::string& data) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(Errc::IoFailure, "cannot open " + path);
  f.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!f) throw Error(Errc::IoFailure, "write failed for " + path);
}

void write_ppm(const ClassifiedGrid& grid, const Palette& palette, const std::string& path) {
  std::string bytes = ppm_bytes(grid, palette);
  write_text(path, bytes);
}

std::string base64_encode(const std::string& bytes) {
  using namespace boost::archive::iterators;
  using It = base64_from_binary<transform_width<std::string::const_iterator, 6, 8>>;
  std::string out(It(bytes.begin()), It(bytes.end()));
  out.append((3 - bytes.size() % 3) % 3, '=');
  return out;
}

std::string base64_decode(const std::string& text) {
  using namespace boost::archive::iterators;
  using It = transform_width<binary_from_base64<std::string::const_iterator>, 8, 6>;
  std::string body = text;
  size_t pad = 0;
  while (!body.empty() && body.back() == '=') {
    body.pop_back();
    ++pad;
  }
  if (pad > 2 || (body.size() + pad) % 4 != 0) throw Error(Errc::IoFailure, "malformed base64 payload");
  try {
    std::string out(It(body.begin()), It(body.end()));
    // the iterator emits whole bytes only; drop a trailing partial one
    out.resize(body.size() * 6 / 8);
    return out;
  } catch (const std::exception& e) {
    throw Error(Errc::IoFailure, std::string("malformed base64 payload: ") + e.what());
  }
}

std::string pack_cells(const std::vector<Cell>& cells) {
  std::string out;
  out.reserve(cells.size() * 12);
  auto put = [&](std::int32_t v) {
    auto u = static_cast<std::uint32_t>(v);
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((u >> (8 * i)) & 0xFF));
  };
  for (const auto& c : cells) {
    put(c.class_id);
    put(c.period);
    put(c.steps);
  }
  return out;
}

std::vector<Cell> unpack_cells(const std::string& bytes) {
  if (bytes.size() % 12 != 0) throw Error(Errc::IoFailure, "cell payload is not a multiple of 12 bytes");
  std::vector<Cell> cells(bytes.size() / 12);
  auto get = [&](size_t off) {
    std::uint32_t u = 0;
    for (int i = 0; i < 4; ++i) u |= static_cast<std::uint32_t>(static_cast<unsigned char>(bytes[off + i])) << (8 * i);
    return static_cast<std::int32_t>(u);
  };
  for (size_t i = 0; i < cells.size(); ++i) cells[i] = Cell{get(12 * i), get(12 * i + 4), get(12 * i + 8)};
  return cells;
}

json numeric_defaults() {
  return json{{"budget", default_budget},
              {"resolution", default_resolution},
              {"kappa", 2.0},
              {"pole_epsilon", pole_epsilon},
              {"overflow_threshold", overflow_threshold},
              {"convergence_tol", default_convergence_tol},
              {"cycle_tol", default_cycle_tol},
              {"p_max", default_p_max},
              {"origin_capture", origin_capture},
              {"super_attracting_bound", super_attracting_bound},
              {"neutral_band", neutral_band},
              {"newton_residual", newton_residual},
              {"cycle_match_radius", cycle_match_radius},
              {"boundary_slack", boundary_slack},
              {"asymptotic_exclusion", asymptotic_exclusion},
              {"round_trip_tol", round_trip_tol}};
}

json grid_to_json(const ClassifiedGrid& grid, const json& meta) {
  const auto& s = grid.spec;
  json j;
  j["format"] = "tanz2-grid";
  j["version"] = 1;
  j["center"] = {s.center.re, s.center.im};
  j["width"] = s.width;
  j["height"] = s.height;
  j["cols"] = s.cols;
  j["rows"] = s.rows;
  j["classes"] = {{"origin", class_origin}, {"cycle", "period (1..64)"}, {"escape", class_escape},
                  {"undetermined", class_undetermined}};
  j["meta"] = meta.is_null() ? json::object() : meta;
  j["encoding"] = "base64 of little-endian int32 triples (class_id, period, steps), row-major, row 0 on top";
  j["cells"] = base64_encode(pack_cells(grid.cells));
  return j;
}

ClassifiedGrid grid_from_json(const json& j) {
  try {
    if (j.at("format") != "tanz2-grid") throw Error(Errc::IoFailure, "not a tanz2 grid document");
    ClassifiedGrid g;
    g.spec.center = {j.at("center").at(0).get<double>(), j.at("center").at(1).get<double>()};
    g.spec.width = j.at("width").get<double>();
    g.spec.height = j.at("height").get<double>();
    g.spec.cols = j.at("cols").get<int>();
    g.spec.rows = j.at("rows").get<int>();
    g.spec.validate();
    g.cells = unpack_cells(base64_decode(j.at("cells").get<std::string>()));
    if (g.cells.size() != static_cast<size_t>(g.spec.cols) * g.spec.rows)
      throw Error(Errc::IoFailure, "cell count does not match the grid size");
    return g;
  } catch (const json::exception& e) {
    throw Error(Errc::IoFailure, std::string("bad grid document: ") + e.what());
  }
}

namespace {

json complex_json(Complex<double> z) { return json{{"re", z.re}, {"im", z.im}}; }

json itinerary_json(const Itinerary& t) {
  json arr = json::array();
  for (const auto& s : t.symbols) {
    if (s.at_infinity)
      arr.push_back(json::array({"inf", s.l}));
    else
      arr.push_back(json::array({s.x, s.l}));
  }
  return json{{"symbols", arr}, {"terminated", t.terminated}};
}

}  // namespace

json report_json(const ParameterClass& pc, const Parameter& p, int budget) {
  json j;
  j["lambda"] = complex_json(p.lambda);
  j["budget"] = budget;
  j["verdict"] = verdict_name(pc.verdict);
  j["period"] = pc.period;
  j["singular_orbit"] = {{"seed", complex_json(p.asymptotic_value())},
                         {"fate", fate_name(pc.singular_orbit.fate)},
                         {"steps_used", pc.singular_orbit.steps_used}};
  if (pc.cycle) {
    const auto& c = *pc.cycle;
    j["cycle"] = {{"period", c.period},
                  {"representative", complex_json(c.representative.z)},
                  {"multiplier", complex_json(c.multiplier)},
                  {"multiplier_abs", abs(c.multiplier)},
                  {"kind", cycle_kind_name(c.kind)},
                  {"newton_residual", c.residual}};
  } else {
    j["cycle"] = nullptr;
  }
  j["hyperbolicity"] = "proxy: fate of the singular orbit, not a certified expansion bound";
  j["defaults"] = numeric_defaults();
  return j;
}

json report_json(const CantorReport& rep) {
  json j;
  j["lambda"] = complex_json(rep.lambda);
  j["kappa"] = rep.kappa;
  j["depth"] = rep.depth;
  j["seed"] = rep.seed;
  j["probes"] = {{"shape", "half disk minus asymptotic-value disk and cut ray"},
                 {"radius", rep.probes.radius},
                 {"disk", rep.probes.disk},
                 {"offset", rep.probes.offset},
                 {"points", rep.probes.points}};
  json words = json::array();
  for (const auto& w : rep.words) {
    words.push_back({{"word", itinerary_json(w.word)},
                     {"diameters", w.diameters},
                     {"raw_diameters", w.raw_diameters},
                     {"strictly_decreasing", w.strictly_decreasing}});
  }
  j["words"] = words;
  j["summary"] = {{"sampled_words", rep.words.size()},
                  {"strictly_decreasing_words", rep.decreasing_words},
                  {"max_diameter_at_depth", rep.max_final_diameter},
                  {"min_separation_at_depth", rep.min_separation},
                  {"min_word_distance", rep.min_word_distance},
                  {"conjugacy_checked", rep.conjugacy_checked},
                  {"conjugacy_passed", rep.conjugacy_passed}};
  j["defaults"] = numeric_defaults();
  return j;
}

json report_json(const BasinHeuristic& h) {
  auto px = [](std::pair<int, int> p) { return json::array({p.first, p.second}); };
  return json{{"kind", "grid heuristic (4-connected component of the origin pixel); not a certificate"},
              {"origin_pixel", px(h.origin_pixel)},
              {"plus_lambda_i_pixel", px(h.plus_pixel)},
              {"minus_lambda_i_pixel", px(h.minus_pixel)},
              {"plus_in_origin_component", h.plus_connected},
              {"minus_in_origin_component", h.minus_connected},
              {"component_size", h.component_size}};
}

}  // namespace tanz2
