#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tanz2/io.hpp"

#include <cstdio>
#include <fstream>
#include <iterator>

using namespace tanz2;
using C = Complex<double>;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

ClassifiedGrid tiny(int cols, int rows, Cell fill) {
  return {GridSpec::from_corners(-1, -1, 1, 1, cols, rows), std::vector<Cell>(static_cast<size_t>(cols) * rows, fill)};
}

}  // namespace

TEST_CASE("1x1 ppm layout") {
  auto bytes = ppm_bytes(tiny(1, 1, Cell{class_origin, 1, 3}), default_palette());
  CHECK(bytes.size() == 11 + 3);
  CHECK(bytes.substr(0, 11) == "P6\n1 1\n255\n");
  CHECK(bytes.substr(11, 3) == std::string("\xff\xff\xff", 3));
}

TEST_CASE("ppm header and row order") {
  auto g = tiny(3, 2, Cell{class_origin, 1, 1});
  g.at(2, 0) = Cell{class_escape, 0, 1};
  g.at(0, 1) = Cell{class_undetermined, 0, 5};
  auto bytes = ppm_bytes(g, default_palette());
  std::string head = "P6\n3 2\n255\n";
  REQUIRE(bytes.size() == head.size() + 18);
  CHECK(bytes.substr(0, head.size()) == head);
  CHECK(static_cast<unsigned char>(bytes[head.size() + 6]) == 0);
  CHECK(static_cast<unsigned char>(bytes[head.size() + 9]) == 128);
}

TEST_CASE("ppm files are byte identical across writes") {
  auto g = tiny(7, 5, Cell{2, 2, 9});
  g.at(3, 3) = Cell{class_origin, 1, 2};
  std::string a = "/tmp/tanz2_io_a.ppm", b = "/tmp/tanz2_io_b.ppm";
  write_ppm(g, default_palette(), a);
  write_ppm(g, default_palette(), b);
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a) == ppm_bytes(g, default_palette()));
  std::remove(a.c_str());
  std::remove(b.c_str());
}

TEST_CASE("missing palette entry fails before writing") {
  auto g = tiny(2, 2, Cell{class_origin, 1, 1});
  g.at(1, 1) = Cell{7, 7, 3};
  Palette pal{{class_origin, {255, 255, 255}}};
  std::string path = "/tmp/tanz2_io_missing.ppm";
  std::remove(path.c_str());
  try {
    write_ppm(g, pal, path);
    FAIL("expected an exception");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::IoFailure);
  }
  CHECK_FALSE(std::ifstream(path).good());
}

TEST_CASE("default palette covers all classes with the documented colours") {
  auto pal = default_palette();
  CHECK(pal.at(class_origin) == RGB{255, 255, 255});
  CHECK(pal.at(class_escape) == RGB{0, 0, 0});
  CHECK(pal.at(class_undetermined) == RGB{128, 128, 128});
  for (int p = 1; p <= 64; ++p) CHECK(pal.count(p) == 1);
  CHECK(pal.at(1) != pal.at(2));
}

TEST_CASE("shaded ppm keeps the header and the slowest pixel darkest") {
  auto g = tiny(3, 1, Cell{class_origin, 1, 2});
  g.at(1, 0).steps = 10;
  g.at(2, 0) = Cell{class_escape, 0, 4};
  auto plain = ppm_bytes(g, default_palette()), shaded = ppm_bytes_shaded(g, default_palette());
  REQUIRE(plain.size() == shaded.size());
  size_t h = plain.size() - 9;
  CHECK(shaded.substr(0, h) == plain.substr(0, h));
  CHECK(static_cast<unsigned char>(shaded[h]) == 255);
  CHECK(static_cast<unsigned char>(shaded[h + 3]) < 255);
  CHECK(shaded.substr(h + 6) == plain.substr(h + 6));
}

TEST_CASE("base64") {
  CHECK(base64_encode("") == "");
  CHECK(base64_encode("f") == "Zg==");
  CHECK(base64_encode("fo") == "Zm8=");
  CHECK(base64_encode("foo") == "Zm9v");
  CHECK(base64_encode("foobar") == "Zm9vYmFy");
  for (const std::string& s : std::vector<std::string>{"", "f", "fo", "foo", "foob", "fooba", "foobar", std::string("\0\xff\x10", 3)})
    CHECK(base64_decode(base64_encode(s)) == s);
  CHECK_THROWS_AS(base64_decode("abc"), Error);
}

TEST_CASE("cell packing is little endian") {
  auto bytes = pack_cells({Cell{1, 2, 258}});
  REQUIRE(bytes.size() == 12);
  CHECK(bytes == std::string("\x01\0\0\0\x02\0\0\0\x02\x01\0\0", 12));
  CHECK(unpack_cells(bytes) == std::vector<Cell>{Cell{1, 2, 258}});
  CHECK_THROWS_AS(unpack_cells("abc"), Error);
}

TEST_CASE("grid json round trip") {
  auto g = scan_dynamical(Parameter(2.0, 0.1), GridSpec::from_corners(-3, -2, 3, 2, 33, 21), 500);
  auto j = grid_to_json(g, {{"note", "test"}});
  CHECK(j["format"] == "tanz2-grid");
  CHECK(j["cols"] == 33);
  CHECK(j["rows"] == 21);
  auto back = grid_from_json(nlohmann::ordered_json::parse(j.dump()));
  CHECK(back == g);
  j["cols"] = 34;
  CHECK_THROWS_AS(grid_from_json(j), Error);
  CHECK_THROWS_AS(grid_from_json(nlohmann::ordered_json{{"format", "other"}}), Error);
}

TEST_CASE("reports carry numeric defaults and labels") {
  Parameter p(0.85, 0);
  auto pc = classify_parameter(p, default_budget);
  auto j = report_json(pc, p, default_budget);
  CHECK(j["verdict"] == "OriginOnly");
  CHECK(j["defaults"]["budget"] == 2000);
  CHECK(j["defaults"]["resolution"] == 512);
  CHECK(j["defaults"]["kappa"] == 2.0);
  CHECK(j["defaults"]["pole_epsilon"] == 1e-12);
  CHECK(j["hyperbolicity"].get<std::string>().find("proxy") != std::string::npos);

  auto rep = cantor_diagnostics(p, 3, 4, 2.0, 1);
  auto jc = report_json(rep);
  CHECK(jc["words"].size() == 3);
  CHECK(jc["summary"]["conjugacy_checked"] == jc["summary"]["conjugacy_passed"]);
  CHECK(jc["defaults"]["boundary_slack"] == 1e-9);

  auto g = scan_dynamical(p, GridSpec::from_corners(-3, -3, 3, 3, 64, 64), 500);
  auto jb = report_json(immediate_basin_heuristic(p, g));
  CHECK(jb["kind"].get<std::string>().find("heuristic") != std::string::npos);
  CHECK(jb["plus_in_origin_component"] == true);
}
