#include <doctest.h>

#include <set>

#include "holoforge/dataset.hpp"
#include "holoforge/fusion.hpp"
#include "holoforge/io/container.hpp"
#include "holoforge/io/files.hpp"
#include "holoforge/io/manifest.hpp"
#include "holoforge/synth.hpp"
#include "support.hpp"

using namespace holoforge;
namespace fs = std::filesystem;

namespace {

std::vector<IndoorScan> indoor_scans(const ObjectRegistry& reg, std::size_t count) {
  std::vector<IndoorScan> out;
  for (const auto& cfg : enumerate_indoor(reg)) {
    if (out.size() == count) break;
    out.push_back({cfg, synth::object_hologram(reg.at(cfg.object_id), cfg, GridSpec{})});
  }
  return out;
}

std::vector<OutdoorScan> outdoor_scans(std::size_t count, std::uint64_t seed = 5) {
  std::vector<OutdoorScan> out;
  for (const auto& cfg : enumerate_outdoor(static_cast<int>((count + 3) / 4))) {
    if (out.size() == count) break;
    out.push_back({cfg, synth::soil_hologram(cfg, GridSpec{}, seed)});
  }
  return out;
}

GenerateOptions options_for(const fs::path& dir) {
  GenerateOptions o;
  o.out_dir = dir;
  o.seed = 17;
  o.volume.slices = 3;
  o.volume.z1_mm = 100;
  return o;
}

}  // namespace

TEST_CASE("indoor enumeration") {
  const auto reg = default_registry();
  const auto all = enumerate_indoor(reg);
  CHECK(all.size() == 208);
  CHECK(all[0].key() == "PMN-4_h40_N_s0");
  CHECK(all[1].key() == "PMN-4_h40_N_s20");
  CHECK(all[2].key() == "PMN-4_h40_S_s0");
  CHECK(all[8].key() == "PMN-4_h80_N_s0");
  CHECK(all[16].object_id == "PMN-1");
  CHECK(enumerate_indoor(std::span(reg.objects()).first(1)).size() == 16);
  CHECK(enumerate_indoor(std::span<const ObjectSpec>{}).empty());
  std::set<std::string> keys;
  for (const auto& c : all) keys.insert(c.key());
  CHECK(keys.size() == 208);
}

TEST_CASE("outdoor enumeration") {
  CHECK(enumerate_outdoor().size() == 200);
  const auto one = enumerate_outdoor(1);
  REQUIRE(one.size() == 4);
  CHECK(one[0].key() == "soil01_N");
  CHECK(one[1].key() == "soil01_S");
  CHECK(one[2].key() == "soil01_W");
  CHECK(one[3].key() == "soil01_E");
  CHECK(enumerate_outdoor(0).empty());
}

TEST_CASE("labels") {
  const auto reg = default_registry();
  const auto pmn = make_labels(IndoorConfig("PMN-4", 40, Direction::N, 0), reg);
  CHECK(pmn == LabelSet{"mine", "mine", "PMN-4"});
  CHECK(make_labels(IndoorConfig("clay-pot", 80, Direction::E, 20), reg) ==
        LabelSet{"non-mine", "pottery", "clay-pot"});
  CHECK(make_labels(IndoorConfig("stone", 80, Direction::E, 20), reg) ==
        LabelSet{"non-mine", "clutter", "stone"});
  CHECK(make_labels(std::nullopt, reg) == LabelSet{"non-mine", "background", "background"});
  CHECK(testing::error_kind([&] { make_labels(IndoorConfig("tank", 40, Direction::N, 0), reg); }) ==
        ErrorKind::not_found);
}

TEST_CASE("sample ids") {
  const IndoorConfig in("M-14", 80, Direction::S, 20);
  const OutdoorConfig out(3, Direction::W);
  CHECK(sample_id(in, out) == "M-14_h80_S_s20__soil03_W");
  CHECK(sample_id(std::nullopt, out) == "soil03_W");
}

TEST_CASE("2 indoor x 3 outdoor plus soil-only gives 9 records") {
  testing::TempDir dir;
  const auto reg = default_registry();
  const auto manifest = generate_dataset(reg, indoor_scans(reg, 2), outdoor_scans(3),
                                         options_for(dir.path()));
  REQUIRE(manifest.records.size() == 9);
  std::set<std::string> ids;
  std::size_t soil = 0;
  for (const auto& r : manifest.records) {
    ids.insert(r.id);
    if (r.soil_only()) {
      ++soil;
      CHECK_FALSE(r.annotation.has_value());
      CHECK(r.labels.ternary == "background");
      CHECK(r.labels.binary == "non-mine");
    } else {
      REQUIRE(r.annotation.has_value());
      CHECK(r.alpha == 0.14);
      CHECK((r.labels.binary == "mine") == (r.labels.ternary == "mine"));
    }
    CHECK(r.volume.has_value());
    for (Task t : kTasks) CHECK(r.side(t).has_value());
    CHECK(fs::exists(dir / r.hologram.path));
  }
  CHECK(ids.size() == 9);
  CHECK(soil == 3);
  CHECK(manifest.records[0].id == "PMN-4_h40_N_s0__soil01_N");
  CHECK(manifest.records[8].id == "soil01_W");
  CHECK(io::verify_manifest(manifest, dir.path()).empty());
  CHECK(manifest.splits.size() == 3);
}

TEST_CASE("records carry the fused scans and reconstructions") {
  testing::TempDir dir;
  const auto reg = default_registry();
  const auto in = indoor_scans(reg, 1);
  const auto out = outdoor_scans(1);
  auto opts = options_for(dir.path());
  opts.include_soil_only = false;
  opts.alpha = 0.3;
  const auto m = generate_dataset(reg, in, out, opts);
  REQUIRE(m.records.size() == 1);
  const auto& r = m.records[0];
  const auto fused = fuse(in[0].hologram, out[0].hologram, FusionCoefficient(0.3));
  CHECK(io::read_field(dir / r.hologram.path) == io::quantize_f32(fused));
  const auto vol = fuse_volume(reconstruct_volume(in[0].hologram, 0, 100, 3, opts.propagation),
                               reconstruct_volume(out[0].hologram, 0, 100, 3, opts.propagation),
                               FusionCoefficient(0.3));
  CHECK(io::read_volume(dir / r.volume->path) == io::quantize_f32(vol));

  opts.alpha = 0.0;
  const auto m0 = generate_dataset(reg, in, out, opts);
  CHECK(io::read_field(dir / m0.records[0].hologram.path) == io::quantize_f32(out[0].hologram));
  opts.alpha = 1.0;
  const auto m1 = generate_dataset(reg, in, out, opts);
  CHECK(io::read_field(dir / m1.records[0].hologram.path) == io::quantize_f32(in[0].hologram));
}

TEST_CASE("manifest round trips value-exactly") {
  testing::TempDir dir;
  const auto reg = default_registry();
  const auto m = generate_dataset(reg, indoor_scans(reg, 3), outdoor_scans(4),
                                  options_for(dir.path()));
  const auto back = io::read_manifest(dir / "manifest.json");
  CHECK(back.records == m.records);
  CHECK(back.splits == m.splits);
  CHECK(back.registry == m.registry);
  CHECK(back.volume == m.volume);
  CHECK(back.seed == 17);
  CHECK(back.alpha == 0.14);
  CHECK(io::dump(io::manifest_to_json(back)) == io::read_text(dir / "manifest.json"));
}

TEST_CASE("regeneration is byte-identical for any worker count") {
  testing::TempDir a, b;
  const auto reg = default_registry();
  const auto in = indoor_scans(reg, 4);
  const auto out = outdoor_scans(4);
  auto oa = options_for(a.path());
  auto ob = options_for(b.path());
  oa.jobs = 1;
  ob.jobs = 4;
  const auto ma = generate_dataset(reg, in, out, oa);
  generate_dataset(reg, in, out, ob);
  CHECK(io::read_file(a / "manifest.json") == io::read_file(b / "manifest.json"));
  for (const auto& r : ma.records) {
    CHECK(io::read_file(a / r.hologram.path) == io::read_file(b / r.hologram.path));
    CHECK(io::read_file(a / r.volume->path) == io::read_file(b / r.volume->path));
  }
  // and again into the same directory
  generate_dataset(reg, in, out, oa);
  CHECK(io::read_file(a / "manifest.json") == io::read_file(b / "manifest.json"));
}

TEST_CASE("verification catches missing and altered files") {
  testing::TempDir dir;
  const auto reg = default_registry();
  auto opts = options_for(dir.path());
  opts.volume.enabled = false;
  const auto m = generate_dataset(reg, indoor_scans(reg, 1), outdoor_scans(2), opts);
  CHECK_FALSE(fs::exists(dir / "volumes"));
  CHECK_FALSE(m.records[0].volume.has_value());
  fs::remove(dir / m.records[0].hologram.path);
  auto bytes = io::read_file(dir / m.records[1].hologram.path);
  bytes[20] ^= 1;
  io::write_file_atomic(dir / m.records[1].hologram.path, bytes);
  const auto problems = io::verify_manifest(m, dir.path());
  REQUIRE(problems.size() == 2);
  CHECK(problems[0].find("missing") != std::string::npos);
  CHECK(problems[1].find("checksum") != std::string::npos);
}

TEST_CASE("generation input errors") {
  testing::TempDir dir;
  const auto reg = default_registry();
  const auto in = indoor_scans(reg, 1);
  auto out = outdoor_scans(2);
  out[1].hologram = ComplexField2D::zeros(60, 60, 2.5);
  CHECK(testing::error_kind([&] { generate_dataset(reg, in, out, options_for(dir.path())); }) ==
        ErrorKind::shape_mismatch);
  CHECK(testing::error_kind([&] { generate_dataset(reg, in, {}, options_for(dir.path())); }) ==
        ErrorKind::invalid_argument);
  auto dup = outdoor_scans(1);
  dup.push_back(dup[0]);
  CHECK(testing::error_kind([&] { generate_dataset(reg, in, dup, options_for(dir.path())); }) ==
        ErrorKind::invalid_argument);
  auto bad = options_for(dir.path());
  bad.alpha = 2.0;
  CHECK(testing::error_kind([&] { generate_dataset(reg, in, outdoor_scans(1), bad); }) ==
        ErrorKind::invalid_argument);
}

TEST_CASE("soil scans are quarter turns of one patch") {
  const auto n = synth::soil_hologram({4, Direction::N}, GridSpec{}, 9);
  const auto e = synth::soil_hologram({4, Direction::E}, GridSpec{}, 9);
  const auto s = synth::soil_hologram({4, Direction::S}, GridSpec{}, 9);
  CHECK(s(0, 0) == n(59, 59));
  CHECK(e(0, 0) == n(59, 0));
  CHECK(synth::soil_hologram({5, Direction::N}, GridSpec{}, 9) != n);
  CHECK(synth::soil_hologram({4, Direction::N}, GridSpec{}, 9) == n);
}
