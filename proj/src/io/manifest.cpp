#include "holoforge/io/manifest.hpp"

#include <cstdio>
#include <system_error>

#include "holoforge/error.hpp"
#include "holoforge/io/container.hpp"
#include "holoforge/io/files.hpp"

namespace holoforge::io {
namespace {

constexpr int kRegistrySchemaVersion = 1;

std::string_view to_string(EvanescentMode m) {
  return m == EvanescentMode::zero ? "zero" : "decay";
}

EvanescentMode parse_evanescent(const std::string& s) {
  if (s == "zero") return EvanescentMode::zero;
  if (s == "decay") return EvanescentMode::decay;
  fail(ErrorKind::format, "unknown evanescent mode '" + s + "'");
}

std::uint32_t parse_crc(const std::string& hex) {
  require(hex.size() == 8, ErrorKind::format, "crc32 must be 8 hex digits");
  std::uint32_t v = 0;
  for (char ch : hex) {
    v <<= 4;
    if (ch >= '0' && ch <= '9') v |= static_cast<std::uint32_t>(ch - '0');
    else if (ch >= 'a' && ch <= 'f') v |= static_cast<std::uint32_t>(ch - 'a' + 10);
    else fail(ErrorKind::format, "crc32 must be lowercase hex");
  }
  return v;
}

json object_to_json(const ObjectSpec& o) {
  json fp;
  if (const auto* c = std::get_if<CircleFootprint>(&o.footprint)) {
    fp = {{"shape", "circle"}, {"diameter_mm", c->diameter_mm}};
  } else {
    const auto& r = std::get<RectFootprint>(o.footprint);
    fp = {{"shape", "rectangle"}, {"l1_mm", r.l1_mm}, {"l2_mm", r.l2_mm}};
  }
  return {{"id", o.id},
          {"name", o.name},
          {"category", std::string(to_string(o.category))},
          {"footprint", fp},
          {"height_mm", o.height_mm}};
}

ObjectSpec object_from_json(const json& j) {
  ObjectSpec o;
  o.id = j.at("id").get<std::string>();
  o.name = j.value("name", o.id);
  o.category = parse_category(j.at("category").get<std::string>());
  const auto& fp = j.at("footprint");
  const auto shape = fp.at("shape").get<std::string>();
  if (shape == "circle") {
    o.footprint = CircleFootprint{fp.at("diameter_mm").get<double>()};
  } else if (shape == "rectangle") {
    o.footprint = RectFootprint{fp.at("l1_mm").get<double>(), fp.at("l2_mm").get<double>()};
  } else {
    fail(ErrorKind::format, "object '" + o.id + "': unknown footprint shape '" + shape + "'");
  }
  o.height_mm = j.at("height_mm").get<double>();
  return o;
}

json file_to_json(const FileRef& f) {
  return {{"path", f.path}, {"crc32", crc_hex(f.crc32)}, {"bytes", f.bytes}};
}

FileRef file_from_json(const json& j) {
  return {j.at("path").get<std::string>(), parse_crc(j.at("crc32").get<std::string>()),
          j.at("bytes").get<std::uint64_t>()};
}

json record_to_json(const SampleRecord& r) {
  json j;
  j["id"] = r.id;
  if (r.indoor) {
    j["indoor"] = {{"object_id", r.indoor->object_id},
                   {"height_mm", r.indoor->height_mm},
                   {"orientation", std::string(to_string(r.indoor->orientation))},
                   {"slope_deg", r.indoor->slope_deg}};
  } else {
    j["indoor"] = nullptr;
  }
  j["outdoor"] = {{"patch", r.outdoor.patch},
                  {"direction", std::string(to_string(r.outdoor.direction))}};
  j["alpha"] = r.alpha;
  j["hologram"] = file_to_json(r.hologram);
  j["volume"] = r.volume ? file_to_json(*r.volume) : json(nullptr);
  j["labels"] = {{"binary", r.labels.binary},
                 {"ternary", r.labels.ternary},
                 {"multi", r.labels.multi}};
  if (r.annotation) {
    const auto& a = *r.annotation;
    j["annotation"] = {
        {"bbox", {a.x, a.y, a.w, a.h}},
        {"mask",
         {{"size", {a.mask.rows, a.mask.cols}},
          {"order", "column-major"},
          {"counts", encode_rle(a.mask)}}}};
  } else {
    j["annotation"] = nullptr;
  }
  json split = json::object();
  for (Task t : kTasks) {
    if (auto s = r.side(t)) split[std::string(to_string(t))] = std::string(to_string(*s));
  }
  j["split"] = split;
  return j;
}

SampleRecord record_from_json(const json& j) {
  SampleRecord r;
  r.id = j.at("id").get<std::string>();
  if (!j.at("indoor").is_null()) {
    const auto& in = j.at("indoor");
    r.indoor = IndoorConfig(in.at("object_id").get<std::string>(),
                            in.at("height_mm").get<int>(),
                            parse_direction(in.at("orientation").get<std::string>()),
                            in.at("slope_deg").get<int>());
  }
  const auto& out = j.at("outdoor");
  r.outdoor = OutdoorConfig(out.at("patch").get<int>(),
                            parse_direction(out.at("direction").get<std::string>()));
  r.alpha = j.at("alpha").get<double>();
  r.hologram = file_from_json(j.at("hologram"));
  if (!j.at("volume").is_null()) r.volume = file_from_json(j.at("volume"));
  const auto& labels = j.at("labels");
  r.labels = {labels.at("binary").get<std::string>(), labels.at("ternary").get<std::string>(),
              labels.at("multi").get<std::string>()};
  if (!j.at("annotation").is_null()) {
    const auto& a = j.at("annotation");
    const auto bbox = a.at("bbox").get<std::vector<int>>();
    require(bbox.size() == 4, ErrorKind::format, "bbox must have 4 entries");
    const auto& mask = a.at("mask");
    const auto size = mask.at("size").get<std::vector<std::size_t>>();
    require(size.size() == 2, ErrorKind::format, "mask size must have 2 entries");
    require(mask.value("order", "column-major") == "column-major", ErrorKind::format,
            "only column-major masks are supported");
    BBox box;
    box.x = bbox[0];
    box.y = bbox[1];
    box.w = bbox[2];
    box.h = bbox[3];
    box.mask = decode_rle(mask.at("counts").get<std::vector<std::uint32_t>>(), size[0], size[1]);
    r.annotation = std::move(box);
  }
  for (const auto& [key, value] : j.at("split").items()) {
    r.split[static_cast<std::size_t>(parse_task(key))] = parse_side(value.get<std::string>());
  }
  return r;
}

json summary_to_json(const SplitSummary& s) {
  return {{"train_fraction", s.train_fraction}, {"seed", s.seed},
          {"train_units", s.train_units},       {"test_units", s.test_units},
          {"train_records", s.train_records},   {"test_records", s.test_records}};
}

SplitSummary summary_from_json(Task task, const json& j) {
  SplitSummary s;
  s.task = task;
  s.train_fraction = j.at("train_fraction").get<double>();
  s.seed = j.at("seed").get<std::uint64_t>();
  s.train_units = j.at("train_units").get<std::vector<std::string>>();
  s.test_units = j.at("test_units").get<std::vector<std::string>>();
  s.train_records = j.at("train_records").get<std::size_t>();
  s.test_records = j.at("test_records").get<std::size_t>();
  return s;
}

template <typename F>
auto with_format_errors(F&& f, const std::string& context) {
  try {
    return f();
  } catch (const json::exception& e) {
    fail(ErrorKind::format, context + ": " + e.what());
  }
}

}  // namespace

std::string crc_hex(std::uint32_t crc) {
  char buf[9];
  std::snprintf(buf, sizeof buf, "%08x", crc);
  return buf;
}

json registry_to_json(const std::vector<ObjectSpec>& objects) {
  json list = json::array();
  for (const auto& o : objects) list.push_back(object_to_json(o));
  return {{"schema_version", kRegistrySchemaVersion}, {"objects", list}};
}

std::vector<ObjectSpec> registry_from_json(const json& doc) {
  return with_format_errors(
      [&] {
        const int version = doc.at("schema_version").get<int>();
        require(version == kRegistrySchemaVersion, ErrorKind::format,
                "unsupported registry schema_version " + std::to_string(version));
        std::vector<ObjectSpec> objects;
        for (const auto& o : doc.at("objects")) objects.push_back(object_from_json(o));
        return objects;
      },
      "registry");
}

ObjectRegistry read_registry(const std::filesystem::path& path) {
  const auto text = read_text(path);
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorKind::format, path.string() + ": " + e.what());
  }
  return ObjectRegistry(registry_from_json(doc));
}

void write_registry(const ObjectRegistry& registry, const std::filesystem::path& path) {
  write_text_atomic(path, dump(registry_to_json(registry.objects())));
}

json manifest_to_json(const DatasetManifest& m) {
  json doc;
  doc["schema_version"] = m.schema_version;
  doc["generator"] = "holoforge";
  doc["format_versions"] = {{"hgrm", kContainerVersion},
                            {"hvol", kContainerVersion},
                            {"manifest", kManifestSchemaVersion}};
  doc["registry"] = registry_to_json(m.registry);
  doc["alpha"] = m.alpha;
  doc["propagation"] = {{"frequency_hz", m.propagation.frequency_hz},
                        {"relative_permittivity", m.propagation.relative_permittivity},
                        {"evanescent", std::string(to_string(m.propagation.evanescent))},
                        {"pad_factor", m.propagation.pad_factor}};
  doc["volume"] = {{"enabled", m.volume.enabled},
                   {"z0_mm", m.volume.z0_mm},
                   {"z1_mm", m.volume.z1_mm},
                   {"slices", m.volume.slices}};
  doc["grid"] = {{"rows", m.rows}, {"cols", m.cols}, {"pitch_mm", m.pitch_mm}};
  doc["seed"] = m.seed;
  doc["include_soil_only"] = m.include_soil_only;
  doc["record_count"] = m.records.size();
  json splits = json::object();
  for (const auto& s : m.splits) splits[std::string(to_string(s.task))] = summary_to_json(s);
  doc["splits"] = splits;
  json records = json::array();
  for (const auto& r : m.records) records.push_back(record_to_json(r));
  doc["records"] = std::move(records);
  return doc;
}

DatasetManifest manifest_from_json(const json& doc) {
  return with_format_errors(
      [&] {
        DatasetManifest m;
        m.schema_version = doc.at("schema_version").get<int>();
        require(m.schema_version == kManifestSchemaVersion, ErrorKind::format,
                "unsupported manifest schema_version " + std::to_string(m.schema_version));
        m.registry = registry_from_json(doc.at("registry"));
        m.alpha = doc.at("alpha").get<double>();
        const auto& p = doc.at("propagation");
        m.propagation.frequency_hz = p.at("frequency_hz").get<double>();
        m.propagation.relative_permittivity = p.at("relative_permittivity").get<double>();
        m.propagation.evanescent = parse_evanescent(p.at("evanescent").get<std::string>());
        m.propagation.pad_factor = p.at("pad_factor").get<double>();
        const auto& v = doc.at("volume");
        m.volume = {v.at("enabled").get<bool>(), v.at("z0_mm").get<double>(),
                    v.at("z1_mm").get<double>(), v.at("slices").get<std::size_t>()};
        const auto& g = doc.at("grid");
        m.rows = g.at("rows").get<std::size_t>();
        m.cols = g.at("cols").get<std::size_t>();
        m.pitch_mm = g.at("pitch_mm").get<double>();
        m.seed = doc.at("seed").get<std::uint64_t>();
        m.include_soil_only = doc.at("include_soil_only").get<bool>();
        for (const auto& r : doc.at("records")) m.records.push_back(record_from_json(r));
        require(m.records.size() == doc.at("record_count").get<std::size_t>(),
                ErrorKind::format, "record_count does not match the records list");
        for (Task t : kTasks) {
          const auto name = std::string(to_string(t));
          if (doc.at("splits").contains(name)) {
            m.splits.push_back(summary_from_json(t, doc.at("splits").at(name)));
          }
        }
        return m;
      },
      "manifest");
}

std::string dump(const json& doc) {
  if (!doc.is_object()) return doc.dump(2) + "\n";
  // One record per line keeps 40k-record manifests diffable.
  std::string out = "{\n";
  bool first = true;
  for (const auto& [key, value] : doc.items()) {
    if (!first) out += ",\n";
    first = false;
    out += "  " + json(key).dump() + ": ";
    if (key == "records" && value.is_array() && !value.empty()) {
      out += "[\n";
      for (std::size_t i = 0; i < value.size(); ++i) {
        out += "    " + value[i].dump();
        out += i + 1 < value.size() ? ",\n" : "\n";
      }
      out += "  ]";
    } else {
      std::string nested = value.dump(2);
      for (std::size_t pos = 0; (pos = nested.find('\n', pos)) != std::string::npos; pos += 3) {
        nested.replace(pos, 1, "\n  ");
      }
      out += nested;
    }
  }
  out += "\n}\n";
  return out;
}

void write_manifest(const DatasetManifest& manifest, const std::filesystem::path& path) {
  write_text_atomic(path, dump(manifest_to_json(manifest)));
}

DatasetManifest read_manifest(const std::filesystem::path& path) {
  const auto text = read_text(path);
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorKind::format, path.string() + ": " + e.what());
  }
  return manifest_from_json(doc);
}

std::vector<std::string> verify_manifest(const DatasetManifest& manifest,
                                         const std::filesystem::path& root) {
  std::vector<std::string> problems;
  auto check = [&](const std::string& id, const FileRef& ref) {
    const auto path = root / ref.path;
    std::error_code ec;
    if (!std::filesystem::is_regular_file(path, ec)) {
      problems.push_back(id + ": missing " + ref.path);
      return;
    }
    const auto bytes = read_file(path);
    if (bytes.size() != ref.bytes) {
      problems.push_back(id + ": size mismatch for " + ref.path);
    } else if (content_crc(bytes) != ref.crc32) {
      problems.push_back(id + ": checksum mismatch for " + ref.path);
    }
  };
  for (const auto& r : manifest.records) {
    check(r.id, r.hologram);
    if (r.volume) check(r.id, *r.volume);
  }
  return problems;
}

json split_to_json(const SplitAssignment& a, const std::vector<SampleRecord>& records) {
  require(a.sides.size() == records.size(), ErrorKind::shape_mismatch,
          "split assignment does not match the record list");
  json assignments = json::object();
  for (std::size_t i = 0; i < records.size(); ++i) {
    assignments[records[i].id] = std::string(to_string(a.sides[i]));
  }
  return {{"task", std::string(to_string(a.spec.task))},
          {"seed", a.spec.seed},
          {"train_fraction", a.spec.train_fraction},
          {"train_units", a.train_units},
          {"test_units", a.test_units},
          {"train_records", a.train_records},
          {"test_records", a.test_records},
          {"assignments", assignments}};
}

json sweep_to_json(const AlphaSweepResult& result) {
  json table = json::array();
  for (const auto& row : result.grid) table.push_back({{"alpha", row.alpha}, {"score", row.score}});
  return {{"table", table}, {"best_alpha", result.best_alpha}, {"best_score", result.best_score}};
}

}  // namespace holoforge::io
