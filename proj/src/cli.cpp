#include "holoforge/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <mutex>
#include <ostream>
#include <set>

#include "holoforge/dataset.hpp"
#include "holoforge/error.hpp"
#include "holoforge/fusion.hpp"
#include "holoforge/gridder.hpp"
#include "holoforge/io/container.hpp"
#include "holoforge/io/files.hpp"
#include "holoforge/io/manifest.hpp"
#include "holoforge/io/png.hpp"
#include "holoforge/io/scan_csv.hpp"
#include "holoforge/metrics.hpp"
#include "holoforge/synth.hpp"

namespace holoforge::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct PropagationFlags {
  std::string preset = "air";
  std::optional<double> eps_r;
  double freq_hz = kDefaultFrequencyHz;

  void add(CLI::App* cmd) {
    cmd->add_option("--preset", preset, "Medium preset")
        ->check(CLI::IsMember({"air", "soil"}))
        ->capture_default_str();
    cmd->add_option("--eps-r", eps_r, "Relative permittivity (overrides the preset)");
    cmd->add_option("--freq-hz", freq_hz, "Radar frequency")->capture_default_str();
  }

  PropagationParams params() const {
    PropagationParams p = preset == "soil" ? PropagationParams::soil() : PropagationParams::air();
    if (eps_r) p.relative_permittivity = *eps_r;
    p.frequency_hz = freq_hz;
    p.validate();
    return p;
  }
};

struct DepthFlags {
  double z0_mm = 0.0;
  double z1_mm = 200.0;
  std::size_t slices = 21;

  void add(CLI::App* cmd) {
    cmd->add_option("--z0-mm", z0_mm, "First slice depth")->capture_default_str();
    cmd->add_option("--z1-mm", z1_mm, "Last slice depth")->capture_default_str();
    cmd->add_option("--slices", slices, "Number of slices")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  }
};

// Magic-sniffed container contents.
struct Loaded {
  std::optional<ComplexField2D> field;
  std::optional<ComplexVolume> volume;
};

Loaded load_container(const fs::path& path) {
  const auto bytes = io::read_file(path);
  Loaded out;
  auto tag = [&](std::string_view magic) {
    return bytes.size() >= 4 && std::equal(magic.begin(), magic.end(), bytes.begin());
  };
  try {
    if (tag("HVOL")) {
      out.volume = io::decode_volume(bytes);
    } else {
      out.field = io::decode_field(bytes);
    }
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + e.what());
  }
  return out;
}

ComplexField2D load_field(const fs::path& path) {
  auto c = load_container(path);
  require(c.field.has_value(), ErrorKind::format, path.string() + ": expected a 2D hologram");
  return std::move(*c.field);
}

std::size_t progress_step(std::size_t total) { return std::max<std::size_t>(1, total / 20); }

std::vector<double> parse_grid(const std::string& text) {
  auto number = [&](std::string_view s) {
    double v = 0.0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    require(ec == std::errc{} && ptr == end, ErrorKind::invalid_argument,
            "bad number '" + std::string(s) + "' in --grid");
    return v;
  };
  auto split = [](std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
      const auto pos = s.find(sep, start);
      parts.push_back(s.substr(start, pos - start));
      if (pos == std::string_view::npos) break;
      start = pos + 1;
    }
    return parts;
  };
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    require(parts.size() == 3, ErrorKind::invalid_argument, "--grid range must be start:step:stop");
    const double start = number(parts[0]);
    const double step = number(parts[1]);
    const double stop = number(parts[2]);
    require(step > 0 && stop >= start, ErrorKind::invalid_argument, "--grid range is empty");
    const auto n = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    std::vector<double> grid(n);
    // Snap to 12 decimals so 0:0.01:1 yields the same doubles as i / 100.
    for (std::size_t i = 0; i < n; ++i) {
      grid[i] = std::round((start + static_cast<double>(i) * step) * 1e12) / 1e12;
    }
    return grid;
  }
  std::vector<double> grid;
  for (auto part : split(text, ',')) grid.push_back(number(part));
  return grid;
}

json field_info(const ComplexField2D& f) {
  const auto amp = amplitude(f);
  const auto [lo, hi] = std::minmax_element(amp.values.begin(), amp.values.end());
  return {{"kind", "hologram"}, {"rows", f.rows()},   {"cols", f.cols()},
          {"pitch_mm", f.pitch_mm()}, {"amplitude_min", *lo}, {"amplitude_max", *hi}};
}

// ---------------------------------------------------------------- commands

void cmd_ingest(const std::vector<std::string>& inputs, const std::string& out_arg,
                std::size_t rows, std::size_t cols, double pitch, std::ostream& out) {
  const fs::path target(out_arg);
  const bool single_file = inputs.size() == 1 && target.extension() == ".hgrm";
  if (!single_file) fs::create_directories(target);
  for (const auto& input : inputs) {
    const auto trace = io::read_scan(input);
    const auto field = grid_scan(trace, centered_grid(trace, rows, cols, pitch));
    const fs::path dest = single_file ? target : target / (fs::path(input).stem().string() + ".hgrm");
    const auto bytes = io::encode_field(field);
    io::write_file_atomic(dest, bytes);
    out << json{{"input", input},
                {"output", dest.string()},
                {"samples", trace.size()},
                {"crc32", io::crc_hex(io::content_crc(bytes))}}.dump()
        << "\n";
  }
}

void cmd_invert(const std::string& input, const std::string& output, const DepthFlags& depth,
                const PropagationFlags& prop, std::size_t jobs, std::ostream& out) {
  const auto field = load_field(input);
  const auto volume = reconstruct_volume(field, depth.z0_mm, depth.z1_mm, depth.slices,
                                         prop.params(), jobs);
  const auto bytes = io::encode_volume(volume);
  io::write_file_atomic(output, bytes);
  const auto focus = focus_depth(volume);
  out << json{{"output", output},
              {"slices", volume.slices()},
              {"z0_mm", volume.z0_mm()},
              {"dz_mm", volume.dz_mm()},
              {"focus", {{"slice", focus.slice}, {"z_mm", focus.z_mm}, {"peak", focus.score}}},
              {"crc32", io::crc_hex(io::content_crc(bytes))}}.dump()
      << "\n";
}

void cmd_fuse(const std::string& indoor, const std::string& outdoor, const std::string& output,
              double alpha_value, std::ostream& out) {
  const FusionCoefficient alpha(alpha_value);
  const auto a = load_container(indoor);
  const auto b = load_container(outdoor);
  io::Bytes bytes;
  if (a.field && b.field) {
    bytes = io::encode_field(fuse(*a.field, *b.field, alpha));
  } else if (a.volume && b.volume) {
    bytes = io::encode_volume(fuse_volume(*a.volume, *b.volume, alpha));
  } else {
    fail(ErrorKind::shape_mismatch, "cannot fuse a hologram with a volume");
  }
  io::write_file_atomic(output, bytes);
  out << json{{"output", output}, {"alpha", alpha.value()}, {"crc32", io::crc_hex(io::content_crc(bytes))}}.dump()
      << "\n";
}

void cmd_calibrate(const std::string& indoor, const std::string& outdoor,
                   const std::string& natural, const std::string& grid_text,
                   const std::string& mode, const std::string& report, std::ostream& out) {
  const auto grid = grid_text.empty() ? default_alpha_grid() : parse_grid(grid_text);
  const auto result =
      calibrate_alpha(load_field(indoor), load_field(outdoor), load_field(natural), grid,
                      mode == "amplitude" ? CorrelationMode::amplitude : CorrelationMode::complex);
  const auto doc = io::sweep_to_json(result);
  if (!report.empty()) io::write_text_atomic(report, io::dump(doc));
  out << doc.dump() << "\n";
}

std::vector<IndoorScan> load_indoor(const fs::path& dir, const ObjectRegistry& registry) {
  require(fs::is_directory(dir), ErrorKind::not_found, "indoor directory " + dir.string() + " not found");
  std::vector<IndoorScan> scans;
  for (const auto& cfg : enumerate_indoor(registry)) {
    const auto path = dir / (cfg.key() + ".hgrm");
    require(fs::exists(path), ErrorKind::not_found, "missing indoor scan " + path.string());
    scans.push_back({cfg, load_field(path)});
  }
  return scans;
}

std::vector<OutdoorScan> load_outdoor(const fs::path& dir) {
  require(fs::is_directory(dir), ErrorKind::not_found, "outdoor directory " + dir.string() + " not found");
  int patches = 0;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() != ".hgrm") continue;
    const auto cfg = parse_outdoor_key(entry.path().stem().string());
    require(cfg.has_value(), ErrorKind::invalid_argument,
            "unrecognized outdoor scan name " + entry.path().filename().string());
    patches = std::max(patches, cfg->patch);
  }
  require(patches > 0, ErrorKind::not_found, "no outdoor scans in " + dir.string());
  std::vector<OutdoorScan> scans;
  for (const auto& cfg : enumerate_outdoor(patches)) {
    const auto path = dir / (cfg.key() + ".hgrm");
    require(fs::exists(path), ErrorKind::not_found, "missing outdoor scan " + path.string());
    scans.push_back({cfg, load_field(path)});
  }
  return scans;
}

struct GenerateFlags {
  std::string registry;
  std::string indoor;
  std::string outdoor;
  std::string out;
  double alpha = 0.14;
  double train_fraction = 0.8;
  bool no_soil_only = false;
  bool no_volumes = false;
  PropagationFlags prop;
  DepthFlags depth;
};

void cmd_generate(const GenerateFlags& g, std::uint64_t seed, std::size_t jobs,
                  std::ostream& out, std::ostream& err) {
  const auto registry = io::read_registry(g.registry);
  const auto indoor = load_indoor(g.indoor, registry);
  const auto outdoor = load_outdoor(g.outdoor);

  GenerateOptions options;
  options.alpha = g.alpha;
  options.propagation = g.prop.params();
  options.volume = {!g.no_volumes, g.depth.z0_mm, g.depth.z1_mm, g.depth.slices};
  options.include_soil_only = !g.no_soil_only;
  options.seed = seed;
  options.train_fraction = g.train_fraction;
  options.jobs = jobs;
  options.out_dir = g.out;
  std::mutex log;
  options.progress = [&](std::size_t done, std::size_t total) {
    if (done % progress_step(total) != 0 && done != total) return;
    std::lock_guard lock(log);
    err << "generate: " << done << "/" << total << " records\n" << std::flush;
  };
  const auto manifest = generate_dataset(registry, indoor, outdoor, options);

  std::size_t soil_only = 0;
  for (const auto& r : manifest.records) soil_only += r.soil_only() ? 1 : 0;
  json splits = json::array();
  for (const auto& s : manifest.splits) {
    splits.push_back({{"task", std::string(to_string(s.task))},
                      {"train_records", s.train_records},
                      {"test_records", s.test_records},
                      {"train_units", s.train_units.size()},
                      {"test_units", s.test_units.size()}});
  }
  out << json{{"manifest", (fs::path(g.out) / "manifest.json").string()},
              {"records", manifest.records.size()},
              {"fused", manifest.records.size() - soil_only},
              {"soil_only", soil_only},
              {"indoor_scans", indoor.size()},
              {"outdoor_scans", outdoor.size()},
              {"seed", seed},
              {"splits", splits}}.dump()
      << "\n";
}

void cmd_split(const std::string& manifest_path, const std::string& task, std::uint64_t seed,
               double fraction, const std::string& output, std::ostream& out) {
  const auto manifest = io::read_manifest(manifest_path);
  const auto assignment = make_split(manifest.records, {parse_task(task), fraction, seed});
  const auto doc = io::split_to_json(assignment, manifest.records);
  if (!output.empty()) io::write_text_atomic(output, io::dump(doc));
  out << json{{"task", task},
              {"seed", seed},
              {"train_records", assignment.train_records},
              {"test_records", assignment.test_records},
              {"train_units", assignment.train_units},
              {"test_units", assignment.test_units}}.dump()
      << "\n";
}

void cmd_inspect(const std::string& input, const std::string& png_prefix, std::size_t slice,
                 std::ostream& out) {
  const auto bytes = io::read_file(input);
  auto c = load_container(input);
  json info;
  ComplexField2D view = ComplexField2D::zeros(2, 2, 1.0);
  if (c.field) {
    info = field_info(*c.field);
    view = *c.field;
  } else {
    const auto& v = *c.volume;
    require(slice < v.slices(), ErrorKind::invalid_argument,
            "slice " + std::to_string(slice) + " out of range");
    view = v.slice(slice);
    const auto focus = focus_depth(v);
    info = field_info(view);
    info["kind"] = "volume";
    info["slices"] = v.slices();
    info["z0_mm"] = v.z0_mm();
    info["dz_mm"] = v.dz_mm();
    info["slice"] = slice;
    info["focus"] = {{"slice", focus.slice}, {"z_mm", focus.z_mm}, {"peak", focus.score}};
  }
  info["file"] = input;
  info["bytes"] = bytes.size();
  info["crc32"] = io::crc_hex(io::content_crc(bytes));
  if (!png_prefix.empty()) {
    const std::string amp = png_prefix + ".amplitude.png";
    const std::string ph = png_prefix + ".phase.png";
    io::render_png(view, io::Channel::amplitude, amp);
    io::render_png(view, io::Channel::phase, ph);
    info["png"] = {amp, ph};
  }
  out << info.dump() << "\n";
}

std::map<std::string, std::string> read_predictions(const fs::path& path) {
  const auto text = io::read_text(path);
  std::map<std::string, std::string> preds;
  std::size_t line_no = 0;
  std::size_t start = 0;
  bool header = true;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    std::string line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (header) {
      require(line == "sample_id,label", ErrorKind::format,
              path.string() + ":1: expected header 'sample_id,label'");
      header = false;
      continue;
    }
    const auto comma = line.find(',');
    require(comma != std::string::npos && line.find(',', comma + 1) == std::string::npos,
            ErrorKind::format, path.string() + ":" + std::to_string(line_no) + ": expected 2 fields");
    const auto id = line.substr(0, comma);
    require(preds.emplace(id, line.substr(comma + 1)).second, ErrorKind::format,
            path.string() + ":" + std::to_string(line_no) + ": duplicate sample '" + id + "'");
  }
  require(!header, ErrorKind::format, path.string() + ": empty predictions file");
  return preds;
}

void cmd_eval(const std::string& predictions, const std::string& manifest_path,
              const std::string& task_name, const std::string& side, std::ostream& out) {
  const Task task = parse_task(task_name);
  const auto manifest = io::read_manifest(manifest_path);
  const auto preds = read_predictions(predictions);

  std::set<std::string> label_set;
  std::map<std::string, const SampleRecord*> by_id;
  for (const auto& r : manifest.records) {
    label_set.insert(r.labels.for_task(task));
    by_id.emplace(r.id, &r);
  }
  for (const auto& [id, label] : preds) {
    require(by_id.count(id) > 0, ErrorKind::not_found, "prediction for unknown sample '" + id + "'");
    require(label_set.count(label) > 0, ErrorKind::invalid_argument,
            "unknown " + task_name + " label '" + label + "' for sample '" + id + "'");
  }

  ConfusionMatrix cm({label_set.begin(), label_set.end()});
  for (const auto& r : manifest.records) {
    if (side != "all") {
      const auto s = r.side(task);
      if (!s || *s != parse_side(side)) continue;
    }
    const auto it = preds.find(r.id);
    require(it != preds.end(), ErrorKind::not_found, "no prediction for sample '" + r.id + "'");
    cm.add(r.labels.for_task(task), it->second);
  }
  require(cm.total() > 0, ErrorKind::degenerate_input, "no records on side '" + side + "'");

  const auto micro = f1_micro(cm);
  json classes = json::array();
  for (const auto& m : per_class_metrics(cm)) {
    classes.push_back({{"label", m.label},
                       {"precision", m.precision.value},
                       {"recall", m.recall.value},
                       {"f1", m.f1.value},
                       {"support", m.support},
                       {"degenerate", m.precision.degenerate || m.recall.degenerate || m.f1.degenerate}});
  }
  out << json{{"task", task_name},
              {"side", side},
              {"samples", cm.total()},
              {"f1_micro", micro.value},
              {"degenerate", micro.degenerate},
              {"classes", classes}}.dump()
      << "\n";
}

void cmd_synth(const std::string& out_dir, const std::string& registry_path, std::size_t objects,
               int patches, std::uint64_t seed, std::size_t jobs, std::ostream& out) {
  const auto registry = registry_path.empty() ? default_registry() : io::read_registry(registry_path);
  synth::FixtureOptions options;
  options.objects = objects;
  options.patches = patches;
  options.seed = seed;
  options.jobs = jobs;
  synth::write_fixture(out_dir, registry, options);
  const std::size_t used = objects == 0 ? registry.size() : objects;
  out << json{{"out", out_dir},
              {"objects", used},
              {"indoor_scans", used * 16},
              {"outdoor_scans", patches * 4}}.dump()
      << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Microwave holography dataset toolkit", "holoforge"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  auto add_seed = [&](CLI::App* cmd) {
    cmd->add_option("--seed", seed, "Random seed")->envname("HOLOFORGE_SEED")->capture_default_str();
  };
  auto add_jobs = [&](CLI::App* cmd) {
    cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  };

  std::vector<std::string> ingest_inputs;
  std::string ingest_out;
  std::size_t rows = kDefaultGridSize, cols = kDefaultGridSize;
  double pitch = kDefaultPitchMm;
  auto* ingest = app.add_subcommand("ingest", "Grid scan CSV files into holograms");
  ingest->add_option("scans", ingest_inputs, "Scan CSV files")->required()->check(CLI::ExistingFile);
  ingest->add_option("--out", ingest_out, "Output directory, or .hgrm path for one scan")->required();
  ingest->add_option("--rows", rows)->capture_default_str();
  ingest->add_option("--cols", cols)->capture_default_str();
  ingest->add_option("--pitch-mm", pitch)->capture_default_str();

  std::string invert_in, invert_out;
  DepthFlags invert_depth;
  PropagationFlags invert_prop;
  auto* invert = app.add_subcommand("invert", "Reconstruct a volume from a hologram");
  invert->add_option("hologram", invert_in)->required()->check(CLI::ExistingFile);
  invert->add_option("--out", invert_out, "Output .hvol path")->required();
  invert_depth.add(invert);
  invert_prop.add(invert);
  add_jobs(invert);

  std::string fuse_in, fuse_outdoor, fuse_out;
  double fuse_alpha = 0.14;
  auto* fuse_cmd = app.add_subcommand("fuse", "Mix an indoor and an outdoor scan");
  fuse_cmd->add_option("--indoor", fuse_in, "Indoor hologram or volume")->required()->check(CLI::ExistingFile);
  fuse_cmd->add_option("--outdoor", fuse_outdoor, "Outdoor hologram or volume")->required()->check(CLI::ExistingFile);
  fuse_cmd->add_option("--out", fuse_out, "Output path")->required();
  fuse_cmd->add_option("--alpha", fuse_alpha)->capture_default_str();

  std::string cal_in, cal_outdoor, cal_natural, cal_grid, cal_mode = "complex", cal_report;
  auto* calibrate = app.add_subcommand("calibrate", "Sweep alpha against a natural scan");
  calibrate->add_option("--indoor", cal_in)->required()->check(CLI::ExistingFile);
  calibrate->add_option("--outdoor", cal_outdoor)->required()->check(CLI::ExistingFile);
  calibrate->add_option("--natural", cal_natural)->required()->check(CLI::ExistingFile);
  calibrate->add_option("--grid", cal_grid, "start:step:stop or a comma list (default 0:0.01:1)");
  calibrate->add_option("--mode", cal_mode)->check(CLI::IsMember({"complex", "amplitude"}))->capture_default_str();
  calibrate->add_option("--out", cal_report, "Also write the table to this file");

  GenerateFlags gen;
  auto* generate = app.add_subcommand("generate", "Build the fused dataset and manifest");
  // Option values for subcommands live in a [generate] (etc.) section.
  app.set_config("--config", "", "TOML/INI file with option defaults; flags win");
  generate->fallthrough();
  generate->add_option("--registry", gen.registry)->required();
  generate->add_option("--indoor", gen.indoor, "Directory of indoor .hgrm scans")->required();
  generate->add_option("--outdoor", gen.outdoor, "Directory of outdoor .hgrm scans")->required();
  generate->add_option("--out", gen.out, "Dataset directory")->required();
  generate->add_option("--alpha", gen.alpha)->capture_default_str();
  generate->add_option("--train-fraction", gen.train_fraction)->capture_default_str();
  generate->add_flag("--no-soil-only", gen.no_soil_only, "Skip the soil-only records");
  generate->add_flag("--no-volumes", gen.no_volumes, "Skip volume reconstruction");
  gen.prop.add(generate);
  gen.depth.add(generate);
  add_seed(generate);
  add_jobs(generate);

  std::string split_manifest, split_task = "binary", split_out;
  double split_fraction = 0.8;
  auto* split = app.add_subcommand("split", "Recompute a train/test split");
  split->add_option("--manifest", split_manifest)->required()->check(CLI::ExistingFile);
  split->add_option("--task", split_task)->check(CLI::IsMember({"binary", "ternary", "multi"}))->capture_default_str();
  split->add_option("--train-fraction", split_fraction)->capture_default_str();
  split->add_option("--out", split_out, "Write the full assignment here");
  add_seed(split);

  std::string inspect_in, inspect_png;
  std::size_t inspect_slice = 0;
  auto* inspect = app.add_subcommand("inspect", "Print container metadata and render PNGs");
  inspect->add_option("file", inspect_in)->required()->check(CLI::ExistingFile);
  inspect->add_option("--png", inspect_png, "Write <prefix>.amplitude.png and <prefix>.phase.png");
  inspect->add_option("--slice", inspect_slice, "Volume slice to summarize and render");

  std::string eval_pred, eval_manifest, eval_task = "binary", eval_side = "test";
  auto* eval = app.add_subcommand("eval", "Score predictions against manifest labels");
  eval->add_option("--predictions", eval_pred, "CSV with header sample_id,label")->required()->check(CLI::ExistingFile);
  eval->add_option("--manifest", eval_manifest)->required()->check(CLI::ExistingFile);
  eval->add_option("--task", eval_task)->check(CLI::IsMember({"binary", "ternary", "multi"}))->capture_default_str();
  eval->add_option("--side", eval_side)->check(CLI::IsMember({"train", "test", "all"}))->capture_default_str();

  std::string synth_out, synth_registry;
  std::size_t synth_objects = 0;
  int synth_patches = kDefaultPatchCount;
  auto* synth_cmd = app.add_subcommand("synth", "Write a synthetic scan fixture");
  synth_cmd->add_option("--out", synth_out)->required();
  synth_cmd->add_option("--registry", synth_registry, "Registry JSON (default: built-in 13 objects)");
  synth_cmd->add_option("--objects", synth_objects, "Use only the first N objects (0 = all)");
  synth_cmd->add_option("--patches", synth_patches)->check(CLI::PositiveNumber)->capture_default_str();
  add_seed(synth_cmd);
  add_jobs(synth_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*ingest) cmd_ingest(ingest_inputs, ingest_out, rows, cols, pitch, out);
    if (*invert) cmd_invert(invert_in, invert_out, invert_depth, invert_prop, jobs, out);
    if (*fuse_cmd) cmd_fuse(fuse_in, fuse_outdoor, fuse_out, fuse_alpha, out);
    if (*calibrate) cmd_calibrate(cal_in, cal_outdoor, cal_natural, cal_grid, cal_mode, cal_report, out);
    if (*generate) cmd_generate(gen, seed, jobs, out, err);
    if (*split) cmd_split(split_manifest, split_task, seed, split_fraction, split_out, out);
    if (*inspect) cmd_inspect(inspect_in, inspect_png, inspect_slice, out);
    if (*eval) cmd_eval(eval_pred, eval_manifest, eval_task, eval_side, out);
    if (*synth_cmd) cmd_synth(synth_out, synth_registry, synth_objects, synth_patches, seed, jobs, out);
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return 1;
  } catch (const fs::filesystem_error& e) {
    err << "error: io: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace holoforge::cli
