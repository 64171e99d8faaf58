#include "holoforge/dataset.hpp"

#include <atomic>
#include <map>

#include "holoforge/error.hpp"
#include "holoforge/fusion.hpp"
#include "holoforge/io/container.hpp"
#include "holoforge/io/files.hpp"
#include "holoforge/io/manifest.hpp"
#include "parallel.hpp"

namespace holoforge {

std::vector<IndoorConfig> enumerate_indoor(std::span<const ObjectSpec> objects) {
  std::vector<IndoorConfig> out;
  out.reserve(objects.size() * 16);
  for (const auto& o : objects) {
    for (int h : kIndoorHeightsMm) {
      for (Direction d : kDirections) {
        for (int s : kIndoorSlopesDeg) out.emplace_back(o.id, h, d, s);
      }
    }
  }
  return out;
}

std::vector<IndoorConfig> enumerate_indoor(const ObjectRegistry& registry) {
  return enumerate_indoor(std::span<const ObjectSpec>(registry.objects()));
}

std::vector<OutdoorConfig> enumerate_outdoor(int patch_count) {
  require(patch_count >= 0, ErrorKind::invalid_argument, "patch count must be >= 0");
  std::vector<OutdoorConfig> out;
  out.reserve(static_cast<std::size_t>(patch_count) * 4);
  for (int j = 1; j <= patch_count; ++j) {
    for (Direction d : kDirections) out.emplace_back(j, d);
  }
  return out;
}

LabelSet make_labels(const std::optional<IndoorConfig>& indoor,
                     const ObjectRegistry& registry) {
  if (!indoor) {
    return {std::string(kNonMineLabel), std::string(kBackgroundLabel),
            std::string(kBackgroundLabel)};
  }
  const auto& spec = registry.at(indoor->object_id);
  return {std::string(spec.category == Category::mine ? kMineLabel : kNonMineLabel),
          std::string(to_string(spec.category)), spec.id};
}

SplitSummary summarize(const SplitAssignment& a) {
  return {a.spec.task,  a.spec.train_fraction, a.spec.seed,       a.train_units,
          a.test_units, a.train_records,       a.test_records};
}

void apply_split(std::vector<SampleRecord>& records, const SplitAssignment& a) {
  require(a.sides.size() == records.size(), ErrorKind::shape_mismatch,
          "split assignment does not match the record list");
  for (std::size_t i = 0; i < records.size(); ++i) {
    records[i].split[static_cast<std::size_t>(a.spec.task)] = a.sides[i];
  }
}

DatasetManifest generate_dataset(const ObjectRegistry& registry,
                                 const std::vector<IndoorScan>& indoor,
                                 const std::vector<OutdoorScan>& outdoor,
                                 const GenerateOptions& options) {
  const FusionCoefficient alpha(options.alpha);
  options.propagation.validate();
  SplitSpec{Task::binary, options.train_fraction, options.seed}.validate();
  require(!outdoor.empty(), ErrorKind::invalid_argument, "no outdoor scans supplied");
  require(!options.out_dir.empty(), ErrorKind::invalid_argument, "output directory not set");
  if (options.volume.enabled) {
    require(options.volume.slices >= 1, ErrorKind::invalid_argument,
            "slice count must be at least 1");
  }

  const ComplexField2D& reference = outdoor.front().hologram;
  for (const auto& s : indoor) {
    require(s.hologram.same_geometry(reference), ErrorKind::shape_mismatch,
            "indoor scan " + s.config.key() + " differs in shape or pitch");
    registry.at(s.config.object_id);
  }
  for (const auto& s : outdoor) {
    require(s.hologram.same_geometry(reference), ErrorKind::shape_mismatch,
            "outdoor scan " + s.config.key() + " differs in shape or pitch");
  }

  GridSpec grid;
  grid.rows = reference.rows();
  grid.cols = reference.cols();
  grid.pitch_mm = reference.pitch_mm();

  std::vector<BBox> annotations;
  std::vector<LabelSet> indoor_labels;
  annotations.reserve(indoor.size());
  for (const auto& s : indoor) {
    annotations.push_back(make_annotation(registry.at(s.config.object_id), s.config, grid));
    indoor_labels.push_back(make_labels(s.config, registry));
  }

  // Volumes are linear in the hologram, so each scan is reconstructed once and
  // the reconstructions are fused per record.
  std::vector<std::optional<ComplexVolume>> indoor_volumes(indoor.size());
  std::vector<std::optional<ComplexVolume>> outdoor_volumes(outdoor.size());
  if (options.volume.enabled) {
    const auto& v = options.volume;
    detail::parallel_for(indoor.size() + outdoor.size(), options.jobs, [&](std::size_t i) {
      const auto& field = i < indoor.size() ? indoor[i].hologram
                                            : outdoor[i - indoor.size()].hologram;
      auto volume = reconstruct_volume(field, v.z0_mm, v.z1_mm, v.slices, options.propagation);
      if (i < indoor.size()) {
        indoor_volumes[i] = std::move(volume);
      } else {
        outdoor_volumes[i - indoor.size()] = std::move(volume);
      }
    });
  }

  const std::size_t fused = indoor.size() * outdoor.size();
  const std::size_t total = fused + (options.include_soil_only ? outdoor.size() : 0);
  std::vector<SampleRecord> records(total);
  for (std::size_t i = 0; i < total; ++i) {
    auto& r = records[i];
    if (i < fused) {
      const std::size_t a = i / outdoor.size();
      const std::size_t b = i % outdoor.size();
      r.indoor = indoor[a].config;
      r.outdoor = outdoor[b].config;
      r.alpha = alpha.value();
      r.labels = indoor_labels[a];
      r.annotation = annotations[a];
    } else {
      r.outdoor = outdoor[i - fused].config;
      r.alpha = 0.0;
      r.labels = make_labels(std::nullopt, registry);
    }
    r.id = sample_id(r.indoor, r.outdoor);
  }
  {
    std::map<std::string, std::size_t> seen;
    for (std::size_t i = 0; i < total; ++i) {
      require(seen.emplace(records[i].id, i).second, ErrorKind::invalid_argument,
              "duplicate sample id '" + records[i].id + "'");
    }
  }

  const auto& root = options.out_dir;
  std::filesystem::create_directories(root / "holograms");
  if (options.volume.enabled) std::filesystem::create_directories(root / "volumes");

  std::atomic<std::size_t> done{0};
  detail::parallel_for(total, options.jobs, [&](std::size_t i) {
    auto& r = records[i];
    const bool soil = i >= fused;
    const std::size_t a = soil ? 0 : i / outdoor.size();
    const std::size_t b = soil ? i - fused : i % outdoor.size();

    auto store = [&](const io::Bytes& bytes, const std::string& rel) {
      io::write_file_atomic(root / rel, bytes);
      return FileRef{rel, io::content_crc(bytes), bytes.size()};
    };

    const auto hologram = soil ? outdoor[b].hologram
                               : fuse(indoor[a].hologram, outdoor[b].hologram, alpha);
    r.hologram = store(io::encode_field(hologram), "holograms/" + r.id + ".hgrm");
    if (options.volume.enabled) {
      const auto volume = soil ? *outdoor_volumes[b]
                               : fuse_volume(*indoor_volumes[a], *outdoor_volumes[b], alpha);
      r.volume = store(io::encode_volume(volume), "volumes/" + r.id + ".hvol");
    }
    const std::size_t finished = ++done;
    if (options.progress) options.progress(finished, total);
  });

  DatasetManifest manifest;
  manifest.registry = registry.objects();
  manifest.alpha = alpha.value();
  manifest.propagation = options.propagation;
  manifest.volume = options.volume;
  manifest.rows = grid.rows;
  manifest.cols = grid.cols;
  manifest.pitch_mm = grid.pitch_mm;
  manifest.seed = options.seed;
  manifest.include_soil_only = options.include_soil_only;
  for (Task t : kTasks) {
    const auto assignment = make_split(records, {t, options.train_fraction, options.seed});
    apply_split(records, assignment);
    manifest.splits.push_back(summarize(assignment));
  }
  manifest.records = std::move(records);
  io::write_manifest(manifest, root / "manifest.json");
  return manifest;
}

}  // namespace holoforge
