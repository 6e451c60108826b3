#pragma once

#include <cstdint>
#include <string>

#include "sp1/io.hpp"

namespace sp1 {

enum class Format { Json, Dot, Svg, Csv };

/// Parses "json", "dot", "svg" or "csv"; ParseError otherwise.
Format parse_format(const std::string& name);

struct RunOptions {
  Format format = Format::Json;
  bool check = false;
  std::uint64_t seed = 0;
};

struct RunOutput {
  std::string text;
  bool checks_passed = true;
};

/// Runs the task block named `task` of a scene. The scene must hold a
/// "field" and exactly one task block, and that block must be `task`.
/// With `check` the instance's invariant suite runs and its outcome is
/// reported under "checks" in JSON output.
RunOutput run_scene(const io::Json& scene, const std::string& task, const RunOptions& options);

/// Name of the single task block in a scene.
std::string scene_task(const io::Json& scene);

/// SVG plot of the finite root valuations of a profile over t ∈ [0, t_max].
std::string profile_svg(const RootProfile& profile);

}  // namespace sp1
