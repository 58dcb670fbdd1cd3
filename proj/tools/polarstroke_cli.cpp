#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "polarstroke/stroker.hpp"

namespace ps = polarstroke;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ps::ValidationError("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& bytes) {
  if (path.empty() || path == "-") {
    std::cout << bytes;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ps::ValidationError("cannot open output file: " + path);
  out << bytes;
}

struct CommonOpts {
  std::string input;
  std::string output;
  std::string style_file;
  std::string format = "auto";
  double q_deg = 4.0;
  double width = 1.0;
  double miter_limit = 4.0;
  std::string join = "miter";
  std::string cap = "none";
  std::vector<double> dash_lengths;
  double dash_offset = 0.0;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_output) {
  cmd->add_option("-i,--input", opts.input, "path-data text file")->required();
  if (with_output) {
    cmd->add_option("-o,--output", opts.output, "output file ('-' for stdout)");
    cmd->add_option("--format", opts.format, "json, svg, or auto (by extension)")
        ->check(CLI::IsMember({"json", "svg", "auto"}));
  }
  cmd->add_option("--q", opts.q_deg, "max tangent-angle step, degrees (0, 90]");
  cmd->add_option("--width", opts.width, "stroke width, path units");
  cmd->add_option("--join", opts.join, "none|bevel|miter|miter-truncate|miter-revert|triangular|round");
  cmd->add_option("--cap", opts.cap, "none|butt|square|round|triangular");
  cmd->add_option("--miter-limit", opts.miter_limit, "miter length limit over width/2");
  cmd->add_option("--style", opts.style_file, "JSON style sidecar (flags override it)");
  cmd->add_option("--dash-lengths", opts.dash_lengths, "dash pattern lengths");
  cmd->add_option("--dash-offset", opts.dash_offset, "dash phase offset");
}

ps::Path load_path(const CLI::App* cmd, const CommonOpts& opts) {
  ps::Path path = ps::parse_path(read_file(opts.input));
  if (!opts.style_file.empty()) {
    path.stroke = ps::parse_style_json(read_file(opts.style_file));
  }
  auto passed = [&](const std::string& name) { return cmd->count(name) > 0; };
  if (opts.style_file.empty() || passed("--width")) path.stroke.width = opts.width;
  if (opts.style_file.empty() || passed("--join"))
    path.stroke.join.kind = ps::join_kind_from_name(opts.join);
  if (opts.style_file.empty() || passed("--miter-limit"))
    path.stroke.join.miter_limit = opts.miter_limit;
  if (opts.style_file.empty() || passed("--cap")) path.stroke.cap = ps::cap_kind_from_name(opts.cap);
  if (passed("--dash-lengths")) {
    ps::DashPattern dash;
    dash.lengths = opts.dash_lengths;
    dash.offset = opts.dash_offset;
    dash.validate();
    path.stroke.dash = dash;
  }
  path.validate();
  return path;
}

ps::TessellationParams params_from(const CommonOpts& opts) {
  ps::TessellationParams params;
  params.q = opts.q_deg * ps::kPi / 180.0;
  params.width = opts.width;
  params.validate();
  return params;
}

ps::DocumentFormat pick_format(const CommonOpts& opts) {
  if (opts.format == "svg") return ps::DocumentFormat::Svg;
  if (opts.format == "json") return ps::DocumentFormat::Json;
  if (opts.output.size() >= 4 && opts.output.substr(opts.output.size() - 4) == ".svg") {
    return ps::DocumentFormat::Svg;
  }
  return ps::DocumentFormat::Json;
}

int run_tess(const CLI::App* cmd, const CommonOpts& opts, bool dashed) {
  ps::Path path = load_path(cmd, opts);
  ps::TessellationParams params = params_from(opts);
  params.width = path.stroke.width;
  if (dashed && !path.stroke.dash) {
    throw ps::ValidationError("dash command needs --dash-lengths or a style sidecar dash");
  }
  ps::Tessellation tess =
      dashed ? ps::stroke_dashed_path(path, params) : ps::stroke_path(path, params);
  ps::TessellationDocument doc = ps::build_document(std::move(tess), params, path.stroke);
  write_output(opts.output, ps::write_tessellation(doc, pick_format(opts)));
  return 0;
}

int run_stats(const CLI::App* cmd, const CommonOpts& opts, bool as_json) {
  ps::Path path = load_path(cmd, opts);
  ps::TessellationParams params = params_from(opts);
  params.width = path.stroke.width;
  ps::Tessellation tess = ps::stroke_path(path, params);
  ps::FacetStats stats = ps::facet_stats(tess, params.q, params.width);
  if (as_json) {
    nlohmann::ordered_json j;
    j["count"] = stats.count;
    j["excluded"] = stats.excluded;
    j["max_facet_deg"] = stats.max_deg;
    j["mean_facet_deg"] = stats.mean_deg;
    j["sd_facet_deg"] = stats.sd_deg;
    j["quads"] = tess.quads.size();
    write_output(opts.output, j.dump(2) + "\n");
  } else {
    std::ostringstream ss;
    ss << "quads:            " << tess.quads.size() << "\n"
       << "facets measured:  " << stats.count << " (excluded: " << stats.excluded << ")\n"
       << "max facet angle:  " << stats.max_deg << " deg\n"
       << "mean facet angle: " << stats.mean_deg << " deg\n"
       << "sd facet angle:   " << stats.sd_deg << " deg\n";
    write_output(opts.output, ss.str());
  }
  return 0;
}

int run_compare(const CLI::App* cmd, const CommonOpts& opts, bool as_json) {
  ps::Path path = load_path(cmd, opts);
  ps::TessellationParams params = params_from(opts);
  params.width = path.stroke.width;

  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  std::ostringstream text;
  text << "segment  quads  polar_max  polar_sd  uniform_max  uniform_sd  polar_cusp_sweep  "
          "uniform_cusp_sweep\n";
  int index = 0;
  for (const ps::Contour& contour : path.contours) {
    for (const ps::PathSegment& seg : contour.segments) {
      if (seg.is_zero_length()) continue;
      ps::Tessellation polar = ps::tessellate_segment(seg, params);
      int n = static_cast<int>(polar.quads.size());
      ps::Tessellation uniform = ps::uniform_tessellate(seg, params, n);
      ps::FacetStats ps_stats = ps::facet_stats(polar, params.q, params.width);
      ps::FacetStats un_stats = ps::facet_stats(uniform, params.q, params.width);
      double polar_sweep = ps::max_coincident_pivot_sweep(polar) * 180.0 / ps::kPi;
      double uniform_sweep = ps::max_coincident_pivot_sweep(uniform) * 180.0 / ps::kPi;

      nlohmann::ordered_json row;
      row["segment"] = index;
      row["quads"] = n;
      row["polar_max_deg"] = ps_stats.max_deg;
      row["polar_sd_deg"] = ps_stats.sd_deg;
      row["uniform_max_deg"] = un_stats.max_deg;
      row["uniform_sd_deg"] = un_stats.sd_deg;
      row["polar_cusp_sweep_deg"] = polar_sweep;
      row["uniform_cusp_sweep_deg"] = uniform_sweep;
      rows.push_back(row);

      char buf[256];
      std::snprintf(buf, sizeof(buf), "%7d  %5d  %9.3f  %8.3f  %11.3f  %10.3f  %16.1f  %18.1f\n",
                    index, n, ps_stats.max_deg, ps_stats.sd_deg, un_stats.max_deg, un_stats.sd_deg,
                    polar_sweep, uniform_sweep);
      text << buf;
      ++index;
    }
  }
  write_output(opts.output, as_json ? rows.dump(2) + "\n" : text.str());
  return 0;
}

int run_oracle_check(const CLI::App* cmd, const CommonOpts& opts, std::uint64_t seed, int samples) {
  ps::Path path = load_path(cmd, opts);
  // The brute-force reference region is a round-capped, round-joined stroke;
  // check against that styling regardless of the requested join/cap.
  path.stroke.join.kind = ps::JoinKind::Round;
  path.stroke.cap = ps::CapKind::Round;
  ps::TessellationParams params = params_from(opts);
  params.width = path.stroke.width;

  ps::Tessellation tess = ps::stroke_path(path, params);

  std::vector<ps::SampledCurve> curves;
  double scale = 1.0;
  for (const ps::Contour& contour : path.contours) {
    for (const ps::PathSegment& seg : contour.segments) {
      if (seg.is_zero_length()) continue;
      curves.push_back(ps::sample_curve(seg, 4096, params.width / 8.0));
      for (int i = 0; i < seg.point_count; ++i) {
        scale = std::max({scale, std::abs(seg.points[i].x), std::abs(seg.points[i].y)});
      }
    }
  }
  if (curves.empty()) throw ps::ValidationError("path has no usable segments");

  auto distance_to_path = [&](ps::Point2 pt) {
    double best = std::numeric_limits<double>::infinity();
    for (const ps::SampledCurve& sc : curves) best = std::min(best, sc.distance_to(pt));
    return best;
  };

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double half = params.width / 2.0;
  double margin = half * std::cos(params.q / 2.0);

  int inside_tested = 0, inside_missed = 0;
  while (inside_tested < samples) {
    const ps::SampledCurve& sc = curves[rng() % curves.size()];
    const ps::Point2 base = sc.points[rng() % sc.points.size()];
    if (std::abs(base.x) > 1e6 * scale || std::abs(base.y) > 1e6 * scale) continue;
    double r = margin * 0.999 * std::sqrt(unit(rng));
    double theta = ps::kTwoPi * unit(rng);
    ps::Point2 pt = base + r * ps::unit_vector(theta);
    ++inside_tested;
    if (!ps::point_in_tessellation(tess, pt)) ++inside_missed;
  }

  double min_x = 1e300, min_y = 1e300, max_x = -1e300, max_y = -1e300;
  for (const ps::Contour& contour : path.contours) {
    for (const ps::PathSegment& seg : contour.segments) {
      for (int i = 0; i < seg.point_count; ++i) {
        min_x = std::min(min_x, seg.points[i].x);
        max_x = std::max(max_x, seg.points[i].x);
        min_y = std::min(min_y, seg.points[i].y);
        max_y = std::max(max_y, seg.points[i].y);
      }
    }
  }
  double pad = 4.0 * params.width;
  int outside_tested = 0, outside_hit = 0;
  int attempts = 0;
  while (outside_tested < samples && attempts < samples * 200) {
    ++attempts;
    ps::Point2 pt{min_x - pad + (max_x - min_x + 2 * pad) * unit(rng),
                  min_y - pad + (max_y - min_y + 2 * pad) * unit(rng)};
    if (distance_to_path(pt) < 1.02 * half) continue;
    ++outside_tested;
    if (ps::point_in_tessellation(tess, pt)) ++outside_hit;
  }

  double inside_cov = inside_tested ? 1.0 - static_cast<double>(inside_missed) / inside_tested : 0;
  double outside_ok = outside_tested ? 1.0 - static_cast<double>(outside_hit) / outside_tested : 1;

  std::ostringstream report;
  report << "seed:             " << seed << "\n"
         << "inside points:    " << inside_tested << "  missed: " << inside_missed << "  ("
         << inside_cov * 100.0 << "% covered, need >= 99.5%)\n"
         << "outside points:   " << outside_tested << "  hit: " << outside_hit << "  ("
         << outside_ok * 100.0 << "% clear, need >= 99.5%)\n";
  bool ok = inside_cov >= 0.995 && outside_ok >= 0.995;
  report << (ok ? "oracle-check: PASS\n" : "oracle-check: FAIL\n");
  write_output(opts.output, report.str());
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polar stroking tessellator"};
  app.require_subcommand(1);

  CommonOpts tess_opts, dash_opts, stats_opts, compare_opts, oracle_opts;
  bool stats_json = false, compare_json = false;
  std::uint64_t seed = 1;
  int samples = 2000;

  CLI::App* tess = app.add_subcommand("tess", "tessellate a stroked path");
  add_common(tess, tess_opts, true);
  CLI::App* dash = app.add_subcommand("dash", "dash a path, then tessellate the on-pieces");
  add_common(dash, dash_opts, true);
  CLI::App* stats = app.add_subcommand("stats", "facet-angle statistics");
  add_common(stats, stats_opts, true);
  stats->add_flag("--json", stats_json, "emit JSON instead of text");
  CLI::App* compare = app.add_subcommand("compare", "polar vs uniform at equal quad count");
  add_common(compare, compare_opts, true);
  compare->add_flag("--json", compare_json, "emit JSON instead of text");
  CLI::App* oracle = app.add_subcommand("oracle-check", "coverage check against the brute-force oracle");
  add_common(oracle, oracle_opts, true);
  oracle->add_option("--seed", seed, "RNG seed (reported in the output)");
  oracle->add_option("--samples", samples, "points per side of the check");

  CLI11_PARSE(app, argc, argv);

  try {
    if (tess->parsed()) return run_tess(tess, tess_opts, false);
    if (dash->parsed()) return run_tess(dash, dash_opts, true);
    if (stats->parsed()) return run_stats(stats, stats_opts, stats_json);
    if (compare->parsed()) return run_compare(compare, compare_opts, compare_json);
    if (oracle->parsed()) return run_oracle_check(oracle, oracle_opts, seed, samples);
  } catch (const polarstroke::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
