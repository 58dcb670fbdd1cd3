#include "polarstroke/arc_dash.hpp"

#include <algorithm>
#include <cmath>

#include "polarstroke/path.hpp"

namespace polarstroke {

void DashPattern::validate() const {
  if (lengths.empty()) {
    throw EmptyPattern("dash pattern has no entries");
  }
  double sum = 0.0;
  for (double v : lengths) {
    if (!std::isfinite(v) || v < 0.0) {
      throw ValidationError("dash lengths must be finite and nonnegative");
    }
    sum += v;
  }
  if (!(sum > 0.0)) {
    throw EmptyPattern("dash pattern has no positive entry");
  }
  if (!std::isfinite(offset)) {
    throw ValidationError("dash offset must be finite");
  }
}

double DashPattern::cycle_length() const {
  double sum = 0.0;
  for (double v : lengths) sum += v;
  if (lengths.size() % 2 != 0) sum *= 2.0;
  return sum;
}

ArcLengthTable accumulate_arc_length(Tessellation& tess) {
  ArcLengthTable table;
  table.cum_length.resize(tess.ribs.size(), 0.0);

  double running = 0.0;
  int current_contour = -1;
  for (const LinkInfo& link : tess.links) {
    if (link.contour != current_contour) {
      if (current_contour >= 0) table.contour_totals.push_back(running);
      current_contour = link.contour;
      running = 0.0;
    }
    for (int i = 0; i < link.rib_count; ++i) {
      Rib& rib = tess.ribs[link.first_rib + i];
      if (link.kind == LinkKind::Segment && i > 0) {
        const Rib& prev = tess.ribs[link.first_rib + i - 1];
        if (rib.t >= prev.t) {
          running += distance(rib.position, prev.position);
        }
        // Backward parameter steps contribute nothing.
      }
      rib.cum_length = running;
      table.cum_length[link.first_rib + i] = running;
    }
  }
  if (current_contour >= 0) table.contour_totals.push_back(running);
  for (double v : table.contour_totals) table.total += v;
  return table;
}

std::vector<VertexTexCoord> texture_coords(const Tessellation& tess, const ArcLengthTable& table) {
  std::vector<VertexTexCoord> out;
  out.reserve(tess.ribs.size() * 2);
  for (std::size_t i = 0; i < tess.ribs.size(); ++i) {
    out.push_back({table.cum_length[i], 0.0});
    out.push_back({table.cum_length[i], 1.0});
  }
  return out;
}

namespace {

struct PatternWalker {
  const std::vector<double>& lengths;
  int index = 0;
  double remaining = 0.0;

  PatternWalker(const std::vector<double>& l, double phase) : lengths(l) {
    remaining = lengths[0] - phase;
    while (remaining <= 0.0) {
      advance();
    }
  }

  bool on() const { return index % 2 == 0; }

  void advance() {
    index = static_cast<int>((index + 1) % lengths.size());
    remaining += lengths[index];
  }
};

}  // namespace

DashResult dash_path(const Path& path, const DashPattern& pattern,
                     const TessellationParams& params) {
  pattern.validate();
  params.validate();

  std::vector<double> lengths = pattern.lengths;
  if (lengths.size() % 2 != 0) {
    lengths.insert(lengths.end(), pattern.lengths.begin(), pattern.lengths.end());
  }
  double cycle = 0.0;
  for (double v : lengths) cycle += v;
  double phase = std::fmod(pattern.offset, cycle);
  if (phase < 0.0) phase += cycle;

  bool keep_dots = path.stroke.cap == CapKind::Round || path.stroke.cap == CapKind::Square;

  DashResult result;
  for (std::size_t ci = 0; ci < path.contours.size(); ++ci) {
    const Contour& contour = path.contours[ci];

    // Chordal centerline from the polar tessellation of each segment.
    std::vector<DashPoint> line;
    for (std::size_t si = 0; si < contour.segments.size(); ++si) {
      Tessellation tess = tessellate_segment(contour.segments[si], params);
      if (tess.empty()) continue;
      for (std::size_t r = line.empty() ? 0 : 1; r < tess.ribs.size(); ++r) {
        const Rib& rib = tess.ribs[r];
        line.push_back({rib.position, rib.t, static_cast<int>(si), static_cast<int>(ci)});
      }
    }
    if (line.size() < 2) continue;

    PatternWalker walker(lengths, phase);
    DashPiece piece;
    piece.on = walker.on();
    piece.contour = static_cast<int>(ci);
    piece.points.push_back(line.front());
    double piece_start_s = 0.0;
    double s = 0.0;

    auto close_piece = [&](double end_s, DashPoint at) {
      piece.points.push_back(at);
      piece.length = end_s - piece_start_s;
      bool zero = piece.length <= 1e-15;
      if (!zero) {
        result.pieces.push_back(std::move(piece));
      } else if (piece.on && keep_dots) {
        piece.points = {at};
        result.pieces.push_back(std::move(piece));
      }
      piece = DashPiece{};
      piece.contour = static_cast<int>(ci);
      piece_start_s = end_s;
    };

    for (std::size_t i = 1; i < line.size(); ++i) {
      DashPoint a = line[i - 1];
      DashPoint b = line[i];
      double chord = distance(a.position, b.position);
      double consumed = 0.0;
      while (walker.remaining < chord - consumed) {
        consumed += walker.remaining;
        s += walker.remaining;
        walker.remaining = 0.0;
        double f = chord > 0.0 ? consumed / chord : 0.0;
        // Chords spanning two segments are the zero-length seam chords, so a
        // split always lands inside a single segment.
        DashPoint split;
        split.position = a.position + f * (b.position - a.position);
        split.t = a.segment_index == b.segment_index ? a.t + f * (b.t - a.t) : b.t;
        split.segment_index = b.segment_index;
        split.contour = static_cast<int>(ci);
        close_piece(s, split);
        walker.advance();
        piece.on = walker.on();
        piece.points.push_back(split);
      }
      walker.remaining -= chord - consumed;
      s += chord - consumed;
      piece.points.push_back(b);
    }
    // Final piece runs to the contour end.
    piece.points.pop_back();  // close_piece re-appends the terminal point
    close_piece(s, line.back());
    result.total_length += s;
  }
  return result;
}

}  // namespace polarstroke
