#include "polarstroke/path_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace polarstroke {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

// ---------------------------------------------------------------------------
// Path-data parsing
// ---------------------------------------------------------------------------

class PathDataParser {
public:
  explicit PathDataParser(const std::string& text) : text_(text) {}

  Path parse() {
    skip_separators();
    if (eof()) return path_;
    if (peek() != 'M' && peek() != 'm') {
      throw ParseError(pos_, "moveto command");
    }
    while (!eof()) {
      char cmd = take_command();
      dispatch(cmd);
      skip_separators();
    }
    flush_contour(false);
    return path_;
  }

private:
  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_separators() {
    while (!eof() && (std::isspace(static_cast<unsigned char>(peek())) || peek() == ',')) ++pos_;
  }

  bool number_ahead() {
    skip_separators();
    if (eof()) return false;
    char c = peek();
    return (c >= '0' && c <= '9') || c == '+' || c == '-' || c == '.';
  }

  char take_command() {
    skip_separators();
    if (eof()) throw ParseError(pos_, "command letter");
    char c = text_[pos_];
    if (!std::isalpha(static_cast<unsigned char>(c))) {
      throw ParseError(pos_, "command letter");
    }
    ++pos_;
    return c;
  }

  double take_number() {
    skip_separators();
    std::size_t start = pos_;
    if (eof()) throw ParseError(pos_, "number");
    if (peek() == '+' || peek() == '-') ++pos_;
    std::size_t digits_start = pos_;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (!eof() && peek() == '.') {
      ++pos_;
      while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    if (pos_ == digits_start ||
        (pos_ == digits_start + 1 && text_[digits_start] == '.')) {
      throw ParseError(start, "number");
    }
    if (!eof() && (peek() == 'e' || peek() == 'E')) {
      std::size_t mark = pos_;
      ++pos_;
      if (!eof() && (peek() == '+' || peek() == '-')) ++pos_;
      if (eof() || !std::isdigit(static_cast<unsigned char>(peek()))) {
        pos_ = mark;  // the 'e' belongs to the next token
      } else {
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      }
    }
    double value = 0.0;
    auto res = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (res.ec == std::errc::result_out_of_range || !std::isfinite(value)) {
      throw ValidationError("non-finite number in path data at byte " + std::to_string(start));
    }
    if (res.ec != std::errc()) {
      throw ParseError(start, "number");
    }
    return value;
  }

  bool take_flag() {
    skip_separators();
    if (eof() || (peek() != '0' && peek() != '1')) {
      throw ParseError(pos_, "arc flag (0 or 1)");
    }
    return text_[pos_++] == '1';
  }

  Point2 take_point(bool relative) {
    double x = take_number();
    double y = take_number();
    if (relative) return {current_.x + x, current_.y + y};
    return {x, y};
  }

  void begin_contour(Point2 at) {
    flush_contour(false);
    contour_.segments.clear();
    contour_.closed = false;
    contour_open_ = true;
    current_ = at;
    subpath_start_ = at;
    last_cubic_control_.reset();
    last_quad_control_.reset();
  }

  void flush_contour(bool closed) {
    if (!contour_open_) return;
    contour_.closed = closed;
    if (!contour_.segments.empty()) {
      path_.contours.push_back(contour_);
    }
    contour_ = Contour{};
    contour_open_ = false;
  }

  void add_segment(const PathSegment& seg) {
    if (!contour_open_) begin_contour(current_);
    contour_.segments.push_back(seg);
    current_ = seg.stop_point();
  }

  void close_contour() {
    if (!contour_open_ || contour_.segments.empty()) {
      current_ = subpath_start_;
      return;
    }
    if (distance(current_, subpath_start_) > 1e-12) {
      add_segment(PathSegment::line(current_, subpath_start_));
    }
    // Per SVG, drawing continues from the closed subpath's start point.
    current_ = subpath_start_;
    flush_contour(true);
  }

  void dispatch(char cmd) {
    bool rel = std::islower(static_cast<unsigned char>(cmd));
    switch (std::toupper(static_cast<unsigned char>(cmd))) {
      case 'M': {
        begin_contour(take_point(rel));
        while (number_ahead()) {
          Point2 to = take_point(rel);
          add_segment(PathSegment::line(current_, to));
        }
        break;
      }
      case 'L':
        do {
          add_segment(PathSegment::line(current_, take_point(rel)));
        } while (number_ahead());
        reset_reflections();
        break;
      case 'H':
        do {
          double x = take_number();
          add_segment(PathSegment::line(current_, {rel ? current_.x + x : x, current_.y}));
        } while (number_ahead());
        reset_reflections();
        break;
      case 'V':
        do {
          double y = take_number();
          add_segment(PathSegment::line(current_, {current_.x, rel ? current_.y + y : y}));
        } while (number_ahead());
        reset_reflections();
        break;
      case 'C':
        do {
          Point2 c1 = take_point(rel);
          Point2 c2 = take_point(rel);
          Point2 to = take_point(rel);
          add_segment(PathSegment::cubic(current_, c1, c2, to));
          last_cubic_control_ = c2;
          last_quad_control_.reset();
        } while (number_ahead());
        break;
      case 'S':
        do {
          Point2 c1 = last_cubic_control_ ? current_ + (current_ - *last_cubic_control_) : current_;
          Point2 c2 = take_point(rel);
          Point2 to = take_point(rel);
          add_segment(PathSegment::cubic(current_, c1, c2, to));
          last_cubic_control_ = c2;
          last_quad_control_.reset();
        } while (number_ahead());
        break;
      case 'Q':
        do {
          Point2 c = take_point(rel);
          Point2 to = take_point(rel);
          add_segment(PathSegment::quadratic(current_, c, to));
          last_quad_control_ = c;
          last_cubic_control_.reset();
        } while (number_ahead());
        break;
      case 'T':
        do {
          Point2 c = last_quad_control_ ? current_ + (current_ - *last_quad_control_) : current_;
          Point2 to = take_point(rel);
          add_segment(PathSegment::quadratic(current_, c, to));
          last_quad_control_ = c;
          last_cubic_control_.reset();
        } while (number_ahead());
        break;
      case 'A':
        do {
          double rx = take_number();
          double ry = take_number();
          double rot = take_number();
          bool large = take_flag();
          bool sweep = take_flag();
          Point2 to = take_point(rel);
          for (const PathSegment& seg : arc_to_conics(current_, rx, ry, rot, large, sweep, to)) {
            add_segment(seg);
          }
          current_ = to;
          reset_reflections();
        } while (number_ahead());
        break;
      case 'K':
        do {
          Point2 c = take_point(rel);
          double w = take_number();
          if (!std::isfinite(w)) throw ValidationError("non-finite conic weight");
          Point2 to = take_point(rel);
          add_segment(PathSegment::conic(current_, c, to, w));
          reset_reflections();
        } while (number_ahead());
        break;
      case 'Z':
        close_contour();
        break;
      default:
        throw ParseError(pos_ - 1, "known command letter");
    }
    if (std::toupper(static_cast<unsigned char>(cmd)) != 'S' &&
        std::toupper(static_cast<unsigned char>(cmd)) != 'C' &&
        std::toupper(static_cast<unsigned char>(cmd)) != 'Q' &&
        std::toupper(static_cast<unsigned char>(cmd)) != 'T') {
      reset_reflections();
    }
  }

  void reset_reflections() {
    last_cubic_control_.reset();
    last_quad_control_.reset();
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  Path path_;
  Contour contour_;
  bool contour_open_ = false;
  Point2 current_{};
  Point2 subpath_start_{};
  std::optional<Point2> last_cubic_control_;
  std::optional<Point2> last_quad_control_;
};

}  // namespace

void Path::validate() const {
  for (const Contour& contour : contours) {
    for (std::size_t i = 1; i < contour.segments.size(); ++i) {
      if (distance(contour.segments[i - 1].stop_point(), contour.segments[i].start_point()) >
          1e-9) {
        throw ValidationError("contour segments do not share endpoints");
      }
    }
    if (contour.closed && !contour.segments.empty()) {
      if (distance(contour.segments.back().stop_point(), contour.segments.front().start_point()) >
          1e-9) {
        throw ValidationError("closed contour does not return to its start");
      }
    }
  }
  if (!(stroke.width > 0.0)) throw ValidationError("stroke width must be positive");
  if (stroke.join.miter_limit < 1.0) throw ValidationError("miter limit must be >= 1");
  if (stroke.dash) stroke.dash->validate();
}

Path parse_path(const std::string& text) { return PathDataParser(text).parse(); }

std::string to_path_data(const Path& path) {
  std::string out;
  auto append = [&](const std::string& s) {
    if (!out.empty()) out += ' ';
    out += s;
  };
  for (const Contour& contour : path.contours) {
    if (contour.segments.empty()) continue;
    Point2 start = contour.segments.front().start_point();
    append("M " + format_double(start.x) + " " + format_double(start.y));
    std::size_t n = contour.segments.size();
    for (std::size_t i = 0; i < n; ++i) {
      const PathSegment& seg = contour.segments[i];
      bool closing_line = contour.closed && i + 1 == n && seg.form == SegmentForm::Line &&
                          distance(seg.stop_point(), start) == 0.0;
      switch (seg.form) {
        case SegmentForm::Line:
          if (!closing_line) {
            append("L " + format_double(seg.points[1].x) + " " + format_double(seg.points[1].y));
          }
          break;
        case SegmentForm::Quadratic:
          append("Q " + format_double(seg.points[1].x) + " " + format_double(seg.points[1].y) +
                 " " + format_double(seg.points[2].x) + " " + format_double(seg.points[2].y));
          break;
        case SegmentForm::Cubic:
          append("C " + format_double(seg.points[1].x) + " " + format_double(seg.points[1].y) +
                 " " + format_double(seg.points[2].x) + " " + format_double(seg.points[2].y) +
                 " " + format_double(seg.points[3].x) + " " + format_double(seg.points[3].y));
          break;
        case SegmentForm::Conic:
          append("K " + format_double(seg.points[1].x) + " " + format_double(seg.points[1].y) +
                 " " + format_double(seg.conic_weight) + " " + format_double(seg.points[2].x) +
                 " " + format_double(seg.points[2].y));
          break;
      }
    }
    if (contour.closed) append("Z");
  }
  return out;
}

std::vector<PathSegment> arc_to_conics(Point2 from, double rx, double ry, double x_rot_deg,
                                       bool large_arc, bool sweep, Point2 to) {
  std::vector<PathSegment> out;
  if (distance(from, to) < 1e-12) return out;
  rx = std::abs(rx);
  ry = std::abs(ry);
  if (rx < 1e-12 || ry < 1e-12) {
    out.push_back(PathSegment::line(from, to));
    return out;
  }

  double phi = x_rot_deg * kPi / 180.0;
  double cos_phi = std::cos(phi), sin_phi = std::sin(phi);
  double hx = (from.x - to.x) / 2.0, hy = (from.y - to.y) / 2.0;
  double x1p = cos_phi * hx + sin_phi * hy;
  double y1p = -sin_phi * hx + cos_phi * hy;

  // Scale radii up when no ellipse fits the endpoints.
  double lambda = (x1p * x1p) / (rx * rx) + (y1p * y1p) / (ry * ry);
  if (lambda > 1.0) {
    double s = std::sqrt(lambda);
    rx *= s;
    ry *= s;
  }

  double num = rx * rx * ry * ry - rx * rx * y1p * y1p - ry * ry * x1p * x1p;
  double den = rx * rx * y1p * y1p + ry * ry * x1p * x1p;
  double radicand = std::max(0.0, num / den);
  double coef = std::sqrt(radicand) * (large_arc != sweep ? 1.0 : -1.0);
  double cxp = coef * rx * y1p / ry;
  double cyp = -coef * ry * x1p / rx;

  Point2 center{cos_phi * cxp - sin_phi * cyp + (from.x + to.x) / 2.0,
                sin_phi * cxp + cos_phi * cyp + (from.y + to.y) / 2.0};

  auto vec_angle = [](Vec2 u, Vec2 v) {
    double sign = cross(u, v) < 0.0 ? -1.0 : 1.0;
    double c = std::clamp(dot(u, v) / (norm(u) * norm(v)), -1.0, 1.0);
    return sign * std::acos(c);
  };
  Vec2 v1{(x1p - cxp) / rx, (y1p - cyp) / ry};
  Vec2 v2{(-x1p - cxp) / rx, (-y1p - cyp) / ry};
  double theta1 = vec_angle({1.0, 0.0}, v1);
  double dtheta = vec_angle(v1, v2);
  if (!sweep && dtheta > 0.0) dtheta -= kTwoPi;
  if (sweep && dtheta < 0.0) dtheta += kTwoPi;

  auto map_point = [&](Vec2 unit) {
    return Point2{center.x + cos_phi * rx * unit.x - sin_phi * ry * unit.y,
                  center.y + sin_phi * rx * unit.x + cos_phi * ry * unit.y};
  };

  int pieces = std::max(1, static_cast<int>(std::ceil(std::abs(dtheta) / (kPi / 2.0) - 1e-12)));
  for (int i = 0; i < pieces; ++i) {
    double a0 = theta1 + dtheta * (static_cast<double>(i) / pieces);
    double a1 = theta1 + dtheta * (static_cast<double>(i + 1) / pieces);
    double half = (a1 - a0) / 2.0;
    double w = std::cos(half);
    Vec2 u0{std::cos(a0), std::sin(a0)};
    Vec2 u1{std::cos(a1), std::sin(a1)};
    Vec2 mid = normalized(u0 + u1);
    Vec2 control{mid.x / w, mid.y / w};
    Point2 pa = (i == 0) ? from : out.back().stop_point();
    Point2 pc = (i == pieces - 1) ? to : map_point(u1);
    out.push_back(PathSegment::conic(pa, map_point(control), pc, w));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Documents
// ---------------------------------------------------------------------------

const char* join_kind_name(JoinKind kind) {
  switch (kind) {
    case JoinKind::None: return "none";
    case JoinKind::Bevel: return "bevel";
    case JoinKind::Miter: return "miter";
    case JoinKind::MiterTruncate: return "miter-truncate";
    case JoinKind::MiterRevert: return "miter-revert";
    case JoinKind::Triangular: return "triangular";
    case JoinKind::Round: return "round";
  }
  return "miter";
}

const char* cap_kind_name(CapKind kind) {
  switch (kind) {
    case CapKind::None: return "none";
    case CapKind::Square: return "square";
    case CapKind::Round: return "round";
    case CapKind::Triangular: return "triangular";
  }
  return "none";
}

JoinKind join_kind_from_name(const std::string& name) {
  if (name == "none") return JoinKind::None;
  if (name == "bevel") return JoinKind::Bevel;
  if (name == "miter") return JoinKind::Miter;
  if (name == "miter-truncate") return JoinKind::MiterTruncate;
  if (name == "miter-revert") return JoinKind::MiterRevert;
  if (name == "triangular") return JoinKind::Triangular;
  if (name == "round") return JoinKind::Round;
  throw ValidationError("unknown join style: " + name);
}

CapKind cap_kind_from_name(const std::string& name) {
  if (name == "none" || name == "butt") return CapKind::None;
  if (name == "square") return CapKind::Square;
  if (name == "round") return CapKind::Round;
  if (name == "triangular") return CapKind::Triangular;
  throw ValidationError("unknown cap style: " + name);
}

TessellationDocument build_document(Tessellation tess, const TessellationParams& params,
                                    const StrokeStyle& stroke) {
  TessellationDocument doc;
  doc.tess = std::move(tess);
  doc.arc = accumulate_arc_length(doc.tess);
  doc.stats = facet_stats(doc.tess, params.q, params.width);
  doc.q = params.q;
  doc.stroke = stroke;
  doc.stroke.width = params.width;
  return doc;
}

namespace {

ordered_json params_json(const TessellationDocument& doc) {
  ordered_json params;
  params["q_degrees"] = doc.q * 180.0 / kPi;
  params["width"] = doc.stroke.width;
  params["join"] = join_kind_name(doc.stroke.join.kind);
  params["miter_limit"] = doc.stroke.join.miter_limit;
  params["cap"] = cap_kind_name(doc.stroke.cap);
  if (doc.stroke.dash) {
    ordered_json dash;
    dash["lengths"] = doc.stroke.dash->lengths;
    dash["offset"] = doc.stroke.dash->offset;
    params["dash"] = dash;
  } else {
    params["dash"] = nullptr;
  }
  return params;
}

std::string link_kind_name(LinkKind kind) {
  switch (kind) {
    case LinkKind::Segment: return "segment";
    case LinkKind::Join: return "join";
    case LinkKind::Cap: return "cap";
  }
  return "segment";
}

LinkKind link_kind_from_name(const std::string& name) {
  if (name == "join") return LinkKind::Join;
  if (name == "cap") return LinkKind::Cap;
  return LinkKind::Segment;
}

std::string write_json(const TessellationDocument& doc) {
  ordered_json j;
  j["schema"] = 1;
  j["params"] = params_json(doc);

  ordered_json stats;
  stats["max_facet_deg"] = doc.stats.max_deg;
  stats["mean_facet_deg"] = doc.stats.mean_deg;
  stats["sd_facet_deg"] = doc.stats.sd_deg;
  stats["count"] = doc.stats.count;
  stats["excluded"] = doc.stats.excluded;
  j["stats"] = stats;

  j["total_length"] = doc.arc.total;
  j["contour_lengths"] = doc.arc.contour_totals;

  ordered_json links = ordered_json::array();
  for (const LinkInfo& link : doc.tess.links) {
    ordered_json l;
    l["kind"] = link_kind_name(link.kind);
    l["contour"] = link.contour;
    l["source"] = link.source_index;
    l["first_rib"] = link.first_rib;
    l["rib_count"] = link.rib_count;
    l["first_quad"] = link.first_quad;
    l["quad_count"] = link.quad_count;
    links.push_back(l);
  }
  j["links"] = links;

  ordered_json ribs = ordered_json::array();
  for (const Rib& rib : doc.tess.ribs) {
    ordered_json r;
    r["x"] = rib.position.x;
    r["y"] = rib.position.y;
    r["nx"] = rib.normal.x;
    r["ny"] = rib.normal.y;
    r["t"] = rib.t;
    r["psi"] = rib.psi;
    r["s"] = rib.cum_length;
    r["rn"] = rib.r_n;
    r["rp"] = rib.r_p;
    ribs.push_back(r);
  }
  j["ribs"] = ribs;

  ordered_json quads = ordered_json::array();
  for (const Quad& quad : doc.tess.quads) {
    ordered_json q;
    q["lo"] = quad.rib_lo;
    q["hi"] = quad.rib_hi;
    q["bowtie"] = quad.bowtie;
    q["stitch"] = quad.stitch;
    quads.push_back(q);
  }
  j["quads"] = quads;
  return j.dump(2) + "\n";
}

std::string write_svg(const TessellationDocument& doc) {
  double min_x = 0.0, min_y = 0.0, max_x = 0.0, max_y = 0.0;
  bool first = true;
  for (const Rib& rib : doc.tess.ribs) {
    for (Point2 v : {rib.vertex_n(), rib.vertex_p()}) {
      if (first) {
        min_x = max_x = v.x;
        min_y = max_y = v.y;
        first = false;
      }
      min_x = std::min(min_x, v.x);
      max_x = std::max(max_x, v.x);
      min_y = std::min(min_y, v.y);
      max_y = std::max(max_y, v.y);
    }
  }
  double margin = doc.stroke.width;
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << format_double(min_x - margin)
      << " " << format_double(min_y - margin) << " "
      << format_double(max_x - min_x + 2.0 * margin) << " "
      << format_double(max_y - min_y + 2.0 * margin) << "\">\n";
  svg << "  <g fill=\"#7aa6da\" fill-opacity=\"0.55\" stroke=\"#20435c\" stroke-width=\""
      << format_double(doc.stroke.width / 200.0) << "\">\n";
  auto emit_polygon = [&](std::initializer_list<Point2> pts) {
    svg << "    <polygon points=\"";
    bool lead = true;
    for (Point2 p : pts) {
      if (!lead) svg << " ";
      lead = false;
      svg << format_double(p.x) << "," << format_double(p.y);
    }
    svg << "\"/>\n";
  };
  for (const Quad& quad : doc.tess.quads) {
    const Rib& lo = doc.tess.ribs[quad.rib_lo];
    const Rib& hi = doc.tess.ribs[quad.rib_hi];
    if (quad.bowtie) {
      emit_polygon({lo.vertex_n(), lo.vertex_p(), hi.vertex_p()});
      emit_polygon({lo.vertex_n(), hi.vertex_p(), hi.vertex_n()});
    } else {
      emit_polygon({lo.vertex_n(), lo.vertex_p(), hi.vertex_p(), hi.vertex_n()});
    }
  }
  svg << "  </g>\n";
  for (const LinkInfo& link : doc.tess.links) {
    if (link.kind != LinkKind::Segment || link.rib_count < 2) continue;
    svg << "  <polyline fill=\"none\" stroke=\"#111111\" stroke-width=\""
        << format_double(doc.stroke.width / 100.0) << "\" points=\"";
    for (int i = 0; i < link.rib_count; ++i) {
      const Rib& rib = doc.tess.ribs[link.first_rib + i];
      if (i) svg << " ";
      svg << format_double(rib.position.x) << "," << format_double(rib.position.y);
    }
    svg << "\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace

std::string write_tessellation(const TessellationDocument& doc, DocumentFormat format) {
  return format == DocumentFormat::Json ? write_json(doc) : write_svg(doc);
}

TessellationDocument read_tessellation_json(const std::string& text) {
  ordered_json j = ordered_json::parse(text);
  TessellationDocument doc;
  doc.q = j["params"]["q_degrees"].get<double>() * kPi / 180.0;
  doc.stroke.width = j["params"]["width"].get<double>();
  doc.stroke.join.kind = join_kind_from_name(j["params"]["join"].get<std::string>());
  doc.stroke.join.miter_limit = j["params"]["miter_limit"].get<double>();
  doc.stroke.cap = cap_kind_from_name(j["params"]["cap"].get<std::string>());
  if (!j["params"]["dash"].is_null()) {
    DashPattern dash;
    dash.lengths = j["params"]["dash"]["lengths"].get<std::vector<double>>();
    dash.offset = j["params"]["dash"]["offset"].get<double>();
    doc.stroke.dash = dash;
  }
  doc.stats.max_deg = j["stats"]["max_facet_deg"].get<double>();
  doc.stats.mean_deg = j["stats"]["mean_facet_deg"].get<double>();
  doc.stats.sd_deg = j["stats"]["sd_facet_deg"].get<double>();
  doc.stats.count = j["stats"]["count"].get<int>();
  doc.stats.excluded = j["stats"]["excluded"].get<int>();
  doc.arc.total = j["total_length"].get<double>();
  doc.arc.contour_totals = j["contour_lengths"].get<std::vector<double>>();
  for (const auto& l : j["links"]) {
    LinkInfo link;
    link.kind = link_kind_from_name(l["kind"].get<std::string>());
    link.contour = l["contour"].get<int>();
    link.source_index = l["source"].get<int>();
    link.first_rib = l["first_rib"].get<int>();
    link.rib_count = l["rib_count"].get<int>();
    link.first_quad = l["first_quad"].get<int>();
    link.quad_count = l["quad_count"].get<int>();
    doc.tess.links.push_back(link);
  }
  for (const auto& r : j["ribs"]) {
    Rib rib;
    rib.position = {r["x"].get<double>(), r["y"].get<double>()};
    rib.normal = {r["nx"].get<double>(), r["ny"].get<double>()};
    rib.t = r["t"].get<double>();
    rib.psi = r["psi"].get<double>();
    rib.cum_length = r["s"].get<double>();
    rib.r_n = r["rn"].get<double>();
    rib.r_p = r["rp"].get<double>();
    doc.tess.ribs.push_back(rib);
    doc.arc.cum_length.push_back(rib.cum_length);
  }
  for (const auto& q : j["quads"]) {
    Quad quad;
    quad.rib_lo = q["lo"].get<int>();
    quad.rib_hi = q["hi"].get<int>();
    quad.bowtie = q["bowtie"].get<bool>();
    quad.stitch = q["stitch"].get<bool>();
    doc.tess.quads.push_back(quad);
  }
  return doc;
}

StrokeStyle parse_style_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("style sidecar is not valid JSON: ") + e.what());
  }
  StrokeStyle style;
  if (j.contains("width")) style.width = j["width"].get<double>();
  if (j.contains("join")) style.join.kind = join_kind_from_name(j["join"].get<std::string>());
  if (j.contains("miter_limit")) style.join.miter_limit = j["miter_limit"].get<double>();
  if (j.contains("cap")) style.cap = cap_kind_from_name(j["cap"].get<std::string>());
  if (j.contains("dash") && !j["dash"].is_null()) {
    DashPattern dash;
    dash.lengths = j["dash"]["lengths"].get<std::vector<double>>();
    if (j["dash"].contains("offset")) dash.offset = j["dash"]["offset"].get<double>();
    dash.validate();
    style.dash = dash;
  }
  if (!std::isfinite(style.width) || style.width <= 0.0) {
    throw ValidationError("style width must be positive");
  }
  return style;
}

}  // namespace polarstroke
