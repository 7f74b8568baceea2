#include "tabcompare/document.hpp"

#include <cmath>

#include "json_util.hpp"

namespace tabcompare {

namespace {

using namespace json_util;

Json ref_to_json(const BarRef& r) { return r ? Json(*r) : Json(nullptr); }

BarRef ref_from_json(const Json& j, const std::string& path) {
  if (j.is_null()) return std::nullopt;
  return static_cast<std::size_t>(int_value(j, path, 0, 1000000));
}

// -- metrics --------------------------------------------------------------

Json metrics_to_json(const BarMetrics& m) {
  Json j;
  j["density"] = m.density;
  j["fretSpanFrets"] = m.fret_span ? Json(m.fret_span->frets) : Json(nullptr);
  j["fretSpanMm"] = m.fret_span ? Json(m.fret_span->mm) : Json(nullptr);
  Json techniques = Json::object();
  for (const auto& [t, count] : m.techniques) techniques[std::string(technique_name(t))] = count;
  j["techniques"] = std::move(techniques);
  return j;
}

BarMetrics metrics_from_json(const Json& j, const std::string& path) {
  expect_keys(j, path, {"density", "fretSpanFrets", "fretSpanMm", "techniques"});
  BarMetrics m;
  m.density = static_cast<int>(int_at(j, "density", path, 0, 1000000));
  const Json& frets = j.at("fretSpanFrets");
  const Json& mm = j.at("fretSpanMm");
  if (frets.is_null() != mm.is_null()) {
    fail(path, "fretSpanFrets and fretSpanMm must both be null or both be set");
  }
  if (!frets.is_null()) {
    m.fret_span = FretSpan{static_cast<int>(int_value(frets, child(path, "fretSpanFrets"), 0, kMaxFret)),
                           number_value(mm, child(path, "fretSpanMm"))};
  }
  const Json& techniques = j.at("techniques");
  expect_object(techniques, child(path, "techniques"));
  for (const auto& item : techniques.items()) {
    const auto t = technique_from_name(item.key());
    const std::string p = child(path, "techniques") + "." + item.key();
    if (!t) fail(p, "unknown technique");
    m.techniques[*t] = static_cast<int>(int_value(item.value(), p, 1, 1000000));
  }
  return m;
}

// -- edits ----------------------------------------------------------------

Json state_to_json(const EditState& state) {
  Json j;
  if (const auto* note = std::get_if<NoteState>(&state)) {
    j["fret"] = note->fret;
    j["techniques"] = techniques_to_json(note->techniques);
    j["tied"] = note->tied;
    j["duration"] = to_string(note->duration);
  } else if (const auto* rest = std::get_if<RestState>(&state)) {
    j["duration"] = to_string(rest->duration);
  } else {
    j["timeSignature"] = to_string(std::get<TimeSignature>(state));
  }
  return j;
}

Rational duration_value(const Json& j, const std::string& path) {
  try {
    const Rational d = parse_rational(string_at(j, "duration", path));
    if (d <= 0) fail(child(path, "duration"), "duration must be positive");
    return d;
  } catch (const std::invalid_argument& e) {
    fail(child(path, "duration"), e.what());
  }
}

EditState state_from_json(const Json& j, EditSubject subject, const std::string& path) {
  switch (subject) {
    case EditSubject::Note: {
      expect_keys(j, path, {"fret", "techniques", "tied", "duration"});
      NoteState s;
      s.fret = static_cast<int>(int_at(j, "fret", path, 0, kMaxFret));
      s.techniques = techniques_from_json(j.at("techniques"), child(path, "techniques"));
      s.tied = bool_at(j, "tied", path);
      s.duration = duration_value(j, path);
      return s;
    }
    case EditSubject::Rest:
      expect_keys(j, path, {"duration"});
      return RestState{duration_value(j, path)};
    case EditSubject::Meter:
      expect_keys(j, path, {"timeSignature"});
      try {
        return parse_time_signature(string_at(j, "timeSignature", path));
      } catch (const std::invalid_argument& e) {
        fail(child(path, "timeSignature"), e.what());
      }
  }
  fail(path, "unknown edit subject");
}

Json edit_to_json(const NoteEdit& e) {
  Json j;
  j["kind"] = std::string(edit_kind_name(e.kind));
  j["subject"] = std::string(edit_subject_name(e.subject()));
  j["onset"] = to_string(e.onset);
  j["string"] = e.subject() == EditSubject::Note ? Json(e.string) : Json(nullptr);
  j["before"] = e.before ? state_to_json(*e.before) : Json(nullptr);
  j["after"] = e.after ? state_to_json(*e.after) : Json(nullptr);
  return j;
}

NoteEdit edit_from_json(const Json& j, const std::string& path) {
  expect_keys(j, path, {"kind", "subject", "onset", "string", "before", "after"});
  NoteEdit e;
  const auto kind = edit_kind_from_name(string_at(j, "kind", path));
  if (!kind) fail(child(path, "kind"), "unknown edit kind");
  e.kind = *kind;
  const std::string subject_name = string_at(j, "subject", path);
  EditSubject subject;
  if (subject_name == "note") {
    subject = EditSubject::Note;
  } else if (subject_name == "rest") {
    subject = EditSubject::Rest;
  } else if (subject_name == "meter") {
    subject = EditSubject::Meter;
  } else {
    fail(child(path, "subject"), "unknown edit subject");
  }
  try {
    e.onset = parse_rational(string_at(j, "onset", path));
  } catch (const std::invalid_argument& ex) {
    fail(child(path, "onset"), ex.what());
  }
  if (subject == EditSubject::Note) {
    e.string = static_cast<int>(int_at(j, "string", path, 1, static_cast<std::int64_t>(kMaxStrings)));
  } else if (!j.at("string").is_null()) {
    fail(child(path, "string"), "must be null for rest and meter edits");
  }
  if (!j.at("before").is_null()) e.before = state_from_json(j.at("before"), subject, child(path, "before"));
  if (!j.at("after").is_null()) e.after = state_from_json(j.at("after"), subject, child(path, "after"));
  const bool needs_before = e.kind != EditKind::Added;
  const bool needs_after = e.kind != EditKind::Removed;
  if (needs_before != e.before.has_value() || needs_after != e.after.has_value()) {
    fail(path, "before/after do not match kind " + std::string(edit_kind_name(e.kind)));
  }
  return e;
}

// -- cells ----------------------------------------------------------------

Json cell_to_json(const Cell& c) {
  Json j;
  j["bar"] = ref_to_json(c.bar);
  j["metrics"] = c.metrics ? metrics_to_json(*c.metrics) : Json(nullptr);
  if (c.similarity) {
    Json s;
    s["coordinate"] = c.similarity->coordinate;
    s["color"] = to_hex(c.similarity->color);
    j["similarity"] = std::move(s);
  } else {
    j["similarity"] = nullptr;
  }
  j["status"] = std::string(status_name(c.status));
  Json edits = Json::array();
  for (const NoteEdit& e : c.edits) edits.push_back(edit_to_json(e));
  j["edits"] = std::move(edits);
  return j;
}

Cell cell_from_json(const Json& j, const std::string& path) {
  expect_keys(j, path, {"bar", "metrics", "similarity", "status", "edits"});
  Cell c;
  c.bar = ref_from_json(j.at("bar"), child(path, "bar"));
  if (!j.at("metrics").is_null()) c.metrics = metrics_from_json(j.at("metrics"), child(path, "metrics"));
  if (const Json& s = j.at("similarity"); !s.is_null()) {
    const std::string sp = child(path, "similarity");
    expect_keys(s, sp, {"coordinate", "color"});
    Similarity sim;
    sim.coordinate = number_at(s, "coordinate", sp);
    try {
      sim.color = parse_hex(string_at(s, "color", sp));
    } catch (const std::invalid_argument& e) {
      fail(child(sp, "color"), e.what());
    }
    c.similarity = sim;
  }
  const auto status = status_from_name(string_at(j, "status", path));
  if (!status) fail(child(path, "status"), "unknown status");
  c.status = *status;
  const Json& edits = array_at(j, "edits", path);
  for (std::size_t i = 0; i < edits.size(); ++i) {
    c.edits.push_back(edit_from_json(edits[i], child(child(path, "edits"), i)));
  }
  return c;
}

}  // namespace

double round6(double x) {
  const double r = std::round(x * 1e6) / 1e6;
  return r == 0.0 ? 0.0 : r;  // no "-0.0"
}

// -- options ----------------------------------------------------------------

Json options_to_json(const RunOptions& options) {
  Json j;
  Json versions = Json::array();
  for (const VersionSource& v : options.versions) {
    Json entry;
    entry["source"] = v.source;
    entry["name"] = v.name;
    entry["track"] = v.track;
    versions.push_back(std::move(entry));
  }
  j["versions"] = std::move(versions);
  j["gapCost"] = options.align.gap_cost;
  j["chromaWeight"] = options.weights.chroma;
  j["onsetWeight"] = options.weights.onset;
  j["scaleLengthMm"] = options.scale_length_mm;
  Json stops = Json::array();
  for (const ColorStop& s : options.colormap.stops()) {
    Json stop;
    stop["t"] = s.t;
    stop["rgbHex"] = to_hex(s.rgb);
    stops.push_back(std::move(stop));
  }
  j["colormap"] = std::move(stops);
  return j;
}

RunOptions options_from_json(const Json& j) {
  const std::string path = "$";
  expect_keys(j, path, {"versions"},
              {"gapCost", "chromaWeight", "onsetWeight", "scaleLengthMm", "colormap"});
  RunOptions o;
  const Json& versions = array_at(j, "versions", path);
  for (std::size_t i = 0; i < versions.size(); ++i) {
    const std::string vp = child(child(path, "versions"), i);
    expect_keys(versions[i], vp, {"source"}, {"name", "track"});
    VersionSource v;
    v.source = string_at(versions[i], "source", vp);
    if (versions[i].contains("name")) v.name = string_at(versions[i], "name", vp);
    if (versions[i].contains("track")) {
      v.track = static_cast<int>(int_at(versions[i], "track", vp, 0, 1000000));
    }
    o.versions.push_back(std::move(v));
  }
  if (j.contains("gapCost")) o.align.gap_cost = number_at(j, "gapCost", path);
  if (j.contains("chromaWeight")) o.weights.chroma = number_at(j, "chromaWeight", path);
  if (j.contains("onsetWeight")) o.weights.onset = number_at(j, "onsetWeight", path);
  if (j.contains("scaleLengthMm")) o.scale_length_mm = number_at(j, "scaleLengthMm", path);
  if (j.contains("colormap")) {
    const Json& stops = array_at(j, "colormap", path);
    std::vector<ColorStop> parsed;
    for (std::size_t i = 0; i < stops.size(); ++i) {
      const std::string sp = child(child(path, "colormap"), i);
      expect_keys(stops[i], sp, {"t", "rgbHex"});
      try {
        parsed.push_back({number_at(stops[i], "t", sp), parse_hex(string_at(stops[i], "rgbHex", sp))});
      } catch (const std::invalid_argument& e) {
        fail(child(sp, "rgbHex"), e.what());
      }
    }
    try {
      o.colormap = ColorMap(std::move(parsed));
    } catch (const std::invalid_argument& e) {
      fail(child(path, "colormap"), e.what());
    }
  }
  return o;
}

// -- pipeline -----------------------------------------------------------------

void check_options(std::span<const Score> scores, const RunOptions& options) {
  if (options.versions.size() < 2) throw ConfigError("need at least 2 versions");
  if (scores.size() != options.versions.size()) {
    throw ConfigError("got " + std::to_string(scores.size()) + " scores for " +
                      std::to_string(options.versions.size()) + " versions");
  }
  for (std::size_t i = 0; i < scores.size(); ++i) {
    const VersionSource& v = options.versions[i];
    const std::string label = "version " + std::to_string(i) + (v.name.empty() ? "" : " (" + v.name + ")");
    if (v.track < 0 || static_cast<std::size_t>(v.track) >= scores[i].tracks.size()) {
      throw ConfigError(label + ": track index " + std::to_string(v.track) + " out of range (" +
                        std::to_string(scores[i].tracks.size()) + " tracks)");
    }
    const Track& t = scores[i].tracks[static_cast<std::size_t>(v.track)];
    if (t.bars.empty()) throw ConfigError(label + ": track \"" + t.name + "\" has no bars");
  }
  if (!(options.align.gap_cost > 0.0) || !std::isfinite(options.align.gap_cost)) {
    throw ConfigError("gap cost must be a positive number");
  }
  const auto& w = options.weights;
  if (!(w.chroma >= 0.0) || !(w.onset >= 0.0) || !std::isfinite(w.chroma) ||
      !std::isfinite(w.onset) || (w.chroma == 0.0 && w.onset == 0.0)) {
    throw ConfigError("feature weights must be non-negative and not both zero");
  }
  if (!(options.scale_length_mm > 0.0) || !std::isfinite(options.scale_length_mm)) {
    throw ConfigError("scale length must be a positive number");
  }
}

ComparisonDocument build_document(std::span<const Score> scores, const RunOptions& options) {
  check_options(scores, options);
  const std::size_t num_versions = scores.size();

  ComparisonDocument doc;
  doc.options = options;
  doc.options.align.gap_cost = round6(options.align.gap_cost);
  doc.options.weights = {round6(options.weights.chroma), round6(options.weights.onset)};
  doc.options.scale_length_mm = round6(options.scale_length_mm);
  {
    std::vector<ColorStop> stops = options.colormap.stops();
    for (ColorStop& s : stops) s.t = round6(s.t);
    doc.options.colormap = ColorMap(std::move(stops));
  }

  std::vector<Track> tracks;
  for (std::size_t i = 0; i < num_versions; ++i) {
    tracks.push_back(scores[i].tracks[static_cast<std::size_t>(options.versions[i].track)]);
  }

  std::vector<std::vector<BarFeature>> features(num_versions);
  std::vector<BarFeature> all_features;
  for (std::size_t v = 0; v < num_versions; ++v) {
    for (const Bar& bar : tracks[v].bars) {
      features[v].push_back(bar_feature(bar, tracks[v].tuning, options.weights));
      all_features.push_back(features[v].back());
    }
  }

  const std::size_t ref = choose_reference(std::span<const Track>(tracks));
  std::vector<PairAlignment> pairs(num_versions);
  for (std::size_t v = 0; v < num_versions; ++v) {
    if (v != ref) pairs[v] = align_features(features[ref], features[v], options.align);
  }
  doc.reference_index = ref;
  doc.grid = merge_alignments(tracks[ref].bars.size(), pairs, ref);

  for (std::size_t v = 0; v < num_versions; ++v) {
    doc.versions.push_back({options.versions[v].name, options.versions[v].source,
                            options.versions[v].track, round6(pairs[v].total_cost), tracks[v]});
  }

  const std::vector<double> coordinates = mds_1d(distance_matrix(all_features));
  std::vector<std::size_t> offset(num_versions, 0);
  for (std::size_t v = 1; v < num_versions; ++v) offset[v] = offset[v - 1] + tracks[v - 1].bars.size();

  auto statuses = column_statuses(doc.grid, tracks);
  doc.cells.resize(num_versions);
  for (std::size_t v = 0; v < num_versions; ++v) {
    for (std::size_t c = 0; c < doc.grid.num_columns(); ++c) {
      Cell cell;
      cell.bar = doc.grid.rows[v][c];
      cell.status = statuses[v][c].status;
      cell.edits = std::move(statuses[v][c].edits);
      if (cell.bar) {
        BarMetrics m = bar_metrics(tracks[v].bars[*cell.bar], options.scale_length_mm);
        if (m.fret_span) m.fret_span->mm = round6(m.fret_span->mm);
        cell.metrics = m;
        const double t = round6(coordinates[offset[v] + *cell.bar]);
        cell.similarity = Similarity{t, color_of(t, doc.options.colormap)};

        Normalization& n = doc.normalization;
        n.max_density = std::max(n.max_density, m.density);
        if (m.fret_span) {
          n.max_fret_span_frets = std::max(n.max_fret_span_frets, m.fret_span->frets);
          n.max_fret_span_mm = std::max(n.max_fret_span_mm, m.fret_span->mm);
        }
      }
      doc.cells[v].push_back(std::move(cell));
    }
  }
  return doc;
}

// -- serialization ------------------------------------------------------------

Json to_json(const ComparisonDocument& doc) {
  Json j;
  j["schemaVersion"] = doc.schema_version;
  j["options"] = options_to_json(doc.options);
  Json versions = Json::array();
  for (const VersionInfo& v : doc.versions) {
    Json entry;
    entry["name"] = v.name;
    entry["source"] = v.source;
    entry["trackIndex"] = v.track_index;
    entry["trackName"] = v.track.name;
    entry["barCount"] = v.track.bars.size();
    entry["alignmentCost"] = v.alignment_cost;
    entry["tuning"] = v.track.tuning.pitches;
    Json bars = Json::array();
    for (const Bar& b : v.track.bars) bars.push_back(to_json(b));
    entry["bars"] = std::move(bars);
    versions.push_back(std::move(entry));
  }
  j["versions"] = std::move(versions);
  j["referenceIndex"] = doc.reference_index;
  Json columns = Json::array();
  for (std::size_t c = 0; c < doc.grid.num_columns(); ++c) {
    Json column = Json::array();
    for (std::size_t v = 0; v < doc.grid.num_versions(); ++v) column.push_back(ref_to_json(doc.grid.rows[v][c]));
    columns.push_back(std::move(column));
  }
  j["columns"] = std::move(columns);
  Json cells = Json::array();
  for (const auto& row : doc.cells) {
    Json r = Json::array();
    for (const Cell& c : row) r.push_back(cell_to_json(c));
    cells.push_back(std::move(r));
  }
  j["cells"] = std::move(cells);
  Json norm;
  norm["maxDensity"] = doc.normalization.max_density;
  norm["maxFretSpanFrets"] = doc.normalization.max_fret_span_frets;
  norm["maxFretSpanMm"] = doc.normalization.max_fret_span_mm;
  j["normalization"] = std::move(norm);
  return j;
}

std::string write_document(const ComparisonDocument& doc) { return to_json(doc).dump(2) + "\n"; }

ComparisonDocument document_from_json(const Json& j) {
  const std::string path = "$";
  expect_keys(j, path,
              {"schemaVersion", "options", "versions", "referenceIndex", "columns", "cells",
               "normalization"});
  ComparisonDocument doc;
  doc.schema_version = string_at(j, "schemaVersion", path);
  if (doc.schema_version != kSchemaVersion) fail(child(path, "schemaVersion"), "unsupported schema version");
  doc.options = options_from_json(j.at("options"));

  const Json& versions = array_at(j, "versions", path);
  for (std::size_t i = 0; i < versions.size(); ++i) {
    const std::string vp = child(child(path, "versions"), i);
    expect_keys(versions[i], vp,
                {"name", "source", "trackIndex", "trackName", "barCount", "alignmentCost", "tuning", "bars"});
    VersionInfo v;
    v.name = string_at(versions[i], "name", vp);
    v.source = string_at(versions[i], "source", vp);
    v.track_index = static_cast<int>(int_at(versions[i], "trackIndex", vp, 0, 1000000));
    v.alignment_cost = number_at(versions[i], "alignmentCost", vp);
    Json track;
    track["name"] = versions[i].at("trackName");
    track["tuning"] = versions[i].at("tuning");
    track["bars"] = versions[i].at("bars");
    v.track = track_from_json(track, vp);
    const auto bar_count = int_at(versions[i], "barCount", vp, 0, 1000000);
    if (static_cast<std::size_t>(bar_count) != v.track.bars.size()) {
      fail(child(vp, "barCount"), "does not match the number of bars");
    }
    doc.versions.push_back(std::move(v));
  }
  doc.reference_index = static_cast<std::size_t>(int_at(j, "referenceIndex", path, 0, 1000000));

  const std::size_t num_versions = doc.versions.size();
  const Json& columns = array_at(j, "columns", path);
  doc.grid.reference_version = doc.reference_index;
  doc.grid.rows.assign(num_versions, {});
  for (std::size_t c = 0; c < columns.size(); ++c) {
    const std::string cp = child(child(path, "columns"), c);
    if (!columns[c].is_array() || columns[c].size() != num_versions) {
      fail(cp, "expected an array with one entry per version");
    }
    for (std::size_t v = 0; v < num_versions; ++v) {
      doc.grid.rows[v].push_back(ref_from_json(columns[c][v], child(cp, v)));
    }
  }

  const Json& cells = array_at(j, "cells", path);
  if (cells.size() != num_versions) fail(child(path, "cells"), "expected one row per version");
  for (std::size_t v = 0; v < num_versions; ++v) {
    const std::string rp = child(child(path, "cells"), v);
    if (!cells[v].is_array() || cells[v].size() != columns.size()) {
      fail(rp, "expected one cell per column");
    }
    std::vector<Cell> row;
    for (std::size_t c = 0; c < cells[v].size(); ++c) row.push_back(cell_from_json(cells[v][c], child(rp, c)));
    doc.cells.push_back(std::move(row));
  }

  const Json& norm = j.at("normalization");
  const std::string np = child(path, "normalization");
  expect_keys(norm, np, {"maxDensity", "maxFretSpanFrets", "maxFretSpanMm"});
  doc.normalization.max_density = static_cast<int>(int_at(norm, "maxDensity", np, 0, 1000000));
  doc.normalization.max_fret_span_frets = static_cast<int>(int_at(norm, "maxFretSpanFrets", np, 0, kMaxFret));
  doc.normalization.max_fret_span_mm = number_at(norm, "maxFretSpanMm", np);
  return doc;
}

ComparisonDocument read_document(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, 0, std::string("document is not valid JSON: ") + e.what());
  }
  return document_from_json(j);
}

std::vector<std::string> check_document(const ComparisonDocument& doc) {
  std::vector<std::string> problems;
  auto problem = [&](std::string s) { problems.push_back(std::move(s)); };
  const std::size_t nv = doc.versions.size();
  if (nv < 2) problem("fewer than 2 versions");
  if (doc.options.versions.size() != nv) problem("options.versions does not match versions");
  if (doc.reference_index >= nv) {
    problem("referenceIndex out of range");
    return problems;
  }
  if (doc.grid.num_versions() != nv || doc.cells.size() != nv) {
    problem("grid/cells do not have one row per version");
    return problems;
  }
  const std::size_t nc = doc.grid.num_columns();
  for (std::size_t c = 0; c < nc; ++c) {
    bool any = false;
    for (std::size_t v = 0; v < nv; ++v) any = any || doc.grid.rows[v][c].has_value();
    if (!any) problem("column " + std::to_string(c) + " is a gap in every version");
  }
  Normalization expected_norm;
  for (std::size_t v = 0; v < nv; ++v) {
    const std::string label = "version " + std::to_string(v);
    if (doc.grid.rows[v].size() != nc || doc.cells[v].size() != nc) {
      problem(label + ": row length differs from column count");
      continue;
    }
    std::size_t next = 0;
    for (std::size_t c = 0; c < nc; ++c) {
      const BarRef& r = doc.grid.rows[v][c];
      const Cell& cell = doc.cells[v][c];
      const std::string where = label + " column " + std::to_string(c);
      if (r) {
        if (*r != next) problem(where + ": bar " + std::to_string(*r) + " out of order");
        next = *r + 1;
      }
      if (cell.bar != r) problem(where + ": cell bar differs from grid");
      if (r.has_value() != cell.metrics.has_value()) problem(where + ": metrics presence mismatch");
      if (r.has_value() != cell.similarity.has_value()) problem(where + ": similarity presence mismatch");
      if (cell.similarity) {
        const double t = cell.similarity->coordinate;
        if (!(t >= 0.0 && t <= 1.0)) problem(where + ": coordinate outside [0, 1]");
        else if (color_of(t, doc.options.colormap) != cell.similarity->color) {
          problem(where + ": color does not match the colormap");
        }
      }
      const BarRef& ref_bar = doc.grid.rows[doc.reference_index][c];
      ColumnStatus expected = ColumnStatus::Same;
      if (!r) expected = ColumnStatus::MissingInVersion;
      else if (!ref_bar) expected = ColumnStatus::ExtraInVersion;
      if (expected != ColumnStatus::Same && cell.status != expected) {
        problem(where + ": status should be " + std::string(status_name(expected)));
      }
      if (expected == ColumnStatus::Same) {
        if (cell.status != ColumnStatus::Same && cell.status != ColumnStatus::Changed) {
          problem(where + ": status should be Same or Changed");
        }
        if (v == doc.reference_index && cell.status != ColumnStatus::Same) {
          problem(where + ": reference row must be Same");
        }
      }
      if ((cell.status == ColumnStatus::Changed) == cell.edits.empty()) {
        problem(where + ": edits must be present exactly when Changed");
      }
      if (cell.metrics) {
        expected_norm.max_density = std::max(expected_norm.max_density, cell.metrics->density);
        if (cell.metrics->fret_span) {
          expected_norm.max_fret_span_frets =
              std::max(expected_norm.max_fret_span_frets, cell.metrics->fret_span->frets);
          expected_norm.max_fret_span_mm =
              std::max(expected_norm.max_fret_span_mm, cell.metrics->fret_span->mm);
        }
      }
    }
    if (next != doc.versions[v].track.bars.size()) problem(label + ": grid does not cover every bar");
  }
  if (!(expected_norm == doc.normalization)) problem("normalization maxima do not match the cells");
  return problems;
}

std::vector<std::string> validate_document_text(std::string_view text) {
  try {
    return check_document(read_document(text));
  } catch (const ParseError& e) {
    return {e.what()};
  } catch (const std::exception& e) {
    return {std::string("unexpected error: ") + e.what()};
  }
}

}  // namespace tabcompare
