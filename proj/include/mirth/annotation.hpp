#ifndef MIRTH_ANNOTATION_HPP
#define MIRTH_ANNOTATION_HPP

#include <algorithm>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mirth/common.hpp"

namespace mirth {

/// Half-open-ish time interval in seconds. Clip-extraction spans may carry a
/// negative start (the part before 0 is zero-padded at ingest); annotation
/// events are validated to start at >= 0.
struct TimeSpan {
  double start_s = 0.0;
  double end_s = 0.0;

  double length() const { return end_s - start_s; }
};

inline TimeSpan make_span(double start_s, double end_s) {
  if (!(end_s > start_s))
    throw DataError("TimeSpan: end must exceed start");
  return {start_s, end_s};
}

inline double overlap_s(const TimeSpan& a, const TimeSpan& b) {
  double lo = std::max(a.start_s, b.start_s);
  double hi = std::min(a.end_s, b.end_s);
  return hi > lo ? hi - lo : 0.0;
}

enum class EventKind { laughter, music, other };

inline const char* to_string(EventKind k) {
  switch (k) {
    case EventKind::laughter: return "laughter";
    case EventKind::music: return "music";
    case EventKind::other: return "other";
  }
  return "other";
}

inline EventKind event_kind_from_string(const std::string& s) {
  if (s == "laughter") return EventKind::laughter;
  if (s == "music") return EventKind::music;
  if (s == "other") return EventKind::other;
  throw FormatError("annotation: unknown event kind '" + s + "'");
}

struct LabeledSpan {
  TimeSpan span;
  EventKind kind = EventKind::laughter;
};

/// Labeled time spans for one media file. Events are kept sorted by start
/// and laughter events must not overlap each other.
struct LaughterAnnotation {
  std::string media_id;
  std::vector<LabeledSpan> events;

  std::vector<TimeSpan> spans_of(EventKind kind) const {
    std::vector<TimeSpan> out;
    for (const auto& e : events)
      if (e.kind == kind) out.push_back(e.span);
    return out;
  }
};

inline void sort_events(LaughterAnnotation& ann) {
  std::stable_sort(ann.events.begin(), ann.events.end(),
                   [](const LabeledSpan& a, const LabeledSpan& b) {
                     if (a.span.start_s != b.span.start_s)
                       return a.span.start_s < b.span.start_s;
                     return a.span.end_s < b.span.end_s;
                   });
}

inline void validate(const LaughterAnnotation& ann) {
  double prev_laugh_end = -1.0;
  for (const auto& e : ann.events) {
    if (e.span.start_s < 0.0)
      throw DataError("annotation: event start < 0 in " + ann.media_id);
    if (!(e.span.end_s > e.span.start_s))
      throw DataError("annotation: empty or inverted event in " + ann.media_id);
    if (e.kind == EventKind::laughter) {
      if (e.span.start_s < prev_laugh_end - 1e-9)
        throw DataError("annotation: overlapping laughter events in " +
                        ann.media_id);
      prev_laugh_end = std::max(prev_laugh_end, e.span.end_s);
    }
  }
}

inline nlohmann::json to_json(const LaughterAnnotation& ann) {
  nlohmann::json events = nlohmann::json::array();
  for (const auto& e : ann.events) {
    events.push_back({{"start_s", e.span.start_s},
                      {"end_s", e.span.end_s},
                      {"kind", to_string(e.kind)}});
  }
  return {{"media_id", ann.media_id}, {"events", events}};
}

inline LaughterAnnotation annotation_from_json(const nlohmann::json& j) {
  LaughterAnnotation ann;
  try {
    ann.media_id = j.at("media_id").get<std::string>();
    for (const auto& e : j.at("events")) {
      LabeledSpan ls;
      ls.span.start_s = e.at("start_s").get<double>();
      ls.span.end_s = e.at("end_s").get<double>();
      ls.kind = e.contains("kind")
                    ? event_kind_from_string(e.at("kind").get<std::string>())
                    : EventKind::laughter;
      ann.events.push_back(ls);
    }
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("annotation: malformed JSON: ") + e.what());
  }
  sort_events(ann);
  validate(ann);
  return ann;
}

inline void save_annotation(const std::string& path,
                            const LaughterAnnotation& ann) {
  std::ofstream out(path);
  if (!out) throw DataError("annotation: cannot open for writing: " + path);
  out << to_json(ann).dump(2) << "\n";
}

inline LaughterAnnotation load_annotation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("annotation: cannot open: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError("annotation: parse error in " + path + ": " + e.what());
  }
  return annotation_from_json(j);
}

}  // namespace mirth

#endif  // MIRTH_ANNOTATION_HPP
