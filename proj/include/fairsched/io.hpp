#pragma once

// File formats: versioned JSON documents for instances and schedules, the
// request CSV for ingestion, solver summary lines, and the results table.
// Field order is fixed so equal inputs serialize byte-identically.

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fairsched/core.hpp"
#include "fairsched/validator.hpp"

namespace fairsched {

using Json = nlohmann::ordered_json;

inline constexpr int kInstanceVersion = 1;
inline constexpr int kScheduleVersion = 1;

// ---------------------------------------------------------------------------
// InstanceDocument

inline Json save_instance(const Instance& inst) {
  Json doc;
  doc["version"] = kInstanceVersion;
  doc["weekdays"] = inst.weekdays;
  doc["periods"] = inst.periods;
  doc["courses"] = Json::array();
  for (const Course& c : inst.courses) {
    Json jc;
    jc["id"] = c.id;
    jc["frequency"] = c.frequency;
    jc["prerequisites"] = Json::array();
    for (int p : c.prerequisites) jc["prerequisites"].push_back(inst.courses[p].id);
    doc["courses"].push_back(std::move(jc));
  }
  doc["instructors"] = Json::array();
  for (const Instructor& i : inst.instructors) {
    Json ji;
    ji["id"] = i.id;
    ji["eligible"] = Json::array();
    for (int c : i.eligible) ji["eligible"].push_back(inst.courses[c].id);
    ji["min_units"] = i.min_units;
    ji["max_units"] = i.max_units;
    doc["instructors"].push_back(std::move(ji));
  }
  doc["students"] = Json::array();
  for (const Student& s : inst.students) {
    Json js;
    js["id"] = s.id;
    js["eligible"] = Json::array();
    for (int c : s.eligible) js["eligible"].push_back(inst.courses[c].id);
    js["min_courses"] = s.min_courses;
    js["max_courses"] = s.max_courses;
    js["interest"] = Json::object();
    for (size_t c = 0; c < s.interest.size(); ++c)
      if (s.interest[c] != 0.0) js["interest"][inst.courses[c].id] = s.interest[c];
    js["grades"] = Json::object();
    for (const auto& [c, g] : s.grades) js["grades"][inst.courses[c].id] = g;
    doc["students"].push_back(std::move(js));
  }
  doc["rooms"] = Json::array();
  for (const Room& r : inst.rooms) {
    Json jr;
    jr["id"] = r.id;
    jr["eligible"] = Json::array();
    for (int c : r.eligible) jr["eligible"].push_back(inst.courses[c].id);
    jr["min_cap"] = r.min_capacity;
    jr["max_cap"] = r.max_capacity;
    doc["rooms"].push_back(std::move(jr));
  }
  return doc;
}

namespace io_detail {

inline const Json& field(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(std::string("missing field '") + key + "'");
  return *it;
}

inline int int_field(const Json& j, const char* key) {
  const Json& f = field(j, key);
  if (!f.is_number_integer()) throw SchemaError(std::string("field '") + key + "' must be an integer");
  return f.get<int>();
}

inline std::string str_field(const Json& j, const char* key) {
  const Json& f = field(j, key);
  if (!f.is_string()) throw SchemaError(std::string("field '") + key + "' must be a string");
  return f.get<std::string>();
}

inline std::vector<int> course_list(const Json& arr, const Instance& inst, const char* owner) {
  if (!arr.is_array()) throw SchemaError(std::string(owner) + ": eligibility must be an array");
  std::vector<int> out;
  for (const Json& e : arr) {
    if (!e.is_string()) throw SchemaError(std::string(owner) + ": course references must be strings");
    const int c = inst.course_index(e.get<std::string>());
    if (c < 0) throw SchemaError(std::string(owner) + ": unknown course '" + e.get<std::string>() + "'");
    out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace io_detail

inline Instance load_instance(const Json& doc) {
  using namespace io_detail;
  if (!doc.is_object()) throw SchemaError("instance document must be an object");
  if (int_field(doc, "version") != kInstanceVersion) throw SchemaError("unsupported instance version");
  Instance inst;
  inst.weekdays = int_field(doc, "weekdays");
  inst.periods = int_field(doc, "periods");

  const Json& courses = field(doc, "courses");
  if (!courses.is_array() || courses.empty()) throw SchemaError("'courses' must be a non-empty array");
  for (const Json& jc : courses) {
    Course c;
    c.id = str_field(jc, "id");
    c.frequency = int_field(jc, "frequency");
    inst.courses.push_back(std::move(c));
  }
  // prerequisites resolved after all course ids are known
  for (size_t k = 0; k < inst.courses.size(); ++k)
    inst.courses[k].prerequisites = course_list(field(courses[k], "prerequisites"), inst, "course");

  for (const Json& ji : field(doc, "instructors")) {
    Instructor i;
    i.id = str_field(ji, "id");
    i.eligible = course_list(field(ji, "eligible"), inst, "instructor");
    i.min_units = int_field(ji, "min_units");
    i.max_units = int_field(ji, "max_units");
    inst.instructors.push_back(std::move(i));
  }
  for (const Json& js : field(doc, "students")) {
    Student s;
    s.id = str_field(js, "id");
    s.eligible = course_list(field(js, "eligible"), inst, "student");
    s.min_courses = int_field(js, "min_courses");
    s.max_courses = int_field(js, "max_courses");
    s.interest.assign(inst.courses.size(), 0.0);
    const Json& interest = io_detail::field(js, "interest");
    if (!interest.is_object()) throw SchemaError("student interest must be an object");
    for (auto it = interest.begin(); it != interest.end(); ++it) {
      const int c = inst.course_index(it.key());
      if (c < 0) throw SchemaError("student " + s.id + ": unknown course '" + it.key() + "' in interest");
      if (!it.value().is_number()) throw SchemaError("interest values must be numbers");
      s.interest[c] = it.value().get<double>();
    }
    const Json& grades = io_detail::field(js, "grades");
    if (!grades.is_object()) throw SchemaError("student grades must be an object");
    for (auto it = grades.begin(); it != grades.end(); ++it) {
      const int c = inst.course_index(it.key());
      if (c < 0) throw SchemaError("student " + s.id + ": unknown course '" + it.key() + "' in grades");
      if (!it.value().is_number()) throw SchemaError("grade values must be numbers");
      s.grades[c] = it.value().get<double>();
    }
    inst.students.push_back(std::move(s));
  }
  for (const Json& jr : field(doc, "rooms")) {
    Room r;
    r.id = str_field(jr, "id");
    r.eligible = course_list(field(jr, "eligible"), inst, "room");
    r.min_capacity = int_field(jr, "min_cap");
    r.max_capacity = int_field(jr, "max_cap");
    inst.rooms.push_back(std::move(r));
  }

  const auto problems = inst.check();
  if (!problems.empty()) throw SchemaError("invalid instance: " + problems.front());
  return inst;
}

// ---------------------------------------------------------------------------
// ScheduleDocument

inline Json save_schedule(const Instance& inst, const Schedule& sched, const Json& meta = Json::object()) {
  Json doc;
  doc["version"] = kScheduleVersion;
  doc["lectures"] = Json::array();
  for (const Lecture& l : sched.lectures)
    doc["lectures"].push_back({inst.courses[l.course].id, inst.instructors[l.instructor].id});
  doc["assignments"] = Json::array();
  for (const Assignment& a : sched.assignments)
    doc["assignments"].push_back({inst.courses[a.lecture.course].id,
                                  inst.instructors[a.lecture.instructor].id, inst.students[a.student].id});
  doc["units"] = Json::array();
  for (const Unit& u : sched.units)
    doc["units"].push_back({inst.courses[u.lecture.course].id, inst.instructors[u.lecture.instructor].id,
                            inst.rooms[u.room].id, u.slot.day, u.slot.period});
  doc["meta"] = meta;
  return doc;
}

// Unknown entity ids load as out-of-range indices; the validator reports them
// as Structural violations rather than this loader failing.
inline Schedule load_schedule(const Json& doc, const Instance& inst) {
  using namespace io_detail;
  if (!doc.is_object()) throw SchemaError("schedule document must be an object");
  if (int_field(doc, "version") != kScheduleVersion) throw SchemaError("unsupported schedule version");
  Schedule sched;
  const Json& lectures = field(doc, "lectures");
  if (!lectures.is_array()) throw SchemaError("'lectures' must be an array");
  for (const Json& e : lectures) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      throw SchemaError("each lecture must be [course, instructor]");
    sched.lectures.push_back(
        {inst.course_index(e[0].get<std::string>()), inst.instructor_index(e[1].get<std::string>())});
  }
  const Json& assignments = field(doc, "assignments");
  if (!assignments.is_array()) throw SchemaError("'assignments' must be an array");
  for (const Json& e : assignments) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_string() || !e[1].is_string() || !e[2].is_string())
      throw SchemaError("each assignment must be [course, instructor, student]");
    sched.assignments.push_back({{inst.course_index(e[0].get<std::string>()),
                                  inst.instructor_index(e[1].get<std::string>())},
                                 inst.student_index(e[2].get<std::string>())});
  }
  const Json& units = field(doc, "units");
  if (!units.is_array()) throw SchemaError("'units' must be an array");
  for (const Json& e : units) {
    if (!e.is_array() || e.size() != 5 || !e[0].is_string() || !e[1].is_string() || !e[2].is_string() ||
        !e[3].is_number_integer() || !e[4].is_number_integer())
      throw SchemaError("each unit must be [course, instructor, room, day, period]");
    sched.units.push_back({{inst.course_index(e[0].get<std::string>()),
                            inst.instructor_index(e[1].get<std::string>())},
                           inst.room_index(e[2].get<std::string>()),
                           {e[3].get<int>(), e[4].get<int>()}});
  }
  sched.canonicalize();
  return sched;
}

// ---------------------------------------------------------------------------
// Files

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  Json doc = Json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) throw SchemaError("not valid JSON: " + path);
  return doc;
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << text;
  if (!out) throw IoError("failed writing " + path);
}

inline std::string dump_document(const Json& doc) { return doc.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Request CSV (header: student_id,course_id,rank)

struct Request {
  std::string student;
  std::string course;
  int rank = 1;
};

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream is(line);
  while (std::getline(is, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.push_back("");
  return cells;
}

inline std::vector<Request> parse_requests_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw SchemaError("empty request CSV");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "student_id,course_id,rank")
    throw SchemaError("request CSV must start with header 'student_id,course_id,rank'");
  std::vector<Request> out;
  std::map<std::pair<std::string, int>, bool> seen;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto cells = split_csv_line(line);
    if (cells.size() != 3) throw SchemaError("line " + std::to_string(line_no) + ": expected 3 cells");
    Request r;
    r.student = cells[0];
    r.course = cells[1];
    if (cells[2] != "1" && cells[2] != "2")
      throw SchemaError("line " + std::to_string(line_no) + ": rank must be 1 or 2");
    r.rank = cells[2] == "1" ? 1 : 2;
    if (r.student.empty() || r.course.empty())
      throw SchemaError("line " + std::to_string(line_no) + ": empty id");
    if (seen[{r.student, r.rank}])
      throw SchemaError("line " + std::to_string(line_no) + ": duplicate (student, rank) pair");
    seen[{r.student, r.rank}] = true;
    out.push_back(std::move(r));
  }
  if (out.empty()) throw SchemaError("request CSV has no data rows");
  return out;
}

struct GradeRow {
  std::string student;
  std::string course;
  double grade = 0.0;
};

inline std::vector<GradeRow> parse_grades_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw SchemaError("empty grades CSV");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "student_id,course_id,grade")
    throw SchemaError("grades CSV must start with header 'student_id,course_id,grade'");
  std::vector<GradeRow> out;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto cells = split_csv_line(line);
    if (cells.size() != 3) throw SchemaError("line " + std::to_string(line_no) + ": expected 3 cells");
    GradeRow r;
    r.student = cells[0];
    r.course = cells[1];
    try {
      r.grade = std::stod(cells[2]);
    } catch (const std::exception&) {
      throw SchemaError("line " + std::to_string(line_no) + ": grade must be a number");
    }
    out.push_back(std::move(r));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Summary lines and the results table

// One space-separated key=value record per solve, mirroring the columns of
// the experiment results table.
struct Summary {
  std::string setting;
  std::string mode;
  std::string status;
  int students = 0;
  int courses_per_student = 0;  // minimum courses assigned to any student
  long long assignments = 0;
  long long envy = 0;
  double time_s = 0.0;
};

inline std::string format_summary(const Summary& s) {
  std::ostringstream os;
  os << "setting=" << s.setting << " mode=" << s.mode << " status=" << s.status
     << " students=" << s.students << " courses_per_student=" << s.courses_per_student
     << " assignments=" << s.assignments << " envy=" << s.envy << " time_s=" << std::fixed
     << std::setprecision(2) << s.time_s;
  return os.str();
}

inline Summary parse_summary(const std::string& line) {
  Summary s;
  std::istringstream is(line);
  std::string token;
  bool any = false;
  while (is >> token) {
    const size_t eq = token.find('=');
    if (eq == std::string::npos) throw SchemaError("summary token without '=': " + token);
    const std::string key = token.substr(0, eq);
    const std::string value = token.substr(eq + 1);
    try {
      if (key == "setting") s.setting = value;
      else if (key == "mode") s.mode = value;
      else if (key == "status") s.status = value;
      else if (key == "students") s.students = std::stoi(value);
      else if (key == "courses_per_student") s.courses_per_student = std::stoi(value);
      else if (key == "assignments") s.assignments = std::stoll(value);
      else if (key == "envy") s.envy = std::stoll(value);
      else if (key == "time_s") s.time_s = std::stod(value);
    } catch (const std::exception&) {
      throw SchemaError("bad summary value: " + token);
    }
    any = true;
  }
  if (!any) throw SchemaError("empty summary line");
  return s;
}

inline std::string render_report(const std::vector<Summary>& rows) {
  std::vector<std::vector<std::string>> cells;
  cells.push_back({"setting", "students", "courses/student", "envy", "time"});
  for (const Summary& s : rows) {
    std::ostringstream time;
    time << std::fixed << std::setprecision(1) << s.time_s << "s";
    cells.push_back({s.setting, std::to_string(s.students), std::to_string(s.courses_per_student),
                     std::to_string(s.envy), time.str()});
  }
  std::vector<size_t> widths(cells[0].size(), 0);
  for (const auto& row : cells)
    for (size_t k = 0; k < row.size(); ++k) widths[k] = std::max(widths[k], row[k].size());
  std::string out;
  for (const auto& row : cells) {
    for (size_t k = 0; k < row.size(); ++k) {
      out += row[k];
      if (k + 1 < row.size()) out += std::string(widths[k] - row[k].size() + 2, ' ');
    }
    out += "\n";
  }
  return out;
}

// Structured form of a validation report.
inline Json report_to_json(const ValidationReport& report) {
  Json doc;
  doc["feasible"] = report.feasible;
  doc["violations"] = Json::array();
  for (const Violation& v : report.violations) {
    Json jv;
    jv["kind"] = to_string(v.kind);
    jv["subjects"] = v.subjects;
    jv["detail"] = v.detail;
    doc["violations"].push_back(std::move(jv));
  }
  return doc;
}

}  // namespace fairsched
