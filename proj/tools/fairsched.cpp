// Command-line front end: generate synthetic instances, solve them, validate
// and audit schedules, export LP files, ingest request CSVs, and render
// result tables.
//
// Exit codes: 0 success; 1 infeasible schedule / envy found; 2 bad flags or
// malformed input; 3 impossible generator spec; 4 infeasible instance on
// solve; 5 time limit hit with no incumbent.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fairsched/core.hpp"
#include "fairsched/datagen.hpp"
#include "fairsched/encoder.hpp"
#include "fairsched/io.hpp"
#include "fairsched/lp_format.hpp"
#include "fairsched/solver.hpp"
#include "fairsched/validator.hpp"

namespace {

using namespace fairsched;

std::string file_stem(const std::string& path) { return std::filesystem::path(path).stem().string(); }

long long env_log_every() {
  const char* v = std::getenv("FAIRSCHED_LOG");
  if (v == nullptr || *v == '\0' || std::string(v) == "0") return 0;
  if (std::string(v) == "debug") return 10000;
  return 100000;
}

Instance load_instance_file(const std::string& path) {
  Instance inst = load_instance(read_json_file(path));
  for (const std::string& w : inst.warnings()) std::cerr << "warning: " << w << "\n";
  return inst;
}

int min_courses_assigned(const Instance& inst, const Schedule& sched) {
  if (inst.students.empty()) return 0;
  const auto by_student = assigned_courses(inst, sched);
  size_t least = by_student[0].size();
  for (const auto& cs : by_student) least = std::min(least, cs.size());
  return static_cast<int>(least);
}

struct GenFlags {
  GenSpec spec;
  int subsets = 1;
  std::string out = "instance.json";
};

void add_genspec_flags(CLI::App* cmd, GenSpec& spec) {
  cmd->add_option("--seed", spec.seed, "random seed");
  cmd->add_option("--periods", spec.periods, "periods per day");
  cmd->add_option("--days", spec.days, "weekdays per week");
  cmd->add_option("--min-courses", spec.min_courses_per_student, "minimum courses per student");
  cmd->add_option("--max-courses", spec.max_courses_per_student, "maximum courses per student");
  cmd->add_option("--max-instructor-courses", spec.max_courses_per_instructor,
                  "maximum courses per instructor");
  cmd->add_option("--frequency", spec.lecture_frequency, "weekly units per lecture");
  cmd->add_option("--extra-eligible", spec.extra_eligible, "eligibility fill beyond the course maximum");
  cmd->add_option("--prereq-density", spec.prerequisite_density, "fraction of courses with prerequisites");
  cmd->add_option("--grade-scale", spec.grade_scale_max, "upper end of the grade scale");
}

int cmd_generate(const GenFlags& flags) {
  const Instance inst = generate(flags.spec);
  for (const std::string& w : inst.warnings()) std::cerr << "warning: " << w << "\n";
  if (flags.subsets <= 1) {
    write_text_file(flags.out, dump_document(save_instance(inst)));
    std::cout << "wrote " << flags.out << " (" << inst.students.size() << " students, "
              << inst.courses.size() << " courses)\n";
    return 0;
  }
  const auto parts = split_subsets(inst, flags.subsets);
  std::string prefix = flags.out;
  const std::string suffix = ".json";
  if (prefix.size() >= suffix.size() && prefix.substr(prefix.size() - suffix.size()) == suffix)
    prefix.resize(prefix.size() - suffix.size());
  for (size_t k = 0; k < parts.size(); ++k) {
    const std::string path = prefix + "_" + std::to_string(k + 1) + suffix;
    write_text_file(path, dump_document(save_instance(parts[k])));
    std::cout << "wrote " << path << " (" << parts[k].students.size() << " students)\n";
  }
  return 0;
}

EncodeOptions::Mode encode_mode(const std::string& mode) {
  return mode == "hssp" ? EncodeOptions::Mode::Hssp : EncodeOptions::Mode::Fhssp;
}

int cmd_solve(const std::string& instance_path, const std::string& mode, double time_limit, int threads,
              uint64_t seed, std::string out) {
  const Instance inst = load_instance_file(instance_path);

  EncodeOptions opts;
  opts.mode = encode_mode(mode);
  opts.lexicographic = mode == "fhssp-lex";
  BuiltModel built = build(inst, opts);

  SolveConfig config;
  config.time_limit_s = time_limit;
  config.threads = threads;
  config.seed = seed;
  config.log_every = env_log_every();

  SolveStatus status;
  std::optional<std::vector<uint8_t>> assignment;
  SolveStats stats;
  std::optional<long long> phase1;
  std::optional<long long> envy_objective;
  if (mode == "fhssp-lex") {
    const LexOutcome lex =
        solve_lexicographic(built.model, built.catalog.assignment_sum(), built.catalog.envy_sum(), config);
    status = lex.status;
    assignment = lex.assignment;
    stats = lex.stats;
    phase1 = lex.primary;
    envy_objective = lex.secondary;
  } else {
    const SolveOutcome r = solve(built.model, config);
    status = r.status;
    assignment = r.assignment;
    stats = r.stats;
    if (mode == "fhssp-pure") envy_objective = r.objective;
  }

  if (status == SolveStatus::Infeasible) {
    std::cerr << "no feasible schedule exists for " << instance_path << "\n";
    return 4;
  }
  if (status == SolveStatus::Timeout) {
    std::cerr << "time limit reached without a feasible schedule\n";
    return 5;
  }

  const Schedule sched = decode(inst, built.catalog, *assignment);
  long long envy = -1;
  try {
    envy = audit_envy(inst, sched).count();
  } catch (const Error& e) {
    std::cerr << "warning: envy audit unavailable: " << e.what() << "\n";
  }

  Summary summary;
  summary.setting = file_stem(instance_path);
  summary.mode = mode;
  summary.status = to_string(status);
  summary.students = static_cast<int>(inst.students.size());
  summary.courses_per_student = min_courses_assigned(inst, sched);
  summary.assignments = static_cast<long long>(sched.assignments.size());
  summary.envy = envy;
  summary.time_s = stats.wall_s;

  Json meta;
  meta["mode"] = mode;
  meta["status"] = to_string(status);
  meta["assignments"] = static_cast<long long>(sched.assignments.size());
  if (phase1) meta["max_assignments"] = *phase1;
  if (envy_objective) meta["envy_objective"] = *envy_objective;
  meta["envy"] = envy;
  meta["seed"] = seed;
  meta["nodes"] = stats.nodes;
  meta["propagations"] = stats.propagations;

  if (out.empty()) out = file_stem(instance_path) + ".schedule.json";
  write_text_file(out, dump_document(save_schedule(inst, sched, meta)));
  std::cout << format_summary(summary) << "\n";
  return 0;
}

int cmd_validate(const std::string& instance_path, const std::string& schedule_path, bool as_json) {
  const Instance inst = load_instance_file(instance_path);
  const Schedule sched = load_schedule(read_json_file(schedule_path), inst);
  const ValidationReport report = validate(inst, sched);
  if (as_json)
    std::cout << dump_document(report_to_json(report));
  else
    std::cout << render_text(report);
  return report.feasible ? 0 : 1;
}

int cmd_audit(const std::string& instance_path, const std::string& schedule_path) {
  const Instance inst = load_instance_file(instance_path);
  const Schedule sched = load_schedule(read_json_file(schedule_path), inst);
  const EnvyReport report = audit_envy(inst, sched);
  for (const EnvyPair& p : report.pairs)
    std::cout << inst.students[p.envious].id << " envies " << inst.students[p.envied].id << " (witness "
              << inst.courses[p.witness].id << ")\n";
  std::cout << "envy_count=" << report.count() << "\n";
  return report.count() == 0 ? 0 : 1;
}

int cmd_export(const std::string& instance_path, const std::string& mode, const std::string& out) {
  const Instance inst = load_instance_file(instance_path);
  EncodeOptions opts;
  opts.mode = encode_mode(mode);
  const BuiltModel built = build(inst, opts);
  IpModel linear = linearize(built.model);
  if (mode == "fhssp-lex") {
    // export the fairness phase with the assignment total left free; the
    // two-phase protocol is a solving strategy, not a model property
  }
  std::ofstream os(out, std::ios::binary);
  if (!os) throw IoError("cannot open " + out + " for writing");
  export_lp(linear, os);
  std::cout << "variables=" << linear.var_count() << " constraints=" << linear.constraints().size() << "\n";
  return 0;
}

int cmd_ingest(const std::string& requests_path, const std::string& grades_path, GenSpec spec,
               const std::string& out) {
  std::ifstream rin(requests_path);
  if (!rin) throw IoError("cannot open " + requests_path);
  const std::vector<Request> requests = parse_requests_csv(rin);

  RequestOverride over;
  std::map<std::string, int> student_of, course_of;
  for (const Request& r : requests) {
    if (!student_of.count(r.student)) {
      student_of[r.student] = static_cast<int>(over.student_ids.size());
      over.student_ids.push_back(r.student);
    }
    if (!course_of.count(r.course)) {
      course_of[r.course] = static_cast<int>(over.course_ids.size());
      over.course_ids.push_back(r.course);
    }
  }
  over.first_choices.resize(over.student_ids.size());
  over.second_choices.resize(over.student_ids.size());
  over.grades.resize(over.student_ids.size());
  for (const Request& r : requests) {
    auto& dst = r.rank == 1 ? over.first_choices[student_of[r.student]]
                            : over.second_choices[student_of[r.student]];
    dst.push_back(course_of[r.course]);
  }
  if (!grades_path.empty()) {
    std::ifstream gin(grades_path);
    if (!gin) throw IoError("cannot open " + grades_path);
    for (const GradeRow& g : parse_grades_csv(gin)) {
      if (!student_of.count(g.student)) throw SchemaError("grades reference unknown student " + g.student);
      if (!course_of.count(g.course)) throw SchemaError("grades reference unknown course " + g.course);
      over.grades[student_of[g.student]].push_back({course_of[g.course], g.grade});
    }
  }

  spec.students = static_cast<int>(over.student_ids.size());
  spec.courses = static_cast<int>(over.course_ids.size());
  const Instance inst = generate_with_requests(spec, over);
  for (const std::string& w : inst.warnings()) std::cerr << "warning: " << w << "\n";
  write_text_file(out, dump_document(save_instance(inst)));
  std::cout << "wrote " << out << " (" << inst.students.size() << " students, " << inst.courses.size()
            << " courses)\n";
  return 0;
}

int cmd_report(const std::vector<std::string>& summary_paths) {
  std::vector<Summary> rows;
  for (const std::string& path : summary_paths) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    std::string line;
    while (std::getline(in, line)) {
      if (line.find('=') == std::string::npos) continue;
      rows.push_back(parse_summary(line));
      break;
    }
  }
  std::cout << render_report(rows);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fairsched: fair high-school timetabling toolkit"};
  app.require_subcommand(1);

  // generate
  GenFlags gen;
  CLI::App* generate_cmd = app.add_subcommand("generate", "generate a synthetic instance");
  generate_cmd->add_option("--students", gen.spec.students, "number of students")->required();
  generate_cmd->add_option("--courses", gen.spec.courses, "number of courses")->required();
  generate_cmd->add_option("--instructors", gen.spec.instructors, "number of instructors")->required();
  generate_cmd->add_option("--rooms", gen.spec.rooms, "number of rooms")->required();
  add_genspec_flags(generate_cmd, gen.spec);
  generate_cmd->add_option("--subsets", gen.subsets, "split students into k sub-instances");
  generate_cmd->add_option("--out", gen.out, "output file (suffix _k added per subset)");

  // solve
  std::string solve_instance, solve_mode = "fhssp-lex", solve_out;
  double time_limit = 60.0;
  int threads = 1;
  uint64_t solve_seed = 0;
  CLI::App* solve_cmd = app.add_subcommand("solve", "solve an instance and write the schedule");
  solve_cmd->add_option("instance", solve_instance, "instance JSON file")->required();
  solve_cmd->add_option("--mode", solve_mode, "hssp | fhssp-pure | fhssp-lex")
      ->check(CLI::IsMember({"hssp", "fhssp-pure", "fhssp-lex"}));
  solve_cmd->add_option("--time-limit", time_limit, "time limit in seconds");
  solve_cmd->add_option("--threads", threads, "worker threads");
  solve_cmd->add_option("--seed", solve_seed, "search seed");
  solve_cmd->add_option("--out", solve_out, "schedule output file");

  // validate
  std::string val_instance, val_schedule;
  bool val_json = false;
  CLI::App* validate_cmd = app.add_subcommand("validate", "check a schedule against an instance");
  validate_cmd->add_option("instance", val_instance)->required();
  validate_cmd->add_option("schedule", val_schedule)->required();
  validate_cmd->add_flag("--json", val_json, "emit a JSON report");

  // audit
  std::string audit_instance, audit_schedule;
  CLI::App* audit_cmd = app.add_subcommand("audit", "list envious student pairs");
  audit_cmd->add_option("instance", audit_instance)->required();
  audit_cmd->add_option("schedule", audit_schedule)->required();

  // export
  std::string exp_instance, exp_mode = "hssp", exp_out = "model.lp";
  CLI::App* export_cmd = app.add_subcommand("export", "export the model in LP format");
  export_cmd->add_option("instance", exp_instance)->required();
  export_cmd->add_option("--mode", exp_mode, "hssp | fhssp-pure | fhssp-lex")
      ->check(CLI::IsMember({"hssp", "fhssp-pure", "fhssp-lex"}));
  export_cmd->add_option("--out", exp_out, "LP output file");

  // ingest
  std::string ing_requests, ing_grades, ing_out = "instance.json";
  GenSpec ing_spec;
  CLI::App* ingest_cmd = app.add_subcommand("ingest", "build an instance from a request CSV");
  ingest_cmd->add_option("requests", ing_requests, "CSV: student_id,course_id,rank")->required();
  ingest_cmd->add_option("--grades", ing_grades, "CSV: student_id,course_id,grade");
  ingest_cmd->add_option("--instructors", ing_spec.instructors, "number of instructors")->required();
  ingest_cmd->add_option("--rooms", ing_spec.rooms, "number of rooms")->required();
  add_genspec_flags(ingest_cmd, ing_spec);
  ingest_cmd->add_option("--out", ing_out, "output file");

  // report
  std::vector<std::string> report_paths;
  CLI::App* report_cmd = app.add_subcommand("report", "render a results table from summary files");
  report_cmd->add_option("summaries", report_paths, "summary files from `solve`")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (generate_cmd->parsed()) return cmd_generate(gen);
    if (solve_cmd->parsed())
      return cmd_solve(solve_instance, solve_mode, time_limit, threads, solve_seed, solve_out);
    if (validate_cmd->parsed()) return cmd_validate(val_instance, val_schedule, val_json);
    if (audit_cmd->parsed()) return cmd_audit(audit_instance, audit_schedule);
    if (export_cmd->parsed()) return cmd_export(exp_instance, exp_mode, exp_out);
    if (ingest_cmd->parsed()) return cmd_ingest(ing_requests, ing_grades, ing_spec, ing_out);
    if (report_cmd->parsed()) return cmd_report(report_paths);
  } catch (const InfeasibleSpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
