#include "bbmirror/cli.hpp"

#include <atomic>
#include <fstream>
#include <random>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "bbmirror/errors.hpp"
#include "bbmirror/records.hpp"

namespace bbm::cli {

namespace {

struct Options {
  std::string format = "text";
  std::uint64_t seed = 1;
  std::size_t jobs = 1;
  std::size_t length = 0;
  std::string path;
  bool record() const { return format == "record"; }
};

LatticePolytope load_polytope(const std::string& path) {
  std::string text = read_file(path);
  if (!looks_like_json(text)) {
    std::istringstream in(text);
    return parse_plain_polytope(in);
  }
  Json j = parse_json(text, path);
  if (j.is_object() && j.value("type", "") == "nef_partition") {
    auto rec = nef_partition_from_json(j);
    return validate_nef_partition(polytopes_of(rec), rec.base_points).ambient;
  }
  return polytope_from_json(j);
}

NefPartitionRecord load_partition(const std::string& path) {
  std::string text = read_file(path);
  if (!looks_like_json(text)) throw InputError(path + ": expected a nef_partition record");
  return nef_partition_from_json(parse_json(text, path));
}

std::string joined(const std::vector<IntVec>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : " ") + to_string(x);
  return s;
}

int polytope_info(const Options& o, std::ostream& out) {
  auto p = load_polytope(o.path);
  auto interior = p.interior_lattice_points();
  auto points = p.lattice_points();
  bool reflexive = interior.size() == 1 && is_reflexive_wrt(p, interior[0]);
  std::optional<DualPolytope> dual;
  if (interior.size() == 1) dual = dual_polytope(p, interior[0]);
  if (o.record()) {
    Json j = {{"type", "polytope_info"}, {"polytope", to_json(p)}, {"lattice_points", points.size()}};
    Json pts = Json::array(), in = Json::array();
    for (const auto& x : points) pts.push_back(to_json(LatticePolytope::hull({x}))["vertices"][0]);
    for (const auto& x : interior) in.push_back(to_json(LatticePolytope::hull({x}))["vertices"][0]);
    j["points"] = pts;
    j["interior_points"] = in;
    j["reflexive"] = reflexive;
    j["dual"] = dual && dual->polytope ? to_json(*dual->polytope) : Json(nullptr);
    out << j.dump() << "\n";
    return 0;
  }
  out << "polytope: " << to_string(p) << "\n";
  out << "dimension: " << p.dim() << " in rank " << p.ambient_dim() << "\n";
  out << "lattice points: " << points.size() << "\n";
  out << "interior points: " << joined(interior) << "\n";
  out << "reflexive: " << (reflexive ? "yes" : "no") << "\n";
  if (dual) {
    out << "dual:";
    for (const auto& v : dual->vertices) out << " " << to_string(v);
    out << (dual->integral ? "" : " (not a lattice polytope)") << "\n";
  }
  return 0;
}

int nefpart_cmd(const std::string& which, const Options& o, std::ostream& out) {
  if (which == "special") {
    auto p = load_polytope(o.path);
    if (o.length == 0) throw InputError("--length r is required for nefpart special");
    auto s = special_simplices(p, o.length);
    if (o.record()) {
      Json a = Json::array();
      for (const auto& t : s) a.push_back(to_json(TriangulationRecord{t, {}, {}})["points"]);
      out << Json{{"type", "special_simplices"}, {"length", o.length}, {"simplices", a}}.dump() << "\n";
    } else {
      out << "special simplices: " << s.size() << "\n";
      for (const auto& t : s) out << "  " << joined(t) << "\n";
    }
    return 0;
  }
  auto rec = load_partition(o.path);
  auto p = validate_nef_partition(polytopes_of(rec), rec.base_points);
  if (which == "validate") {
    if (o.record())
      out << Json{{"type", "nef_partition_check"}, {"valid", true}, {"m", to_json(LatticePolytope::hull({p.m}))["vertices"][0]}}.dump() << "\n";
    else
      out << "valid nef partition of length " << p.length() << " in rank " << p.rank() << "; m = " << to_string(p.m)
          << "\nMinkowski sum: " << to_string(p.ambient) << "\n";
    return 0;
  }
  auto nabla = dual_nef_partition(p);
  LatticePolytope sum = nabla[0];
  for (std::size_t j = 1; j < nabla.size(); ++j) sum = minkowski_sum(sum, nabla[j]);
  if (o.record()) {
    NefPartitionRecord d;
    for (const auto& n : nabla) {
      d.parts.push_back(n.vertices());
      d.base_points.push_back(IntVec(p.rank(), Int(0)));
    }
    out << to_json(d).dump() << "\n";
  } else {
    for (std::size_t j = 0; j < nabla.size(); ++j) out << "nabla" << j + 1 << ": " << to_string(nabla[j]) << "\n";
    out << "sum: " << to_string(sum) << "\n";
  }
  return 0;
}

int cayley_cmd(const Options& o, std::ostream& out) {
  auto rec = load_partition(o.path);
  auto parts = polytopes_of(rec);
  auto c = cayley(parts);
  auto systems = base_point_systems(parts, rec.base_points);
  if (o.record()) {
    Json sys = Json::array();
    for (const auto& s : systems.systems) sys.push_back(to_json(TriangulationRecord{s, {}, {}})["points"]);
    Json j = {{"type", "cayley"},
              {"polytope", to_json(c.polytope)},
              {"cone", to_json(TriangulationRecord{c.cone.generators(), {}, {}})["points"]},
              {"base_point_systems", sys}};
    out << j.dump() << "\n";
    return 0;
  }
  out << "Cayley polytope: " << to_string(c.polytope) << "\n";
  out << "cone generators: " << joined(c.cone.generators()) << "\n";
  if (c.gorenstein && c.gorenstein->index)
    out << "Gorenstein index: " << *c.gorenstein->index << "\n";
  out << "splittings of the dual cone: " << systems.systems.size() << "\n";
  for (std::size_t i = 0; i < systems.systems.size(); ++i)
    out << "  base points " << joined(systems.systems[i]) << (systems.repeated[i] ? " (repeated)" : "") << "\n";
  return 0;
}

int cox_cmd(const Options& o, std::ostream& out) {
  auto p = load_polytope(o.path);
  auto fan = simplicial_refinement(normal_fan(p));
  auto s = s_nu(fan.rays, p.ambient_dim());
  auto data = cox_data(fan);
  if (o.record()) {
    Json j = {{"type", "cox"},
              {"rays", to_json(TriangulationRecord{fan.rays, {}, {}})["points"]},
              {"degrees", to_json(degree_record(s))},
              {"primitive_collections", data.primitive_collections}};
    out << j.dump() << "\n";
    return 0;
  }
  out << "rays: " << joined(fan.rays) << "\n";
  out << "degree matrix:\n" << degree_matrix_text(s);
  out << "primitive collections:";
  for (const auto& c : data.primitive_collections) {
    out << " {";
    for (std::size_t i = 0; i < c.size(); ++i) out << (i ? "," : "") << c[i];
    out << "}";
  }
  out << "\n";
  return 0;
}

int triangulate_cmd(const Options& o, std::ostream& out) {
  std::string text = read_file(o.path);
  TriangulationRecord rec;
  if (looks_like_json(text)) {
    rec = triangulation_from_json(parse_json(text, o.path));
  } else {
    std::istringstream in(text);
    rec.points = parse_plain_rows(in);
  }
  // lift to a configuration at height one when the points are not already there
  auto nu = [&] {
    try {
      return PointConfig::make(rec.points, rec.points[0].size());
    } catch (const InputError&) {
      std::vector<IntVec> lifted;
      for (auto v : rec.points) {
        v.push_back(Int(1));
        lifted.push_back(v);
      }
      return PointConfig::make(lifted, lifted[0].size());
    }
  }();
  Triangulation t;
  std::optional<RatVec> weights = rec.weights;
  if (!rec.simplices.empty() && !weights) {
    t.simplices = rec.simplices;
    auto problem = check_triangulation(nu, t);
    if (!problem.empty()) throw InputError("not a triangulation: " + problem);
  } else {
    if (!weights) {
      std::mt19937_64 rng(o.seed);
      std::uniform_int_distribution<long> dist(0, 999);
      weights.emplace();
      for (std::size_t i = 0; i < nu.points.size(); ++i) weights->push_back(Rat(dist(rng)));
    }
    auto sub = triangulation_from_weights(nu, *weights);
    if (!sub.generic) {
      if (o.record())
        out << Json{{"type", "subdivision"}, {"cells", sub.cells}, {"simplicial", sub.simplicial}, {"generic", false}}.dump() << "\n";
      else
        out << "weights " << to_string(*weights) << " induce a non-generic subdivision: "
            << to_string(sub.triangulation()) << "\n";
      return 0;
    }
    t = sub.triangulation();
  }
  auto cert = regularity_certificate(nu, t);
  std::optional<ChamberDescription> chamber;
  if (cert) chamber = chamber_of_triangulation(nu, t);
  if (o.record()) {
    Json j = to_json(TriangulationRecord{rec.points, t.simplices, weights});
    j["regular"] = cert.has_value();
    j["certificate"] = cert ? to_json(TriangulationRecord{{}, {}, cert})["weights"] : Json(nullptr);
    j["chamber"] = chamber ? to_json(TriangulationRecord{chamber->weight_inequalities, {}, {}})["points"] : Json(nullptr);
    out << j.dump() << "\n";
    return 0;
  }
  if (weights) out << "weights: " << to_string(*weights) << "\n";
  out << "triangulation: " << to_string(t) << "\n";
  out << "regular: " << (cert ? "yes" : "no") << "\n";
  if (cert) {
    out << "certificate: " << to_string(*cert) << "\n";
    out << "chamber (strict inequalities on weights):\n";
    for (const auto& row : chamber->weight_inequalities) out << "  " << to_string(row) << "\n";
  }
  return 0;
}

int mirror_report(const Options& o, std::ostream& out) {
  auto rec = load_partition(o.path);
  auto rep = double_mirror_pipeline(mirror_input_of(rec));
  if (o.record())
    out << to_json(report_record(rep)).dump() << "\n";
  else
    out << report_text(rep);
  return rep.passed() ? 0 : 1;
}

struct ScanResult {
  std::string text;
  int code = 0;
};

ScanResult scan_line(std::size_t lineno, const std::string& line, bool record) {
  try {
    auto rec = nef_partition_from_json(parse_json(line, "line " + std::to_string(lineno)));
    auto sys = base_point_systems(polytopes_of(rec), rec.base_points);
    if (sys.systems.size() < 2) return {};
    if (record) {
      Json a = Json::array();
      for (const auto& s : sys.systems) a.push_back(to_json(TriangulationRecord{s, {}, {}})["points"]);
      Json j = {{"line", lineno}};
      if (!rec.name.empty()) j["name"] = rec.name;
      j["splittings"] = sys.systems.size();
      j["base_point_systems"] = a;
      return {j.dump() + "\n", 0};
    }
    std::string s = "line " + std::to_string(lineno) + (rec.name.empty() ? "" : " " + rec.name) + ": " +
                    std::to_string(sys.systems.size()) + " base point systems:";
    for (const auto& q : sys.systems) s += " [" + joined(q) + "]";
    return {s + "\n", 0};
  } catch (const InputError& e) {
    std::string msg = e.what();
    if (record) return {Json{{"line", lineno}, {"error", msg}}.dump() + "\n", 2};
    return {"line " + std::to_string(lineno) + ": error: " + msg + "\n", 2};
  } catch (const VerificationError& e) {
    std::string msg = e.what();
    if (record) return {Json{{"line", lineno}, {"verification_failure", msg}}.dump() + "\n", 1};
    return {"line " + std::to_string(lineno) + ": verification failure: " + msg + "\n", 1};
  }
}

}  // namespace

int scan(std::istream& in, std::ostream& out, std::size_t jobs, bool record) {
  jobs = std::max<std::size_t>(jobs, 1);
  const std::size_t window = jobs * 16;
  int code = 0;
  std::size_t lineno = 0;
  std::vector<std::pair<std::size_t, std::string>> batch;
  std::vector<ScanResult> results;
  auto flush = [&] {
    results.assign(batch.size(), {});
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t i; (i = next++) < batch.size();) results[i] = scan_line(batch[i].first, batch[i].second, record);
    };
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < std::min(jobs, batch.size()); ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    for (const auto& r : results) {
      out << r.text;
      code = std::max(code, r.code);
    }
    out.flush();
    batch.clear();
  };
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    batch.emplace_back(lineno, std::move(line));
    if (batch.size() == window) flush();
  }
  flush();
  return code;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact toolkit for nef partitions, Cayley cones and double mirrors", "bbmirror"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "record"}));
  app.add_option("--seed", o.seed, "Seed for sampled weights");

  auto* poly = app.add_subcommand("polytope", "Polytope queries")->require_subcommand(1);
  auto* info = poly->add_subcommand("info", "Reflexivity, dual and lattice points");
  info->add_option("file", o.path)->required();

  auto* nef = app.add_subcommand("nefpart", "Nef partition queries")->require_subcommand(1);
  std::string nef_which;
  for (const char* name : {"validate", "dual", "special"}) {
    auto* s = nef->add_subcommand(name);
    s->add_option("file", o.path)->required();
    if (std::string(name) == "special") s->add_option("--length", o.length, "Length r")->required();
    s->callback([&nef_which, name] { nef_which = name; });
  }

  auto* cay = app.add_subcommand("cayley", "Cayley cone and its splittings");
  cay->add_option("file", o.path)->required();
  auto* cox = app.add_subcommand("cox", "Degree matrix and primitive collections of the normal fan");
  cox->add_option("file", o.path)->required();
  auto* tri = app.add_subcommand("triangulate", "Regular triangulation, certificate and chamber");
  tri->add_option("file", o.path)->required();

  auto* mir = app.add_subcommand("mirror", "Double mirror pipeline")->require_subcommand(1);
  auto* rep = mir->add_subcommand("report", "Full report for one input");
  rep->add_option("file", o.path)->required();
  auto* scn = mir->add_subcommand("scan", "Stream a JSONL list and flag double mirrors");
  scn->add_option("file", o.path)->required();
  scn->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);

  std::vector<std::string> argv_store{"bbmirror"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*info) return polytope_info(o, out);
    if (*nef) return nefpart_cmd(nef_which, o, out);
    if (*cay) return cayley_cmd(o, out);
    if (*cox) return cox_cmd(o, out);
    if (*tri) return triangulate_cmd(o, out);
    if (*rep) return mirror_report(o, out);
    if (*scn) {
      if (o.path == "-") return scan(std::cin, out, o.jobs, o.record());
      std::ifstream in(o.path);
      if (!in) throw InputError("cannot open " + o.path);
      return scan(in, out, o.jobs, o.record());
    }
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace bbm::cli
