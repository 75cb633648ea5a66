#include <filesystem>
#include <fstream>
#include <sstream>

#include "bbmirror/cli.hpp"
#include "bbmirror/errors.hpp"
#include "bbmirror/records.hpp"
#include "corpus.hpp"
#include "doctest.h"

using namespace bbm;
using testing::v;

namespace {

const std::string data = BBM_DATA_DIR;

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  auto path = (std::filesystem::temp_directory_path() / ("bbm_test_" + name)).string();
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("plain format") {
  std::istringstream in("2 3\n0 0\n1 1\n-1 1\n");
  auto p = parse_plain_polytope(in);
  CHECK(p.vertices() == std::vector<IntVec>{v({-1, 1}), v({0, 0}), v({1, 1})});
  std::istringstream again(emit_plain_polytope(p));
  CHECK(parse_plain_polytope(again) == p);

  auto message = [](const std::string& text) {
    std::istringstream s(text);
    try {
      parse_plain_polytope(s);
    } catch (const InputError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message("").find("expected header") != std::string::npos);
  CHECK(message("# only a comment\n").find("expected header") != std::string::npos);
  CHECK(message("2 2\n0 0\n1\n").find("line 3") != std::string::npos);
  CHECK(message("2 2\n0 0\n1 x\n").find("expected an integer") != std::string::npos);
  CHECK(message("2 3\n0 0\n1 1\n").find("expected 3 rows") != std::string::npos);
  CHECK(message("2 1\n0 0\n1 1\n").find("unexpected content") != std::string::npos);
}

TEST_CASE("record round trips") {
  auto p = LatticePolytope::hull({v({0, 0}), v({1, 1}), v({-1, 1})});
  CHECK(polytope_from_json(Json::parse(to_json(p).dump())) == p);

  for (const auto& e : testing::corpus()) {
    NefPartitionRecord r{e.parts, e.base, e.alt, e.name};
    CHECK(nef_partition_from_json(Json::parse(to_json(r).dump())) == r);
  }

  TriangulationRecord t{{v({0, 1}), v({1, 1}), v({2, 1})}, {{0, 1}, {1, 2}}, RatVec{Rat(1, 2), Rat(0), Rat(7)}};
  CHECK(triangulation_from_json(Json::parse(to_json(t).dump())) == t);

  // integers beyond 64 bits travel as strings
  LatticePolytope big = LatticePolytope::hull({IntVec{Int("123456789012345678901234567890")}, IntVec{Int(0)}});
  auto j = to_json(big);
  CHECK(j["vertices"][1][0].is_string());
  CHECK(polytope_from_json(Json::parse(j.dump())) == big);

  auto s = s_nu({v({1, 0}), v({0, 1}), v({-1, -2})}, 2);
  auto d = degree_record(s);
  CHECK(degree_from_json(Json::parse(to_json(d).dump())) == d);
}

TEST_CASE("report records round trip") {
  for (const auto& e : testing::corpus()) {
    CAPTURE(e.name);
    auto rep = double_mirror_pipeline({e.polytopes(), e.base, e.alt});
    auto rec = report_record(rep);
    auto text = to_json(rec).dump();
    auto back = report_from_json(Json::parse(text));
    CHECK(back == rec);
    CHECK(to_json(back).dump() == text);
  }
}

TEST_CASE("record diagnostics name the field") {
  auto message = [](const std::string& text) {
    try {
      nef_partition_from_json(Json::parse(text));
    } catch (const InputError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message(R"({"type":"polytope"})").find("'type'") != std::string::npos);
  CHECK(message(R"({"type":"nef_partition","dim":2})").find("'parts'") != std::string::npos);
  CHECK(message(R"({"type":"nef_partition","dim":2,"parts":[[[0,0,1]]],"base_points":[[0,0]]})").find("length 2") !=
        std::string::npos);
  CHECK(message(R"({"type":"nef_partition","dim":2,"parts":[[[0,"a"]]],"base_points":[[0,0]]})").find("integer") !=
        std::string::npos);
  CHECK(message(R"({"type":"nef_partition","dim":2,"parts":[[[0,0]]],"base_points":[]})").find("one point per part") !=
        std::string::npos);
}

TEST_CASE("cli polytope info") {
  auto r = run({"polytope", "info", data + "/square.txt"});
  CHECK(r.code == 0);
  CHECK(r.out.find("reflexive: yes") != std::string::npos);
  CHECK(r.out.find("dual: (-1,0) (0,-1) (0,1) (1,0)") != std::string::npos);
  auto rec = run({"--format", "record", "polytope", "info", data + "/square.txt"});
  auto j = Json::parse(rec.out);
  CHECK(j["reflexive"] == true);
  CHECK(polytope_from_json(j["dual"]) == LatticePolytope::hull({v({1, 0}), v({0, 1}), v({-1, 0}), v({0, -1})}));
}

TEST_CASE("cli exit codes") {
  CHECK(run({"polytope", "info", temp_file("empty.txt", "")}).code == 2);
  CHECK(run({"polytope", "info", temp_file("empty.txt", "")}).err.find("expected header") != std::string::npos);
  CHECK(run({"polytope", "info", data + "/missing.txt"}).code == 2);
  CHECK(run({"polytope", "info", "--bogus", data + "/square.txt"}).code == 2);
  CHECK(run({"--format", "xml", "polytope", "info", data + "/square.txt"}).code == 2);
  CHECK(run({"nefpart", "special", data + "/square.txt"}).code == 2);
  CHECK(run({"mirror", "report", data + "/small.rec"}).code == 0);

  std::string broken = R"({"type":"nef_partition","dim":2,"parts":[[[0,0],[1,1],[-1,1]],[[0,0],[0,-1]]],)"
                       R"("base_points":[[0,0],[0,0]],"alt_base_points":[[0,1],[0,0]]})";
  auto r = run({"mirror", "report", temp_file("broken.rec", broken)});
  CHECK(r.code == 2);
  CHECK(r.err.find("sum") != std::string::npos);
}

TEST_CASE("cli mirror report") {
  auto r = run({"mirror", "report", data + "/small.rec"});
  CHECK(r.code == 0);
  CHECK(r.out.find("double mirror report: PASS") != std::string::npos);
  auto rec = run({"--format", "record", "mirror", "report", data + "/small.rec"});
  CHECK(rec.code == 0);
  auto back = report_from_json(Json::parse(rec.out));
  CHECK(back.passed);
  CHECK(back.side.table.points.size() == 8);
  CHECK(to_json(back).dump() + "\n" == rec.out);
  // byte identical when repeated
  CHECK(run({"--format", "record", "mirror", "report", data + "/small.rec"}).out == rec.out);
}

TEST_CASE("cli subcommands") {
  auto c = run({"cayley", data + "/small.rec"});
  CHECK(c.code == 0);
  CHECK(c.out.find("splittings of the dual cone: 2") != std::string::npos);
  auto d = run({"nefpart", "dual", data + "/small.rec"});
  CHECK(d.out.find("sum: Conv{(-2,1),(0,-1),(2,1)}") != std::string::npos);
  auto val = run({"nefpart", "validate", data + "/small.rec"});
  CHECK(val.code == 0);
  auto sp = run({"nefpart", "special", "--length", "2", data + "/square.txt"});
  CHECK(sp.out.find("special simplices: 2") != std::string::npos);
  auto cx = run({"cox", data + "/delta1.txt"});
  CHECK(cx.out.find("1 2 1") != std::string::npos);

  auto pts = temp_file("line.txt", "1 3\n0\n1\n2\n");
  auto t1 = run({"--seed", "7", "triangulate", pts});
  auto t2 = run({"--seed", "7", "triangulate", pts});
  CHECK(t1.code == 0);
  CHECK(t1.out == t2.out);
  auto w = temp_file("line.rec", R"({"type":"triangulation","dim":1,"points":[[0],[1],[2]],"weights":[0,-5,0]})");
  auto t3 = run({"triangulate", w});
  CHECK(t3.out.find("{[0,1] [1,2]}") != std::string::npos);
  CHECK(t3.out.find("regular: yes") != std::string::npos);
}

TEST_CASE("scan keeps input order under parallel workers") {
  std::string corpus = read_file(data + "/corpus.jsonl");
  std::string many;
  for (int i = 0; i < 20; ++i) many += corpus;
  many += "not json\n";
  std::istringstream a(many), b(many);
  std::ostringstream oa, ob;
  int ca = cli::scan(a, oa, 1, true);
  int cb = cli::scan(b, ob, 4, true);
  CHECK(oa.str() == ob.str());
  CHECK(ca == 2);
  CHECK(cb == 2);
  std::istringstream c(corpus);
  std::ostringstream oc;
  CHECK(cli::scan(c, oc, 2, true) == 0);
  auto first = Json::parse(oc.str().substr(0, oc.str().find('\n')));
  CHECK(first["name"] == "small");
  CHECK(first["splittings"] == 2);
}
