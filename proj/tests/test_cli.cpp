#include <filesystem>
#include <fstream>
#include <limits>

#include "gtest/gtest.h"
#include "toric/errors.hpp"
#include "toric_cli/acceptance.hpp"
#include "toric_cli/commands.hpp"
#include "toric_cli/fan_spec.hpp"
#include "toric_cli/report.hpp"

namespace toric::cli {
namespace {

const std::string kCorpus = TORIC_CORPUS_DIR;

std::string write_temp(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path.string();
}

TEST(FanSpecParser, MultiLineValues) {
  auto s = parse_fan_spec(
      "# comment\n"
      "schema = 1\n"
      "name = \"P2\"\n"
      "rays = [[1, 0],\n"
      "        [0, 1], [-1, -1]]\n"
      "max_cones = [[0, 1], [1, 2], [0, 2]]\n"
      "weights = [2, 2, 2]\n");
  EXPECT_EQ(s.name, "P2");
  EXPECT_EQ(s.fan.num_rays(), 3);
  ASSERT_TRUE(s.weights.has_value());
  EXPECT_EQ(s.weights->m, (std::vector<long>{2, 2, 2}));
  EXPECT_FALSE(s.boundary.has_value());
}

TEST(FanSpecParser, SyntaxErrorsCarryLocation) {
  try {
    parse_fan_spec("schema = 1\nrays = [[1], [-1]]\nmax_cones = [[0], [1]\n", "bad.fan");
    FAIL() << "expected SpecSyntax";
  } catch (const InputError& e) {
    EXPECT_EQ(e.code(), "SpecSyntax");
    EXPECT_NE(std::string(e.what()).find("bad.fan:3"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_fan_spec("schema = 1\nrays [[1]]\n"), InputError);
  EXPECT_THROW(parse_fan_spec("schema = 7\nrays = [[1], [-1]]\nmax_cones = [[0], [1]]\n"), InputError);
}

TEST(FanSpecParser, MissingFile) {
  try {
    load_fan_spec("/nonexistent/x.fan");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_EQ(e.code(), "MissingFile");
  }
}

TEST(FanSpecParser, BundledCorpusLoads) {
  for (const char* f : {"p1.fan", "p2.fan", "p1xp1.fan", "f1.fan"}) {
    auto s = load_fan_spec(kCorpus + "/" + f);
    EXPECT_NO_THROW(require_valid_spec(s)) << f;
  }
}

TEST(Commands, MalformedConeIndexIsInputError) {
  JobSpec job;
  job.command = "analyze";
  job.fan_path = write_temp("toric_bad_cone.fan", "schema = 1\nrays = [[1], [-1]]\nmax_cones = [[0], [4]]\n");
  try {
    run_command(job);
    FAIL() << "expected InvalidFan";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "InvalidFan");
    EXPECT_EQ(exit_code(e.kind()), 2);
    EXPECT_NE(std::string(e.what()).find("malformed cone index"), std::string::npos);
  }
}

TEST(Commands, FaceOutsideBoundaryRejected) {
  JobSpec job;
  job.command = "count";
  job.fan_path = kCorpus + "/p2.fan";
  job.face = std::vector<int>{0};
  EXPECT_THROW(run_command(job), InputError);
}

TEST(Commands, ModeRule) {
  auto spec = load_fan_spec(kCorpus + "/p2.fan");
  JobSpec job;
  job.fan_path = kCorpus + "/p2.fan";
  EXPECT_EQ(resolve_constraint(job, spec).kind, CountingConstraint::Kind::Campana);
  job.boundary = std::vector<int>{2};
  EXPECT_EQ(resolve_constraint(job, spec).kind, CountingConstraint::Kind::A1);
  job.face = std::vector<int>{2};
  EXPECT_EQ(resolve_constraint(job, spec).kind, CountingConstraint::Kind::A1AtFace);
  auto plain = parse_fan_spec("schema = 1\nrays = [[1], [-1]]\nmax_cones = [[0], [1]]\n");
  JobSpec j2;
  EXPECT_EQ(resolve_constraint(j2, plain).kind, CountingConstraint::Kind::None);
}

TEST(Commands, CountAgreesAndIsDeterministic) {
  JobSpec job;
  job.command = "count";
  job.fan_path = kCorpus + "/p1.fan";
  job.bound = "4";
  job.q = {2, 3};
  auto a = run_command(job);
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_TRUE(a.report["results"]["all_agree"].get<bool>());
  EXPECT_EQ(render(a.report, "json"), render(run_command(job).report, "json"));
  job.workers = 3;
  EXPECT_EQ(a.report["results"], run_command(job).report["results"]);
}

TEST(Commands, CsvHasHeaderAndRows) {
  JobSpec job;
  job.command = "count";
  job.fan_path = kCorpus + "/p1.fan";
  job.bound = "2";
  auto r = run_command(job);
  auto csv = render(r.report, "csv");
  EXPECT_EQ(csv.rfind("agree,constraint,degree,moduli", 0), 0u) << csv;
  EXPECT_NE(csv.find("2;2,6"), std::string::npos);
}

TEST(Commands, ConstantsReportTailBound) {
  JobSpec job;
  job.command = "constants";
  job.fan_path = kCorpus + "/p1xp1.fan";
  auto r = run_command(job);
  std::string text = render(r.report, "json");
  EXPECT_NE(text.find("tail_bound"), std::string::npos);
  EXPECT_NE(text.find("provenance"), std::string::npos);
}

TEST(Report, NumbersAndHash) {
  EXPECT_EQ(number(std::numeric_limits<double>::infinity()), Json("inf"));
  EXPECT_EQ(rational(Rational(3, 4)), Json("3/4"));
  Json a{{"x", 1}}, b{{"x", 2}};
  EXPECT_EQ(content_hash(a), content_hash(Json{{"x", 1}}));
  EXPECT_NE(content_hash(a), content_hash(b));
}

TEST(Acceptance, StatusLineFormat) {
  CriterionResult r;
  r.id = 3;
  r.title = "title";
  r.status = Status::Pass;
  r.detail = "ok";
  EXPECT_EQ(format_line(r), "[PASS] #3 title: ok");
  std::vector<CriterionResult> all{r};
  EXPECT_EQ(suite_exit_code(all), 0);
  all[0].status = Status::ResourceGuard;
  EXPECT_EQ(suite_exit_code(all), 3);
}

}  // namespace
}  // namespace toric::cli
