#include <iostream>
#include <sstream>
#include <utility>

#include <CLI11.hpp>

#include "toric/errors.hpp"
#include "toric_cli/commands.hpp"

namespace {

template <class T>
std::vector<T> parse_list(const std::string& s, const char* what) {
  std::vector<T> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      const long v = std::stol(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(static_cast<T>(v));
    } catch (const std::exception&) {
      throw toric::InputError("InvalidArgument", std::string("bad ") + what + " list '" + s + "'");
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Counts Campana and A1-curves on split toric varieties over finite fields"};
  app.require_subcommand(1);
  std::string fan, weights, boundary, face, qs = "2", bound = "4", format = "json", corpus;
  int euler_degree = 8, workers = 1;
  std::uint64_t ceiling = 100'000'000;

  auto add_common = [&](CLI::App* sub, bool needs_fan) {
    auto* o = sub->add_option("--fan", fan, "fan specification file");
    if (needs_fan) o->required();
    sub->add_option("--weights", weights, "Campana weights, comma separated");
    sub->add_option("--boundary", boundary, "boundary ray indices, comma separated");
    sub->add_option("--face", face, "face A inside the boundary, comma separated");
    sub->add_option("--q", qs, "field sizes, comma separated");
    sub->add_option("--bound", bound, "degree bound B (rational)");
    sub->add_option("--euler-degree", euler_degree, "Euler product truncation E");
    sub->add_option("--workers", workers, "worker threads");
    sub->add_option("--ceiling", ceiling, "search space ceiling (tuples)");
    sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  };
  const std::pair<const char*, const char*> subs[] = {
      {"analyze", "fan, curve lattice, alpha constants, pair structure"},
      {"count", "brute-force counts of U_r against Euler coefficients"},
      {"zeta", "Euler product coefficients of the height zeta function"},
      {"constants", "tau factors and leading constants with tail bounds"}};
  for (const auto& [name, help] : subs) add_common(app.add_subcommand(name, help), true);
  auto* verify = app.add_subcommand("verify", "run the acceptance suite on the bundled corpus");
  add_common(verify, false);
  verify->add_option("--corpus", corpus, "corpus directory");

  CLI11_PARSE(app, argc, argv);

  toric::cli::JobSpec job;
  job.command = app.get_subcommands().front()->get_name();
  job.fan_path = fan;
  job.bound = bound;
  job.euler_degree = euler_degree;
  job.format = format;
  job.workers = workers;
  job.ceiling = ceiling;
  job.corpus = corpus;
  try {
    job.q = parse_list<long>(qs, "q");
    if (!weights.empty()) job.weights = parse_list<long>(weights, "weights");
    if (!boundary.empty()) job.boundary = parse_list<int>(boundary, "boundary");
    if (!face.empty()) job.face = parse_list<int>(face, "face");
    const auto result = toric::cli::run_command(job);
    std::cout << toric::cli::render(result.report, job.format);
    return result.exit_code;
  } catch (const toric::Error& e) {
    toric::cli::Json err = {{"error", {{"code", e.code()}, {"message", e.what()}}}};
    std::cout << toric::cli::render_json(err);
    std::cerr << "toric-count: " << e.what() << "\n";
    return toric::exit_code(e.kind());
  }
}
