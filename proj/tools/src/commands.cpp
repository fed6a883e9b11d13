#include "toric_cli/commands.hpp"

#include <algorithm>

#include "toric/errors.hpp"
#include "toric/pair.hpp"
#include "toric/zeta.hpp"
#include "toric_cli/acceptance.hpp"

namespace toric::cli {

namespace {

Rational parse_bound(const std::string& s) {
  try {
    Rational b(s);
    return b;
  } catch (const std::exception&) {
    throw InputError("InvalidBound", "bound '" + s + "' is not a rational number");
  }
}

Json inputs_json(const JobSpec& job, const FanSpec& spec) {
  Json in = {{"command", job.command},
             {"fan", spec.name},
             {"rays", spec.fan.rays()},
             {"max_cones", spec.fan.max_cones()},
             {"q", job.q},
             {"bound", job.bound},
             {"euler_degree", job.euler_degree},
             {"ceiling", job.ceiling}};
  in["weights"] = spec.weights ? Json(spec.weights->m) : Json(nullptr);
  in["boundary"] = spec.boundary ? ray_set(*spec.boundary) : Json(nullptr);
  in["face"] = job.face ? Json(*job.face) : Json(nullptr);
  return in;
}

Json alpha_json(const AlphaConstants& a) {
  return {{"alpha_vol", rational(a.vol)},
          {"alpha_slice", rational(a.slice)},
          {"index", rational(a.index)},
          {"dim", a.dim},
          {"period", a.period},
          {"window", a.window}};
}

Json envelope(const JobSpec& job, const FanSpec& spec, Json results, const std::vector<std::string>& notes) {
  const Json in = inputs_json(job, spec);
  return {{"command", job.command}, {"inputs", in}, {"results", std::move(results)}, {"provenance", provenance(in, notes)}};
}

Json count_like(const JobSpec& job, bool brute) {
  const FanSpec spec = resolve_spec(job);
  const CountingConstraint k = resolve_constraint(job, spec);
  const Fan& f = spec.fan;
  const Rational B = parse_bound(job.bound);
  const NefSubcone C = counting_cone(k);
  const DegreeFunctional phi = counting_degree(k, f.num_rays());
  const auto classes = enumerate_classes(f, C, phi, B);
  CountOptions opts{job.workers, job.ceiling};

  Json rows = Json::array();
  Json totals = Json::array();
  bool all_agree = true;
  for (long q : job.q) {
    Truncation t = Truncation::box(f.num_rays(), 0);
    for (const auto& r : classes)
      for (int i = 0; i < f.num_rays(); ++i) t.max_exp[i] = std::max<int>(t.max_exp[i], static_cast<int>(r[i]));
    const IntSeries series = euler_coefficients(f, k, q, t);
    DivisorCounter counter(f, q);
    BigInt torus = 1;
    for (int i = 0; i < f.dim(); ++i) torus *= (q - 1);
    BigInt total = 0;
    for (const auto& r : classes) {
      const std::int64_t pred = series.coefficient(r);
      Json row = {{"q", q},
                  {"r", r},
                  {"degree", rational(phi(r))},
                  {"constraint", k.tag()},
                  {"predicted_u", pred},
                  {"predicted_moduli", bigint(torus * pred)}};
      if (brute) {
        const std::uint64_t u = counter.count_U(r, k, opts);
        const bool agree = static_cast<std::int64_t>(u) == pred;
        all_agree = all_agree && agree;
        row["u_count"] = u;
        row["moduli"] = bigint(torus * BigInt(u));
        row["agree"] = agree;
        total += torus * BigInt(u);
      } else {
        row["verified"] = false;
        total += torus * pred;
      }
      rows.push_back(row);
    }
    totals.push_back({{"q", q}, {"bound", rational(B)}, {"N", bigint(total)}, {"verified", brute}});
  }
  Json results = {{"constraint", k.tag()},
                  {"classes", classes.size()},
                  {"totals", totals},
                  {"verified", brute}};
  if (brute) results["all_agree"] = all_agree;
  Json rep = envelope(job, spec, results, {"predicted_u are Euler product coefficients; moduli = (q-1)^n * #U"});
  rep["rows"] = rows;
  return rep;
}

}  // namespace

void validate(const JobSpec& job) {
  static const std::vector<std::string> commands{"analyze", "count", "zeta", "constants", "verify"};
  if (std::find(commands.begin(), commands.end(), job.command) == commands.end())
    throw InputError("InvalidCommand", "unknown command '" + job.command + "'");
  if (job.format != "json" && job.format != "csv") throw InputError("InvalidFormat", "format must be json or csv");
  if (job.workers < 1) throw InputError("InvalidWorkers", "worker count must be >= 1");
  if (job.euler_degree < 0) throw InputError("InvalidTruncation", "euler degree must be >= 0");
  if (job.q.empty()) throw InputError("InvalidField", "at least one q is required");
  for (long q : job.q) FieldSpec::make(q);
  if (parse_bound(job.bound) < 0) throw InputError("InvalidBound", "bound must be >= 0");
  if (job.command != "verify" && job.fan_path.empty()) throw InputError("MissingFan", "--fan is required");
}

FanSpec resolve_spec(const JobSpec& job) {
  FanSpec spec = load_fan_spec(job.fan_path);
  require_valid_spec(spec);
  const int nr = spec.fan.num_rays();
  if (job.weights) {
    if (static_cast<int>(job.weights->size()) != nr)
      throw InputError("InvalidWeights", "--weights needs one entry per ray");
    for (long m : *job.weights)
      if (m < 1) throw InputError("InvalidWeights", "weights must be positive");
    spec.weights = CampanaWeights{*job.weights};
  }
  if (job.boundary) {
    for (int i : *job.boundary)
      if (i < 0 || i >= nr) throw InputError("InvalidBoundary", "boundary index " + std::to_string(i) + " out of range");
    spec.boundary = make_set(*job.boundary);
  }
  if (job.face) {
    if (!spec.boundary) throw InputError("InvalidFace", "--face needs a boundary");
    for (int i : *job.face)
      if (i < 0 || i >= nr) throw InputError("InvalidFace", "face index " + std::to_string(i) + " out of range");
    const RaySet A = make_set(*job.face);
    if ((A & ~*spec.boundary) != 0) throw InputError("InvalidFace", "face must lie inside the boundary");
    if (!spec.fan.is_cone_rayset(A)) throw InputError("InvalidFace", "face rays do not span a cone");
  }
  return spec;
}

CountingConstraint resolve_constraint(const JobSpec& job, const FanSpec& spec) {
  if (job.face) return CountingConstraint::a1_at_face(*spec.boundary, make_set(*job.face));
  if (job.boundary) return CountingConstraint::a1(*spec.boundary);
  if (spec.weights && !spec.weights->trivial()) return CountingConstraint::campana(*spec.weights);
  return CountingConstraint::none();
}

Json cmd_analyze(const JobSpec& job) {
  const FanSpec spec = resolve_spec(job);
  const Fan& f = spec.fan;
  const FanDiagnostics d = validate_fan(f);
  Json res;
  Json prim = Json::array();
  for (RaySet s : f.primitive_collections()) prim.push_back(ray_set(s));
  res["fan"] = {{"name", spec.name},
                {"dim", f.dim()},
                {"num_rays", f.num_rays()},
                {"num_cones", f.cones().size()},
                {"smooth", d.smooth},
                {"complete", d.complete},
                {"primitive_collections", prim}};
  const CurveClassLattice N1 = curve_lattice(f);
  Json basis = Json::array();
  for (const auto& b : N1.basis) {
    Json v = Json::array();
    for (const auto& x : b) v.push_back(bigint(x));
    basis.push_back(v);
  }
  res["curve_lattice"] = {{"rank", N1.rank}, {"basis", basis}};
  res["anticanonical"] = alpha_json(alpha_constant(f, NefSubcone::nef(), anticanonical(f.num_rays())));
  if (spec.weights) {
    const auto chars = character_group(f, *spec.weights);
    res["campana"] = {{"weights", spec.weights->m},
                      {"alpha", alpha_json(alpha_constant(f, NefSubcone::nef(), campana_degree(*spec.weights)))},
                      {"character_group", {{"order", chars.size()}, {"elements", chars}}}};
  }
  if (spec.boundary) {
    const ToricPair p{f, *spec.boundary};
    const A1Evidence ev = is_a1_connected(p);
    Json clemens = Json::array();
    for (const auto& el : clemens_complex(p)) {
      const NefFace nf = face(p, el.A);
      Json e = {{"A", ray_set(el.A)},
                {"clemens_dim", el.clemens_dim()},
                {"obstructed", has_analytic_obstruction(p, el.A)},
                {"face_dimension", nf.dimension},
                {"degenerate", nf.degenerate},
                {"northcott", northcott_check(p, el.A)}};
      e["index"] = nf.index ? rational(*nf.index) : Json(nullptr);
      if (!nf.degenerate) {
        try {
          e["alpha"] = alpha_json(alpha_constant(f, nf.cone, log_degree(f.num_rays(), p.boundary)));
        } catch (const MathError& err) {
          e["alpha"] = {{"error", err.code()}};
        }
      }
      clemens.push_back(e);
    }
    res["pair"] = {{"boundary", ray_set(p.boundary)},
                   {"a1_connected", ev.connected},
                   {"evidence",
                    {{"label", ev.label},
                     {"nonboundary_rank", ev.nonboundary_rank},
                     {"picard_independent", ev.picard_independent},
                     {"criteria_agree", ev.agree}}},
                   {"clemens", clemens}};
  }
  return envelope(job, spec, res, {"alpha_slice = index * alpha_vol; constants use alpha_slice"});
}

Json cmd_count(const JobSpec& job) { return count_like(job, true); }
Json cmd_zeta(const JobSpec& job) { return count_like(job, false); }

Json cmd_constants(const JobSpec& job) {
  const FanSpec spec = resolve_spec(job);
  const CountingConstraint k = resolve_constraint(job, spec);
  Json out = Json::array();
  std::vector<std::string> notes;
  for (long q : job.q) {
    if (k.kind == CountingConstraint::Kind::A1 || k.kind == CountingConstraint::Kind::A1AtFace) {
      const ToricPair p{spec.fan, k.boundary};
      std::vector<RaySet> faces;
      if (k.kind == CountingConstraint::Kind::A1AtFace)
        faces.push_back(k.face);
      else
        for (const auto& el : clemens_complex(p)) faces.push_back(el.A);
      for (RaySet A : faces) {
        const ConstantReport c = leading_constant(p, A, q, job.euler_degree);
        Json e = constant_json(c);
        e["q"] = q;
        e["face"] = ray_set(A);
        out.push_back(e);
        if (notes.empty()) notes.push_back(c.normalization_note);
      }
    } else {
      const CampanaWeights w = spec.weights ? *spec.weights : unit_weights(spec.fan.num_rays());
      const ConstantReport c = leading_constant(spec.fan, w, q, job.euler_degree);
      Json e = constant_json(c);
      e["q"] = q;
      e["weights"] = w.m;
      out.push_back(e);
      if (notes.empty()) notes.push_back(c.normalization_note);
    }
  }
  return envelope(job, spec, {{"constraint", k.tag()}, {"constants", out}}, notes);
}

CommandResult cmd_verify(const JobSpec& job) {
  SuiteOptions opts;
  opts.workers = job.workers;
  opts.ceiling = job.ceiling;
  if (!job.corpus.empty()) opts.corpus_dir = job.corpus;
  const auto results = run_suite(opts);
  Json crit = Json::array();
  for (const auto& r : results)
    crit.push_back({{"id", r.id}, {"title", r.title}, {"status", status_name(r.status)}, {"detail", r.detail}});
  const int code = suite_exit_code(results);
  Json in = {{"command", "verify"}, {"corpus", opts.corpus_dir}, {"ceiling", job.ceiling}};
  Json rep = {{"command", "verify"},
              {"inputs", in},
              {"results", {{"criteria", crit}, {"pass", code == 0}}},
              {"provenance", provenance(in, {})}};
  return {rep, code};
}

CommandResult run_command(const JobSpec& job) {
  validate(job);
  if (job.command == "analyze") return {cmd_analyze(job), 0};
  if (job.command == "count") {
    Json r = cmd_count(job);
    return {r, r["results"]["all_agree"].get<bool>() ? 0 : 1};
  }
  if (job.command == "zeta") return {cmd_zeta(job), 0};
  if (job.command == "constants") return {cmd_constants(job), 0};
  return cmd_verify(job);
}

std::string render(const Json& report, const std::string& format) {
  return format == "csv" ? render_csv(report) : render_json(report);
}

}  // namespace toric::cli
