#include "toric/divisors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

#include "toric/errors.hpp"

namespace toric {

namespace {

std::string set_string(RaySet s) {
  std::ostringstream os;
  os << '{';
  auto m = members(s);
  for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
  os << '}';
  return os.str();
}

}  // namespace

std::string CountingConstraint::tag() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::None: return "plain";
    case Kind::Campana:
      os << "campana(";
      for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
      os << ')';
      return os.str();
    case Kind::A1: return "a1" + set_string(boundary);
    case Kind::A1AtFace: return "a1" + set_string(boundary) + "@" + set_string(face);
  }
  return "?";
}

bool satisfies_support_condition(const FieldSpec& F, const DivisorTuple& w, const Fan& f) {
  std::map<Poly, RaySet> at;
  RaySet inf = 0;
  for (std::size_t i = 0; i < w.w.size(); ++i) {
    const auto& d = w.w[i];
    if (d.mult_at_infinity() > 0) inf |= RaySet{1} << i;
    if (degree(d.finite) >= 1)
      for (const auto& [g, mult] : factor(F, d.finite)) at[g] |= RaySet{1} << i;
  }
  if (!f.is_cone_rayset(inf)) return false;
  return std::all_of(at.begin(), at.end(), [&](const auto& kv) { return f.is_cone_rayset(kv.second); });
}

bool satisfies_constraint(const FieldSpec& F, const DivisorTuple& w, const CountingConstraint& k) {
  for (std::size_t i = 0; i < w.w.size(); ++i) {
    const auto& d = w.w[i];
    const int ii = static_cast<int>(i);
    if ((k.forced_zero() >> i) & 1 && d.degree != 0) return false;
    if (k.forces_infinity(ii) && degree(d.finite) != 0) return false;
    if (k.kind == CountingConstraint::Kind::Campana) {
      const long lo = k.lower(ii);
      if (d.mult_at_infinity() > 0 && d.mult_at_infinity() < lo) return false;
      if (degree(d.finite) >= 1)
        for (const auto& [g, mult] : factor(F, d.finite))
          if (mult < lo) return false;
    }
  }
  return true;
}

DivisorCounter::DivisorCounter(Fan fan, long q) : fan_(std::move(fan)), F_(FieldSpec::make(q)) {
  require_valid(fan_);
  if (fan_.num_rays() <= 16) {
    cone_table_.assign(std::size_t{1} << fan_.num_rays(), false);
    for (RaySet c : fan_.cones()) cone_table_[c] = true;
  }
}

const FactorTable& DivisorCounter::table(int degree, std::uint64_t ceiling) {
  if (!table_ || table_->max_degree() < degree)
    table_ = std::make_unique<FactorTable>(F_, std::max(degree, 1), std::max<std::uint64_t>(ceiling, 1u << 16));
  return *table_;
}

namespace {

// Place id 0 stands for infinity (code 0 is the constant polynomial, never a place).
struct Candidates {
  std::vector<std::uint32_t> start;  // size n + 1
  std::vector<std::uint64_t> places;
  std::size_t size() const { return start.size() - 1; }
};

struct Search {
  const std::vector<Candidates>* lists;
  const std::vector<int>* order;
  const Fan* fan;
  const std::vector<bool>* cone_table;

  bool cone(RaySet s) const {
    if (!cone_table->empty()) return (*cone_table)[s];
    return fan->is_cone_rayset(s);
  }

  // state: (place, mask) pairs currently in use
  std::uint64_t descend(std::size_t level, std::vector<std::pair<std::uint64_t, RaySet>>& state) const {
    if (level == order->size()) return 1;
    const int ray = (*order)[level];
    const Candidates& c = (*lists)[level];
    const RaySet bit = RaySet{1} << ray;
    std::uint64_t total = 0;
    for (std::size_t idx = 0; idx < c.size(); ++idx) total += try_candidate(level, idx, bit, c, state);
    return total;
  }

  std::uint64_t try_candidate(std::size_t level, std::size_t idx, RaySet bit, const Candidates& c,
                              std::vector<std::pair<std::uint64_t, RaySet>>& state) const {
    const std::size_t mark = state.size();
    std::vector<std::size_t> touched;
    bool ok = true;
    for (std::uint32_t p = c.start[idx]; p < c.start[idx + 1]; ++p) {
      const std::uint64_t place = c.places[p];
      auto it = std::find_if(state.begin(), state.begin() + mark,
                             [&](const auto& e) { return e.first == place; });
      if (it == state.begin() + mark) {
        state.emplace_back(place, bit);
        continue;
      }
      RaySet nm = it->second | bit;
      if (!cone(nm)) {
        ok = false;
        break;
      }
      it->second = nm;
      touched.push_back(static_cast<std::size_t>(it - state.begin()));
    }
    std::uint64_t n = 0;
    if (ok) n = descend(level + 1, state);
    for (std::size_t t : touched) state[t].second &= ~bit;
    state.resize(mark);
    return n;
  }
};

}  // namespace

std::uint64_t DivisorCounter::count_U(const Profile& r, const CountingConstraint& k, const CountOptions& opts) {
  const int nr = fan_.num_rays();
  if (static_cast<int>(r.size()) != nr) throw InputError("InvalidProfile", "profile length differs from ray count");
  for (long x : r)
    if (x < 0) throw InputError("InvalidProfile", "profile entries must be nonnegative");
  if (k.kind == CountingConstraint::Kind::Campana && static_cast<int>(k.m.size()) != nr)
    throw InputError("InvalidWeights", "weight count differs from ray count");
  for (int i : members(k.forced_zero()))
    if (r[i] != 0) return 0;

  // search order: largest degree outermost, then by index
  std::vector<int> order(nr);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return r[a] > r[b]; });

  const long max_r = r.empty() ? 0 : *std::max_element(r.begin(), r.end());
  const FactorTable& T = table(static_cast<int>(max_r), opts.ceiling);

  std::vector<Candidates> lists;
  long double filtered = 1;
  for (int ray : order) {
    Candidates c;
    c.start.push_back(0);
    const long d = r[ray];
    const std::uint64_t n = k.forces_infinity(ray) ? 1 : monic_offset(F_.q(), static_cast<int>(d) + 1);
    const long lo = k.lower(ray);
    for (std::uint64_t code = 0; code < n; ++code) {
      auto fac = code ? T.factorization(code) : std::vector<std::pair<std::uint64_t, int>>{};
      int deg = 0;
      bool ok = true;
      for (const auto& [p, mult] : fac) {
        deg += mult * T.degree_of(p);
        if (mult < lo) ok = false;
      }
      const long at_inf = d - deg;
      if (at_inf > 0 && at_inf < lo) ok = false;
      if (!ok) continue;
      for (const auto& pm : fac) c.places.push_back(pm.first);
      if (at_inf > 0) c.places.push_back(0);
      c.start.push_back(static_cast<std::uint32_t>(c.places.size()));
    }
    filtered *= static_cast<long double>(c.size());
    lists.push_back(std::move(c));
  }
  if (filtered > static_cast<long double>(opts.ceiling))
    throw ResourceLimit("search space of " + std::to_string(static_cast<double>(filtered)) +
                        " tuples exceeds the ceiling " + std::to_string(opts.ceiling));
  if (filtered == 0) return 0;

  Search s{&lists, &order, &fan_, &cone_table_};
  const std::size_t outer = lists.empty() ? 0 : lists[0].size();
  if (lists.empty()) return 1;
  const int workers = std::max(1, std::min<int>(opts.workers, static_cast<int>(outer)));
  const RaySet bit0 = RaySet{1} << order[0];
  auto run_range = [&](std::size_t lo, std::size_t hi) {
    std::vector<std::pair<std::uint64_t, RaySet>> state;
    std::uint64_t sum = 0;
    for (std::size_t idx = lo; idx < hi; ++idx) sum += s.try_candidate(0, idx, bit0, lists[0], state);
    return sum;
  };
  if (workers == 1) return run_range(0, outer);
  std::vector<std::uint64_t> partial(workers, 0);
  std::vector<std::thread> threads;
  for (int w = 0; w < workers; ++w) {
    const std::size_t lo = outer * w / workers, hi = outer * (w + 1) / workers;
    threads.emplace_back([&, w, lo, hi] { partial[w] = run_range(lo, hi); });
  }
  for (auto& t : threads) t.join();
  return std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
}

BigInt DivisorCounter::moduli_count(const Profile& r, const CountingConstraint& k, const CountOptions& opts) {
  BigInt t = 1;
  for (int i = 0; i < fan_.dim(); ++i) t *= (F_.q() - 1);
  return t * BigInt(count_U(r, k, opts));
}

std::uint64_t count_U(const Fan& f, const Profile& r, const CountingConstraint& k, long q,
                      const CountOptions& opts) {
  DivisorCounter c(f, q);
  return c.count_U(r, k, opts);
}

BigInt moduli_count(const Fan& f, const Profile& r, const CountingConstraint& k, long q,
                    const CountOptions& opts) {
  DivisorCounter c(f, q);
  return c.moduli_count(r, k, opts);
}

NefSubcone counting_cone(const CountingConstraint& k) {
  if (k.kind == CountingConstraint::Kind::A1AtFace) return NefSubcone::face(k.forced_zero());
  return NefSubcone::nef();
}

DegreeFunctional counting_degree(const CountingConstraint& k, int rays) {
  switch (k.kind) {
    case CountingConstraint::Kind::Campana: return campana_degree({k.m});
    case CountingConstraint::Kind::A1:
    case CountingConstraint::Kind::A1AtFace: return log_degree(rays, k.boundary);
    case CountingConstraint::Kind::None: break;
  }
  return anticanonical(rays);
}

std::vector<CountRow> count_table(DivisorCounter& counter, const CountingConstraint& k, const NefSubcone& C,
                                  const DegreeFunctional& phi, const Rational& B, const CountOptions& opts) {
  std::vector<CountRow> rows;
  for (const auto& r : enumerate_classes(counter.fan(), C, phi, B)) {
    CountRow row;
    row.r = r;
    row.tag = k.tag();
    row.q = counter.field().q();
    row.u_count = counter.count_U(r, k, opts);
    BigInt t = 1;
    for (int i = 0; i < counter.fan().dim(); ++i) t *= (row.q - 1);
    row.moduli = t * BigInt(row.u_count);
    rows.push_back(std::move(row));
  }
  return rows;
}

BigInt counting_function(DivisorCounter& counter, const CountingConstraint& k, const NefSubcone& C,
                         const DegreeFunctional& phi, const Rational& B, const CountOptions& opts) {
  BigInt total = 0;
  for (const auto& row : count_table(counter, k, C, phi, B, opts)) total += row.moduli;
  return total;
}

}  // namespace toric
