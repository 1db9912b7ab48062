#include "logmod/commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>

#include "logmod/error.hpp"
#include "logmod/hilbert.hpp"
#include "logmod/hom.hpp"
#include "logmod/ideal.hpp"
#include "logmod/linalg.hpp"
#include "logmod/oracle.hpp"
#include "logmod/valuative.hpp"
#include "logmod/zr.hpp"

namespace logmod::io {

namespace {

// Anything thrown while turning a document into library objects is a
// validation failure, whatever the underlying code.
template <class F>
auto validated(F&& f) -> decltype(f())
{
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ValidationError || e.code() == ErrorCode::ParseError)
      throw;
    fail(ErrorCode::ValidationError, std::string(error_name(e.code())) + ": " + e.what());
  }
}

void check_rank(std::size_t n, const std::string& where)
{
  if (n > max_rank())
    fail(ErrorCode::ValidationError, where + ": ambient rank " + std::to_string(n) +
                                         " exceeds LOGMODKIT_MAX_RANK=" + std::to_string(max_rank()));
}

void check_rows(const Matrix& m, std::size_t n, const std::string& where)
{
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i].size() != n)
      fail(ErrorCode::ValidationError, where + "/" + std::to_string(i) + ": expected " + std::to_string(n) +
                                           " entries, got " + std::to_string(m[i].size()));
}

LatticeMonoid build_monoid(const MonoidDoc& d, const std::string& where)
{
  check_rank(d.ambient_rank, where);
  check_rows(d.generators, d.ambient_rank, where + "/generators");
  return validated([&] { return LatticeMonoid(d.ambient_rank, d.generators); });
}

Cone build_cone(const ConeSpec& c, std::size_t n, const std::string& where)
{
  if (c.rays) {
    check_rows(*c.rays, n, where + "/rays");
    return Cone::from_generators(n, *c.rays);
  }
  Matrix ineq = c.inequalities.value_or(Matrix{});
  Matrix eq = c.equations.value_or(Matrix{});
  check_rows(ineq, n, where + "/inequalities");
  check_rows(eq, n, where + "/equations");
  return Cone::from_inequalities(n, ineq, eq);
}

MonoidIdeal build_ideal(const LatticeMonoid& base, const Matrix& gens, const std::string& where)
{
  check_rows(gens, base.ambient_rank(), where);
  return validated([&] { return MonoidIdeal(base, gens); });
}

Json monoid_json(const LatticeMonoid& m)
{
  Json j = monoid_to_json(MonoidDoc{m.ambient_rank(), m.generators()});
  j["type"] = "monoid";
  return j;
}

Json cone_json(const Cone& c)
{
  return Json{{"rays", matrix_to_json(c.rays())}, {"lineality", matrix_to_json(c.lineality())}};
}

Json chart_json(const BlowupChart& c)
{
  return Json{{"generator", vec_to_json(c.generator)},
              {"monoid", monoid_json(c.monoid)},
              {"cone", cone_json(c.cone)},
              {"redundant", c.redundant}};
}

[[noreturn]] void mismatch(const std::string& what)
{
  fail(ErrorCode::OracleMismatch, what);
}

std::size_t chain_oracle(const std::vector<Cone>& faces)
{
  std::vector<std::vector<bool>> below(faces.size(), std::vector<bool>(faces.size(), false));
  for (std::size_t i = 0; i < faces.size(); ++i)
    for (std::size_t j = 0; j < faces.size(); ++j)
      below[i][j] = i != j && faces[i].contains(faces[j]) && !(faces[i] == faces[j]);
  return oracle::longest_chain(faces.size(), below) - 1;
}

// Samples lattice points of `support` and reports one missed by every cone.
std::optional<bool> support_oracle(const Cone& support, const std::vector<Cone>& cones)
{
  std::vector<Matrix> gens;
  for (const auto& c : cones)
    gens.push_back(c.generators());
  auto r = oracle::uncovered_point(support.generators(), gens, support.ambient_rank(), 4);
  if (!r)
    return std::nullopt;
  return !r->has_value();
}

struct Context {
  const CommandOptions& opts;
  CommandResult& result;

  void agree() { result.oracle = OracleStatus::Agree; }
  bool checking() const { return opts.oracle; }
};

using Handler = std::function<Json(const Document&, Context&)>;

template <class T>
const T& expect(const Document& d, const std::string& command)
{
  if (const T* p = std::get_if<T>(&d))
    return *p;
  fail(ErrorCode::ValidationError, command + " does not accept a " + type_name(d) + " document");
}

Json cmd_saturate(const Document& d, Context& ctx)
{
  auto m = build_monoid(expect<MonoidDoc>(d, "saturate"), "/");
  auto s = saturate(m);
  if (ctx.checking() && m.is_sharp()) {
    auto slow = oracle::hilbert_basis(m.generators(), m.gp_lattice().basis());
    if (slow) {
      if (*slow != s.generators())
        mismatch("saturate: Hilbert basis differs from box enumeration");
      ctx.agree();
    }
  }
  return monoid_json(s);
}

Json cmd_hilbert(const Document& d, Context& ctx)
{
  const auto& c = expect<ConeDoc>(d, "hilbert");
  check_rank(c.ambient_rank, "/");
  check_rows(c.rays, c.ambient_rank, "/rays");
  Matrix lattice = c.lattice ? *c.lattice : Lattice::full(c.ambient_rank).basis();
  check_rows(lattice, c.ambient_rank, "/lattice");
  validated([&] {
    if (linalg::rank(lattice, c.ambient_rank) != lattice.size())
      fail(ErrorCode::InvalidInput, "lattice basis is not linearly independent");
    return 0;
  });
  Matrix hb = hilbert_basis(c.rays, lattice);
  if (ctx.checking()) {
    auto slow = oracle::hilbert_basis(c.rays, lattice);
    if (slow) {
      if (*slow != hb)
        mismatch("hilbert: basis differs from box enumeration");
      ctx.agree();
    }
  }
  return Json{{"hilbert_basis", matrix_to_json(hb)}};
}

Json cmd_sharpen(const Document& d, Context& ctx)
{
  auto m = build_monoid(expect<MonoidDoc>(d, "sharpen"), "/");
  auto s = sharpen(m);
  if (ctx.checking()) {
    auto lin = oracle::lineality_generators(m.generators(), m.ambient_rank());
    if (lin) {
      if (!(Lattice(m.ambient_rank(), *lin) == s.units))
        mismatch("sharpen: unit lattice differs from the lineality generators");
      ctx.agree();
    }
  }
  return Json{{"units", matrix_to_json(s.units.basis())}, {"sharp", monoid_json(s.sharp)}};
}

Json cmd_localize(const Document& d, Context&)
{
  const auto& doc = expect<LocalizationDoc>(d, "localize");
  auto m = build_monoid(doc.monoid, "/monoid");
  check_rows(doc.face, m.ambient_rank(), "/face");
  auto face = validated([&] { return LatticeMonoid(m.ambient_rank(), doc.face); });
  return monoid_json(localize_at_face(m, face));
}

Json cmd_intersect(const Document& d, Context& ctx)
{
  const auto& doc = expect<IntersectionDoc>(d, "intersect");
  auto m = build_monoid(doc.monoid, "/monoid");
  check_rows(doc.subgroup, m.ambient_rank(), "/subgroup");
  Lattice sub = validated([&] { return Lattice(m.ambient_rank(), doc.subgroup); });
  auto r = intersect_with_subgroup(m, sub);
  if (ctx.checking() && m.is_sharp()) {
    long bound = 2;
    for (const auto& g : r.generators()) {
      auto c = sub.coordinates(g);
      for (const auto& x : *c)
        bound = std::max(bound, 2 * std::abs(static_cast<long>(x)) + 2);
    }
    auto slow = oracle::box_hilbert_basis(m.generators(), sub.basis(), bound);
    if (slow) {
      if (*slow != r.generators())
        mismatch("intersect: generators differ from box enumeration");
      ctx.agree();
    }
  }
  return monoid_json(r);
}

Json cmd_classify(const Document& d, Context& ctx)
{
  const auto& doc = expect<HomDoc>(d, "classify");
  auto p = build_monoid(doc.source, "/source");
  auto q = build_monoid(doc.target, "/target");
  auto h = validated([&] { return MonoidHom(p, q, doc.matrix); });
  auto c = classify_hom(h);
  if (ctx.checking() && p.is_sharp() && q.is_sharp()) {
    auto slow = oracle::exact_in_box(p.generators(), q.generators(), h.matrix(), p.gp_lattice().basis(), 4);
    if (slow) {
      if (*slow != c.exact)
        mismatch("classify: exactness differs from box search");
      ctx.agree();
    }
  }
  return Json{{"injective", c.injective}, {"gp_injective", c.gp_injective}, {"gp_surjective", c.gp_surjective},
              {"gp_iso", c.gp_iso},       {"local", c.local},               {"exact", c.exact},
              {"kummer", c.kummer},       {"sharp_iso", c.sharp_iso}};
}

Json cmd_blowup(const Document& d, Context& ctx)
{
  const auto& doc = expect<IdealDoc>(d, "blowup");
  auto base = build_monoid(doc.base, "/base");
  auto ideal = build_ideal(base, doc.generators, "/generators");
  auto charts = blowup_charts(ideal, ctx.opts.parallel);
  Cone support = dual_cone(base);
  std::vector<Cone> pieces;
  Json list = Json::array();
  for (const auto& c : charts) {
    list.push_back(chart_json(c));
    if (!c.redundant)
      pieces.push_back(c.cone);
  }
  bool covered = check_support(support, pieces).covered;
  if (ctx.checking() && base.is_sharp()) {
    bool decided = true;
    for (const auto& c : charts) {
      if (!c.monoid.is_sharp())
        continue;
      Matrix gens = base.generators();
      for (const auto& b : ideal.generators())
        gens.push_back(b - c.generator);
      auto slow = oracle::hilbert_basis(gens, base.gp_lattice().basis());
      if (!slow) {
        decided = false;
        continue;
      }
      if (*slow != c.monoid.generators())
        mismatch("blowup: chart at " + to_string(c.generator) + " differs from box enumeration");
    }
    auto cover = support_oracle(support, pieces);
    if (cover && *cover != covered)
      mismatch("blowup: support coverage differs from point sampling");
    if (decided && cover)
      ctx.agree();
  }
  if (ctx.opts.want_dot)
    ctx.result.dot = fan_to_dot(RationalFan(support, maximal_cones(pieces)));
  return Json{{"charts", list}, {"support", cone_json(support)}, {"covered", covered}};
}

Json cmd_factorize(const Document& d, Context& ctx)
{
  const auto& doc = expect<ExtensionDoc>(d, "factorize");
  auto q = build_monoid(doc.q, "/q");
  auto p = build_monoid(doc.p, "/p");
  auto f = factor_gp_iso_extension(q, p);
  if (ctx.checking() && p.is_sharp()) {
    Matrix gens = q.generators();
    for (const auto& b : f.ideal.generators())
      gens.push_back(b - f.s);
    auto slow = oracle::hilbert_basis(gens, q.gp_lattice().basis());
    if (slow) {
      if (*slow != p.generators())
        mismatch("factorize: chart at s does not enumerate to P");
      ctx.agree();
    }
  }
  return Json{{"s", vec_to_json(f.s)}, {"ideal", matrix_to_json(f.ideal.generators())}};
}

Json cmd_lift(const Document& d, Context& ctx)
{
  const auto& doc = expect<LiftDoc>(d, "lift");
  auto base = build_monoid(doc.base, "/base");
  auto ideal = build_ideal(base, doc.generators, "/generators");
  if (doc.valuation.size() != base.ambient_rank())
    fail(ErrorCode::ValidationError, "/valuation: expected " + std::to_string(base.ambient_rank()) + " entries");
  auto v = MonomialValuation::of(doc.valuation);
  auto chart = lift_valuative_through_blowup(ideal, v);
  if (ctx.checking()) {
    // The chosen generator minimizes v, lexicographically first among ties.
    const Vec* best = nullptr;
    for (const auto& g : ideal.generators())
      if (!best || dot(v.functional, g) < dot(v.functional, *best))
        best = &g;
    if (!best || *best != chart.generator)
      mismatch("lift: chosen generator is not the first v-minimal one");
    for (const auto& g : chart.monoid.generators())
      if (dot(v.functional, g) < 0)
        mismatch("lift: valuation negative on the chart monoid");
    ctx.agree();
  }
  return chart_json(chart);
}

Json cmd_dualrays(const Document& d, Context& ctx)
{
  auto m = build_monoid(expect<MonoidDoc>(d, "dualrays"), "/");
  Matrix rays = dual_cone_rays(m);
  if (ctx.checking() && m.gp_lattice().rank() == m.ambient_rank()) {
    long bound = 3;
    for (const auto& r : rays)
      for (const auto& x : r)
        bound = std::max(bound, std::abs(static_cast<long>(x)) + 1);
    auto slow = oracle::dual_rays(m.generators(), m.ambient_rank(), bound);
    if (slow) {
      if (*slow != rays)
        mismatch("dualrays: rays differ from box enumeration");
      ctx.agree();
    }
  }
  return Json{{"dual_rays", matrix_to_json(rays)}};
}

Json cmd_valextend(const Document& d, Context&)
{
  auto m = build_monoid(expect<MonoidDoc>(d, "valextend"), "/");
  auto v = valuative_extension(m);
  return Json{{"valuation", vec_to_json(v.valuation.functional)},
              {"primitive", v.valuation.primitive},
              {"trivial", v.trivial},
              {"monoid", monoid_json(v.monoid)},
              {"units", matrix_to_json(v.monoid.unit_lattice().basis())}};
}

std::optional<std::size_t> oracle_sharp_rank(const LatticeMonoid& m)
{
  auto lin = oracle::lineality_generators(m.generators(), m.ambient_rank());
  if (!lin)
    return std::nullopt;
  const std::size_t n = m.ambient_rank();
  return linalg::rank(m.generators(), n) - linalg::rank(*lin, n);
}

Json cmd_qccheck(const Document& d, Context& ctx)
{
  auto m = build_monoid(expect<MonoidDoc>(d, "qccheck"), "/");
  bool qc = qc_finite_subcover_check(m);
  if (ctx.checking()) {
    if (auto r = oracle_sharp_rank(m)) {
      if ((*r <= 1) != qc)
        mismatch("qccheck: verdict differs from the sharp rank of the generators");
      ctx.agree();
    }
  }
  return Json{{"quasi_compact_shadow", qc}};
}

// On `basis`, v is a nonnegative multiple of f.
bool proportional_on(const Vec& v, const Vec& f, const Matrix& basis)
{
  Vec a, b;
  for (const auto& x : basis) {
    a.push_back(dot(v, x));
    b.push_back(dot(f, x));
  }
  if (is_zero(a))
    return true;
  if (is_zero(b))
    return false;
  bool positive = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i])
        return false;
    if (a[i] * b[i] < 0)
      return false;
    positive = positive || a[i] * b[i] > 0;
  }
  return positive;
}

Json cmd_witness(const Document& d, Context& ctx)
{
  const auto& doc = expect<FamilyDoc>(d, "witness");
  auto p = build_monoid(doc.monoid, "/monoid");
  check_rows(doc.functionals, p.ambient_rank(), "/functionals");
  std::vector<ValuativeSubmonoid> family;
  validated([&] {
    for (const auto& f : doc.functionals)
      family.push_back(half_space_submonoid(p, f));
    return 0;
  });
  auto w = witness_uncovered_valuation(p, family);
  if (ctx.checking()) {
    if (w.witness) {
      const Vec& v = w.witness->functional;
      for (const auto& g : p.generators())
        if (dot(v, g) < 0)
          mismatch("witness: functional negative on a generator");
      for (const auto& f : doc.functionals)
        if (proportional_on(v, f, p.gp_lattice().basis()))
          mismatch("witness: functional is a multiple of a family member");
      ctx.agree();
    } else if (auto r = oracle_sharp_rank(p)) {
      if (*r > 1)
        mismatch("witness: claims a cover of a monoid of sharp rank above 1");
      ctx.agree();
    }
  }
  Json out{{"covered", w.covered}};
  if (w.witness)
    out["witness"] = vec_to_json(w.witness->functional);
  return out;
}

Json cmd_covercheck(const Document& d, Context& ctx)
{
  const auto& doc = expect<CoverDoc>(d, "covercheck");
  const std::size_t n = doc.ambient_rank;
  check_rank(n, "/");
  check_rows(doc.sigma_rays, n, "/sigma_rays");
  std::vector<Cone> subs;
  for (std::size_t i = 0; i < doc.subcones.size(); ++i)
    subs.push_back(build_cone(doc.subcones[i], n, "/subcones/" + std::to_string(i)));
  auto r = covers_monomial_points(n, doc.sigma_rays, subs);
  if (ctx.checking()) {
    auto sigma = oracle::narrow(doc.sigma_rays);
    if (r.witness && sigma) {
      auto x = oracle::narrow(*r.witness);
      oracle::ConeMembership s(n, *sigma);
      if (!x || !s.contains(*x))
        mismatch("covercheck: witness outside sigma");
      for (const auto& c : subs) {
        auto g = oracle::narrow(c.generators());
        if (g && oracle::ConeMembership(n, *g).contains(*x))
          mismatch("covercheck: witness lies in a subcone");
      }
      ctx.agree();
    } else if (!r.witness) {
      auto cover = support_oracle(Cone::from_generators(n, doc.sigma_rays), subs);
      if (cover) {
        if (!*cover)
          mismatch("covercheck: sampling found an uncovered point");
        ctx.agree();
      }
    }
  }
  Json out{{"covered", r.covered}};
  if (r.witness)
    out["witness"] = vec_to_json(*r.witness);
  return out;
}

SubdivisionTower build_tower(const TowerDoc& doc, bool parallel)
{
  auto base = build_monoid(doc.base, "/base");
  SubdivisionTower tower(base);
  for (std::size_t i = 0; i < doc.stages.size(); ++i) {
    const auto& chart = doc.stages[i].chart;
    if (chart && *chart >= tower.current().cones().size())
      fail(ErrorCode::ValidationError, "/stages/" + std::to_string(i) + "/chart: no cone with index " +
                                           std::to_string(*chart));
    // A chart-selected stage blows up an ideal of that chart's monoid.
    auto ideal = build_ideal(chart ? tower.chart_monoid(*chart) : base, doc.stages[i].ideal,
                             "/stages/" + std::to_string(i) + "/ideal");
    tower = subdivision_stage(tower, ideal, doc.stages[i].chart, parallel);
  }
  return tower;
}

void check_fan_oracle(const RationalFan& fan, std::size_t krull, Context& ctx, bool& decided)
{
  auto faces = fan.faces();
  if (faces.size() > 40) {
    decided = false;
    return;
  }
  if (chain_oracle(faces) != krull)
    mismatch("poset dimension differs from exhaustive chain enumeration");
  auto cover = support_oracle(fan.support(), fan.cones());
  if (!cover) {
    decided = false;
    return;
  }
  if (!*cover)
    mismatch("fan cones do not cover the support");
  (void)ctx;
}

Json cmd_zrstage(const Document& d, Context& ctx)
{
  auto tower = build_tower(expect<TowerDoc>(d, "zrstage"), ctx.opts.parallel);
  Json stages = Json::array();
  bool decided = true;
  for (const auto& st : tower.stages()) {
    Json cones = Json::array();
    for (const auto& c : st.fan.cones())
      cones.push_back(cone_json(c));
    std::size_t k = poset_krull_dim(st.fan);
    if (ctx.checking())
      check_fan_oracle(st.fan, k, ctx, decided);
    stages.push_back(Json{{"cones", cones}, {"parent", st.parent}, {"krull_dim", k}});
  }
  if (ctx.checking() && decided)
    ctx.agree();
  if (ctx.opts.want_dot)
    ctx.result.dot = tower_to_dot(tower);
  return Json{{"stages", stages}};
}

Json cmd_posetdim(const Document& d, Context& ctx)
{
  RationalFan fan;
  if (const auto* t = std::get_if<TowerDoc>(&d)) {
    fan = build_tower(*t, ctx.opts.parallel).current();
  } else {
    const auto& f = expect<FanDoc>(d, "posetdim");
    check_rank(f.ambient_rank, "/");
    Cone support = build_cone(f.support, f.ambient_rank, "/support");
    std::vector<Cone> cones;
    for (std::size_t i = 0; i < f.cones.size(); ++i)
      cones.push_back(build_cone(f.cones[i], f.ambient_rank, "/cones/" + std::to_string(i)));
    fan = validated([&] { return RationalFan(support, cones); });
  }
  std::size_t k = poset_krull_dim(fan);
  if (ctx.checking()) {
    bool decided = true;
    check_fan_oracle(fan, k, ctx, decided);
    if (decided)
      ctx.agree();
  }
  if (ctx.opts.want_dot)
    ctx.result.dot = fan_to_dot(fan);
  return Json{{"krull_dim", k}};
}

Json cmd_logdim(const Document& d, Context& ctx)
{
  if (const auto* m = std::get_if<MonoidDoc>(&d)) {
    auto p = build_monoid(*m, "/");
    std::size_t k = log_dim(toric_stratification(p));
    if (ctx.checking()) {
      if (k != linalg::rank(p.generators(), p.ambient_rank()))
        mismatch("logdim: toric log dimension differs from the rank of the monoid");
      ctx.agree();
    }
    return Json{{"log_dim", k}};
  }
  const auto& doc = expect<StratificationDoc>(d, "logdim");
  std::vector<Stratum> strata;
  for (std::size_t i = 0; i < doc.strata.size(); ++i) {
    const auto& s = doc.strata[i];
    strata.push_back(
        Stratum{s.name, s.closure_dim, build_monoid(s.char_monoid, "/strata/" + std::to_string(i) + "/char_monoid")});
  }
  Stratification st = validated([&] { return Stratification(std::move(strata)); });
  return Json{{"log_dim", log_dim(st)}};
}

const std::map<std::string, Handler>& handlers()
{
  static const std::map<std::string, Handler> table{
      {"saturate", cmd_saturate},   {"hilbert", cmd_hilbert},       {"sharpen", cmd_sharpen},
      {"localize", cmd_localize},   {"intersect", cmd_intersect},   {"classify", cmd_classify},
      {"blowup", cmd_blowup},       {"factorize", cmd_factorize},   {"lift", cmd_lift},
      {"dualrays", cmd_dualrays},   {"valextend", cmd_valextend},   {"qccheck", cmd_qccheck},
      {"witness", cmd_witness},     {"covercheck", cmd_covercheck}, {"zrstage", cmd_zrstage},
      {"posetdim", cmd_posetdim},   {"logdim", cmd_logdim},
  };
  return table;
}

int exit_code_for(ErrorCode c)
{
  switch (c) {
  case ErrorCode::ParseError:
  case ErrorCode::ValidationError:
  case ErrorCode::UnknownCommand:
    return 2;
  default:
    return 1;
  }
}

CommandResult error_result(ErrorCode code, const std::string& message)
{
  CommandResult r;
  r.output = Json{{"error", std::string(error_name(code))}, {"message", message}};
  r.exit_code = exit_code_for(code);
  return r;
}

template <class F>
CommandResult guarded(const std::string& name, F&& body)
{
  if (!handlers().count(name))
    return error_result(ErrorCode::UnknownCommand, "unknown command \"" + name + "\"");
  try {
    return body();
  } catch (const Error& e) {
    return error_result(e.code(), e.what());
  } catch (const std::exception& e) {
    return error_result(ErrorCode::InternalError, e.what());
  }
}

} // namespace

const std::vector<std::string>& command_names()
{
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, _] : handlers())
      v.push_back(k);
    return v;
  }();
  return names;
}

std::size_t max_rank()
{
  static const std::size_t value = [] {
    const char* s = std::getenv("LOGMODKIT_MAX_RANK");
    if (!s || !*s)
      return std::size_t{4};
    char* end = nullptr;
    unsigned long v = std::strtoul(s, &end, 10);
    return (*end == '\0' && v > 0) ? static_cast<std::size_t>(v) : std::size_t{4};
  }();
  return value;
}

CommandResult run_command(const std::string& name, const Document& input, const CommandOptions& opts)
{
  return guarded(name, [&] {
    CommandResult r;
    Context ctx{opts, r};
    if (opts.oracle)
      r.oracle = OracleStatus::NotApplicable;
    r.output = handlers().at(name)(input, ctx);
    return r;
  });
}

CommandResult run_command(const std::string& name, std::string_view input, const CommandOptions& opts)
{
  return guarded(name, [&] { return run_command(name, parse_document(input), opts); });
}

std::vector<CommandResult> run_batch(const std::string& name, std::string_view input, const CommandOptions& opts)
{
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= input.size()) {
    std::size_t end = input.find('\n', start);
    if (end == std::string_view::npos)
      end = input.size();
    auto line = input.substr(start, end - start);
    if (line.find_first_not_of(" \t\r") != std::string_view::npos)
      lines.push_back(line);
    start = end + 1;
  }
  CommandOptions inner = opts;
  inner.parallel = false;
  inner.want_dot = false;
  std::vector<CommandResult> out(lines.size());
  const long count = static_cast<long>(lines.size());
  if (opts.parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i)
      out[static_cast<std::size_t>(i)] = run_command(name, lines[static_cast<std::size_t>(i)], inner);
  } else {
    for (long i = 0; i < count; ++i)
      out[static_cast<std::size_t>(i)] = run_command(name, lines[static_cast<std::size_t>(i)], inner);
  }
  return out;
}

} // namespace logmod::io
