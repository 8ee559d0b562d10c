#include "terwb/pipeline.hpp"

#include "terwb/cellular.hpp"
#include "terwb/classes.hpp"
#include "terwb/homology.hpp"

#include <chrono>
#include <sstream>

namespace terwb {

namespace {

class Stopwatch {
 public:
  explicit Stopwatch(AnalysisReport& out, bool enabled) : out_(out), enabled_(enabled) {}
  void lap(const std::string& stage) {
    if (!enabled_) return;
    auto now = std::chrono::steady_clock::now();
    out_.timings.emplace_back(stage, std::chrono::duration<double>(now - last_).count());
    last_ = now;
  }

 private:
  AnalysisReport& out_;
  bool enabled_;
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

template <class F>
void run(const Scheme& s, const F& field, const AnalysisOptions& opt, AnalysisReport& out) {
  Stopwatch clock(out, opt.timings);
  auto section = [&out](std::string name, Report rep) { out.sections.push_back({std::move(name), std::move(rep)}); };
  const bool char2 = field.characteristic() == 2;

  auto tw = generate(s, opt.basepoint, field);
  out.dim_t = tw.dim();
  {
    Report rep;
    rep.merge(check_adjacency(s, adjacency_matrices(s, field)));
    rep.merge(check_dual_identities(s, dual_idempotents(s, opt.basepoint, field), adjacency_matrices(s, field)));
    rep.merge(check_closure(tw));
    section("closure", std::move(rep));
  }
  if (opt.all_basepoints) {
    auto bp = basepoint_invariance(s, field);
    out.basepoint_dims = bp.dims;
    Report rep;
    rep.add("dim T(x) independent of x", bp.all_equal(), "dimensions differ across base points");
    section("basepoints", std::move(rep));
  }
  clock.lap("closure");
  if (!is_quasi_thin(s)) {
    out.notice = "scheme is not quasi-thin; analysis stops after the closure dimension";
    return;
  }

  auto c = class_data(s);
  out.r_size = c.r_set.size();
  out.s_size = c.s_set.size();
  out.r = c.r();
  for (const auto& cls : c.classes) out.class_sizes.push_back(cls.size());

  auto b = structured_basis(s, opt.basepoint, field, c);
  auto ver = verify_basis(tw, b, c);
  ver.report.merge(check_basis_invariants(b, dual_idempotents(s, opt.basepoint, field), c));
  out.formula_dim = ver.formula_dim;
  out.basis_verified = ver.report.passed();
  section("basis", ver.report);

  auto mt = multiplication_table(b, s, field);
  mt.report.merge(check_associative(mt.algebra));
  out.mult_table_verified = mt.report.passed();
  section("multiplication-table", mt.report);
  const auto& t = mt.algebra;
  clock.lap("basis");

  auto datum = cell_datum(b, c);
  Report cell;
  cell.merge(check_cell_datum(datum));
  cell.merge(verify_involution(tw, b));
  cell.merge(verify_C3(t, b, datum).report);
  auto chain = build_cell_chain(t, b, datum);
  cell.merge(chain.report);
  out.cell_chain = chain.dims();
  out.cellular_verified = cell.passed();
  section("cellular", std::move(cell));
  clock.lap("cellular");

  // Radical of T and the number of simple modules.
  Subspace<F> radical = t.coordinate_span({});
  std::size_t simples = 0;
  Report rad;
  std::optional<RadicalReport<F>> rr;
  if (char2) {
    rr = radical_char2(t, b, c, s.data().valency);
    rad.merge(rr->report);
    radical = rr->radical;
    out.nilpotency_index = rr->index;
    auto e = primitive_idempotents(b, c, s.n(), field);
    rad.merge(e.report, "idempotents: ");
    auto pc = projective_classification(t, b, c);
    rad.merge(pc.report, "projectives: ");
    simples = pc.classes;
  } else {
    out.nilpotency_index = 1;
    simples = center_dim(t);
    rad.add("centre dimension = r + 1", simples == c.r() + 1, "centre dimension " + std::to_string(simples));
  }
  auto ss = semisimplicity_check(tw, rr ? &*rr : nullptr);
  out.semisimple_verdict = to_string(ss.verdict);
  out.radical_dim = ss.radical_dim;
  rad.add("semisimplicity decided", ss.verdict != SemisimpleVerdict::inconclusive, "trace form is degenerate");
  const bool semisimple = ss.verdict == SemisimpleVerdict::semisimple_certified;
  const bool expect_semisimple = !char2 || c.r() == 0;
  rad.add("semisimple exactly when p != 2 or S is thin", semisimple == expect_semisimple, out.semisimple_verdict.value());
  if (!char2) rad.add("trace-form radical consistent with N = 0", radical.dim() == ss.radical_dim);
  out.simple_count = simples;
  section("radical", std::move(rad));

  auto heredity = verify_heredity(t, chain, radical, simples);
  out.heredity_verified = heredity.passed();
  section("heredity", std::move(heredity));
  clock.lap("radical");

  // Basic algebra and its comparison with the model presentation.
  auto basic = char2 ? basic_algebra_char2(t, b, c) : basic_algebra_semisimple(t, b, c);
  const auto& gamma = basic.algebra;
  auto model = char2 ? lambda_algebra(c.r(), field) : split_semisimple_algebra(c.r() + 1, field);
  std::vector<std::size_t> psi(model.dim());
  for (std::size_t k = 0; k < psi.size(); ++k) psi[k] = k;
  Report bas = basic.report;
  auto iso = verify_iso_psi(gamma, model, psi);
  out.psi_verified = iso.passed();
  bas.merge(iso, "psi: ");
  out.basic_dim = gamma.dim();
  out.cartan = cartan_matrix(gamma);
  bas.add("Cartan matrix matches the model", out.cartan == cartan_matrix(model));
  out.basic_radical_index = radical_index(gamma);
  bas.add("index(rad Gamma) = index(rad T)", out.basic_radical_index == out.nilpotency_index);
  bas.add("index(rad T) <= 3", out.nilpotency_index && *out.nilpotency_index <= 3);
  section("basic-algebra", std::move(bas));
  clock.lap("basic");

  Report hom;
  auto gd = global_dimension(gamma, opt.cutoff);
  out.gldim = gd.value;
  bool certified = true;
  for (const auto& res : gd.simples) certified = certified && res.exact() && res.minimal();
  hom.add("resolutions exact and minimal", certified);
  const std::size_t expect_gl = semisimple ? 0 : 2;
  hom.add("gldim Gamma = " + std::to_string(expect_gl), gd.value == expect_gl,
          gd.value ? "gldim " + std::to_string(*gd.value) : "gldim exceeds the cutoff");
  auto dd = dominant_dimension(gamma, opt.cutoff);
  if (dd.infinite) out.domdim = "infinite";
  else if (dd.value) out.domdim = std::to_string(*dd.value);
  else out.domdim = ">" + std::to_string(opt.cutoff);
  std::string expect_dd = semisimple ? "infinite" : (c.r() == 1 ? "2" : "0");
  hom.add("domdim Gamma = " + expect_dd, out.domdim == expect_dd, "domdim " + out.domdim.value());
  hom.add("dual resolution exact and minimal", dd.dual_resolution.exact() && dd.dual_resolution.minimal());
  section("homology", std::move(hom));
  clock.lap("homology");
}

std::string join(const std::vector<std::size_t>& v, const std::string& sep = ", ") {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? sep : "") + std::to_string(v[k]);
  return s;
}

template <class T>
nlohmann::ordered_json opt_json(const std::optional<T>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

}  // namespace

bool AnalysisReport::counterexample() const { return first_failure().has_value(); }

std::optional<std::pair<std::string, Check>> AnalysisReport::first_failure() const {
  for (const auto& sec : sections)
    if (auto f = sec.report.first_failure()) return std::make_pair(sec.name, *f);
  return std::nullopt;
}

nlohmann::ordered_json AnalysisReport::to_json() const {
  nlohmann::ordered_json j;
  j["scheme-id"] = scheme_id;
  j["n"] = n;
  j["d"] = d;
  j["valencies"] = valencies;
  j["classification"] = classification;
  j["field"] = field;
  j["base-point"] = basepoint;
  j["dim-T"] = dim_t;
  j["R-size"] = opt_json(r_size);
  j["S-size"] = opt_json(s_size);
  j["r"] = opt_json(r);
  j["class-sizes"] = class_sizes;
  j["formula-dim"] = opt_json(formula_dim);
  j["basis-verified"] = opt_json(basis_verified);
  j["mult-table-verified"] = opt_json(mult_table_verified);
  j["cellular-verified"] = opt_json(cellular_verified);
  j["heredity-verified"] = opt_json(heredity_verified);
  j["cell-chain"] = cell_chain;
  j["radical-dim"] = opt_json(radical_dim);
  j["nilpotency-index"] = opt_json(nilpotency_index);
  j["semisimple-verdict"] = opt_json(semisimple_verdict);
  j["simple-count"] = opt_json(simple_count);
  j["basic-dim"] = opt_json(basic_dim);
  j["basic-radical-index"] = opt_json(basic_radical_index);
  j["psi-verified"] = opt_json(psi_verified);
  j["cartan"] = cartan;
  j["gldim"] = opt_json(gldim);
  if (domdim && *domdim != "infinite" && domdim->front() != '>') j["domdim"] = std::stoul(*domdim);
  else j["domdim"] = opt_json(domdim);
  j["basepoint-dims"] = basepoint_dims;
  if (timings.empty()) {
    j["timings"] = nullptr;
  } else {
    nlohmann::ordered_json t;
    for (const auto& [stage, secs] : timings) t[stage] = secs;
    j["timings"] = t;
  }
  j["notice"] = opt_json(notice);
  j["passed"] = !counterexample();
  auto& checks = j["checks"] = nlohmann::ordered_json::array();
  for (const auto& sec : sections)
    for (const auto& c : sec.report.checks()) {
      nlohmann::ordered_json e;
      e["section"] = sec.name;
      e["name"] = c.name;
      e["passed"] = c.passed;
      if (!c.passed) e["witness"] = c.witness;
      checks.push_back(std::move(e));
    }
  return j;
}

std::string AnalysisReport::to_text() const {
  std::ostringstream os;
  auto yn = [](const std::optional<bool>& v) { return v ? (*v ? "yes" : "NO") : "n/a"; };
  os << "scheme " << scheme_id << ": n = " << n << ", d = " << d << ", " << classification << "\n";
  os << "valencies: " << join(valencies) << "\n";
  os << "field " << field << ", base point " << basepoint << "\n";
  os << "dim T = " << dim_t << "\n";
  if (!basepoint_dims.empty()) os << "dim T(x) over base points: " << join(basepoint_dims) << "\n";
  if (notice) os << "notice: " << *notice << "\n";
  if (r) {
    os << "|R| = " << *r_size << ", |S| = " << *s_size << ", r = " << *r;
    if (!class_sizes.empty()) os << ", class sizes " << join(class_sizes);
    os << "\n";
    os << "formula |R| + |S| + (d+1)^2 = " << *formula_dim << "\n";
    os << "basis verified: " << yn(basis_verified) << ", multiplication table verified: " << yn(mult_table_verified)
       << "\n";
    os << "cellular: " << yn(cellular_verified) << ", quasi-hereditary: " << yn(heredity_verified)
       << ", cell chain dims " << join(cell_chain, " < ") << "\n";
    os << "semisimplicity: " << semisimple_verdict.value_or("?") << ", radical dim " << radical_dim.value_or(0)
       << ", nilpotency index " << (nilpotency_index ? std::to_string(*nilpotency_index) : "?") << "\n";
    os << "simple modules: " << simple_count.value_or(0) << "\n";
    os << "basic algebra dim " << basic_dim.value_or(0) << ", psi verified: " << yn(psi_verified) << ", Cartan [";
    for (std::size_t u = 0; u < cartan.size(); ++u) os << (u ? "; " : "") << join(cartan[u], " ");
    os << "]\n";
    os << "gldim " << (gldim ? std::to_string(*gldim) : "?") << ", domdim " << domdim.value_or("?") << "\n";
  }
  for (const auto& [stage, secs] : timings) os << "time " << stage << ": " << secs << " s\n";
  if (auto f = first_failure())
    os << "COUNTEREXAMPLE in " << f->first << ": " << f->second.name << ": " << f->second.witness << "\n";
  else
    os << "all checks passed\n";
  return os.str();
}

AnalysisReport analyze(const Scheme& s, const std::string& scheme_id, const AnalysisOptions& options) {
  if (options.basepoint >= s.n())
    throw std::out_of_range("base point " + std::to_string(options.basepoint) + " outside 0.." +
                            std::to_string(s.n() - 1));
  AnalysisReport out;
  out.scheme_id = scheme_id;
  out.n = s.n();
  out.d = s.d();
  out.valencies = s.data().valency;
  out.classification = to_string(classify(s).kind);
  out.field = options.field.name();
  out.basepoint = options.basepoint;
  with_field(options.field, [&](const auto& field) { run(s, field, options, out); });
  return out;
}

}  // namespace terwb
