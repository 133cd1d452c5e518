#include "carnot/verify.hpp"

#include "carnot/coords2.hpp"
#include "carnot/free_nilpotent.hpp"
#include "carnot/render.hpp"

#include <atomic>
#include <filesystem>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

namespace fs = std::filesystem;

namespace carnot {

void VerifyOutcome::add(const std::string &id, const std::string &check,
                        bool pass, const std::string &witness) {
  items.push_back({id, check, pass ? "pass" : "fail", witness});
  ok = ok && pass;
}

void VerifyOutcome::skip(const std::string &id, const std::string &check,
                         const std::string &why) {
  items.push_back({id, check, "skip", why});
}

DerivedArtifacts derive_artifacts(const LieAlgebra &alg) {
  GroupLaw law = group_law(alg);
  PolyMatrix dl = d_translation(law, Side::Left);
  PolyMatrix dr = d_translation(law, Side::Right);
  Frame fr{dl};
  Coframe cf{unipotent_inverse(dl)};
  return DerivedArtifacts{std::move(law), std::move(dl), std::move(dr),
                          std::move(fr), std::move(cf)};
}

bool has_second_kind_golden(const std::string &id) {
  return id == "N_3_2" || id == "N_4_2" || id == "F_2_3" || id == "F_2_4" ||
         id == "F_3_3" || id == "F_2_5";
}

namespace {

std::string join(const std::vector<std::string> &v) {
  std::string out;
  for (const auto &s : v) {
    if (!out.empty()) out += "; ";
    out += s;
  }
  return out;
}

struct ConeFixture {
  std::string kind; // "asymptotic" | "tangent"
  std::string src, target, file;
};

std::vector<ConeFixture> load_cone_fixtures(const std::string &data_dir) {
  std::vector<ConeFixture> out;
  fs::path manifest = fs::path(data_dir) / "fixtures" / "cones.txt";
  if (!fs::exists(manifest)) return out;
  std::istringstream is(read_file(manifest.string()));
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    ConeFixture f;
    ls >> f.kind >> f.src >> f.target >> f.file;
    if (!f.kind.empty()) out.push_back(std::move(f));
  }
  return out;
}

QMat load_fixture_matrix(const std::string &data_dir,
                         const std::string &file) {
  auto table = make_table({});
  PolyMatrix pm = PolyMatrix::parse(
      table, read_file((fs::path(data_dir) / "fixtures" / file).string()));
  QMat m(pm.rows(), QVec(pm.cols()));
  for (int i = 0; i < pm.rows(); ++i)
    for (int j = 0; j < pm.cols(); ++j) m[i][j] = pm.at(i, j).constant_value();
  return m;
}

const FreeNilpotent *cached_free(int r, int s) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, FreeNilpotent> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(r, s);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, free_structure_constants(r, s)).first;
  return &it->second;
}

void golden_checks(const Catalog &cat, const CatalogEntry &e,
                   const DerivedArtifacts &art, VerifyOutcome &out) {
  const std::string &id = e.alg.meta.id;
  fs::path dir = fs::path(cat.data_dir()) / "golden" / id;
  if (!fs::exists(dir)) {
    out.skip(id, "golden", "no golden data for this entry");
    return;
  }
  auto compare = [&](const std::string &name, const std::string &derived) {
    fs::path p = dir / name;
    if (!fs::exists(p)) return;
    std::string want = read_file(p.string());
    out.add(id, "golden:" + name, want == derived,
            want == derived ? "" : "serialization differs from " + p.string());
  };
  compare("law.txt", render_law(art.law, Format::Text));
  compare("dl.txt", art.dl.text());
  compare("dr.txt", art.dr.text());
  compare("frame.txt", render_frame(art.frame, Format::Text));
  compare("coframe.txt", render_coframe(art.cofr, Format::Text));
  if (has_second_kind_golden(id))
    compare("second.txt", render_second_kind(art.law, e.second_order));
}

void deep_checks(const Catalog &cat, const CatalogEntry &e,
                 const DerivedArtifacts &art, const VerifyOptions &opts,
                 VerifyOutcome &out) {
  const LieAlgebra &alg = e.alg;
  const std::string &id = alg.meta.id;
  const int n = alg.dim();

  CheckReport axioms = law_checks_symbolic(art.law, n <= 8);
  out.add(id, "group-axioms", axioms.ok, join(axioms.failures));
  if (n > 8) {
    CheckReport sampled = law_checks_sampled(art.law, opts.samples);
    out.add(id, "associativity-sampled", sampled.ok, join(sampled.failures));
  }

  CheckReport br = bracket_realization_check(alg, art.frame);
  out.add(id, "bracket-realization", br.ok, join(br.failures));

  CheckReport mc = maurer_cartan_check(alg, art.cofr);
  out.add(id, "maurer-cartan", mc.ok, join(mc.failures));

  {
    PolyMatrix prod = art.cofr.w * art.dl;
    bool dual = prod == PolyMatrix::identity(n, art.dl.table());
    out.add(id, "coframe-duality", dual);
  }

  {
    CheckReport rt = roundtrip_check(art.law, e.second_order);
    out.add(id, "coords2-roundtrip", rt.ok, join(rt.failures));
    Frame sf = second_frame(art.law, e.second_order);
    CheckReport br2 = bracket_realization_check(alg, sf);
    out.add(id, "second-frame-bracket-realization", br2.ok,
            join(br2.failures));
  }

  // dilation homogeneity against the displayed or natural grading
  {
    Grading weights = e.displayed_grading;
    if (weights.empty() && !alg.is_parametric()) {
      Grading nat = natural_grading(alg);
      if (verify_grading(alg, nat, false).ok) weights = nat;
    }
    if (!weights.empty()) {
      CheckReport dil = dilation_check(art.law, std::vector<int>(
                                                    weights.begin() + 1,
                                                    weights.end()));
      out.add(id, "dilation-homogeneity", dil.ok, join(dil.failures));
      bool degrees_ok = true;
      std::vector<int> var_weights(art.law.table->arity(), 0);
      for (int i = 0; i < n; ++i) {
        var_weights[i] = weights[i + 1];
        var_weights[n + i] = weights[i + 1];
      }
      for (int k = 0; k < n; ++k)
        degrees_ok = degrees_ok &&
                     weighted_degree(art.law.z[k], var_weights) ==
                         weights[k + 1];
      out.add(id, "weighted-degree-bound", degrees_ok);
    }
  }

  // universal property, when the free cover fits the supported range
  if (!alg.is_parametric()) {
    auto [rank, step] = rank_step(alg);
    Int total = 0;
    for (int d = 1; d <= step; ++d) total += witt_dimension(rank, d);
    if (step >= 1 && step <= 6 && total <= 23) {
      const FreeNilpotent *f = cached_free(rank, step);
      CheckReport up = universal_property_check(*f, alg);
      out.add(id, "universal-property", up.ok, join(up.failures));
      CheckReport lc = law_compatibility_check(*f, alg);
      out.add(id, "free-law-compatibility", lc.ok, join(lc.failures));
    } else {
      out.skip(id, "universal-property",
               "free cover exceeds the supported dimension range");
    }
  }

  // stratified entries coincide with their own asymptotic cone
  if (!alg.is_parametric() && alg.meta.stratifiable == StratFlag::Yes) {
    ConeResult gr = asymptotic_cone(alg);
    QMat a(n, QVec(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a[i][j] = gr.adapted[j][i];
    bool fp = fingerprint(gr.cone) == fingerprint(alg);
    CheckReport iso = verify_isomorphism(a, gr.cone, alg);
    out.add(id, "stratified-selfcone", fp && iso.ok, join(iso.failures));
  }

  // gr(gr L) = gr L up to the adapted change of basis
  if (!alg.is_parametric()) {
    ConeResult gr = asymptotic_cone(alg);
    ConeResult gr2 = asymptotic_cone(gr.cone);
    QMat a(n, QVec(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a[i][j] = gr2.adapted[j][i];
    bool fp = fingerprint(gr2.cone) == fingerprint(gr.cone);
    CheckReport iso = verify_isomorphism(a, gr2.cone, gr.cone);
    out.add(id, "cone-idempotent", fp && iso.ok, join(iso.failures));
  }

  // cone identification fixtures
  for (const auto &f : load_cone_fixtures(cat.data_dir())) {
    if (f.src != id) continue;
    const CatalogEntry *target = cat.find(f.target);
    std::string check = "cone:" + f.kind + ":" + f.target;
    if (!target || target->alg.meta.missing_source) {
      out.skip(id, check, "target entry unavailable");
      continue;
    }
    ConeResult cone = (f.kind == "asymptotic")
                          ? asymptotic_cone(alg)
                          : polarization_cone(
                                alg, standard_polarization(alg, {}));
    QMat a = load_fixture_matrix(cat.data_dir(), f.file);
    bool fp = fingerprint(cone.cone) == fingerprint(target->alg);
    CheckReport iso = verify_isomorphism(a, cone.cone, target->alg);
    out.add(id, check, fp && iso.ok,
            fp ? join(iso.failures) : "fingerprint mismatch");
  }
}

} // namespace

VerifyOutcome verify_entry(const Catalog &cat, const CatalogEntry &entry,
                           const VerifyOptions &opts) {
  VerifyOutcome out;
  const std::string &id = entry.alg.meta.id;
  if (entry.alg.meta.missing_source) {
    out.skip(id, "all", "missing_source: bracket data not in the available "
                        "source text");
    return out;
  }
  CheckReport load = validate_entry(entry);
  out.add(id, "load-validation", load.ok, join(load.failures));
  if (!load.ok) return out;
  DerivedArtifacts art = derive_artifacts(entry.alg);
  golden_checks(cat, entry, art, out);
  if (opts.deep) deep_checks(cat, entry, art, opts, out);
  return out;
}

VerifyOutcome verify_many(const Catalog &cat,
                          const std::vector<std::string> &ids,
                          const VerifyOptions &opts) {
  VerifyOutcome total;
  unsigned jobs = opts.jobs > 0 ? opts.jobs
                                : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, ids.size() ? ids.size() : 1);
  std::vector<VerifyOutcome> results(ids.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= ids.size()) return;
      const CatalogEntry *e = cat.find(ids[i]);
      if (!e) {
        results[i].add(ids[i], "lookup", false, "unknown id");
        continue;
      }
      results[i] = verify_entry(cat, *e, opts);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto &t : pool) t.join();
  for (auto &r : results) {
    total.ok = total.ok && r.ok;
    total.items.insert(total.items.end(), r.items.begin(), r.items.end());
  }
  return total;
}

std::string verify_report_json(const VerifyOutcome &out) {
  std::ostringstream os;
  os << "{\"ok\":" << (out.ok ? "true" : "false") << ",\"checks\":[";
  bool first = true;
  for (const auto &it : out.items) {
    if (!first) os << ",";
    first = false;
    os << "{\"id\":\"" << it.id << "\",\"check\":\"" << it.check
       << "\",\"status\":\"" << it.status << "\"";
    if (!it.witness.empty()) {
      std::string w = it.witness;
      for (auto &c : w)
        if (c == '"') c = '\'';
      os << ",\"witness\":\"" << w << "\"";
    }
    os << "}";
  }
  os << "]}";
  return os.str();
}

void emit_golden(const Catalog &cat, const std::string &data_dir) {
  for (const auto &[id, e] : cat.entries()) {
    if (e.alg.meta.missing_source) continue;
    DerivedArtifacts art = derive_artifacts(e.alg);
    fs::path dir = fs::path(data_dir) / "golden" / id;
    write_file((dir / "law.txt").string(), render_law(art.law, Format::Text));
    write_file((dir / "dl.txt").string(), art.dl.text());
    write_file((dir / "dr.txt").string(), art.dr.text());
    write_file((dir / "frame.txt").string(),
               render_frame(art.frame, Format::Text));
    write_file((dir / "coframe.txt").string(),
               render_coframe(art.cofr, Format::Text));
    if (has_second_kind_golden(id))
      write_file((dir / "second.txt").string(),
                 render_second_kind(art.law, e.second_order));
  }
}

} // namespace carnot
