#include "cmwild/cli.hpp"

#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "cmwild/error.hpp"
#include "cmwild/family.hpp"
#include "cmwild/wildness.hpp"

namespace cmwild::cli {

using Json = nlohmann::ordered_json;

namespace {

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string dir_of(const std::string& path) {
  const auto slash = path.find_last_of('/');
  return slash == std::string::npos ? "" : path.substr(0, slash + 1);
}

template <class T>
T field(const Json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) throw InputError(where + ": missing \"" + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception&) {
    throw InputError(where + ": \"" + key + "\" has the wrong type");
  }
}

RingPtr ring_from_json(const Json& j, std::optional<std::uint32_t> p_override, const std::string& where) {
  auto vars = field<std::vector<std::string>>(j, "vars", where);
  auto rels = j.contains("relations") ? field<std::vector<std::string>>(j, "relations", where)
                                      : std::vector<std::string>{};
  std::uint32_t p = j.contains("p") ? field<std::uint32_t>(j, "p", where) : kDefaultPrime;
  if (p_override) p = *p_override;
  return make_quotient(vars, rels, p);
}

Json ring_json(const QuotientRingSpec& r) {
  Json rels = Json::array();
  for (const auto& f : r.relations()) rels.push_back(f.to_string());
  return {{"vars", r.ring()->names()}, {"relations", rels}, {"p", r.field().characteristic()}};
}

std::vector<Polynomial> parse_list(const QuotientRingSpec& r, const std::vector<std::string>& texts) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(r.parse(t));
  return out;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');)
    if (item.find_first_not_of(" \t") != std::string::npos) out.push_back(item);
  return out;
}

Json matrix_json(const PrimeField& f, const Matrix& m) { return m.to_rows(f, true); }

Matrix matrix_from_json(const PrimeField& f, const Json& j, const std::string& where) {
  std::vector<std::vector<std::int64_t>> rows;
  try {
    rows = j.get<std::vector<std::vector<std::int64_t>>>();
  } catch (const Json::exception&) {
    throw InputError(where + ": matrix must be a list of integer rows");
  }
  for (const auto& r : rows)
    if (r.size() != rows.size()) throw InputError(where + ": matrix must be square");
  return Matrix::from_rows(f, rows);
}

Json sequence_json(const RegularSequence& s) {
  return {{"elements", s.to_strings()}, {"degrees", s.degrees}, {"m", s.m}, {"origin", s.origin},
          {"verified", s.verified}};
}

Json betti_rows(const Resolution& res) {
  Json rows = Json::array();
  for (const auto& [key, rank] : betti_table(res)) rows.push_back({{"i", key.first}, {"j", key.second}, {"rank", rank}});
  return rows;
}

class Job {
 public:
  explicit Job(const JobConfig& c) : cfg_(c) {}

  Json execute() {
    const auto& cmd = cfg_.command;
    if (cmd == "check") return check();
    if (cmd == "hypersurface") return hypersurface();
    if (cmd == "ci") return ci();
    if (cmd == "family") return family();
    if (cmd == "iso") return iso();
    if (cmd == "resolve") return resolve();
    if (cmd == "hilbert") return hilbert();
    if (cmd == "verify") return verify();
    throw InputError("unknown command '" + cmd + "'");
  }

 private:
  Json header(const QuotientRingSpec& r) const {
    return {{"schema", kSchema}, {"command", cfg_.command}, {"p", r.field().characteristic()}, {"seed", cfg_.seed},
            {"ring", ring_json(r)}};
  }

  SearchOptions search() const { return {cfg_.seed, cfg_.budget}; }

  RingPtr ring() const {
    if (!cfg_.ring_path) throw InputError(cfg_.command + " needs --ring FILE");
    return ring_from_json(read_json(*cfg_.ring_path), cfg_.field_char, *cfg_.ring_path);
  }

  std::optional<RegularSequence> given_sequence(const QuotientRingSpec& r) const {
    if (!cfg_.sequence) return std::nullopt;
    return RegularSequence::from(parse_list(r, split_commas(*cfg_.sequence)), "given");
  }

  static Json report_json(Json out, const WildnessReport& rep) {
    out["verdict"] = to_string(rep.verdict);
    out["sequence"] = sequence_json(rep.sequence);
    out["d"] = rep.d;
    out["c"] = rep.c ? Json(*rep.c) : Json(nullptr);
    out["dim_c"] = rep.dim_c ? Json(*rep.dim_c) : Json(nullptr);
    Json scan = Json::array();
    for (const auto& [c, dim] : rep.scanned) scan.push_back({{"c", c}, {"dim", dim}});
    out["scanned"] = scan;
    out["cm_assumed"] = rep.cm_assumed;
    out["narrative"] = rep.narrative;
    return out;
  }

  Json check() {
    auto r = ring();
    auto rep = wildness_certificate(r, given_sequence(*r), cfg_.c_window, search());
    return report_json(header(*r), rep);
  }

  Json hypersurface() {
    auto r = ring();
    if (r->relations().size() != 1) throw InputError("hypersurface needs exactly one relation");
    return report_json(header(*r), hypersurface_report(r->relations().front(), search()));
  }

  Json ci() {
    auto r = ring();
    return report_json(header(*r), complete_intersection_report(r->relations(), search()));
  }

  struct LoadedInstance {
    FamilySpec spec;
    Json source;
  };

  LoadedInstance load_instance(const std::string& path) const {
    auto j = read_json(path);
    RingPtr r;
    if (!j.contains("ring")) throw InputError(path + ": missing \"ring\"");
    if (j["ring"].is_string()) {
      const auto ring_path = dir_of(path) + j["ring"].get<std::string>();
      r = ring_from_json(read_json(ring_path), cfg_.field_char, ring_path);
    } else {
      r = ring_from_json(j["ring"], cfg_.field_char, path);
    }
    RegularSequence y = j.contains("sequence")
                            ? RegularSequence::from(parse_list(*r, field<std::vector<std::string>>(j, "sequence", path)),
                                                    "given")
                            : find_regular_sequence(*r, search());
    if (y.origin == "given") y.verified = verify_regular_sequence(*r, y.elements);
    int c = 0;
    if (j.contains("c")) {
      c = field<int>(j, "c", path);
    } else {
      auto rep = wildness_certificate(r, y, std::nullopt, search());
      if (!rep.c) throw InputError(path + ": no admissible c; the criterion is inconclusive for this ring");
      c = *rep.c;
    }
    const auto& f = r->field();
    if (!j.contains("ax")) throw InputError(path + ": missing \"ax\"");
    auto ax = matrix_from_json(f, j["ax"], path);
    std::optional<Matrix> ay;
    if (j.contains("ay") && !j["ay"].is_null()) ay = matrix_from_json(f, j["ay"], path);
    std::vector<Polynomial> basis;
    if (j.contains("basis")) basis = parse_list(*r, field<std::vector<std::string>>(j, "basis", path));
    return {make_family(r, std::move(y), c, std::move(ax), std::move(ay), std::move(basis)), j};
  }

  Json spec_json(const FamilySpec& s) const {
    const auto& f = s.ring->field();
    Json basis = Json::array();
    for (const auto& e : s.basis) basis.push_back(e.to_string());
    return {{"sequence", sequence_json(s.y)},
            {"c", s.c},
            {"n", s.n},
            {"basis", basis},
            {"ax", matrix_json(f, s.ax)},
            {"ay", s.ay ? matrix_json(f, *s.ay) : Json(nullptr)}};
  }

  Json family() {
    if (cfg_.instance_paths.size() != 1) throw InputError("family needs exactly one --instance FILE");
    auto inst = load_instance(cfg_.instance_paths.front());
    const auto& spec = inst.spec;
    const auto& f = spec.ring->field();
    auto out = header(*spec.ring);
    out["instance"] = spec_json(spec);
    out["warnings"] = validate_family(spec);

    auto mcm = mcm_module(spec);
    const auto hs = mcm.omega.hilbert_series().normalized();
    out["mcm"] = {{"d", mcm.d},
                  {"verified", mcm.mcm_verified},
                  {"omega_rank", mcm.omega.ambient().rank()},
                  {"omega_degrees", mcm.omega.ambient().degrees},
                  {"omega_hilbert_numerator", hs.numerator},
                  {"betti", betti_rows(mcm.resolution)},
                  {"minimal", mcm.resolution.minimal}};

    auto l23 = verify_lemma23(spec, mcm);
    out["lemma23"] = {{"pass", l23.pass},         {"m", l23.m},         {"lo", l23.lo},
                      {"hi", l23.hi},             {"sub_hf", l23.sub_hf}, {"shifted_hf", l23.shifted_hf},
                      {"generators", l23.generators}};

    auto l25 = verify_lemma25(spec);
    Json levels = Json::array();
    for (const auto& lv : l25.levels)
      levels.push_back({{"i", lv.i},
                        {"koszul_rank", lv.koszul_rank},
                        {"constant_rank", lv.constant_rank},
                        {"complement_degrees", lv.complement_degrees},
                        {"bound", lv.bound},
                        {"split", lv.split},
                        {"complement_ok", lv.complement_ok},
                        {"betti_ok", lv.betti_ok}});
    out["lemma25"] = {{"pass", l25.pass}, {"chain_map", l25.chain_map}, {"levels", levels}};

    auto ind = indecomposability_family(spec, {.seed = cfg_.seed});
    Json indj = {{"outcome", to_string(ind.outcome)},
                 {"method", ind.method},
                 {"commutant_dim", ind.commutant_dim},
                 {"radical_dim", ind.radical_dim},
                 {"idempotent", ind.idempotent ? matrix_json(f, *ind.idempotent) : Json(nullptr)}};
    if (ind.outcome == IndecomposabilityResult::Outcome::Indecomposable)
      indj["omega_claim"] = "Omega^d(M) is indecomposable (transferred from M, not tested directly)";
    out["indecomposability"] = indj;
    return out;
  }

  Json iso() {
    if (cfg_.instance_paths.size() != 2) throw InputError("iso needs exactly two --instance FILE options");
    auto a = load_instance(cfg_.instance_paths[0]);
    auto b = load_instance(cfg_.instance_paths[1]);
    auto cert = iso_family(a.spec, b.spec, {.seed = cfg_.seed});
    const auto& f = a.spec.ring->field();
    auto out = header(*a.spec.ring);
    out["outcome"] = to_string(cert.outcome);
    out["sigma"] = cert.sigma ? matrix_json(f, *cert.sigma) : Json(nullptr);
    out["method"] = cert.method;
    out["reason"] = cert.reason;
    out["intertwiner_dim"] = cert.intertwiner_dim;
    return out;
  }

  Json resolve() {
    auto r = ring();
    auto y = given_sequence(*r);
    if (y) {
      if (!verify_regular_sequence(*r, y->elements)) throw InputError("the given sequence is not regular on R");
      y->verified = true;
    } else {
      y = find_regular_sequence(*r, search());
    }
    const int k = cfg_.length.value_or(static_cast<int>(y->elements.size()));
    if (k < 0) throw InputError("--length must be non-negative");
    // R/(y) as the cyclic R-module R/(y)R
    std::vector<ModuleVector> rels;
    for (const auto& yi : y->elements) rels.push_back(mv_from_poly(r->reduce(yi)));
    ModulePresentation rbar(r, GradedFreeModule::free(1, 0), rels);
    auto res = minimal_resolution(rbar, k);
    auto kos = koszul_complex(r, y->elements);
    auto out = header(*r);
    out["sequence"] = sequence_json(*y);
    out["length"] = res.length();
    out["betti"] = betti_rows(res);
    out["minimal"] = res.minimal;
    out["complete"] = res.complete;
    out["koszul_betti"] = betti_rows(kos);
    out["matches_koszul"] = betti_table(res) == betti_table(kos);
    return out;
  }

  Json hilbert() {
    auto r = ring();
    auto hs = hilbert_series(*r).normalized();
    auto out = header(*r);
    out["numerator"] = hs.numerator;
    out["krull_dimension"] = krull_dimension(*r);
    Json values = Json::array();
    for (int t = 0; t <= cfg_.max_degree; ++t) values.push_back({{"t", t}, {"dim", hs.dim(t)}});
    out["values"] = values;
    return out;
  }

  Json verify() {
    if (!cfg_.report_path) throw InputError("verify needs --report FILE");
    auto j = read_json(*cfg_.report_path);
    const auto& where = *cfg_.report_path;
    if (!j.contains("schema") || j["schema"] != kSchema) throw InputError(where + ": not a cmwild/1 report");
    if (!j.contains("verdict")) throw InputError(where + ": not a wildness report");
    auto r = ring_from_json(j.at("ring"), cfg_.field_char, where);
    WildnessReport rep;
    const auto verdict = field<std::string>(j, "verdict", where);
    if (verdict == "CMWild")
      rep.verdict = Verdict::CMWild;
    else if (verdict == "StrictlyCMInfinite")
      rep.verdict = Verdict::StrictlyCMInfinite;
    else if (verdict == "Inconclusive")
      rep.verdict = Verdict::Inconclusive;
    else
      throw InputError(where + ": unknown verdict '" + verdict + "'");
    rep.sequence = RegularSequence::from(
        parse_list(*r, field<std::vector<std::string>>(j.at("sequence"), "elements", where)), "given");
    if (!j["c"].is_null()) rep.c = field<int>(j, "c", where);
    if (!j["dim_c"].is_null()) rep.dim_c = field<std::int64_t>(j, "dim_c", where);
    auto out = header(*r);
    out["verdict"] = verdict;
    out["valid"] = check_witness(*r, rep);
    return out;
  }

  const JobConfig& cfg_;
};

void render_text(const Json& j, const std::string& prefix, std::ostream& out) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const auto key = prefix.empty() ? it.key() : prefix + "." + it.key();
    const auto& v = it.value();
    if (v.is_object())
      render_text(v, key, out);
    else if (v.is_string())
      out << key << ": " << v.get<std::string>() << '\n';
    else
      out << key << ": " << v.dump() << '\n';
  }
}

}  // namespace

std::pair<int, int> parse_window(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw InputError("window must look like a..b: " + text);
  try {
    std::size_t used1 = 0, used2 = 0;
    const auto a_text = text.substr(0, dots), b_text = text.substr(dots + 2);
    const int a = std::stoi(a_text, &used1), b = std::stoi(b_text, &used2);
    if (used1 != a_text.size() || used2 != b_text.size() || a > b) throw InputError("bad window: " + text);
    return {a, b};
  } catch (const std::logic_error&) {
    throw InputError("bad window: " + text);
  }
}

int run(const JobConfig& config, std::ostream& out, std::ostream& err) {
  try {
    auto report = Job(config).execute();
    if (config.format == Format::Json) {
      out << report.dump() << '\n';
    } else {
      if (report.contains("narrative")) out << report["narrative"].get<std::string>() << "\n\n";
      render_text(report, "", out);
    }
    return kOk;
  } catch (const BudgetExhausted& e) {
    err << "budget exhausted: " << e.what() << '\n';
    return kBudgetExhausted;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace cmwild::cli
