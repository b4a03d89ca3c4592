#include "cmwild/wildness.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "cmwild/error.hpp"

namespace cmwild {

RegularSequence RegularSequence::from(std::vector<Polynomial> elements, std::string origin) {
  RegularSequence s;
  for (const auto& y : elements) {
    if (y.is_zero() || !y.is_homogeneous() || *y.homogeneous_degree() <= 0)
      throw InputError("sequence elements must be homogeneous of positive degree: " + y.to_string());
    s.degrees.push_back(*y.homogeneous_degree());
    s.m += s.degrees.back();
  }
  s.elements = std::move(elements);
  s.origin = std::move(origin);
  return s;
}

std::vector<std::string> RegularSequence::to_strings() const {
  std::vector<std::string> out;
  for (const auto& y : elements) out.push_back(y.to_string());
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::CMWild:
      return "CMWild";
    case Verdict::StrictlyCMInfinite:
      return "StrictlyCMInfinite";
    case Verdict::Inconclusive:
      return "Inconclusive";
  }
  return "Inconclusive";
}

bool verify_regular_element(const Polynomial& y, const ModulePresentation& n) {
  if (y.is_zero() || !y.is_homogeneous() || *y.homogeneous_degree() <= 0)
    throw InputError("regularity test needs a homogeneous element of positive degree");
  const int e = *y.homogeneous_degree();
  auto quotient = reduce_mod(n, {y});
  return quotient.hilbert_series().normalized() == n.hilbert_series().times_one_minus_t_pow(e).normalized();
}

bool verify_regular_element(const Polynomial& y, const QuotientRingSpec& ring) {
  if (y.is_zero() || !y.is_homogeneous() || *y.homogeneous_degree() <= 0)
    throw InputError("regularity test needs a homogeneous element of positive degree");
  const int e = *y.homogeneous_degree();
  auto quotient = ring.with_relations({y});
  return hilbert_series(*quotient).normalized() == hilbert_series(ring).times_one_minus_t_pow(e).normalized();
}

bool verify_regular_sequence(const QuotientRingSpec& ring, const std::vector<Polynomial>& y) {
  std::vector<Polynomial> prefix;
  for (const auto& yi : y) {
    auto q = ring.with_relations(prefix);
    if (!verify_regular_element(yi, *q)) return false;
    prefix.push_back(yi);
  }
  return true;
}

bool verify_regular_sequence(const ModulePresentation& n, const std::vector<Polynomial>& y) {
  std::vector<Polynomial> prefix;
  for (const auto& yi : y) {
    if (!verify_regular_element(yi, reduce_mod(n, prefix))) return false;
    prefix.push_back(yi);
  }
  return true;
}

std::vector<Polynomial> recipe_sequence(const QuotientRingSpec& ring, int d) {
  const auto& r = ring.ring();
  const auto n = ring.nvars();
  const auto k = ring.relations().size();
  std::vector<Polynomial> out;
  if (d <= 0) return out;
  auto push = [&](std::size_t var, int power) {
    if (var < n && static_cast<int>(out.size()) < d) out.push_back(Polynomial::variable(r, var, power));
  };
  if (k == 0) {
    for (std::size_t v = 0; v < n; ++v) push(v, 1);
  } else if (k == 1) {
    push(0, 2);
    push(1, 2);
    for (std::size_t v = 2; v < n; ++v) push(v, 1);
  } else {
    push(k, 2);
    for (std::size_t v = k + 1; v < n; ++v) push(v, 1);
  }
  return out;
}

RegularSequence find_regular_sequence(const QuotientRingSpec& ring, const SearchOptions& opts) {
  const int d = krull_dimension(ring);
  if (d < 0) throw InputError("the zero ring has no regular sequence");
  if (d == 0) {
    auto s = RegularSequence::from({}, "recipe");
    s.verified = true;
    return s;
  }
  auto recipe = recipe_sequence(ring, d);
  if (static_cast<int>(recipe.size()) == d && verify_regular_sequence(ring, recipe)) {
    auto s = RegularSequence::from(std::move(recipe), "recipe");
    s.verified = true;
    return s;
  }

  const auto& r = ring.ring();
  const auto& f = ring.field();
  const auto n = ring.nvars();
  std::mt19937_64 rng(opts.seed);
  std::vector<Polynomial> fixed;
  for (std::size_t v = 0; v < n; ++v) fixed.push_back(Polynomial::variable(r, v));
  for (std::size_t v = 0; v < n; ++v) fixed.push_back(Polynomial::variable(r, v, 2));

  int rejected = 0;
  std::vector<Polynomial> chosen;
  auto q = ring.with_relations({});
  while (static_cast<int>(chosen.size()) < d) {
    bool found = false;
    std::size_t next_fixed = 0;
    while (!found) {
      Polynomial cand;
      if (next_fixed < fixed.size()) {
        cand = fixed[next_fixed++];
      } else {
        std::vector<Term> terms;
        for (std::size_t v = 0; v < n; ++v) terms.push_back({Monomial::variable(n, v), f.random(rng)});
        cand = Polynomial(r, std::move(terms)).pow(1 + static_cast<unsigned>(rng() % 2));
      }
      if (!cand.is_zero() && verify_regular_element(cand, *q)) {
        chosen.push_back(cand);
        q = q->with_relations({cand});
        found = true;
      } else if (++rejected >= opts.budget) {
        throw BudgetExhausted("no regular sequence found");
      }
    }
  }
  auto s = RegularSequence::from(std::move(chosen), "search");
  s.verified = true;
  return s;
}

RingPtr artinian_reduction(const QuotientRingSpec& ring, const std::vector<Polynomial>& y) {
  auto rbar = ring.with_relations(y);
  if (krull_dimension(*rbar) != 0) throw InputError("sequence not a system of parameters");
  return rbar;
}

namespace {

bool is_complete_intersection(const QuotientRingSpec& ring) {
  auto s = make_quotient(ring.ring(), {});
  return verify_regular_sequence(*s, ring.relations());
}

std::string narrative(const WildnessReport& r) {
  std::ostringstream out;
  const int bound = r.sequence.m - r.d + 1;
  switch (r.verdict) {
    case Verdict::CMWild:
      out << "CM-wild: dim R/(y)_" << *r.c << " = " << *r.dim_c << " > 2 with c = " << *r.c << " > m-d+1 = " << bound
          << ". Two-parameter families of MCM modules exist, so the projective variety is ACM-wild.";
      break;
    case Verdict::StrictlyCMInfinite:
      out << "strictly CM-infinite: dim R/(y)_" << *r.c << " = " << *r.dim_c << " > 1 with c = " << *r.c
          << " > m-d+1 = " << bound << ". A one-parameter family of MCM modules exists.";
      break;
    case Verdict::Inconclusive:
      out << "inconclusive: no admissible c > " << bound
          << " has dim R/(y)_c > 1. The criterion is sufficient only; this does not show that R is not wild.";
      break;
  }
  out << " Computed over F_" << r.p << ".";
  if (r.cm_assumed) out << " The Cohen-Macaulay hypothesis on R is assumed, not checked.";
  return out.str();
}

}  // namespace

WildnessReport wildness_certificate(const RingPtr& ring, std::optional<RegularSequence> y,
                                    std::optional<std::pair<int, int>> c_window, const SearchOptions& opts) {
  WildnessReport rep;
  rep.p = ring->field().characteristic();
  rep.d = krull_dimension(*ring);
  if (y) {
    if (!verify_regular_sequence(*ring, y->elements)) throw InputError("the given sequence is not regular on R");
    rep.sequence = std::move(*y);
    rep.sequence.verified = true;
  } else {
    rep.sequence = find_regular_sequence(*ring, opts);
  }
  if (static_cast<int>(rep.sequence.elements.size()) != rep.d)
    throw InputError("sequence length " + std::to_string(rep.sequence.elements.size()) +
                     " differs from the Krull dimension " + std::to_string(rep.d));
  auto rbar = artinian_reduction(*ring, rep.sequence.elements);
  rep.cm_assumed = !is_complete_intersection(*ring);

  const int lo = rep.sequence.m - rep.d + 2;
  int a = lo, b = top_degree(*rbar);
  if (c_window) {
    a = std::max(c_window->first, lo);
    b = c_window->second;
  }
  std::optional<std::size_t> wild, infinite;
  for (int c = a; c <= b; ++c) {
    rep.scanned.emplace_back(c, hilbert_dim(*rbar, c));
    const auto dim = rep.scanned.back().second;
    if (dim > 2 && !wild) wild = rep.scanned.size() - 1;
    if (dim > 1 && !infinite) infinite = rep.scanned.size() - 1;
  }
  if (wild) {
    rep.verdict = Verdict::CMWild;
    std::tie(rep.c, rep.dim_c) = rep.scanned[*wild];
  } else if (infinite) {
    rep.verdict = Verdict::StrictlyCMInfinite;
    std::tie(rep.c, rep.dim_c) = rep.scanned[*infinite];
  }
  rep.narrative = narrative(rep);
  if (!check_witness(*ring, rep)) throw InternalError("wildness witness failed re-verification");
  return rep;
}

bool check_witness(const QuotientRingSpec& ring, const WildnessReport& report) {
  if (report.verdict == Verdict::Inconclusive) return true;
  if (!report.c || !report.dim_c) return false;
  const auto& y = report.sequence.elements;
  if (static_cast<int>(y.size()) != krull_dimension(ring)) return false;
  if (!verify_regular_sequence(ring, y)) return false;
  int m = 0;
  for (const auto& yi : y) m += *yi.homogeneous_degree();
  const int d = static_cast<int>(y.size());
  if (*report.c <= m - d + 1) return false;
  auto rbar = ring.with_relations(y);
  if (krull_dimension(*rbar) != 0) return false;
  const auto dim = static_cast<std::int64_t>(component_basis(*rbar, *report.c).size());
  if (dim != *report.dim_c) return false;
  return report.verdict == Verdict::CMWild ? dim > 2 : dim > 1;
}

WildnessReport hypersurface_report(const Polynomial& f, const SearchOptions& opts) {
  if (f.is_zero()) throw InputError("hypersurface equation is zero");
  if (!f.is_homogeneous()) throw InputError("hypersurface equation is not homogeneous: " + f.to_string());
  if (*f.homogeneous_degree() < 1) throw InputError("hypersurface equation must have positive degree");
  auto ring = make_quotient(f.ring(), {f});
  const int d = krull_dimension(*ring);
  auto recipe = recipe_sequence(*ring, d);
  std::optional<RegularSequence> seq;
  if (static_cast<int>(recipe.size()) == d && verify_regular_sequence(*ring, recipe))
    seq = RegularSequence::from(std::move(recipe), "recipe");
  return wildness_certificate(ring, seq, std::nullopt, opts);
}

WildnessReport complete_intersection_report(const std::vector<Polynomial>& fs, const SearchOptions& opts) {
  if (fs.empty()) throw InputError("complete intersection needs at least one equation");
  for (const auto& f : fs) {
    if (f.is_zero() || !f.is_homogeneous()) throw InputError("equation is zero or not homogeneous: " + f.to_string());
    if (*f.homogeneous_degree() < 2) throw InputError("equations must have degree > 1: " + f.to_string());
    if (f.ring() != fs.front().ring()) throw InputError("equations over different rings");
  }
  auto s = make_quotient(fs.front().ring(), {});
  if (!verify_regular_sequence(*s, fs)) throw InputError("not a complete intersection");
  auto ring = make_quotient(fs.front().ring(), fs);
  const int d = krull_dimension(*ring);
  auto recipe = recipe_sequence(*ring, d);
  std::optional<RegularSequence> seq;
  if (static_cast<int>(recipe.size()) == d && verify_regular_sequence(*ring, recipe))
    seq = RegularSequence::from(std::move(recipe), "recipe");
  return wildness_certificate(ring, seq, std::nullopt, opts);
}

}  // namespace cmwild
