// One line per acceptance criterion. Exit status is nonzero when any fails.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "bog/classify.hpp"
#include "bog/corpus.hpp"
#include "bog/errors.hpp"
#include "bog/freedim.hpp"
#include "bog/freeprob.hpp"
#include "bog/presentation.hpp"
#include "bog/specfile.hpp"
#include "bog/spectral.hpp"
#include "bog/words.hpp"
#include "generators.hpp"

using namespace bog;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

Representation R(const std::string& body) { return parse_rep(body); }

Outcome periodic_table() {
  Outcome o;
  auto t0 = Clock::now();
  const std::vector<std::tuple<std::uint64_t, std::uint64_t, Rational>> table = {
      {2, 2, Rational(3, 2)}, {3, 2, Rational(4, 3)}, {5, 2, Rational(6, 5)},
      {2, 3, Rational(2)},    {6, 4, Rational(3, 2)}};
  for (const auto& [T, dim, r] : table) {
    PeriodicForm p = periodic_form(T, Count(dim));
    std::string tag = "(" + std::to_string(T) + "," + std::to_string(dim) + ")";
    o.require(p.r && *p.r == ExtRational(r), tag + " r differs from the table");
    // the amalgamated free product route, computed afresh
    FreeDimensionRoute route = periodic_route(T, Count(dim));
    ExtRational d = afp_free_dimension(free_dimension(route.left), free_dimension(route.right),
                                       free_dimension(route.amalgam));
    o.require(d == ExtRational(r), tag + " route disagrees");
  }
  double s = seconds_since(t0);
  o.require(s < 1.0, "took " + std::to_string(s) + " s");
  if (o.pass) o.detail = "r = 3/2, 4/3, 6/5, 2, 3/2; route agrees";
  return o;
}

Outcome presentation_ranks() {
  Outcome o;
  AfpPresentation a = afp_presentation(R("atom sym:t mult 1\natom 0 mult 1"));
  o.require(a.m == Count(2) && a.n == Count(1), "theta + trivial: m = " + a.m.to_string() + ", n = " + a.n.to_string());
  o.require(a.acting_weights.size() == 1 && a.acting_weights[0].weight == CirclePoint::symbol("t"),
            "acting weight is not theta");
  AfpPresentation b = afp_presentation(R("atom 1/2 mult 2"));
  o.require(b.m == Count(0) && b.n == Count(2), "-1 mult 2: m = " + b.m.to_string() + ", n = " + b.n.to_string());
  if (o.pass) o.detail = "m = 2, n = 1 (theta); m = 0, n = 2";
  return o;
}

// coset enumeration of the kernel of F_n -> Z/T, x_i -> k_i: rank 1 + T(n - 1)
// and T(n - 1) + 1 non-tree edges.
std::pair<std::size_t, std::size_t> coset_oracle(std::size_t T, const std::vector<std::size_t>& steps) {
  std::vector<bool> seen(T, false);
  std::vector<std::size_t> queue{0};
  seen[0] = true;
  std::size_t edges = 0, tree = 0;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (auto k : steps) {
      std::size_t w = (queue[i] + k) % T;
      ++edges;
      if (!seen[w]) {
        seen[w] = true;
        ++tree;
        queue.push_back(w);
      }
    }
  }
  return {queue.size(), edges - tree};
}

Outcome commutant_rank() {
  Outcome o;
  RelativeCommutant rc = relative_commutant(R("atom 1/3 mult 1"));
  o.require(rc.rank == Count(2), "rank " + rc.rank.to_string());
  o.require(rc.witness.has_value(), "no witness");
  if (rc.witness) {
    auto [vertices, non_tree] = coset_oracle(3, {1});
    o.require(rc.witness->non_tree_edges.size() == 1, "non-tree edges " + std::to_string(rc.witness->non_tree_edges.size()));
    o.require(rc.witness->order == vertices && rc.witness->non_tree_edges.size() == non_tree,
              "witness disagrees with coset enumeration");
    o.require(rc.kernel_rank == Count(non_tree), "kernel rank disagrees with coset enumeration");
  }
  if (o.pass) o.detail = "rank 2, one non-tree edge, coset enumeration agrees";
  return o;
}

bool replay(const WeightedBasis& source, const std::vector<CirclePoint>& target, const RebaseResult& r) {
  const Automorphism& a = r.automorphism;
  if (a.forward.size() != source.size() || a.backward.size() != source.size()) return false;
  for (std::size_t i = 0; i < source.size(); ++i) {
    if (substitute(a.backward[i], a.forward) != Word::generator(static_cast<std::uint32_t>(i))) return false;
    if (substitute(a.forward[i], a.backward) != Word::generator(static_cast<std::uint32_t>(i))) return false;
  }
  std::multiset<CirclePoint> got, want(target.begin(), target.end());
  for (const auto& w : a.forward) got.insert(source.weight(w));
  return got == want;
}

Outcome basis_change() {
  Outcome o;
  auto t0 = Clock::now();
  WeightedBasis src = standard_basis(R("atom 1/5 mult 1"), 64);
  WeightedBasis dst = standard_basis(R("atom 2/5 mult 1"), 64);
  RebaseResult r = rebase(src, dst.weights);
  o.require(replay(src, dst.weights, r), "zeta5 -> zeta5^2 replay failed");
  std::multiset<CirclePoint> w(dst.weights.begin(), dst.weights.end());
  o.require(w == std::multiset<CirclePoint>{CirclePoint::turn(Rational(2, 5)), CirclePoint()},
            "target weights are not {2/5, 0}");

  testgen::Gen g(4242);
  int passed = 0;
  for (int round = 0; round < 100; ++round) {
    long T = g.integer(3, 24);
    auto nonreal = [&](bool unit) {
      while (true) {
        long k = g.integer(1, T - 1);
        if (2 * k == T) continue;
        if (unit && std::gcd(k, T) != 1) continue;
        return "atom " + std::to_string(k) + "/" + std::to_string(T) + " mult 1\n";
      }
    };
    int pairs = static_cast<int>(g.integer(1, 3));
    int zeros = static_cast<int>(g.integer(0, 2));
    std::string a = nonreal(true), b = nonreal(true);
    for (int i = 1; i < pairs; ++i) {
      a += nonreal(false);
      b += nonreal(false);
    }
    for (int i = 0; i < zeros; ++i) {
      a += "atom 0 mult 1\n";
      b += "atom 0 mult 1\n";
    }
    WeightedBasis s = standard_basis(R(a), 64), t = standard_basis(R(b), 64);
    RebaseResult rr = rebase(s, t.weights);
    passed += replay(s, t.weights, rr) && verify_rebase(s, t.weights, rr);
  }
  o.require(passed == 100, std::to_string(passed) + "/100 random rebases replay");
  double secs = seconds_since(t0);
  o.require(secs < 5.0, "took " + std::to_string(secs) + " s");
  if (o.pass) o.detail = "zeta5 -> zeta5^2 replays, weights {2/5, 0}; 100/100 random rebases";
  return o;
}

Outcome free_probability() {
  Outcome o;
  auto t0 = Clock::now();
  std::vector<Integer> c{1};
  for (std::size_t n = 1; n <= 10; ++n) {
    Integer next = 0;
    for (std::size_t i = 0; i < n; ++i) next += c[i] * c[n - 1 - i];
    c.push_back(next);
  }
  for (std::size_t n = 1; n <= 10; ++n) {
    std::size_t count = 0;
    for_each_nc(n, [&](const NCPartition&) { ++count; });
    o.require(Integer(count) == c[n] && catalan(n) == c[n], "|NC(" + std::to_string(n) + ")|");
  }
  auto m = semicircular_moments(12);
  const std::vector<long> even = {1, 2, 5, 14, 42, 132};
  for (std::size_t j = 0; j < even.size(); ++j) {
    o.require(m[2 * j + 2] == Rational(even[j]) && m[2 * j + 1] == 0, "semicircular moment " + std::to_string(2 * j + 2));
  }
  std::vector<Rational> cum = {0, Rational(1, 2), Rational(-1, 3), Rational(2), 0, Rational(1, 7),
                               Rational(-5), 1, 0, Rational(3, 11), 2, Rational(-1, 2)};
  o.require(cumulants_from_moments(moments_from_cumulants(cum, 12), 12) == cum, "scalar round trip at order 12");
  testgen::Gen g(99);
  for (std::size_t k = 1; k <= 3; ++k) {
    OVSequence s = OVSequence::zero(k, 6);
    for (auto& level : s.values) {
      for (auto& d : level) {
        for (auto& x : d) x = Rational(g.integer(-4, 4), g.integer(1, 5));
      }
    }
    o.require(ov_cumulants_from_moments(ov_moments_from_cumulants(s)).values == s.values,
              "operator-valued round trip, k = " + std::to_string(k));
  }
  o.require(verify_cumulant_reduction(2, 2, 6).holds, "reduction check (2,2,6)");
  double secs = seconds_since(t0);
  o.require(secs < 10.0, "took " + std::to_string(secs) + " s");
  if (o.pass) o.detail = "Catalan to 10, moments to 12, round trips, reduction (2,2,6)";
  return o;
}

Outcome spectral_closure() {
  Outcome o;
  auto c = convolution_closure(MeasureClass::points({CirclePoint::turn(Rational(1, 3)), CirclePoint::turn(Rational(2, 3))}));
  o.require(c.measure.support == AtomSupport::SubgroupHaar && c.measure.subgroup.order() == Count(3),
            "closure is not Haar on Z/3");
  o.require(c.iterations <= 3, "iterations " + std::to_string(c.iterations));
  for (const char* body : {"atom 1/3 mult 1", "wm left_regular", "wm singular_closed\natom 0 mult 1",
                           "wm atomless", "", "atom sym:t mult 2\nwm left_regular"}) {
    auto rep = R(body);
    o.require(bimodule_type(rep).multiplicity_infinite == !rep.atoms().empty(),
              std::string("multiplicity flag for '") + body + "'");
  }
  if (o.pass) o.detail = "Haar on Z/3 after " + std::to_string(c.iterations) + " iterations; multiplicity inf iff atoms";
  return o;
}

Outcome seven_classes() {
  Outcome o;
  const std::vector<std::string> reps = {
      "wm left_regular\natom sym:t mult 1",      "wm left_regular\natom 1/3 mult 1",
      "wm singular_closed\natom sym:t mult 1",   "wm singular_closed\natom 1/3 mult 1",
      "atom sym:t mult 1",                       "atom 1/3 mult 1",
      "wm left_regular"};
  int distinct = 0;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    o.require(rigidity_class(R(reps[i])).index == static_cast<int>(i) + 1, "representative " + std::to_string(i + 1));
    for (std::size_t j = i + 1; j < reps.size(); ++j) {
      auto a = R(reps[i]), b = R(reps[j]);
      auto v = compare(a, b);
      distinct += v.kind == VerdictKind::Distinct && recheck(v, a, b);
    }
  }
  o.require(distinct == 21, std::to_string(distinct) + "/21 distinct");
  auto v = compare(R("atom sym:t mult 1"), R("atom sym:u mult 1"));
  o.require(v.rule == rule::kSingleIrrationalPair, "class 5 pair: " + v.rule);
  v = compare(R("wm left_regular"), R("wm left_regular\natom 0 mult 1"));
  o.require(v.rule == rule::kLeftRegularFreeGroup, "left regular pair: " + v.rule);
  v = compare(R("wm left_regular\natom 0 mult 1"), R("wm left_regular\natom 0 mult 2"));
  o.require(v.kind == VerdictKind::Distinct, "trivial multiplicities 1 vs 2: " + v.rule);
  if (o.pass) o.detail = "21/21 distinct and rechecked; class 5 and left regular isomorphisms; 1 vs 2 trivial distinct";
  return o;
}

std::string random_body(testgen::Gen& g) {
  static const std::vector<std::string> angles = {"0",   "1/2",   "1/3",   "1/4",     "1/5",       "2/5",
                                                  "1/6", "sym:t", "sym:u", "2*sym:t", "1/3+sym:t", "1/2+sym:u"};
  static const std::vector<std::string> mults = {"1", "1", "2", "3", "inf"};
  static const std::vector<std::string> kinds = {"left_regular", "singular_closed", "atomless",
                                                 "atomless flags mixing"};
  std::string body;
  auto atoms = g.index(4);
  for (std::size_t i = 0; i < atoms; ++i) {
    body += "atom " + angles[g.index(angles.size())] + " mult " + mults[g.index(mults.size())] + "\n";
  }
  auto wms = g.index(3);
  for (std::size_t i = 0; i < wms; ++i) {
    std::string kind = kinds[g.index(kinds.size())];
    body += "wm " + kind.substr(0, kind.find(' '));
    if (g.coin()) body += " mult " + mults[g.index(3)];
    if (kind.find(' ') != std::string::npos) body += kind.substr(kind.find(' '));
    body += "\n";
  }
  return body;
}

bool mixed(const std::vector<std::string>& rules) {
  bool iso = false, dist = false;
  for (const auto& r : rules) {
    iso = iso || kind_of_rule(r) == VerdictKind::Isomorphic;
    dist = dist || kind_of_rule(r) == VerdictKind::Distinct;
  }
  return iso && dist;
}

Outcome unknown_honesty(const std::filesystem::path& corpus) {
  Outcome o;
  auto v = compare(R("atom 1/5 mult 1"), R("atom 1/7 mult 1"));
  o.require(v.rule == rule::kFreeGroupFactorProblem, "zeta5 vs zeta7: " + v.rule);
  v = compare(R("atom sym:t mult inf\natom sym:u mult inf"), R("atom sym:t mult inf\natom 2*sym:u mult inf"));
  o.require(v.rule == rule::kAbstractSubgroup && v.certificate["obstruction"] == "AbstractSubgroupConjecture",
            "abstract subgroup pair: " + v.rule);

  auto t0 = Clock::now();
  std::size_t conflicts = 0, pairs = 0;
  for (const auto& c : load_corpus(corpus)) {
    std::ifstream in(c.spec);
    std::stringstream text;
    text << in.rdbuf();
    SpecFile spec;
    try {
      spec = parse_specfile(text.str());
    } catch (const Error&) {
      continue;  // the error cases
    }
    for (const auto& a : spec.reps) {
      for (const auto& b : spec.reps) {
        ++pairs;
        conflicts += mixed(all_matching_rules(a, b));
      }
    }
  }
  testgen::Gen g(20260101);
  for (int i = 0; i < 10000; ++i) {
    auto a = R(random_body(g)), b = R(random_body(g));
    ++pairs;
    conflicts += mixed(all_matching_rules(a, b));
  }
  double secs = seconds_since(t0);
  o.require(conflicts == 0, std::to_string(conflicts) + " pairs match both kinds");
  o.require(secs < 60.0, "fuzz took " + std::to_string(secs) + " s");
  if (o.pass) {
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << "free group factor problem, abstract subgroup; " << pairs
       << " pairs (corpus + 10000 random) with no mixed match in " << secs << " s";
    o.detail = os.str();
  }
  return o;
}

Outcome determinism(const std::filesystem::path& corpus) {
  Outcome o;
  auto cases = load_corpus(corpus);
  auto first = run_all(cases, 1);
  auto second = run_all(cases, 1);
  auto threaded = run_all(cases, 8);
  std::size_t same = 0;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    same += first[i].text == second[i].text && first[i].json == second[i].json &&
            first[i].text == threaded[i].text && first[i].json == threaded[i].json;
  }
  o.require(!cases.empty(), "empty corpus");
  o.require(same == cases.size(), std::to_string(same) + "/" + std::to_string(cases.size()) + " identical");
  if (o.pass) o.detail = std::to_string(cases.size()) + " cases byte-identical across two runs and 1 vs 8 threads";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::filesystem::path corpus = argc > 1 ? argv[1] : "corpus";
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"periodic parameter table", periodic_table},
      {"presentation ranks", presentation_ranks},
      {"relative commutant rank", commutant_rank},
      {"basis change", basis_change},
      {"free probability suite", free_probability},
      {"spectral closure", spectral_closure},
      {"seven-class separation", seven_classes},
      {"unknown honesty", [&] { return unknown_honesty(corpus); }},
      {"determinism", [&] { return determinism(corpus); }},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failures += !o.pass;
    std::cout << "criterion " << i + 1 << " " << (o.pass ? "PASS" : "FAIL") << " " << criteria[i].first << ": "
              << o.detail << "\n";
  }
  return failures == 0 ? 0 : 1;
}
