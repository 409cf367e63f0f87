#include "bog/classify.hpp"

#include <algorithm>
#include <set>

#include "bog/errors.hpp"
#include "bog/freedim.hpp"
#include "bog/presentation.hpp"
#include "bog/spectral.hpp"

namespace bog {

namespace {

Json count_json(const Count& c) {
  if (c.is_infinite()) return "inf";
  return c.value();
}

bool is_periodic(const Representation& rep) {
  return rep.is_almost_periodic() && !is_faithful(rep);
}

bool all_wm(const Representation& rep, WmKind kind) {
  const auto& wm = rep.wm_parts();
  return !wm.empty() && std::all_of(wm.begin(), wm.end(),
                                    [&](const WmPart& p) { return p.kind == kind; });
}

bool lr_only(const Representation& rep) {
  return rep.atoms().empty() && rep.wm_parts().size() == 1 &&
         rep.wm_parts()[0].kind == WmKind::LeftRegular &&
         rep.wm_parts()[0].multiplicity == Count(1);
}

bool lr_plus_trivial(const Representation& rep) {
  return rep.atoms().size() == 1 && rep.atoms()[0].eigenvalue.is_identity() &&
         rep.atoms()[0].multiplicity == Count(1) && rep.wm_parts().size() == 1 &&
         rep.wm_parts()[0].kind == WmKind::LeftRegular &&
         rep.wm_parts()[0].multiplicity == Count(1);
}

// Interpolated shapes and trivial representations of dimension at least two
// both give L F_r ⊗ L∞.
bool free_group_family(const PeriodicForm& p) {
  return p.shape == PeriodicShape::Interpolated ||
         (p.shape == PeriodicShape::Trivial && Count(2) <= p.dim);
}

Json periodic_json(const PeriodicForm& p) {
  Json j;
  j["T"] = count_json(p.T);
  j["dim"] = count_json(p.dim);
  j["shape"] = to_string(p.shape);
  j["r"] = p.r ? Json(p.r->to_string()) : Json(nullptr);
  return j;
}

std::pair<CircleSubgroup, CircleSubgroup> joint_subgroups(const Representation& a,
                                                          const Representation& b) {
  std::vector<CirclePoint> both = a.eigenvalues();
  for (const auto& p : b.eigenvalues()) both.push_back(p);
  SymbolTable table = symbols_of(both);
  return {generate(a.eigenvalues(), table), generate(b.eigenvalues(), table)};
}

bool single_irrational_pair(const Representation& rep) {
  if (!rep.is_almost_periodic()) return false;
  int nonreal = 0;
  for (const auto& a : rep.atoms()) {
    if (a.eigenvalue.is_identity()) continue;
    if (a.eigenvalue.is_real() || a.eigenvalue.is_torsion()) return false;
    ++nonreal;
  }
  return nonreal == 1;
}

std::string pair_text(const Representation& a, const Representation& b) {
  auto name = [](const Representation& r) { return r.name().empty() ? std::string("_") : r.name(); };
  return name(a) + " and " + name(b);
}

Verdict make(VerdictKind kind, const char* rule, Json certificate, std::string summary) {
  Verdict v;
  v.kind = kind;
  v.rule = rule;
  v.certificate = std::move(certificate);
  v.human_summary = std::move(summary);
  return v;
}

// Each rule returns a verdict when its hypotheses hold.

std::optional<Verdict> rule_factoriality(const Representation& a, const Representation& b) {
  Factoriality fa = factoriality(a), fb = factoriality(b);
  if (fa.factor == fb.factor) return std::nullopt;
  Json c{{"invariant", "factoriality"},
         {"values", {fa.factor, fb.factor}},
         {"centers", {fa.center, fb.center}}};
  return make(VerdictKind::Distinct, rule::kFactoriality, c,
              pair_text(a, b) + ": exactly one crossed product is a factor");
}

std::optional<Verdict> rule_solidity(const Representation& a, const Representation& b) {
  Solidity sa = solidity(a), sb = solidity(b);
  bool split = (sa.kind == SolidityKind::StronglySolid && sb.kind == SolidityKind::NotSolid) ||
               (sa.kind == SolidityKind::NotSolid && sb.kind == SolidityKind::StronglySolid);
  if (!split) return std::nullopt;
  Json c{{"invariant", "solidity"},
         {"values", {to_string(sa.kind), to_string(sb.kind)}},
         {"witnesses", {sa.witness, sb.witness}}};
  return make(VerdictKind::Distinct, rule::kSolidity, c,
              pair_text(a, b) + ": one is strongly solid, the other is not solid");
}

std::optional<Verdict> rule_rigidity(const Representation& a, const Representation& b) {
  RigidityClass ca = rigidity_class(a), cb = rigidity_class(b);
  if (!ca.index || !cb.index || *ca.index == *cb.index) return std::nullopt;
  Json c{{"invariant", "rigidity_class"},
         {"values", {*ca.index, *cb.index}},
         {"reasons", {ca.reason, cb.reason}}};
  return make(VerdictKind::Distinct, rule::kRigidityClass, c,
              pair_text(a, b) + ": rigidity classes " + std::to_string(*ca.index) + " and " +
                  std::to_string(*cb.index) + " are never isomorphic");
}

std::optional<Verdict> rule_spectral(const Representation& a, const Representation& b) {
  auto s = separating_invariant(a, b);
  if (!s) return std::nullopt;
  Json c{{"invariant", "bimodule_fiber_class"},
         {"values", {to_string(s->first), to_string(s->second)}},
         {"description", s->description}};
  return make(VerdictKind::Distinct, rule::kSpectralFiber, c, pair_text(a, b) + ": " + s->description);
}

std::optional<Verdict> rule_left_regular(const Representation& a, const Representation& b) {
  if (!((lr_only(a) && lr_plus_trivial(b)) || (lr_plus_trivial(a) && lr_only(b)))) {
    return std::nullopt;
  }
  Json c{{"statement", "both crossed products are isomorphic to L F_2"},
         {"shapes", {lr_only(a) ? "left_regular" : "left_regular + 1",
                     lr_only(b) ? "left_regular" : "left_regular + 1"}}};
  return make(VerdictKind::Isomorphic, rule::kLeftRegularFreeGroup, c,
              pair_text(a, b) + ": both are isomorphic to L F_2");
}

std::optional<Verdict> rule_periodic(const Representation& a, const Representation& b) {
  if (!is_periodic(a) || !is_periodic(b)) return std::nullopt;
  PeriodicForm pa = periodic_invariant(a), pb = periodic_invariant(b);
  bool match = false;
  if (free_group_family(pa) && free_group_family(pb)) {
    match = pa.r && pb.r && *pa.r == *pb.r;
  } else {
    match = pa.shape == pb.shape && pa.dim == pb.dim;
  }
  if (!match) return std::nullopt;
  Json c{{"invariant", "periodic_form"}, {"values", {periodic_json(pa), periodic_json(pb)}}};
  std::string what = pa.r && free_group_family(pa) ? "L F_" + pa.r->to_string() + " ⊗ L∞"
                                                     : std::string(to_string(pa.shape));
  return make(VerdictKind::Isomorphic, rule::kPeriodic, c,
              pair_text(a, b) + ": periodic with the same parameter, both " + what);
}

std::optional<Verdict> rule_same_subgroup(const Representation& a, const Representation& b,
                                          const CompareOptions& options) {
  if (a.wm_parts() != b.wm_parts()) return std::nullopt;
  Count da = ap_dimension(a), db = ap_dimension(b);
  if (da != db) return std::nullopt;
  auto [ka, kb] = joint_subgroups(a, b);
  if (ka != kb) return std::nullopt;
  Json c{{"subgroup", ka.to_string()}, {"ap_dimension", count_json(da)}};
  Verdict v = make(VerdictKind::Isomorphic, rule::kSameSubgroup, c,
                   pair_text(a, b) + ": same weakly mixing part, same ap dimension, eigenvalues generate " +
                       ka.to_string());
  if (da.is_finite() && da.value() > 0) {
    Representation apa = decompose(a).first, apb = decompose(b).first;
    WeightedBasis source = standard_basis(apa, options.truncate);
    WeightedBasis target = standard_basis(apb, options.truncate);
    RebaseResult r = rebase(source, target.weights);
    Json forward = Json::array(), backward = Json::array();
    for (const auto& w : r.automorphism.forward) forward.push_back(w.to_string(source.names));
    for (const auto& w : r.automorphism.backward) backward.push_back(w.to_string(r.basis.names));
    v.certificate["rebase"] = {{"source", source.names},
                               {"source_weights", source.weight_literals()},
                               {"target", r.basis.names},
                               {"target_weights", r.basis.weight_literals()},
                               {"forward", forward},
                               {"backward", backward},
                               {"swapped", r.swapped}};
    v.rebase = std::move(r);
  } else {
    v.certificate["rebase"] = nullptr;
  }
  return v;
}

std::optional<Verdict> rule_single_pair(const Representation& a, const Representation& b) {
  if (!single_irrational_pair(a) || !single_irrational_pair(b)) return std::nullopt;
  if (dimension(a) != dimension(b)) return std::nullopt;
  Json c{{"dimension", count_json(dimension(a))},
         {"statement", "one irrational eigenvalue pair each, equal dimensions"}};
  return make(VerdictKind::Isomorphic, rule::kSingleIrrationalPair, c,
              pair_text(a, b) + ": a single irrational eigenvalue pair each and equal dimension");
}

std::optional<Verdict> rule_free_group_factor(const Representation& a, const Representation& b) {
  if (!is_periodic(a) || !is_periodic(b)) return std::nullopt;
  PeriodicForm pa = periodic_invariant(a), pb = periodic_invariant(b);
  if (!free_group_family(pa) || !free_group_family(pb) || !pa.r || !pb.r || *pa.r == *pb.r) {
    return std::nullopt;
  }
  Json c{{"obstruction", "FreeGroupFactorProblem"},
         {"values", {periodic_json(pa), periodic_json(pb)}}};
  return make(VerdictKind::Unknown, rule::kFreeGroupFactorProblem, c,
              pair_text(a, b) + ": L F_" + pa.r->to_string() + " ⊗ L∞ versus L F_" +
                  pb.r->to_string() + " ⊗ L∞ is the isomorphism problem for free group factors");
}

std::optional<Verdict> rule_abstract_subgroup(const Representation& a, const Representation& b) {
  if (!a.is_almost_periodic() || !b.is_almost_periodic()) return std::nullopt;
  if (!is_faithful(a) || !is_faithful(b)) return std::nullopt;
  if (dimension(a).is_finite() || dimension(b).is_finite()) return std::nullopt;
  auto [ka, kb] = joint_subgroups(a, b);
  if (ka == kb) return std::nullopt;
  if (ka.rank() != kb.rank() || ka.torsion_order() != kb.torsion_order()) return std::nullopt;
  Json c{{"obstruction", "AbstractSubgroupConjecture"},
         {"subgroups", {ka.to_string(), kb.to_string()}},
         {"abstract_type", {{"rank", ka.rank()}, {"torsion", to_string(ka.torsion_order())}}}};
  return make(VerdictKind::Unknown, rule::kAbstractSubgroup, c,
              pair_text(a, b) + ": abstractly isomorphic, concretely different eigenvalue groups; "
                                "whether the abstract group is a complete invariant is open");
}

Verdict rule_none(const Representation& a, const Representation& b) {
  Solidity sa = solidity(a), sb = solidity(b);
  bool conjecture = (sa.kind == SolidityKind::Unknown) != (sb.kind == SolidityKind::Unknown);
  Json c{{"obstruction", conjecture ? "SolidityConjecture" : "NoRuleApplies"}};
  std::string summary = pair_text(a, b) + ": no rule decides this pair";
  if (conjecture) summary += "; solidity of one side depends on the open solidity question";
  return make(VerdictKind::Unknown, rule::kNoRule, c, summary);
}

using RuleFn = std::function<std::optional<Verdict>(const Representation&, const Representation&)>;

std::vector<std::pair<const char*, RuleFn>> ladder(const CompareOptions& options) {
  return {
      {rule::kFactoriality, rule_factoriality},
      {rule::kSolidity, rule_solidity},
      {rule::kRigidityClass, rule_rigidity},
      {rule::kSpectralFiber, rule_spectral},
      {rule::kLeftRegularFreeGroup, rule_left_regular},
      {rule::kPeriodic, rule_periodic},
      {rule::kSameSubgroup,
       [options](const Representation& a, const Representation& b) {
         return rule_same_subgroup(a, b, options);
       }},
      {rule::kSingleIrrationalPair, rule_single_pair},
      {rule::kFreeGroupFactorProblem, rule_free_group_factor},
      {rule::kAbstractSubgroup, rule_abstract_subgroup},
  };
}

}  // namespace

RigidityClass rigidity_class(const Representation& rep) {
  Representation ap = decompose(rep).first;
  Count d = ap_dimension(rep);
  bool faithful = is_faithful(ap);
  const char* split = faithful ? "faithful" : "non-faithful";
  if (Count(2) <= d) {
    if (rep.wm_parts().empty()) {
      return {faithful ? 5 : 6, std::string(split) + " almost periodic, dimension at least 2"};
    }
    if (all_wm(rep, WmKind::LeftRegular)) {
      return {faithful ? 1 : 2, std::string("multiple of the left regular plus ") + split +
                                    " ap part of dimension at least 2"};
    }
    if (all_wm(rep, WmKind::SingularClosed)) {
      return {faithful ? 3 : 4, std::string("singular closed weakly mixing part plus ") + split +
                                    " ap part of dimension at least 2"};
    }
    return {std::nullopt, "weakly mixing archetype not covered by the classes"};
  }
  bool mixing = std::all_of(rep.wm_parts().begin(), rep.wm_parts().end(),
                            [](const WmPart& p) { return p.mixing; });
  if (mixing) return {7, "mixing weakly mixing part plus ap part of dimension at most 1"};
  return {std::nullopt, "ap part of dimension at most 1 with a weakly mixing part not known to be mixing"};
}

const char* to_string(SolidityKind s) {
  switch (s) {
    case SolidityKind::StronglySolid: return "strongly_solid";
    case SolidityKind::NotSolid: return "not_solid";
    case SolidityKind::Unknown: return "unknown";
  }
  return "?";
}

Solidity solidity(const Representation& rep) {
  bool mixing = std::all_of(rep.wm_parts().begin(), rep.wm_parts().end(),
                            [](const WmPart& p) { return p.mixing; });
  if (mixing && ap_dimension(rep) <= Count(1)) {
    return {SolidityKind::StronglySolid, "mixing part plus a part of dimension at most one"};
  }
  RigidSubspaceTest t = has_rigid_2dim(rep);
  if (t.answer == Tri::Yes) return {SolidityKind::NotSolid, t.witness};
  return {SolidityKind::Unknown,
          "SolidityConjecture: no rigid 2-dimensional subspace is known, solidity is open"};
}

Factoriality factoriality(const Representation& rep) {
  if (is_faithful(rep)) return {true, "trivial"};
  Count T = kernel_index(rep);
  return {false, "L(" + T.to_string() + "Z) ⊂ A_π, kernel " + T.to_string() + "Z"};
}

const char* to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Isomorphic: return "Isomorphic";
    case VerdictKind::Distinct: return "Distinct";
    case VerdictKind::Unknown: return "Unknown";
  }
  return "?";
}

VerdictKind kind_of_rule(const std::string& r) {
  if (r.rfind("distinct_", 0) == 0) return VerdictKind::Distinct;
  if (r.rfind("isomorphic_", 0) == 0) return VerdictKind::Isomorphic;
  return VerdictKind::Unknown;
}

Json Verdict::to_json() const {
  return Json{{"kind", bog::to_string(kind)},
              {"rule", rule},
              {"certificate", certificate},
              {"human_summary", human_summary}};
}

Verdict compare(const Representation& r1, const Representation& r2, const CompareOptions& options) {
  for (const auto& [name, fn] : ladder(options)) {
    if (auto v = fn(r1, r2)) return *v;
  }
  return rule_none(r1, r2);
}

std::vector<std::string> all_matching_rules(const Representation& r1, const Representation& r2) {
  std::vector<std::string> out;
  CompareOptions options;
  for (const auto& [name, fn] : ladder(options)) {
    // rebase certificates are not needed to decide applicability
    if (std::string(name) == rule::kSameSubgroup) {
      auto [ka, kb] = joint_subgroups(r1, r2);
      if (r1.wm_parts() == r2.wm_parts() && ap_dimension(r1) == ap_dimension(r2) && ka == kb) {
        out.push_back(name);
      }
      continue;
    }
    if (fn(r1, r2)) out.push_back(name);
  }
  return out;
}

bool recheck(const Verdict& v, const Representation& r1, const Representation& r2,
             const CompareOptions& options) {
  if (kind_of_rule(v.rule) != v.kind) return false;
  std::optional<Verdict> again;
  if (v.rule == rule::kNoRule) {
    for (const auto& [name, fn] : ladder(options)) {
      if (std::string(name) != rule::kSameSubgroup && fn(r1, r2)) return false;
    }
    return all_matching_rules(r1, r2).empty();
  }
  for (const auto& [name, fn] : ladder(options)) {
    if (v.rule == name) again = fn(r1, r2);
  }
  if (!again) return false;
  if (v.kind == VerdictKind::Distinct) {
    // the recomputed values must be the recorded ones, and unequal
    const Json& values = again->certificate.at("values");
    if (values != v.certificate.at("values") || values.at(0) == values.at(1)) return false;
  }
  if (v.rule == rule::kPeriodic || v.rule == rule::kFreeGroupFactorProblem) {
    if (again->certificate.at("values") != v.certificate.at("values")) return false;
  }
  if (v.rule == rule::kSameSubgroup && v.rebase) {
    Representation apa = decompose(r1).first, apb = decompose(r2).first;
    WeightedBasis source = standard_basis(apa, options.truncate);
    WeightedBasis target = standard_basis(apb, options.truncate);
    if (!verify_rebase(source, target.weights, *v.rebase)) return false;
  }
  return true;
}

namespace {

Json measure_json(const MeasureClass& m) {
  Json atoms = Json::array();
  for (const auto& p : m.atoms) atoms.push_back(p.to_literal());
  Json j{{"support", to_string(m.support)},
         {"atoms", atoms},
         {"continuous", to_string(m.continuous)},
         {"singular_closed", m.singular_closed},
         {"truncated", m.truncated}};
  j["subgroup"] = m.support == AtomSupport::Finite ? Json(nullptr) : Json(m.subgroup.to_string());
  return j;
}

Json presentation_json(const AfpPresentation& p) {
  Json weights = Json::array();
  for (const auto& w : p.acting_weights) {
    weights.push_back({{"weight", w.weight.to_literal()}, {"multiplicity", count_json(w.multiplicity)}});
  }
  return Json{{"m", count_json(p.m)},   {"n", count_json(p.n)},   {"n1", count_json(p.n1)},
              {"n2", count_json(p.n2)}, {"m0", count_json(p.m0)}, {"acting_weights", weights},
              {"text", p.to_string()}};
}

Json commutant_json(const RelativeCommutant& rc) {
  Json j{{"rank", count_json(rc.rank)},
         {"m", count_json(rc.m)},
         {"kernel_rank", count_json(rc.kernel_rank)},
         {"image_order", count_json(rc.image_order)},
         {"fixed_point_rank", count_json(rc.fixed_point_rank)}};
  if (rc.witness) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < rc.witness->generators; ++i) names.push_back("a" + std::to_string(i + 1));
    Json kernel = Json::array();
    for (const auto& e : rc.witness->non_tree_edges) {
      kernel.push_back(rc.witness->kernel_generator(e).to_string(names));
    }
    j["witness"] = {{"vertices", rc.witness->order},
                    {"tree_edges", rc.witness->tree_edges.size()},
                    {"non_tree_edges", rc.witness->non_tree_edges.size()},
                    {"kernel_generators", kernel}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json cocycle_json(const CocyclePresentation& c) {
  Json j{{"K", c.K.to_string()},
         {"commutant_rank", count_json(c.commutant_rank)},
         {"cocycle_trivial", to_string(c.cocycle_trivial)},
         {"shift_description", c.shift_description}};
  if (!c.sections.empty()) {
    Json elements = Json::array(), sections = Json::array(), omega = Json::array();
    for (const auto& e : c.elements) elements.push_back(e.to_literal());
    for (const auto& s : c.sections) sections.push_back(s.to_string(c.generator_names));
    for (const auto& row : c.omega) {
      Json r = Json::array();
      for (const auto& w : row) r.push_back(w.to_string(c.generator_names));
      omega.push_back(r);
    }
    j["elements"] = elements;
    j["sections"] = sections;
    j["omega"] = omega;
    j["identity_verified"] = c.identity_verified;
  }
  return j;
}

}  // namespace

Json dossier(const Representation& rep, std::size_t truncate) {
  Json d;
  d["name"] = rep.name();
  d["dimension"] = count_json(dimension(rep));
  d["ap_dimension"] = count_json(ap_dimension(rep));
  d["kernel_index"] = count_json(kernel_index(rep));
  d["faithful"] = is_faithful(rep);
  d["eigenvalue_subgroup"] = eigenvalue_subgroup(rep).to_string();

  Factoriality f = factoriality(rep);
  d["factoriality"] = {{"factor", f.factor}, {"center", f.center}};

  Representation ap = decompose(rep).first;
  NormalizerSummary ns = normalizer_summary(rep, truncate);
  d["presentation"] = presentation_json(ns.presentation);
  d["relative_commutant"] = commutant_json(ns.commutant);
  d["cocycle"] = cocycle_json(cocycle_presentation(ap, truncate));
  d["normaliser"] = {{"ap_empty", ns.ap_empty}, {"statement", ns.statement}};

  if (is_periodic(rep)) {
    PeriodicForm p = periodic_invariant(rep);
    Json pj = periodic_json(p);
    pj["inclusion"] = p.inclusion;
    if (p.route) {
      pj["route"] = {{"pattern", p.route->pattern.to_string()},
                     {"left", p.route->left.to_string()},
                     {"right", p.route->right.to_string()},
                     {"amalgam", p.route->amalgam.to_string()},
                     {"d1", p.route->d1.to_string()},
                     {"d2", p.route->d2.to_string()},
                     {"d", p.route->d.to_string()},
                     {"r", p.route->r.to_string()}};
    }
    d["periodic"] = pj;
  } else {
    d["periodic"] = nullptr;
  }

  BimoduleInvariant b = bimodule_type(rep);
  d["bimodule"] = {{"fiber", measure_json(b.fiber)},
                   {"iterations", b.iterations},
                   {"multiplicity", b.multiplicity_infinite ? "inf" : "not_asserted"}};

  Solidity s = solidity(rep);
  d["solidity"] = {{"kind", to_string(s.kind)}, {"witness", s.witness}};
  RigidSubspaceTest rt = has_rigid_2dim(rep);
  d["rigid_subspace"] = {{"answer", to_string(rt.answer)}, {"witness", rt.witness}};
  RigidityClass rc = rigidity_class(rep);
  d["rigidity_class"] = {{"index", rc.index ? Json(*rc.index) : Json(nullptr)}, {"reason", rc.reason}};

  Json notes = Json::array();
  if (lr_only(rep) || lr_plus_trivial(rep)) notes.push_back("M ≅ L F_2");
  if (single_irrational_pair(rep)) {
    notes.push_back("isomorphic to every almost periodic representation of the same dimension "
                    "with a single irrational eigenvalue pair");
  }
  if (rep.is_almost_periodic() && is_faithful(rep) && dimension(rep) == Count(2)) {
    notes.push_back("M ≅ Z ⋉ (L F_∞ ⊗ L∞(S¹))");
  }
  if (rc.index) notes.push_back("rigidity class " + std::to_string(*rc.index));
  d["notes"] = notes;
  return d;
}

}  // namespace bog
