#include "bog/freedim.hpp"

#include <cctype>
#include <stdexcept>

#include "bog/errors.hpp"

namespace bog {

std::string Summand::to_string() const {
  std::string w = "@" + bog::to_string(weight);
  switch (kind) {
    case Kind::Diffuse: return "diffuse" + w;
    case Kind::Interpolated: return "lfr(" + parameter.to_string() + ")" + w;
    case Kind::Matrix: return "mat(" + std::to_string(size) + ")" + w;
  }
  return "?";
}

FactorDescriptor FactorDescriptor::diffuse() {
  return {{Summand{Summand::Kind::Diffuse, {}, 1, Rational(1)}}};
}

FactorDescriptor FactorDescriptor::interpolated(ExtRational r) {
  return {{Summand{Summand::Kind::Interpolated, std::move(r), 1, Rational(1)}}};
}

FactorDescriptor FactorDescriptor::abelian(std::uint64_t t) {
  FactorDescriptor d;
  for (std::uint64_t i = 0; i < t; ++i) {
    d.summands.push_back({Summand::Kind::Matrix, {}, 1, Rational(1, static_cast<long>(t))});
  }
  return d;
}

FactorDescriptor FactorDescriptor::tensor_abelian(const FactorDescriptor& one, std::uint64_t t) {
  FactorDescriptor d;
  for (std::uint64_t i = 0; i < t; ++i) {
    for (Summand s : one.summands) {
      s.weight /= static_cast<long>(t);
      d.summands.push_back(s);
    }
  }
  return d;
}

void FactorDescriptor::validate() const {
  if (summands.empty()) throw Error(ErrorCode::InvalidDescriptor, "descriptor has no summands");
  Rational total = 0;
  for (const Summand& s : summands) {
    if (s.weight <= 0) throw Error(ErrorCode::InvalidDescriptor, "weights must be positive");
    if (s.kind == Summand::Kind::Interpolated && !(ExtRational(1) < s.parameter)) {
      throw Error(ErrorCode::InvalidDescriptor, "interpolated parameter must exceed 1");
    }
    if (s.kind == Summand::Kind::Matrix && s.size == 0) {
      throw Error(ErrorCode::InvalidDescriptor, "matrix size must be positive");
    }
    total += s.weight;
  }
  if (total != 1) {
    throw Error(ErrorCode::InvalidDescriptor, "weights sum to " + bog::to_string(total) + ", not 1");
  }
}

std::string FactorDescriptor::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < summands.size(); ++i) {
    if (i) out += " + ";
    out += summands[i].to_string();
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void bad(const std::string& message) {
  throw ParseError(ErrorCode::ParseError, 1, 1, message);
}

Summand parse_summand(std::string_view text) {
  std::size_t at = text.find('@');
  if (at == std::string_view::npos) bad("summand '" + std::string(text) + "' lacks '@weight'");
  std::string_view head = trim(text.substr(0, at));
  auto weight = parse_rational(trim(text.substr(at + 1)));
  if (!weight) bad("malformed weight in '" + std::string(text) + "'");
  Summand s;
  s.weight = *weight;
  auto argument = [&](std::string_view prefix) {
    if (head.substr(0, prefix.size()) != prefix || head.back() != ')') {
      bad("malformed summand '" + std::string(head) + "'");
    }
    return trim(head.substr(prefix.size(), head.size() - prefix.size() - 1));
  };
  if (head == "diffuse") {
    s.kind = Summand::Kind::Diffuse;
  } else if (head.substr(0, 4) == "lfr(") {
    s.kind = Summand::Kind::Interpolated;
    std::string_view arg = argument("lfr(");
    if (arg == "inf") {
      s.parameter = ExtRational::infinity();
    } else {
      auto r = parse_rational(arg);
      if (!r) bad("malformed parameter '" + std::string(arg) + "'");
      s.parameter = *r;
    }
  } else if (head.substr(0, 4) == "mat(") {
    s.kind = Summand::Kind::Matrix;
    auto n = parse_rational(argument("mat("));
    if (!n || denominator(*n) != 1 || *n < 0) bad("matrix size must be a nonnegative integer");
    s.size = numerator(*n).convert_to<std::uint64_t>();
  } else {
    bad("unknown summand '" + std::string(head) + "'");
  }
  return s;
}

}  // namespace

FactorDescriptor parse_descriptor(std::string_view text) {
  FactorDescriptor d;
  std::size_t start = 0;
  while (true) {
    std::size_t plus = text.find('+', start);
    std::string_view piece = trim(text.substr(start, plus == std::string_view::npos
                                                         ? std::string_view::npos
                                                         : plus - start));
    if (piece.empty()) bad("empty summand");
    d.summands.push_back(parse_summand(piece));
    if (plus == std::string_view::npos) break;
    start = plus + 1;
  }
  d.validate();
  return d;
}

ExtRational free_dimension(const FactorDescriptor& m) {
  ExtRational d(1);
  Rational matrix_part = 0;
  for (const Summand& s : m.summands) {
    if (s.kind == Summand::Kind::Interpolated) {
      if (s.parameter.is_infinite()) return ExtRational::infinity();
      d = d + ExtRational(s.weight * s.weight * (s.parameter.value() - 1));
    } else if (s.kind == Summand::Kind::Matrix) {
      Rational x = s.weight / static_cast<long>(s.size);
      matrix_part += x * x;
    }
  }
  return d - ExtRational(matrix_part);
}

ExtRational afp_free_dimension(const ExtRational& d1, const ExtRational& d2,
                               const ExtRational& d_amalgam) {
  return (d1 + d2) - d_amalgam;
}

std::string AfpPattern::to_string() const {
  std::string t = std::to_string(T);
  std::string out;
  switch (shape) {
    case AfpShape::DiffuseCrossMatrix:
      out = "(L Z ⊗ C^" + t + ") *_{C^" + t + "} (L∞[0,1] ⊗ M_" + t + ")";
      break;
    case AfpShape::FreeCrossInterpolated:
      out = "(L F_" + n.to_string() + " ⊗ C^" + t + ") *_{C^" + t + "} L F_{1+1/" + t + "}";
      break;
    case AfpShape::FreeCrossMatrixDiffuse:
      out = "(L F_" + n.to_string() + " ⊗ C^2) *_{C^2} (M_2 ⊗ L∞[0,1])";
      break;
    case AfpShape::Custom:
      out = "custom amalgamated free product";
      break;
  }
  if (shared_central_projection) out += " [shared central projection]";
  return out;
}

bool factoriality_gate(const AfpPattern& pattern) {
  if (pattern.shape == AfpShape::Custom) {
    throw Error(ErrorCode::UnsupportedPattern, "no center rule for a custom pattern");
  }
  if (pattern.T < 2) {
    throw Error(ErrorCode::UnsupportedPattern, "the amalgam C^T needs T >= 2");
  }
  if (pattern.shape == AfpShape::FreeCrossMatrixDiffuse && pattern.T != 2) {
    throw Error(ErrorCode::UnsupportedPattern, "the M_2 pattern needs T = 2");
  }
  if (pattern.shared_central_projection) return false;
  // In every tabulated shape one side has a center meeting C^T trivially:
  // M_T ⊗ L∞ has center 1 ⊗ L∞, L F_r is a factor, M_2 ⊗ L∞ has center 1 ⊗ L∞.
  return true;
}

FreeDimensionRoute periodic_route(std::uint64_t T, const Count& dim) {
  if (T < 2 || dim < Count(2)) {
    throw Error(ErrorCode::UnsupportedPattern, "route needs T >= 2 and dimension >= 2");
  }
  FreeDimensionRoute route;
  route.pattern.T = T;
  route.amalgam = FactorDescriptor::abelian(T);
  // normal form: an irreducible piece of kernel index T plus n trivial copies
  Count n = Count::infinity();
  if (dim.is_finite()) n = Count(dim.value() - (T == 2 ? 1 : 2));
  auto free_part = [&](const Count& k) {
    if (k == Count(1)) return FactorDescriptor::diffuse();
    return FactorDescriptor::tensor_abelian(
        FactorDescriptor::interpolated(ExtRational::from_count(k)), T);
  };
  route.pattern.n = n;
  if (T == 2) {
    route.pattern.shape = AfpShape::FreeCrossMatrixDiffuse;
    route.left = free_part(n);
    route.right = FactorDescriptor::diffuse();
  } else if (n == Count(0)) {
    route.pattern.shape = AfpShape::DiffuseCrossMatrix;
    route.left = FactorDescriptor::diffuse();
    route.right = FactorDescriptor::diffuse();
  } else {
    route.pattern.shape = AfpShape::FreeCrossInterpolated;
    route.left = free_part(n);
    route.right = FactorDescriptor::interpolated(Rational(1) + Rational(1, static_cast<long>(T)));
  }
  if (!factoriality_gate(route.pattern)) {
    throw std::logic_error("factoriality gate failed on a tabulated pattern");
  }
  route.d1 = free_dimension(route.left);
  route.d2 = free_dimension(route.right);
  route.d = free_dimension(route.amalgam);
  route.r = afp_free_dimension(route.d1, route.d2, route.d);
  return route;
}

const char* to_string(PeriodicShape shape) {
  switch (shape) {
    case PeriodicShape::Zero: return "zero";
    case PeriodicShape::Trivial: return "trivial";
    case PeriodicShape::OneDimNontrivial: return "one_dim_sign";
    case PeriodicShape::Interpolated: return "interpolated";
  }
  return "?";
}

PeriodicForm periodic_form(std::uint64_t T, const Count& dim) {
  PeriodicForm f;
  f.T = Count(T);
  f.dim = dim;
  if (T == 1) {
    if (dim == Count(0)) {
      f.shape = PeriodicShape::Zero;
      f.inclusion = "L∞[0,1] = L∞[0,1]";
      return f;
    }
    f.shape = PeriodicShape::Trivial;
    f.r = ExtRational::from_count(dim);
    f.inclusion = "1 ⊗ L∞[0,1] ⊂ L F_" + dim.to_string() + " ⊗ L∞[0,1]";
    return f;
  }
  if (T == 2 && dim == Count(1)) {
    f.shape = PeriodicShape::OneDimNontrivial;
    f.inclusion = "C^2 ⊗ 1 ⊗ L∞[0,1] ⊂ M_2 ⊗ L∞[0,1] ⊗ L∞[0,1]";
    return f;
  }
  if (T == 0 || dim < Count(2)) {
    throw Error(ErrorCode::NotPeriodic, "no representation has kernel index " +
                                            std::to_string(T) + " and dimension " +
                                            dim.to_string());
  }
  f.shape = PeriodicShape::Interpolated;
  ExtRational direct = dim.is_infinite()
                           ? ExtRational::infinity()
                           : ExtRational(Rational(1) + Rational(static_cast<long>(dim.value()) - 1,
                                                                static_cast<long>(T)));
  f.route = periodic_route(T, dim);
  if (!(f.route->r == direct)) {
    throw std::logic_error("free-dimension route disagrees with the periodic formula");
  }
  f.r = direct;
  f.inclusion = "C^" + std::to_string(T) + " ⊗ L∞[0,1] ⊂ L F_" + direct.to_string() +
                " ⊗ L∞[0,1]";
  return f;
}

PeriodicForm periodic_invariant(const Representation& rep) {
  if (!rep.is_almost_periodic()) {
    throw Error(ErrorCode::NotPeriodic, "representation has a weakly mixing part");
  }
  Count T = kernel_index(rep);
  if (T.is_infinite()) throw Error(ErrorCode::NotPeriodic, "representation is faithful");
  return periodic_form(T.value(), dimension(rep));
}

}  // namespace bog
