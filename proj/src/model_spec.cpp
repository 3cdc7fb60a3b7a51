#include "votemap/compass.hpp"
#include "votemap/error.hpp"
#include "votemap/models.hpp"

namespace votemap {

namespace {

template <class T>
BasicMatrix<T> apply_axis(const BasicMatrix<T>& a, const std::optional<Ranking>& axis) {
  if (!axis) return a;
  BasicMatrix<T> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t t = 0; t < a.size(); ++t) out(i, (*axis)[t]) = a(i, t);
  return out;
}

void require_unit(const Rational& x, const char* what) {
  if (x < 0 || x > 1) throw DomainError(std::string(what) + " must lie in [0,1]");
}

}  // namespace

std::string family_name(ModelFamily f) {
  switch (f) {
    case ModelFamily::IC: return "ic";
    case ModelFamily::Mallows: return "mallows";
    case ModelFamily::MallowsReversalMixture: return "mallows-mixture";
    case ModelFamily::Conitzer: return "conitzer";
    case ModelFamily::Walsh: return "walsh";
    case ModelFamily::GSTreeUniform: return "gs-tree";
    case ModelFamily::MallowsFiltered: return "mallows-filtered";
  }
  return "?";
}

double Dispersion::resolve(std::size_t m) const {
  const double v = to_double(value);
  return normalized ? norm_phi_to_phi(m, v) : v;
}

namespace {

ModelSpec with_family(ModelFamily family, std::size_t m) {
  ModelSpec s;
  s.family = family;
  s.m = m;
  return s;
}

}  // namespace

ModelSpec ModelSpec::ic(std::size_t m) { return with_family(ModelFamily::IC, m); }

ModelSpec ModelSpec::mallows(std::size_t m, Dispersion d) {
  ModelSpec s = with_family(ModelFamily::Mallows, m);
  s.dispersion = d;
  return s;
}

ModelSpec ModelSpec::reversal_mixture(std::size_t m, Dispersion phi, Dispersion psi, const Rational& p) {
  ModelSpec s = with_family(ModelFamily::MallowsReversalMixture, m);
  s.dispersion = phi;
  s.reversed_dispersion = psi;
  s.p = p;
  return s;
}

ModelSpec ModelSpec::conitzer(std::size_t m) { return with_family(ModelFamily::Conitzer, m); }
ModelSpec ModelSpec::walsh(std::size_t m) { return with_family(ModelFamily::Walsh, m); }

ModelSpec ModelSpec::gs_tree(GSTree t) {
  ModelSpec s = with_family(ModelFamily::GSTreeUniform, t.candidates());
  s.tree = std::move(t);
  return s;
}

ModelSpec ModelSpec::mallows_filtered(ModelSpec base, Dispersion d) {
  ModelSpec s = with_family(ModelFamily::MallowsFiltered, base.m);
  s.dispersion = d;
  s.base = std::make_shared<const ModelSpec>(std::move(base));
  return s;
}

void ModelSpec::validate() const {
  if (m == 0) throw DomainError("model needs m >= 1");
  if (central && central->size() != m) throw DimensionError("central vote has the wrong number of candidates");
  require_unit(p, "mixture weight p");
  const bool takes_dispersion = family == ModelFamily::Mallows || family == ModelFamily::MallowsReversalMixture ||
                                family == ModelFamily::MallowsFiltered;
  if (takes_dispersion && !dispersion) throw DomainError(family_name(family) + " needs a dispersion (phi or norm-phi)");
  if (!takes_dispersion && dispersion) throw DomainError(family_name(family) + " takes no dispersion");
  if (dispersion) require_unit(dispersion->value, "dispersion");
  if (reversed_dispersion) {
    if (family != ModelFamily::MallowsReversalMixture) throw DomainError("psi only applies to mallows-mixture");
    require_unit(reversed_dispersion->value, "dispersion psi");
  }
  if (family != ModelFamily::MallowsReversalMixture && p != 1)
    throw DomainError("mixture weight only applies to mallows-mixture");
  if (family == ModelFamily::GSTreeUniform) {
    if (!tree) throw StructureError("gs-tree model needs a tree");
    if (tree->candidates() != m) throw DimensionError("tree leaves do not match m");
  } else if (tree) {
    throw DomainError("a tree only applies to gs-tree models");
  }
  if (family == ModelFamily::MallowsFiltered) {
    if (!base) throw DomainError("mallows-filtered needs a base model");
    if (base->m != m) throw DimensionError("base model has a different m");
    base->validate();
  } else if (base) {
    throw DomainError("a base model only applies to mallows-filtered");
  }
}

FrequencyMatrix model_matrix(const ModelSpec& spec) {
  spec.validate();
  const std::size_t m = spec.m;
  switch (spec.family) {
    case ModelFamily::IC:
      return compass_matrix<double>(CompassKind::Uniformity, m);
    case ModelFamily::Mallows:
      return mallows_matrix({m, spec.dispersion->resolve(m), spec.central});
    case ModelFamily::MallowsReversalMixture: {
      const double phi = spec.dispersion->resolve(m);
      const double psi = spec.reversed_dispersion ? spec.reversed_dispersion->resolve(m) : phi;
      return reversal_mixture_matrix(m, phi, psi, to_double(spec.p), spec.central);
    }
    case ModelFamily::Conitzer:
      return apply_axis(conitzer_matrix<double>(m), spec.central);
    case ModelFamily::Walsh:
      return apply_axis(walsh_matrix<double>(m), spec.central);
    case ModelFamily::GSTreeUniform:
      return gs_tree_matrix<double>(*spec.tree);
    case ModelFamily::MallowsFiltered:
      return mallows_filter_matrix(model_matrix(*spec.base), spec.dispersion->resolve(m));
  }
  throw DomainError("unknown model family");
}

RationalMatrix model_matrix_exact(const ModelSpec& spec) {
  spec.validate();
  const std::size_t m = spec.m;
  auto exact_phi = [&](const std::optional<Dispersion>& d) -> Rational {
    if (d->normalized)
      throw DomainError("exact arithmetic needs phi given directly; normalized dispersions are computed numerically");
    return d->value;
  };
  switch (spec.family) {
    case ModelFamily::IC:
      return compass_matrix<Rational>(CompassKind::Uniformity, m);
    case ModelFamily::Mallows:
      return mallows_matrix_exact(m, exact_phi(spec.dispersion), spec.central);
    case ModelFamily::MallowsReversalMixture: {
      const Rational phi = exact_phi(spec.dispersion);
      const Rational psi = spec.reversed_dispersion ? exact_phi(spec.reversed_dispersion) : phi;
      const Ranking v = spec.central ? *spec.central : Ranking::identity(m);
      const RationalMatrix forward = mallows_matrix_exact(m, phi, v);
      const RationalMatrix backward = mallows_matrix_exact(m, psi, reverse(v));
      return affine_combination(forward, backward, spec.p);
    }
    case ModelFamily::Conitzer:
      return apply_axis(conitzer_matrix<Rational>(m), spec.central);
    case ModelFamily::Walsh:
      return apply_axis(walsh_matrix<Rational>(m), spec.central);
    case ModelFamily::GSTreeUniform:
      return gs_tree_matrix<Rational>(*spec.tree);
    case ModelFamily::MallowsFiltered:
      return multiply(mallows_matrix_exact(m, exact_phi(spec.dispersion)), model_matrix_exact(*spec.base));
  }
  throw DomainError("unknown model family");
}

}  // namespace votemap
