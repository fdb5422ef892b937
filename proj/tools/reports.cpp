#include "reports.hpp"

#include <fstream>

namespace ainf::cli {

namespace {

template <typename T>
T field_of(const Json& j, const char* key) {
  if (!j.contains(key)) throw InputError(std::string("input: missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InputError(std::string("input: field '") + key + "' has the wrong type");
  }
}

Vec coeffs(const std::vector<long long>& c) {
  Vec v(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) v(k) = c[k];
  return v;
}

Json caps_json(const Caps& c) { return {{"degree", c.degree}, {"arity", c.arity}, {"weight", c.weight}}; }

std::string presentation(const PresentedAlgebra& H, Int p) {
  std::string s = "F_" + std::to_string(p) + "<<";
  for (int a = 0; a < H.generators(); ++a) s += (a ? ", " : "") + H.generator_names()[a];
  s += ">> / (";
  bool first = true;
  for (auto& r : H.relations()) {
    s += (first ? "" : ", ") + H.render(r);
    first = false;
  }
  return s + ") + (weight > " + std::to_string(H.weight_cap()) + ")";
}

Json hull_json(const PresentedAlgebra& H, Int p) {
  Json rel = Json::array();
  for (auto& r : H.relations()) rel.push_back(H.render(r));
  return {{"generators", H.generator_names()},
          {"relations", rel},
          {"weight_cap", H.weight_cap()},
          {"weight_dims", H.weight_dims()},
          {"dim", H.dim()},
          {"commutative", H.commutative()},
          {"presentation", presentation(H, p)}};
}

Json word_json(const Word& w) {
  Json out = Json::array();
  for (auto& l : w) out.push_back({l.deg, l.idx});
  return out;
}

Json products_json(const std::map<Word, Vec>& products, int min_arity) {
  Json out = Json::array();
  for (auto& [w, v] : products) {
    if (static_cast<int>(w.size()) < min_arity) continue;
    int deg = 2 - static_cast<int>(w.size());
    for (auto& l : w) deg += l.deg;
    out.push_back({{"arity", w.size()}, {"inputs", word_json(w)}, {"degree", deg}, {"value", sparse_json(v)}});
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- input

LoadedAlgebra load_catalog(const std::string& name, Int p) {
  auto e = catalog(name, p);
  auto A = std::make_shared<AugmentedAlgebra>(e.algebra);
  A->label = name;
  return {name, A, e.group};
}

LoadedAlgebra load_json(const Json& j, std::optional<Int> p, const std::string& name) {
  if (!j.is_object()) throw InputError("input: expected a JSON object");
  const Int fp = field_of<long long>(j, "p");
  if (p && *p != fp) throw InputError("input: --p " + std::to_string(*p) + " disagrees with the file's p = " + std::to_string(fp));
  Field F(fp);
  if (j.contains("elements")) {
    auto el = field_of<std::vector<std::string>>(j, "elements");
    auto mult = field_of<std::vector<std::vector<int>>>(j, "mult");
    FiniteGroupData G = make_group(el, mult);
    auto A = std::make_shared<AugmentedAlgebra>(group_algebra(G, fp));
    A->label = name;
    return {name, A, G};
  }
  auto basis = field_of<std::vector<std::string>>(j, "basis");
  const int n = static_cast<int>(basis.size());
  Vec unit = coeffs(field_of<std::vector<long long>>(j, "unit"));
  Vec aug = coeffs(field_of<std::vector<long long>>(j, "aug"));
  std::vector<Vec> table(static_cast<std::size_t>(n) * n, Vec::Zero(n));
  const Json& t = j.contains("table") ? j.at("table") : Json::array();
  if (!t.is_array()) throw InputError("input: 'table' must be an array");
  for (auto& entry : t) {
    if (!entry.is_array() || entry.size() != 3 || !entry[0].is_number_integer() || !entry[1].is_number_integer() ||
        !entry[2].is_array())
      throw InputError("input: table entries are [i, j, [[k, coeff], ...]]");
    const int a = entry[0].get<int>(), b = entry[1].get<int>();
    if (a < 0 || a >= n || b < 0 || b >= n) throw InputError("input: table index out of range");
    for (auto& term : entry[2]) {
      if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer() || !term[1].is_number_integer())
        throw InputError("input: product terms are [k, coeff]");
      const int k = term[0].get<int>();
      if (k < 0 || k >= n) throw InputError("input: product index out of range");
      Int& slot = table[static_cast<std::size_t>(a) * n + b](k);
      slot = F.reduce(slot + F.reduce(term[1].get<long long>()));
    }
  }
  auto A = std::make_shared<AugmentedAlgebra>(AugmentedAlgebra::from_table(F, basis, unit, aug, table));
  A->label = name;
  return {name, A, std::nullopt};
}

LoadedAlgebra load_file(const std::string& path, std::optional<Int> p) {
  std::ifstream in(path);
  if (!in) throw InputError("input: cannot open '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("input: malformed JSON: ") + e.what());
  }
  return load_json(j, p, path);
}

// ---------------------------------------------------------------- pieces

Json sparse_json(const Vec& v) {
  Json out = Json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k)
    if (v(k) != 0) out.push_back({k, v(k)});
  return out;
}

Json matrix_json(const Mat& M) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < M.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < M.cols(); ++c) row.push_back(M(r, c));
    out.push_back(row);
  }
  return out;
}

Json identity_json(const IdentityReport& r) {
  long long checked = 0, failures = 0;
  int through = 0;
  for (auto& w : r.weights) {
    checked += w.checked;
    failures += w.failures;
    through = std::max(through, w.weight);
  }
  Json out = {{"ok", r.ok()}, {"through_weight", through}, {"checked", checked}, {"failures", failures}};
  if (!r.first_failure.empty()) out["first_failure"] = r.first_failure;
  return out;
}

// ---------------------------------------------------------------- commands

Json ext_report(const LoadedAlgebra& L, int D, std::uint64_t seed) {
  const AugmentedAlgebra& A = *L.algebra;
  const Field& F = A.field();
  if (D == 0) D = default_degree_cap(A);
  if (D < 1) throw InputError("ext: --max-degree must be >= 1");
  auto E = ext_algebra(A, D, seed);
  Json products = Json::array();
  std::vector<Mat> decomposable(D + 1);
  for (int n = 0; n <= D; ++n) decomposable[n] = Mat::Zero(E.dims[n], 0);
  for (int a = 1; a <= D; ++a)
    for (int b = 1; a + b <= D; ++b)
      for (int x = 0; x < E.dims[a]; ++x)
        for (int y = 0; y < E.dims[b]; ++y) {
          Vec v = E.product(a, Vec::Unit(E.dims[a], x), b, Vec::Unit(E.dims[b], y));
          if ((v.array() == 0).all()) continue;
          products.push_back({{"a", a}, {"x", x}, {"b", b}, {"y", y}, {"value", sparse_json(v)}});
          Mat& Dn = decomposable[a + b];
          Dn.conservativeResize(Eigen::NoChange, Dn.cols() + 1);
          Dn.col(Dn.cols() - 1) = v;
        }
  Json gens = Json::array();
  for (int n = 1; n <= D; ++n) gens.push_back(E.dims[n] - rank(F, decomposable[n]));
  return {{"command", "ext"},
          {"algebra", L.name},
          {"p", F.p()},
          {"dim", A.dim()},
          {"max_degree", D},
          {"seed", seed},
          {"dims", E.dims},
          {"generators_per_degree", gens},
          {"cup_products", products}};
}

Json minimal_model_report(const LoadedAlgebra& L, Caps caps, std::uint64_t seed, bool& gates_ok) {
  const AugmentedAlgebra& A = *L.algebra;
  Caps c = resolve_caps(A, caps);
  auto mm = transfer_algebra(A, c.degree, c.arity, seed);
  auto gates = check_transfer(mm, c.arity, std::min(c.arity, 4));
  gates_ok = gates.ok();
  const AInfAlgebra& H = *mm.model;
  auto products = nonzero_products(H, c.arity);
  const bool trivial = is_trivial(H, c.arity);

  // f on degree-1 inputs, arity 2..3.
  Json fcomp = Json::array();
  for (int n = 2; n <= std::min(c.arity, 3); ++n) {
    std::vector<int> degs(n, 1), idx(n, 0);
    if (H.dim(1) == 0) break;
    for (;;) {
      Vec v = mm.f.f_basis(degs, idx);
      if (v.size() != 0 && !(v.array() == 0).all()) {
        Json in = Json::array();
        for (int k : idx) in.push_back({1, k});
        fcomp.push_back({{"arity", n}, {"inputs", in}, {"value", sparse_json(v)}});
      }
      int k = n - 1;
      while (k >= 0 && ++idx[k] == H.dim(1)) idx[k--] = 0;
      if (k < 0) break;
    }
  }
  std::vector<int> hd;
  for (int n = H.lo(); n <= H.hi(); ++n) hd.push_back(H.dim(n));
  Json out = {{"command", "minimal-model"},
              {"algebra", L.name},
              {"p", A.field().p()},
              {"caps", caps_json(c)},
              {"seed", seed},
              {"ext_dims", hd},
              {"trivial", trivial}};
  if (trivial) out["message"] = "trivial through arity " + std::to_string(c.arity);
  out["products"] = products_json(products, 2);
  out["higher_products"] = products_json(products, 3).size();
  out["f_components"] = fcomp;
  out["gates"] = {{"structure", identity_json(gates.structure)},
                  {"f", identity_json(gates.f_check)},
                  {"g", identity_json(gates.g_check)},
                  {"f1_is_i", gates.f1_is_i},
                  {"g1_is_p", gates.g1_is_p},
                  {"g_after_f_is_identity", gates.g_after_f_is_identity},
                  {"m2_is_cup", gates.m2_is_cup},
                  {"ok", gates.ok()}};
  return out;
}

Json hull_report(const LoadedAlgebra& L, Caps caps, std::uint64_t seed) {
  const AugmentedAlgebra& A = *L.algebra;
  Caps c = resolve_caps(A, caps);
  auto mm = transfer_algebra(A, c.degree, std::max(c.arity, c.weight), seed);
  auto H = classical_hull(dual_bar(mm.model, c.weight));
  return {{"command", "hull"},
          {"algebra", L.name},
          {"p", A.field().p()},
          {"caps", caps_json(c)},
          {"seed", seed},
          {"hull", hull_json(H, A.field().p())}};
}

Json exterior_hull_report(int d, Int p, int W) {
  if (W == 0) W = 4;
  if (W < 1) throw InputError("hull: --weight must be >= 1");
  auto E = std::make_shared<const AInfAlgebra>(exterior_algebra(d, p, std::max(d, 2)));
  auto B = dual_bar(E, W);
  auto H = classical_hull(B);
  return {{"command", "hull"},
          {"algebra", "exterior:" + std::to_string(d)},
          {"p", p},
          {"weight", W},
          {"quadratic_part_alternating", quadratic_part_is_alternating(B)},
          {"hull", hull_json(H, p)}};
}

Json verify_report(const ReconstructionReport& r, const AugmentedAlgebra& A) {
  const auto& H = *r.hull;
  Json rho = Json::array();
  for (Eigen::Index k = 0; k < r.rho.matrix.cols(); ++k)
    rho.push_back({{"element", A.names()[k]}, {"image", H.render(H.from_normal(r.rho.matrix.col(k)))}});
  Json out = {{"command", "verify"},
              {"algebra", r.algebra},
              {"p", r.p},
              {"seed", r.seed},
              {"caps", caps_json(r.caps)},
              {"retract_fingerprint", r.retract_fingerprint},
              {"ext_dims", r.ext_dims},
              {"hull", hull_json(H, r.p)},
              {"rho", rho},
              {"verdict",
               {{"unit", r.verdict.unit},
                {"multiplicative", r.verdict.multiplicative},
                {"dims_equal", r.verdict.dims_equal},
                {"bijective", r.verdict.bijective}}},
              {"isomorphism", r.isomorphism()},
              {"transfer_gates", r.transfer_ok},
              {"algebra_commutative", r.algebra_commutative},
              {"hull_commutative", r.hull_commutative}};
  if (!r.diagnostic.empty()) out["diagnostic"] = r.diagnostic;
  return out;
}

Json compare_report(const TwoModelReport& r, Int p) {
  Json hpsi = Json::array();
  for (auto& M : r.h_psi) hpsi.push_back(matrix_json(M));
  return {{"command", "compare-models"},
          {"algebra", r.algebra},
          {"p", p},
          {"depth", r.depth},
          {"transfer_degree_cap", r.hi},
          {"e_dims", r.e_dims},
          {"h_c", r.h_c},
          {"h_e", r.h_e},
          {"segal",
           {{"psi_chain_map", r.segal.psi_chain},
            {"psi_multiplicative", r.segal.psi_multiplicative},
            {"phi_chain_map", r.segal.phi_chain},
            {"phi_psi_identity", r.segal.phi_psi_identity},
            {"h_psi_bijective", r.segal.h_psi_bijective}}},
          {"compatible_retract", r.compatible},
          {"h_psi", hpsi},
          {"m_c", identity_json(r.m_c)},
          {"m_e", identity_json(r.m_e)},
          {"psi_morphism", identity_json(r.psi_morphism)},
          {"upsilon_morphism", identity_json(r.upsilon_morphism)},
          {"upsilon1_is_h_psi", r.upsilon1_is_h_psi},
          {"upsilon_isomorphism", r.upsilon_iso},
          {"hull_c", r.hull_c},
          {"hull_e", r.hull_e},
          {"higher_products_c", products_json(r.products_c, 3)},
          {"higher_products_e", products_json(r.products_e, 3)},
          {"ok", r.ok()}};
}

Json restrict_report(const FunctorialityReport& r, const std::string& group) {
  const auto& hG = *r.G.hull;
  const auto& hK = *r.K.hull;
  const Field& F = hG.field();
  Json images = Json::array();
  for (int a = 0; a < hK.generators(); ++a) {
    Vec x = hK.to_normal(hK.reduce(hK.generator(a)));
    images.push_back({{"generator", hK.generator_names()[a]},
                      {"image", hG.render(hG.from_normal(F.mul(r.hull_map.matrix, x)))}});
  }
  Json out = {{"command", "restrict"},
              {"group", group},
              {"subgroup", r.label},
              {"p", r.p},
              {"dims", {hG.dim(), hK.dim()}},
              {"weight", r.weight},
              {"seeds", {r.G.seed, r.K.seed}},
              {"reconstruction", {{"G", r.G.isomorphism()}, {"K", r.K.isomorphism()}}},
              {"restriction",
               {{"chain_map", r.restriction.chain_map},
                {"multiplicative", r.restriction.multiplicative},
                {"degree1_rank", rank(F, r.restriction.blocks.at(0))}}},
              {"eta",
               {{"morphism", identity_json(r.eta_morphism)},
                {"eta1", matrix_json(r.eta.linear(1))},
                {"eta1_functorial", r.eta1_functorial}}},
              {"hull_map",
               {{"relations_preserved", r.relations_preserved},
                {"unit", r.hull_map_report.unit},
                {"multiplicative", r.hull_map_report.multiplicative},
                {"generators", images}}},
              {"square",
               {{"k_commutative", r.K.algebra_commutative},
                {"exact", r.exact},
                {"conjugator", r.conjugator ? Json(r.conjugator_text) : Json(nullptr)}}},
              {"ok", r.ok()}};
  if (!r.diagnostic.empty()) out["diagnostic"] = r.diagnostic;
  return out;
}

Json fuzz_report(const FuzzReport& r, std::uint64_t seed, int count, int N) {
  Json cases = Json::array();
  for (auto& c : r.cases)
    cases.push_back({{"seed", c.seed},
                     {"p", c.p},
                     {"v_dims", c.vdims},
                     {"dims", c.dims},
                     {"h_dims", c.hdims},
                     {"dga", c.dga_ok},
                     {"retract", c.retract_ok},
                     {"transfer", c.transfer.ok()}});
  return {{"command", "fuzz"}, {"seed", seed},           {"count", count},
          {"arity", N},        {"violations", r.violations()}, {"cases", cases}};
}

}  // namespace ainf::cli
