#include "ainf/reconstruct.hpp"

#include <chrono>
#include <cstdio>

namespace ainf {

namespace {

template <typename F>
auto stage(const char* name, F&& f) {
  try {
    return f();
  } catch (const GateFailure& e) {
    throw GateFailure(std::string(name) + ": " + e.what());
  } catch (const InputError& e) {
    throw InputError(std::string(name) + ": " + e.what());
  }
}

}  // namespace

Caps resolve_caps(const AugmentedAlgebra& A, Caps c) {
  const int nu = A.nilpotency_index();
  if (c.degree == 0) c.degree = default_degree_cap(A);
  if (c.arity == 0) c.arity = std::max(nu, 4);
  if (c.weight == 0) c.weight = std::max(nu, 1);
  if (c.degree < 2) throw InputError("degree cap must be >= 2");
  if (c.arity < 2) throw InputError("arity cap must be >= 2");
  if (c.weight < 1) throw InputError("weight cap must be >= 1");
  return c;
}

std::string fingerprint(const HomotopyRetract& r) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto eat = [&h](std::uint64_t x) {
    for (int k = 0; k < 8; ++k) {
      h ^= (x >> (8 * k)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  };
  for (auto* m : {&r.i, &r.p, &r.h})
    for (auto& B : m->blocks) {
      eat(B.rows());
      eat(B.cols());
      for (auto x : B.reshaped()) eat(static_cast<std::uint64_t>(x));
    }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

AlgebraMap rho_u(std::shared_ptr<const AugmentedAlgebra> A, const MinimalModelStructure& mm,
                 std::shared_ptr<const PresentedAlgebra> hull) {
  const Field& F = A->field();
  const int n = A->dim();
  const int g = hull->generators();
  const WordIndex& words = hull->words();
  const int W = hull->weight_cap();
  if (mm.model->dim(1) != g) throw InputError("rho_u: hull and model disagree on H^1");
  if (mm.dga->dim(1) != A->abar_dim()) throw InputError("rho_u: model is not built on C^1 of this algebra");
  // Raw image of each Ā basis element, over all words.
  Mat raw = Mat::Zero(words.size(), n);
  raw(0, 0) = 1;  // ρ(1) = 1
  for (int i = 1; i <= std::min(W, mm.f.cap()); ++i) {
    std::vector<int> degs(i, 1);
    for (int w = words.offset(i); w < words.offset(i) + words.count(i); ++w) {
      Vec c = mm.f.f_basis(degs, words.word(w));
      if (c.size() == 0) continue;
      for (int k = 1; k < n; ++k) raw(w, k) = c(k - 1);
    }
  }
  AlgebraMap phi{view(A), view(hull), Mat(hull->dim(), n)};
  for (int k = 0; k < n; ++k) phi.matrix.col(k) = hull->to_normal(hull->reduce(F.reduced(Vec(raw.col(k)))));
  return phi;
}

ReconstructionReport verify_reconstruction(std::shared_ptr<const AugmentedAlgebra> A, std::uint64_t seed, Caps caps) {
  auto t0 = std::chrono::steady_clock::now();
  ReconstructionReport rep;
  rep.algebra = A->label;
  rep.p = A->field().p();
  rep.seed = seed;
  rep.caps = resolve_caps(*A, caps);
  const Caps& c = rep.caps;
  auto dga = stage("hochschild", [&] { return hochschild_dga(*A, c.degree, true); });
  auto retract = stage("retract", [&] { return cohomology_with_retract(dga.complex(), seed); });
  if (!check_retract(retract).ok()) throw GateFailure("retract: identities fail");
  rep.retract_fingerprint = fingerprint(retract);
  rep.ext_dims = retract.hdims;
  auto mm = stage("transfer", [&] { return minimal_model(dga, retract, std::max(c.arity, c.weight)); });
  rep.model = std::make_shared<const MinimalModelStructure>(mm);
  rep.transfer_ok = stage("transfer gates", [&] { return check_transfer(mm, 4, 4).ok(); });
  for (int W = c.weight;; ++W) {
    auto bar = stage("dual bar", [&] { return dual_bar(mm.model, W); });
    auto hull = stage("hull", [&] { return std::make_shared<const PresentedAlgebra>(classical_hull(bar)); });
    auto rho = stage("rho_u", [&] { return rho_u(A, mm, hull); });
    rep.verdict = verify_algebra_map(rho);
    rep.hull = hull;
    rep.rho = rho;
    if (rep.verdict.isomorphism() || W > c.weight || W + 1 > mm.cap) break;
    rep.diagnostic = "not an isomorphism at weight cap " + std::to_string(W) + "; retried once with " +
                     std::to_string(W + 1);
  }
  rep.hull_dims = rep.hull->weight_dims();
  for (auto& r : rep.hull->relations()) rep.relations.push_back(rep.hull->render(r));
  rep.algebra_commutative = A->commutative();
  rep.hull_commutative = rep.hull->commutative();
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

bool IndependenceReport::all_isomorphic() const {
  for (auto& r : runs)
    if (!r.isomorphism()) return false;
  return !runs.empty();
}

int IndependenceReport::distinct_retracts() const {
  int n = 0;
  for (std::size_t a = 0; a < runs.size(); ++a)
    for (std::size_t b = a + 1; b < runs.size(); ++b) n += runs[a].retract_fingerprint != runs[b].retract_fingerprint;
  return n;
}

IndependenceReport retract_independence(std::shared_ptr<const AugmentedAlgebra> A, const std::vector<std::uint64_t>& seeds,
                                        Caps caps) {
  if (seeds.size() < 2) throw InputError("retract independence needs at least two seeds");
  IndependenceReport rep;
  for (auto s : seeds) rep.runs.push_back(verify_reconstruction(A, s, caps));
  return rep;
}

ProbeReport commutativity_triviality_probe(std::shared_ptr<const AugmentedAlgebra> A, std::uint64_t seed, Caps caps) {
  auto rep = verify_reconstruction(A, seed, caps);
  ProbeReport out;
  out.algebra_commutative = rep.algebra_commutative;
  out.hull_commutative = rep.hull_commutative;
  const Caps c = rep.caps;
  auto mm = minimal_model(hochschild_dga(*A, c.degree, true), c.arity, seed);
  out.arity_checked = c.arity;
  for (auto& [w, v] : nonzero_products(*mm.model, c.arity))
    if (w.size() >= 3 && (out.first_higher_product == 0 || static_cast<int>(w.size()) < out.first_higher_product))
      out.first_higher_product = static_cast<int>(w.size());
  if (!out.agree()) throw GateFailure("probe: commutativity of the algebra and of its hull differ");
  return out;
}

}  // namespace ainf
