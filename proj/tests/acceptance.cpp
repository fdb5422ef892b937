// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "reports.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace ainf;
using namespace ainf::cli;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Instance {
  std::string name;
  Int p;
  std::string label;
};

// trunc_poly(2..4) over F_2 and F_3, then the group algebras.
const std::vector<Instance> kCatalog = {
    {"trunc_poly:2", 2, "F_2[x]/(x^2)"},   {"trunc_poly:3", 2, "F_2[x]/(x^3)"},   {"trunc_poly:4", 2, "F_2[x]/(x^4)"},
    {"trunc_poly:2", 3, "F_3[x]/(x^2)"},   {"trunc_poly:3", 3, "F_3[x]/(x^3)"},   {"trunc_poly:4", 3, "F_3[x]/(x^4)"},
    {"cyclic:2", 2, "F_2[C_2]"},           {"cyclic:4", 2, "F_2[C_4]"},           {"elem_abelian:2", 2, "F_2[C_2xC_2]"},
    {"cyclic:3", 3, "F_3[C_3]"},           {"cyclic:9", 3, "F_3[C_9]"},           {"elem_abelian:2", 3, "F_3[C_3xC_3]"},
    {"heisenberg", 3, "F_3[Heis_27]"},
};

std::shared_ptr<const AugmentedAlgebra> algebra(const Instance& I) {
  return std::make_shared<const AugmentedAlgebra>(catalog(I.name, I.p).algebra);
}

bool zero(const Vec& v) { return v.size() == 0 || (v.array() == 0).all(); }

struct Verdict {
  bool pass = true;
  std::vector<std::string> notes;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("FAILED " + what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

// Reconstruction runs shared by criteria 4-6.
std::map<std::string, ReconstructionReport> g_runs;

const ReconstructionReport& reconstruction(const Instance& I) {
  auto it = g_runs.find(I.label);
  if (it == g_runs.end()) {
    auto r = verify_reconstruction(algebra(I), 0);
    r.algebra = I.label;
    it = g_runs.emplace(I.label, std::move(r)).first;
  }
  return it->second;
}

// 1. Retract laws on the Hochschild complex of every catalog algebra.
Verdict criterion1() {
  Verdict v;
  for (auto& I : kCatalog) {
    auto A = algebra(I);
    auto D = hochschild_dga(*A, default_degree_cap(*A));
    auto t0 = Clock::now();
    auto r = cohomology_with_retract(D.complex(), 0);
    auto rep = check_retract(r);
    const double s = since(t0);
    v.require(rep.ok(), I.label + ": retract identities");
    v.require(s < 1.0, I.label + ": retract took " + std::to_string(s) + " s");
  }
  v.note(std::to_string(kCatalog.size()) + " algebras");
  return v;
}

// 2. Transfer gates at N = 4 and g ∘ f = id.
Verdict criterion2() {
  Verdict v;
  for (auto& I : kCatalog) {
    auto A = algebra(I);
    auto t0 = Clock::now();
    auto mm = transfer_algebra(*A, default_degree_cap(*A), 4);
    auto rep = check_transfer(mm, 4, 4);
    const double s = since(t0);
    v.require(rep.structure.ok() && rep.f_check.ok() && rep.g_check.ok(), I.label + ": validity/morphism checks");
    v.require(rep.f1_is_i && rep.g1_is_p && rep.m2_is_cup, I.label + ": f_1 = i, g_1 = p, m_2 = cup");
    v.require(rep.g_after_f_is_identity, I.label + ": g o f = id");
    const double budget = I.name == "heisenberg" ? 600.0 : 10.0;
    v.require(s < budget, I.label + ": took " + std::to_string(s) + " s");
    v.require(rep.f_check.checked() > 0 && rep.g_check.checked() > 0, I.label + ": morphism checks are not empty");
    // With H^1, H^2 carried (D = 2), every Stasheff identity on carried
    // words lands in degree 3; the m check is then empty by construction.
    const bool m_empty_by_degree = mm.retract->hi() < 3;
    if (m_empty_by_degree)
      v.note(I.label + ": D = 2, m identities all land in degree 3 (none carried); f, g checked");
    else
      v.require(rep.structure.checked() > 0, I.label + ": m check is not empty");
    v.note(I.label + ": identities checked m " + std::to_string(rep.structure.checked()) + ", f " +
           std::to_string(rep.f_check.checked()) + ", g " + std::to_string(rep.g_check.checked()));
  }
  return v;
}

// Planar binary trees with n leaves evaluated on iα: inner nodes carry -h,
// the root carries p.  Enumerated tree by tree, independently of the memoized
// recursion inside the transfer.
Vec tree_oracle(const DgAlgebra& D, const HomotopyRetract& r, int n) {
  const Field& F = D.field();
  const Vec leaf = r.i.at(1).col(0);
  std::function<std::vector<Vec>(int)> inner = [&](int k) -> std::vector<Vec> {
    if (k == 1) return {leaf};
    std::vector<Vec> out;
    for (int s = 1; s < k; ++s)
      for (const Vec& a : inner(s))
        for (const Vec& b : inner(k - s)) out.push_back(F.reduced(Vec(-(r.h.at(2) * D.mul(1, a, 1, b)))));
    return out;
  };
  Vec acc = Vec::Zero(D.dim(2));
  for (int s = 1; s < n; ++s)
    for (const Vec& a : inner(s))
      for (const Vec& b : inner(n - s)) acc += D.mul(1, a, 1, b);
  return F.mul(r.p.at(2), Vec(F.reduced(acc)));
}

// 3. m_k(α, .., α) = 0 for 3 <= k < n and m_n(α, .., α) = c β, c != 0.
Verdict criterion3() {
  Verdict v;
  // c per (p, n), frozen from the tree enumeration with the default retract.
  const std::map<std::pair<Int, int>, Int> frozen = {{{2, 2}, 1}, {{2, 3}, 1}, {{2, 4}, 1},
                                                     {{3, 2}, 1}, {{3, 3}, 1}, {{3, 4}, 1}};
  for (Int p : {2, 3})
    for (int n : {2, 3, 4}) {
      auto A = trunc_poly(n, p);
      auto mm = transfer_algebra(A, default_degree_cap(A), 4);
      const auto& H = *mm.model;
      const std::string tag = "p=" + std::to_string(p) + " n=" + std::to_string(n);
      v.require(H.dim(1) == 1 && H.dim(2) == 1, tag + ": Ext^1, Ext^2 one-dimensional");
      Vec a = Vec::Unit(H.dim(1), 0);
      auto power = [&](int k) {
        std::vector<int> degs(k, 1);
        Args args(k, &a);
        return H.m(degs, args);
      };
      for (int k = 3; k < n; ++k) v.require(zero(power(k)), tag + ": m_" + std::to_string(k) + " vanishes");
      Vec top = power(n);
      v.require(!zero(top), tag + ": m_n nonzero");
      if (n >= 3) {
        Vec oracle = tree_oracle(*mm.dga, *mm.retract, n);
        v.require(top == oracle, tag + ": m_n equals the tree enumeration");
      }
      const Int c = zero(top) ? 0 : top(0);
      v.require(c == frozen.at({p, n}), tag + ": c = " + std::to_string(c));
    }
  return v;
}

// 4. ρ^u is an isomorphism for every catalog algebra.
Verdict criterion4() {
  Verdict v;
  for (auto& I : kCatalog) {
    auto t0 = Clock::now();
    const auto& r = reconstruction(I);
    v.require(r.isomorphism(), I.label + ": isomorphism (" + std::to_string(since(t0)) + " s)");
    v.require(r.transfer_ok, I.label + ": transfer gates");
  }
  return v;
}

// 5. Two seeds give isomorphic hulls; C_4 and C_2 x C_2 are told apart.
Verdict criterion5() {
  Verdict v;
  int differ = 0;
  for (auto& I : kCatalog) {
    const auto& a = reconstruction(I);
    auto b = verify_reconstruction(algebra(I), 1);
    v.require(a.isomorphism() && b.isomorphism(), I.label + ": both seeds reconstruct A");
    v.require(a.hull_dims == b.hull_dims, I.label + ": hull dims agree across seeds");
    if (a.retract_fingerprint != b.retract_fingerprint) ++differ;
  }
  v.note(std::to_string(differ) + "/" + std::to_string(kCatalog.size()) + " with distinct retracts");
  v.require(differ > 0, "some seed pair must give distinct retracts");
  const auto& c4 = reconstruction(kCatalog[7]);
  const auto& v4 = reconstruction(kCatalog[8]);
  v.require(c4.ext_dims.at(0) == 1 && v4.ext_dims.at(0) == 2, "dim H^1: C_4 -> 1, C_2xC_2 -> 2");
  v.require(c4.hull->generators() != v4.hull->generators(), "C_4 and C_2xC_2 hulls differ");
  return v;
}

long long binom(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// 6. Commutativity of the hull matches the algebra; exterior algebras give
// truncated power series with alternating quadratic relations.
Verdict criterion6() {
  Verdict v;
  for (auto& I : kCatalog) {
    const auto& r = reconstruction(I);
    v.require(r.algebra_commutative == r.hull_commutative, I.label + ": commutativity agrees");
  }
  v.require(!reconstruction(kCatalog.back()).hull_commutative, "Heisenberg hull is noncommutative");
  for (Int p : {2, 3})
    for (int d = 1; d <= 3; ++d) {
      auto E = std::make_shared<const AInfAlgebra>(exterior_algebra(d, p, std::max(d, 2)));
      auto B = dual_bar(E, 4);
      auto hull = classical_hull(B);
      auto dims = hull.weight_dims();
      const std::string tag = "exterior d=" + std::to_string(d) + " p=" + std::to_string(p);
      for (int w = 0; w <= 4; ++w) v.require(dims.at(w) == binom(d + w - 1, w), tag + " weight " + std::to_string(w));
      v.require(hull.commutative(), tag + ": commutative");
      v.require(quadratic_part_is_alternating(B), tag + ": alternating relations");
    }
  return v;
}

// 7. Hochschild vs endomorphism-dga models for dim A <= 4, depth <= 4.
Verdict criterion7() {
  Verdict v;
  int done = 0, total = 0;
  for (auto& I : kCatalog) {
    auto A = algebra(I);
    if (A->dim() > 4) continue;
    for (int depth = 2; depth <= 4; ++depth) {
      ++total;
      const std::string tag = I.label + " depth " + std::to_string(depth);
      auto t0 = Clock::now();
      try {
        auto r = upsilon(A, depth, 0, 4);
        const double s = since(t0);
        v.require(r.segal.phi_psi_identity, tag + ": Phi o Psi = id");
        v.require(r.segal.psi_chain && r.segal.psi_multiplicative, tag + ": Psi multiplicative chain map");
        v.require(r.h_c == r.h_e, tag + ": dim H(E) = dim H(C)");
        v.require(r.upsilon_morphism.ok() && r.upsilon1_is_h_psi, tag + ": Upsilon morphism, Upsilon_1 = H(Psi)");
        v.require(r.ok(), tag + ": all two-model checks");
        v.require(s < 300.0, tag + ": took " + std::to_string(s) + " s");
        ++done;
      } catch (const InputError& e) {
        v.require(false, tag + ": " + e.what());
      }
    }
  }
  v.note(std::to_string(done) + "/" + std::to_string(total) + " instances run");
  return v;
}

// 8. η and the change-of-group square.
Verdict criterion8() {
  Verdict v;
  const std::vector<std::tuple<std::string, std::string, Int>> pairs = {
      {"cyclic:4", "g^2", 2}, {"elem_abelian:2", "1", 2}, {"heisenberg", "center", 3}};
  for (auto& [g, s, p] : pairs) {
    auto r = diagram_check(parse_inclusion(g, s, p));
    v.require(r.eta_morphism.ok(), r.label + ": eta is an A_inf-morphism");
    v.require(r.eta1_functorial && r.relations_preserved, r.label + ": eta_1 and hull relations");
    v.require(r.exact || r.conjugator.has_value(), r.label + ": square commutes up to a unit");
    v.require(r.ok(), r.label + ": all checks");
    v.note(r.label + " conjugator " + r.conjugator_text);
  }
  return v;
}

// 9. 100 seeded random dg-algebras.
Verdict criterion9() {
  Verdict v;
  auto t0 = Clock::now();
  auto r = fuzz(2024, 100, 4, 4);
  const double s = since(t0);
  v.require(r.cases.size() == 100, "100 cases");
  v.require(r.violations() == 0, std::to_string(r.violations()) + " violations");
  v.require(s < 300.0, "took " + std::to_string(s) + " s");
  long long checked = 0;
  for (auto& c : r.cases) checked += c.transfer.structure.checked() + c.transfer.f_check.checked() + c.transfer.g_check.checked();
  v.note(std::to_string(checked) + " identities checked");
  return v;
}

// 10. Repeated reports are byte-identical.
Verdict criterion10() {
  Verdict v;
  const std::vector<std::pair<std::string, std::function<std::string()>>> commands = {
      {"ext cyclic:4", [] { return ext_report(load_catalog("cyclic:4", 2), 0, 3).dump(2); }},
      {"minimal-model trunc_poly:4 p=3",
       [] {
         bool ok = false;
         return minimal_model_report(load_catalog("trunc_poly:4", 3), {}, 5, ok).dump(2);
       }},
      {"hull cyclic:9", [] { return hull_report(load_catalog("cyclic:9", 3), {}, 2).dump(2); }},
      {"hull --exterior 3", [] { return exterior_hull_report(3, 3, 4).dump(2); }},
      {"verify heisenberg",
       [] {
         auto L = load_catalog("heisenberg", 3);
         auto r = verify_reconstruction(L.algebra, 11);
         r.algebra = L.name;
         return verify_report(r, *L.algebra).dump(2);
       }},
      {"compare-models trunc_poly:3 p=3",
       [] {
         auto L = load_catalog("trunc_poly:3", 3);
         auto r = upsilon(L.algebra, 4, 0, 4);
         r.algebra = L.name;
         return compare_report(r, 3).dump(2);
       }},
      {"restrict cyclic:4 g^2",
       [] { return restrict_report(diagram_check(parse_inclusion("cyclic:4", "g^2", 2), 0, 1), "cyclic:4").dump(2); }},
  };
  for (auto& [name, run] : commands) v.require(run() == run(), name);
  // The thread count must not leak into the output either.
  const std::string f1 = fuzz_report(fuzz(7, 30, 4, 1), 7, 30, 4).dump(2);
  const std::string f4 = fuzz_report(fuzz(7, 30, 4, 4), 7, 30, 4).dump(2);
  v.require(f1 == f4, "fuzz with 1 and 4 threads");
  v.note(std::to_string(commands.size() + 1) + " commands");
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"retract laws", criterion1},         {"transfer gate", criterion2},
      {"known higher product", criterion3}, {"reconstruction", criterion4},
      {"retract independence", criterion5}, {"commutativity and exterior hulls", criterion6},
      {"two-model comparison", criterion7}, {"functoriality", criterion8},
      {"fuzz gate", criterion9},            {"determinism", criterion10},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    auto t0 = Clock::now();
    Verdict v;
    try {
      v = criteria[k].second();
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    if (!v.pass) ++failed;
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.1f", since(t0));
    std::cout << "criterion " << k + 1 << " (" << criteria[k].first << "): " << (v.pass ? "PASS" : "FAIL") << "  ["
              << secs << " s]\n";
    for (auto& n : v.notes) std::cout << "    " << n << "\n";
    std::cout.flush();
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
