#pragma once
// JSON reports behind the command-line tool.  Every builder is a pure
// function of its inputs; nothing time- or thread-dependent is recorded.

#include "ainf/changegroup.hpp"
#include "ainf/fuzz.hpp"
#include "ainf/twomodels.hpp"
#include "json.hpp"

#include <optional>

namespace ainf::cli {

using Json = nlohmann::ordered_json;

struct LoadedAlgebra {
  std::string name;
  std::shared_ptr<const AugmentedAlgebra> algebra;
  std::optional<FiniteGroupData> group;
};

LoadedAlgebra load_catalog(const std::string& name, Int p);
// Algebra format {"p", "basis", "unit", "aug", "table": [[i, j, [[k, c], ..]], ..]}
// or group format {"p", "elements", "mult"}.  `p`, when given, must agree
// with the file.
LoadedAlgebra load_json(const Json& j, std::optional<Int> p, const std::string& name = "input");
LoadedAlgebra load_file(const std::string& path, std::optional<Int> p);

Json sparse_json(const Vec& v);
Json matrix_json(const Mat& M);
Json identity_json(const IdentityReport& r);

Json ext_report(const LoadedAlgebra& A, int D, std::uint64_t seed);
Json minimal_model_report(const LoadedAlgebra& A, Caps caps, std::uint64_t seed, bool& gates_ok);
Json hull_report(const LoadedAlgebra& A, Caps caps, std::uint64_t seed);
// Hull of the exterior algebra on d generators with trivial higher products.
Json exterior_hull_report(int d, Int p, int W);
Json verify_report(const ReconstructionReport& r, const AugmentedAlgebra& A);
Json compare_report(const TwoModelReport& r, Int p);
Json restrict_report(const FunctorialityReport& r, const std::string& group);
Json fuzz_report(const FuzzReport& r, std::uint64_t seed, int count, int N);

}  // namespace ainf::cli
