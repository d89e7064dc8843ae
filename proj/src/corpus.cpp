#include "gpea/corpus.hpp"

#include <algorithm>

#include "gpea/construct.hpp"

namespace gpea {

FiniteGpea model_d4() {
  SumTable t(4);
  t.fill_zero_sums();
  t.set(1, 2, 3);
  t.set(2, 1, 3);
  return FiniteGpea(t, {"0", "a", "b", "1"});
}

FiniteGpea model_v3() {
  SumTable t(3);
  t.fill_zero_sums();
  return FiniteGpea(t, {"0", "a", "b"});
}

std::vector<NamedModel> constructed_models() {
  std::vector<NamedModel> out;
  for (std::size_t n = 1; n <= 7; ++n) out.push_back({"chain-" + std::to_string(n), chain(n)});
  out.push_back({"d4", model_d4()});
  out.push_back({"v3", model_v3()});
  const std::vector<std::vector<unsigned>> bounds = {{1},       {2},       {1, 1},          {1, 2},
                                                     {2, 2},    {1, 1, 1}, {1, 1, 2},       {2, 3},
                                                     {1, 1, 1, 1}, {1, 2, 3}, {3, 5}};
  for (const auto& b : bounds) {
    std::string id = "cone";
    for (unsigned x : b) id += "-" + std::to_string(x);
    out.push_back({id, cone_interval(b.size(), b)});
  }
  const FiniteGpea e2 = chain(2), e3 = chain(3), d4 = model_d4(), v3 = model_v3();
  out.push_back({"sum-e2-v3", direct_sum(e2, v3).sum});
  out.push_back({"sum-d4-v3", direct_sum(d4, v3).sum});
  out.push_back({"sum-c3-c3", direct_sum(e3, e3).sum});
  out.push_back({"sum-v3-v3", direct_sum(v3, v3).sum});
  out.push_back({"sum-e2-e3", direct_sum(e2, e3).sum});
  return out;
}

std::vector<NamedModel> corpus(std::size_t max_order) {
  std::vector<NamedModel> out;
  const std::size_t cap = std::max(max_order, kDefaultEnumerationCap);
  for (std::size_t n = 1; n <= max_order; ++n) {
    const auto models = enumerate_gpeas(n, cap);
    for (std::size_t k = 0; k < models.size(); ++k) {
      out.push_back({"enum-" + std::to_string(n) + "-" + std::to_string(k + 1), models[k]});
    }
  }
  for (auto& m : constructed_models()) out.push_back(std::move(m));
  return out;
}

}  // namespace gpea
