#pragma once

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "casimir/reflection.hpp"
#include "casimir/scenario.hpp"

namespace casimir::testing {

inline ResponseModel random_lorentz_drude(std::mt19937_64& rng, double lo = 0.05, double hi = 5.0) {
  std::uniform_real_distribution<double> p(lo, hi);
  return ResponseModel::lorentz_drude(p(rng), p(rng), p(rng), p(rng));
}

inline MirrorStack random_stack(std::mt19937_64& rng, int max_layers = 4) {
  std::uniform_int_distribution<int> count(0, max_layers);
  std::uniform_real_distribution<double> log_w(-2.0, 1.0);
  MirrorStack stack;
  const int n = count(rng);
  for (int k = 0; k < n; ++k) stack.layers.push_back({random_lorentz_drude(rng), std::pow(10.0, log_w(rng))});
  stack.substrate = random_lorentz_drude(rng);
  return stack;
}

inline Scenario random_scenario(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> small(0, 4);
  Scenario s;
  const int count = 1 + small(rng);
  std::vector<std::string> ids;
  for (int i = 0; i < count; ++i) {
    const std::string id = "m" + std::to_string(i) + (i % 2 ? "_x" : "");
    ids.push_back(id);
    const int kind = small(rng);
    if (kind == 0) s.materials[id] = ResponseModel::perfect_electric();
    else if (kind == 1) s.materials[id] = ResponseModel::vacuum();
    else s.materials[id] = ResponseModel::lorentz_drude(5 * u(rng), 5 * u(rng), 5 * u(rng), u(rng));
  }
  std::uniform_int_distribution<std::size_t> pick(0, ids.size() - 1);
  for (MirrorSpec* m : {&s.mirror1, &s.mirror2}) {
    const int layers = small(rng);
    for (int k = 0; k < layers; ++k) m->layers.push_back({ids[pick(rng)], 1e-3 + 100 * u(rng)});
    m->substrate = ids[pick(rng)];
  }
  if (u(rng) < 0.5) {
    s.materials["liquid"] = ResponseModel::lorentz_drude(u(rng), 0.5 + u(rng));
    s.gap = "liquid";
  }
  if (u(rng) < 0.3) {
    s.temperatures = {u(rng), 0.0, 3 * u(rng)};
    s.temperature = s.temperatures.front();
  } else {
    s.temperature = u(rng) < 0.5 ? 0.0 : u(rng);
  }
  if (u(rng) < 0.8) {
    const double lo = 1e-3 + u(rng);
    s.sweep = DistanceGrid{lo, lo * (1 + 100 * u(rng)), 1 + small(rng) * 10,
                           u(rng) < 0.5 ? GridScale::Log : GridScale::Lin};
  }
  return s;
}

// A few random byte edits, deletions, insertions and duplications.
inline std::string mutate(std::string text, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> byte(0, 255), ops(1, 8);
  const int n = ops(rng);
  for (int k = 0; k < n && !text.empty(); ++k) {
    std::uniform_int_distribution<std::size_t> pos(0, text.size() - 1);
    switch (byte(rng) % 4) {
      case 0: text[pos(rng)] = static_cast<char>(byte(rng)); break;
      case 1: text.erase(pos(rng), 1 + byte(rng) % 8); break;
      case 2: text.insert(pos(rng), 1, "=[]# \n.-e0123456789"[byte(rng) % 19]); break;
      default: {
        const std::size_t p = pos(rng);
        text.insert(p, text.substr(pos(rng), 1 + byte(rng) % 16));
      }
    }
  }
  return text;
}

}  // namespace casimir::testing
