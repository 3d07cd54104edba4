#include "ado/gadgets.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>

#include "ado/error.hpp"

namespace ado {

bool SetIntersectionInstance::contains(std::size_t set, std::uint32_t element) const {
  const auto& s = sets.at(set);
  return std::binary_search(s.begin(), s.end(), element);
}

void SetIntersectionInstance::validate() const {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const auto& s = sets[i];
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (s[j] >= universe) {
        fail(ErrorKind::input, "set " + std::to_string(i) + " has element " +
                                   std::to_string(s[j]) + " outside [0, X)");
      }
      if (j > 0 && s[j - 1] >= s[j]) {
        fail(ErrorKind::input, "set " + std::to_string(i) + " not sorted/deduplicated");
      }
    }
  }
}

const char* to_string(GadgetKind kind) {
  switch (kind) {
    case GadgetKind::butterfly: return "butterfly";
    case GadgetKind::gx: return "gx";
    case GadgetKind::merged: return "merged";
    case GadgetKind::split: return "split";
  }
  return "?";
}

namespace {

// b^k, or nullopt past `limit`.
std::optional<std::size_t> checked_power(std::size_t b, unsigned k, std::size_t limit) {
  std::size_t value = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (b != 0 && value > limit / b) {
      return std::nullopt;
    }
    value *= b;
  }
  return value;
}

constexpr std::size_t kMaxLayerSize = std::size_t(1) << 31;

}  // namespace

std::optional<std::size_t> integer_root(std::size_t value, unsigned k) {
  if (k == 0) {
    return std::nullopt;
  }
  const auto guess = static_cast<std::size_t>(
      std::llround(std::pow(static_cast<double>(value), 1.0 / static_cast<double>(k))));
  for (std::size_t b = guess > 0 ? guess - 1 : 0; b <= guess + 1; ++b) {
    if (checked_power(b, k, kMaxLayerSize) == value) {
      return b;
    }
  }
  return std::nullopt;
}

std::size_t padded_base(std::size_t num_sets, unsigned k) {
  if (k == 0) {
    fail(ErrorKind::input, "k must be >= 1");
  }
  for (std::size_t b = 2;; ++b) {
    const auto power = checked_power(b, k, kMaxLayerSize);
    if (!power) {
      fail(ErrorKind::input, "layer size for N=" + std::to_string(num_sets) + ", k=" +
                                 std::to_string(k) + " is too large");
    }
    if (*power >= num_sets) {
      return b;
    }
  }
}

std::vector<std::uint32_t> digit_label(std::size_t index, std::size_t b, unsigned k) {
  std::vector<std::uint32_t> digits(k);
  for (unsigned i = k; i-- > 0;) {
    digits[i] = static_cast<std::uint32_t>(index % b);
    index /= b;
  }
  return digits;
}

namespace {

struct LayeredSpec {
  std::size_t layer_size = 0;  // N = b^k
  std::size_t b = 0;
  unsigned k = 0;
  std::size_t copies = 1;  // disjoint inner-layer copies (one per element)
  std::size_t split = 1;   // edges per boundary path
  std::size_t visible_sets = 0;
  std::function<bool(std::size_t copy, std::size_t index)> keep_left;
  std::function<bool(std::size_t copy, std::size_t index)> keep_right;
};

GadgetGraph build_layered(const LayeredSpec& spec, GadgetKind kind) {
  const std::size_t N = spec.layer_size;
  const unsigned k = spec.k;
  const std::size_t inner_per_copy = (k - 1) * N;
  const std::size_t base_count = 2 * N + spec.copies * inner_per_copy;
  const std::size_t last_base = N + spec.copies * inner_per_copy;
  auto node = [&](std::size_t copy, unsigned layer, std::size_t index) -> std::size_t {
    if (layer == 0) {
      return index;
    }
    if (layer == k) {
      return last_base + index;
    }
    return N + (copy * (k - 1) + layer - 1) * N + index;
  };

  GadgetGraph gadget;
  gadget.kind = kind;
  gadget.k = k;
  gadget.b = spec.b;
  gadget.n_padded = N;
  gadget.t = spec.split;
  gadget.layer_of.assign(base_count, 0);
  const auto t = static_cast<std::uint32_t>(spec.split);
  for (std::size_t copy = 0; copy < spec.copies; ++copy) {
    for (unsigned layer = 1; layer < k; ++layer) {
      for (std::size_t a = 0; a < N; ++a) {
        gadget.layer_of[node(copy, layer, a)] = t - 1 + layer;
      }
    }
  }
  for (std::size_t j = 0; j < N; ++j) {
    gadget.layer_of[last_base + j] = 2 * t + k - 2;
  }

  std::vector<Edge> edges;
  std::size_t next_id = base_count;
  auto add_path = [&](std::size_t from, std::size_t to, std::uint32_t from_pos) {
    // from_pos < position of `to`; interior vertices get consecutive positions
    std::size_t prev = from;
    for (std::size_t s = 1; s < spec.split; ++s) {
      const std::size_t fresh = next_id++;
      gadget.layer_of.push_back(from_pos + static_cast<std::uint32_t>(s));
      edges.emplace_back(static_cast<Vertex>(prev), static_cast<Vertex>(fresh));
      prev = fresh;
    }
    edges.emplace_back(static_cast<Vertex>(prev), static_cast<Vertex>(to));
  };

  for (std::size_t copy = 0; copy < spec.copies; ++copy) {
    for (unsigned layer = 1; layer <= k; ++layer) {
      std::size_t weight = 1;  // digit `layer` has weight b^{k-layer}
      for (unsigned i = layer; i < k; ++i) {
        weight *= spec.b;
      }
      for (std::size_t a = 0; a < N; ++a) {
        if (layer == 1 && !spec.keep_left(copy, a)) {
          continue;
        }
        const std::size_t digit = (a / weight) % spec.b;
        const std::size_t stem = a - digit * weight;
        for (std::size_t value = 0; value < spec.b; ++value) {
          const std::size_t other = stem + value * weight;
          if (layer == k && !spec.keep_right(copy, other)) {
            continue;
          }
          const std::size_t from = node(copy, layer - 1, a);
          const std::size_t to = node(copy, layer, other);
          if (layer == 1 || layer == k) {
            add_path(from, to, gadget.layer_of[from]);
          } else {
            edges.emplace_back(static_cast<Vertex>(from), static_cast<Vertex>(to));
          }
        }
      }
    }
  }
  gadget.graph = Graph::from_edges(next_id, edges);
  for (std::size_t i = 0; i < spec.visible_sets; ++i) {
    gadget.left_rep.push_back(static_cast<Vertex>(i));
    gadget.right_rep.push_back(static_cast<Vertex>(last_base + i));
  }
  return gadget;
}

LayeredSpec instance_spec(const SetIntersectionInstance& inst, unsigned k) {
  inst.validate();
  LayeredSpec spec;
  spec.k = k;
  spec.b = padded_base(inst.num_sets(), k);
  spec.layer_size = *checked_power(spec.b, k, kMaxLayerSize);
  spec.visible_sets = inst.num_sets();
  return spec;
}

}  // namespace

GadgetGraph gen_butterfly(std::size_t num_vertices_per_layer, unsigned k) {
  if (k == 0) {
    fail(ErrorKind::input, "k must be >= 1");
  }
  const auto b = integer_root(num_vertices_per_layer, k);
  if (!b || *b < 2) {
    fail(ErrorKind::input, "N=" + std::to_string(num_vertices_per_layer) +
                               " is not a k-th power b^k with b >= 2 (k=" + std::to_string(k) +
                               "); round N up to " +
                               std::to_string(*checked_power(padded_base(num_vertices_per_layer, k),
                                                             k, kMaxLayerSize)));
  }
  LayeredSpec spec;
  spec.k = k;
  spec.b = *b;
  spec.layer_size = num_vertices_per_layer;
  spec.visible_sets = num_vertices_per_layer;
  spec.keep_left = [](std::size_t, std::size_t) { return true; };
  spec.keep_right = spec.keep_left;
  return build_layered(spec, GadgetKind::butterfly);
}

GadgetGraph gen_gx(const SetIntersectionInstance& inst, unsigned k, std::uint32_t x) {
  if (k == 0) {
    fail(ErrorKind::input, "k must be >= 1");
  }
  if (x >= inst.universe) {
    fail(ErrorKind::input, "element " + std::to_string(x) + " outside the universe");
  }
  LayeredSpec spec = instance_spec(inst, k);
  auto member = [&inst, x](std::size_t, std::size_t i) {
    return i < inst.num_sets() && inst.contains(i, x);
  };
  spec.keep_left = member;
  spec.keep_right = member;
  return build_layered(spec, GadgetKind::gx);
}

namespace {

GadgetGraph merged_impl(const SetIntersectionInstance& inst, unsigned k, std::size_t split,
                        GadgetKind kind) {
  if (k < 2) {
    fail(ErrorKind::input, "merged gadgets need k >= 2");
  }
  LayeredSpec spec = instance_spec(inst, k);
  spec.copies = inst.universe;
  spec.split = split;
  auto member = [&inst](std::size_t copy, std::size_t i) {
    return i < inst.num_sets() && inst.contains(i, static_cast<std::uint32_t>(copy));
  };
  spec.keep_left = member;
  spec.keep_right = member;
  return build_layered(spec, kind);
}

}  // namespace

GadgetGraph gen_merged(const SetIntersectionInstance& inst, unsigned k) {
  return merged_impl(inst, k, 1, GadgetKind::merged);
}

std::size_t split_factor(unsigned k, double eps, double c) {
  if (!(eps > 0.0) || !(c > 0.0) || !std::isfinite(eps) || !std::isfinite(c)) {
    fail(ErrorKind::input, "split needs eps > 0 and c > 0");
  }
  const double raw = (static_cast<double>(k) + c) / (2.0 * eps);
  if (raw > 1e6) {
    fail(ErrorKind::input, "split factor too large");
  }
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(raw - 1e-9)));
}

GadgetGraph gen_split(const SetIntersectionInstance& inst, unsigned k, double eps, double c) {
  return merged_impl(inst, k, split_factor(k, eps, c), GadgetKind::split);
}

SetIntersectionInstance read_instance(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    fail(ErrorKind::format, "instance: missing header `N X`");
  }
  std::istringstream header(line);
  long long num_sets = -1;
  long long universe = -1;
  std::string extra;
  if (!(header >> num_sets >> universe) || (header >> extra) || num_sets < 0 || universe < 0 ||
      universe > 0xFFFFFFFFll) {
    fail(ErrorKind::format, "instance line 1: expected header `N X`");
  }
  SetIntersectionInstance inst;
  inst.universe = static_cast<std::size_t>(universe);
  for (long long i = 0; i < num_sets; ++i) {
    auto& set = inst.sets.emplace_back();
    if (!std::getline(in, line)) {
      continue;  // missing trailing lines are empty sets
    }
    std::istringstream ss(line);
    std::string token;
    while (ss >> token) {
      char* end = nullptr;
      const unsigned long long x = std::strtoull(token.c_str(), &end, 10);
      if (*end != '\0' || token[0] == '-' || x >= inst.universe) {
        fail(ErrorKind::format, "instance line " + std::to_string(i + 2) + ": bad element `" +
                                    token + "`");
      }
      set.push_back(static_cast<std::uint32_t>(x));
    }
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
  }
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) {
      fail(ErrorKind::format, "instance: more set lines than declared");
    }
  }
  return inst;
}

SetIntersectionInstance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    fail(ErrorKind::io, "cannot open " + path);
  }
  return read_instance(in);
}

void write_instance(std::ostream& out, const SetIntersectionInstance& inst) {
  out << inst.num_sets() << ' ' << inst.universe << '\n';
  for (const auto& set : inst.sets) {
    for (std::size_t j = 0; j < set.size(); ++j) {
      out << (j ? " " : "") << set[j];
    }
    out << '\n';
  }
}

void write_instance_file(const std::string& path, const SetIntersectionInstance& inst) {
  std::ofstream out(path);
  if (!out) {
    fail(ErrorKind::io, "cannot write " + path);
  }
  write_instance(out, inst);
}

void write_rep_map(std::ostream& out, const GadgetGraph& gadget) {
  for (std::size_t i = 0; i < gadget.left_rep.size(); ++i) {
    out << i << ' ' << gadget.left_rep[i] << ' ' << gadget.right_rep[i] << '\n';
  }
}

void write_rep_map_file(const std::string& path, const GadgetGraph& gadget) {
  std::ofstream out(path);
  if (!out) {
    fail(ErrorKind::io, "cannot write " + path);
  }
  write_rep_map(out, gadget);
}

}  // namespace ado
