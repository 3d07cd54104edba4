#include <algorithm>
#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>

#include "ado/ado.hpp"
#include "ado/error.hpp"

namespace ado {

namespace {

constexpr std::array<char, 4> kMagic{'A', 'D', 'O', '1'};
constexpr std::uint32_t kNone = 0xFFFFFFFFu;

class Writer {
public:
  explicit Writer(std::ostream& out) : out_(out) {}

  void u8(std::uint8_t v) { out_.put(static_cast<char>(v)); }
  void u32(std::uint32_t v) {
    char b[4];
    for (int i = 0; i < 4; ++i) {
      b[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
    }
    out_.write(b, 4);
  }
  void u64(std::uint64_t v) {
    char b[8];
    for (int i = 0; i < 8; ++i) {
      b[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
    }
    out_.write(b, 8);
  }
  void f64(double v) { u64(std::bit_cast<std::uint64_t>(v)); }

private:
  std::ostream& out_;
};

class Reader {
public:
  explicit Reader(std::istream& in) : in_(in) {}

  void bytes(char* dst, std::size_t count) {
    in_.read(dst, static_cast<std::streamsize>(count));
    if (static_cast<std::size_t>(in_.gcount()) != count) {
      fail(ErrorKind::format, "oracle file truncated");
    }
  }
  std::uint8_t u8() {
    char b;
    bytes(&b, 1);
    return static_cast<std::uint8_t>(b);
  }
  std::uint32_t u32() {
    unsigned char b[4];
    bytes(reinterpret_cast<char*>(b), 4);
    return std::uint32_t(b[0]) | std::uint32_t(b[1]) << 8 | std::uint32_t(b[2]) << 16 |
           std::uint32_t(b[3]) << 24;
  }
  std::uint64_t u64() {
    const std::uint64_t lo = u32();
    const std::uint64_t hi = u32();
    return lo | hi << 32;
  }
  double f64() { return std::bit_cast<double>(u64()); }

private:
  std::istream& in_;
};

}  // namespace

// Trailer after the near tables:
//   f64 alpha, f64 c_N, f64 c_B, u64 seed,
//   f64 declared mult, f64 declared add, f64 c_R, f64 rad argument, u32 rad bound, f64 certified gain,
//   u64 max bunch, u64 max cluster, u64 hitting rounds,
//   u8 has_degree_info [u32 k, f64 eps, f64 c, f64 degree limit, u64 max degree, u8 conforming]
void serialize_ado(std::ostream& out, const AdoStructure& ado) {
  Writer w(out);
  out.write(kMagic.data(), kMagic.size());
  const std::size_t n = ado.n_;
  w.u32(static_cast<std::uint32_t>(n));
  w.u32(static_cast<std::uint32_t>(ado.a_set_.size()));
  for (std::size_t v = 0; v < n; ++v) {
    const Vertex p = ado.pivot(static_cast<Vertex>(v));
    w.u32(p == kNoVertex ? kNone : p);
  }
  for (const Distance d : ado.a_dist_) {
    w.u32(d);
  }
  for (std::size_t v = 0; v < n; ++v) {
    const auto table = ado.near_table(static_cast<Vertex>(v));
    w.u32(static_cast<std::uint32_t>(table.size()));
    for (const auto& e : table) {
      w.u32(e.vertex);
      w.u32(e.distance);
    }
  }
  const auto& p = ado.params_;
  w.f64(p.alpha);
  w.f64(p.c_n);
  w.f64(p.c_b);
  w.u64(p.seed);
  w.f64(ado.declared_.mult);
  w.f64(ado.declared_.add);
  w.f64(ado.c_r_);
  w.f64(ado.rad_argument_);
  w.u32(ado.rad_bound_);
  w.f64(ado.certified_gain_);
  w.u64(ado.max_bunch_);
  w.u64(ado.max_cluster_);
  w.u64(ado.hitting_rounds_);
  w.u8(ado.degree_info_ ? 1 : 0);
  if (const auto& info = ado.degree_info_) {
    w.u32(info->k);
    w.f64(info->eps);
    w.f64(info->c);
    w.f64(info->degree_limit);
    w.u64(info->max_degree);
    w.u8(info->conforming ? 1 : 0);
  }
  if (!out) {
    fail(ErrorKind::io, "failed writing oracle");
  }
}

AdoStructure deserialize_ado(std::istream& in) {
  Reader r(in);
  std::array<char, 4> magic{};
  r.bytes(magic.data(), magic.size());
  if (magic != kMagic) {
    fail(ErrorKind::format, "not an oracle file (bad magic or unsupported version)");
  }
  AdoStructure ado;
  const std::size_t n = r.u32();
  const std::size_t a_size = r.u32();
  if (a_size > n) {
    fail(ErrorKind::format, "center count exceeds vertex count");
  }
  ado.n_ = n;
  // Grow while reading so a forged header cannot force a huge allocation.
  std::vector<Vertex> pivot;
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex p = pivot.emplace_back(r.u32());
    if (p != kNone && p >= n) {
      fail(ErrorKind::format, "pivot id out of range");
    }
  }
  ado.a_slot_.assign(n, kNoVertex);
  for (Vertex v = 0; v < n; ++v) {
    if (pivot[v] == v) {
      ado.a_slot_[v] = static_cast<Vertex>(ado.a_set_.size());
      ado.a_set_.push_back(v);
    }
  }
  if (ado.a_set_.size() != a_size) {
    fail(ErrorKind::format, "pivot array inconsistent with center count");
  }
  ado.pivot_slot_.assign(n, kNoVertex);
  for (Vertex v = 0; v < n; ++v) {
    if (pivot[v] != kNone) {
      ado.pivot_slot_[v] = ado.a_slot_[pivot[v]];
      if (ado.pivot_slot_[v] == kNoVertex) {
        fail(ErrorKind::format, "pivot is not a center");
      }
    }
  }
  for (std::size_t i = 0; i < n * a_size; ++i) {
    ado.a_dist_.push_back(r.u32());
  }
  ado.pivot_dist_.assign(n, kUnreachable);
  for (Vertex v = 0; v < n; ++v) {
    if (ado.pivot_slot_[v] != kNoVertex) {
      ado.pivot_dist_[v] = ado.a_dist_[std::size_t(v) * a_size + ado.pivot_slot_[v]];
    }
  }
  std::vector<std::vector<VertexDistance>> tables(n);
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t count = r.u32();
    if (count >= n) {
      fail(ErrorKind::format, "near table larger than the graph");
    }
    auto& table = tables[v];
    for (std::size_t i = 0; i < count; ++i) {
      const Vertex u = r.u32();
      const Distance d = r.u32();
      if (u >= n || (!table.empty() && table.back().vertex >= u)) {
        fail(ErrorKind::format, "near table entries unsorted or out of range");
      }
      table.push_back({u, d});
    }
  }
  ado.set_near_tables(std::move(tables));

  auto& p = ado.params_;
  p.alpha = r.f64();
  p.c_n = r.f64();
  p.c_b = r.f64();
  p.seed = r.u64();
  ado.declared_.mult = r.f64();
  ado.declared_.add = r.f64();
  ado.c_r_ = r.f64();
  ado.rad_argument_ = r.f64();
  ado.rad_bound_ = r.u32();
  ado.certified_gain_ = r.f64();
  ado.max_bunch_ = r.u64();
  ado.max_cluster_ = r.u64();
  ado.hitting_rounds_ = r.u64();
  if (r.u8() != 0) {
    DegreeBuildInfo info;
    info.k = r.u32();
    info.eps = r.f64();
    info.c = r.f64();
    info.degree_limit = r.f64();
    info.max_degree = r.u64();
    info.conforming = r.u8() != 0;
    ado.degree_info_ = info;
  }
  if (in.peek() != std::char_traits<char>::eof()) {
    fail(ErrorKind::format, "trailing bytes after oracle data");
  }
  return ado;
}

void save_ado(const std::string& path, const AdoStructure& ado) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    fail(ErrorKind::io, "cannot write " + path);
  }
  serialize_ado(out, ado);
}

AdoStructure load_ado(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    fail(ErrorKind::io, "cannot open " + path);
  }
  return deserialize_ado(in);
}

}  // namespace ado
