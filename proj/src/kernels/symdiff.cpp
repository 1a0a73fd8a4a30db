#include "stag/kernels/symdiff.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "stag/error.hpp"

namespace stag::kernels {
namespace {

bool cpu_has(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(STAG_HAVE_AVX2_KERNEL)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
      return false;
#endif
    case Isa::Neon:
#if defined(STAG_HAVE_NEON_KERNEL)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa choose() {
  if (const char* forced = std::getenv("STAG_KERNEL")) {
    const std::string want(forced);
    for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon})
      if (want == to_string(isa) && cpu_has(isa)) return isa;
  }
  if (cpu_has(Isa::Avx2)) return Isa::Avx2;
  if (cpu_has(Isa::Neon)) return Isa::Neon;
  return Isa::Scalar;
}

}  // namespace

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
    case Isa::Neon:
      return "neon";
  }
  return "unknown";
}

bool available(Isa isa) { return cpu_has(isa); }

std::vector<Isa> available_isas() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon})
    if (cpu_has(isa)) out.push_back(isa);
  return out;
}

Isa active_isa() {
  static const Isa chosen = choose();
  return chosen;
}

SymdiffRowFn symdiff_row_for(Isa isa) {
  if (!cpu_has(isa))
    throw Error(ErrorKind::InvalidArgument, "kernel " + std::string(to_string(isa)) + " is not available");
  switch (isa) {
#if defined(STAG_HAVE_AVX2_KERNEL)
    case Isa::Avx2:
      return symdiff_row_avx2;
#endif
#if defined(STAG_HAVE_NEON_KERNEL)
    case Isa::Neon:
      return symdiff_row_neon;
#endif
    default:
      return symdiff_row_scalar;
  }
}

void symdiff_row(const std::uint64_t* probe, const std::uint64_t* rows, std::size_t count, std::size_t words,
                 std::uint32_t* out) {
  static const SymdiffRowFn fn = symdiff_row_for(active_isa());
  fn(probe, rows, count, words, out);
}

PackedTrees pack_trees(const std::vector<SpanningTree>& trees, int edge_count) {
  PackedTrees p;
  p.words = std::max<std::size_t>(1, (static_cast<std::size_t>(edge_count) + 63) / 64);
  p.count = trees.size();
  p.data.assign(p.words * p.count, 0);
  for (std::size_t i = 0; i < trees.size(); ++i)
    for (EdgeId e : trees[i].edges())
      p.data[i * p.words + static_cast<std::size_t>(e) / 64] |= std::uint64_t{1} << (static_cast<unsigned>(e) % 64);
  return p;
}

}  // namespace stag::kernels
