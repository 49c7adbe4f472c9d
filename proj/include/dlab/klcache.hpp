#ifndef DLAB_KLCACHE_HPP
#define DLAB_KLCACHE_HPP

#include <string>

#include "dlab/hecke.hpp"

namespace dlab {

// Line-oriented persistent KL table:
//   header  "KLCACHE v1 <descriptor>"
//   records "<y-word>\t<x-word>\t<h text>", one per (y, x) pair.
// Records are written sorted, so save/load/save is byte-stable.

void save_kl_cache(const std::string& path, const KLTable& table);

// Loads records into `table`.  Throws cache_error (with a line number) on a
// malformed file and std::invalid_argument on a descriptor mismatch.  When
// `verify` is set, every reconstructed element is re-checked against the
// defining conditions: bar-invariance and non-top coefficients in vZ[v].
void load_kl_cache(const std::string& path, KLTable& table, bool verify = false);

}  // namespace dlab

#endif
