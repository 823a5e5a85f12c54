#pragma once

#include <cstdint>
#include <span>

namespace dupcode {

// C(n, r), clamped at `cap` (returns cap whenever the exact value would be
// >= cap). Overflow-free.
std::uint64_t binomial64(std::uint64_t n, std::uint64_t r,
                         std::uint64_t cap = 1ull << 62);

// Compositions of `total` into `parts` non-negative integers. The iteration
// order is fixed: (total,0,...,0) first, all mass in the last part last.
// unrank_composition produces the element at a given position of that order,
// so parallel workers can start mid-sequence and advance with
// next_composition.
std::uint64_t composition_count(std::uint64_t total, std::uint64_t parts,
                                std::uint64_t cap = 1ull << 62);
void first_composition(std::uint32_t total, std::span<std::uint32_t> out);
bool next_composition(std::span<std::uint32_t> c);
void unrank_composition(std::uint64_t rank, std::uint32_t total,
                        std::span<std::uint32_t> out);

// Fixed-radix odometer; returns false after the last tuple.
bool next_tuple(std::span<std::uint16_t> digits, std::uint32_t radix);

}  // namespace dupcode
