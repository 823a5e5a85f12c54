#pragma once

#include <cstdint>
#include <vector>

#include "dupcode/words.hpp"

namespace dupcode {

enum class EditKind { Duplication, ZeroInsertion, ZeroDeletion };

// position is a 1-based start of the copied substring for Duplication, and
// a run index in [0, w] for the zero-block edits. Run indexing deduplicates
// events: every symbol position inside one run yields the same output.
struct EditEvent {
  EditKind kind;
  std::uint64_t position = 0;
  std::uint32_t k = 1;

  friend bool operator==(const EditEvent&, const EditEvent&) = default;
};

struct ChannelTrace {
  Word input;
  std::vector<EditEvent> events;
  Word output;
};

// Copy of xt[start .. start+k-1] (1-based) inserted right after position
// start+k-1.
Word duplicate(const Word& xt, std::uint64_t start, std::uint32_t k);

Word insert_zero_block(const Word& x, std::size_t run_index, std::uint32_t k);
Word delete_zero_block(const Word& x, std::size_t run_index, std::uint32_t k);

Word apply_event(const Word& x, const EditEvent& e);
Word replay(const Word& input, const std::vector<EditEvent>& events);

// Seeded 0^k-indel channel: event kinds are interleaved uniformly at random
// and run indices drawn uniformly among the valid choices at each step.
// Throws DomainError when a deletion step finds no run of length >= k.
ChannelTrace simulate_indel_channel(const Word& x, std::uint32_t t_ins,
                                    std::uint32_t t_del, std::uint32_t k,
                                    std::uint64_t seed);

// Seeded duplication channel: t duplications, start positions uniform over
// the current word.
ChannelTrace simulate_duplication_channel(const Word& xt, std::uint32_t t,
                                          std::uint32_t k, std::uint64_t seed);

}  // namespace dupcode
