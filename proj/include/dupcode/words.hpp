#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dupcode {

using Symbol = std::uint16_t;

inline constexpr std::uint32_t kMaxAlphabet = 1u << 16;

// Immutable word over Z_q. Lengths are unconstrained: channel outputs are
// longer than the code length n.
class Word {
 public:
  Word() = default;
  Word(std::uint32_t q, std::vector<Symbol> symbols);

  // q <= 10: contiguous digit string; q > 10: comma-separated integers.
  static Word from_text(std::uint32_t q, std::string_view text);
  std::string to_text() const;

  std::uint32_t q() const { return q_; }
  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  const std::vector<Symbol>& symbols() const { return symbols_; }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  std::uint32_t q_ = 2;
  std::vector<Symbol> symbols_;
};

// Decomposition 0^{r_0} a_1 0^{r_1} ... a_w 0^{r_w}: w nonzero symbols
// delimiting w+1 (possibly empty) runs of zeros.
struct RunProfile {
  std::uint32_t q = 2;
  std::vector<std::uint32_t> zero_runs;  // size w + 1
  std::vector<Symbol> nonzeros;          // size w, values in [1, q)

  std::size_t weight() const { return nonzeros.size(); }
  std::size_t length() const;

  friend bool operator==(const RunProfile&, const RunProfile&) = default;
};

std::size_t weight(const Word& x);

RunProfile run_decomposition(const Word& x);
Word assemble(const RunProfile& p);

// The k-lagged modular difference x_i = xt_i - xt_{i-k} (xt_i = 0 for
// i <= 0), a bijection on Z_q^n. It turns tandem duplications of length k
// into insertions of 0^k blocks; its inverse (a k-lagged prefix sum) maps
// zero-insertion codes back to duplication-correcting codes.
Word to_insertion_domain(const Word& xt, std::uint32_t k);
Word to_duplication_domain(const Word& x, std::uint32_t k);

}  // namespace dupcode
