#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace positroid {

// Subset of [n] as a bitmask: element i (1-based) is bit i-1. n <= 32.
using Subset = std::uint32_t;

inline constexpr int kMaxN = 32;

Subset subset_of(std::initializer_list<int> elements);
Subset subset_of(const std::vector<int>& elements);
std::vector<int> elements(Subset s);
int size_of(Subset s);
inline bool contains(Subset s, int i) { return (s >> (i - 1)) & 1u; }
inline Subset with(Subset s, int i) { return s | (Subset{1} << (i - 1)); }
inline Subset without(Subset s, int i) { return s & ~(Subset{1} << (i - 1)); }
Subset full_set(int n);

// All k-subsets of [n] in lexicographic order of their sorted element lists.
std::vector<Subset> k_subsets(int n, int k);

// Position of s in k_subsets(n, |s|).
std::size_t lex_rank(Subset s, int n);

// "1,2,5"
std::string subset_label(Subset s);
// "125" (only meaningful for n <= 9), used in text output
std::string subset_word(Subset s);
Subset parse_subset_label(std::string_view text);

// Lexicographic comparison of the sorted element lists.
bool lex_less(Subset a, Subset b);

}  // namespace positroid
