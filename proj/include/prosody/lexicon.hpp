#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace prosody::lexicon {

enum class MoraKind { regular, moraic_nasal, geminate, long_vowel_second_half };

struct Mora {
  std::string text;
  MoraKind kind = MoraKind::regular;

  friend bool operator==(const Mora&, const Mora&) = default;
};

// One bunsetsu-level phonological word: content word fused with its particles.
// accent_nucleus is 1-based; 0 marks an unaccented word.
struct PWordLex {
  std::string surface;
  std::vector<Mora> moras;
  int accent_nucleus = 0;

  friend bool operator==(const PWordLex&, const PWordLex&) = default;
};

enum class AccentClass { A, U };

/// True if `token` is in the mora alphabet (romaji CV moras plus N and Q).
bool is_mora_token(std::string_view token);

/// The full mora alphabet in a stable order.
const std::vector<std::string>& mora_alphabet();

/// Splits a dotted mora string (`ko.o.e.N.de`) and classifies each mora.
/// Throws Error(UnknownMoraToken) on tokens outside the alphabet.
std::vector<Mora> parse_moras(std::string_view dotted);

/// Classifies a token sequence already split into moras.
std::vector<Mora> classify_moras(const std::vector<std::string>& tokens);

std::string join_moras(const std::vector<Mora>& moras, std::string_view separator = ".");

/// Builds a validated word; throws Error(MalformedLeaf) when the nucleus lies
/// outside the mora sequence or the sequence is empty.
PWordLex make_word(std::string surface, std::vector<Mora> moras, int accent_nucleus);

AccentClass accent_class(const PWordLex& word);

inline bool is_accented(const PWordLex& word) { return accent_class(word) == AccentClass::A; }

// Second mora is N, Q, or a long-vowel continuation.
bool first_syllable_heavy(const PWordLex& word);

}  // namespace prosody::lexicon
