#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "prosody/lexicon.hpp"
#include "prosody/spmh.hpp"
#include "prosody/tree.hpp"

namespace prosody::annotate {

enum class Format { baseline1, baseline2, proposed };

std::string_view to_string(Format f);
std::optional<Format> format_from_string(std::string_view name);

struct AnnotatedString {
  Format format = Format::proposed;
  std::string text;

  friend bool operator==(const AnnotatedString&, const AnnotatedString&) = default;
};

/// Word as space-separated moras with `\` glued to the nucleus mora.
std::string render_word(const lexicon::PWordLex& word);

// Phonemes and accents only: `wa ga ... mo ra i ma \shi ta .`
AnnotatedString emit_baseline1(const std::vector<lexicon::PWordLex>& words);

// Adds `^` before the second mora of words showing initial lowering and
// `#k` dependency distances after every non-final word.
AnnotatedString emit_baseline2(const tree::SyntacticTree& tree);

/// `{…}` for the PClause, `[…]` for every PPhrase, `.` before the closing `}`.
/// Words sharing a minimal PPhrase are separated by two spaces.
AnnotatedString emit_proposed(const spmh::ProsodicTree& ptree);

/// Inverse of emit_proposed. Errors: UnbalancedBrackets, StrayToken.
spmh::ProsodicTree parse_proposed(std::string_view text);

/// Canonical tokenization for comparing annotation strings from different
/// sources: mora runs are re-segmented (`\sh it a` -> `\shi ta`, `n` before a
/// consonant -> `N`), `# 6` -> `#6`, one space between non-bracket tokens.
std::string normalize(std::string_view text, bool keep_accents = true);

/// `#k` values in order of appearance.
std::vector<int> distance_markers(std::string_view text);

/// Number of `[` between the end of word `gap` and the start of word `gap+1`
/// in a proposed-format string, one entry per gap.
std::vector<int> bracket_counts_at_gaps(std::string_view proposed_text);

}  // namespace prosody::annotate
