#include "prosody/lexicon.hpp"

#include <algorithm>
#include <set>

#include "prosody/error.hpp"

namespace prosody::lexicon {

namespace {

std::vector<std::string> build_alphabet() {
  std::vector<std::string> out = {"a", "i", "u", "e", "o", "N", "Q"};
  const std::string vowels = "aiueo";
  // Plain CV rows; irregular Hepburn/Kunrei spellings are added below.
  for (const char* onset : {"k", "s", "t", "n", "h", "m", "r", "g", "z", "d", "b", "p", "w", "y", "f", "v"}) {
    for (char v : vowels) out.push_back(std::string(onset) + v);
  }
  for (const char* extra : {"shi", "chi", "tsu", "ji", "tsa", "tsi", "tse", "tso", "she", "che", "je"}) {
    out.push_back(extra);
  }
  // Palatalized moras (Hepburn and Kunrei spellings).
  for (const char* onset : {"ky", "sh", "ch", "ny", "hy", "my", "ry", "gy", "j", "by", "py", "sy", "ty", "zy", "dy"}) {
    for (const char* v : {"a", "u", "o"}) out.push_back(std::string(onset) + v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_vowel(char c) { return c == 'a' || c == 'i' || c == 'u' || c == 'e' || c == 'o'; }

// Vowel that ends a mora, or 0 for N/Q.
char nucleus_vowel(std::string_view mora) {
  if (mora.empty() || mora == "N" || mora == "Q") return 0;
  char last = mora.back();
  return is_vowel(last) ? last : 0;
}

}  // namespace

const std::vector<std::string>& mora_alphabet() {
  static const std::vector<std::string> alphabet = build_alphabet();
  return alphabet;
}

bool is_mora_token(std::string_view token) {
  const auto& alphabet = mora_alphabet();
  return std::binary_search(alphabet.begin(), alphabet.end(), token);
}

std::vector<Mora> classify_moras(const std::vector<std::string>& tokens) {
  std::vector<Mora> out;
  out.reserve(tokens.size());
  for (const auto& token : tokens) {
    if (!is_mora_token(token)) {
      throw Error(ErrorKind::UnknownMoraToken, "unknown mora token '" + token + "'");
    }
    MoraKind kind = MoraKind::regular;
    if (token == "N") {
      kind = MoraKind::moraic_nasal;
    } else if (token == "Q") {
      kind = MoraKind::geminate;
    } else if (token.size() == 1 && !out.empty() && nucleus_vowel(out.back().text) == token[0]) {
      kind = MoraKind::long_vowel_second_half;
    }
    out.push_back(Mora{token, kind});
  }
  return out;
}

std::vector<Mora> parse_moras(std::string_view dotted) {
  std::vector<std::string> tokens;
  std::size_t start = 0;
  while (true) {
    std::size_t dot = dotted.find('.', start);
    std::string_view piece = dotted.substr(start, dot == std::string_view::npos ? dotted.npos : dot - start);
    if (piece.empty()) {
      throw Error(ErrorKind::UnknownMoraToken, "empty mora token in '" + std::string(dotted) + "'");
    }
    tokens.emplace_back(piece);
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return classify_moras(tokens);
}

std::string join_moras(const std::vector<Mora>& moras, std::string_view separator) {
  std::string out;
  for (std::size_t i = 0; i < moras.size(); ++i) {
    if (i) out += separator;
    out += moras[i].text;
  }
  return out;
}

PWordLex make_word(std::string surface, std::vector<Mora> moras, int accent_nucleus) {
  if (moras.empty()) throw Error(ErrorKind::MalformedLeaf, "word '" + surface + "' has no moras");
  if (accent_nucleus < 0 || accent_nucleus > static_cast<int>(moras.size())) {
    throw Error(ErrorKind::MalformedLeaf, "accent nucleus " + std::to_string(accent_nucleus) +
                                              " outside word '" + surface + "' of " +
                                              std::to_string(moras.size()) + " moras");
  }
  return PWordLex{std::move(surface), std::move(moras), accent_nucleus};
}

AccentClass accent_class(const PWordLex& word) {
  return word.accent_nucleus >= 1 ? AccentClass::A : AccentClass::U;
}

bool first_syllable_heavy(const PWordLex& word) {
  return word.moras.size() >= 2 && word.moras[1].kind != MoraKind::regular;
}

}  // namespace prosody::lexicon
