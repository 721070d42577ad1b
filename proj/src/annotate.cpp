#include "prosody/annotate.hpp"

#include <cctype>

#include "prosody/error.hpp"

namespace prosody::annotate {

using spmh::NodeKind;
using spmh::PNode;

namespace {

bool lowering_marked(const lexicon::PWordLex& w) {
  return w.moras.size() >= 2 && w.accent_nucleus != 1 && !lexicon::first_syllable_heavy(w);
}

void emit_node(const PNode& n, std::string& out) {
  switch (n.kind) {
    case NodeKind::clause:
      out += '{';
      for (const auto& child : n.children) emit_node(child, out);
      out += ".}";
      return;
    case NodeKind::phrase:
      out += '[';
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        const auto& child = n.children[i];
        if (i && child.is_word()) out += "  ";
        emit_node(child, out);
      }
      out += ']';
      return;
    case NodeKind::word:
      out += render_word(n.word->lex);
      return;
  }
}

class ProposedReader {
public:
  explicit ProposedReader(std::string_view text) : text_(text) {}

  spmh::ProsodicTree read() {
    skip_space();
    expect('{', "expected '{' opening the clause");
    std::vector<PNode> kids;
    while (true) {
      skip_space();
      if (pos_ >= text_.size()) throw error(ErrorKind::UnbalancedBrackets, "missing '}'");
      char c = text_[pos_];
      if (c == '[') {
        kids.push_back(read_phrase());
      } else if (c == '.') {
        ++pos_;
        skip_space();
        if (pos_ >= text_.size()) throw error(ErrorKind::UnbalancedBrackets, "missing '}'");
        if (text_[pos_] != '}') throw error(ErrorKind::StrayToken, "'.' must directly precede '}'");
      } else if (c == '}') {
        ++pos_;
        break;
      } else if (c == ']') {
        throw error(ErrorKind::UnbalancedBrackets, "unmatched ']'");
      } else {
        throw error(ErrorKind::StrayToken, "word outside any PPhrase");
      }
    }
    if (kids.empty()) throw error(ErrorKind::StrayToken, "clause without phrases");
    skip_space();
    if (pos_ < text_.size()) {
      throw error(text_[pos_] == '}' || text_[pos_] == ']' ? ErrorKind::UnbalancedBrackets : ErrorKind::StrayToken,
                  "trailing input after '}'");
    }
    return spmh::ProsodicTree{PNode::clause(std::move(kids))};
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;

  Error error(ErrorKind kind, const std::string& what) const {
    return Error(kind, what + " at offset " + std::to_string(pos_), Location{1, pos_ + 1});
  }

  static bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

  std::size_t skip_space() {
    std::size_t n = 0;
    while (pos_ < text_.size() && is_space(text_[pos_])) {
      ++pos_;
      ++n;
    }
    return n;
  }

  void expect(char c, const char* what) {
    if (pos_ >= text_.size() || text_[pos_] != c) {
      throw error(c == '{' ? ErrorKind::StrayToken : ErrorKind::UnbalancedBrackets, what);
    }
    ++pos_;
  }

  PNode read_phrase() {
    ++pos_;  // '['
    std::vector<PNode> kids;
    bool has_words = false;
    bool has_phrases = false;
    std::vector<std::string> moras;
    int nucleus = 0;
    auto flush_word = [&] {
      if (moras.empty()) return;
      std::vector<lexicon::Mora> parsed;
      try {
        parsed = lexicon::classify_moras(moras);
      } catch (const Error& e) {
        throw error(ErrorKind::StrayToken, e.what());
      }
      std::string surface;
      for (const auto& m : moras) surface += m;
      kids.push_back(PNode::leaf(spmh::PWordLeaf{lexicon::make_word(surface, std::move(parsed), nucleus), std::nullopt, false}));
      moras.clear();
      nucleus = 0;
      has_words = true;
    };
    while (true) {
      std::size_t gap = skip_space();
      if (gap >= 2) flush_word();
      if (pos_ >= text_.size()) throw error(ErrorKind::UnbalancedBrackets, "missing ']'");
      char c = text_[pos_];
      if (c == ']') {
        ++pos_;
        break;
      }
      if (c == '}') throw error(ErrorKind::UnbalancedBrackets, "'}' while a '[' is open");
      if (c == '[') {
        flush_word();
        kids.push_back(read_phrase());
        has_phrases = true;
        continue;
      }
      bool accent = false;
      if (c == '\\') {
        accent = true;
        ++pos_;
      }
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) throw error(ErrorKind::StrayToken, std::string("unexpected '") + text_[pos_] + "'");
      if (accent) {
        if (nucleus != 0) throw error(ErrorKind::StrayToken, "second accent mark in one word");
        nucleus = static_cast<int>(moras.size()) + 1;
      }
      moras.emplace_back(text_.substr(start, pos_ - start));
    }
    flush_word();
    if (kids.empty()) throw error(ErrorKind::StrayToken, "empty PPhrase");
    if (has_words && has_phrases) throw error(ErrorKind::StrayToken, "PPhrase mixes words and phrases");
    return PNode::phrase(std::move(kids));
  }
};

bool is_vowel(char c) { return c == 'a' || c == 'i' || c == 'u' || c == 'e' || c == 'o'; }

// Greedy romaji -> mora segmentation over a run of letters.
std::vector<std::pair<std::size_t, std::string>> segment(const std::string& letters) {
  std::vector<std::pair<std::size_t, std::string>> out;  // (start offset, mora)
  std::size_t i = 0;
  while (i < letters.size()) {
    char c = letters[i];
    char next = i + 1 < letters.size() ? letters[i + 1] : '\0';
    if (c == 'N' || (c == 'n' && !is_vowel(next) && next != 'y')) {
      out.emplace_back(i, "N");
      ++i;
      continue;
    }
    if (c == 'Q' || (!is_vowel(c) && c == next)) {
      out.emplace_back(i, "Q");
      ++i;
      continue;
    }
    bool matched = false;
    for (std::size_t len = 3; len >= 1 && !matched; --len) {
      if (i + len > letters.size()) continue;
      std::string cand = letters.substr(i, len);
      if (lexicon::is_mora_token(cand)) {
        out.emplace_back(i, cand);
        i += len;
        matched = true;
      }
    }
    if (!matched) {
      out.emplace_back(i, std::string(1, c));
      ++i;
    }
  }
  return out;
}

bool is_bracket(const std::string& tok) { return tok == "{" || tok == "}" || tok == "[" || tok == "]"; }

}  // namespace

std::string_view to_string(Format f) {
  switch (f) {
    case Format::baseline1: return "baseline1";
    case Format::baseline2: return "baseline2";
    case Format::proposed: return "proposed";
  }
  return "?";
}

std::optional<Format> format_from_string(std::string_view name) {
  for (Format f : {Format::baseline1, Format::baseline2, Format::proposed}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

std::string render_word(const lexicon::PWordLex& word) {
  std::string out;
  for (std::size_t i = 0; i < word.moras.size(); ++i) {
    if (i) out += ' ';
    if (static_cast<int>(i) + 1 == word.accent_nucleus) out += '\\';
    out += word.moras[i].text;
  }
  return out;
}

AnnotatedString emit_baseline1(const std::vector<lexicon::PWordLex>& words) {
  std::string out;
  for (const auto& w : words) {
    out += render_word(w);
    out += ' ';
  }
  out += '.';
  return {Format::baseline1, out};
}

AnnotatedString emit_baseline2(const tree::SyntacticTree& tree) {
  auto words = tree::yield_pwords(tree);
  auto distances = tree::dependency_distances(tree);
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const auto& w = words[i];
    for (std::size_t m = 0; m < w.moras.size(); ++m) {
      if (m == 1 && lowering_marked(w)) out += "^ ";
      if (static_cast<int>(m) + 1 == w.accent_nucleus) out += '\\';
      out += w.moras[m].text;
      out += ' ';
    }
    if (i + 1 < words.size() && distances[i]) out += "#" + std::to_string(*distances[i]) + " ";
  }
  out += '.';
  return {Format::baseline2, out};
}

AnnotatedString emit_proposed(const spmh::ProsodicTree& ptree) {
  std::string out;
  emit_node(ptree.root, out);
  return {Format::proposed, out};
}

spmh::ProsodicTree parse_proposed(std::string_view text) { return ProposedReader(text).read(); }

std::string normalize(std::string_view text, bool keep_accents) {
  std::vector<std::string> tokens;
  std::string letters;
  std::vector<std::size_t> accents;  // offsets into `letters`
  auto flush = [&] {
    if (letters.empty()) {
      accents.clear();
      return;
    }
    for (const auto& [start, mora] : segment(letters)) {
      bool marked = false;
      for (auto a : accents) marked = marked || (a >= start && a < start + mora.size());
      tokens.push_back((marked && keep_accents ? "\\" : "") + mora);
    }
    letters.clear();
    accents.clear();
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (std::isalpha(static_cast<unsigned char>(c))) {
      letters += (c == 'N' || c == 'Q') ? c : static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      continue;
    }
    if (c == '\\') {
      accents.push_back(letters.size());
      continue;
    }
    flush();
    if (c == '#') {
      std::size_t j = i + 1;
      while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
      std::size_t start = j;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      tokens.push_back("#" + std::string(text.substr(start, j - start)));
      i = j - 1;
    } else {
      tokens.emplace_back(1, c);
    }
  }
  flush();
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i && !is_bracket(tokens[i]) && !is_bracket(tokens[i - 1])) out += ' ';
    out += tokens[i];
  }
  return out;
}

std::vector<int> distance_markers(std::string_view text) {
  std::vector<int> out;
  std::string norm = normalize(text);
  for (std::size_t i = 0; i < norm.size(); ++i) {
    if (norm[i] != '#') continue;
    int value = 0;
    std::size_t j = i + 1;
    while (j < norm.size() && std::isdigit(static_cast<unsigned char>(norm[j]))) value = value * 10 + (norm[j++] - '0');
    out.push_back(value);
  }
  return out;
}

std::vector<int> bracket_counts_at_gaps(std::string_view text) {
  std::vector<int> out;
  bool seen_word = false;
  bool in_word = false;
  int pending = 0;
  std::size_t spaces = 0;
  for (char c : text) {
    bool letter = std::isalpha(static_cast<unsigned char>(c)) || c == '\\';
    if (letter) {
      if (in_word && spaces >= 2) in_word = false;  // two spaces separate words inside a phrase
      if (!in_word) {
        if (seen_word) out.push_back(pending);
        seen_word = true;
        in_word = true;
        pending = 0;
      }
      spaces = 0;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++spaces;
      continue;
    }
    spaces = 0;
    in_word = false;
    if (c == '[') ++pending;
  }
  return out;
}

}  // namespace prosody::annotate
