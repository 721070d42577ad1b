#include "prosody/tree.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <utility>

#include "prosody/error.hpp"

namespace prosody::tree {

namespace {

constexpr std::array<std::pair<Category, std::string_view>, 11> kCategoryNames = {{
    {Category::IP, "IP"},
    {Category::CP, "CP"},
    {Category::NP, "NP"},
    {Category::PP, "PP"},
    {Category::VP, "VP"},
    {Category::ADVP, "ADVP"},
    {Category::N, "N"},
    {Category::P, "P"},
    {Category::V, "V"},
    {Category::ADV, "ADV"},
    {Category::PU, "PU"},
}};

class TreeReader {
public:
  explicit TreeReader(std::string_view text) : text_(text) {}

  bool at_end() {
    skip_blank();
    return pos_ >= text_.size();
  }

  SyntacticTree read_tree() {
    skip_blank();
    if (pos_ >= text_.size()) throw Error(ErrorKind::EmptyTree, "no tree in input", here());
    if (text_[pos_] != '(') {
      throw Error(ErrorKind::UnbalancedBrackets, "expected '(' at start of tree", here());
    }
    return SyntacticTree{read_node()};
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t line_start_ = 0;

  Location here() const { return Location{line_, pos_ - line_start_ + 1}; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      line_start_ = pos_ + 1;
    }
    ++pos_;
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  static bool is_atom_char(char c) {
    return c != '(' && c != ')' && c != ';' && !std::isspace(static_cast<unsigned char>(c));
  }

  std::string_view read_atom() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_atom_char(text_[pos_])) advance();
    return text_.substr(start, pos_ - start);
  }

  Node read_node() {
    Location open = here();
    advance();  // '('
    skip_blank();
    if (pos_ >= text_.size()) throw Error(ErrorKind::UnbalancedBrackets, "unterminated '('", open);
    if (text_[pos_] == ')') throw Error(ErrorKind::EmptyTree, "empty constituent '()'", open);
    if (text_[pos_] == '(') throw Error(ErrorKind::UnknownCategory, "constituent without a tag", here());

    Location tag_at = here();
    std::string_view tag = read_atom();
    auto category = category_from_string(tag);
    if (!category) throw Error(ErrorKind::UnknownCategory, "unknown category '" + std::string(tag) + "'", tag_at);

    std::vector<Node> children;
    while (true) {
      skip_blank();
      if (pos_ >= text_.size()) throw Error(ErrorKind::UnbalancedBrackets, "unterminated '('", open);
      char c = text_[pos_];
      if (c == ')') {
        advance();
        break;
      }
      if (c == '(') {
        children.push_back(read_node());
      } else {
        Location leaf_at = here();
        children.push_back(Node::leaf(read_leaf(read_atom(), leaf_at)));
      }
    }
    if (children.empty()) {
      throw Error(ErrorKind::EmptyTree, "constituent '" + std::string(tag) + "' has no children", open);
    }
    return Node::internal(*category, std::move(children));
  }

  static lexicon::PWordLex read_leaf(std::string_view atom, Location at) {
    auto bar1 = atom.find('|');
    auto bar2 = bar1 == std::string_view::npos ? bar1 : atom.find('|', bar1 + 1);
    if (bar2 == std::string_view::npos || atom.find('|', bar2 + 1) != std::string_view::npos) {
      throw Error(ErrorKind::MalformedLeaf, "leaf '" + std::string(atom) + "' is not surface|moras|accent", at);
    }
    std::string_view surface = atom.substr(0, bar1);
    std::string_view moras = atom.substr(bar1 + 1, bar2 - bar1 - 1);
    std::string_view accent = atom.substr(bar2 + 1);
    if (surface.empty()) throw Error(ErrorKind::MalformedLeaf, "leaf with empty surface", at);

    int nucleus = -1;
    auto [ptr, ec] = std::from_chars(accent.data(), accent.data() + accent.size(), nucleus);
    if (accent.empty() || ec != std::errc{} || ptr != accent.data() + accent.size() || nucleus < 0) {
      throw Error(ErrorKind::MalformedLeaf, "bad accent '" + std::string(accent) + "' in leaf '" + std::string(atom) + "'", at);
    }
    try {
      return lexicon::make_word(std::string(surface), lexicon::parse_moras(moras), nucleus);
    } catch (const Error& e) {
      // Mora and nucleus problems are leaf syntax errors at this layer.
      throw Error(ErrorKind::MalformedLeaf, std::string(e.what()) + " in leaf '" + std::string(atom) + "'", at);
    }
  }
};

void serialize_node(const Node& n, std::string& out) {
  if (n.is_leaf()) {
    const auto& w = *n.word;
    out += w.surface;
    out += '|';
    out += lexicon::join_moras(w.moras);
    out += '|';
    out += std::to_string(w.accent_nucleus);
    return;
  }
  out += '(';
  out += to_string(n.category);
  for (const auto& child : n.children) {
    out += ' ';
    serialize_node(child, out);
  }
  out += ')';
}

void collect_words(const Node& n, std::vector<lexicon::PWordLex>& out) {
  if (n.is_leaf()) {
    out.push_back(*n.word);
    return;
  }
  for (const auto& child : n.children) collect_words(child, out);
}

}  // namespace

std::string_view to_string(Category c) {
  for (const auto& [cat, name] : kCategoryNames) {
    if (cat == c) return name;
  }
  return "?";
}

std::optional<Category> category_from_string(std::string_view tag) {
  for (const auto& [cat, name] : kCategoryNames) {
    if (name == tag) return cat;
  }
  return std::nullopt;
}

SyntacticTree parse_tree(std::string_view text) {
  TreeReader reader(text);
  SyntacticTree t = reader.read_tree();
  if (!reader.at_end()) {
    throw Error(ErrorKind::UnbalancedBrackets, "trailing input after tree");
  }
  return t;
}

std::vector<SyntacticTree> parse_trees(std::string_view text) {
  TreeReader reader(text);
  std::vector<SyntacticTree> out;
  while (!reader.at_end()) out.push_back(reader.read_tree());
  if (out.empty()) throw Error(ErrorKind::EmptyTree, "no tree in input");
  return out;
}

std::string serialize(const SyntacticTree& tree) {
  std::string out;
  serialize_node(tree.root, out);
  return out;
}

std::vector<lexicon::PWordLex> yield_pwords(const SyntacticTree& tree) {
  std::vector<lexicon::PWordLex> out;
  collect_words(tree.root, out);
  return out;
}

namespace {

// Lexical head leaf index of every node, plus for each leaf the list of its
// ancestors' heads from the bottom up.
std::optional<std::size_t> resolve(const Node& n, Category parent_cat, std::size_t& next_leaf,
                                   std::vector<std::optional<std::size_t>>& path,
                                   std::vector<std::vector<std::optional<std::size_t>>>& leaf_paths) {
  if (n.is_leaf()) {
    std::size_t index = next_leaf++;
    leaf_paths.push_back(path);
    // A leaf directly under PU is punctuation and never heads anything.
    if (parent_cat == Category::PU) return std::nullopt;
    return index;
  }
  // Heads are filled in after children are visited; remember where this node sits on the path.
  std::size_t first_leaf = next_leaf;
  path.push_back(std::nullopt);
  std::size_t slot = path.size() - 1;
  std::optional<std::size_t> head;
  for (const auto& child : n.children) {
    auto child_head = resolve(child, n.category, next_leaf, path, leaf_paths);
    if (child_head && child.category != Category::PU) head = child_head;  // rightmost non-PU wins
  }
  path.pop_back();
  if (n.category == Category::PU) return std::nullopt;
  // Patch the slot in every leaf path collected under this node.
  for (std::size_t leaf = first_leaf; leaf < next_leaf; ++leaf) leaf_paths[leaf][slot] = head;
  if (!head) {
    throw Error(ErrorKind::HeadResolutionFailure,
                "constituent '" + std::string(to_string(n.category)) + "' has no non-punctuation head");
  }
  return head;
}

}  // namespace

std::vector<DependencyDistance> dependency_distances(const SyntacticTree& tree) {
  std::size_t next_leaf = 0;
  std::vector<std::optional<std::size_t>> path;
  std::vector<std::vector<std::optional<std::size_t>>> leaf_paths;
  resolve(tree.root, Category::IP, next_leaf, path, leaf_paths);

  std::vector<DependencyDistance> out;
  out.reserve(leaf_paths.size());
  for (std::size_t leaf = 0; leaf < leaf_paths.size(); ++leaf) {
    const auto& ancestors = leaf_paths[leaf];
    std::optional<std::size_t> head;
    // Innermost ancestor first.
    for (auto it = ancestors.rbegin(); it != ancestors.rend(); ++it) {
      if (*it && **it != leaf) {
        head = *it;
        break;
      }
    }
    if (!head) {
      out.push_back(std::nullopt);
      continue;
    }
    if (*head < leaf) {
      throw Error(ErrorKind::HeadResolutionFailure,
                  "word " + std::to_string(leaf + 1) + " resolves to an earlier head (not head-final)");
    }
    out.push_back(std::min<int>(static_cast<int>(*head - leaf), kMaxDependencyDistance));
  }
  std::size_t heads = 0;
  for (const auto& d : out) heads += d.has_value() ? 0 : 1;
  if (heads != 1) {
    throw Error(ErrorKind::HeadResolutionFailure, "sentence has " + std::to_string(heads) + " unattached words");
  }
  return out;
}

}  // namespace prosody::tree
